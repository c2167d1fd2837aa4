#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "symchar/partition.hpp"

namespace symchar {

using Json = nlohmann::ordered_json;

enum class Verdict { Zero, Nonzero };

enum class Rule {
    WeightSet,
    PrimePowerDegree,
    FrobeniusDegree,
    HookChainMissing,
    ProcessVanishing,
    SelfConjOdd,
    SelfConjEvenBigPart,
    GapInterval,
    ExactMN,
};

const char* to_string(Verdict v);
const char* to_string(Rule r);

// A zero/nonzero verdict together with the rule that justifies it and
// enough witness data to re-verify the claim without redoing the search.
struct Certificate {
    Verdict verdict = Verdict::Zero;
    Rule rule = Rule::ExactMN;
    Json witness;
};

Json certificate_json(const Partition& alpha, const Partition& beta,
                      const Certificate& cert,
                      std::optional<bool> verified_by_mn = std::nullopt);

} // namespace symchar
