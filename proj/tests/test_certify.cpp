#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "symchar/certify.hpp"
#include "symchar/engine.hpp"
#include "symchar/padic.hpp"
#include "symchar/selfconj.hpp"

using namespace symchar;

namespace {

// DP over nonnegative combinations of the given generators.
bool brute_force_in_weight_set(long long k, const std::vector<long long>& gens) {
    if (k < 0) return false;
    std::vector<char> reach(static_cast<std::size_t>(k) + 1, 0);
    reach[0] = 1;
    for (long long g : gens)
        for (long long v = g; v <= k; ++v)
            if (reach[static_cast<std::size_t>(v - g)]) reach[static_cast<std::size_t>(v)] = 1;
    return reach[static_cast<std::size_t>(k)] != 0;
}

} // namespace

TEST_CASE("weight set membership") {
    CHECK_FALSE(weight_set_contains(1, 6));
    CHECK(weight_set_contains(5, 6)); // 2 + 3
    CHECK(weight_set_contains(0, 6));
    CHECK(weight_set_contains(0, 1));
    CHECK_FALSE(weight_set_contains(1, 1));
    CHECK(weight_set_contains(Integer("999999999999999999999999"), 6));
}

TEST_CASE("weight set agrees with brute force") {
    for (long long m = 1; m <= 40; ++m) {
        std::vector<long long> gens;
        for (const auto& [prime, exp] : factorize(m)) {
            (void)exp;
            gens.push_back(prime);
        }
        for (long long k = 0; k <= 80; ++k)
            REQUIRE(weight_set_contains(k, m) == brute_force_in_weight_set(k, gens));
    }
    // three-generator modulus
    for (long long k = 0; k <= 200; ++k)
        REQUIRE(weight_set_contains(k, 2 * 3 * 5 * 7) ==
                brute_force_in_weight_set(k, {2, 3, 5, 7}));
}

TEST_CASE("nonzero certificates") {
    auto frob = certify_nonzero(Partition::parse("2,1^6"), Partition::parse("5,3"));
    REQUIRE(frob.has_value());
    CHECK(frob->verdict == Verdict::Nonzero);
    CHECK(frob->rule == Rule::FrobeniusDegree);
    CHECK(mn_value(Partition::parse("2,1^6"), Partition::parse("5,3")) == -1);

    CHECK_FALSE(certify_nonzero(Partition::parse("2,1^5"), Partition::parse("4,2,1"))
                    .has_value());

    auto prime_power =
        certify_nonzero(Partition::parse("2,1^7"), Partition::parse("3,3,3"));
    REQUIRE(prime_power.has_value());
    CHECK(prime_power->rule == Rule::PrimePowerDegree);

    CHECK_THROWS_AS(certify_nonzero(Partition::parse("3"), Partition::parse("2,2")),
                    std::domain_error);
}

TEST_CASE("whenever a nonzero rule fires the degree is outside W(lcm), n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        auto all = partitions_of(n);
        for (const Partition& alpha : all)
            for (const Partition& beta : all) {
                auto cert = certify_nonzero(alpha, beta);
                if (!cert) continue;
                Integer deg = degree(alpha);
                std::vector<long long> gens;
                for (const auto& [prime, exp] : lcm_of_parts(beta).factors) {
                    (void)exp;
                    gens.push_back(prime);
                }
                REQUIRE(deg < Integer(1) << 40);
                CHECK_FALSE(brute_force_in_weight_set(deg.convert_to<long long>(), gens));
            }
    }
}

TEST_CASE("hook chain zero certificates") {
    MemoCache cache;
    auto one = certify_zero_hook_chain(Partition::parse("3,1,1,1,1"),
                                       Partition::parse("3,3,1"));
    REQUIRE(one.has_value());
    CHECK(one->rule == Rule::HookChainMissing);
    CHECK(mn_value(Partition::parse("3,1,1,1,1"), Partition::parse("3,3,1"), cache) == 0);

    CHECK(certify_zero_hook_chain(Partition::parse("2,1,1,1"), Partition::parse("2,2,1"))
              .has_value());
    CHECK(mn_value(Partition::parse("2,1,1,1"), Partition::parse("2,2,1"), cache) == 0);

    CHECK(certify_zero_hook_chain(Partition::parse("3,1^5"), Partition::parse("4,3,1"))
              .has_value());
    CHECK(mn_value(Partition::parse("3,1^5"), Partition::parse("4,3,1"), cache) == 0);

    // shape or class conditions failing
    CHECK_FALSE(certify_zero_hook_chain(Partition::parse("3,2,1"), Partition::parse("3,2,1"))
                    .has_value());
    CHECK_FALSE(certify_zero_hook_chain(Partition::parse("1^4"), Partition::parse("2,1,1"))
                    .has_value());
    CHECK_FALSE(certify_zero_hook_chain(Partition::parse("3,1,1"), Partition::parse("3,1,1"))
                    .has_value()); // n - a < a
    CHECK_FALSE(certify_zero_hook_chain(Partition::parse("3,1,1,1,1"),
                                        Partition::parse("3,2,1,1"))
                    .has_value()); // a chain part below alpha_1
    CHECK_FALSE(certify_zero_hook_chain(Partition::parse("3,1,1,1,1"),
                                        Partition::parse("4,3"))
                    .has_value()); // no unit part
}

TEST_CASE("process vanishing certificates") {
    MemoCache cache;
    auto one_step = certify_zero_process(Partition::parse("4,4,2,2"),
                                      Partition::parse("7,3,2"), 1, 3, cache);
    REQUIRE(one_step.has_value());
    CHECK(one_step->rule == Rule::ProcessVanishing);
    CHECK(one_step->witness["sequence_count"] == 1);
    CHECK(one_step->witness["gamma"] == "3,2");
    CHECK(mn_value(Partition::parse("4,4,2,2"), Partition::parse("7,3,2"), cache) == 0);

    auto two_step = certify_zero_process(Partition::parse("5,5,5,3,2"),
                                      Partition::parse("9,7,3,1"), 2, 3, cache);
    REQUIRE(two_step.has_value());
    CHECK(two_step->witness["gamma"] == "3,1");
    CHECK(mn_value(Partition::parse("5,5,5,3,2"), Partition::parse("9,7,3,1"), cache) == 0);

    // remaining class of size 1 is excluded
    CHECK_FALSE(certify_zero_process(Partition::parse("2,1"), Partition::parse("2,1"),
                                     1, 2, cache)
                    .has_value());

    CHECK_THROWS_AS(certify_zero_process(Partition::parse("2,1"), Partition::parse("2,1"),
                                         2, 2, cache),
                    std::domain_error);
    CHECK_THROWS_AS(certify_zero_process(Partition::parse("2,1"), Partition::parse("2,1"),
                                         1, 4, cache),
                    std::domain_error);
}

TEST_CASE("single-removal family pattern") {
    auto hit = match_single_removal_family(Partition::parse("4,4,2,2"), Partition::parse("7,3,2"));
    REQUIRE(hit.has_value());
    CHECK(hit->a == 4);
    CHECK(hit->c == 1);
    CHECK(hit->l == 2);
    CHECK(hit->k == 0);
    CHECK(hit->p == 3);
    CHECK(hit->gamma == Partition::parse("3,2"));

    CHECK_FALSE(match_single_removal_family(Partition::parse("4,4,2,2"), Partition::parse("7,5"))
                    .has_value()); // (5) is not 3-adic
    CHECK_FALSE(match_single_removal_family(Partition::parse("3,2,1"), Partition::parse("3,2,1"))
                    .has_value());
}

TEST_CASE("double-removal family pattern") {
    auto hit = match_double_removal_family(Partition::parse("5,5,5,3,2"), Partition::parse("9,7,3,1"));
    REQUIRE(hit.has_value());
    CHECK(hit->a == 5);
    CHECK(hit->b == 5);
    CHECK(hit->c == 1);
    CHECK(hit->l == 1);
    CHECK(hit->t == 1);
    CHECK(hit->k == 0);
    CHECK(hit->p == 3);
    CHECK(hit->gamma == Partition::parse("3,1"));

    CHECK_FALSE(match_double_removal_family(Partition::parse("5,5,5,3,2"), Partition::parse("9,7,4"))
                    .has_value()); // (4) is not 3-adic
    CHECK_FALSE(match_double_removal_family(Partition::parse("2,1"), Partition::parse("2,1")).has_value());
}

TEST_CASE("every matched family instance passes the general process gate, n <= 11") {
    MemoCache cache;
    for (int n = 2; n <= 11; ++n) {
        auto all = partitions_of(n);
        for (const Partition& alpha : all)
            for (const Partition& beta : all) {
                if (auto hit = match_single_removal_family(alpha, beta)) {
                    auto cert = certify_zero_process(alpha, beta, 1, hit->p, cache);
                    REQUIRE(cert.has_value());
                    CHECK(mn_value(alpha, beta, cache) == 0);
                }
                if (beta.length() >= 3) {
                    if (auto hit = match_double_removal_family(alpha, beta)) {
                        auto cert = certify_zero_process(alpha, beta, 2, hit->p, cache);
                        REQUIRE(cert.has_value());
                        CHECK(mn_value(alpha, beta, cache) == 0);
                    }
                }
            }
    }
}

TEST_CASE("p-vanishing classes") {
    MemoCache cache;
    CHECK(is_p_vanishing_class(4, 2, Partition::parse("4"), cache));
    CHECK_FALSE(is_p_vanishing_class(4, 2, Partition::parse("1^4"), cache));
    CHECK(is_p_vanishing_class(5, 2, Partition::parse("4,1"), cache));
    CHECK_THROWS_AS(is_p_vanishing_class(4, 2, Partition::parse("3,1,1"), cache),
                    std::domain_error);
}

TEST_CASE("scan: p-adic classes always vanish, exceptions only for p = 2, 3") {
    MemoCache cache;
    for (long long p : {2, 3, 5})
        for (int n = 1; n <= 10; ++n) {
            ScanReport report = scan_p_vanishing(n, p, cache);
            CHECK(report.thm21_violations.empty());
            if (p == 5)
                for (const ScanEntry& entry : report.vanishing)
                    CHECK(entry.p_adic); // conjecture range: no exceptions
        }

    // n = 4, p = 2: the class (4) is 2-adic and 2-vanishing, and (2,1,1) is
    // a genuine non-2-adic 2-vanishing class
    ScanReport report = scan_p_vanishing(4, 2, cache);
    bool four = false, exceptional = false;
    for (const ScanEntry& entry : report.vanishing) {
        if (entry.beta == Partition::parse("4")) four = entry.p_adic;
        if (entry.beta == Partition::parse("2,1,1")) exceptional = !entry.p_adic;
    }
    CHECK(four);
    CHECK(exceptional);

    // report payload carries the exception list
    Json doc = scan_json(report);
    CHECK(doc["thm21_violations"].empty());
    bool seen = false;
    for (const auto& entry : doc["vanishing"])
        if (entry["beta"] == "2,1^2" && entry["p_adic"] == false) seen = true;
    CHECK(seen);
}

TEST_CASE("scan respects sharding") {
    MemoCache cache;
    ScanReport serial = scan_p_vanishing(9, 2, cache);
    ScanReport parallel = scan_p_vanishing(9, 2, cache, 2);
    CHECK(scan_json(serial) == scan_json(parallel));
}

TEST_CASE("certifier chain precedence") {
    MemoCache cache;
    auto gap = certify_chain(Partition::parse("3,2,1"), Partition::parse("4,2"), cache);
    REQUIRE(gap.has_value());
    CHECK(gap->rule == Rule::GapInterval); // before SelfConjEvenBigPart

    auto odd = certify_chain(Partition::parse("2,1"), Partition::parse("2,1"), cache);
    REQUIRE(odd.has_value());
    CHECK(odd->rule == Rule::SelfConjOdd);

    auto frob = certify_chain(Partition::parse("2,1^6"), Partition::parse("5,3"), cache);
    REQUIRE(frob.has_value());
    CHECK(frob->rule == Rule::FrobeniusDegree);

    CHECK_FALSE(certify_chain(Partition::parse("2,2"), Partition::parse("1^4"), cache)
                    .has_value()); // ExactMN fallback is the CLI's job
}

TEST_CASE("certificate witnesses re-verify without redoing the search") {
    MemoCache cache;

    // ProcessVanishing: the witness pins the split, the prime, every reached
    // shape and its degree valuation, and the remaining class
    Partition alpha = Partition::parse("4,4,2,2");
    Partition beta = Partition::parse("7,3,2");
    auto cert = certify_zero_process(alpha, beta, 1, 3, cache);
    REQUIRE(cert.has_value());
    const Json& w = cert->witness;
    int s = w["s"].get<int>();
    long long p = w["p"].get<long long>();
    Partition gamma = Partition::parse(w["gamma"].get<std::string>());
    CHECK(gamma ==
          Partition(std::vector<int>(beta.parts().begin() + s, beta.parts().end())));
    CHECK(is_p_adic_type(gamma, p));
    CHECK(w["results"].size() == w["sequence_count"].get<std::size_t>());
    for (const auto& entry : w["results"]) {
        Partition reached = Partition::parse(entry["partition"].get<std::string>());
        CHECK(reached.n() == alpha.n() - beta.parts()[0]);
        int valuation = entry["degree_valuation"].get<int>();
        CHECK(valuation >= 1);
        CHECK(p_valuation(degree(reached), p) == valuation);
    }

    // GapInterval: the named part must avoid the hook multiset outright
    auto gap = certify_chain(Partition::parse("3,2,1"), Partition::parse("4,2"), cache);
    REQUIRE(gap.has_value());
    long long part = gap->witness["part"].get<long long>();
    HookGrid grid(Partition::parse("3,2,1"));
    CHECK(std::find(grid.hook_multiset().begin(), grid.hook_multiset().end(),
                    static_cast<int>(part)) == grid.hook_multiset().end());
    CHECK(gap->witness["interval"][0].get<long long>() <= part);
    CHECK(part <= gap->witness["interval"][1].get<long long>());
}

TEST_CASE("soundness sweep n <= 9: every fired rule agrees with MN") {
    MemoCache cache;
    SweepResult result = sweep_verify(9, cache);
    CHECK(result.fired > 0);
    CHECK(result.contradictions.empty());
    Json doc = sweep_json(9, result);
    CHECK(doc["contradictions"].empty());
    CHECK(doc["fired"].get<long long>() == result.fired);
}
