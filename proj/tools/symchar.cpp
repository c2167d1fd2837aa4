#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "symchar/certify.hpp"
#include "symchar/common.hpp"
#include "symchar/engine.hpp"
#include "symchar/selfconj.hpp"

namespace {

constexpr int kExitUsage = 2;    // bad input / domain error
constexpr int kExitInternal = 3; // an identity the engine guarantees failed

int default_bound() {
    if (const char* env = std::getenv("SYMCHAR_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    return 14;
}

struct Options {
    std::string verb;
    int n = 0;
    long long p = 0;
    std::string alpha_text, beta_text;
    std::string format = "csv";
    std::string cache_path;
    int jobs = 1;
    int max_n = default_bound();
    int s_cap = 3;
    int pvanish_bound = 12;
    bool verify = false;
    bool fallback_exact = false;
};

void check_bound(int n, int bound) {
    if (n > bound)
        throw std::domain_error("n = " + std::to_string(n) +
                                " exceeds the configured bound " +
                                std::to_string(bound) +
                                " (raise with --max-n or SYMCHAR_MAX_N)");
}

int run(const Options& opt) {
    symchar::MemoCache cache;
    if (!opt.cache_path.empty()) cache.load_file(opt.cache_path);
    auto persist = [&]() {
        if (!opt.cache_path.empty()) cache.append_file(opt.cache_path);
    };

    if (opt.verb == "table") {
        check_bound(opt.n, opt.max_n);
        symchar::CharacterTable table = symchar::character_table(opt.n, cache, opt.jobs);
        std::cout << (opt.format == "json" ? symchar::table_json(table)
                                           : symchar::table_csv(table));
        if (opt.format == "json") std::cout << "\n";
        persist();
        return 0;
    }

    if (opt.verb == "value") {
        symchar::Partition alpha = symchar::Partition::parse(opt.alpha_text);
        symchar::Partition beta = symchar::Partition::parse(opt.beta_text);
        std::cout << symchar::mn_value(alpha, beta, cache).str() << "\n";
        persist();
        return 0;
    }

    if (opt.verb == "certify") {
        symchar::Partition alpha = symchar::Partition::parse(opt.alpha_text);
        symchar::Partition beta = symchar::Partition::parse(opt.beta_text);
        symchar::CertifyOptions copt;
        copt.s_cap = opt.s_cap;
        copt.pvanish_bound = opt.pvanish_bound;
        auto cert = symchar::certify_chain(alpha, beta, cache, copt);
        if (!cert && opt.fallback_exact) {
            symchar::Integer value = symchar::mn_value(alpha, beta, cache);
            symchar::Certificate exact;
            exact.verdict = value == 0 ? symchar::Verdict::Zero : symchar::Verdict::Nonzero;
            exact.rule = symchar::Rule::ExactMN;
            exact.witness = symchar::Json{{"value", value.str()}};
            cert = exact;
        }
        if (!cert) {
            symchar::Json doc;
            doc["alpha"] = alpha.str();
            doc["beta"] = beta.str();
            doc["verdict"] = nullptr;
            doc["rule"] = nullptr;
            std::cout << doc.dump(2) << "\n";
            persist();
            return 0;
        }
        std::optional<bool> verified;
        if (opt.verify) {
            symchar::Integer value = symchar::mn_value(alpha, beta, cache);
            verified = cert->verdict == symchar::Verdict::Zero ? value == 0 : value != 0;
        }
        std::cout << symchar::certificate_json(alpha, beta, *cert, verified).dump(2) << "\n";
        persist();
        if (opt.verify && verified.has_value() && !*verified)
            throw symchar::internal_error("certificate contradicts the exact MN value");
        return 0;
    }

    if (opt.verb == "gaps") {
        symchar::Partition alpha = symchar::Partition::parse(opt.alpha_text);
        std::cout << symchar::gaps_json(alpha).dump(2) << "\n";
        return 0;
    }

    if (opt.verb == "scan") {
        check_bound(opt.n, opt.max_n);
        if (!symchar::is_prime(opt.p))
            throw std::domain_error(std::to_string(opt.p) + " is not prime");
        symchar::ScanReport report = symchar::scan_p_vanishing(opt.n, opt.p, cache, opt.jobs);
        std::cout << symchar::scan_json(report).dump(2) << "\n";
        persist();
        return report.thm21_violations.empty() ? 0 : kExitInternal;
    }

    if (opt.verb == "verify") {
        check_bound(opt.n, opt.max_n);
        symchar::CertifyOptions copt;
        copt.s_cap = opt.s_cap;
        copt.pvanish_bound = opt.pvanish_bound;
        symchar::SweepResult result = symchar::sweep_verify(opt.n, cache, copt);
        std::cout << symchar::sweep_json(opt.n, result).dump(2) << "\n";
        persist();
        return result.contradictions.empty() ? 0 : kExitInternal;
    }

    throw std::domain_error("unknown command");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact character values of symmetric groups with zero/nonzero certificates"};
    app.require_subcommand(1);
    Options opt;

    auto add_cache = [&](CLI::App* cmd) {
        cmd->add_option("--cache", opt.cache_path, "memo cache file (loaded, then appended)");
    };
    auto add_jobs = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    };
    auto add_bound = [&](CLI::App* cmd) {
        cmd->add_option("--max-n", opt.max_n, "override the n bound (env SYMCHAR_MAX_N)");
    };

    CLI::App* table = app.add_subcommand("table", "full character table of S_n");
    table->add_option("n", opt.n, "group degree")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    add_jobs(table);
    add_cache(table);
    add_bound(table);

    CLI::App* value = app.add_subcommand("value", "single character value chi^alpha(beta)");
    value->add_option("alpha", opt.alpha_text, "character partition")->required();
    value->add_option("beta", opt.beta_text, "class partition")->required();
    add_cache(value);

    CLI::App* certify = app.add_subcommand("certify", "zero/nonzero certificate for (alpha, beta)");
    certify->add_option("alpha", opt.alpha_text, "character partition")->required();
    certify->add_option("beta", opt.beta_text, "class partition")->required();
    certify->add_flag("--verify", opt.verify, "re-check the verdict against exact MN");
    certify->add_flag("--fallback-exact", opt.fallback_exact,
                      "emit an ExactMN certificate when no rule fires");
    certify->add_option("--s-cap", opt.s_cap, "max split depth for the removal process");
    certify->add_option("--pvanish-bound", opt.pvanish_bound,
                        "max |gamma| for brute-force p-vanishing checks");
    add_cache(certify);

    CLI::App* gaps = app.add_subcommand("gaps", "hook-length gap set of a self-conjugate partition");
    gaps->add_option("alpha", opt.alpha_text, "self-conjugate partition")->required();

    CLI::App* scan = app.add_subcommand("scan", "p-vanishing class scan of S_n");
    scan->add_option("n", opt.n, "group degree")->required()->check(CLI::NonNegativeNumber);
    scan->add_option("p", opt.p, "prime")->required();
    add_jobs(scan);
    add_cache(scan);
    add_bound(scan);

    CLI::App* verify = app.add_subcommand("verify", "certifier-vs-MN soundness sweep for all n' <= n");
    verify->add_option("n", opt.n, "sweep bound")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--s-cap", opt.s_cap, "max split depth for the removal process");
    verify->add_option("--pvanish-bound", opt.pvanish_bound,
                       "max |gamma| for brute-force p-vanishing checks");
    add_cache(verify);
    add_bound(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    for (CLI::App* cmd : {table, value, certify, gaps, scan, verify})
        if (cmd->parsed()) opt.verb = cmd->get_name();

    try {
        return run(opt);
    } catch (const symchar::internal_error& e) {
        std::cerr << "internal consistency violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
