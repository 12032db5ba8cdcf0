#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qv/bijections.hpp"
#include "qv/errors.hpp"
#include "qv/suite.hpp"

namespace {

qv::ReportFormat parse_format(const std::string& f) {
    if (f == "text") return qv::ReportFormat::text;
    if (f == "json") return qv::ReportFormat::json;
    throw qv::ConfigError("format must be text or json");
}

int emit_and_exit_code(const qv::SuiteReport& report, qv::ReportFormat format, bool timing) {
    std::cout << qv::emit_report(report, format);
    if (timing)
        std::fprintf(stderr, "wall time: %.3f s over %zu records\n", report.wall_time.count(),
                     report.records.size());
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for the cyclic q-identity families"};
    app.require_subcommand(1);

    // verify <family> [flags]
    std::string family;
    std::string variant;
    std::string format_name = "text";
    long m_val = 0, n_val = 0, L_val = 0, s_val = 0, degree_bound = 0;
    std::uint64_t seed = 1;
    bool timing = false;
    bool has_m = false, has_n = false, has_L = false, has_s = false, has_D = false;

    auto* verify = app.add_subcommand("verify", "run one identity family over its grid");
    verify->add_option("family", family, "family name")->required();
    verify->add_option("--m", m_val);
    verify->add_option("--n", n_val);
    verify->add_option("--L", L_val);
    verify->add_option("--s", s_val);
    verify->add_option("--variant", variant);
    verify->add_option("--degree-bound", degree_bound);
    verify->add_option("--seed", seed);
    verify->add_option("--format", format_name)->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--timing", timing, "print wall time to stderr");

    // suite --config PATH
    std::string config_path;
    int jobs = 0;
    std::string suite_format;
    auto* suite = app.add_subcommand("suite", "run a configured verification suite");
    suite->add_option("--config", config_path, "JSON suite configuration")->required();
    suite->add_option("--jobs", jobs, "worker count override");
    suite->add_option("--format", suite_format)->check(CLI::IsMember({"text", "json"}));
    suite->add_flag("--timing", timing, "print wall time to stderr");

    // bijection --check theta|phi --n INT --m INT
    std::string check_name;
    long bij_n = 0, bij_m = 0;
    auto* bijection = app.add_subcommand("bijection", "exhaustively check theta or phi");
    bijection->add_option("--check", check_name)->required()->check(CLI::IsMember({"theta", "phi"}));
    bijection->add_option("--n", bij_n)->required();
    bijection->add_option("--m", bij_m)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    has_m = verify->count("--m") > 0;
    has_n = verify->count("--n") > 0;
    has_L = verify->count("--L") > 0;
    has_s = verify->count("--s") > 0;
    has_D = verify->count("--degree-bound") > 0;

    try {
        if (verify->parsed()) {
            qv::SuiteConfig cfg;
            cfg.sample_seed = seed;
            if (has_D) cfg.degree_bound = static_cast<int>(degree_bound);
            cfg.output_format = parse_format(format_name);
            qv::FamilyGrid grid;
            grid.family = family;
            if (has_m) grid.nums["m"] = {m_val};
            if (has_n) grid.nums["n"] = {n_val};
            if (has_L) grid.nums["L"] = {L_val};
            if (has_s) grid.nums["s"] = {s_val};
            if (has_D) grid.nums["D"] = {degree_bound};
            if (!variant.empty()) {
                // numeric variants (finite_euler, lucas, binet, three_ell) are numbers
                try {
                    std::size_t used = 0;
                    const long v = std::stol(variant, &used);
                    if (used == variant.size())
                        grid.nums["variant"] = {v};
                    else
                        grid.enums["variant"] = {variant};
                } catch (const std::exception&) {
                    grid.enums["variant"] = {variant};
                }
            }
            cfg.families.push_back(std::move(grid));
            return emit_and_exit_code(qv::run_suite(cfg), cfg.output_format, timing);
        }

        if (suite->parsed()) {
            qv::SuiteConfig cfg = qv::load_config_file(config_path);
            if (jobs > 0) cfg.parallelism = jobs;
            if (!suite_format.empty()) cfg.output_format = parse_format(suite_format);
            return emit_and_exit_code(qv::run_suite(cfg), cfg.output_format, timing);
        }

        if (bijection->parsed()) {
            const auto kind =
                check_name == "theta" ? qv::BijectionKind::theta : qv::BijectionKind::phi;
            const auto rec = qv::check_cardinalities(static_cast<int>(bij_n),
                                                     static_cast<int>(bij_m), kind);
            std::cout << check_name << " n=" << bij_n << " m=" << bij_m << ": "
                      << (rec.pass ? "pass" : "FAIL") << "  " << qv::value_str(rec.lhs) << " | "
                      << qv::value_str(rec.rhs) << "\n";
            return rec.pass ? 0 : 1;
        }
    } catch (const qv::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const qv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
