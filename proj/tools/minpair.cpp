// Command-line front end: analyze a scenario, run the bundled suite, or run
// the randomized property harness.
//
// Exit codes: 0 all PASS, 1 a theorem check failed, 2 input or certification error.

#include "minpair/proptest.hpp"
#include "minpair/scenario.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>

using namespace minpair;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::Parse, "cannot write " + out);
    f << text;
}

std::filesystem::path bundle_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("MINPAIR_SCENARIO_DIR")) return env;
#ifdef MINPAIR_DEFAULT_SCENARIO_DIR
    return MINPAIR_DEFAULT_SCENARIO_DIR;
#else
    return "scenarios";
#endif
}

int cmd_analyze(const std::string& path, const std::string& out) {
    auto report = analyze(load_scenario(path));
    emit(report_to_json(report).dump(2) + "\n", out);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    return report.has_fail() ? kFail : kOk;
}

int cmd_suite(const std::string& dir, const std::string& filter, const std::string& out) {
    std::ostringstream os;
    bool ok = true;
    auto files = scenario_files(bundle_dir(dir));
    std::vector<Scenario> scenarios;
    for (const auto& f : files) scenarios.push_back(load_scenario(f));
    std::sort(scenarios.begin(), scenarios.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& sc : scenarios) {
        AnalysisReport r = analyze(sc);
        auto problems = check_expectations(sc, r, filter);
        ok = ok && problems.empty();
        os << std::left << std::setw(30) << sc.id << " j=" << r.j << " lambda=" << r.lambda
           << " resdeg=" << (r.residue_degree ? std::to_string(*r.residue_degree) : "-") << " ic=" << r.ic_classification
           << "  " << (problems.empty() ? "OK" : "MISMATCH") << "\n";
        for (const auto& v : r.verdicts) {
            if (!filter.empty() && v.name != filter) continue;
            os << "    " << std::setw(18) << v.name << std::setw(8) << to_string(v.status) << v.details << "\n";
        }
        for (const auto& p : problems) os << "    !! " << p << "\n";
    }
    os << scenarios.size() << " scenarios, " << (ok ? "all as expected" : "MISMATCHES") << "\n";
    emit(os.str(), out);
    return ok ? kOk : kFail;
}

int cmd_proptest(std::uint64_t seed, long count, const std::string& out) {
    auto summary = run_proptest(seed, count);
    emit(summary.str(), out);
    return summary.all_passed() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal pairs of definition: invariants and theorem checks"};
    app.require_subcommand(1);
    std::string out;

    std::string path;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one scenario file and print its JSON report");
    analyze_cmd->add_option("scenario", path, "scenario JSON file")->required();
    analyze_cmd->add_option("--out", out, "write the report here instead of stdout");

    std::string dir, filter;
    auto* suite_cmd = app.add_subcommand("suite", "run the bundled scenarios against their expectations");
    suite_cmd->add_option("--dir", dir, "scenario directory (default: $MINPAIR_SCENARIO_DIR or the bundle)");
    suite_cmd->add_option("--filter", filter, "only this verdict name, e.g. thm_1_1");
    suite_cmd->add_option("--out", out, "write the table here instead of stdout");

    std::uint64_t seed = 7;
    long count = 200;
    auto* prop_cmd = app.add_subcommand("proptest", "randomized property checks");
    prop_cmd->add_option("--seed", seed, "RNG seed");
    prop_cmd->add_option("--count", count, "number of random scenarios")->check(CLI::NonNegativeNumber);
    prop_cmd->add_option("--out", out, "write the summary here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }
    try {
        if (*analyze_cmd) return cmd_analyze(path, out);
        if (*suite_cmd) return cmd_suite(dir, filter, out);
        if (*prop_cmd) return cmd_proptest(seed, count, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::InternalConsistency ? kFail : kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
