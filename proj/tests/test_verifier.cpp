#include "minpair/scenario.hpp"

#include <gtest/gtest.h>

using namespace minpair;

namespace {

Poly<Rational> qp(std::vector<long long> c) {
    std::vector<Rational> v(c.begin(), c.end());
    return Poly<Rational>(std::move(v), Rational(0));
}

using Elem = AlgebraicElement<PAdicRationals>;

MinimalPair<PAdicRationals> pair(long p, std::vector<long long> Q, const char* gamma,
                                 MinimalityMode mode = MinimalityMode::Auto) {
    auto a = std::make_shared<const Elem>(certify(PAdicRationals(static_cast<std::uint64_t>(p)), qp(std::move(Q))));
    return make_minimal_pair(a, OrderedValue(parse_rational(gamma)), mode);
}

std::vector<Scenario> bundled() {
    std::vector<Scenario> out;
    for (const auto& f : scenario_files(MINPAIR_SCENARIO_DIR)) out.push_back(load_scenario(f));
    return out;
}

Status status_of(const AnalysisReport& r, const std::string& name) {
    for (const auto& v : r.verdicts)
        if (v.name == name) return v.status;
    ADD_FAILURE() << "no verdict " << name;
    return Status::Skipped;
}

}  // namespace

TEST(Verifier, ProductEqualsJOnRamifiedQuadratic) {
    GaussValuation gv(pair(2, {-2, 0, 1}, "2"));  // Krasner-certified, j = 1
    auto v = verify_thm_1_1(gv);
    EXPECT_EQ(v.status, Status::Pass) << v.details;
    EXPECT_NE(v.details.find("j=1"), std::string::npos);
}

TEST(Verifier, EquivalenceCheckSkippedWhenFar) {
    // v(sqrt(2) - sqrt(6)) = 1 < 2
    auto p1 = pair(2, {-2, 0, 1}, "2");
    auto p2 = pair(2, {-6, 0, 1}, "2");
    auto v = verify_thm_1_2(p1, p2, "sqrt6");
    EXPECT_EQ(v.status, Status::Skipped);
    EXPECT_NE(v.details.find("not equivalent"), std::string::npos);
}

TEST(Verifier, LiftSkippedInRankTwo) {
    auto p = pair(2, {-2, 0, 1}, "3/2");
    auto lifted = lift_pair(p);
    EXPECT_EQ(verify_lift(lifted).status, Status::Skipped);
    EXPECT_EQ(verify_lift(p).status, Status::Pass);
}

TEST(Verifier, IcReportAndClassification) {
    GaussValuation gv(pair(2, {-2, 0, 1}, "2"));
    auto ic = ic_degree_report(gv);
    EXPECT_TRUE(ic.from_product);
    EXPECT_EQ(ic.degree, 1);
    EXPECT_EQ(ic.classification, "K(a)^h");
    EXPECT_EQ(ic_class(2, 2), "K^h");
    EXPECT_EQ(ic_class(2, 4), "intermediate(2)");
    EXPECT_EQ(verify_eq_7(gv, ic).status, Status::Pass);
    EXPECT_EQ(verify_necessary_j1(gv, ic).status, Status::Pass);
}

TEST(Verifier, SubfieldRejectsNonRoot) {
    PAdicRationals K(3);
    GaussValuation gv(pair(3, {-3, 0, 1}, "1"));
    auto ic = ic_degree_report(gv);
    try {
        (void)verify_thm_1_3(gv, ic, qp({1}), qp({0, 1}));  // b = 1 is not a root of X
        FAIL() << "expected Precondition";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Precondition);
    }
}

TEST(Verifier, TrivialSubfieldPasses) {
    GaussValuation gv(pair(3, {-3, 0, 1}, "1"));
    auto v = verify_thm_1_3(gv, ic_degree_report(gv), qp({}), qp({0, 1}));
    EXPECT_EQ(v.status, Status::Pass) << v.details;
    EXPECT_NE(v.details.find("maximality of K(b) not certified"), std::string::npos);
}

TEST(Verifier, WildSubfieldSkipped) {
    // b = a with e_b = 2 = p
    GaussValuation gv(pair(2, {-2, 0, 1}, "3/2"));
    auto v = verify_thm_1_3(gv, ic_degree_report(gv), qp({0, 1}), qp({-2, 0, 1}));
    EXPECT_EQ(v.status, Status::Skipped);
}

TEST(Verifier, RegressionFixtureFails) {
    GaussValuation gv(pair(3, {-3, 0, 1}, "1/2", MinimalityMode::Assert));
    EXPECT_TRUE(gv.reduction_error().has_value());
    auto ic = ic_degree_report(gv);
    EXPECT_FALSE(ic.from_product);
    EXPECT_EQ(verify_thm_1_3(gv, ic, qp({0, 1}), qp({-3, 0, 1})).status, Status::Fail);
    EXPECT_EQ(verify_eq_7(gv, ic).status, Status::Fail);
    EXPECT_EQ(verify_thm_1_1(gv).status, Status::Fail);
}

TEST(Scenarios, BundledExpectationsHold) {
    auto all = bundled();
    ASSERT_GE(all.size(), 8u);
    for (const auto& sc : all) {
        auto r = analyze(sc);
        auto problems = check_expectations(sc, r);
        EXPECT_TRUE(problems.empty()) << sc.id << ": " << (problems.empty() ? "" : problems.front());
    }
}

TEST(Scenarios, S1Aggregate) {
    auto sc = load_scenario(std::filesystem::path(MINPAIR_SCENARIO_DIR) / "S1.json");
    auto r = analyze(sc);
    EXPECT_EQ(r.j, 2);
    EXPECT_EQ(r.lambda, 1);
    EXPECT_EQ(r.residue_degree, 2);
    EXPECT_EQ(r.ic_classification, "K^h");
    EXPECT_EQ(r.minimality, "BruteForceChecked");
    EXPECT_FALSE(r.has_fail());
}

TEST(Scenarios, RankTwoBranch) {
    auto sc = load_scenario(std::filesystem::path(MINPAIR_SCENARIO_DIR) / "S5.json");
    ASSERT_EQ(sc.gamma.rank(), 2u);
    auto r = analyze(sc);
    EXPECT_FALSE(r.e.has_value());
    EXPECT_FALSE(r.E.has_value());
    EXPECT_EQ(status_of(r, "lemma_4_1"), Status::Skipped);
    EXPECT_EQ(status_of(r, "thm_1_1"), Status::Pass);
}

TEST(Scenarios, ReportJsonRoundTrip) {
    for (const auto& sc : bundled()) {
        auto r = analyze(sc);
        auto j = report_to_json(r);
        EXPECT_EQ(j.at("schema_version"), 1);
        EXPECT_EQ(report_from_json(j), r) << sc.id;
        EXPECT_EQ(report_from_json(json::parse(j.dump())), r) << sc.id;
    }
}

TEST(Scenarios, ScenarioJsonRoundTrip) {
    for (const auto& sc : bundled()) {
        auto again = parse_scenario(scenario_to_json(sc));
        EXPECT_EQ(scenario_to_json(again), scenario_to_json(sc)) << sc.id;
    }
}

TEST(Scenarios, MalformedInput) {
    auto base = json::parse(R"({"schema_version": 1, "id": "bad", "base": "Qp", "p": 2, "Q": ["-2", "0", "1"], "gamma": "abc"})");
    try {
        (void)parse_scenario(base);
        FAIL() << "expected Parse";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Parse);
        EXPECT_NE(std::string(e.what()).find("gamma"), std::string::npos);
    }
    auto wrong_version = base;
    wrong_version["gamma"] = "1";
    wrong_version["schema_version"] = 2;
    EXPECT_THROW((void)parse_scenario(wrong_version), Error);
    auto reducible = base;
    reducible["gamma"] = "1";
    reducible["Q"] = json::array({"-1", "0", "1"});
    try {
        (void)analyze(parse_scenario(reducible));
        FAIL() << "expected Certification";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Certification);
    }
}

TEST(Scenarios, MissingDirectory) {
    try {
        (void)scenario_files("/nonexistent/minpair-scenarios");
        FAIL() << "expected Parse";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Parse);
    }
}

TEST(Scenarios, FilterRestrictsToOneVerdict) {
    auto sc = load_scenario(std::filesystem::path(MINPAIR_SCENARIO_DIR) / "X1_tame_subfield_regression.json");
    auto r = analyze(sc);
    EXPECT_TRUE(check_expectations(sc, r, "thm_1_1").empty());
    auto broken = sc;
    broken.expect["verdicts"]["thm_1_1"] = "PASS";
    auto problems = check_expectations(broken, r, "thm_1_1");
    ASSERT_EQ(problems.size(), 1u);
    EXPECT_EQ(problems[0].rfind("thm_1_1", 0), 0u);
}
