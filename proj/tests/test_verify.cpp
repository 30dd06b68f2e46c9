#include <doctest.h>

#include "hooklab/verify.hpp"

using namespace hooklab;

TEST_CASE("comparison reports the smallest mismatching exponents") {
    QSeries lhs(6), rhs(6);
    lhs.add_term(2, XPoly::variable() + XPoly(1));
    rhs.add_term(2, XPoly::variable() + XPoly(1));
    CHECK(compare_series("t", lhs, rhs).pass);

    rhs.add_term(5, XPoly(3));
    rhs.add_term(4, XPoly::monomial(2, 1) + XPoly::monomial(1, 3));
    VerificationReport report = compare_series("t", lhs, rhs);
    REQUIRE_FALSE(report.pass);
    REQUIRE(report.mismatch.has_value());
    CHECK(report.mismatch->q_exp == 4);
    CHECK(report.mismatch->x_exp == 1);
    CHECK(report.mismatch->lhs == "0");
    CHECK(report.mismatch->rhs == "2");

    nlohmann::json j = report.to_json();
    CHECK(j["status"] == "fail");
    CHECK(j["mismatch"]["q"] == 4);
    CHECK(j["mismatch"]["x"] == 1);
}

TEST_CASE("theorem and lemma targets pass at desk scale") {
    for (int t = 1; t <= 4; ++t) {
        const VerificationReport r = verify_thm_1_1(t, 14);
        CHECK(r.pass);
        CHECK(r.runtime_ms >= 0.0);
    }
    CHECK(verify_thm_1_1(7, 20).pass);
    CHECK(verify_thm_1_1(8, 20).pass);
    for (int t : {1, 2, 5}) CHECK(verify_thm_1_2(t, 20, 12).pass);
    CHECK(verify_thm_1_2(9, 16, 16).pass); // a_9*(16) = 1 on all three routes
    CHECK(verify_thm_3_1(14, {mpq_class(1, 2)}).pass);
    CHECK(verify_lemma_3_2({mpq_class(1), mpq_class(4, 5)}, 14).pass);
    for (int t = 1; t <= 4; ++t) CHECK(verify_lemma_3_3(t, 14).pass);
    CHECK(verify_bbcfw(3, 60, 14).pass);
    CHECK(verify_littlewood_suite(10, 4).pass);
    CHECK(verify_table_1().pass);
}

TEST_CASE("excluded parameter points are rejected") {
    CHECK_THROWS_AS(verify_thm_3_1(10, {mpq_class(1)}), std::invalid_argument);
    CHECK_THROWS_AS(verify_thm_3_1(10, {mpq_class(-1)}), std::invalid_argument);
    // sqrt(A) = 0 skips only the G side.
    CHECK(verify_lemma_3_2({mpq_class(0)}, 10).pass);
}

TEST_CASE("corrupted right-hand sides are detected with a populated mismatch") {
    QSeries bad_even = thm11_even_rhs(2, 12);
    bad_even.add_term(7, XPoly::variable());
    VerificationReport r1 = verify_thm_1_1(2, 12, &bad_even);
    REQUIRE_FALSE(r1.pass);
    CHECK(r1.mismatch->q_exp == 7);
    CHECK(r1.mismatch->x_exp == 1);

    QSeries bad_series = a_star_series(3, 12);
    bad_series.add_term(9, XPoly(1));
    VerificationReport r2 = verify_thm_1_2(3, 12, 12, &bad_series);
    REQUIRE_FALSE(r2.pass);
    CHECK(r2.mismatch->q_exp == 9);

    QSeries bad_gks = gks_core_genfun(3, 12);
    bad_gks.add_term(0, XPoly(-1));
    VerificationReport r3 = verify_lemma_3_3(3, 12, &bad_gks);
    REQUIRE_FALSE(r3.pass);
    CHECK(r3.mismatch->q_exp == 0);

    QSeries bad_formal = sc_series(12) * h_star(12);
    bad_formal.add_term(11, XPoly::monomial(-1, 2));
    VerificationReport r4 = verify_thm_3_1(12, {}, &bad_formal);
    REQUIRE_FALSE(r4.pass);
    CHECK(r4.mismatch->q_exp == 11);
}

TEST_CASE("reports are deterministic") {
    VerificationReport a = verify_thm_1_1(2, 10);
    VerificationReport b = verify_thm_1_1(2, 10);
    CHECK(a.target == b.target);
    CHECK(a.parameters == b.parameters);
    CHECK(a.pass == b.pass);
}

TEST_CASE("a_star table rows") {
    const auto rows = a_star_table(16);
    REQUIRE(rows.size() == 17); // t = 1..16 plus the ">16" sentinel
    const int expected[] = {14, 14, 12, 12, 8, 6, 2, 8, 1, 0, 1, 0, 1, 0, 1, 0};
    for (int t = 1; t <= 16; ++t) {
        CHECK(rows[static_cast<std::size_t>(t - 1)].first == std::to_string(t));
        CHECK(rows[static_cast<std::size_t>(t - 1)].second == expected[t - 1]);
    }
    CHECK(rows.back().first == ">16");
    CHECK(rows.back().second == 0);
}

TEST_CASE("suite runner") {
    SuiteOptions options;
    options.targets = {"thm1.1", "table1"};
    options.t = 2;
    options.qmax = 10;
    const auto reports = run_verification_suite(options);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].target == "thm1.1.even");
    CHECK(reports[1].target == "table1");
    for (const auto& r : reports) CHECK(r.pass);

    SuiteOptions parallel = options;
    parallel.targets = {"lemma3.3"};
    parallel.t.reset();
    parallel.jobs = 4;
    const auto par_reports = run_verification_suite(parallel);
    SuiteOptions serial = parallel;
    serial.jobs = 1;
    const auto ser_reports = run_verification_suite(serial);
    REQUIRE(par_reports.size() == ser_reports.size());
    for (std::size_t i = 0; i < par_reports.size(); ++i) {
        CHECK(par_reports[i].target == ser_reports[i].target);
        CHECK(par_reports[i].pass == ser_reports[i].pass);
        CHECK(par_reports[i].parameters == ser_reports[i].parameters);
    }

    SuiteOptions bad;
    bad.targets = {"nonsense"};
    CHECK_THROWS_AS(run_verification_suite(bad), std::invalid_argument);
}
