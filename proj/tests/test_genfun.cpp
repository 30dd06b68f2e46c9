#include <doctest.h>

#include "hooklab/genfun.hpp"
#include "hooklab/partition.hpp"
#include "hooklab/verify.hpp"
#include "oracles.hpp"

using namespace hooklab;

TEST_CASE("Han's bivariate hook generating function") {
    const QSeries han1 = han_rhs(1, 8);
    CHECK(han1.coeff(1) == XPoly::variable()); // the partition (1) has one 1-hook

    CHECK(han_rhs(2, 6) == brute_force_hook_series(2, 6));
    CHECK(han_rhs(3, 10) == brute_force_hook_series(3, 10));

    // x = 1 recovers the partition-number series.
    const QSeries at_one = han_rhs(5, 20).at_x_one();
    const auto p = testing::partition_numbers(20);
    for (int n = 0; n <= 20; ++n) CHECK(at_one.coeff(n) == XPoly(mpq_class(p[n])));
}

TEST_CASE("even-t closed form") {
    CHECK_THROWS_AS(thm11_even_rhs(3, 10), std::invalid_argument);
    CHECK(thm11_even_rhs(2, 10).at_x_one() == sc_series(10));
    CHECK(thm11_even_rhs(2, 16) == brute_force_sc_hook_series(2, 16));
    CHECK(thm11_even_rhs(4, 20) == brute_force_sc_hook_series(4, 20));
}

TEST_CASE("H* kernel") {
    const QSeries h = h_star(20);
    CHECK(h.coeff(0) == XPoly(1));

    // (-q;q^2)_inf * H* is the 1-hook generating function...
    const QSeries product = sc_series(20) * h;
    CHECK(product.coeff(1) == XPoly::variable());
    CHECK(product == gen1_series(20));
    CHECK(product == brute_force_sc_hook_series(1, 20));
    // ...whose 1/x pieces cancel.
    CHECK_FALSE(product.has_negative_x_powers());
    CHECK_FALSE(h.has_negative_x_powers());
}

TEST_CASE("odd-t closed form") {
    CHECK_THROWS_AS(thm11_odd_rhs(2, 10), std::invalid_argument);
    CHECK(thm11_odd_rhs(1, 14) == sc_series(14) * h_star(14));
    CHECK(thm11_odd_rhs(3, 14) == brute_force_sc_hook_series(3, 14));
    for (int t : {1, 3, 5}) {
        const QSeries rhs = thm11_odd_rhs(t, 25);
        CHECK_FALSE(rhs.has_negative_x_powers());
        CHECK(rhs.at_x_one() == sc_series(25));
    }
}

TEST_CASE("every bivariate right-hand side specializes to the sc series at x = 1") {
    const QSeries sc = sc_series(30);
    for (int t : {2, 4, 6}) CHECK(thm11_even_rhs(t, 30).at_x_one() == sc);
    for (int t : {1, 3, 5}) CHECK(thm11_odd_rhs(t, 30).at_x_one() == sc);
    CHECK(gen1_series(30).at_x_one() == sc);
}

TEST_CASE("gen1 and the Type-1/Type-2 split") {
    const QSeries gen1 = gen1_series(18);
    CHECK(gen1.coeff(0) == XPoly(1));
    CHECK(gen1.coeff(1) == XPoly::variable());

    const QSeries d1 = d_type_series(1, 18);
    const QSeries d2 = d_type_series(2, 18);
    CHECK(QSeries::one(18) + d1 + d2 == gen1);
    CHECK(d1.coeff(1) == XPoly::variable());
    // Smallest Type-2 self-conjugate partition is (2,1): x^2 q^3.
    CHECK(d2.coeff(0).is_zero());
    CHECK(d2.coeff(1).is_zero());
    CHECK(d2.coeff(2).is_zero());
    CHECK(d2.coeff(3) == XPoly::monomial(1, 2));
    CHECK_THROWS_AS(d_type_series(3, 10), std::invalid_argument);

    // Against enumeration, split by type.
    QSeries oracle1(18), oracle2(18);
    for (int n = 1; n <= 18; ++n)
        for_each_self_conjugate(n, [&](const Partition& p) {
            QSeries& bucket = sc_split(p).type == ScType::type1 ? oracle1 : oracle2;
            bucket.add_term(n, XPoly::monomial(1, p.hook_count(1)));
        });
    CHECK(d1 == oracle1);
    CHECK(d2 == oracle2);
}

TEST_CASE("self-conjugate core generating functions") {
    CHECK(gks_core_genfun(1, 16) == QSeries::one(16));
    for (int t : {2, 3, 4}) {
        const QSeries series = gks_core_genfun(t, 16);
        for (int n = 0; n <= 16; ++n)
            CHECK(series.coeff(n) == XPoly(sc_tcore_count(t, n)));
    }
    // (3,2,1) is a self-conjugate 4-core of 6.
    CHECK(gks_core_genfun(4, 8).coeff(6).coeff(0) >= 1);
}

TEST_CASE("F and G sums against their product sides") {
    // (1; q^2)_n vanishes for n >= 1, so both sums collapse to 1.
    CHECK(f_sum(XPoly(1), 12) == QSeries::one(12));
    CHECK(g_sum(XPoly(1), 12) == QSeries::one(12));

    // F(0; q) = (-q; q^2)_inf.
    CHECK(f_sum(XPoly(0), 20) == sc_series(20));

    for (const auto& s : {mpq_class(1), mpq_class(4, 5), mpq_class(3, 2)}) {
        const XPoly a(mpq_class(s * s));
        CHECK(f_sum(a, 25) == fg_product_rhs(s, FGKind::F, 25));
        CHECK(g_sum(a, 25) == fg_product_rhs(s, FGKind::G, 25));
    }
    CHECK_THROWS_AS(fg_product_rhs(0, FGKind::G, 10), std::domain_error);
    CHECK(fg_product_rhs(0, FGKind::F, 20) == sc_series(20));
}

TEST_CASE("a_t* series and convolution formulas") {
    CHECK(a_star_series_even(2, 16).coeff(16) == XPoly(14));
    CHECK(a_star_series_even(8, 16).coeff(16) == XPoly(8));
    CHECK(a_star_series_odd(7, 16).coeff(16) == XPoly(2));
    CHECK_THROWS_AS(a_star_series_even(3, 10), std::invalid_argument);
    CHECK_THROWS_AS(a_star_series_odd(2, 10), std::invalid_argument);

    CHECK(a_star_formula(2, 16) == 14);
    CHECK(a_star_formula(4, 16) == 12);
    CHECK(a_star_formula(6, 16) == 6);
    CHECK(a_star_formula(8, 16) == 8);
    CHECK(a_star_formula(5, 3) == 0); // n < t: no hook fits

    // Differentiating the bivariate identity recovers the univariate series.
    CHECK(thm11_even_rhs(2, 16).x_derivative_at_one() == a_star_series_even(2, 16));
    CHECK(thm11_odd_rhs(3, 16).x_derivative_at_one() == a_star_series_odd(3, 16));
    CHECK(brute_force_sc_hook_series(1, 16).x_derivative_at_one().coeff(16) == XPoly(14));
}
