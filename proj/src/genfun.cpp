#include "hooklab/genfun.hpp"

#include "hooklab/partition.hpp"

namespace hooklab {

QSeries pochhammer(const XPoly& a, int m, int k, int count, int trunc, int sign) {
    if (m < 0) throw std::invalid_argument("pochhammer: m must be >= 0");
    if (k < 1) throw std::invalid_argument("pochhammer: k must be >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer: sign must be +-1");
    if (count < 0 && count != kInfiniteCount)
        throw std::invalid_argument("pochhammer: count must be >= 0 or infinite");

    QSeries result = QSeries::one(trunc);
    if (a.is_zero()) return result;
    for (long long j = 0; count == kInfiniteCount || j < count; ++j) {
        const long long exp = m + j * k;
        if (exp > trunc) break; // later factors are 1 mod q^{trunc+1}
        XPoly factor_coeff = -a;
        if (sign == -1 && exp % 2 == 1) factor_coeff = a;
        QSeries factor = QSeries::one(trunc);
        factor.add_term(static_cast<int>(exp), factor_coeff);
        result *= factor;
    }
    return result;
}

QSeries euler_expand(const XPoly& z, int trunc) {
    QSeries total(trunc);
    QSeries finite_poch = QSeries::one(trunc); // (q;q)_n, grown incrementally
    XPoly z_power(1);
    for (long long n = 0;; ++n) {
        const long long q_exp = n * (n - 1) / 2;
        if (q_exp > trunc) break;
        if (n > 0) {
            QSeries factor = QSeries::one(trunc);
            factor.add_term(static_cast<int>(n), XPoly(-1));
            finite_poch *= factor;
            z_power *= z;
        }
        total += finite_poch.inverse().shift_q(static_cast<int>(q_exp)).scaled(z_power);
    }
    return total;
}

QSeries sc_series(int trunc) { return pochhammer(XPoly(-1), 1, 2, kInfiniteCount, trunc); }

QSeries han_rhs(int t, int trunc) {
    if (t < 1) throw std::invalid_argument("han_rhs: t must be >= 1");
    const XPoly one_minus_x = XPoly(1) - XPoly::variable();
    QSeries numerator = pochhammer(one_minus_x, t, t, kInfiniteCount, trunc).pow(t);
    QSeries euler_inv = pochhammer(XPoly(1), 1, 1, kInfiniteCount, trunc).inverse();
    return numerator * euler_inv;
}

namespace {

XPoly one_minus_x_squared() {
    return XPoly(1) - XPoly::variable() * XPoly::variable();
}

} // namespace

QSeries thm11_even_rhs(int t, int trunc) {
    if (t < 1 || t % 2 != 0) throw std::invalid_argument("thm11_even_rhs: t must be even");
    return sc_series(trunc) *
           pochhammer(one_minus_x_squared(), 2 * t, 2 * t, kInfiniteCount, trunc).pow(t / 2);
}

QSeries thm11_odd_rhs(int t, int trunc) {
    if (t < 1 || t % 2 != 1) throw std::invalid_argument("thm11_odd_rhs: t must be odd");
    QSeries result = sc_series(trunc) * h_star_at(t, trunc);
    if (t > 1)
        result *= pochhammer(one_minus_x_squared(), 2 * t, 2 * t, kInfiniteCount, trunc)
                      .pow((t - 1) / 2);
    return result;
}

QSeries h_star(int trunc) {
    const XPoly x2m1 = XPoly::variable() * XPoly::variable() - XPoly(1); // x^2 - 1
    const XPoly inv_x = XPoly::monomial(1, -1);

    // sum_n (x^2-1)^n q^{2n^2+n} / ((q^2;q^2)_n (-q;q^2)_{n+1})
    QSeries plus_sum(trunc);
    // sum_n (x^2-1)^n q^{2n^2-n} / ((q^2;q^2)_n (-q;q^2)_n)
    QSeries minus_sum(trunc);

    XPoly x_factor(1);
    for (long long n = 0;; ++n) {
        const long long exp_minus = 2 * n * n - n;
        if (exp_minus > trunc) break;
        if (n > 0) x_factor *= x2m1;
        const QSeries even_poch = pochhammer(XPoly(1), 2, 2, static_cast<int>(n), trunc);
        const QSeries odd_poch_n = pochhammer(XPoly(-1), 1, 2, static_cast<int>(n), trunc);
        const QSeries odd_poch_n1 = pochhammer(XPoly(-1), 1, 2, static_cast<int>(n) + 1, trunc);
        const QSeries even_inv = even_poch.inverse();

        const long long exp_plus = 2 * n * n + n;
        if (exp_plus <= trunc) {
            plus_sum += (even_inv * odd_poch_n1.inverse())
                            .shift_q(static_cast<int>(exp_plus))
                            .scaled(x_factor);
        }
        minus_sum += (even_inv * odd_poch_n.inverse())
                         .shift_q(static_cast<int>(exp_minus))
                         .scaled(x_factor);
    }
    return plus_sum.scaled(XPoly(1) - inv_x) + minus_sum.scaled(inv_x);
}

QSeries h_star_at(int t, int trunc) {
    if (t < 1) throw std::invalid_argument("h_star_at: t must be >= 1");
    return h_star(trunc / t).substitute_q_power(t, trunc);
}

QSeries gks_core_genfun(int t, int trunc) {
    if (t < 1) throw std::invalid_argument("gks_core_genfun: t must be >= 1");
    const QSeries sc = sc_series(trunc);
    const QSeries even_product = pochhammer(XPoly(1), 2 * t, 2 * t, kInfiniteCount, trunc);
    if (t % 2 == 0) return sc * even_product.pow(t / 2);
    QSeries result = sc;
    if (t > 1) result *= even_product.pow((t - 1) / 2);
    return result * pochhammer(XPoly(-1), t, 2 * t, kInfiniteCount, trunc).inverse();
}

QSeries gen1_series(int trunc) {
    const XPoly one_minus_x = XPoly(1) - XPoly::variable();
    QSeries total = QSeries::one(trunc);
    QSeries inner(trunc);
    for (long long n = 1; n * n <= trunc; ++n) {
        QSeries term = QSeries::one(trunc);
        term.add_term(static_cast<int>(2 * n), -one_minus_x); // 1 - (1-x) q^{2n}
        term *= pochhammer(one_minus_x_squared(), 2, 2, static_cast<int>(n - 1), trunc);
        term *= pochhammer(XPoly(1), 2, 2, static_cast<int>(n), trunc).inverse();
        inner += term.shift_q(static_cast<int>(n * n));
    }
    total += inner.scaled(XPoly::variable());
    return total;
}

QSeries d_type_series(int which, int trunc) {
    if (which != 1 && which != 2) throw std::invalid_argument("d_type_series: which must be 1 or 2");
    const XPoly x = XPoly::variable();
    const XPoly x2 = x * x;

    // 1 + x^2 (q^{2j} + q^{4j} + ...): one block of parts of size j in the
    // twins, a single 1-hook pair per block.
    const auto block_factor = [&](long long j) {
        QSeries geo(trunc);
        for (long long e = 2 * j; e <= trunc; e += 2 * j) geo.add_term(static_cast<int>(e), XPoly(1));
        return QSeries::one(trunc) + geo.scaled(x2);
    };

    QSeries total(trunc);
    for (long long n = 1; n * n <= trunc; ++n) {
        QSeries term = QSeries::one(trunc);
        for (long long j = 1; j < n; ++j) term *= block_factor(j);
        if (which == 1) {
            term.scale(x);
        } else {
            QSeries geo(trunc);
            for (long long e = 2 * n; e <= trunc; e += 2 * n) geo.add_term(static_cast<int>(e), XPoly(1));
            term *= geo.scaled(x2);
        }
        total += term.shift_q(static_cast<int>(n * n));
    }
    return total;
}

namespace {

QSeries fg_sum_impl(const XPoly& a, int trunc, bool g_variant) {
    QSeries total(trunc);
    for (long long n = 0;; ++n) {
        const long long q_exp = g_variant ? n * n + 2 * n : n * n;
        if (q_exp > trunc) break;
        QSeries term = pochhammer(a, 0, 2, static_cast<int>(n), trunc);
        term *= pochhammer(XPoly(1), 2, 2, static_cast<int>(n), trunc).inverse();
        total += term.shift_q(static_cast<int>(q_exp));
    }
    return total;
}

} // namespace

QSeries f_sum(const XPoly& a, int trunc) { return fg_sum_impl(a, trunc, false); }

QSeries g_sum(const XPoly& a, int trunc) { return fg_sum_impl(a, trunc, true); }

QSeries fg_product_rhs(const mpq_class& sqrt_a, FGKind which, int trunc) {
    if (which == FGKind::G && sqrt_a == 0)
        throw std::domain_error("fg_product_rhs: G is undefined at sqrt(A) = 0");
    const QSeries plus = pochhammer(XPoly(-sqrt_a), 0, 1, kInfiniteCount, trunc, -1);
    const QSeries minus = pochhammer(XPoly(sqrt_a), 0, 1, kInfiniteCount, trunc, -1);
    const QSeries sc = sc_series(trunc);
    if (which == FGKind::F) return (sc * (plus + minus)).scaled(XPoly(mpq_class(1, 2)));
    mpq_class prefactor(1);
    prefactor /= 2 * sqrt_a;
    return (sc * (plus - minus)).scaled(XPoly(prefactor));
}

QSeries a_star_series_even(int t, int trunc) {
    if (t < 1 || t % 2 != 0) throw std::invalid_argument("a_star_series_even: t must be even");
    // t q^{2t} (-q;q^2)_inf / (1 - q^{2t})
    QSeries numerator(trunc);
    if (2 * t <= trunc) numerator.add_term(2 * t, XPoly(t));
    QSeries denom = QSeries::one(trunc);
    if (2 * t <= trunc) denom.add_term(2 * t, XPoly(-1));
    return numerator * denom.inverse() * sc_series(trunc);
}

QSeries a_star_series_odd(int t, int trunc) {
    if (t < 1 || t % 2 != 1) throw std::invalid_argument("a_star_series_odd: t must be odd");
    // q^t (1 + (t-1) q^t + t q^{2t}) (-q;q^2)_inf / ((1 - q^{2t})(1 + q^t))
    QSeries numerator(trunc);
    if (t <= trunc) numerator.add_term(t, XPoly(1));
    if (2 * t <= trunc) numerator.add_term(2 * t, XPoly(t - 1));
    if (3 * t <= trunc) numerator.add_term(3 * t, XPoly(t));
    QSeries denom = QSeries::one(trunc);
    if (2 * t <= trunc) denom.add_term(2 * t, XPoly(-1));
    QSeries denom2 = QSeries::one(trunc);
    if (t <= trunc) denom2.add_term(t, XPoly(1));
    return numerator * (denom * denom2).inverse() * sc_series(trunc);
}

QSeries a_star_series(int t, int trunc) {
    return t % 2 == 0 ? a_star_series_even(t, trunc) : a_star_series_odd(t, trunc);
}

mpz_class a_star_formula(int t, int n) {
    if (t < 1) throw std::invalid_argument("a_star_formula: t must be >= 1");
    if (n < 0) throw std::invalid_argument("a_star_formula: n must be >= 0");
    mpz_class total = 0;
    if (t % 2 == 0) {
        for (int j = 1; n - 2 * t * j >= 0; ++j) total += count_distinct_odd(n - 2 * t * j);
        total *= t;
    } else {
        for (int j = 1; n - t * j >= 0; ++j) {
            mpz_class term = j * count_distinct_odd(n - t * j);
            total += (j % 2 == 1) ? term : -term;
        }
        for (int j = 1; n - 2 * t * j >= 0; ++j)
            total += t * count_distinct_odd(n - 2 * t * j);
    }
    return total;
}

} // namespace hooklab
