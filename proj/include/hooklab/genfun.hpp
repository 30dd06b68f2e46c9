#pragma once

#include "hooklab/qseries.hpp"

#include <gmpxx.h>

namespace hooklab {

/// Open-ended factor count for Pochhammer products.
inline constexpr int kInfiniteCount = -1;

/// The truncated product prod_{j=0}^{count-1} (1 - a (sign q)^{m+jk}).
/// `count = kInfiniteCount` keeps multiplying until the factor exponent
/// m + jk exceeds the truncation. Covers (c q^m; q^k)_count as well as the
/// signed-base products (a; -q)_inf via sign = -1.
QSeries pochhammer(const XPoly& a, int m, int k, int count, int trunc, int sign = +1);

/// Euler's expansion of (-z; q)_inf as sum_{n>=0} q^{n(n-1)/2} z^n / (q;q)_n.
QSeries euler_expand(const XPoly& z, int trunc);

/// (-q; q^2)_inf: the generating function for sc(n) = q*(n).
QSeries sc_series(int trunc);

/// Han's bivariate hook generating function over all partitions:
/// ((1-x) q^t; q^t)_inf^t / (q; q)_inf.
QSeries han_rhs(int t, int trunc);

/// Self-conjugate t-hook generating function, even t:
/// (-q; q^2)_inf * ((1-x^2) q^{2t}; q^{2t})_inf^{t/2}.
QSeries thm11_even_rhs(int t, int trunc);

/// Self-conjugate t-hook generating function, odd t:
/// (-q; q^2)_inf * H*(x; q^t) * ((1-x^2) q^{2t}; q^{2t})_inf^{(t-1)/2}.
QSeries thm11_odd_rhs(int t, int trunc);

/// H*(x; q): the 1-hook kernel
///   (1 - 1/x) sum_n (x^2-1)^n q^{2n^2+n} / ((q^2;q^2)_n (-q;q^2)_{n+1})
/// + (1/x)     sum_n (x^2-1)^n q^{2n^2-n} / ((q^2;q^2)_n (-q;q^2)_n).
QSeries h_star(int trunc);

/// H*(x; q^t).
QSeries h_star_at(int t, int trunc);

/// Garvan-Kim-Stanton generating function for self-conjugate t-cores.
QSeries gks_core_genfun(int t, int trunc);

/// 1 + x sum_{n>=1} q^{n^2} (1-(1-x)q^{2n}) ((1-x^2)q^2;q^2)_{n-1} / (q^2;q^2)_n,
/// the 1-hook generating function over self-conjugate partitions.
QSeries gen1_series(int trunc);

/// The Type-1 / Type-2 Durfee-square sums; 1 + D1 + D2 = gen1_series.
QSeries d_type_series(int which, int trunc);

/// F(A;q) = sum_n q^{n^2} (A;q^2)_n / (q^2;q^2)_n.
QSeries f_sum(const XPoly& a, int trunc);

/// G(A;q) = sum_n q^{n^2+2n} (A;q^2)_n / (q^2;q^2)_n.
QSeries g_sum(const XPoly& a, int trunc);

enum class FGKind { F, G };

/// Product sides of the F/G identities, at an exact rational square root:
///   F: (1/2)        (-q;q^2)_inf [(-s;-q)_inf + (s;-q)_inf]
///   G: (1/(2s))     (-q;q^2)_inf [(-s;-q)_inf - (s;-q)_inf]
/// Throws std::domain_error for G at s = 0 (the prefactor degenerates; use
/// g_sum directly there).
QSeries fg_product_rhs(const mpq_class& sqrt_a, FGKind which, int trunc);

/// Univariate generating functions for a_t*(n), built from the rational
/// closed forms with the denominators inverted as series.
QSeries a_star_series_even(int t, int trunc);
QSeries a_star_series_odd(int t, int trunc);
QSeries a_star_series(int t, int trunc);

/// Convolution formulas in terms of q*(m):
///   even t: t sum_{j>=1} q*(n - 2tj)
///   odd  t: sum_{j>=1} ((-1)^{j-1} j q*(n - tj) + t q*(n - 2tj)).
mpz_class a_star_formula(int t, int n);

} // namespace hooklab
