#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hooklab/xpoly.hpp"

namespace hooklab {

struct TruncationMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A truncated formal power series in q, exact modulo q^{trunc+1}, with
/// XPoly coefficients. All arithmetic preserves the truncation order.
class QSeries {
public:
    explicit QSeries(int trunc);
    static QSeries one(int trunc);
    static QSeries monomial(const XPoly& coeff, int q_exp, int trunc);

    int trunc() const noexcept { return trunc_; }
    const XPoly& coeff(int q_exp) const;
    void set_coeff(int q_exp, XPoly value);
    void add_term(int q_exp, const XPoly& value); // silently drops q_exp > trunc

    QSeries& operator+=(const QSeries& other);
    QSeries& operator-=(const QSeries& other);
    QSeries operator-() const;
    QSeries& operator*=(const QSeries& other) { return *this = *this * other; }
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    /// Multiplies every coefficient by c (series_scale).
    QSeries& scale(const XPoly& c);
    QSeries scaled(const XPoly& c) const;

    /// Multiplies by q^k (k >= 0), dropping overflowing terms.
    QSeries shift_q(int k) const;

    /// Multiplicative inverse mod q^{trunc+1} via Newton iteration. The
    /// constant coefficient must be a nonzero x-free constant.
    QSeries inverse() const;

    /// Integer power; negative exponents invert first.
    QSeries pow(int exponent) const;

    /// Substitutes q -> q^t and re-truncates at new_trunc. Requires
    /// trunc() >= floor(new_trunc / t) so the result is exact.
    QSeries substitute_q_power(int t, int new_trunc) const;

    /// Substitutes a rational for x in every coefficient.
    QSeries eval_x(const mpq_class& value) const;
    QSeries at_x_one() const { return eval_x(1); }

    /// Coefficient-wise d/dx at x = 1. Throws std::domain_error if any
    /// negative x-exponent is present.
    QSeries x_derivative_at_one() const;

    bool has_negative_x_powers() const;
    bool is_x_free() const;
    bool is_zero() const;

    struct Term {
        int q_exp;
        int x_exp;
        mpq_class coeff;
    };
    /// Sparse terms sorted by (q, x).
    std::vector<Term> terms() const;

    std::string to_string() const;

    bool operator==(const QSeries& other) const {
        return trunc_ == other.trunc_ && coeffs_ == other.coeffs_;
    }
    bool operator!=(const QSeries& other) const { return !(*this == other); }

private:
    void check_same_trunc(const QSeries& other) const;
    int trunc_;
    std::vector<XPoly> coeffs_; // index = q exponent, 0..trunc_
};

} // namespace hooklab
