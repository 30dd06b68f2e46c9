#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hooklab {

/// Parses "n" or "n/d" into an exact rational (denominator > 0, reduced).
mpq_class parse_rational(const std::string& text);

/// A Laurent polynomial in x with exact rational coefficients. Exponents may
/// be negative; zero coefficients are never stored. This is the coefficient
/// ring of QSeries: the identities under test have integer coefficients, but
/// intermediate values (1/x prefactors, rational substitution points) need
/// the larger ring.
class XPoly {
public:
    XPoly() = default;
    XPoly(long value);
    XPoly(const mpq_class& value);
    XPoly(const mpz_class& value);

    /// The monomial x.
    static XPoly variable();
    static XPoly monomial(const mpq_class& coeff, int exponent);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// True when every coefficient has denominator 1.
    bool is_integral() const;

    int min_exponent() const; // throws std::logic_error on zero
    int max_exponent() const;

    mpq_class coeff(int exponent) const;
    const std::map<int, mpq_class>& terms() const noexcept { return terms_; }

    XPoly& operator+=(const XPoly& other);
    XPoly& operator-=(const XPoly& other);
    XPoly operator-() const;
    XPoly& operator*=(const XPoly& other);
    XPoly pow(int exponent) const; // exponent >= 0

    XPoly derivative() const;

    /// Substitutes a rational value for x. Negative exponents require
    /// value != 0.
    mpq_class eval(const mpq_class& value) const;
    mpq_class eval_at_one() const;

    std::string to_string() const;

    bool operator==(const XPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const XPoly& other) const { return !(*this == other); }

private:
    void set(int exponent, mpq_class coeff);
    std::map<int, mpq_class> terms_;

    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
};

} // namespace hooklab
