#include "hooklab/xpoly.hpp"

#include <sstream>

namespace hooklab {

mpq_class parse_rational(const std::string& text) {
    mpq_class value;
    if (value.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + text + "'");
    value.canonicalize();
    if (value.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return value;
}

XPoly::XPoly(long value) {
    if (value != 0) terms_.emplace(0, mpq_class(value));
}

XPoly::XPoly(const mpq_class& value) {
    if (value != 0) terms_.emplace(0, value);
}

XPoly::XPoly(const mpz_class& value) {
    if (value != 0) terms_.emplace(0, mpq_class(value));
}

XPoly XPoly::variable() { return monomial(1, 1); }

XPoly XPoly::monomial(const mpq_class& coeff, int exponent) {
    XPoly p;
    if (coeff != 0) p.terms_.emplace(exponent, coeff);
    return p;
}

bool XPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool XPoly::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

int XPoly::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("XPoly: zero polynomial has no exponents");
    return terms_.begin()->first;
}

int XPoly::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("XPoly: zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

mpq_class XPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void XPoly::set(int exponent, mpq_class coeff) {
    if (coeff == 0)
        terms_.erase(exponent);
    else
        terms_[exponent] = std::move(coeff);
}

XPoly& XPoly::operator+=(const XPoly& other) {
    for (const auto& [e, c] : other.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& other) {
    for (const auto& [e, c] : other.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

XPoly XPoly::operator-() const {
    XPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            auto it = out.terms_.find(ea + eb);
            if (it == out.terms_.end()) {
                out.terms_.emplace(ea + eb, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

XPoly& XPoly::operator*=(const XPoly& other) {
    *this = *this * other;
    return *this;
}

XPoly XPoly::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("XPoly::pow: negative exponent");
    XPoly result(1);
    XPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

XPoly XPoly::derivative() const {
    XPoly out;
    for (const auto& [e, c] : terms_)
        if (e != 0) out.terms_.emplace(e - 1, mpq_class(e) * c);
    return out;
}

mpq_class XPoly::eval(const mpq_class& value) const {
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) {
        if (e >= 0) {
            mpq_class p = 1;
            for (int i = 0; i < e; ++i) p *= value;
            total += c * p;
        } else {
            if (value == 0)
                throw std::domain_error("XPoly::eval: negative exponent at x = 0");
            mpq_class p = 1;
            for (int i = 0; i < -e; ++i) p *= value;
            total += c / p;
        }
    }
    return total;
}

mpq_class XPoly::eval_at_one() const {
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

std::string XPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << (c > 0 ? " + " : " - ");
        mpq_class mag = first ? c : mpq_class(abs(c));
        first = false;
        if (e == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << '*';
            out << 'x';
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

} // namespace hooklab
