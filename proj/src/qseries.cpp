#include "hooklab/qseries.hpp"

#include <sstream>

namespace hooklab {

QSeries::QSeries(int trunc) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("QSeries: truncation must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(trunc) + 1);
}

QSeries QSeries::one(int trunc) {
    QSeries s(trunc);
    s.coeffs_[0] = XPoly(1);
    return s;
}

QSeries QSeries::monomial(const XPoly& coeff, int q_exp, int trunc) {
    if (q_exp < 0) throw std::invalid_argument("QSeries::monomial: negative q exponent");
    QSeries s(trunc);
    if (q_exp <= trunc) s.coeffs_[static_cast<std::size_t>(q_exp)] = coeff;
    return s;
}

const XPoly& QSeries::coeff(int q_exp) const {
    if (q_exp < 0 || q_exp > trunc_)
        throw std::out_of_range("QSeries::coeff: exponent outside truncation window");
    return coeffs_[static_cast<std::size_t>(q_exp)];
}

void QSeries::set_coeff(int q_exp, XPoly value) {
    if (q_exp < 0 || q_exp > trunc_)
        throw std::out_of_range("QSeries::set_coeff: exponent outside truncation window");
    coeffs_[static_cast<std::size_t>(q_exp)] = std::move(value);
}

void QSeries::add_term(int q_exp, const XPoly& value) {
    if (q_exp < 0) throw std::invalid_argument("QSeries::add_term: negative q exponent");
    if (q_exp <= trunc_) coeffs_[static_cast<std::size_t>(q_exp)] += value;
}

void QSeries::check_same_trunc(const QSeries& other) const {
    if (trunc_ != other.trunc_)
        throw TruncationMismatch("QSeries: truncation mismatch (" + std::to_string(trunc_) +
                                 " vs " + std::to_string(other.trunc_) + ")");
}

QSeries& QSeries::operator+=(const QSeries& other) {
    check_same_trunc(other);
    for (int n = 0; n <= trunc_; ++n)
        coeffs_[static_cast<std::size_t>(n)] += other.coeffs_[static_cast<std::size_t>(n)];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
    check_same_trunc(other);
    for (int n = 0; n <= trunc_; ++n)
        coeffs_[static_cast<std::size_t>(n)] -= other.coeffs_[static_cast<std::size_t>(n)];
    return *this;
}

QSeries QSeries::operator-() const {
    QSeries out(trunc_);
    for (int n = 0; n <= trunc_; ++n)
        out.coeffs_[static_cast<std::size_t>(n)] = -coeffs_[static_cast<std::size_t>(n)];
    return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    a.check_same_trunc(b);
    QSeries out(a.trunc_);
    for (int i = 0; i <= a.trunc_; ++i) {
        const XPoly& ca = a.coeffs_[static_cast<std::size_t>(i)];
        if (ca.is_zero()) continue;
        for (int j = 0; i + j <= a.trunc_; ++j) {
            const XPoly& cb = b.coeffs_[static_cast<std::size_t>(j)];
            if (cb.is_zero()) continue;
            out.coeffs_[static_cast<std::size_t>(i + j)] += ca * cb;
        }
    }
    return out;
}

QSeries& QSeries::scale(const XPoly& c) {
    for (XPoly& coeff : coeffs_) coeff *= c;
    return *this;
}

QSeries QSeries::scaled(const XPoly& c) const {
    QSeries out = *this;
    out.scale(c);
    return out;
}

QSeries QSeries::shift_q(int k) const {
    if (k < 0) throw std::invalid_argument("QSeries::shift_q: negative shift");
    QSeries out(trunc_);
    for (int n = 0; n + k <= trunc_; ++n)
        out.coeffs_[static_cast<std::size_t>(n + k)] = coeffs_[static_cast<std::size_t>(n)];
    return out;
}

QSeries QSeries::inverse() const {
    const XPoly& head = coeffs_[0];
    if (head.is_zero() || !head.is_constant())
        throw std::domain_error("QSeries::inverse: constant term must be a nonzero x-free unit");
    QSeries g(trunc_);
    g.coeffs_[0] = XPoly(mpq_class(1) / head.coeff(0));
    // Newton iteration g <- g(2 - f g); the number of correct coefficients
    // doubles each round.
    const QSeries two = QSeries::one(trunc_) + QSeries::one(trunc_);
    for (int correct = 1; correct <= trunc_; correct *= 2) g = g * (two - *this * g);
    return g;
}

QSeries QSeries::pow(int exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    QSeries result = QSeries::one(trunc_);
    QSeries base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        if (exponent >>= 1) base *= base;
    }
    return result;
}

QSeries QSeries::substitute_q_power(int t, int new_trunc) const {
    if (t < 1) throw std::invalid_argument("QSeries::substitute_q_power: t must be >= 1");
    if (static_cast<long long>(trunc_) * t + t - 1 < new_trunc)
        throw std::invalid_argument("QSeries::substitute_q_power: source truncation too small");
    QSeries out(new_trunc);
    for (int n = 0; n <= trunc_ && static_cast<long long>(n) * t <= new_trunc; ++n)
        out.coeffs_[static_cast<std::size_t>(n * t)] = coeffs_[static_cast<std::size_t>(n)];
    return out;
}

QSeries QSeries::eval_x(const mpq_class& value) const {
    QSeries out(trunc_);
    for (int n = 0; n <= trunc_; ++n)
        out.coeffs_[static_cast<std::size_t>(n)] =
            XPoly(coeffs_[static_cast<std::size_t>(n)].eval(value));
    return out;
}

QSeries QSeries::x_derivative_at_one() const {
    if (has_negative_x_powers())
        throw std::domain_error("QSeries::x_derivative_at_one: negative x-powers present");
    QSeries out(trunc_);
    for (int n = 0; n <= trunc_; ++n)
        out.coeffs_[static_cast<std::size_t>(n)] =
            XPoly(coeffs_[static_cast<std::size_t>(n)].derivative().eval_at_one());
    return out;
}

bool QSeries::has_negative_x_powers() const {
    for (const XPoly& c : coeffs_)
        if (!c.is_zero() && c.min_exponent() < 0) return true;
    return false;
}

bool QSeries::is_x_free() const {
    for (const XPoly& c : coeffs_)
        if (!c.is_constant()) return false;
    return true;
}

bool QSeries::is_zero() const {
    for (const XPoly& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

std::vector<QSeries::Term> QSeries::terms() const {
    std::vector<Term> out;
    for (int n = 0; n <= trunc_; ++n)
        for (const auto& [x_exp, c] : coeffs_[static_cast<std::size_t>(n)].terms())
            out.push_back({n, x_exp, c});
    return out;
}

std::string QSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const Term& term : terms()) {
        mpq_class mag = term.coeff;
        if (!first) {
            out << (mag > 0 ? " + " : " - ");
            mag = abs(mag);
        }
        first = false;
        const bool has_var = term.x_exp != 0 || term.q_exp != 0;
        if (!has_var || mag != 1) {
            out << mag;
            if (has_var) out << '*';
        }
        if (term.x_exp != 0) {
            out << 'x';
            if (term.x_exp != 1) out << '^' << term.x_exp;
            if (term.q_exp != 0) out << '*';
        }
        if (term.q_exp != 0) {
            out << 'q';
            if (term.q_exp != 1) out << '^' << term.q_exp;
        }
    }
    if (first) out << '0';
    return out.str();
}

} // namespace hooklab
