#include "polycauchy/qcalc.hpp"

#include <stdexcept>

namespace polycauchy {

QParameter::QParameter(Rational value) : value_(std::move(value)) {
    if (!value_->is_positive() || *value_ == Rational(1)) {
        throw std::domain_error("QParameter: q must be positive and distinct from 1 (got " +
                                value_->str() + ")");
    }
}

QParameter QParameter::parse(std::string_view text) {
    if (text == "limit1") return limit_one();
    return QParameter(Rational::parse(text));
}

const Rational& QParameter::value() const {
    if (!value_) throw std::domain_error("QParameter: the q -> 1 limit has no rational value");
    return *value_;
}

std::string QParameter::str() const { return value_ ? value_->str() : "limit1"; }

Rational q_integer(std::size_t x, const QParameter& q) {
    if (q.is_limit_one()) return Rational(static_cast<long>(x));
    Rational acc(0);
    Rational power(1);
    for (std::size_t i = 0; i < x; ++i) {
        acc += power;
        power *= q.value();
    }
    return acc;
}

Rational jackson_integral_monomial(std::size_t m, const Rational& upper, const QParameter& q) {
    if (upper.is_negative()) {
        throw std::domain_error("jackson_integral_monomial: negative upper limit " + upper.str());
    }
    // [m+1]_q > 0 for every admissible q, so the division is always defined.
    return pow(upper, m + 1) / q_integer(m + 1, q);
}

Rational jackson_integral_poly(const Polynomial& p, const Rational& upper, const QParameter& q) {
    Rational acc(0);
    const auto coeffs = p.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        acc += coeffs[i] * jackson_integral_monomial(i, upper, q);
    }
    return acc;
}

}  // namespace polycauchy
