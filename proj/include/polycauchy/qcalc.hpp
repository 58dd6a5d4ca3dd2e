#pragma once

#include "polycauchy/polynomial.hpp"
#include "polycauchy/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace polycauchy {

/// Deformation parameter for the q-calculus: either an exact rational value
/// (positive, distinct from 1) or the q -> 1 limit, where every q-quantity
/// takes its classical value. Values above 1 are accepted; integrals there
/// are defined by the same closed form rather than a convergent series, the
/// "formal antiderivative" regime reported by formal_regime().
class QParameter {
public:
    static QParameter limit_one() { return QParameter(); }
    explicit QParameter(Rational value);

    /// "limit1" or the rational grammar accepted by Rational::parse.
    static QParameter parse(std::string_view text);

    bool is_limit_one() const { return !value_.has_value(); }
    const Rational& value() const;
    bool formal_regime() const { return value_ && *value_ > Rational(1); }

    std::string str() const;

private:
    QParameter() = default;
    std::optional<Rational> value_;
};

/// q-integer [x]_q = 1 + q + ... + q^(x-1); [0]_q = 0, and the q -> 1 limit
/// gives x itself.
Rational q_integer(std::size_t x, const QParameter& q);

/// Jackson integral of t^m from 0 to upper: upper^(m+1) / [m+1]_q.
/// Requires upper >= 0.
Rational jackson_integral_monomial(std::size_t m, const Rational& upper, const QParameter& q);

/// Jackson integral of a polynomial, term by term.
Rational jackson_integral_poly(const Polynomial& p, const Rational& upper, const QParameter& q);

}  // namespace polycauchy
