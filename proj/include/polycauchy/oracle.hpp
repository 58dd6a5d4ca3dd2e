#pragma once

#include "polycauchy/families.hpp"

#include <map>
#include <vector>

namespace polycauchy {

/// Cost ceiling for the integration oracle. Exceeding it is refused
/// outright rather than attempted.
struct OracleBudget {
    std::size_t max_n = 8;
    unsigned max_k = 3;
};

/// Sparse polynomial in x_1..x_k whose coefficients are polynomials in z.
/// Every variable is carried explicitly even when exponents coincide; this
/// representation is the reference implementation's whole point, so no
/// structural shortcut through the product (x_1...x_k) is taken.
class MultivariatePolynomial {
public:
    explicit MultivariatePolynomial(std::size_t arity) : arity_(arity) {}

    static MultivariatePolynomial constant(std::size_t arity, const Polynomial& c);

    std::size_t arity() const { return arity_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds coeff * x^exponents into the polynomial. exponents.size() must
    /// equal the arity.
    void add_term(const std::vector<unsigned>& exponents, const Polynomial& coeff);

    MultivariatePolynomial operator*(const MultivariatePolynomial& o) const;

    /// Jackson-integrates the first remaining variable over [0, upper],
    /// term by term; the result has arity one less.
    MultivariatePolynomial integrate_first_variable(const Rational& upper,
                                                    const QParameter& q) const;

    /// The value of an arity-0 polynomial (a plain polynomial in z).
    const Polynomial& constant_term() const;

private:
    std::size_t arity_;
    std::map<std::vector<unsigned>, Polynomial> terms_;
    static const Polynomial zero_;
};

/// Evaluates the defining nested Jackson integral directly: expands the
/// integrand product
///   first kind:  prod_i (x_1...x_k - alpha_i - z)
///   second kind: prod_i (-x_1...x_k - alpha_i + z)
/// as a full k-variable polynomial and integrates one variable at a time,
/// innermost (x_1, limit l_1) first. Shares no code with the Stirling-sum
/// closed forms. Throws when the budget is exceeded.
Rational oracle_nested_integration(const FamilySpec& spec, const Rational& z,
                                   const OracleBudget& budget = {});

}  // namespace polycauchy
