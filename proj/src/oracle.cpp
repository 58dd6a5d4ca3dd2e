#include "polycauchy/oracle.hpp"

#include <stdexcept>
#include <string>

namespace polycauchy {

const Polynomial MultivariatePolynomial::zero_{};

MultivariatePolynomial MultivariatePolynomial::constant(std::size_t arity, const Polynomial& c) {
    MultivariatePolynomial p(arity);
    p.add_term(std::vector<unsigned>(arity, 0), c);
    return p;
}

void MultivariatePolynomial::add_term(const std::vector<unsigned>& exponents,
                                      const Polynomial& coeff) {
    if (exponents.size() != arity_) {
        throw std::domain_error("MultivariatePolynomial: exponent vector has " +
                                std::to_string(exponents.size()) + " entries, arity is " +
                                std::to_string(arity_));
    }
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponents, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultivariatePolynomial MultivariatePolynomial::operator*(const MultivariatePolynomial& o) const {
    if (arity_ != o.arity_) {
        throw std::domain_error("MultivariatePolynomial: arity mismatch in product");
    }
    MultivariatePolynomial out(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<unsigned> e(arity_);
            for (std::size_t v = 0; v < arity_; ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultivariatePolynomial MultivariatePolynomial::integrate_first_variable(
    const Rational& upper, const QParameter& q) const {
    if (arity_ == 0) {
        throw std::domain_error("MultivariatePolynomial: no variable left to integrate");
    }
    MultivariatePolynomial out(arity_ - 1);
    for (const auto& [e, c] : terms_) {
        const Rational factor = jackson_integral_monomial(e[0], upper, q);
        const std::vector<unsigned> rest(e.begin() + 1, e.end());
        out.add_term(rest, c * factor);
    }
    return out;
}

const Polynomial& MultivariatePolynomial::constant_term() const {
    if (arity_ != 0) {
        throw std::domain_error("MultivariatePolynomial: constant_term needs arity 0");
    }
    const auto it = terms_.find(std::vector<unsigned>{});
    return it == terms_.end() ? zero_ : it->second;
}

Rational oracle_nested_integration(const FamilySpec& spec, const Rational& z,
                                   const OracleBudget& budget) {
    if (spec.n > budget.max_n || spec.k > budget.max_k) {
        throw std::domain_error(
            "oracle_nested_integration: budget is n <= " + std::to_string(budget.max_n) +
            ", k <= " + std::to_string(budget.max_k) + " (requested n = " +
            std::to_string(spec.n) + ", k = " + std::to_string(spec.k) + ")");
    }
    if (spec.k == 0) throw std::domain_error("oracle_nested_integration: requires k >= 1");
    if (spec.L.k() != spec.k) {
        throw std::domain_error("oracle_nested_integration: length vector has " +
                                std::to_string(spec.L.k()) + " entries, k = " +
                                std::to_string(spec.k));
    }
    if (spec.A.size() < spec.n) {
        throw std::domain_error("oracle_nested_integration: parameter tuple has " +
                                std::to_string(spec.A.size()) + " entries, n = " +
                                std::to_string(spec.n) + " requires at least n");
    }

    const std::size_t k = spec.k;
    MultivariatePolynomial integrand = MultivariatePolynomial::constant(k, Polynomial{Rational(1)});
    const std::vector<unsigned> all_ones(k, 1);
    const std::vector<unsigned> all_zero(k, 0);
    for (std::size_t i = 0; i < spec.n; ++i) {
        MultivariatePolynomial factor(k);
        if (spec.kind == Kind::first) {
            // x_1...x_k - alpha_i - z
            factor.add_term(all_ones, Polynomial{Rational(1)});
            factor.add_term(all_zero, Polynomial{-spec.A[i], Rational(-1)});
        } else {
            // -x_1...x_k - alpha_i + z
            factor.add_term(all_ones, Polynomial{Rational(-1)});
            factor.add_term(all_zero, Polynomial{-spec.A[i], Rational(1)});
        }
        integrand = integrand * factor;
    }

    for (std::size_t j = 0; j < k; ++j) {
        integrand = integrand.integrate_first_variable(spec.L.lengths()[j], spec.q);
    }
    return integrand.constant_term()(z);
}

}  // namespace polycauchy
