#pragma once

#include "polycauchy/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polycauchy {

/// Dense univariate polynomial over Rational. Index i holds the coefficient
/// of x^i; trailing zero coefficients are trimmed, so a nonzero polynomial
/// always has a nonzero leading coefficient. The zero polynomial stores no
/// coefficients and reports degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const Rational& constant);
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial monomial(std::size_t degree, const Rational& coefficient = Rational(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Rational> coefficients() const { return coeffs_; }

    /// Coefficient of x^i; zero beyond the degree.
    Rational coefficient(std::size_t i) const;
    Rational leading_coefficient() const;

    /// Exact evaluation by Horner's rule.
    Rational operator()(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial p, const Rational& s) { p *= s; return p; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { p *= s; return p; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form, highest degree first, e.g. "z^3 - 6*z^2 + 11*z - 6".
    std::string str(std::string_view variable = "z") const;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic polynomial with exactly the given roots (with multiplicity), built
/// by multiplying one linear factor at a time. The empty list gives the
/// constant 1.
Polynomial roots_to_poly(std::span<const Rational> roots);

}  // namespace polycauchy
