#include "polycauchy/polynomial.hpp"

#include <doctest.h>

#include <vector>

using namespace polycauchy;

TEST_CASE("zero polynomial has degree -1 and trims trailing zeros") {
    const Polynomial zero;
    CHECK(zero.degree() == -1);
    CHECK(zero.coefficient(0) == Rational(0));
    CHECK(zero.coefficient(17) == Rational(0));

    const Polynomial trimmed(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(trimmed.degree() == 0);
    CHECK(trimmed == Polynomial(Rational(1)));

    const Polynomial all_zero(std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(all_zero == zero);
}

TEST_CASE("root product expands correctly") {
    // (z-1)(z-2)(z-3) = z^3 - 6 z^2 + 11 z - 6
    const std::vector<Rational> roots{Rational(1), Rational(2), Rational(3)};
    const Polynomial p = roots_to_poly(roots);
    CHECK(p.degree() == 3);
    CHECK(p.coefficient(0) == Rational(-6));
    CHECK(p.coefficient(1) == Rational(11));
    CHECK(p.coefficient(2) == Rational(-6));
    CHECK(p.coefficient(3) == Rational(1));
    for (const Rational& r : roots) CHECK(p(r) == Rational(0));
    CHECK(p(Rational(4)) == Rational(6));
    CHECK(p.str() == "z^3 - 6*z^2 + 11*z - 6");
}

TEST_CASE("evaluation is a ring homomorphism") {
    const Polynomial p{Rational(1, 2), Rational(-1), Rational(3)};
    const Polynomial q{Rational(2), Rational(0), Rational(0), Rational(1, 5)};
    const Rational at(7, 3);
    CHECK((p + q)(at) == p(at) + q(at));
    CHECK((p - q)(at) == p(at) - q(at));
    CHECK((p * q)(at) == p(at) * q(at));
    CHECK((-p)(at) == -p(at));
    CHECK((Rational(4, 9) * p)(at) == Rational(4, 9) * p(at));
}

TEST_CASE("root product concatenation matches polynomial product") {
    const std::vector<Rational> a{Rational(0), Rational(1, 2)};
    const std::vector<Rational> b{Rational(-3), Rational(5, 7), Rational(2)};
    std::vector<Rational> both = a;
    both.insert(both.end(), b.begin(), b.end());
    CHECK(roots_to_poly(both) == roots_to_poly(a) * roots_to_poly(b));
}

TEST_CASE("monomial constructor") {
    const Polynomial m = Polynomial::monomial(4, Rational(-2, 3));
    CHECK(m.degree() == 4);
    CHECK(m.leading_coefficient() == Rational(-2, 3));
    CHECK(m.coefficient(0) == Rational(0));
    CHECK(m(Rational(2)) == Rational(-32, 3));

    CHECK(Polynomial::monomial(3, Rational(0)) == Polynomial());
}

TEST_CASE("string form covers signs and suppressed terms") {
    CHECK(Polynomial().str() == "0");
    CHECK(Polynomial(Rational(-5, 3)).str() == "-5/3");
    CHECK(Polynomial{Rational(0), Rational(1)}.str() == "z");
    CHECK(Polynomial{Rational(0), Rational(-1)}.str() == "-z");
    CHECK(Polynomial{Rational(-2, 3), Rational(1)}.str() == "z - 2/3");
    CHECK(Polynomial{Rational(0), Rational(1, 2), Rational(0), Rational(-1)}.str() ==
          "-z^3 + 1/2*z");
    CHECK(Polynomial{Rational(1), Rational(1)}.str("t") == "t + 1");
}
