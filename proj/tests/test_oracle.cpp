#include "polycauchy/oracle.hpp"

#include "polycauchy/sampling.hpp"

#include <doctest.h>

using namespace polycauchy;

namespace {

FamilySpec make_spec(std::size_t n, unsigned k, ParameterSequence A, LengthVector L,
                     QParameter q, Kind kind) {
    FamilySpec s;
    s.n = n;
    s.k = k;
    s.A = std::move(A);
    s.L = std::move(L);
    s.q = std::move(q);
    s.kind = kind;
    return s;
}

}  // namespace

TEST_CASE("double integral of x1 x2 over the unit square") {
    const FamilySpec s = make_spec(1, 2, {Rational(0)}, LengthVector::ones(2),
                                   QParameter::limit_one(), Kind::first);
    CHECK(oracle_nested_integration(s, Rational(0)) == Rational(1, 4));
}

TEST_CASE("second kind single integral by hand") {
    // integrand (-x)(-x - 1) = x^2 + x over [0, 1] gives 1/3 + 1/2
    const FamilySpec s = make_spec(2, 1, {Rational(0), Rational(1)}, LengthVector::ones(1),
                                   QParameter::limit_one(), Kind::second);
    CHECK(oracle_nested_integration(s, Rational(0)) == Rational(5, 6));
}

TEST_CASE("empty product integrates the constant 1") {
    const LengthVector L(std::vector<Rational>{Rational(3, 2), Rational(2)});
    const FamilySpec s = make_spec(0, 2, {}, L, QParameter::limit_one(), Kind::first);
    CHECK(oracle_nested_integration(s, Rational(7)) == Rational(3));
}

TEST_CASE("budget is refused up front") {
    ParameterSequence A;
    for (long j = 0; j < 9; ++j) A.push_back(Rational(j));
    const FamilySpec s =
        make_spec(9, 1, A, LengthVector::ones(1), QParameter::limit_one(), Kind::first);
    CHECK_THROWS_WITH_AS(oracle_nested_integration(s, Rational(0)),
                         doctest::Contains("budget"), std::domain_error);

    const FamilySpec wide = make_spec(1, 4, {Rational(0)}, LengthVector::ones(4),
                                      QParameter::limit_one(), Kind::first);
    CHECK_THROWS_AS(oracle_nested_integration(wide, Rational(0)), std::domain_error);
}

TEST_CASE("closed form agrees with the nested integral everywhere in budget") {
    DeterministicRng rng(411);
    for (std::size_t n = 0; n <= 6; ++n) {
        for (unsigned k = 1; k <= 3; ++k) {
            for (unsigned trial = 0; trial < 5; ++trial) {
                std::vector<Rational> lengths;
                for (unsigned j = 0; j < k; ++j) {
                    lengths.push_back(random_positive_rational(rng, 3, 2));
                }
                ParameterSequence A;
                for (std::size_t i = 0; i < n; ++i) {
                    A.push_back(random_rational(rng, -2, 3, 2));
                }
                const QParameter q = random_q_in_unit_interval(rng);
                const Rational z = random_rational(rng, -2, 2, 2);
                const LengthVector L(lengths);

                const Rational first_closed = q_multiparam_poly_first(n, k, L, A, q)(z);
                const Rational first_oracle = oracle_nested_integration(
                    make_spec(n, k, A, L, q, Kind::first), z);
                CHECK(first_closed == first_oracle);

                const Rational second_closed = q_multiparam_poly_second(n, k, L, A, q)(z);
                const Rational second_oracle = oracle_nested_integration(
                    make_spec(n, k, A, L, q, Kind::second), z);
                CHECK(second_closed == second_oracle);
            }
        }
    }
}

TEST_CASE("the q -> 1 limit of the oracle is the ordinary iterated integral") {
    // first kind, n = 2, k = 1, A = (0, 2), z = 0 over [0, 1]:
    // integral of x(x - 2) = 1/3 - 1
    const FamilySpec s = make_spec(2, 1, {Rational(0), Rational(2)}, LengthVector::ones(1),
                                   QParameter::limit_one(), Kind::first);
    CHECK(oracle_nested_integration(s, Rational(0)) == Rational(-2, 3));
}

TEST_CASE("multivariate scaffolding behaves") {
    MultivariatePolynomial p(2);
    p.add_term({1, 0}, Polynomial(Rational(2)));
    p.add_term({0, 1}, Polynomial(Rational(1)));
    MultivariatePolynomial q(2);
    q.add_term({1, 0}, Polynomial(Rational(1)));
    q.add_term({0, 0}, Polynomial{Rational(0), Rational(-1)});  // -z

    const MultivariatePolynomial prod = p * q;
    // (2 x1 + x2)(x1 - z) = 2 x1^2 + x1 x2 - 2 z x1 - z x2
    CHECK(prod.term_count() == 4);

    const MultivariatePolynomial once =
        prod.integrate_first_variable(Rational(1), QParameter::limit_one());
    CHECK(once.arity() == 1);
    const MultivariatePolynomial twice =
        once.integrate_first_variable(Rational(1), QParameter::limit_one());
    // 2/3 + 1/4 - z - z/2
    CHECK(twice.constant_term() == Polynomial{Rational(11, 12), Rational(-3, 2)});

    MultivariatePolynomial arity3(3);
    CHECK_THROWS_AS(p * arity3, std::domain_error);
    CHECK_THROWS_AS(p.add_term({1}, Polynomial(Rational(1))), std::domain_error);
    CHECK_THROWS_AS(p.constant_term(), std::domain_error);
}
