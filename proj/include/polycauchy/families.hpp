#pragma once

#include "polycauchy/qcalc.hpp"
#include "polycauchy/stirling.hpp"

#include <span>
#include <vector>

namespace polycauchy {

enum class Kind { first, second };

/// Upper integration limits (l_1, ..., l_k). Always nonempty with every
/// entry strictly positive; construction validates.
class LengthVector {
public:
    explicit LengthVector(std::vector<Rational> lengths);
    static LengthVector ones(unsigned k);

    unsigned k() const { return static_cast<unsigned>(lengths_.size()); }
    std::span<const Rational> lengths() const { return lengths_; }
    Rational product() const;

private:
    std::vector<Rational> lengths_;
};

/// Everything identifying one member of the q-multiparameter family.
struct FamilySpec {
    std::size_t n = 0;
    unsigned k = 1;
    ParameterSequence A;
    LengthVector L = LengthVector::ones(1);
    QParameter q = QParameter::limit_one();
    Kind kind = Kind::first;
};

/// C(m, i) by the multiplicative formula, exact at every step; 0 when i > m.
BigInt binomial(std::size_t m, std::size_t i);

/// Poly-Cauchy number of the first kind,
///   c_n^(k) = sum_m (-1)^(n-m) [n m] / (m+1)^k,
/// and of the second kind,
///   chat_n^(k) = (-1)^n sum_m [n m] / (m+1)^k.
/// Both require k >= 1.
Rational poly_cauchy_first(std::size_t n, unsigned k);
Rational poly_cauchy_second(std::size_t n, unsigned k);

/// Multiparameter variants: the Stirling weights become the coefficients of
/// the root product over (alpha_0, ..., alpha_{n-1}).
Rational multiparam_poly_cauchy_first(std::size_t n, unsigned k, const ParameterSequence& A);
Rational multiparam_poly_cauchy_second(std::size_t n, unsigned k, const ParameterSequence& A);

/// q-multiparameter poly-Cauchy polynomial in z, degree exactly n with
/// leading coefficient (-1)^n * l_1...l_k (first kind) or +l_1...l_k
/// (second kind):
///   sum_m S1(n,m,A) sum_i C(m,i) (-z)^i (l_1...l_k)^(m-i+1) / [m-i+1]_q^k,
/// with (-1)^m on the Stirling weight for the second kind.
Polynomial q_multiparam_poly_first(std::size_t n, unsigned k, const LengthVector& L,
                                   const ParameterSequence& A, const QParameter& q);
Polynomial q_multiparam_poly_second(std::size_t n, unsigned k, const LengthVector& L,
                                    const ParameterSequence& A, const QParameter& q);

/// Batch drivers: values for n = 0..n_max in order. The multiparameter
/// overload needs A.size() >= n_max; the q overload evaluates the
/// polynomial at z.
std::vector<Rational> sequence(Kind kind, unsigned k, std::size_t n_max);
std::vector<Rational> sequence(Kind kind, unsigned k, const ParameterSequence& A,
                               std::size_t n_max);
std::vector<Rational> sequence(Kind kind, unsigned k, const LengthVector& L,
                               const ParameterSequence& A, const QParameter& q,
                               const Rational& z, std::size_t n_max);

// ---- parameter tuple generators ----

enum class PlateauCase { one, two };

/// (0, 1, 2, ..., count-1): the tuple that reduces every multiparameter
/// quantity to its classical value.
ParameterSequence classical_parameters(std::size_t count);

/// alpha_i = i * rho.
ParameterSequence arithmetic_parameters(const Rational& rho, std::size_t count);

/// (0, head..., tail, tail, ...) padded to `count`, where the tail value is
/// 1 for case one and 0 for case two. head supplies alpha_1..alpha_l.
ParameterSequence plateau_parameters(PlateauCase pcase, std::span<const Rational> head,
                                     std::size_t count);

}  // namespace polycauchy
