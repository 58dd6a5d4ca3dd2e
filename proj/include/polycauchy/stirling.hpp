#pragma once

#include "polycauchy/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace polycauchy {

/// Parameter tuple (alpha_0, alpha_1, ...). Operations that consume the
/// first n entries demand length >= n; there is no implicit continuation.
using ParameterSequence = std::vector<Rational>;

struct StirlingRow {
    std::size_t n = 0;
    std::vector<BigInt> values;  // index m = 0..n
};

/// Unsigned Stirling number of the first kind [n m]: the number of
/// permutations of n elements with exactly m cycles. Computed by the
/// triangle recurrence [n+1, m] = [n, m-1] + n*[n, m] with per-row
/// memoization; safe to call from several threads. Throws if m > n.
BigInt unsigned_stirling1(std::size_t n, std::size_t m);

/// Full row [n 0], ..., [n n].
StirlingRow stirling_row(std::size_t n);

struct MaxIndex {
    std::size_t index = 0;
    bool tied = false;
};

/// Position of the maximal entry of row n over m = 1..n. Ties resolve to
/// the smallest index and are reported through `tied`. Requires n >= 1.
MaxIndex max_stirling_index(std::size_t n);

/// Multiparameter Stirling number of the first kind: the coefficient of
/// t^m in (t - alpha_0)(t - alpha_1)...(t - alpha_{n-1}). Requires
/// A.size() >= n and m <= n.
Rational multiparam_stirling1(std::size_t n, std::size_t m, const ParameterSequence& A);

/// All coefficients of the degree-n root product at once, index m = 0..n.
/// The product over the A-prefix is formed once per call.
std::vector<Rational> multiparam_stirling_row(std::size_t n, const ParameterSequence& A);

}  // namespace polycauchy
