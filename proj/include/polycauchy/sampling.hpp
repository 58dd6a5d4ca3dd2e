#pragma once

#include "polycauchy/qcalc.hpp"
#include "polycauchy/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace polycauchy {

/// Deterministic pseudo-random source for the verification drivers.
/// mt19937_64 with an explicit seed and hand-rolled bounded draws, so a
/// given seed produces the same stream on every platform. The modulo bias
/// is irrelevant at these ranges.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_below(std::uint64_t bound);
    long next_in(long lo, long hi);  // inclusive bounds

private:
    std::mt19937_64 engine_;
};

/// Numerator in [num_lo, num_hi], denominator in [1, den_hi].
Rational random_rational(DeterministicRng& rng, long num_lo, long num_hi, long den_hi);

/// Strictly positive: numerator in [1, num_hi], denominator in [1, den_hi].
Rational random_positive_rational(DeterministicRng& rng, long num_hi, long den_hi);

/// q = p/r with 1 <= p < r <= 9, so 0 < q < 1 always.
QParameter random_q_in_unit_interval(DeterministicRng& rng);

/// Positive and exactly log-convex: built from a non-decreasing sequence of
/// positive consecutive ratios.
std::vector<Rational> random_log_convex_sequence(DeterministicRng& rng, std::size_t length);

}  // namespace polycauchy
