#include "polycauchy/sampling.hpp"

#include <stdexcept>

namespace polycauchy {

std::uint64_t DeterministicRng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::domain_error("DeterministicRng: bound must be positive");
    return engine_() % bound;
}

long DeterministicRng::next_in(long lo, long hi) {
    if (hi < lo) throw std::domain_error("DeterministicRng: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_below(span));
}

Rational random_rational(DeterministicRng& rng, long num_lo, long num_hi, long den_hi) {
    return Rational(rng.next_in(num_lo, num_hi), rng.next_in(1, den_hi));
}

Rational random_positive_rational(DeterministicRng& rng, long num_hi, long den_hi) {
    return Rational(rng.next_in(1, num_hi), rng.next_in(1, den_hi));
}

QParameter random_q_in_unit_interval(DeterministicRng& rng) {
    const long den = rng.next_in(2, 9);
    const long num = rng.next_in(1, den - 1);
    return QParameter(Rational(num, den));
}

std::vector<Rational> random_log_convex_sequence(DeterministicRng& rng, std::size_t length) {
    std::vector<Rational> z;
    z.reserve(length);
    if (length == 0) return z;
    z.push_back(random_positive_rational(rng, 5, 3));
    Rational ratio = random_positive_rational(rng, 4, 3);
    for (std::size_t i = 1; i < length; ++i) {
        z.push_back(z.back() * ratio);
        // non-decreasing ratios keep z_j^2 <= z_{j-1} z_{j+1} exact
        ratio += Rational(rng.next_in(0, 3), rng.next_in(1, 3));
    }
    return z;
}

}  // namespace polycauchy
