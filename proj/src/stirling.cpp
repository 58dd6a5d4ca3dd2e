#include "polycauchy/stirling.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace polycauchy {

namespace {

std::mutex triangle_mutex;

// triangle[n][m] = [n m]; row 0 is {1}. Guarded by triangle_mutex.
std::vector<std::vector<BigInt>>& triangle() {
    static std::vector<std::vector<BigInt>> rows = {{BigInt(1)}};
    return rows;
}

// Caller holds triangle_mutex.
void grow_to(std::size_t n) {
    auto& rows = triangle();
    while (rows.size() <= n) {
        const std::size_t r = rows.size();  // row being built
        const auto& prev = rows.back();     // row r-1, indices 0..r-1
        std::vector<BigInt> row(r + 1);
        row[0] = 0;
        for (std::size_t m = 1; m <= r; ++m) {
            BigInt v = prev[m - 1];
            if (m < r) v += BigInt(r - 1) * prev[m];
            row[m] = std::move(v);
        }
        rows.push_back(std::move(row));
    }
}

}  // namespace

BigInt unsigned_stirling1(std::size_t n, std::size_t m) {
    if (m > n) {
        throw std::domain_error("unsigned_stirling1: m = " + std::to_string(m) +
                                " exceeds n = " + std::to_string(n));
    }
    std::lock_guard<std::mutex> lock(triangle_mutex);
    grow_to(n);
    return triangle()[n][m];
}

StirlingRow stirling_row(std::size_t n) {
    std::lock_guard<std::mutex> lock(triangle_mutex);
    grow_to(n);
    return StirlingRow{n, triangle()[n]};
}

MaxIndex max_stirling_index(std::size_t n) {
    if (n == 0) throw std::domain_error("max_stirling_index: requires n >= 1");
    const StirlingRow row = stirling_row(n);
    std::size_t best = 1;
    bool tied = false;
    for (std::size_t m = 2; m <= n; ++m) {
        if (row.values[m] > row.values[best]) {
            best = m;
            tied = false;
        } else if (row.values[m] == row.values[best]) {
            tied = true;
        }
    }
    return MaxIndex{best, tied};
}

std::vector<Rational> multiparam_stirling_row(std::size_t n, const ParameterSequence& A) {
    if (A.size() < n) {
        throw std::domain_error("multiparam_stirling_row: parameter tuple has " +
                                std::to_string(A.size()) + " entries, n = " + std::to_string(n) +
                                " requires at least n");
    }
    const Polynomial p = roots_to_poly(std::span<const Rational>(A.data(), n));
    // monic of degree n: exactly n+1 coefficients
    const auto c = p.coefficients();
    return std::vector<Rational>(c.begin(), c.end());
}

Rational multiparam_stirling1(std::size_t n, std::size_t m, const ParameterSequence& A) {
    if (m > n) {
        throw std::domain_error("multiparam_stirling1: m = " + std::to_string(m) +
                                " exceeds n = " + std::to_string(n));
    }
    return multiparam_stirling_row(n, A)[m];
}

}  // namespace polycauchy
