#include "polycauchy/families.hpp"

#include <stdexcept>
#include <string>

namespace polycauchy {

LengthVector::LengthVector(std::vector<Rational> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.empty()) throw std::domain_error("LengthVector: needs at least one entry");
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        if (!lengths_[i].is_positive()) {
            throw std::domain_error("LengthVector: l_" + std::to_string(i + 1) + " = " +
                                    lengths_[i].str() + " is not positive");
        }
    }
}

LengthVector LengthVector::ones(unsigned k) {
    if (k == 0) throw std::domain_error("LengthVector: needs at least one entry");
    return LengthVector(std::vector<Rational>(k, Rational(1)));
}

Rational LengthVector::product() const {
    Rational p(1);
    for (const auto& l : lengths_) p *= l;
    return p;
}

BigInt binomial(std::size_t m, std::size_t i) {
    if (i > m) return BigInt(0);
    if (m - i < i) i = m - i;
    BigInt r(1);
    for (std::size_t t = 1; t <= i; ++t) {
        r *= BigInt(m - i + t);
        r /= BigInt(t);  // exact: r is C(m-i+t, t) after this step
    }
    return r;
}

namespace {

void require_order(unsigned k, const char* who) {
    if (k == 0) throw std::domain_error(std::string(who) + ": requires k >= 1");
}

Rational reciprocal_power(std::size_t m, unsigned k) {
    return Rational(1) / pow(Rational(static_cast<long>(m + 1)), k);
}

}  // namespace

Rational poly_cauchy_first(std::size_t n, unsigned k) {
    require_order(k, "poly_cauchy_first");
    const StirlingRow row = stirling_row(n);
    Rational acc(0);
    for (std::size_t m = 0; m <= n; ++m) {
        if (row.values[m] == 0) continue;
        const Rational term = Rational(row.values[m]) * reciprocal_power(m, k);
        if ((n - m) % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

Rational poly_cauchy_second(std::size_t n, unsigned k) {
    require_order(k, "poly_cauchy_second");
    const StirlingRow row = stirling_row(n);
    Rational acc(0);
    for (std::size_t m = 0; m <= n; ++m) {
        if (row.values[m] == 0) continue;
        acc += Rational(row.values[m]) * reciprocal_power(m, k);
    }
    return n % 2 == 0 ? acc : -acc;
}

Rational multiparam_poly_cauchy_first(std::size_t n, unsigned k, const ParameterSequence& A) {
    require_order(k, "multiparam_poly_cauchy_first");
    const std::vector<Rational> s1 = multiparam_stirling_row(n, A);
    Rational acc(0);
    for (std::size_t m = 0; m <= n; ++m) {
        if (s1[m].is_zero()) continue;
        acc += s1[m] * reciprocal_power(m, k);
    }
    return acc;
}

Rational multiparam_poly_cauchy_second(std::size_t n, unsigned k, const ParameterSequence& A) {
    require_order(k, "multiparam_poly_cauchy_second");
    const std::vector<Rational> s1 = multiparam_stirling_row(n, A);
    Rational acc(0);
    for (std::size_t m = 0; m <= n; ++m) {
        if (s1[m].is_zero()) continue;
        const Rational term = s1[m] * reciprocal_power(m, k);
        if (m % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

namespace {

Polynomial q_family_poly(std::size_t n, unsigned k, const LengthVector& L,
                         const ParameterSequence& A, const QParameter& q, Kind kind,
                         const char* who) {
    require_order(k, who);
    if (L.k() != k) {
        throw std::domain_error(std::string(who) + ": length vector has " +
                                std::to_string(L.k()) + " entries, k = " + std::to_string(k));
    }
    const std::vector<Rational> s1 = multiparam_stirling_row(n, A);
    const Rational lambda = L.product();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (std::size_t m = 0; m <= n; ++m) {
        Rational w = s1[m];
        if (kind == Kind::second && m % 2 == 1) w = -w;
        if (w.is_zero()) continue;
        for (std::size_t i = 0; i <= m; ++i) {
            Rational term = w * Rational(binomial(m, i)) * pow(lambda, m - i + 1) /
                            pow(q_integer(m - i + 1, q), k);
            if (i % 2 == 1) term = -term;
            coeffs[i] += term;
        }
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial q_multiparam_poly_first(std::size_t n, unsigned k, const LengthVector& L,
                                   const ParameterSequence& A, const QParameter& q) {
    return q_family_poly(n, k, L, A, q, Kind::first, "q_multiparam_poly_first");
}

Polynomial q_multiparam_poly_second(std::size_t n, unsigned k, const LengthVector& L,
                                    const ParameterSequence& A, const QParameter& q) {
    return q_family_poly(n, k, L, A, q, Kind::second, "q_multiparam_poly_second");
}

std::vector<Rational> sequence(Kind kind, unsigned k, std::size_t n_max) {
    std::vector<Rational> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(kind == Kind::first ? poly_cauchy_first(n, k) : poly_cauchy_second(n, k));
    }
    return out;
}

std::vector<Rational> sequence(Kind kind, unsigned k, const ParameterSequence& A,
                               std::size_t n_max) {
    if (A.size() < n_max) {
        throw std::domain_error("sequence: parameter tuple has " + std::to_string(A.size()) +
                                " entries, n_max = " + std::to_string(n_max) +
                                " requires at least n_max");
    }
    std::vector<Rational> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        out.push_back(kind == Kind::first ? multiparam_poly_cauchy_first(n, k, A)
                                          : multiparam_poly_cauchy_second(n, k, A));
    }
    return out;
}

std::vector<Rational> sequence(Kind kind, unsigned k, const LengthVector& L,
                               const ParameterSequence& A, const QParameter& q,
                               const Rational& z, std::size_t n_max) {
    if (A.size() < n_max) {
        throw std::domain_error("sequence: parameter tuple has " + std::to_string(A.size()) +
                                " entries, n_max = " + std::to_string(n_max) +
                                " requires at least n_max");
    }
    std::vector<Rational> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Polynomial p = kind == Kind::first ? q_multiparam_poly_first(n, k, L, A, q)
                                                 : q_multiparam_poly_second(n, k, L, A, q);
        out.push_back(p(z));
    }
    return out;
}

ParameterSequence classical_parameters(std::size_t count) {
    ParameterSequence A;
    A.reserve(count);
    for (std::size_t i = 0; i < count; ++i) A.emplace_back(static_cast<long>(i));
    return A;
}

ParameterSequence arithmetic_parameters(const Rational& rho, std::size_t count) {
    ParameterSequence A;
    A.reserve(count);
    for (std::size_t i = 0; i < count; ++i) A.push_back(Rational(static_cast<long>(i)) * rho);
    return A;
}

ParameterSequence plateau_parameters(PlateauCase pcase, std::span<const Rational> head,
                                     std::size_t count) {
    const Rational tail = pcase == PlateauCase::one ? Rational(1) : Rational(0);
    ParameterSequence A;
    A.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i == 0) {
            A.emplace_back(0L);
        } else if (i <= head.size()) {
            A.push_back(head[i - 1]);
        } else {
            A.push_back(tail);
        }
    }
    return A;
}

}  // namespace polycauchy
