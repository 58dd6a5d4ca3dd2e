#include "polycauchy/theorems.hpp"

#include <stdexcept>
#include <string>

namespace polycauchy {

namespace {

std::vector<Rational> slice(const std::vector<Rational>& full, std::size_t from) {
    return std::vector<Rational>(full.begin() + static_cast<std::ptrdiff_t>(from), full.end());
}

}  // namespace

ClassicalLogConvexity check_classical_log_convexity(unsigned k, std::size_t n_max) {
    if (k == 0) throw std::domain_error("check_classical_log_convexity: requires k >= 1");
    if (n_max < 4) throw std::domain_error("check_classical_log_convexity: requires n_max >= 4");
    ClassicalLogConvexity out;
    out.k = k;
    out.n_max = n_max;

    const std::vector<Rational> first_raw = sequence(Kind::first, k, n_max);
    const std::vector<Rational> first_win = slice(first_raw, 2);
    out.first_kind = analyze_sequence(sign_normalize(first_win, Kind::first, 2), 2);

    const std::vector<Rational> second_raw = sequence(Kind::second, k, n_max);
    out.second_kind = analyze_sequence(sign_normalize(second_raw, Kind::second, 0), 0);
    return out;
}

StirlingBoundCheck check_stirling_bound(unsigned k, std::size_t n) {
    if (k == 0) throw std::domain_error("check_stirling_bound: requires k >= 1");
    if (n < 3) throw std::domain_error("check_stirling_bound: requires n >= 3");
    StirlingBoundCheck out;
    out.k = k;
    out.n = n;

    const StirlingRow row = stirling_row(n);
    Rational lhs(0);
    Rational weight_sum(0);
    for (std::size_t m = 1; m <= n; ++m) {
        const Rational w = Rational(1) / pow(Rational(static_cast<long>(m + 1)), k);
        lhs += Rational(row.values[m]) * w;
        weight_sum += w;
    }
    const MaxIndex mi = max_stirling_index(n);
    out.max_index = mi.index;
    out.max_tied = mi.tied;
    out.lhs = lhs;
    out.rhs = Rational(row.values[mi.index]) * weight_sum;
    out.strict = out.lhs < out.rhs;
    return out;
}

MultiparamLogConvexity check_multiparam_log_convexity(unsigned k, const ParameterSequence& A,
                                                      std::size_t n_max) {
    if (k == 0) throw std::domain_error("check_multiparam_log_convexity: requires k >= 1");
    if (n_max < 4) throw std::domain_error("check_multiparam_log_convexity: requires n_max >= 4");
    if (A.size() < n_max) {
        throw std::domain_error("check_multiparam_log_convexity: parameter tuple has " +
                                std::to_string(A.size()) + " entries, n_max = " +
                                std::to_string(n_max) + " requires at least n_max");
    }
    if (!A[0].is_zero()) {
        throw std::domain_error("check_multiparam_log_convexity: alpha_0 = " + A[0].str() +
                                ", hypothesis needs alpha_0 = 0");
    }
    for (std::size_t j = 1; j < n_max; ++j) {
        if (A[j] < Rational(1)) {
            throw std::domain_error("check_multiparam_log_convexity: alpha_" + std::to_string(j) +
                                    " = " + A[j].str() + " violates alpha_j >= 1");
        }
        if (A[j] - A[j - 1] < Rational(1)) {
            throw std::domain_error("check_multiparam_log_convexity: alpha_" + std::to_string(j) +
                                    " - alpha_" + std::to_string(j - 1) + " = " +
                                    (A[j] - A[j - 1]).str() +
                                    " violates alpha_j - alpha_{j-1} >= 1");
        }
    }

    MultiparamLogConvexity out;
    out.k = k;
    out.n_max = n_max;
    out.A = A;

    const std::vector<Rational> first_raw = sequence(Kind::first, k, A, n_max);
    const std::vector<Rational> first_win = slice(first_raw, 2);
    out.first_kind = analyze_sequence(sign_normalize(first_win, Kind::first, 2), 2);

    const std::vector<Rational> second_raw = sequence(Kind::second, k, A, n_max);
    out.second_kind = analyze_sequence(sign_normalize(second_raw, Kind::second, 0), 0);
    return out;
}

PlateauUnimodality check_plateau_unimodality(PlateauCase pcase, unsigned k, std::size_t l,
                                             const ParameterSequence& A, std::size_t n_max) {
    if (k == 0) throw std::domain_error("check_plateau_unimodality: requires k >= 1");
    if (l < 3) throw std::domain_error("check_plateau_unimodality: requires l >= 3");
    if (n_max < l + 3) {
        throw std::domain_error("check_plateau_unimodality: requires n_max >= l + 3");
    }
    if (A.size() < n_max) {
        throw std::domain_error("check_plateau_unimodality: parameter tuple has " +
                                std::to_string(A.size()) + " entries, n_max = " +
                                std::to_string(n_max) + " requires at least n_max");
    }
    if (!A[0].is_zero()) {
        throw std::domain_error("check_plateau_unimodality: alpha_0 = " + A[0].str() +
                                ", shape needs alpha_0 = 0");
    }
    const Rational head_floor = pcase == PlateauCase::one ? Rational(2) : Rational(1);
    const Rational tail_value = pcase == PlateauCase::one ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j < n_max; ++j) {
        if (j <= l) {
            if (A[j] < head_floor) {
                throw std::domain_error("check_plateau_unimodality: alpha_" + std::to_string(j) +
                                        " = " + A[j].str() + " violates alpha_j >= " +
                                        head_floor.str() + " on the head");
            }
        } else if (A[j] != tail_value) {
            throw std::domain_error("check_plateau_unimodality: alpha_" + std::to_string(j) +
                                    " = " + A[j].str() + ", tail must be " + tail_value.str());
        }
    }

    PlateauUnimodality out;
    out.pcase = pcase;
    out.k = k;
    out.l = l;
    out.n_max = n_max;
    out.A = A;
    out.expected_peak = l + 1;

    const Kind kind = pcase == PlateauCase::one ? Kind::first : Kind::second;
    const std::vector<Rational> raw = sequence(kind, k, A, n_max);
    const std::vector<Rational> win(raw.begin() + 1, raw.end());
    const std::vector<Rational> v = sign_normalize(win, kind, 1);
    out.report = analyze_sequence(v, 1);

    out.single_peak = out.report.modes.size() == 1 &&
                      *out.report.modes.begin() == out.expected_peak;

    out.rise_fall_strict = true;
    for (std::size_t n = 1; n + 1 <= n_max; ++n) {
        const Rational d = v[n] - v[n - 1];  // value(n+1) - value(n)
        const bool ok = n <= l ? d.is_positive() : d.is_negative();
        if (!ok) {
            out.rise_fall_strict = false;
            break;
        }
    }
    return out;
}

TransformCheck transform_preserves_log_convexity(std::span<const Rational> y) {
    const LogBehaviorReport pre = analyze_sequence(y, 0);
    if (!pre.positive) {
        throw std::domain_error("transform_preserves_log_convexity: input is not positive");
    }
    if (pre.log_convex == Verdict::fails) {
        throw std::domain_error("transform_preserves_log_convexity: input is not log-convex");
    }
    TransformCheck out;
    out.length = y.size();
    out.transformed = analyze_sequence(stirling_transform(y), 0);
    out.preserved = verdict_ok(out.transformed.log_convex);
    return out;
}

}  // namespace polycauchy
