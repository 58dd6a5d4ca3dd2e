#pragma once

#include "polycauchy/logbehavior.hpp"

#include <set>

namespace polycauchy {

/// Log-convexity of both sign-normalized classical families: the first
/// kind over n = 2..n_max, the second over n = 0..n_max. Requires k >= 1
/// and n_max >= 4.
struct ClassicalLogConvexity {
    unsigned k = 1;
    std::size_t n_max = 0;
    LogBehaviorReport first_kind;
    LogBehaviorReport second_kind;

    bool both_hold() const {
        return first_kind.log_convex == Verdict::holds &&
               second_kind.log_convex == Verdict::holds;
    }
};

ClassicalLogConvexity check_classical_log_convexity(unsigned k, std::size_t n_max);

/// The normalized second-kind number against the Stirling-row bound:
///   lhs = sum_{m=1..n} [n m] / (m+1)^k
///   rhs = [n K_n] * sum_{m=1..n} 1 / (m+1)^k
/// where K_n is the position of the row maximum. Requires n >= 3; the
/// comparison is expected strict there.
struct StirlingBoundCheck {
    unsigned k = 1;
    std::size_t n = 0;
    Rational lhs;
    Rational rhs;
    bool strict = false;
    std::size_t max_index = 0;
    bool max_tied = false;
};

StirlingBoundCheck check_stirling_bound(unsigned k, std::size_t n);

/// Same two windows as the classical case but for the multiparameter
/// families over A. Hypotheses are validated before anything is computed:
/// alpha_0 = 0, and alpha_j >= 1 with alpha_j - alpha_{j-1} >= 1 for every
/// j in the used prefix 1..n_max-1. A must supply n_max entries.
struct MultiparamLogConvexity {
    unsigned k = 1;
    std::size_t n_max = 0;
    ParameterSequence A;
    LogBehaviorReport first_kind;
    LogBehaviorReport second_kind;

    bool both_hold() const {
        return first_kind.log_convex == Verdict::holds &&
               second_kind.log_convex == Verdict::holds;
    }
};

MultiparamLogConvexity check_multiparam_log_convexity(unsigned k, const ParameterSequence& A,
                                                      std::size_t n_max);

/// Unimodality of the normalized multiparameter family over n = 1..n_max
/// for a plateau-shaped A: alpha_0 = 0, then l head entries, then a
/// constant tail. Case one takes the first kind with head entries >= 2 and
/// tail 1; case two takes the second kind with head entries >= 1 and tail
/// 0. The peak is expected at n = l+1, alone, with a strictly rising then
/// strictly falling difference pattern. Requires l >= 3 and n_max >= l+3;
/// the shape of A is validated entry by entry.
struct PlateauUnimodality {
    PlateauCase pcase = PlateauCase::one;
    unsigned k = 1;
    std::size_t l = 0;
    std::size_t n_max = 0;
    ParameterSequence A;
    LogBehaviorReport report;
    std::size_t expected_peak = 0;  // l + 1
    bool single_peak = false;       // modes == {l+1}
    bool rise_fall_strict = false;  // diffs > 0 through n = l, < 0 from n = l+1

    bool as_predicted() const { return report.unimodal && single_peak && rise_fall_strict; }
};

PlateauUnimodality check_plateau_unimodality(PlateauCase pcase, unsigned k, std::size_t l,
                                             const ParameterSequence& A, std::size_t n_max);

/// Outcome of pushing one positive log-convex sequence through the
/// Stirling transform.
struct TransformCheck {
    std::size_t length = 0;
    LogBehaviorReport transformed;
    bool preserved = false;
};

/// Validates that y is positive and log-convex (throws otherwise), then
/// reports whether stirling_transform(y) is log-convex over its full
/// length.
TransformCheck transform_preserves_log_convexity(std::span<const Rational> y);

}  // namespace polycauchy
