#pragma once

#include "polycauchy/families.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polycauchy {

enum class Verdict { holds, fails, not_applicable, vacuous };

std::string_view verdict_name(Verdict v);

/// True verdict in the wide sense: holds outright, or holds because there
/// was nothing to check.
inline bool verdict_ok(Verdict v) { return v == Verdict::holds || v == Verdict::vacuous; }

/// Re-checkable counterexample. `values` holds the witnessing entries in
/// definition order; substituting them back into the defining inequality
/// reproduces the violation exactly.
///   positivity:   index j,            values = {z_j}
///   log_convex:   index j,            values = {z_{j-1}, z_j, z_{j+1}},
///                 with z_j^2 > z_{j-1} * z_{j+1}
///   log_concave:  same shape,         with z_j^2 < z_{j-1} * z_{j+1}
///   unimodal:     index2 = fall at f (z_f > z_{f+1}), index = later rise
///                 at r (z_r < z_{r+1}), values = {z_f, z_{f+1}, z_r, z_{r+1}}
struct Violation {
    std::string property;
    std::size_t index = 0;
    std::optional<std::size_t> index2;
    std::vector<Rational> values;
};

/// Verdict document for one sequence. All indices are absolute: position p
/// of the analyzed list is index start_index + p. Log-convexity and
/// log-concavity are only meaningful for positive sequences and come back
/// not_applicable otherwise; windows too short to constrain anything come
/// back vacuous rather than silently true. `modes` is the argmax set
/// whether or not the sequence is unimodal.
struct LogBehaviorReport {
    std::size_t start_index = 0;
    std::size_t length = 0;
    bool positive = true;
    std::optional<std::size_t> first_nonpositive;
    Verdict log_convex = Verdict::vacuous;
    Verdict log_concave = Verdict::vacuous;
    bool unimodal = true;
    std::set<std::size_t> modes;
    std::vector<Violation> violations;
};

/// Serialization consumed by the CLI; field names are part of the contract:
/// positivity, log_convex, log_concave, unimodal, modes, violations.
nlohmann::json report_to_json(const LogBehaviorReport& r);

/// Positive renormalization of a raw family slice: multiplies value_n by
/// (-1)^(n-1) for the first kind and by (-1)^n for the second, where
/// n = start_index + position. First-kind normalization starts at n >= 1.
std::vector<Rational> sign_normalize(std::span<const Rational> values, Kind kind,
                                     std::size_t start_index);

/// Full analysis: positivity, both log-properties (first violation each),
/// unimodality with the argmax set, and certificates for everything that
/// failed.
LogBehaviorReport analyze_sequence(std::span<const Rational> seq, std::size_t start_index);

/// Property-focused entry points; each returns the full report, the name
/// says which verdict the caller is after.
LogBehaviorReport check_log_convex(std::span<const Rational> seq, std::size_t start_index);
LogBehaviorReport check_log_concave(std::span<const Rational> seq, std::size_t start_index);
LogBehaviorReport check_unimodal(std::span<const Rational> seq, std::size_t start_index);

/// z_n = sum_{m<=n} [n m] y_m, same length as y.
std::vector<Rational> stirling_transform(std::span<const Rational> y);

}  // namespace polycauchy
