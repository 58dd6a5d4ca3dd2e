#pragma once

#include "polycauchy/bfile.hpp"
#include "polycauchy/oracle.hpp"
#include "polycauchy/theorems.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycauchy {

enum class OutputFormat { csv, json };

OutputFormat parse_format(std::string_view text);
Kind parse_family(std::string_view text);

/// Parameter tuple as specified on the command line: an explicit comma
/// list "0,1,3/2", an arithmetic progression "rho:R", or a plateau shape
/// "plateau:case,l,v_1,...,v_l" with case I or II.
struct ASpec {
    enum class Mode { explicit_list, arithmetic, plateau };
    Mode mode = Mode::explicit_list;
    std::vector<Rational> values;  // explicit entries, or the plateau head
    Rational rho;
    PlateauCase pcase = PlateauCase::one;

    /// First `count` entries; explicit lists must be long enough.
    ParameterSequence materialize(std::size_t count) const;
    std::string str() const;
};

ASpec parse_a_spec(std::string_view text);

/// One tabulation or analysis request. Defaults reproduce the classical
/// families: A = (0, 1, 2, ...), unit lengths, the q -> 1 limit, z = 0.
struct RunConfig {
    Kind family = Kind::first;
    unsigned k = 1;
    std::size_t n_max = 10;
    std::optional<ASpec> a;
    std::optional<std::vector<Rational>> lengths;
    QParameter q = QParameter::limit_one();
    Rational z;
    OutputFormat format = OutputFormat::csv;

    // analysis window and options (cmd_analyze only)
    std::optional<std::size_t> n_min;  // default: 2 for the first kind, 0 for the second
    bool normalize = true;
    std::vector<std::string> checks;   // subset of log-convex/log-concave/unimodal; empty = all
    std::optional<std::string> input_file;  // analyze a sequence file instead of a family
    std::size_t input_start_index = 0;
};

/// Throws std::invalid_argument naming the offending field.
void validate_run_config(const RunConfig& c, bool analyzing);

/// Tabulates the family: CSV with header "n,value" or a JSON document
/// {"meta": ..., "rows": [{"n": ..., "value": "p/q"}, ...]}. Values are
/// always strings in the interchange format; output is byte-deterministic
/// for a given config.
std::string cmd_compute(const RunConfig& c);

/// Analyzes a computed family window (sign-normalized by default) or a
/// user-supplied sequence file, emitting the verdict report.
std::string cmd_analyze(const RunConfig& c);

struct VerifyConfig {
    std::string suite;  // t21 | t22 | t23 | t24 | lemma21 | oracle
    unsigned k_min = 0;  // 0 = suite default
    unsigned k_max = 0;
    std::optional<std::size_t> n_min;
    std::optional<std::size_t> n_max;
    std::optional<ASpec> a;
    std::optional<PlateauCase> pcase;
    std::optional<std::size_t> l;
    unsigned tuples = 5;     // oracle comparisons per (n, k, kind)
    unsigned count = 20;     // random lemma21 trials
    std::size_t length = 12; // lemma21 sequence length
    std::uint64_t seed = 90731;
};

struct VerifyOutcome {
    bool all_pass = false;
    std::string document;  // JSON summary listing every checked instance
};

/// Runs one verification suite over its whole configured range.
VerifyOutcome cmd_verify(const VerifyConfig& c);

struct OeisConfig {
    Kind family = Kind::first;
    unsigned k = 1;
    enum class Part { numerator, denominator } part = Part::denominator;
    std::string bfile_path;
    long long offset = 0;   // sequence index n = b-file index - offset
    bool absolute = false;  // compare absolute values
    std::optional<std::size_t> n_max;  // default: highest usable index, capped at 400
    OutputFormat format = OutputFormat::json;
};

struct OeisOutcome {
    std::size_t matched = 0;
    std::size_t mismatched = 0;
    std::size_t skipped = 0;
    bool vacuous = false;     // nothing was comparable
    bool full_match = false;  // no mismatches
    std::string document;
};

/// Compares numerator or denominator of a classical family against a
/// local b-file.
OeisOutcome cmd_oeis_check(const OeisConfig& c);

}  // namespace polycauchy
