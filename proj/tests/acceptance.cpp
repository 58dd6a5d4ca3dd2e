// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every comparison in here is exact rational arithmetic.

#include "polycauchy/commands.hpp"
#include "polycauchy/sampling.hpp"

#include <json.hpp>

#include <gmpxx.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace polycauchy;
using nlohmann::json;

namespace {

int failures = 0;

void criterion(const std::string& id, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = e.what();
    }
    if (ok) {
        std::cout << "[PASS] " << id << "\n";
    } else {
        ++failures;
        std::cout << "[FAIL] " << id;
        if (!note.empty()) std::cout << " (" << note << ")";
        std::cout << "\n";
    }
}

Rational weighted(const std::vector<long>& row, unsigned k) {
    Rational out(0);
    for (std::size_t m = 0; m < row.size(); ++m) {
        out += Rational(row[m]) / pow(Rational(static_cast<long>(m) + 1), k);
    }
    return out;
}

bool value_table() {
    const std::vector<std::vector<long>> first{
        {1}, {0, 1}, {0, -1, 1}, {0, 2, -3, 1}, {0, -6, 11, -6, 1}};
    const std::vector<std::vector<long>> second{
        {1}, {0, -1}, {0, 1, 1}, {0, -2, -3, -1}, {0, 6, 11, 6, 1}};
    for (unsigned k = 1; k <= 3; ++k) {
        for (std::size_t n = 0; n <= 4; ++n) {
            if (poly_cauchy_first(n, k) != weighted(first[n], k)) return false;
            if (poly_cauchy_second(n, k) != weighted(second[n], k)) return false;
        }
    }
    return poly_cauchy_first(4, 1) == Rational(-19, 30) &&
           poly_cauchy_second(3, 1) == Rational(-9, 4);
}

bool closed_form_vs_oracle() {
    DeterministicRng rng(7);
    for (std::size_t n = 0; n <= 5; ++n) {
        for (unsigned k = 1; k <= 2; ++k) {
            for (unsigned trial = 0; trial < 5; ++trial) {
                std::vector<Rational> lengths;
                for (unsigned j = 0; j < k; ++j) {
                    lengths.push_back(random_positive_rational(rng, 3, 2));
                }
                ParameterSequence A;
                for (std::size_t i = 0; i < n; ++i) {
                    A.push_back(random_rational(rng, -2, 3, 2));
                }
                FamilySpec spec;
                spec.n = n;
                spec.k = k;
                spec.A = A;
                spec.L = LengthVector(lengths);
                spec.q = random_q_in_unit_interval(rng);
                const Rational z = random_rational(rng, -2, 2, 2);

                spec.kind = Kind::first;
                if (q_multiparam_poly_first(n, k, spec.L, A, spec.q)(z) !=
                    oracle_nested_integration(spec, z)) {
                    return false;
                }
                spec.kind = Kind::second;
                if (q_multiparam_poly_second(n, k, spec.L, A, spec.q)(z) !=
                    oracle_nested_integration(spec, z)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool classical_log_convexity() {
    for (unsigned k = 1; k <= 4; ++k) {
        if (!check_classical_log_convexity(k, 30).both_hold()) return false;
    }
    return true;
}

bool stirling_row_bound() {
    const StirlingBoundCheck frozen = check_stirling_bound(1, 3);
    if (frozen.lhs != Rational(9, 4) || frozen.rhs != Rational(13, 4)) return false;
    for (unsigned k = 1; k <= 4; ++k) {
        for (std::size_t n = 3; n <= 30; ++n) {
            if (!check_stirling_bound(k, n).strict) return false;
        }
    }
    return true;
}

bool multiparam_log_convexity() {
    const std::size_t n_max = 20;
    std::vector<ParameterSequence> tuples;
    tuples.push_back(classical_parameters(n_max));
    tuples.push_back(arithmetic_parameters(Rational(3, 2), n_max));
    tuples.push_back(arithmetic_parameters(Rational(2), n_max));
    ParameterSequence doubling;  // alpha_j = 2^j - 1
    Rational p(1);
    for (std::size_t j = 0; j < n_max; ++j) {
        doubling.push_back(p - Rational(1));
        p *= Rational(2);
    }
    tuples.push_back(doubling);
    ParameterSequence squares;
    for (long j = 0; j < static_cast<long>(n_max); ++j) {
        squares.push_back(Rational(j * j));
    }
    tuples.push_back(squares);

    for (const ParameterSequence& A : tuples) {
        for (unsigned k = 1; k <= 3; ++k) {
            if (!check_multiparam_log_convexity(k, A, n_max).both_hold()) return false;
        }
    }
    // the classical tuple must reproduce the base family exactly
    return sequence(Kind::first, 1, tuples[0], n_max) == sequence(Kind::first, 1, n_max);
}

bool plateau_unimodality() {
    for (const std::size_t l : {3ul, 4ul, 5ul}) {
        const std::size_t n_max = l + 5;
        for (unsigned k = 1; k <= 2; ++k) {
            for (int shape = 0; shape < 2; ++shape) {
                std::vector<Rational> head_one, head_two;
                for (std::size_t j = 1; j <= l; ++j) {
                    // flat heads, then strictly descending heads
                    head_one.push_back(shape == 0 ? Rational(2)
                                                  : Rational(static_cast<long>(l - j) + 2));
                    head_two.push_back(shape == 0 ? Rational(1)
                                                  : Rational(static_cast<long>(l - j) + 1));
                }
                const ParameterSequence A1 =
                    plateau_parameters(PlateauCase::one, head_one, n_max);
                if (!check_plateau_unimodality(PlateauCase::one, k, l, A1, n_max)
                         .as_predicted()) {
                    return false;
                }
                const ParameterSequence A2 =
                    plateau_parameters(PlateauCase::two, head_two, n_max);
                if (!check_plateau_unimodality(PlateauCase::two, k, l, A2, n_max)
                         .as_predicted()) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool transform_log_convexity() {
    for (unsigned k = 1; k <= 3; ++k) {
        std::vector<Rational> y;
        for (long m = 0; m < 12; ++m) y.push_back(Rational(1) / pow(Rational(m + 1), k));
        if (!transform_preserves_log_convexity(y).preserved) return false;
    }
    DeterministicRng rng(90731);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<Rational> y = random_log_convex_sequence(rng, 12);
        if (!transform_preserves_log_convexity(y).preserved) return false;
    }
    return true;
}

bool stirling_self_checks() {
    for (std::size_t n = 0; n <= 20; ++n) {
        const StirlingRow row = stirling_row(n);
        BigInt sum = 0;
        for (const BigInt& v : row.values) sum += v;
        BigInt fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        if (sum != fact) return false;
    }
    ParameterSequence classical = classical_parameters(15);
    for (std::size_t n = 0; n <= 15; ++n) {
        const std::vector<Rational> row = multiparam_stirling_row(n, classical);
        for (std::size_t m = 0; m <= n; ++m) {
            const int sign = (n - m) % 2 == 0 ? 1 : -1;
            if (row[m] != Rational(sign) * Rational(unsigned_stirling1(n, m))) return false;
        }
    }
    return true;
}

bool cli_round_trip() {
    RunConfig c;
    c.family = Kind::first;
    c.k = 1;
    c.n_max = 8;

    const std::string csv = cmd_compute(c);
    if (csv != cmd_compute(c)) return false;
    const std::vector<Rational> expect = sequence(Kind::first, 1, 8);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    if (line != "n,value") return false;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        const auto comma = line.find(',');
        if (Rational::parse(line.substr(comma + 1)) != expect[n]) return false;
        ++n;
    }
    if (n != 9) return false;

    c.format = OutputFormat::json;
    const std::string text = cmd_compute(c);
    if (text != cmd_compute(c)) return false;
    const json doc = json::parse(text);
    for (std::size_t i = 0; i <= 8; ++i) {
        if (Rational::parse(doc["rows"][i]["value"].get<std::string>()) != expect[i]) {
            return false;
        }
    }

    // feed our own denominators back through the comparison path
    const auto path = std::filesystem::temp_directory_path() / "polycauchy_acceptance_b.txt";
    {
        std::ofstream out(path);
        for (std::size_t i = 0; i <= 8; ++i) {
            out << i << ' ' << expect[i].denominator().get_str() << '\n';
        }
    }
    OeisConfig oc;
    oc.family = Kind::first;
    oc.k = 1;
    oc.part = OeisConfig::Part::denominator;
    oc.bfile_path = path.string();
    const OeisOutcome outcome = cmd_oeis_check(oc);
    std::error_code ec;
    std::filesystem::remove(path, ec);
    return outcome.full_match && !outcome.vacuous && outcome.matched == 9;
}

}  // namespace

int main() {
    criterion("value-table", value_table);
    criterion("closed-form-vs-oracle", closed_form_vs_oracle);
    criterion("classical-log-convexity", classical_log_convexity);
    criterion("stirling-row-bound", stirling_row_bound);
    criterion("multiparam-log-convexity", multiparam_log_convexity);
    criterion("plateau-unimodality", plateau_unimodality);
    criterion("transform-log-convexity", transform_log_convexity);
    criterion("stirling-self-checks", stirling_self_checks);
    criterion("cli-round-trip", cli_round_trip);

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
