#include "polycauchy/logbehavior.hpp"

#include "polycauchy/sampling.hpp"

#include <doctest.h>

#include <gmpxx.h>

#include <set>
#include <vector>

using namespace polycauchy;

namespace {

std::vector<Rational> seq(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("sign normalization") {
    // first kind: multiply value_n by (-1)^(n-1)
    const std::vector<Rational> c{Rational(1, 2), Rational(-1, 6), Rational(1, 4),
                                  Rational(-19, 30)};
    const std::vector<Rational> sigma = sign_normalize(c, Kind::first, 1);
    CHECK(sigma == std::vector<Rational>{Rational(1, 2), Rational(1, 6), Rational(1, 4),
                                         Rational(19, 30)});

    // second kind: multiply by (-1)^n
    const std::vector<Rational> chat{Rational(1), Rational(-1, 2), Rational(5, 6)};
    const std::vector<Rational> omega = sign_normalize(chat, Kind::second, 0);
    CHECK(omega == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(5, 6)});

    // the start index shifts which positions flip
    const std::vector<Rational> shifted = sign_normalize(chat, Kind::second, 1);
    CHECK(shifted == std::vector<Rational>{Rational(-1), Rational(-1, 2), Rational(-5, 6)});

    CHECK_THROWS_AS(sign_normalize(c, Kind::first, 0), std::domain_error);
}

TEST_CASE("geometric sequences are both log-convex and log-concave") {
    std::vector<Rational> geo;
    Rational v(1, 3);
    for (int i = 0; i < 9; ++i) {
        geo.push_back(v);
        v *= Rational(5, 2);
    }
    const LogBehaviorReport r = analyze_sequence(geo, 0);
    CHECK(r.positive);
    CHECK(r.log_convex == Verdict::holds);
    CHECK(r.log_concave == Verdict::holds);
    CHECK(r.unimodal);
    CHECK(r.modes == std::set<std::size_t>{8});
}

TEST_CASE("log-convexity violation carries a re-checkable certificate") {
    const auto values = seq({1, 2, 3, 9, 27});
    const LogBehaviorReport r = analyze_sequence(values, 10);
    CHECK(r.log_convex == Verdict::fails);
    REQUIRE(!r.violations.empty());
    const Violation* found = nullptr;
    for (const Violation& v : r.violations) {
        if (v.property == "log_convex") found = &v;
    }
    REQUIRE(found != nullptr);
    CHECK(found->index == 11);  // absolute: start 10 + position 1
    REQUIRE(found->values.size() == 3);
    // substituting the certificate back into the inequality reproduces it
    CHECK(found->values[1] * found->values[1] > found->values[0] * found->values[2]);
    CHECK(found->values[0] == Rational(1));
    CHECK(found->values[1] == Rational(2));
    CHECK(found->values[2] == Rational(3));
}

TEST_CASE("log-concavity violation certificate") {
    const auto values = seq({3, 2, 3});
    const LogBehaviorReport r = analyze_sequence(values, 0);
    CHECK(r.log_concave == Verdict::fails);
    const Violation* found = nullptr;
    for (const Violation& v : r.violations) {
        if (v.property == "log_concave") found = &v;
    }
    REQUIRE(found != nullptr);
    CHECK(found->index == 1);
    CHECK(found->values[1] * found->values[1] < found->values[0] * found->values[2]);
}

TEST_CASE("log properties are not applicable without positivity") {
    const auto values = seq({1, -2, 4});
    const LogBehaviorReport r = analyze_sequence(values, 5);
    CHECK(!r.positive);
    CHECK(r.first_nonpositive == 6);
    CHECK(r.log_convex == Verdict::not_applicable);
    CHECK(r.log_concave == Verdict::not_applicable);
    const Violation* found = nullptr;
    for (const Violation& v : r.violations) {
        if (v.property == "positivity") found = &v;
    }
    REQUIRE(found != nullptr);
    CHECK(found->index == 6);
    CHECK(found->values == std::vector<Rational>{Rational(-2)});
}

TEST_CASE("short windows are vacuous, not silently true") {
    const auto values = seq({4, 9});
    const LogBehaviorReport r = analyze_sequence(values, 0);
    CHECK(r.log_convex == Verdict::vacuous);
    CHECK(r.log_concave == Verdict::vacuous);
    CHECK(verdict_ok(r.log_convex));
    CHECK(r.unimodal);  // two points never fall and rise again
}

TEST_CASE("unimodality detection and modes") {
    const auto single = seq({1, 4, 9, 7, 2});
    const LogBehaviorReport r1 = analyze_sequence(single, 0);
    CHECK(r1.unimodal);
    CHECK(r1.modes == std::set<std::size_t>{2});

    const auto plateau = seq({1, 5, 5, 3});
    const LogBehaviorReport r2 = analyze_sequence(plateau, 0);
    CHECK(r2.unimodal);
    CHECK(r2.modes == std::set<std::size_t>{1, 2});

    const auto wobble = seq({2, 1, 2});
    const LogBehaviorReport r3 = analyze_sequence(wobble, 7);
    CHECK(!r3.unimodal);
    CHECK(r3.modes == std::set<std::size_t>{7, 9});
    const Violation* found = nullptr;
    for (const Violation& v : r3.violations) {
        if (v.property == "unimodal") found = &v;
    }
    REQUIRE(found != nullptr);
    CHECK(found->index2 == 7);  // fall
    CHECK(found->index == 8);   // later rise
    REQUIRE(found->values.size() == 4);
    CHECK(found->values[0] > found->values[1]);  // the fall
    CHECK(found->values[2] < found->values[3]);  // the rise

    // monotone sequences are unimodal with the mode at an end
    const LogBehaviorReport up = analyze_sequence(seq({1, 2, 3}), 0);
    CHECK(up.unimodal);
    CHECK(up.modes == std::set<std::size_t>{2});
    const LogBehaviorReport down = analyze_sequence(seq({3, 2, 1}), 0);
    CHECK(down.unimodal);
    CHECK(down.modes == std::set<std::size_t>{0});
}

TEST_CASE("reciprocals of random log-convex sequences are log-concave, hence unimodal") {
    DeterministicRng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const std::vector<Rational> convex = random_log_convex_sequence(rng, 10);
        const LogBehaviorReport cr = analyze_sequence(convex, 0);
        CHECK(cr.positive);
        CHECK(verdict_ok(cr.log_convex));

        std::vector<Rational> reciprocal;
        for (const Rational& v : convex) reciprocal.push_back(Rational(1) / v);
        const LogBehaviorReport rr = analyze_sequence(reciprocal, 0);
        CHECK(verdict_ok(rr.log_concave));
        CHECK(rr.unimodal);  // positive log-concave sequences have one hump
    }
}

TEST_CASE("transform of the all-ones sequence counts permutations") {
    const std::vector<Rational> ones(10, Rational(1));
    const std::vector<Rational> z = stirling_transform(ones);
    REQUIRE(z.size() == 10);
    for (std::size_t n = 0; n < 10; ++n) {
        BigInt fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        CHECK(z[n] == Rational(fact));
    }
}

TEST_CASE("transform of powers of two shifts the factorial") {
    // sum_m [n m] 2^m = 2 * 3 * ... * (n+1) = (n+1)!
    std::vector<Rational> y;
    Rational p(1);
    for (int m = 0; m < 9; ++m) {
        y.push_back(p);
        p *= Rational(2);
    }
    const std::vector<Rational> z = stirling_transform(y);
    for (std::size_t n = 0; n < 9; ++n) {
        BigInt fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n + 1));
        CHECK(z[n] == Rational(fact));
    }
}

TEST_CASE("report serialization keeps the contract fields") {
    const LogBehaviorReport r = analyze_sequence(seq({2, 1, 2}), 0);
    const nlohmann::json j = report_to_json(r);
    CHECK(j.contains("positivity"));
    CHECK(j.contains("log_convex"));
    CHECK(j.contains("log_concave"));
    CHECK(j.contains("unimodal"));
    CHECK(j.contains("modes"));
    CHECK(j.contains("violations"));
    CHECK(j["unimodal"] == false);
    CHECK(j["log_convex"] == "holds");  // 1*4 >= 1, 4 >= 1: both steps pass
    CHECK(j["modes"].size() == 2);
    CHECK(j["violations"][0]["values"].is_array());
}
