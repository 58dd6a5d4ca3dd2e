#include "polycauchy/logbehavior.hpp"

#include <algorithm>
#include <stdexcept>

namespace polycauchy {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::not_applicable: return "not_applicable";
        case Verdict::vacuous: return "vacuous";
    }
    return "unknown";
}

nlohmann::json report_to_json(const LogBehaviorReport& r) {
    nlohmann::json j;
    j["start_index"] = r.start_index;
    j["length"] = r.length;
    j["positivity"] = r.positive;
    j["first_nonpositive"] =
        r.first_nonpositive ? nlohmann::json(*r.first_nonpositive) : nlohmann::json(nullptr);
    j["log_convex"] = std::string(verdict_name(r.log_convex));
    j["log_concave"] = std::string(verdict_name(r.log_concave));
    j["unimodal"] = r.unimodal;
    j["modes"] = nlohmann::json::array();
    for (std::size_t m : r.modes) j["modes"].push_back(m);
    j["violations"] = nlohmann::json::array();
    for (const Violation& v : r.violations) {
        nlohmann::json jv;
        jv["property"] = v.property;
        jv["index"] = v.index;
        jv["index2"] = v.index2 ? nlohmann::json(*v.index2) : nlohmann::json(nullptr);
        jv["values"] = nlohmann::json::array();
        for (const Rational& x : v.values) jv["values"].push_back(x.str());
        j["violations"].push_back(jv);
    }
    return j;
}

std::vector<Rational> sign_normalize(std::span<const Rational> values, Kind kind,
                                     std::size_t start_index) {
    if (kind == Kind::first && start_index == 0) {
        throw std::domain_error("sign_normalize: first-kind normalization is defined for n >= 1");
    }
    std::vector<Rational> out;
    out.reserve(values.size());
    for (std::size_t p = 0; p < values.size(); ++p) {
        const std::size_t n = start_index + p;
        const bool flip = kind == Kind::first ? (n % 2 == 0) : (n % 2 == 1);
        out.push_back(flip ? -values[p] : values[p]);
    }
    return out;
}

LogBehaviorReport analyze_sequence(std::span<const Rational> seq, std::size_t start_index) {
    LogBehaviorReport r;
    r.start_index = start_index;
    r.length = seq.size();

    for (std::size_t p = 0; p < seq.size(); ++p) {
        if (!seq[p].is_positive()) {
            r.positive = false;
            r.first_nonpositive = start_index + p;
            r.violations.push_back({"positivity", start_index + p, std::nullopt, {seq[p]}});
            break;
        }
    }

    if (!r.positive) {
        r.log_convex = Verdict::not_applicable;
        r.log_concave = Verdict::not_applicable;
    } else if (seq.size() < 3) {
        r.log_convex = Verdict::vacuous;
        r.log_concave = Verdict::vacuous;
    } else {
        r.log_convex = Verdict::holds;
        for (std::size_t p = 1; p + 1 < seq.size(); ++p) {
            if (seq[p] * seq[p] > seq[p - 1] * seq[p + 1]) {
                r.log_convex = Verdict::fails;
                r.violations.push_back({"log_convex", start_index + p, std::nullopt,
                                        {seq[p - 1], seq[p], seq[p + 1]}});
                break;
            }
        }
        r.log_concave = Verdict::holds;
        for (std::size_t p = 1; p + 1 < seq.size(); ++p) {
            if (seq[p] * seq[p] < seq[p - 1] * seq[p + 1]) {
                r.log_concave = Verdict::fails;
                r.violations.push_back({"log_concave", start_index + p, std::nullopt,
                                        {seq[p - 1], seq[p], seq[p + 1]}});
                break;
            }
        }
    }

    if (!seq.empty()) {
        const Rational peak = *std::max_element(seq.begin(), seq.end());
        for (std::size_t p = 0; p < seq.size(); ++p) {
            if (seq[p] == peak) r.modes.insert(start_index + p);
        }
        // unimodal iff no strict fall is ever followed by a strict rise
        std::optional<std::size_t> fall;
        for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
            if (seq[p] > seq[p + 1]) {
                if (!fall) fall = p;
            } else if (fall && seq[p] < seq[p + 1]) {
                r.unimodal = false;
                r.violations.push_back({"unimodal", start_index + p, start_index + *fall,
                                        {seq[*fall], seq[*fall + 1], seq[p], seq[p + 1]}});
                break;
            }
        }
    }

    return r;
}

LogBehaviorReport check_log_convex(std::span<const Rational> seq, std::size_t start_index) {
    return analyze_sequence(seq, start_index);
}

LogBehaviorReport check_log_concave(std::span<const Rational> seq, std::size_t start_index) {
    return analyze_sequence(seq, start_index);
}

LogBehaviorReport check_unimodal(std::span<const Rational> seq, std::size_t start_index) {
    return analyze_sequence(seq, start_index);
}

std::vector<Rational> stirling_transform(std::span<const Rational> y) {
    std::vector<Rational> z;
    z.reserve(y.size());
    for (std::size_t n = 0; n < y.size(); ++n) {
        const StirlingRow row = stirling_row(n);
        Rational acc(0);
        for (std::size_t m = 0; m <= n; ++m) {
            if (row.values[m] == 0 || y[m].is_zero()) continue;
            acc += Rational(row.values[m]) * y[m];
        }
        z.push_back(acc);
    }
    return z;
}

}  // namespace polycauchy
