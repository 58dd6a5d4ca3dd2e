#include "polycauchy/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace polycauchy;

namespace {

// exit codes: 0 success / all checks pass, 1 failed verification or
// mismatch, 2 bad configuration

std::vector<Rational> parse_lengths(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(',', pos);
        const std::string tok = text.substr(pos, next - pos);
        try {
            out.push_back(Rational::parse(tok));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("L: cannot parse entry \"" + tok + "\"");
        }
        if (next == std::string::npos) return out;
        pos = next + 1;
    }
}

struct CommonOpts {
    std::string family = "first";
    unsigned k = 1;
    std::size_t n_max = 10;
    std::string a;
    std::string lengths;
    std::string q = "limit1";
    std::string z = "0";
    std::string format = "csv";
};

void emit(const std::string& document, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << document;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("out: cannot open \"" + out_path + "\" for writing");
    out << document;
    if (!out) throw std::invalid_argument("out: write to \"" + out_path + "\" failed");
}

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--family", o.family, "first or second kind")
        ->default_str("first");
    sub->add_option("-k,--k", o.k, "power on the 1/(m+1) weights, k >= 1")
        ->default_val(1);
    sub->add_option("-n,--n-max", o.n_max, "largest index tabulated")->default_val(10);
    sub->add_option("--A", o.a,
                    "parameter tuple: comma list, rho:R, or plateau:case,l,v_1,...,v_l "
                    "(default: 0,1,2,...)");
    sub->add_option("--L", o.lengths, "comma list of k positive lengths (default: all 1)");
    sub->add_option("--q", o.q, "q parameter: limit1 or a positive rational != 1")
        ->default_str("limit1");
    sub->add_option("--z", o.z, "evaluation point for the polynomial families")
        ->default_str("0");
    sub->add_option("--format", o.format, "csv or json")->default_str("csv");
}

void add_out(CLI::App* sub, std::string& out_path) {
    sub->add_option("--out", out_path, "write the document to a file instead of stdout");
}

RunConfig build_run_config(const CommonOpts& o) {
    RunConfig c;
    c.family = parse_family(o.family);
    c.k = o.k;
    c.n_max = o.n_max;
    if (!o.a.empty()) c.a = parse_a_spec(o.a);
    if (!o.lengths.empty()) c.lengths = parse_lengths(o.lengths);
    c.q = QParameter::parse(o.q);
    c.z = Rational::parse(o.z);
    c.format = parse_format(o.format);
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tabulation and verification of poly-Cauchy number families"};
    app.require_subcommand(1);

    CommonOpts compute_opts;
    std::string compute_out;
    CLI::App* compute = app.add_subcommand("compute", "tabulate a family");
    add_common(compute, compute_opts);
    add_out(compute, compute_out);

    CommonOpts analyze_opts;
    long long analyze_n_min = -1;
    bool no_normalize = false;
    std::vector<std::string> analyze_checks;
    std::string analyze_input;
    std::size_t analyze_start = 0;
    CLI::App* analyze =
        app.add_subcommand("analyze", "log-convexity / log-concavity / unimodality report");
    add_common(analyze, analyze_opts);
    analyze->add_option("--n-min", analyze_n_min,
                        "first index of the analyzed window (default: 2 first kind, 0 second)");
    analyze->add_flag("--no-normalize", no_normalize,
                      "analyze raw signed values instead of the positive normalization");
    analyze->add_option("--check", analyze_checks,
                        "restrict to log-convex, log-concave, unimodal (repeatable)");
    analyze->add_option("--input", analyze_input,
                        "analyze a file of rationals, one per line, instead of a family");
    analyze->add_option("--start-index", analyze_start,
                        "index of the first line of --input")
        ->default_val(0);
    std::string analyze_out;
    add_out(analyze, analyze_out);

    VerifyConfig verify_cfg;
    std::string verify_a;
    std::string verify_case;
    long long verify_l = -1;
    long long verify_n_min = -1;
    long long verify_n_max = -1;
    CLI::App* verify = app.add_subcommand(
        "verify", "run one verification suite: t21, t22, t23, t24, lemma21, oracle");
    verify->add_option("suite", verify_cfg.suite, "suite name")->required();
    verify->add_option("--k-min", verify_cfg.k_min, "lowest k (0 = suite default)");
    verify->add_option("--k-max", verify_cfg.k_max, "highest k (0 = suite default)");
    verify->add_option("--n-min", verify_n_min, "lowest n where the suite ranges over n");
    verify->add_option("--n-max", verify_n_max, "highest n");
    verify->add_option("--A", verify_a, "parameter tuple override");
    verify->add_option("--case", verify_case, "plateau case I or II (t24)");
    verify->add_option("--l", verify_l, "plateau length (t24)");
    verify->add_option("--tuples", verify_cfg.tuples, "random tuples per (n, k, kind) (oracle)")
        ->default_val(5);
    verify->add_option("--count", verify_cfg.count, "random trials (lemma21)")->default_val(20);
    verify->add_option("--length", verify_cfg.length, "sequence length (lemma21)")
        ->default_val(12);
    verify->add_option("--seed", verify_cfg.seed, "random seed")->default_val(90731);
    std::string verify_out;
    add_out(verify, verify_out);

    OeisConfig oeis_cfg;
    std::string oeis_family = "first";
    std::string oeis_part = "denominator";
    std::string oeis_format = "json";
    long long oeis_n_max = -1;
    CLI::App* oeis =
        app.add_subcommand("oeis-check", "compare a classical family against a local b-file");
    oeis->add_option("--family", oeis_family, "first or second kind")->default_str("first");
    oeis->add_option("-k,--k", oeis_cfg.k, "weight power")->default_val(1);
    oeis->add_option("--part", oeis_part, "numerator or denominator")
        ->default_str("denominator");
    oeis->add_option("--bfile", oeis_cfg.bfile_path, "path to the b-file")->required();
    oeis->add_option("--offset", oeis_cfg.offset, "sequence index n = b-file index - offset")
        ->default_val(0);
    oeis->add_flag("--absolute", oeis_cfg.absolute, "compare absolute values");
    oeis->add_option("--n-max", oeis_n_max, "highest n compared (default: b-file range, <= 400)");
    oeis->add_option("--format", oeis_format, "csv or json")->default_str("json");
    std::string oeis_out;
    add_out(oeis, oeis_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            emit(cmd_compute(build_run_config(compute_opts)), compute_out);
            return 0;
        }
        if (analyze->parsed()) {
            RunConfig c = build_run_config(analyze_opts);
            if (analyze_n_min >= 0) c.n_min = static_cast<std::size_t>(analyze_n_min);
            c.normalize = !no_normalize;
            c.checks = analyze_checks;
            if (!analyze_input.empty()) c.input_file = analyze_input;
            c.input_start_index = analyze_start;
            emit(cmd_analyze(c), analyze_out);
            return 0;
        }
        if (verify->parsed()) {
            if (verify_n_min >= 0) verify_cfg.n_min = static_cast<std::size_t>(verify_n_min);
            if (verify_n_max >= 0) verify_cfg.n_max = static_cast<std::size_t>(verify_n_max);
            if (!verify_a.empty()) verify_cfg.a = parse_a_spec(verify_a);
            if (!verify_case.empty()) {
                if (verify_case == "I") {
                    verify_cfg.pcase = PlateauCase::one;
                } else if (verify_case == "II") {
                    verify_cfg.pcase = PlateauCase::two;
                } else {
                    throw std::invalid_argument("case: expected I or II, got \"" + verify_case +
                                                "\"");
                }
            }
            if (verify_l >= 0) verify_cfg.l = static_cast<std::size_t>(verify_l);
            const VerifyOutcome out = cmd_verify(verify_cfg);
            emit(out.document, verify_out);
            return out.all_pass ? 0 : 1;
        }
        if (oeis->parsed()) {
            oeis_cfg.family = parse_family(oeis_family);
            if (oeis_part == "numerator") {
                oeis_cfg.part = OeisConfig::Part::numerator;
            } else if (oeis_part == "denominator") {
                oeis_cfg.part = OeisConfig::Part::denominator;
            } else {
                throw std::invalid_argument("part: expected numerator or denominator, got \"" +
                                            oeis_part + "\"");
            }
            if (oeis_n_max >= 0) oeis_cfg.n_max = static_cast<std::size_t>(oeis_n_max);
            oeis_cfg.format = parse_format(oeis_format);
            const OeisOutcome out = cmd_oeis_check(oeis_cfg);
            emit(out.document, oeis_out);
            return out.full_match && !out.vacuous ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
