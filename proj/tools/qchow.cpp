// Command-line front end: classification, replay of the published numbers,
// and small calculators for chi, Segre classes, bounds and Chow relations.

#include "CLI11.hpp"

#include "qchow/bundle.hpp"
#include "qchow/chow.hpp"
#include "qchow/classifier.hpp"
#include "qchow/filters.hpp"
#include "qchow/replay.hpp"
#include "qchow/report.hpp"
#include "qchow/riemann_roch.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace qchow;

constexpr int kExitOk = 0;
constexpr int kExitContract = 1;
constexpr int kExitDisagree = 2;

struct Options {
    RunConfig config;
    std::string format = "json";
    std::string formula = "both";
    std::string out;
    bool trace = false;

    // Calculator inputs.
    int n = 5;
    std::string c1 = "0";
    std::string c2 = "0";
    std::string twist_by = "0";
    int i_max = 6;
};

void write_output(const Options& opts, const std::string& document) {
    if (opts.out.empty()) {
        std::cout << document;
        return;
    }
    std::ofstream file(opts.out, std::ios::binary);
    if (!file) throw ContractError("cannot open output file '" + opts.out + "'");
    file << document;
}

void finalize_config(Options& opts) {
    opts.config.format = parse_output_format(opts.format);
    opts.config.formula_mode = parse_rr_decision(opts.formula);
    validate(opts.config);
}

int run_classify(Options& opts) {
    finalize_config(opts);
    const auto records = classify(opts.config);
    if (opts.trace)
        for (const auto& r : records)
            for (const auto& v : r.verdicts) {
                std::cerr << "trace n=" << r.n << " c1=" << r.c1 << " c2=" << r.c2 << " filter=" << v.filter_id
                          << " status=" << to_string(v.status);
                for (const auto& [k, w] : v.witnesses) std::cerr << ' ' << k << '=' << w;
                std::cerr << '\n';
            }
    const Report report = emit_report(records, opts.config.format);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
    write_output(opts, report.document);
    return kExitOk;
}

int run_verify(Options& opts) {
    finalize_config(opts);
    const auto checks = verify_paper(opts.config);
    const Report report = emit_report(checks, opts.config.format);
    write_output(opts, report.document);
    return has_disagreement(checks) ? kExitDisagree : kExitOk;
}

int run_chi(Options& opts) {
    const RrDecision mode = parse_rr_decision(opts.formula);
    const QuadricContext ctx(opts.n);
    const ChernData d{parse_rational(opts.c1), parse_rational(opts.c2)};
    std::ostringstream os;
    os << "n = " << opts.n << "\nc1 = " << to_string(d.c1) << "\nc2 = " << to_string(d.c2) << '\n';
    if (mode != RrDecision::Printed) os << "chi_hrr = " << to_string(chi_hrr(ctx, d)) << '\n';
    if (mode != RrDecision::Hrr) {
        if (opts.n != 5) throw ContractError("the printed closed form is only defined on Q^5");
        os << "chi_printed = " << to_string(chi_q5(d, ChiFormula::Printed)) << '\n';
    }
    write_output(opts, os.str());
    return kExitOk;
}

int run_segre(Options& opts) {
    if (opts.i_max < 0) throw ContractError("--i-max must be non-negative");
    const ChernData base{parse_rational(opts.c1), parse_rational(opts.c2)};
    const Rational t = parse_rational(opts.twist_by);
    const ChernData d = twist(base, t);
    const auto rec = segre_recurrence(d, opts.i_max);
    const auto inv = segre_inversion(d, opts.i_max);
    std::ostringstream os;
    os << "c1 = " << to_string(d.c1) << "\nc2 = " << to_string(d.c2) << '\n';
    bool agree = true;
    for (std::size_t i = 0; i < rec.size(); ++i) {
        os << "s" << i << " = " << to_string(rec[i]) << '\n';
        agree = agree && rec[i] == inv[i];
    }
    os << "recurrence_matches_inversion = " << (agree ? "true" : "false") << '\n';
    if (opts.i_max >= 6) os << "s6_closed_form_q6 = " << to_string(s6_closed_form_q6(d)) << '\n';
    write_output(opts, os.str());
    return agree ? kExitOk : kExitContract;
}

int run_bound(Options& opts) {
    std::ostringstream os;
    os << "n = " << opts.n << '\n';
    if (opts.n >= 12) {
        const FilterVerdict v = sin_incompatibility(opts.n, opts.config.precision);
        os << "sin_incompatibility = " << to_string(v.status) << '\n';
        for (const auto& [k, w] : v.witnesses) os << k << " = " << w << '\n';
    } else {
        const int c1 = std::stoi(opts.c1);
        os << "c1 = " << c1 << "\nalpha = " << alpha_for(opts.n).to_string()
           << "\nnef_c2_bound = " << nef_c2_bound(opts.n, c1) << '\n';
    }
    write_output(opts, os.str());
    return kExitOk;
}

int run_chow_check(Options& opts) {
    const QuadricContext ctx(opts.n);
    std::ostringstream os;
    os << "n = " << opts.n << "\ndegree_H^n = " << to_string(degree(ChowClass::hyperplane_power(ctx, opts.n)))
       << '\n';
    try {
        os << "middle_relations = " << (middle_relations_check(ctx) ? "true" : "false") << '\n';
    } catch (const NotApplicable&) {
        os << "middle_relations = NotApplicable\n";
    }
    write_output(opts, os.str());
    return kExitOk;
}

void add_run_flags(CLI::App* cmd, Options& opts) {
    cmd->add_option("--n-min", opts.config.n_min, "Smallest quadric dimension")->capture_default_str();
    cmd->add_option("--n-max", opts.config.n_max, "Largest quadric dimension")->capture_default_str();
    cmd->add_option("--c2-max", opts.config.c2_max, "Enumerate c2 over [-c2_max, c2_max]")->capture_default_str();
    cmd->add_option("--format", opts.format, "json, csv or markdown")->capture_default_str();
    cmd->add_option("--precision", opts.config.precision, "Decimal digits for certified evaluation")
        ->capture_default_str();
    cmd->add_option("--formula", opts.formula, "chi formula deciding integrality: printed, hrr or both")
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "Write the report to PATH instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    Options opts;
    CLI::App app{"Intersection theory on quadrics and rank-2 weak Fano classification"};
    app.require_subcommand(1);

    auto* classify_cmd = app.add_subcommand("classify", "Run the case analysis and emit one record per candidate");
    add_run_flags(classify_cmd, opts);
    classify_cmd->add_option("--jobs", opts.config.jobs, "Worker threads")->capture_default_str();
    classify_cmd->add_flag("--trace", opts.trace, "Print one line per filter evaluation to stderr");

    auto* verify_cmd = app.add_subcommand("verify-paper", "Recompute every published number and compare");
    add_run_flags(verify_cmd, opts);

    auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic of a rank-2 bundle on Q^n");
    chi_cmd->add_option("--n", opts.n, "Quadric dimension")->capture_default_str();
    chi_cmd->add_option("--c1", opts.c1, "c1 (rational)")->capture_default_str();
    chi_cmd->add_option("--c2", opts.c2, "c2 (rational)")->capture_default_str();
    chi_cmd->add_option("--formula", opts.formula, "printed, hrr or both")->capture_default_str();
    chi_cmd->add_option("--out", opts.out, "Output file");

    auto* segre_cmd = app.add_subcommand("segre", "Segre classes of (c1, c2), optionally twisted");
    segre_cmd->add_option("--c1", opts.c1, "c1 (rational)")->capture_default_str();
    segre_cmd->add_option("--c2", opts.c2, "c2 (rational)")->capture_default_str();
    segre_cmd->add_option("--twist", opts.twist_by, "Twist by O(t) first (rational)")->capture_default_str();
    segre_cmd->add_option("--i-max", opts.i_max, "Highest Segre class")->capture_default_str();
    segre_cmd->add_option("--out", opts.out, "Output file");

    auto* bound_cmd = app.add_subcommand("bound", "Nef c2 bound (5 <= n <= 11) or certified sin bound (n >= 12)");
    bound_cmd->add_option("--n", opts.n, "Quadric dimension")->capture_default_str();
    bound_cmd->add_option("--c1", opts.c1, "Normalized c1 (0 or -1)")->capture_default_str();
    bound_cmd->add_option("--precision", opts.config.precision, "Decimal digits")->capture_default_str();
    bound_cmd->add_option("--out", opts.out, "Output file");

    auto* chow_cmd = app.add_subcommand("chow-check", "Degree normalization and middle relations of Q^n");
    chow_cmd->add_option("--n", opts.n, "Quadric dimension")->capture_default_str();
    chow_cmd->add_option("--out", opts.out, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitContract;
    }

    try {
        if (*classify_cmd) return run_classify(opts);
        if (*verify_cmd) return run_verify(opts);
        if (*chi_cmd) return run_chi(opts);
        if (*segre_cmd) return run_segre(opts);
        if (*bound_cmd) return run_bound(opts);
        if (*chow_cmd) return run_chow_check(opts);
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitContract;
    } catch (const NotApplicable& e) {
        std::cerr << "not applicable: " << e.what() << '\n';
        return kExitContract;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitContract;
    }
    return kExitContract;
}
