#include "qchow/filters.hpp"

#include <algorithm>
#include <string>

namespace qchow {

namespace {

std::string str(const Rational& r) { return to_string(r); }
std::string str(bool b) { return b ? "true" : "false"; }

void require_integral(const ChernData& d, const char* op) {
    if (!d.is_integral())
        throw ContractError(std::string(op) + ": Chern data (" + str(d.c1) + ", " + str(d.c2) +
                            ") is not integral");
}

void require_normalized(const ChernData& d, const char* op) {
    require_integral(d, op);
    if (d.c1 != 0 && d.c1 != -1)
        throw ContractError(std::string(op) + ": expected normalized c1 in {0, -1}, got " + str(d.c1));
}

FilterVerdict not_applicable(std::string_view id, std::string reason) {
    FilterVerdict v;
    v.filter_id = std::string(id);
    v.status = VerdictStatus::NotApplicable;
    v.reason = std::move(reason);
    return v;
}

// Top Segre number of E0 after the degree map.
Rational normalized_top_segre(int n, const ChernData& e0) {
    return 2 * segre_recurrence(e0, n).back();
}

}  // namespace

std::string_view to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Pass:
            return "Pass";
        case VerdictStatus::Excluded:
            return "Excluded";
        case VerdictStatus::NotApplicable:
            return "NotApplicable";
        case VerdictStatus::SplitForced:
            return "SplitForced";
    }
    return "?";
}

std::string_view to_string(BogomolovStatus s) {
    return s == BogomolovStatus::StableImpossible ? "StableImpossible" : "StablePossible";
}

std::string_view to_string(RrDecision m) {
    switch (m) {
        case RrDecision::Printed:
            return "printed";
        case RrDecision::Hrr:
            return "hrr";
        case RrDecision::Both:
            return "both";
    }
    return "?";
}

// ---------------------------------------------------------------------------

BogomolovStatus bogomolov_status(const ChernData& d) {
    require_integral(d, "bogomolov_status");
    return sgn(d.discriminant()) >= 0 ? BogomolovStatus::StableImpossible : BogomolovStatus::StablePossible;
}

FilterVerdict bogomolov_verdict(const ChernData& d) {
    const BogomolovStatus s = bogomolov_status(d);
    FilterVerdict v;
    v.filter_id = std::string(filter_ids::kBogomolov);
    v.status = VerdictStatus::Pass;
    v.reason = s == BogomolovStatus::StableImpossible
                   ? "c1^2 >= 4c2: a stable bundle would need c1^2 < 4c2, so E is unstable"
                   : "c1^2 < 4c2: stability is not excluded";
    v.witnesses = {{"c1_sq", str(d.c1 * d.c1)},
                   {"four_c2", str(4 * d.c2)},
                   {"discriminant", str(d.discriminant())},
                   {"status", std::string(to_string(s))}};
    return v;
}

// ---------------------------------------------------------------------------

Rational splitting_bound(int n, const Rational& c1_f) { return (n - 2) * (c1_f - n + 2) + (n - 3); }

FilterVerdict splitting_criterion(int n, const ChernData& f) {
    if (n < 5) return not_applicable(filter_ids::kSplittingCriterion, "splitting criterion needs n >= 5");
    const Rational bound = splitting_bound(n, f.c1);
    FilterVerdict v;
    v.filter_id = std::string(filter_ids::kSplittingCriterion);
    v.witnesses = {{"c1_F", str(f.c1)}, {"c2_F", str(f.c2)}, {"bound", str(bound)}};
    v.premises = {"F is globally generated and unstable"};
    if (f.c2 <= bound) {
        v.status = VerdictStatus::SplitForced;
        v.reason = "c2(F) = " + str(f.c2) + " <= (n-2)(c1(F)-n+2)+n-3 = " + str(bound) + ", so F splits";
    } else {
        v.status = VerdictStatus::Pass;
        v.reason = "c2(F) = " + str(f.c2) + " > " + str(bound) + ": criterion silent";
    }
    return v;
}

// ---------------------------------------------------------------------------

AnticanonicalClass anticanonical_class(int n, const ChernData& d, const Rational& t) {
    return AnticanonicalClass{2, n - d.c1 - 2 * t};
}

Rational nef_twist_amount(int n, const ChernData& d) { return (n - d.c1) / 2; }

ProjectivizationData projectivization(const QuadricContext& ctx, const ChernData& d) {
    const int n = ctx.dimension();
    const ChernData e0 = twist(d, nef_twist_amount(n, d));
    const AnticanonicalClass k = anticanonical_class(n, d);
    return ProjectivizationData{ctx, e0, k.xi, k.h, segre_recurrence(e0, n)};
}

Rational anticanonical_degree(int n, const ChernData& d) {
    if (n < 1) throw ContractError("anticanonical_degree: n must be positive");
    const ChernData e0 = twist(d, nef_twist_amount(n, d));
    Rational two_pow = 1;
    for (int i = 0; i <= n; ++i) two_pow *= 2;
    return two_pow * normalized_top_segre(n, e0);
}

// ---------------------------------------------------------------------------

const std::vector<AlphaEntry>& alpha_table() {
    static const std::vector<AlphaEntry> table = {
        {5, 6, QuadraticIrrational(3, 0, 1, 0)},
        {7, 8, QuadraticIrrational(2, 1, 1, 2)},
        {9, 10, QuadraticIrrational(5, 1, 2, 5)},
        {11, std::nullopt, QuadraticIrrational(2, 1, 1, 3)},
    };
    return table;
}

const QuadraticIrrational& alpha_for(int n) {
    for (const auto& e : alpha_table())
        if (n >= e.n_min && (!e.n_max || n <= *e.n_max)) return e.alpha;
    throw NotApplicable("no nef alpha constant for n = " + std::to_string(n));
}

namespace {

// c2(E0) = c2 - c1^2/4 + n^2/4.
Rational twisted_c2(int n, const Rational& c1, const Rational& c2) { return c2 - c1 * c1 / 4 + Rational(n * n) / 4; }

bool nef_inequality_holds(int n, const QuadraticIrrational& alpha, const Rational& c1, const Rational& c2) {
    return compare_scaled(alpha, twisted_c2(n, c1, c2), Rational(n * n)) <= 0;
}

}  // namespace

int nef_c2_bound(int n, int c1) {
    if (n < 5 || n > 11) throw NotApplicable("nef_c2_bound covers 5 <= n <= 11, got n = " + std::to_string(n));
    if (c1 != 0 && c1 != -1) throw ContractError("nef_c2_bound: c1 must be 0 or -1");
    const QuadraticIrrational& alpha = alpha_for(n);
    // Below this start value c2(E0) <= 0, where the inequality holds trivially.
    const Rational c1r(c1);
    long c2 = floor_of(c1r * c1r / 4 - Rational(n * n) / 4).get_si();
    while (nef_inequality_holds(n, alpha, c1r, Rational(c2 + 1))) ++c2;
    return static_cast<int>(c2);
}

FilterVerdict nef_alpha_filter(int n, const ChernData& d) {
    if (n < 5 || n > 11)
        return not_applicable(filter_ids::kNefAlphaBound, "alpha bound is used for 5 <= n <= 11");
    require_normalized(d, "nef_alpha_filter");
    const int bound = nef_c2_bound(n, static_cast<int>(d.c1.get_num().get_si()));
    FilterVerdict v;
    v.filter_id = std::string(filter_ids::kNefAlphaBound);
    v.witnesses = {{"alpha", alpha_for(n).to_string()},
                   {"c1_E0_sq", str(Rational(n * n))},
                   {"c2_E0", str(twisted_c2(n, d.c1, d.c2))},
                   {"c2_bound", std::to_string(bound)}};
    v.premises = {"E((n-c1)/2) is nef"};
    if (d.c2 > bound) {
        v.status = VerdictStatus::Excluded;
        v.reason = "c2 = " + str(d.c2) + " exceeds the nef bound c2 <= " + std::to_string(bound) +
                   " from c1(E0)^2 >= alpha c2(E0)";
    } else {
        v.status = VerdictStatus::Pass;
        v.reason = "c2 = " + str(d.c2) + " within the nef bound c2 <= " + std::to_string(bound);
    }
    return v;
}

// ---------------------------------------------------------------------------

FilterVerdict segre_nef_obstruction(int n, const ChernData& d) {
    if (n < 1) throw ContractError("segre_nef_obstruction: n must be positive");
    const Rational t = nef_twist_amount(n, d);
    const ChernData e0 = twist(d, t);
    const Rational top = normalized_top_segre(n, e0);
    FilterVerdict v;
    v.filter_id = std::string(filter_ids::kSegreNef);
    v.witnesses = {{"twist", str(t)},
                   {"c1_E0", str(e0.c1)},
                   {"c2_E0", str(e0.c2)},
                   {"s" + std::to_string(n), str(top)}};
    v.premises = {"E((n-c1)/2) is nef, so s_n(E0) = pi_*(xi^{n+1}) >= 0"};
    if (sgn(top) < 0) {
        v.status = VerdictStatus::Excluded;
        v.reason = "s_" + std::to_string(n) + "(E0) = " + str(top) + " < 0 contradicts nefness of E0";
    } else {
        v.status = VerdictStatus::Pass;
        v.reason = "s_" + std::to_string(n) + "(E0) = " + str(top) + " >= 0";
    }
    return v;
}

// ---------------------------------------------------------------------------

FilterVerdict rr_integrality(const ChernData& d, RrDecision mode) {
    require_integral(d, "rr_integrality");
    const Rational printed = chi_q5(d, ChiFormula::Printed);
    const Rational hrr = chi_q5(d, ChiFormula::Hrr);
    const bool printed_int = is_integer(printed);
    const bool hrr_int = is_integer(hrr);
    const bool deciding_int = mode == RrDecision::Printed ? printed_int : hrr_int;

    FilterVerdict v;
    v.filter_id = std::string(filter_ids::kRrIntegrality);
    v.premises = {"restriction to a linear section Q^5 keeps (c1, c2)"};
    if (mode != RrDecision::Hrr) {
        v.witnesses["chi_printed"] = str(printed);
        v.witnesses["printed_integral"] = str(printed_int);
    }
    if (mode != RrDecision::Printed) {
        v.witnesses["chi_hrr"] = str(hrr);
        v.witnesses["hrr_integral"] = str(hrr_int);
    }
    if (mode == RrDecision::Both) v.witnesses["verdicts_agree"] = str(printed_int == hrr_int);
    v.witnesses["mode"] = std::string(to_string(mode));

    const Rational& deciding = mode == RrDecision::Printed ? printed : hrr;
    if (!deciding_int) {
        v.status = VerdictStatus::Excluded;
        v.reason = "chi(E|Q^5) = " + str(deciding) + " is not an integer";
    } else {
        v.status = VerdictStatus::Pass;
        v.reason = "chi(E|Q^5) = " + str(deciding) + " is an integer";
    }
    if (mode == RrDecision::Both && printed_int != hrr_int)
        v.reason += " (printed closed form gives " + str(printed) + ", which disagrees on integrality)";
    return v;
}

// ---------------------------------------------------------------------------

FilterVerdict gg_c2_upper(int n, const ChernData& d) {
    require_normalized(d, "gg_c2_upper");
    const ChernData f = twist(d, Rational(n - 1));
    const Rational cap = f.c1 * f.c1 / 3;
    const Rational coarse = Rational(4 * (n - 1) * (n - 1)) / 3;
    FilterVerdict v;
    v.filter_id = std::string(filter_ids::kGgC2Upper);
    v.witnesses = {{"c1_F", str(f.c1)}, {"c2_F", str(f.c2)}, {"c1_F_sq_over_3", str(cap)}, {"coarse_bound", str(coarse)}};
    v.premises = {"F = E(n-1) is globally generated"};
    if (f.c2 > cap) {
        v.status = VerdictStatus::Excluded;
        v.reason = "c2(F) = " + str(f.c2) + " > c1(F)^2/3 = " + str(cap);
    } else {
        v.status = VerdictStatus::Pass;
        v.reason = "c2(F) = " + str(f.c2) + " <= c1(F)^2/3 = " + str(cap);
    }
    return v;
}

// ---------------------------------------------------------------------------

Interval sin_gap_function(const Rational& x, int decimal_digits) {
    if (sgn(x) <= 0 || x > Rational(1, 2)) throw ContractError("sin_gap_function needs 0 < x <= 1/2");
    const mpfr_prec_t prec = bits_for_digits(decimal_digits);
    const Interval xi(x, prec);
    const Interval root = Interval::sqrt_of(213, prec) / Interval(4, 4, prec);
    return root - (Interval::pi(prec) * xi).sin() / xi;
}

Interval sin_bound_gap(int n, int decimal_digits) {
    if (n < 3) throw ContractError("sin_bound_gap needs n >= 3");
    const mpfr_prec_t prec = bits_for_digits(decimal_digits);
    const long m = n - 1;
    const Interval s = (Interval::pi(prec) / Interval(m, m, prec)).sin();
    const Interval lhs = Interval(71, 71, prec) / (Interval(4, 4, prec) * s * s);
    const Interval rhs = Interval(make_rational(4 * m * m, 3), prec);
    return lhs - rhs;
}

FilterVerdict sin_incompatibility(int n, int decimal_digits) {
    if (n < 12) return not_applicable(filter_ids::kSinIncompatibility, "sin bound is stated for n >= 12");
    const int m = n - 1;
    const int shown = std::min(decimal_digits, 30);
    const Interval f = sin_gap_function(Rational(1, m), decimal_digits);
    const Interval gap = sin_bound_gap(n, decimal_digits);
    FilterVerdict v;
    v.filter_id = std::string(filter_ids::kSinIncompatibility);
    v.witnesses = {{"m", std::to_string(m)},
                   {"f_at_1_over_m", f.to_string(shown)},
                   {"gap", gap.to_string(shown)},
                   {"error_bound", gap.radius_string()},
                   {"precision_digits", std::to_string(decimal_digits)}};
    v.premises = {"F = E(n-1) is globally generated and has a section with smooth codimension-2 zero locus"};
    if (gap.certainly_positive()) {
        v.status = VerdictStatus::Excluded;
        v.reason = "(4/3)(n-1)^2 < 71/(4 sin^2(pi/(n-1))): the upper and lower bounds on c2(F) are incompatible";
    } else {
        v.status = VerdictStatus::Pass;
        v.reason = "could not certify the gap at the requested precision";
    }
    return v;
}

}  // namespace qchow
