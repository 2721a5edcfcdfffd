#pragma once
// Exclusion filters for rank-2 weak Fano candidates on Q^n.
//
// Each filter is a pure function of (n, Chern data) returning a verdict with
// exact witnesses. Facts that cannot be read off Chern data (global
// generation of E(n-1), nefness of E((n-c1)/2), smoothness of zero loci) are
// never checked; the verdict records them as cited premises.

#include "qchow/bundle.hpp"
#include "qchow/chow.hpp"
#include "qchow/interval.hpp"
#include "qchow/quadratic_irrational.hpp"
#include "qchow/rational.hpp"
#include "qchow/riemann_roch.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qchow {

enum class VerdictStatus { Pass, Excluded, NotApplicable, SplitForced };

std::string_view to_string(VerdictStatus s);

struct FilterVerdict {
    std::string filter_id;
    VerdictStatus status = VerdictStatus::Pass;
    std::string reason;
    // name -> exact rational ("p/q") or certified decimal ("x ±eps").
    std::map<std::string, std::string> witnesses;
    // Facts the verdict relies on but does not verify.
    std::vector<std::string> premises;
};

namespace filter_ids {
inline constexpr std::string_view kBogomolov = "bogomolov";
inline constexpr std::string_view kSplittingCriterion = "splitting_criterion";
inline constexpr std::string_view kNefAlphaBound = "nef_alpha_bound";
inline constexpr std::string_view kSegreNef = "segre_nef_obstruction";
inline constexpr std::string_view kRrIntegrality = "rr_integrality";
inline constexpr std::string_view kGgC2Upper = "gg_c2_upper";
inline constexpr std::string_view kSinIncompatibility = "sin_incompatibility";
inline constexpr std::string_view kCayleyEndgame = "cayley_endgame";
}  // namespace filter_ids

// ---------------------------------------------------------------------------
// Stability

enum class BogomolovStatus { StableImpossible, StablePossible };

std::string_view to_string(BogomolovStatus s);

// StableImpossible iff c1^2 >= 4 c2. Throws ContractError on non-integral data.
BogomolovStatus bogomolov_status(const ChernData& d);
FilterVerdict bogomolov_verdict(const ChernData& d);

// ---------------------------------------------------------------------------
// Splitting criterion for a globally generated unstable rank-2 bundle F:
// F splits if c2(F) <= (n-2)(c1(F)-n+2) + n-3. NotApplicable for n < 5.

Rational splitting_bound(int n, const Rational& c1_f);
FilterVerdict splitting_criterion(int n, const ChernData& f);

// ---------------------------------------------------------------------------
// Nef twist E0 = E((n-c1)/2) and the anticanonical divisor of P(E).

struct AnticanonicalClass {
    Rational xi;  // coefficient of the tautological class
    Rational h;   // coefficient of the pulled-back hyperplane class
};

// -K_{P(E)} written against xi_{E(t)}: 2 xi_{E(t)} + (n - c1 - 2t) H.
AnticanonicalClass anticanonical_class(int n, const ChernData& d, const Rational& t = 0);

// (n - c1) / 2.
Rational nef_twist_amount(int n, const ChernData& d);

struct ProjectivizationData {
    QuadricContext context;
    ChernData twisted;          // E0
    Rational antican_xi;        // always 2
    Rational antican_h;         // n - c1, for the untwisted presentation
    std::vector<Rational> segre;  // s_0..s_n of E0 (coefficients of H^i)
};

ProjectivizationData projectivization(const QuadricContext& ctx, const ChernData& d);

// (-K)^{n+1} on P(E) = 2^{n+1} * deg(s_n(E0) H^n).
Rational anticanonical_degree(int n, const ChernData& d);

// ---------------------------------------------------------------------------
// Nef alpha bound: c1(E0)^2 >= alpha c2(E0).

struct AlphaEntry {
    int n_min;
    std::optional<int> n_max;  // nullopt: every n >= n_min
    QuadraticIrrational alpha;
};

const std::vector<AlphaEntry>& alpha_table();
// Throws NotApplicable for n < 5.
const QuadraticIrrational& alpha_for(int n);

// Largest integer c2 with n^2 >= alpha(n) (c2 - c1^2/4 + n^2/4), decided exactly.
// c1 must be 0 or -1; NotApplicable outside 5 <= n <= 11.
int nef_c2_bound(int n, int c1);
FilterVerdict nef_alpha_filter(int n, const ChernData& d);

// ---------------------------------------------------------------------------
// Top Segre number of the nef twist must be non-negative.

FilterVerdict segre_nef_obstruction(int n, const ChernData& d);

// ---------------------------------------------------------------------------
// Euler characteristic on a linear section Q^5 must be an integer.

enum class RrDecision { Printed, Hrr, Both };

std::string_view to_string(RrDecision m);

// Excluded iff the deciding value is non-integral: the printed closed form
// for Printed, the HRR form for Hrr and Both. Both records the two values
// and whether their integrality verdicts agree.
FilterVerdict rr_integrality(const ChernData& d, RrDecision mode = RrDecision::Both);

// ---------------------------------------------------------------------------
// Globally generated F = E(n-1): c1(F)^2 >= 3 c2(F). d must be normalized.

FilterVerdict gg_c2_upper(int n, const ChernData& d);

// ---------------------------------------------------------------------------
// n >= 12: (4/3)(n-1)^2 < 71 / (4 sin^2(pi/(n-1))), certified.

inline constexpr int kDefaultPrecisionDigits = 40;

// f(x) = sqrt(213)/4 - sin(pi x)/x, enclosed for rational 0 < x <= 1/2.
Interval sin_gap_function(const Rational& x, int decimal_digits);

// 71 / (4 sin^2(pi/m)) - (4/3) m^2 with m = n - 1.
Interval sin_bound_gap(int n, int decimal_digits);

FilterVerdict sin_incompatibility(int n, int decimal_digits = kDefaultPrecisionDigits);

}  // namespace qchow
