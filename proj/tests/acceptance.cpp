// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "oracles.hpp"

#include "qchow/bundle.hpp"
#include "qchow/chow.hpp"
#include "qchow/classifier.hpp"
#include "qchow/filters.hpp"
#include "qchow/replay.hpp"
#include "qchow/report.hpp"
#include "qchow/riemann_roch.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

using namespace qchow;
using qchow::testing::uniform;

namespace {

struct Criterion {
    std::string name;
    double time_limit_s;  // 0: no limit
    std::function<bool(std::string&)> run;
};

const PaperCheck* find_check(const std::vector<PaperCheck>& cs, const std::string& id) {
    const auto it = std::find_if(cs.begin(), cs.end(), [&](const PaperCheck& c) { return c.claim_id == id; });
    return it == cs.end() ? nullptr : &*it;
}

bool chow_relations(std::string& detail) {
    for (int n = 3; n <= 12; ++n) {
        const QuadricContext ctx(n);
        if (degree(ChowClass::hyperplane_power(ctx, n)) != 2) {
            detail = "deg H^n != 2 at n=" + std::to_string(n);
            return false;
        }
        if (ctx.is_odd() && !middle_relations_check(ctx)) {
            detail = "middle relations fail at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "n in [3,12]";
    return true;
}

bool split_hrr(std::string& detail) {
    const QuadricContext q5(5);
    int pairs = 0;
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b) {
            const Rational lhs = chi_hrr(q5, make_chern(a + b, a * b));
            const Rational rhs(chi_line_oracle(q5, a) + chi_line_oracle(q5, b));
            if (lhs != rhs) {
                detail = "mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")";
                return false;
            }
            ++pairs;
        }
    detail = std::to_string(pairs) + " pairs";
    return pairs == 169;
}

bool published_chi(std::string& detail) {
    struct Case {
        long c1, c2;
        Rational printed;
    };
    const std::vector<Case> cases = {
        {0, 2, make_rational(-11, 12)}, {-1, 2, make_rational(9, 4)}, {0, 1, make_rational(1, 8)}};
    const auto checks = verify_paper(RunConfig{});
    for (const auto& c : cases) {
        const ChernData d = make_chern(c.c1, c.c2);
        const std::string tag = "(" + std::to_string(c.c1) + "," + std::to_string(c.c2) + ")";
        if (chi_q5(d, ChiFormula::Printed) != c.printed || is_integer(chi_q5(d, ChiFormula::Hrr))) {
            detail = "value mismatch at " + tag;
            return false;
        }
        const PaperCheck* pc = find_check(checks, "chi" + tag + ".hrr");
        if (!pc || pc->status != CheckStatus::ConclusionAgrees || pc->conclusion.rfind("integrality", 0) != 0) {
            detail = "verify-paper status at " + tag;
            return false;
        }
    }
    detail = "printed -11/12, 9/4, 1/8; hrr non-integral";
    return true;
}

bool segre_consistency(std::string& detail) {
    for (int trial = 0; trial < 100; ++trial) {
        const ChernData d = make_chern(uniform(-20, 20), uniform(-20, 20));
        if (segre_recurrence(d, 10) != segre_inversion(d, 10)) {
            detail = "recurrence vs inversion";
            return false;
        }
    }
    for (int trial = 0; trial < 50; ++trial) {
        const ChernData d = make_chern(uniform(-20, 20), uniform(-20, 20));
        const Rational a = d.c1, b = d.c2;
        const auto s = segre_recurrence(d, 5);
        const bool ok = s[1] == a && s[2] == a * a - b && s[3] == a * (a * a - 2 * b) &&
                        s[4] == a * a * a * a - 3 * a * a * b + b * b &&
                        s[5] == a * (a * a - 3 * b) * (a * a - b);
        if (!ok) {
            detail = "printed identity";
            return false;
        }
    }
    detail = "100 + 50 random pairs";
    return true;
}

bool q6_obstructions(std::string& detail) {
    const Rational a = s6_closed_form_q6(twist(make_chern(0, 3), 3));
    const Rational b = s6_closed_form_q6(twist(make_chern(-1, 3), make_rational(7, 2)));
    if (!(a < 0 && b < 0)) {
        detail = "s6 not negative";
        return false;
    }
    const auto checks = verify_paper(RunConfig{});
    const PaperCheck* ca = find_check(checks, "q6.s6_(0,3)_twist_3");
    const PaperCheck* cb = find_check(checks, "q6.s6_(-1,3)_twist_7/2");
    const auto ok = [](const PaperCheck* c, const char* recomputed, const char* paper) {
        return c && c->status == CheckStatus::ConclusionAgrees && c->conclusion.rfind("sign", 0) == 0 &&
               c->recomputed_value == recomputed && c->paper_value == paper;
    };
    if (!ok(ca, "-3456", "-24192") || !ok(cb, "-82223/32", "-186046/32")) {
        detail = "verify-paper sign checks";
        return false;
    }
    detail = "s6 = " + to_string(a) + ", " + to_string(b);
    return true;
}

bool claim_bounds(std::string& detail) {
    for (int n = 5; n <= 11; ++n)
        for (int c1 : {0, -1}) {
            const int expected = n == 6 ? 3 : 2;
            if (nef_c2_bound(n, c1) != expected) {
                detail = "n=" + std::to_string(n) + " c1=" + std::to_string(c1);
                return false;
            }
        }
    detail = "14 bounds";
    return true;
}

bool sin_bound(std::string& detail) {
    const Interval f = sin_gap_function(make_rational(1, 11), kDefaultPrecisionDigits);
    if (!f.within(make_rational(54940, 100000), make_rational(54960, 100000))) {
        detail = "f(1/11) = " + f.to_string(8);
        return false;
    }
    for (int n = 12; n <= 200; ++n) {
        const Interval gap = sin_bound_gap(n, kDefaultPrecisionDigits);
        const double width = gap.upper_double() - gap.lower_double();
        if (sin_incompatibility(n).status != VerdictStatus::Excluded || !(width < gap.lower_double())) {
            detail = "n=" + std::to_string(n);
            return false;
        }
    }
    detail = "f(1/11) = " + f.to_string(6) + "; n in [12,200]";
    return true;
}

bool splitting_instances(std::string& detail) {
    const ChernData a = twist(make_chern(-1, 1), 4);
    const ChernData b = twist(make_chern(0, 0), 4);
    const bool ok = a == make_chern(7, 13) && b == make_chern(8, 16) && splitting_bound(5, a.c1) == 14 &&
                    splitting_bound(5, b.c1) == 17 &&
                    splitting_criterion(5, a).status == VerdictStatus::SplitForced &&
                    splitting_criterion(5, b).status == VerdictStatus::SplitForced;
    detail = "(7,13): 13 <= 14; (8,16): 16 <= 17";
    return ok;
}

bool main_theorem(std::string& detail) {
    const RunConfig config;
    const auto records = classify(config);
    const auto again = classify(config);
    const auto left = survivors(records);
    const bool others_resolved = std::all_of(records.begin(), records.end(), [](const ClassificationRecord& r) {
        return r.outcome == Outcome::Split || r.outcome == Outcome::Excluded || r.outcome == Outcome::Cayley;
    });
    const bool deterministic =
        emit_report(records, OutputFormat::Json).document == emit_report(again, OutputFormat::Json).document;
    detail = std::to_string(records.size()) + " records, " + std::to_string(left.size()) + " survivor(s)";
    return left.size() == 1 && left[0].n == 5 && left[0].c1 == -1 && left[0].c2 == 1 && others_resolved &&
           deterministic;
}

bool bigness(std::string& detail) {
    const ChernData d = make_chern(-1, 1);
    const Rational deg = anticanonical_degree(5, d);
    const Rational oracle = qchow::testing::anticanonical_degree_binomial(5, d.c1, d.c2);
    // With E0 = E(3) the anticanonical class is exactly 2 xi.
    const ChernData e0 = twist(d, 3);
    const Rational pure = qchow::testing::anticanonical_degree_binomial(5, e0.c1, e0.c2);
    detail = "(-K)^6 = " + to_string(deg);
    return deg == 46080 && oracle == deg && pure == deg && anticanonical_class(5, d, 3).h == 0;
}

bool twist_identity(std::string& detail) {
    for (int trial = 0; trial < 100; ++trial) {
        const ChernData d = make_chern(uniform(-50, 50), uniform(-50, 50));
        const int n = static_cast<int>(uniform(5, 12));
        const ChernData t = twist(d, n - 1);
        if (t.c2 != d.c2 + (n - 1) * d.c1 + (n - 1) * (n - 1) || t.c1 != d.c1 + 2 * (n - 1)) {
            detail = "mismatch";
            return false;
        }
    }
    detail = "100 random pairs";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"chow_relations", 0.1, chow_relations},
        {"split_bundle_hrr_oracle", 1.0, split_hrr},
        {"published_chi_values", 0, published_chi},
        {"segre_consistency", 1.0, segre_consistency},
        {"q6_obstructions", 0, q6_obstructions},
        {"nef_c2_bounds", 0.1, claim_bounds},
        {"sin_bound", 2.0, sin_bound},
        {"splitting_criterion_instances", 0, splitting_instances},
        {"main_theorem_replay", 5.0, main_theorem},
        {"bigness_witness", 0, bigness},
        {"twist_identity", 0, twist_identity},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.time_limit_s > 0 && secs >= c.time_limit_s) {
            ok = false;
            detail += "; over time limit";
        }
        if (!ok) ++failures;
        std::printf("%s %2zu %-30s %8.3fs  %s\n", ok ? "PASS" : "FAIL", i + 1, c.name.c_str(), secs, detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
