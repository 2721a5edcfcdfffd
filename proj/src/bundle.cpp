#include "qchow/bundle.hpp"

#include <string>

namespace qchow {

namespace {

void require_nonnegative(int i_max, const char* what) {
    if (i_max < 0) throw ContractError(std::string(what) + ": truncation index must be non-negative");
}

}  // namespace

ChernData make_chern(long c1, long c2) { return ChernData{Rational(c1), Rational(c2)}; }

ChernData twist(const ChernData& d, const Rational& t) {
    return ChernData{d.c1 + 2 * t, d.c2 + t * d.c1 + t * t};
}

std::vector<Rational> segre_recurrence(const ChernData& d, int i_max) {
    require_nonnegative(i_max, "segre_recurrence");
    std::vector<Rational> s;
    s.reserve(static_cast<std::size_t>(i_max) + 1);
    s.emplace_back(1);
    if (i_max >= 1) s.push_back(d.c1);
    for (int i = 2; i <= i_max; ++i) {
        const auto k = static_cast<std::size_t>(i);
        s.push_back(d.c1 * s[k - 1] - d.c2 * s[k - 2]);
    }
    return s;
}

std::vector<Rational> segre_inversion(const ChernData& d, int i_max) {
    require_nonnegative(i_max, "segre_inversion");
    const auto order = static_cast<std::size_t>(i_max);
    const TruncatedSeries c_minus_t(order, {Rational(1), Rational(-d.c1), d.c2});
    return c_minus_t.inverse().coefficients();
}

Rational s6_closed_form_q6(const ChernData& d) {
    const Rational a2 = d.c1 * d.c1;
    const Rational a4 = a2 * a2;
    const Rational a6 = a4 * a2;
    const Rational b2 = d.c2 * d.c2;
    const Rational b3 = b2 * d.c2;
    return 2 * a6 - 10 * a4 * d.c2 + 12 * a2 * b2 - 2 * b3;
}

std::vector<Rational> power_sums(const ChernData& d, int i_max) {
    require_nonnegative(i_max, "power_sums");
    std::vector<Rational> p;
    p.reserve(static_cast<std::size_t>(i_max) + 1);
    p.emplace_back(ChernData::kRank);
    if (i_max >= 1) p.push_back(d.c1);
    for (int i = 2; i <= i_max; ++i) {
        const auto k = static_cast<std::size_t>(i);
        p.push_back(d.c1 * p[k - 1] - d.c2 * p[k - 2]);
    }
    return p;
}

TruncatedSeries chern_character(const ChernData& d, int n) {
    if (n < 1) throw ContractError("chern_character: truncation order must be at least 1");
    const auto p = power_sums(d, n);
    std::vector<Rational> coeffs(p.size());
    Rational factorial = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) factorial *= static_cast<unsigned long>(i);
        coeffs[i] = p[i] / factorial;
    }
    return TruncatedSeries(static_cast<std::size_t>(n), std::move(coeffs));
}

ChowClass chern_character(const ChernData& d, const QuadricContext& ctx) {
    return ChowClass(ctx, chern_character(d, ctx.dimension()));
}

}  // namespace qchow
