#include "qchow/riemann_roch.hpp"

#include <string>

namespace qchow {

namespace {

// x / (1 - e^{-x}) as a series in x, truncated at the given order.
TruncatedSeries todd_generator(std::size_t order) {
    // (1 - e^{-x}) / x = sum_{i>=0} (-1)^i x^i / (i+1)!
    std::vector<Rational> coeffs(order + 1);
    Rational factorial = 1;
    for (std::size_t i = 0; i <= order; ++i) {
        factorial *= static_cast<unsigned long>(i + 1);
        coeffs[i] = Rational(i % 2 == 0 ? 1 : -1) / factorial;
    }
    return TruncatedSeries(order, std::move(coeffs)).inverse();
}

// Binomial coefficient as a polynomial in the top entry: p(p-1)...(p-q+1)/q!.
// Vanishes for 0 <= p < q, and is (-1)^q C(q-p-1, q) for p < 0.
Integer binomial(const Integer& p, unsigned long q) {
    Integer num = 1;
    Integer den = 1;
    for (unsigned long i = 0; i < q; ++i) {
        num *= p - i;
        den *= i + 1;
    }
    return num / den;
}

}  // namespace

ToddClass todd_tangent(const QuadricContext& ctx) {
    const auto order = static_cast<std::size_t>(ctx.dimension());
    const TruncatedSeries q = todd_generator(order);
    const TruncatedSeries td = q.pow(static_cast<unsigned>(ctx.dimension() + 2)) * q.rescaled(2).inverse();
    return ToddClass{ctx, ChowClass(ctx, td)};
}

Rational chi_hrr(const QuadricContext& ctx, const ChernData& d) {
    return degree(chern_character(d, ctx) * todd_tangent(ctx).value);
}

std::string_view to_string(ChiFormula f) {
    switch (f) {
        case ChiFormula::Printed:
            return "printed";
        case ChiFormula::Hrr:
            return "hrr";
    }
    return "?";
}

Rational chi_q5(const ChernData& d, ChiFormula formula) {
    const Rational& a = d.c1;
    const Rational& b = d.c2;
    const Rational a2 = a * a;
    const Rational a3 = a2 * a;
    const Rational quadratic = formula == ChiFormula::Printed ? Rational(a2 - b) : Rational(a2 - 2 * b);
    return 2 + make_rational(894, 360) * a + make_rational(55, 24) * quadratic + a3 - 3 * a * b +
           make_rational(5, 24) * (a2 * a2 - 4 * a2 * b + 2 * b * b) +
           make_rational(1, 60) * (a3 * a2 - 5 * a3 * b + 5 * a * b * b);
}

Integer chi_line_oracle(const QuadricContext& ctx, long a) {
    const long n = ctx.dimension();
    const auto q = static_cast<unsigned long>(n + 1);
    return binomial(Integer(n + 1 + a), q) - binomial(Integer(n - 1 + a), q);
}

Integer h0_line_oracle(const QuadricContext& ctx, long a) {
    if (a < 0)
        throw NotApplicable("h0 oracle only covers non-negative twists, got a = " + std::to_string(a));
    return chi_line_oracle(ctx, a);
}

}  // namespace qchow
