#include "qchow/chow.hpp"

#include <string>
#include <utility>

namespace qchow {

QuadricContext::QuadricContext(int n) : n_(n) {
    if (n < kMinDimension)
        throw ContractError("quadric dimension must be at least 3, got " + std::to_string(n));
}

int QuadricContext::middle_index() const {
    if (!is_odd()) throw NotApplicable("middle index is only defined for odd-dimensional quadrics");
    return (n_ - 1) / 2;
}

ChowClass::ChowClass(QuadricContext ctx) : ctx_(ctx), series_(static_cast<std::size_t>(ctx.dimension())) {}

ChowClass::ChowClass(QuadricContext ctx, std::vector<Rational> coeffs)
    : ctx_(ctx), series_(static_cast<std::size_t>(ctx.dimension()), std::move(coeffs)) {}

ChowClass::ChowClass(QuadricContext ctx, const TruncatedSeries& series)
    : ctx_(ctx), series_(static_cast<std::size_t>(ctx.dimension()), series.coefficients()) {}

ChowClass ChowClass::hyperplane_power(QuadricContext ctx, int power, const Rational& c) {
    if (power < 0) throw ContractError("negative power of H");
    return ChowClass(ctx, TruncatedSeries::monomial(static_cast<std::size_t>(ctx.dimension()),
                                                    static_cast<std::size_t>(power), c));
}

Rational ChowClass::coefficient(int codim) const {
    if (codim < 0) return 0;
    return series_.coefficient(static_cast<std::size_t>(codim));
}

void ChowClass::require_same_context(const ChowClass& other) const {
    if (!(ctx_ == other.ctx_))
        throw ContractError("Chow classes live on different quadrics (Q^" + std::to_string(ctx_.dimension()) +
                            " vs Q^" + std::to_string(other.ctx_.dimension()) + ")");
}

ChowClass& ChowClass::operator+=(const ChowClass& other) {
    require_same_context(other);
    series_ += other.series_;
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
    require_same_context(other);
    series_ -= other.series_;
    return *this;
}

ChowClass& ChowClass::operator*=(const Rational& scalar) {
    series_ *= scalar;
    return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    a.require_same_context(b);
    return ChowClass(a.ctx_, a.series_ * b.series_);
}

ChowClass mul(const ChowClass& a, const ChowClass& b) { return a * b; }

Rational degree(const ChowClass& a) { return 2 * a.coefficient(a.context().dimension()); }

ChowClass middle_class(const QuadricContext& ctx) {
    const int k = ctx.middle_index();
    return ChowClass::hyperplane_power(ctx, k + 1, make_rational(1, 2));
}

bool middle_relations_check(const QuadricContext& ctx) {
    const int k = ctx.middle_index();
    const ChowClass p = middle_class(ctx);
    const bool first = ChowClass::hyperplane_power(ctx, k + 1) == 2 * p;
    const bool second = degree(ChowClass::hyperplane_power(ctx, k) * p) == 1;
    return first && second;
}

}  // namespace qchow
