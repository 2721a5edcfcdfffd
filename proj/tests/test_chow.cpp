#include "doctest.h"
#include "oracles.hpp"

#include "qchow/chow.hpp"
#include "qchow/series.hpp"

using namespace qchow;
using qchow::testing::random_rational;
using qchow::testing::uniform;

namespace {

ChowClass random_class(const QuadricContext& ctx) {
    std::vector<Rational> c;
    for (int i = 0; i <= ctx.dimension(); ++i) c.push_back(random_rational());
    return ChowClass(ctx, c);
}

}  // namespace

TEST_CASE("series inverse and power") {
    const TruncatedSeries one_minus_t(5, {Rational(1), Rational(-1)});
    const auto inv = one_minus_t.inverse();
    for (std::size_t i = 0; i <= 5; ++i) CHECK(inv[i] == 1);
    CHECK(one_minus_t * inv == TruncatedSeries::constant(5, 1));

    const auto e = TruncatedSeries::exponential(6);
    CHECK(e[3] == make_rational(1, 6));
    // exp(t)^2 = exp(2t)
    CHECK(e.pow(2) == TruncatedSeries::exponential(6, 2));
    CHECK(e.rescaled(2) == TruncatedSeries::exponential(6, 2));
    CHECK_THROWS_AS(TruncatedSeries::monomial(3, 1).inverse(), ContractError);
}

TEST_CASE("context invariants") {
    CHECK_THROWS_AS(QuadricContext(2), ContractError);
    CHECK(QuadricContext(5).middle_index() == 2);
    CHECK_THROWS_AS(QuadricContext(6).middle_index(), NotApplicable);
}

TEST_CASE("mul examples") {
    const QuadricContext q5(5);
    const auto H = ChowClass::hyperplane_power(q5, 1);
    CHECK(mul(H, H) == ChowClass::hyperplane_power(q5, 2));

    const auto top = mul(ChowClass::hyperplane_power(q5, 2), ChowClass::hyperplane_power(q5, 3));
    CHECK(top == ChowClass::hyperplane_power(q5, 5));
    CHECK(degree(top) == 2);

    const auto one = ChowClass::one(q5);
    CHECK(mul(one + H, one - H) == one - ChowClass::hyperplane_power(q5, 2));
}

TEST_CASE("mul rejects mismatched contexts") {
    const auto a = ChowClass::one(QuadricContext(5));
    const auto b = ChowClass::one(QuadricContext(6));
    CHECK_THROWS_AS(mul(a, b), ContractError);
    CHECK_THROWS_AS((void)(a + b), ContractError);
}

TEST_CASE("degree examples") {
    CHECK(degree(ChowClass::hyperplane_power(QuadricContext(5), 5)) == 2);
    CHECK(degree(ChowClass(QuadricContext(5))) == 0);
    CHECK(degree(ChowClass::hyperplane_power(QuadricContext(6), 6, make_rational(3, 2))) == 3);
    // lower codimensions are ignored
    CHECK(degree(ChowClass(QuadricContext(4), {Rational(7), Rational(1), Rational(0), Rational(0), Rational(5)})) ==
          10);
}

TEST_CASE("middle relations") {
    CHECK(middle_relations_check(QuadricContext(5)));
    CHECK(middle_relations_check(QuadricContext(7)));
    CHECK_THROWS_AS(middle_relations_check(QuadricContext(6)), NotApplicable);
    for (int n = 3; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(degree(ChowClass::hyperplane_power(QuadricContext(n), n)) == 2);
        if (n % 2 == 1) CHECK(middle_relations_check(QuadricContext(n)));
    }
}

TEST_CASE("ring laws on random classes") {
    for (int trial = 0; trial < 60; ++trial) {
        const QuadricContext ctx(static_cast<int>(uniform(3, 9)));
        const auto a = random_class(ctx);
        const auto b = random_class(ctx);
        const auto c = random_class(ctx);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
        CHECK(degree(a + b) == degree(a) + degree(b));
    }
}

TEST_CASE("truncation above codimension n") {
    for (int n = 3; n <= 8; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const QuadricContext ctx(n);
                const auto p = mul(ChowClass::hyperplane_power(ctx, i), ChowClass::hyperplane_power(ctx, j));
                if (i + j > n)
                    CHECK(p == ChowClass(ctx));
                else
                    CHECK(p == ChowClass::hyperplane_power(ctx, i + j));
            }
    CHECK(ChowClass::hyperplane_power(QuadricContext(4), 9) == ChowClass(QuadricContext(4)));
}
