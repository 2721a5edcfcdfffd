#pragma once
// Rational Chow ring of a smooth quadric Q^n, restricted to the subring
// generated by the hyperplane class H.
//
// Classes are H-polynomials truncated above codimension n. The degree map
// sends H^n to 2 (deg Q^n = 2). For odd n = 2k+1 the middle class P is not a
// separate generator: it is represented as (1/2) H^{k+1}, which is all the
// rank-2 computations in this library need. For even n the middle Chow group
// has rank 2; only its H-part is modelled.

#include "qchow/rational.hpp"
#include "qchow/series.hpp"

#include <cstddef>
#include <vector>

namespace qchow {

class QuadricContext {
public:
    static constexpr int kMinDimension = 3;

    // Throws ContractError for n < 3 (Pic(Q^n) is not generated by H there).
    explicit QuadricContext(int n);

    int dimension() const { return n_; }
    bool is_odd() const { return n_ % 2 == 1; }
    // k with n = 2k+1; throws NotApplicable for even n.
    int middle_index() const;

    friend bool operator==(const QuadricContext&, const QuadricContext&) = default;

private:
    int n_;
};

class ChowClass {
public:
    // The zero class.
    explicit ChowClass(QuadricContext ctx);
    // coeffs[i] is the coefficient of H^i; entries past codimension n are dropped.
    ChowClass(QuadricContext ctx, std::vector<Rational> coeffs);
    // Wraps an H-series; it is re-truncated (or zero-padded) to codimension n.
    ChowClass(QuadricContext ctx, const TruncatedSeries& series);

    static ChowClass one(QuadricContext ctx) { return hyperplane_power(ctx, 0); }
    // c * H^power; zero when power > n.
    static ChowClass hyperplane_power(QuadricContext ctx, int power, const Rational& c = 1);

    const QuadricContext& context() const { return ctx_; }
    Rational coefficient(int codim) const;
    const TruncatedSeries& series() const { return series_; }

    ChowClass& operator+=(const ChowClass& other);
    ChowClass& operator-=(const ChowClass& other);
    ChowClass& operator*=(const Rational& scalar);

    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator*(ChowClass a, const Rational& s) { return a *= s; }
    friend ChowClass operator*(const Rational& s, ChowClass a) { return a *= s; }
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);

    friend bool operator==(const ChowClass&, const ChowClass&) = default;

private:
    void require_same_context(const ChowClass& other) const;

    QuadricContext ctx_;
    TruncatedSeries series_;
};

// Ring product; throws ContractError if the contexts differ.
ChowClass mul(const ChowClass& a, const ChowClass& b);

// 2 * (coefficient of H^n). Lower codimensions do not contribute.
Rational degree(const ChowClass& a);

// P = (1/2) H^{k+1} on Q^{2k+1}; throws NotApplicable for even n.
ChowClass middle_class(const QuadricContext& ctx);

// Checks H^{k+1} = 2P and deg(H^k * P) = 1 in the model.
// Throws NotApplicable for even n.
bool middle_relations_check(const QuadricContext& ctx);

}  // namespace qchow
