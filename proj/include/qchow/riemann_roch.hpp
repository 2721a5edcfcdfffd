#pragma once
// Euler characteristics of rank-2 bundles on Q^n by Hirzebruch-Riemann-Roch.
//
// The Todd class comes from the Euler sequence of P^{n+1} restricted to Q^n
// and the normal bundle O(2):
//   td(T_Q) = Q(H)^{n+2} / Q(2H),  Q(x) = x / (1 - e^{-x}),
// computed by exact truncated series division.

#include "qchow/bundle.hpp"
#include "qchow/chow.hpp"
#include "qchow/rational.hpp"

#include <string_view>

namespace qchow {

struct ToddClass {
    QuadricContext context;
    ChowClass value;
};

ToddClass todd_tangent(const QuadricContext& ctx);

// deg(ch(E) * td(T_Q)). Rational Chern data gives a formal value.
Rational chi_hrr(const QuadricContext& ctx, const ChernData& d);

enum class ChiFormula {
    // The closed form as it appears in the literature, with the quadratic
    // term (55/24)(c1^2 - c2).
    Printed,
    // The same polynomial with the quadratic term (55/24)(c1^2 - 2c2),
    // which is what HRR actually produces on Q^5.
    Hrr,
};

std::string_view to_string(ChiFormula f);

// Closed-form chi of a rank-2 bundle on Q^5.
Rational chi_q5(const ChernData& d, ChiFormula formula);

// chi(O_Q(a)) = C(n+1+a, n+1) - C(n-1+a, n+1) from 0 -> O_P(a-2) -> O_P(a) -> O_Q(a) -> 0,
// with C(p, q) = 0 for p < q (negative a handled by Serre duality on P^{n+1},
// i.e. the polynomial extension of the binomial).
Integer chi_line_oracle(const QuadricContext& ctx, long a);

// h^0(O_Q(a)) for a >= 0 (equal to chi there); throws NotApplicable for a < 0.
Integer h0_line_oracle(const QuadricContext& ctx, long a);

}  // namespace qchow
