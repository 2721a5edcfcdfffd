#pragma once

#include "qchow/rational.hpp"

#include <string>

namespace qchow {

// Real number of the form (a + b*sqrt(d)) / c with integers a, b, c, d,
// c > 0 and d >= 0. Only exact sign decisions are offered; to_double is for
// display.
class QuadraticIrrational {
public:
    QuadraticIrrational(Integer a, Integer b, Integer c, Integer d);
    static QuadraticIrrational rational(const Rational& r);

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& c() const { return c_; }
    const Integer& d() const { return d_; }

    // Rational and irrational parts: value = rational_part() + irrational_coeff() * sqrt(d).
    Rational rational_part() const;
    Rational irrational_coeff() const;

    double to_double() const;
    // "3", "2+sqrt(2)", "(5+sqrt(5))/2".
    std::string to_string() const;

private:
    Integer a_, b_, c_, d_;
};

// Exact sign of p + q*sqrt(d) for rationals p, q and integer d >= 0.
int sign_of(const Rational& p, const Rational& q, const Integer& d);

// Exact sign of alpha * x - y.
int compare_scaled(const QuadraticIrrational& alpha, const Rational& x, const Rational& y);

}  // namespace qchow
