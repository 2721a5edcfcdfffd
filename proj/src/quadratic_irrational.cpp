#include "qchow/quadratic_irrational.hpp"

#include <cmath>
#include <utility>

namespace qchow {

QuadraticIrrational::QuadraticIrrational(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (c_ <= 0) throw ContractError("quadratic irrational needs a positive denominator");
    if (d_ < 0) throw ContractError("quadratic irrational needs a non-negative radicand");
}

QuadraticIrrational QuadraticIrrational::rational(const Rational& r) {
    return QuadraticIrrational(r.get_num(), 0, r.get_den(), 0);
}

Rational QuadraticIrrational::rational_part() const {
    Rational r(a_, c_);
    r.canonicalize();
    return r;
}

Rational QuadraticIrrational::irrational_coeff() const {
    Rational r(b_, c_);
    r.canonicalize();
    return r;
}

double QuadraticIrrational::to_double() const {
    return (a_.get_d() + b_.get_d() * std::sqrt(d_.get_d())) / c_.get_d();
}

std::string QuadraticIrrational::to_string() const {
    std::string body = a_.get_str();
    if (b_ != 0 && d_ != 0) {
        if (b_ > 0) body += "+";
        if (b_ == -1)
            body += "-";
        else if (b_ != 1)
            body += b_.get_str() + "*";
        body += "sqrt(" + d_.get_str() + ")";
    }
    if (c_ == 1) return body;
    return "(" + body + ")/" + c_.get_str();
}

int sign_of(const Rational& p, const Rational& q, const Integer& d) {
    if (d < 0) throw ContractError("negative radicand");
    const int sp = sgn(p);
    const int sq = (d == 0) ? 0 : sgn(q);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // Opposite signs: the larger magnitude wins; compare p^2 with q^2 d.
    const Rational lhs = p * p;
    const Rational rhs = q * q * Rational(d);
    const int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return c > 0 ? sp : sq;
}

int compare_scaled(const QuadraticIrrational& alpha, const Rational& x, const Rational& y) {
    const Rational p = alpha.rational_part() * x - y;
    const Rational q = alpha.irrational_coeff() * x;
    return sign_of(p, q, alpha.d());
}

}  // namespace qchow
