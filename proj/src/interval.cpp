#include "qchow/interval.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace qchow {

namespace {

// RAII scratch value for intermediate endpoint arithmetic.
struct Scratch {
    explicit Scratch(mpfr_prec_t prec) { mpfr_init2(v, prec); }
    Scratch(const Scratch&) = delete;
    Scratch& operator=(const Scratch&) = delete;
    ~Scratch() { mpfr_clear(v); }
    mpfr_t v;
};

void set_rational(mpfr_t out, const Rational& r, mpfr_rnd_t rnd) { mpfr_set_q(out, r.get_mpq_t(), rnd); }

std::string format(const char* fmt, int decimals, mpfr_srcptr value) {
    char* buffer = nullptr;
    const int len = mpfr_asprintf(&buffer, fmt, decimals, value);
    if (len < 0 || buffer == nullptr) return "?";
    std::string out(buffer, static_cast<std::size_t>(len));
    mpfr_free_str(buffer);
    return out;
}

}  // namespace

mpfr_prec_t bits_for_digits(int decimal_digits) {
    if (decimal_digits < 1) throw ContractError("precision must be at least one decimal digit");
    return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219280948873623)) + 32;
}

Interval::Interval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
}

Interval::Interval(long lo, long hi, mpfr_prec_t prec) : Interval(prec) {
    if (lo > hi) throw ContractError("interval endpoints out of order");
    mpfr_set_si(lo_, lo, MPFR_RNDD);
    mpfr_set_si(hi_, hi, MPFR_RNDU);
}

Interval::Interval(const Rational& value, mpfr_prec_t prec) : Interval(prec) {
    set_rational(lo_, value, MPFR_RNDD);
    set_rational(hi_, value, MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval(other.precision()) {
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.precision()) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval out(prec);
    mpfr_const_pi(out.lo_, MPFR_RNDD);
    mpfr_const_pi(out.hi_, MPFR_RNDU);
    return out;
}

Interval Interval::sqrt_of(const Rational& value, mpfr_prec_t prec) {
    if (sgn(value) < 0) throw ContractError("square root of a negative number");
    const Interval v(value, prec);
    Interval out(prec);
    mpfr_sqrt(out.lo_, v.lo_, MPFR_RNDD);
    mpfr_sqrt(out.hi_, v.hi_, MPFR_RNDU);
    return out;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval out(std::max(a.precision(), b.precision()));
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval out(std::max(a.precision(), b.precision()));
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
}

Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    Interval out(prec);
    Scratch down(prec), up(prec);
    bool first = true;
    for (mpfr_srcptr x : {a.lo_, a.hi_}) {
        for (mpfr_srcptr y : {b.lo_, b.hi_}) {
            mpfr_mul(down.v, x, y, MPFR_RNDD);
            mpfr_mul(up.v, x, y, MPFR_RNDU);
            if (first || mpfr_less_p(down.v, out.lo_)) mpfr_set(out.lo_, down.v, MPFR_RNDD);
            if (first || mpfr_greater_p(up.v, out.hi_)) mpfr_set(out.hi_, up.v, MPFR_RNDU);
            first = false;
        }
    }
    return out;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) throw ContractError("interval division by a range containing zero");
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    Interval reciprocal(prec);
    Scratch one(prec);
    mpfr_set_ui(one.v, 1, MPFR_RNDN);
    mpfr_div(reciprocal.lo_, one.v, b.hi_, MPFR_RNDD);
    mpfr_div(reciprocal.hi_, one.v, b.lo_, MPFR_RNDU);
    return a * reciprocal;
}

Interval Interval::sin() const {
    const Interval half_pi = pi(precision()) / Interval(2, 2, precision());
    // Require [lo, hi] within [-pi/2, pi/2] using the inner bound of pi/2.
    Scratch neg(precision());
    mpfr_neg(neg.v, half_pi.lo_, MPFR_RNDU);
    if (mpfr_greater_p(hi_, half_pi.lo_) || mpfr_less_p(lo_, neg.v))
        throw ContractError("interval sin is only implemented on [-pi/2, pi/2]");
    Interval out(precision());
    mpfr_sin(out.lo_, lo_, MPFR_RNDD);
    mpfr_sin(out.hi_, hi_, MPFR_RNDU);
    return out;
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

bool Interval::within(const Rational& lo, const Rational& hi) const {
    return mpfr_cmp_q(lo_, lo.get_mpq_t()) >= 0 && mpfr_cmp_q(hi_, hi.get_mpq_t()) <= 0;
}

bool Interval::certainly_below(const Interval& other) const { return mpfr_less_p(hi_, other.lo_); }

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string Interval::to_string(int decimals) const {
    const mpfr_prec_t prec = precision() + 8;
    Scratch mid(prec), radius(prec), tmp(prec);
    mpfr_add(mid.v, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid.v, mid.v, 1, MPFR_RNDN);
    // The printed midpoint m' differs from mid by at most 10^-decimals; the
    // bound covers max(hi - mid, mid - lo) plus that rendering error.
    mpfr_sub(radius.v, hi_, mid.v, MPFR_RNDU);
    mpfr_sub(tmp.v, mid.v, lo_, MPFR_RNDU);
    mpfr_max(radius.v, radius.v, tmp.v, MPFR_RNDU);
    mpfr_set_ui(tmp.v, 10, MPFR_RNDN);
    mpfr_pow_si(tmp.v, tmp.v, -decimals, MPFR_RNDU);
    mpfr_add(radius.v, radius.v, tmp.v, MPFR_RNDU);
    return format("%.*RNf", decimals, mid.v) + " ±" + format("%.*RUe", 1, radius.v);
}

std::string Interval::radius_string() const {
    Scratch radius(precision());
    mpfr_sub(radius.v, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(radius.v, radius.v, 1, MPFR_RNDU);
    return format("%.*RUe", 1, radius.v);
}

}  // namespace qchow
