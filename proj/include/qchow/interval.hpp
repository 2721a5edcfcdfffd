#pragma once
// Closed real intervals with MPFR endpoints and outward rounding. Every
// operation returns an enclosure of the exact result, so a sign decided on
// an interval is a certified sign.

#include "qchow/rational.hpp"

#include <mpfr.h>

#include <string>

namespace qchow {

// Binary precision giving at least the requested number of decimal digits,
// plus guard bits.
mpfr_prec_t bits_for_digits(int decimal_digits);

class Interval {
public:
    Interval(long lo, long hi, mpfr_prec_t prec);
    explicit Interval(const Rational& value, mpfr_prec_t prec);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(Interval other) noexcept;
    ~Interval();

    static Interval pi(mpfr_prec_t prec);
    static Interval sqrt_of(const Rational& value, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    // Throws ContractError if b contains zero.
    friend Interval operator/(const Interval& a, const Interval& b);

    // sin on a sub-interval of [-pi/2, pi/2], where sin is increasing.
    // Throws ContractError outside that range.
    Interval sin() const;

    bool certainly_positive() const;
    bool certainly_negative() const;
    // Both endpoints lie in [lo, hi].
    bool within(const Rational& lo, const Rational& hi) const;
    // Every point of *this is strictly below every point of other.
    bool certainly_below(const Interval& other) const;

    double lower_double() const;
    double upper_double() const;

    // Midpoint with the given number of decimals and an upper bound on the
    // distance from it to any point of the interval, e.g.
    // "0.5495717545 ±5.0e-11".
    std::string to_string(int decimals) const;
    // Upper bound on the half-width, rendered in scientific notation.
    std::string radius_string() const;

private:
    explicit Interval(mpfr_prec_t prec);

    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace qchow
