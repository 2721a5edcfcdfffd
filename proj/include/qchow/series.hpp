#pragma once

#include "qchow/rational.hpp"

#include <cstddef>
#include <vector>

namespace qchow {

// Univariate formal power series with exact rational coefficients,
// truncated after a fixed order: only the coefficients of t^0..t^order are
// kept. Binary operations between series of different orders truncate to
// the smaller one.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order);
    TruncatedSeries(std::size_t order, std::vector<Rational> coeffs);

    static TruncatedSeries constant(std::size_t order, const Rational& c);
    // t^power, or zero when power exceeds the order.
    static TruncatedSeries monomial(std::size_t order, std::size_t power, const Rational& c = 1);
    // exp(scale * t).
    static TruncatedSeries exponential(std::size_t order, const Rational& scale = 1);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational coefficient(std::size_t i) const { return i <= order() ? coeffs_[i] : Rational(0); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const Rational& scalar);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    // Multiplicative inverse; requires an invertible constant term.
    TruncatedSeries inverse() const;
    TruncatedSeries pow(unsigned exponent) const;
    // f(scale * t).
    TruncatedSeries rescaled(const Rational& scale) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    std::vector<Rational> coeffs_;
};

}  // namespace qchow
