#include "qchow/series.hpp"

#include <algorithm>

namespace qchow {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const Rational& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t power, const Rational& c) {
    TruncatedSeries s(order);
    if (power <= order) s.coeffs_[power] = c;
    return s;
}

TruncatedSeries TruncatedSeries::exponential(std::size_t order, const Rational& scale) {
    TruncatedSeries s(order);
    Rational term = 1;
    for (std::size_t i = 0; i <= order; ++i) {
        s.coeffs_[i] = term;
        term = term * scale / static_cast<unsigned long>(i + 1);
    }
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (sgn(coeffs_[0]) == 0) throw ContractError("series with zero constant term is not invertible");
    TruncatedSeries out(order());
    const Rational lead_inv = 1 / coeffs_[0];
    out.coeffs_[0] = lead_inv;
    for (std::size_t i = 1; i <= order(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc += coeffs_[j] * out.coeffs_[i - j];
        out.coeffs_[i] = -acc * lead_inv;
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned exponent) const {
    TruncatedSeries result = constant(order(), 1);
    TruncatedSeries base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent != 0) base = base * base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::rescaled(const Rational& scale) const {
    TruncatedSeries out(order());
    Rational factor = 1;
    for (std::size_t i = 0; i <= order(); ++i) {
        out.coeffs_[i] = coeffs_[i] * factor;
        factor *= scale;
    }
    return out;
}

}  // namespace qchow
