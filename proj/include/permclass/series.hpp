#pragma once

#include "permclass/polynomial.hpp"

#include <string>
#include <vector>

namespace permclass {

// Power series known exactly through z^order.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Rational> c);
    static TruncatedSeries from_polynomial(const Polynomial& p, int order);
    static TruncatedSeries constant(const Rational& c, int order);

    int order() const { return order_; }
    const Rational& operator[](int i) const { return c_[i]; }
    Rational& operator[](int i) { return c_[i]; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const { return i <= order_ && i >= 0 ? c_[i] : Rational(0); }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rational& s) const;
    TruncatedSeries operator/(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

    TruncatedSeries inverse() const;
    TruncatedSeries truncate(int order) const;
    // Multiply by z^k, keeping the order.
    TruncatedSeries shift_up(int k) const;
    std::vector<BigInt> integer_coeffs(int from = 0) const;
    bool is_zero() const;

    std::string to_string(const std::string& var = "z") const;

private:
    int order_ = 0;
    std::vector<Rational> c_{Rational(0)};
};

TruncatedSeries series_sqrt(const TruncatedSeries& s);

}  // namespace permclass
