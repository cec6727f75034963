#pragma once

#include "permclass/numeric.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace permclass {

// Dense univariate polynomial over Q, lowest degree first, trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> c);
    Polynomial(std::initializer_list<long> c);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, int deg);
    static Polynomial x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial derivative() const;
    Polynomial pow(int e) const;
    Rational eval(const Rational& x) const;
    double eval(double x) const;
    // p(x + a)
    Polynomial shift(const Rational& a) const;
    // p(b x)
    Polynomial scale(const Rational& b) const;
    // x^deg p(1/x)
    Polynomial reversed() const;
    Polynomial monic() const;
    // Integer coefficients with gcd 1 and positive leading coefficient.
    Polynomial primitive() const;
    Polynomial compose(const Polynomial& q) const;
    int sign_variations() const;

    std::string to_string(const std::string& var = "z") const;
    static Polynomial parse(const std::string& s, const std::string& var = "z");

private:
    void trim();
    std::vector<Rational> c_;
};

Polynomial gcd(Polynomial a, Polynomial b);
Polynomial squarefree_part(const Polynomial& p);

}  // namespace permclass
