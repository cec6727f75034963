#pragma once

#include "permclass/multipoly.hpp"
#include "permclass/series.hpp"

#include <string>

namespace permclass {

// Quotient of two MultiPolys. No multivariate gcd is taken; only integer content
// and sign are normalized, so equality is decided by cross-multiplication.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(MultiPoly num, MultiPoly den);
    static RationalFunction from_poly(const MultiPoly& p);
    // Univariate in z.
    static RationalFunction univariate(const Polynomial& num, const Polynomial& den, const std::string& var = "z");

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const std::vector<std::string>& vars() const { return den_.vars(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;

    // For a univariate function: cancel the polynomial gcd, giving a canonical form.
    RationalFunction reduced() const;
    Rational evaluate(const std::vector<Rational>& point) const;
    std::string to_string() const;

private:
    void normalize();
    MultiPoly num_, den_;
};

bool ratfun_equal(const RationalFunction& a, const RationalFunction& b);
// Taylor expansion of a univariate rational function.
TruncatedSeries ratfun_series(const RationalFunction& f, int N);
TruncatedSeries ratio_series(const Polynomial& num, const Polynomial& den, int N);

}  // namespace permclass
