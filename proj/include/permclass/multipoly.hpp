#pragma once

#include "permclass/polynomial.hpp"
#include "permclass/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace permclass {

using Exponents = std::vector<int>;

// Sparse polynomial over Q in a fixed, ordered list of variables.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
    static MultiPoly variable(std::vector<std::string> vars, int index);
    static MultiPoly monomial(std::vector<std::string> vars, const Exponents& e, const Rational& c);
    static MultiPoly from_univariate(std::vector<std::string> vars, int index, const Polynomial& p);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    int var_index(const std::string& name) const;
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& s) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o) { return *this += -o; }
    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    MultiPoly pow(int e) const;

    int degree_in(int var) const;
    int total_degree() const;
    // Lexicographically largest exponent vector.
    const std::pair<const Exponents, Rational>& leading_term() const { return *terms_.rbegin(); }
    MultiPoly derivative(int var) const;
    // Replace variable var by the polynomial q (same variable list).
    MultiPoly substitute(int var, const MultiPoly& q) const;
    MultiPoly evaluate_var(int var, const Rational& value) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    // Exact quotient, or nothing if d does not divide this polynomial.
    std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
    // Integer coefficients, gcd 1, positive leading term; returns the factor applied.
    Rational make_primitive();
    // Coefficients of powers of one variable.
    std::vector<MultiPoly> coefficients_in(int var) const;
    Polynomial to_univariate(int var) const;
    MultiPoly with_vars(std::vector<std::string> vars) const;

    std::string to_string() const;
    static MultiPoly parse(const std::string& s, std::vector<std::string> vars);

private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

// Series root y(z) of P(z, y) = 0 with y(0) = y0 by Newton iteration; P uses variables (z, y).
TruncatedSeries series_algebraic_root(const MultiPoly& P, const Rational& y0, int N);
// P(z, y(z)) as a series, for residual checks.
TruncatedSeries evaluate_on_series(const MultiPoly& P, const TruncatedSeries& y);

}  // namespace permclass
