#pragma once

#include "permclass/polynomial.hpp"

#include <optional>
#include <vector>

namespace permclass {

struct RootInterval {
    Rational lo, hi;
    bool exact() const { return lo == hi; }
    Rational mid() const { return (lo + hi) / 2; }
    double value() const { return mid().get_d(); }
};

enum class RootMode { Largest, UniquePositive, InInterval };

// Disjoint isolating intervals (open, or degenerate for rational roots) for the real roots of p in (lo, hi).
std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi);
// Upper bound on the absolute value of every root.
Rational root_bound(const Polynomial& p);
// Roots in (0, inf), increasing.
std::vector<RootInterval> positive_roots(const Polynomial& p);
// Narrow an isolating interval of a root of the square-free polynomial p by bisection.
RootInterval refine_root(const Polynomial& p, RootInterval r, const Rational& precision);

RootInterval isolate_positive_real_root(const Polynomial& p, const Rational& precision,
                                        RootMode mode = RootMode::Largest,
                                        std::optional<std::pair<Rational, Rational>> window = std::nullopt);
// Largest real root (any sign).
RootInterval largest_real_root(const Polynomial& p, const Rational& precision);

// Descartes bound for the number of roots in (a, b).
int descartes_count(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace permclass
