#pragma once

#include "permclass/avoiders.hpp"
#include "permclass/roots.hpp"
#include "permclass/series.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace permclass {

enum class HasseClass { Schroeder_1324_2314, Forestlike, F_1234_2341, E_1243_2314 };

HasseClass parse_hasse_class(const std::string& name);  // schroeder_1324_2314, forestlike, f_1234_2341, e_1243_2314
std::string hasse_class_name(HasseClass c);
Basis hasse_class_basis(HasseClass c);

// Coefficients 0..N of the closed-form generating function (constant term 0).
TruncatedSeries closed_gf(HasseClass c, int N);
RootInterval growth_constant(HasseClass c, const Rational& precision);

// Per z-degree coefficient polynomials in up to three catalytic variables.
struct CatalyticSeries {
    using Monomial = std::array<int, 3>;
    using Poly = std::map<Monomial, BigInt>;
    int nvars = 3;
    std::vector<Poly> coeff;  // z^0 .. z^N

    explicit CatalyticSeries(int N = 0, int vars = 3) : nvars(vars), coeff(N + 1) {}
    int order() const { return static_cast<int>(coeff.size()) - 1; }
    void add(int deg, const Monomial& m, const BigInt& c);
    BigInt at_ones(int deg) const;
    // Largest exponent of any variable in degree deg must not exceed the cap.
    void check_cap(int deg, int cap) const;
};

// Connected members of Av(1324, 1432) by the functional equation, with u, v, w as in the spindly-tree
// decomposition; the full class follows by skew sums.
CatalyticSeries connected_1324_1432(int N);
TruncatedSeries series_1324_1432(int N);

// Plane permutations, P(u, v) with u open and v closed right-to-left minima.
CatalyticSeries plane_catalytic(int N);
TruncatedSeries series_plane(int N);

BigInt apery(int n);
BigInt apery_direct(int n);
// Conjectured closed form for the number of plane permutations (n >= 2).
BigInt van_hoeij(int n);
// Conjectured three-term recurrence for the same numbers (n >= 3), seeded by p1, p2.
std::vector<BigInt> plane_recurrence(int N);

// Inversion sequences e_1..e_n (0 <= e_i < i) with no subsequence order-isomorphic to a pattern.
BigInt count_inv_seq_avoiding(const std::vector<std::vector<int>>& patterns, int n);
bool inv_seq_contains(const std::vector<int>& seq, const std::vector<int>& pattern);

}  // namespace permclass
