#pragma once

#include "permclass/multipoly.hpp"
#include "permclass/numeric.hpp"
#include "permclass/perm.hpp"

#include <string>
#include <vector>

namespace permclass {

// Ordered rooted tree; a forest is an ordered sequence of trees.
struct PlaneTree {
    std::vector<PlaneTree> children;

    int size() const;
    // Balanced parentheses, one pair per vertex: "(()())".
    std::string encode() const;
    static PlaneTree decode(const std::string& s);
    auto operator<=>(const PlaneTree&) const = default;
};

using PlaneForest = std::vector<PlaneTree>;

int forest_size(const PlaneForest& f);
std::string encode_forest(const PlaneForest& f);
PlaneForest decode_forest(const std::string& s);

std::vector<PlaneTree> enumerate_trees(int size);
std::vector<PlaneForest> enumerate_forests(int size);

// Point sets whose Hasse graph is the given tree. Red trees grow up and to the right from
// their root (first entry, least value); blue trees are the 180 degree rotation (root last, greatest).
std::vector<int> red_points(const PlaneTree& t);
std::vector<int> red_forest_points(const PlaneForest& f);  // components left to right, each above the next
std::vector<int> blue_points(const PlaneTree& t);

// Tree counts used by the regular construction.
BigInt red_tree_count(int k);                  // k vertices
BigInt blue_tree_count(int l, int d);          // l vertices, root degree d
BigInt preinterleaving_count(int k, int d);    // k-1 red vertices with d blue roots

// E(lambda, delta) and its (1+lambda)-th root, the growth rate of the unsplit construction.
double E_lambda_delta(double lambda, double delta);
double baseline_growth(double lambda, double delta);
double delta_star(double lambda);
// |W0(k)|^(1/n(k, lambda)) from exact big-integer counts.
double w0_growth_exact(int k, double lambda, double delta);

// Shuffles of the rows of blue (all values below red) with red, keeping each order, that avoid 1324.
long count_interleavings(const std::vector<int>& blue, const std::vector<int>& red);
long count_interleavings_brute(const std::vector<int>& blue, const std::vector<int>& red);
// Interleavings of the non-root vertices of a blue subtree with a red fringe.
long Q(const PlaneTree& t, const PlaneForest& f);

double mu_beta(int i, double delta);
double mu_gamma(int j, double lambda, double delta);
double mu_gamma_greater(int j, double lambda, double delta);
double mu_rho(int m);
double mu_rho_plus(int m, int h);
double mu(const PlaneTree& t, const PlaneForest& f, double lambda, double delta);
double mu(int i, int m, int h, double lambda, double delta);

struct BoundParams {
    double lambda = 0.7;
    double delta = 0.75;
    int N = 2;
};

// Sum of log Q over all pairs |T| + |F| <= N, grouped by (|T|, |F|, components of F).
struct PairTable {
    int N = 0;
    std::vector<std::vector<std::vector<double>>> log_q;  // [i][m][h]
    long pair_count = 0;        // every pair with |T| >= 1, |F| >= 0
    long nontrivial_count = 0;  // pairs with Q > 1
};

PairTable build_pair_table(int N, bool parallel = true);
double g_N(const PairTable& table, double lambda, double delta);
double g_N(const BoundParams& params);

struct SearchConfig {
    int grid = 41;
    double lambda_lo = 0.3, lambda_hi = 1.2;
    double delta_lo = 0.5, delta_hi = 0.99;
    int simplex_iterations = 200;
    double tolerance = 1e-10;
};

struct BoundResult {
    double g = 0, lambda = 0, delta = 0;
    bool converged = false;
    int evaluations = 0;
};

BoundResult maximize_bound(const PairTable& table, const SearchConfig& config = {});
BoundResult maximize_bound(int N, const SearchConfig& config = {});

// Regular permutations: red trees R_0..R_t, blue trees B_1..B_t. horizontal[j] interleaves the non-root
// vertices of R_j and B_{j+1} by position, vertical[j] those of B_{j+1} and R_{j+1} by value; true marks blue.
using Shuffle = std::vector<bool>;

struct WConstruction {
    std::vector<PlaneTree> red, blue;
    std::vector<Shuffle> horizontal, vertical;
};

Permutation assemble_w(const WConstruction& w);
// Tree index of each entry of assemble_w: red R_j is 2j, blue B_j is 2j-1.
std::vector<int> w_pieces(const WConstruction& w);

bool horizontal_valid(const PlaneTree& red, const PlaneTree& blue, const Shuffle& s);
bool vertical_valid(const PlaneTree& blue, const PlaneTree& red, const Shuffle& s);
std::vector<Shuffle> all_shuffles(int blue, int red);
// No red vertex falls between two vertices of one blue subtree.
bool horizontal_unsplit(const PlaneTree& blue, const Shuffle& s);
bool vertical_unsplit(const PlaneTree& blue, const Shuffle& s);

// Valid horizontal interleavings counted through blue roots, red fringes and Q.
long horizontal_count_by_fringes(const PlaneTree& red, const PlaneTree& blue);

struct WCheck {
    long checked = 0;
    long failures = 0;
};

// Every construction from locally valid interleavings, t red-blue steps, trees of at most k and l vertices.
// For t = 2 each occurrence of 1324 meets at most four trees, so every four-tree sub-configuration is enumerated.
WCheck check_w_avoidance(int t, int k_max, int l_max);

// Unsplit constructions counted directly and by the product formula.
BigInt count_w0_direct(int t, int k, int l, int d);
BigInt count_w0_formula(int t, int k, int l, int d);

// Steps s_1..s_n of a path from height 0 with every later height >= 1 and every step <= 1.
struct LukaPath {
    std::vector<int> steps;
    bool valid() const;
    std::vector<int> heights() const;  // y_0 .. y_n
};

struct LukaPattern {
    std::vector<int> steps;
    bool valid() const;  // every partial height positive
    int final_height() const;
    int height(int i) const;
};

std::vector<LukaPath> enumerate_luka_paths(int n);
// Visit the red tree right to left: a vertex with r children contributes the step 1 - r.
LukaPath tree_to_path(const PlaneTree& t);
LukaPath forest_to_path(const PlaneForest& f);
PlaneForest path_to_forest(const LukaPath& p);
PlaneTree path_to_tree(const LukaPath& p);

// Contiguous occurrences; skip_first leaves out an occurrence starting at the first step.
long luka_pattern_count(const LukaPath& p, const LukaPattern& w, bool skip_first = false);
MultiPoly autocorrelation(const LukaPattern& w);  // variables z, y
// Number of paths of length n with each occurrence count, walked without storing the paths.
std::vector<BigInt> luka_occurrence_distribution(const LukaPattern& w, int n, bool skip_first = false);

// [z^k][u^j] of L(z, u) from the polynomial equation, k = 0..k_max.
std::vector<std::vector<BigInt>> luka_equation_series(const LukaPattern& w, int k_max);

struct LukaReport {
    bool catalan = true;       // number of paths of each length
    bool occurrences = true;   // total occurrences against C(2k-2m+h, k-m-1)
    bool distribution = true;  // full occurrence distribution against the equation
    bool bijection = true;     // tree -> path -> tree
    std::vector<std::string> failures;
    bool ok() const { return catalan && occurrences && distribution && bijection; }
};

LukaReport luka_coefficient_checks(const LukaPattern& w, int k_max);

}  // namespace permclass
