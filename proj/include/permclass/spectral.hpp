#pragma once

#include "permclass/grid.hpp"
#include "permclass/roots.hpp"

#include <string>
#include <utility>
#include <vector>

namespace permclass {

// Simple undirected graph on vertices 0..n-1.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<std::vector<int>> adjacency_lists() const;
    std::vector<std::vector<long>> adjacency_matrix() const;
    bool is_connected() const;  // ignoring isolated vertices when the graph has edges
    bool is_forest() const;
    std::vector<Graph> components() const;
    std::string to_edge_list() const;
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph star(int m);  // centre 0
    static Graph disjoint_union(const Graph& a, const Graph& b);
};

// Columns are vertices 0..t-1 and rows t..t+u-1; one signed edge per non-zero cell.
struct RowColumnGraph {
    int columns = 0, rows = 0;
    struct Edge {
        int column, row, sign;
    };
    std::vector<Edge> edges;

    Graph graph() const;
    // "c1 r2 -1" lines, columns and rows numbered from 1 (rows bottom-up).
    std::string to_edge_list() const;
};

RowColumnGraph row_column_graph(const GridMatrix& M);

Polynomial characteristic_polynomial(const Graph& G);
RootInterval spectral_radius(const Graph& G, const Rational& precision);
// Power iteration on A + I; floating point only.
double spectral_radius_float(const Graph& G, int iterations = 20000);
Polynomial matching_polynomial(const Graph& G);
RootInterval largest_matching_root(const Graph& G, const Rational& precision);

bool has_negative_cycle(const RowColumnGraph& G);
GridMatrix double_refinement(const GridMatrix& M);

// Growth rates as certified intervals (the square of a certified root).
RootInterval grid_growth_rate(const GridMatrix& M, const Rational& precision);
RootInterval geom_growth_rate(const GridMatrix& M, const Rational& precision);

// Balanced tours from u traversing tree edge i exactly k[i] times in each direction (closed form).
BigInt tree_balanced_tours(const Graph& tree, int u, const std::vector<int>& k);
// Same count by walking the tree.
BigInt tree_balanced_tours_dfs(const Graph& tree, int u, const std::vector<int>& k);
// Closed walks of the given length: trace of the power of the adjacency matrix.
BigInt count_tours(const Graph& G, int length);

struct LimitShape {
    GridMatrix matrix;
    std::vector<std::vector<double>> alpha;  // [column][row]
    double growth = 0;                       // the product formula at alpha
    int iterations = 0;
    std::vector<double> column_mass() const;
    std::vector<double> row_mass() const;
};

LimitShape limit_shape(const GridMatrix& M, double tolerance = 1e-13, int max_iterations = 100000);
double limit_shape_growth(const GridMatrix& M, const std::vector<std::vector<double>>& alpha);
std::string limit_shape_svg(const LimitShape& shape, int size = 400);

}  // namespace permclass
