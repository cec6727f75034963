#pragma once

#include "permclass/numeric.hpp"
#include "permclass/perm.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permclass {

// 0/±1 matrix indexed (column, row) from the lower-left corner.
class GridMatrix {
public:
    GridMatrix() = default;
    GridMatrix(int columns, int rows);
    // Rows listed top to bottom, as they are read.
    static GridMatrix from_rows(const std::vector<std::vector<int>>& top_to_bottom);
    // "1 -1 0; 0 -1 1": rows top to bottom separated by ';'.
    static GridMatrix parse(const std::string& text);
    // A ±1 row vector.
    static GridMatrix row_vector(const std::vector<int>& v);

    int columns() const { return t_; }
    int rows() const { return u_; }
    int at(int c, int r) const { return cells_[c * u_ + r]; }
    void set(int c, int r, int v);
    std::vector<std::pair<int, int>> nonzero_cells() const;
    int nonzero_count() const;
    std::vector<std::vector<int>> rows_top_to_bottom() const;

    GridMatrix transpose() const;
    GridMatrix permuted(const std::vector<int>& column_order, const std::vector<int>& row_order) const;
    std::string to_string() const;
    bool operator==(const GridMatrix& o) const = default;

private:
    int t_ = 0, u_ = 0;
    std::vector<int> cells_;
};

struct Gridding {
    std::vector<int> column_dividers;  // 0 = c0 <= ... <= ct = n
    std::vector<int> row_dividers;     // 0 = r0 <= ... <= ru = n
    bool operator==(const Gridding& o) const = default;
};

bool is_valid_gridding(const Permutation& sigma, const GridMatrix& M, const Gridding& g);
// Exhaustive over divider placements; for each choice of row dividers, valid column
// dividers are counted as paths through the column blocks.
BigInt count_griddings(const Permutation& sigma, const GridMatrix& M);
// Plain enumeration of every divider pair, kept as a reference for the path count.
BigInt count_griddings_naive(const Permutation& sigma, const GridMatrix& M);
bool in_grid_class(const Permutation& sigma, const GridMatrix& M);
std::vector<Gridding> all_griddings(const Permutation& sigma, const GridMatrix& M);

// Gridded permutations of length n: sum over cell fillings of the product of row and column multinomials.
BigInt count_gridded_perms(const GridMatrix& M, int n);
// Brute force over divider placements, building permutations position by position.
BigInt count_gridded_perms_oracle(const GridMatrix& M, int n);
BigInt count_gridded_perms_oracle_serial(const GridMatrix& M, int n);

// Leftmost-first gridding in a skinny class (1 x k); nothing if sigma is not in Grid(V).
std::optional<Gridding> greedy_gridding(const Permutation& sigma, const std::vector<int>& V);

// Weakly increasing sequences 0 = d0 <= ... <= d_parts = n.
std::vector<std::vector<int>> divider_sequences(int parts, int n);
// Every 0/±1 matrix with the given dimensions.
std::vector<GridMatrix> all_matrices(int columns, int rows);

}  // namespace permclass
