#pragma once

#include "permclass/grid.hpp"
#include "permclass/ratfun.hpp"

#include <utility>
#include <vector>

namespace permclass {

// One extension step: insert new columns (or rows), each with a single non-zero entry
// in an existing row (or column) that currently has exactly one non-zero entry.
struct BuildStep {
    bool add_columns = true;
    int line = 0;                // the row (add_columns) or column being extended, bottom-up / left-right
    std::vector<int> positions;  // indices of the new lines in the enlarged matrix
    std::vector<int> signs;      // entry of each new line, ±1
};

struct BuildScript {
    GridMatrix base;  // exactly one non-zero entry in each row and column
    std::vector<BuildStep> steps;
};

// Gridded generating function of an acyclic class, empty permutation included:
// G = 1 / D with D multilinear in one mark per cell.
struct AcyclicGF {
    GridMatrix matrix;                      // the matrix the script builds
    std::vector<std::pair<int, int>> cell;  // cell marked by variable x<i+1>
    MultiPoly D;                            // variables z, x1, ..., xm
    RationalFunction gf() const;
    // All marks set to 1.
    Polynomial denominator() const;
    TruncatedSeries series(int N) const;
};

AcyclicGF acyclic_gridded_gf(const BuildScript& script);
// Some build script producing M with its empty rows and columns removed; M must be acyclic.
BuildScript plan_build(const GridMatrix& M);
GridMatrix drop_empty_lines(const GridMatrix& M);

// Unicyclic class obtained from an acyclic M by identifying the pendant cells e1, e2.
struct UnicyclicGF {
    GridMatrix merged;
    Polynomial R, S, T, U;
    // (1 + zR + zU)^2 - 4zST
    Polynomial discriminant;
    TruncatedSeries series(int N) const;
    std::string to_string() const;
};

// Checks the pendant / submatrix precondition and returns the merged matrix.
GridMatrix merge_pendant_cells(const GridMatrix& M, std::pair<int, int> e1, std::pair<int, int> e2);
UnicyclicGF unicyclic_gridded_gf(const GridMatrix& M, std::pair<int, int> e1, std::pair<int, int> e2);

}  // namespace permclass
