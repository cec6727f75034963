#include "permclass/grid.hpp"

#include <omp.h>

#include <sstream>
#include <unordered_map>

namespace permclass {

GridMatrix::GridMatrix(int columns, int rows) : t_(columns), u_(rows), cells_(columns * rows, 0) {
    if (columns <= 0 || rows <= 0) throw DomainError("grid matrix dimensions must be positive");
}

void GridMatrix::set(int c, int r, int v) {
    if (v < -1 || v > 1) throw DomainError("grid matrix entries must be -1, 0 or 1");
    cells_[c * u_ + r] = v;
}

GridMatrix GridMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DomainError("empty grid matrix");
    GridMatrix m(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
    for (int i = 0; i < m.u_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.t_) throw DomainError("ragged grid matrix");
        for (int c = 0; c < m.t_; ++c) m.set(c, m.u_ - 1 - i, rows[i][c]);
    }
    return m;
}

GridMatrix GridMatrix::parse(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::stringstream rs(row);
        std::vector<int> r;
        std::string tok;
        while (rs >> tok) {
            if (tok != "0" && tok != "1" && tok != "-1" && tok != "+1") throw DomainError("bad matrix entry '" + tok + "'");
            r.push_back(std::stoi(tok));
        }
        if (!r.empty()) rows.push_back(r);
    }
    return from_rows(rows);
}

GridMatrix GridMatrix::row_vector(const std::vector<int>& v) { return from_rows({v}); }

std::vector<std::pair<int, int>> GridMatrix::nonzero_cells() const {
    std::vector<std::pair<int, int>> out;
    for (int c = 0; c < t_; ++c)
        for (int r = 0; r < u_; ++r)
            if (at(c, r)) out.emplace_back(c, r);
    return out;
}

int GridMatrix::nonzero_count() const { return static_cast<int>(nonzero_cells().size()); }

std::vector<std::vector<int>> GridMatrix::rows_top_to_bottom() const {
    std::vector<std::vector<int>> out;
    for (int r = u_ - 1; r >= 0; --r) {
        std::vector<int> row;
        for (int c = 0; c < t_; ++c) row.push_back(at(c, r));
        out.push_back(row);
    }
    return out;
}

GridMatrix GridMatrix::transpose() const {
    GridMatrix m(u_, t_);
    for (int c = 0; c < t_; ++c)
        for (int r = 0; r < u_; ++r) m.set(r, c, at(c, r));
    return m;
}

GridMatrix GridMatrix::permuted(const std::vector<int>& column_order, const std::vector<int>& row_order) const {
    GridMatrix m(t_, u_);
    for (int c = 0; c < t_; ++c)
        for (int r = 0; r < u_; ++r) m.set(c, r, at(column_order[c], row_order[r]));
    return m;
}

std::string GridMatrix::to_string() const {
    std::ostringstream os;
    auto rows = rows_top_to_bottom();
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << "; ";
        for (size_t c = 0; c < rows[i].size(); ++c) os << (c ? " " : "") << rows[i][c];
    }
    return os.str();
}

static bool dividers_ok(const std::vector<int>& d, int parts, int n) {
    if (static_cast<int>(d.size()) != parts + 1 || d.front() != 0 || d.back() != n) return false;
    for (size_t i = 1; i < d.size(); ++i)
        if (d[i] < d[i - 1]) return false;
    return true;
}

static std::vector<int> block_of(const std::vector<int>& d, int n) {
    std::vector<int> b(n);
    for (size_t k = 0; k + 1 < d.size(); ++k)
        for (int i = d[k]; i < d[k + 1]; ++i) b[i] = static_cast<int>(k);
    return b;
}

bool is_valid_gridding(const Permutation& sigma, const GridMatrix& M, const Gridding& g) {
    int n = sigma.size();
    if (!dividers_ok(g.column_dividers, M.columns(), n) || !dividers_ok(g.row_dividers, M.rows(), n)) return false;
    auto col = block_of(g.column_dividers, n);
    auto row = block_of(g.row_dividers, n);
    std::vector<int> last(M.columns() * M.rows(), 0);
    for (int i = 0; i < n; ++i) {
        int c = col[i], r = row[sigma[i] - 1];
        int e = M.at(c, r);
        if (e == 0) return false;
        int& l = last[c * M.rows() + r];
        if (l && ((e == 1 && sigma[i] < l) || (e == -1 && sigma[i] > l))) return false;
        l = sigma[i];
    }
    return true;
}

std::vector<std::vector<int>> divider_sequences(int parts, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> d(parts + 1, 0);
    d[parts] = n;
    auto rec = [&](auto&& self, int k) -> void {
        if (k == parts) {
            out.push_back(d);
            return;
        }
        for (int v = d[k - 1]; v <= n; ++v) {
            d[k] = v;
            self(self, k + 1);
        }
    };
    if (parts == 1) out.push_back(d);
    else rec(rec, 1);
    return out;
}

// Is the block of positions [a, b) a valid column k, given the row of each value?
static bool column_block_ok(const Permutation& s, const GridMatrix& M, const std::vector<int>& row, int k, int a, int b) {
    std::vector<int> last(M.rows(), 0);
    for (int i = a; i < b; ++i) {
        int r = row[s[i] - 1];
        int e = M.at(k, r);
        if (e == 0) return false;
        if (last[r] && ((e == 1 && s[i] < last[r]) || (e == -1 && s[i] > last[r]))) return false;
        last[r] = s[i];
    }
    return true;
}

static void for_each_column_count(const Permutation& sigma, const GridMatrix& M, bool stop_at_first,
                                  BigInt& total) {
    int n = sigma.size(), t = M.columns();
    for (auto& rd : divider_sequences(M.rows(), n)) {
        auto row = block_of(rd, n);
        std::vector<BigInt> f(n + 1, 0);
        f[0] = 1;
        for (int k = 0; k < t; ++k) {
            std::vector<BigInt> g(n + 1, 0);
            for (int a = 0; a <= n; ++a) {
                if (f[a] == 0) continue;
                for (int b = a; b <= n; ++b) {
                    if (!column_block_ok(sigma, M, row, k, a, b)) break;
                    g[b] += f[a];
                }
            }
            f = std::move(g);
        }
        total += f[n];
        if (stop_at_first && total > 0) return;
    }
}

BigInt count_griddings(const Permutation& sigma, const GridMatrix& M) {
    BigInt total = 0;
    for_each_column_count(sigma, M, false, total);
    return total;
}

bool in_grid_class(const Permutation& sigma, const GridMatrix& M) {
    BigInt total = 0;
    for_each_column_count(sigma, M, true, total);
    return total > 0;
}

std::vector<Gridding> all_griddings(const Permutation& sigma, const GridMatrix& M) {
    std::vector<Gridding> out;
    int n = sigma.size();
    for (auto& cd : divider_sequences(M.columns(), n))
        for (auto& rd : divider_sequences(M.rows(), n)) {
            Gridding g{cd, rd};
            if (is_valid_gridding(sigma, M, g)) out.push_back(g);
        }
    return out;
}

BigInt count_griddings_naive(const Permutation& sigma, const GridMatrix& M) {
    return static_cast<unsigned long>(all_griddings(sigma, M).size());
}

BigInt count_gridded_perms(const GridMatrix& M, int n) {
    auto cells = M.nonzero_cells();
    int m = static_cast<int>(cells.size());
    if (m == 0) return n == 0 ? 1 : 0;
    std::vector<long> fill(m, 0);
    BigInt total = 0;
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == m - 1) {
            fill[i] = left;
            BigInt term = 1;
            for (int c = 0; c < M.columns() && term != 0; ++c) {
                std::vector<long> parts;
                for (int j = 0; j < m; ++j)
                    if (cells[j].first == c) parts.push_back(fill[j]);
                term *= multinomial(parts);
            }
            for (int r = 0; r < M.rows() && term != 0; ++r) {
                std::vector<long> parts;
                for (int j = 0; j < m; ++j)
                    if (cells[j].second == r) parts.push_back(fill[j]);
                term *= multinomial(parts);
            }
            total += term;
            return;
        }
        for (int k = 0; k <= left; ++k) {
            fill[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, n);
    return total;
}

namespace {

// Permutations for which one fixed divider pair is a valid gridding, built left to right.
struct GriddedDfs {
    const GridMatrix& M;
    int n;
    std::vector<int> col, row;
    std::unordered_map<uint64_t, uint64_t> memo;

    uint64_t run(int p, uint32_t used, std::vector<int>& last) {
        if (p == n) return 1;
        bool fresh = p == 0 || col[p] != col[p - 1];
        std::vector<int> saved;
        if (fresh) {
            saved = last;
            std::fill(last.begin(), last.end(), 0);
        }
        uint64_t key = used;
        for (int r = 0; r < M.rows(); ++r) key = key * 32 + static_cast<uint64_t>(last[r]);
        key = key * 32 + static_cast<uint64_t>(p);
        auto it = memo.find(key);
        uint64_t total = 0;
        if (it != memo.end()) {
            total = it->second;
        } else {
            int c = col[p];
            for (int v = 1; v <= n; ++v) {
                if (used >> v & 1u) continue;
                int r = row[v - 1];
                int e = M.at(c, r);
                if (e == 0) continue;
                if (last[r] && ((e == 1 && v < last[r]) || (e == -1 && v > last[r]))) continue;
                int keep = last[r];
                last[r] = v;
                total += run(p + 1, used | (1u << v), last);
                last[r] = keep;
            }
            memo.emplace(key, total);
        }
        if (fresh) last = saved;
        return total;
    }
};

uint64_t gridded_for_dividers(const GridMatrix& M, int n, const std::vector<int>& cd, const std::vector<int>& rd) {
    GriddedDfs dfs{M, n, block_of(cd, n), block_of(rd, n), {}};
    std::vector<int> last(M.rows(), 0);
    return dfs.run(0, 0, last);
}

}  // namespace

static BigInt gridded_oracle(const GridMatrix& M, int n, bool parallel) {
    if (n > 24) throw DomainError("oracle limited to n <= 24");
    auto cds = divider_sequences(M.columns(), n);
    auto rds = divider_sequences(M.rows(), n);
    long long jobs = static_cast<long long>(cds.size());
    std::vector<uint64_t> part(cds.size(), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long i = 0; i < jobs; ++i) {
        uint64_t s = 0;
        for (auto& rd : rds) s += gridded_for_dividers(M, n, cds[i], rd);
        part[i] = s;
    }
    BigInt total = 0;
    for (auto s : part) total += BigInt(static_cast<unsigned long>(s));
    return total;
}

BigInt count_gridded_perms_oracle(const GridMatrix& M, int n) { return gridded_oracle(M, n, true); }
BigInt count_gridded_perms_oracle_serial(const GridMatrix& M, int n) { return gridded_oracle(M, n, false); }

std::optional<Gridding> greedy_gridding(const Permutation& sigma, const std::vector<int>& V) {
    int k = static_cast<int>(V.size());
    if (k == 0) throw DomainError("empty skinny vector");
    int n = sigma.size();
    Gridding g;
    g.row_dividers = {0, n};
    g.column_dividers.assign(k + 1, n);
    g.column_dividers[0] = 0;
    int cell = 0, last = 0;
    for (int i = 0; i < n; ++i) {
        int v = sigma[i];
        bool fits = last == 0 || (V[cell] == 1 ? v > last : v < last);
        if (!fits) {
            g.column_dividers[cell + 1] = i;
            if (++cell == k) return std::nullopt;
        }
        last = v;
    }
    for (int j = cell + 1; j <= k; ++j) g.column_dividers[j] = n;
    return g;
}

std::vector<GridMatrix> all_matrices(int columns, int rows) {
    std::vector<GridMatrix> out;
    int cells = columns * rows;
    long total = 1;
    for (int i = 0; i < cells; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        GridMatrix m(columns, rows);
        long x = code;
        for (int c = 0; c < columns; ++c)
            for (int r = 0; r < rows; ++r) {
                m.set(c, r, static_cast<int>(x % 3) - 1);
                x /= 3;
            }
        out.push_back(m);
    }
    return out;
}

}  // namespace permclass
