#include "permclass/gridded_gf.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace permclass {

namespace {

struct Stripped {
    GridMatrix matrix;
    std::vector<int> column_map, row_map;  // original index -> stripped index, -1 if dropped
    bool empty = false;
};

Stripped strip(const GridMatrix& M) {
    Stripped s;
    std::vector<int> cols, rows;
    s.column_map.assign(M.columns(), -1);
    s.row_map.assign(M.rows(), -1);
    for (int c = 0; c < M.columns(); ++c)
        for (int r = 0; r < M.rows(); ++r)
            if (M.at(c, r)) {
                if (s.column_map[c] < 0) s.column_map[c] = 0, cols.push_back(c);
                if (s.row_map[r] < 0) s.row_map[r] = 0, rows.push_back(r);
            }
    std::sort(rows.begin(), rows.end());
    if (cols.empty()) {
        s.empty = true;
        return s;
    }
    for (size_t i = 0; i < cols.size(); ++i) s.column_map[cols[i]] = static_cast<int>(i);
    for (size_t i = 0; i < rows.size(); ++i) s.row_map[rows[i]] = static_cast<int>(i);
    s.matrix = GridMatrix(static_cast<int>(cols.size()), static_cast<int>(rows.size()));
    for (int c : cols)
        for (int r : rows) s.matrix.set(s.column_map[c], s.row_map[r], M.at(c, r));
    return s;
}

bool row_column_graph_acyclic(const GridMatrix& M) {
    int t = M.columns(), u = M.rows();
    std::vector<int> parent(t + u);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (auto [c, r] : M.nonzero_cells()) {
        int a = find(c), b = find(t + r);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

GridMatrix remove_lines(const GridMatrix& M, bool columns, const std::vector<int>& drop) {
    int t = M.columns() - (columns ? static_cast<int>(drop.size()) : 0);
    int u = M.rows() - (columns ? 0 : static_cast<int>(drop.size()));
    GridMatrix out(t, u);
    int cc = 0;
    for (int c = 0; c < M.columns(); ++c) {
        if (columns && std::count(drop.begin(), drop.end(), c)) continue;
        int rr = 0;
        for (int r = 0; r < M.rows(); ++r) {
            if (!columns && std::count(drop.begin(), drop.end(), r)) continue;
            out.set(cc, rr++, M.at(c, r));
        }
        ++cc;
    }
    return out;
}

}  // namespace

GridMatrix drop_empty_lines(const GridMatrix& M) {
    Stripped s = strip(M);
    if (s.empty) throw DomainError("matrix has no non-zero entries");
    return s.matrix;
}

RationalFunction AcyclicGF::gf() const { return RationalFunction(MultiPoly::constant(D.vars(), 1), D); }

Polynomial AcyclicGF::denominator() const {
    MultiPoly d = D;
    for (int i = 1; i < d.nvars(); ++i) d = d.evaluate_var(i, 1);
    return d.to_univariate(0);
}

TruncatedSeries AcyclicGF::series(int N) const { return ratio_series(Polynomial{1}, denominator(), N); }

AcyclicGF acyclic_gridded_gf(const BuildScript& script) {
    const GridMatrix& base = script.base;
    int m = base.nonzero_count();
    for (auto& st : script.steps) m += static_cast<int>(st.positions.size());
    std::vector<std::string> vars{"z"};
    for (int i = 1; i <= m; ++i) vars.push_back("x" + std::to_string(i));

    AcyclicGF out;
    out.D = MultiPoly::constant(vars, 1);
    if (base.columns() == 0) {
        if (!script.steps.empty()) throw DomainError("build script with an empty base cannot be extended");
        return out;
    }
    for (int c = 0; c < base.columns(); ++c) {
        int k = 0;
        for (int r = 0; r < base.rows(); ++r) k += base.at(c, r) != 0;
        if (k != 1) throw DomainError("base matrix needs exactly one non-zero entry per column");
    }
    for (int r = 0; r < base.rows(); ++r) {
        int k = 0;
        for (int c = 0; c < base.columns(); ++c) k += base.at(c, r) != 0;
        if (k != 1) throw DomainError("base matrix needs exactly one non-zero entry per row");
    }

    MultiPoly z = MultiPoly::variable(vars, 0), one = MultiPoly::constant(vars, 1);
    // Work with columns as the extended direction; rows are handled by transposing the id table.
    std::vector<std::vector<int>> id(base.columns(), std::vector<int>(base.rows(), -1));
    GridMatrix cur = base;
    int next = 0;
    for (int c = 0; c < base.columns(); ++c)
        for (int r = 0; r < base.rows(); ++r)
            if (base.at(c, r)) {
                id[c][r] = next++;
                out.D = out.D * (one - z * MultiPoly::variable(vars, id[c][r] + 1));
            }

    for (auto& st : script.steps) {
        int k = static_cast<int>(st.positions.size());
        if (k == 0 || static_cast<int>(st.signs.size()) != k) throw DomainError("ill-formed build step");
        for (int s : st.signs)
            if (s != 1 && s != -1) throw DomainError("build step signs must be +1 or -1");
        GridMatrix work = st.add_columns ? cur : cur.transpose();
        std::vector<std::vector<int>> wid = id;
        if (!st.add_columns) {
            wid.assign(cur.rows(), std::vector<int>(cur.columns(), -1));
            for (int c = 0; c < cur.columns(); ++c)
                for (int r = 0; r < cur.rows(); ++r) wid[r][c] = id[c][r];
        }
        int line = st.line;
        if (line < 0 || line >= work.rows()) throw DomainError("build step line out of range");
        int target = -1, count = 0;
        for (int c = 0; c < work.columns(); ++c)
            if (work.at(c, line)) ++count, target = wid[c][line];
        if (count != 1) throw DomainError("build step target line does not have a single non-zero entry");
        int t2 = work.columns() + k;
        std::vector<int> pos = st.positions;
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return pos[a] < pos[b]; });
        std::vector<char> is_new(t2, 0);
        for (int p : pos) {
            if (p < 0 || p >= t2 || is_new[p]) throw DomainError("bad insertion positions in build step");
            is_new[p] = 1;
        }
        GridMatrix grown(t2, work.rows());
        std::vector<std::vector<int>> gid(t2, std::vector<int>(work.rows(), -1));
        MultiPoly S(vars);
        int old = 0;
        for (int c = 0; c < t2; ++c) {
            if (is_new[c]) continue;
            for (int r = 0; r < work.rows(); ++r) grown.set(c, r, work.at(old, r)), gid[c][r] = wid[old][r];
            ++old;
        }
        for (int j = 0; j < k; ++j) {
            int p = pos[j];
            grown.set(p, line, st.signs[j]);
            gid[p][line] = next;
            S += MultiPoly::variable(vars, next + 1);
            ++next;
        }
        // D = A + x B  becomes  A (1 - zS) + x B.
        auto parts = out.D.coefficients_in(target + 1);
        MultiPoly A = parts.empty() ? MultiPoly(vars) : parts[0];
        MultiPoly B = parts.size() > 1 ? parts[1] : MultiPoly(vars);
        out.D = A * (one - z * S) + MultiPoly::variable(vars, target + 1) * B;

        if (st.add_columns) {
            cur = grown;
            id = gid;
        } else {
            cur = grown.transpose();
            id.assign(cur.columns(), std::vector<int>(cur.rows(), -1));
            for (int c = 0; c < cur.columns(); ++c)
                for (int r = 0; r < cur.rows(); ++r) id[c][r] = gid[r][c];
        }
    }
    out.matrix = cur;
    out.cell.assign(m, {-1, -1});
    for (int c = 0; c < cur.columns(); ++c)
        for (int r = 0; r < cur.rows(); ++r)
            if (id[c][r] >= 0) out.cell[id[c][r]] = {c, r};
    return out;
}

BuildScript plan_build(const GridMatrix& M) {
    Stripped s = strip(M);
    BuildScript script;
    if (s.empty) return script;
    GridMatrix cur = s.matrix;
    if (!row_column_graph_acyclic(cur)) throw DomainError("row-column graph is not acyclic");
    std::vector<BuildStep> peeled;
    while (true) {
        bool found = false;
        for (int pass = 0; pass < 2 && !found; ++pass) {
            // pass 0: a row whose neighbouring columns are leaves; pass 1: a column, via the transpose.
            GridMatrix w = pass == 0 ? cur : cur.transpose();
            for (int r = 0; r < w.rows() && !found; ++r) {
                std::vector<int> nb, leaves;
                for (int c = 0; c < w.columns(); ++c)
                    if (w.at(c, r)) {
                        nb.push_back(c);
                        int deg = 0;
                        for (int q = 0; q < w.rows(); ++q) deg += w.at(c, q) != 0;
                        if (deg == 1) leaves.push_back(c);
                    }
                int deg = static_cast<int>(nb.size());
                if (deg < 2 || static_cast<int>(leaves.size()) < deg - 1) continue;
                if (static_cast<int>(leaves.size()) == deg) leaves.pop_back();
                BuildStep st;
                st.add_columns = pass == 0;
                st.line = r;
                for (int c : leaves) st.positions.push_back(c), st.signs.push_back(w.at(c, r));
                GridMatrix smaller = remove_lines(w, true, leaves);
                cur = pass == 0 ? smaller : smaller.transpose();
                peeled.push_back(std::move(st));
                found = true;
            }
        }
        if (!found) break;
    }
    script.base = cur;
    script.steps.assign(peeled.rbegin(), peeled.rend());
    return script;
}

GridMatrix merge_pendant_cells(const GridMatrix& M, std::pair<int, int> e1, std::pair<int, int> e2) {
    auto [c1, r1] = e1;
    auto [c2, r2] = e2;
    auto inside = [&](int c, int r) { return c >= 0 && r >= 0 && c < M.columns() && r < M.rows(); };
    if (!inside(c1, r1) || !inside(c2, r2)) throw DomainError("designated cell outside the matrix");
    int v = M.at(c1, r1);
    if (v == 0 || M.at(c2, r2) != v) throw DomainError("designated cells must be non-zero with equal entries");
    if (c1 == c2 || r1 == r2) throw DomainError("designated cells must lie in different rows and columns");
    if (M.at(c1, r2) || M.at(c2, r1)) throw DomainError("designated cells do not span a 2x2 submatrix with zero corners");
    bool increasing = (c1 < c2) == (r1 < r2);
    if (increasing != (v == 1)) throw DomainError("designated submatrix has the wrong orientation");
    if (!row_column_graph_acyclic(M)) throw DomainError("row-column graph is not acyclic");
    auto col_count = [&](int c) {
        int k = 0;
        for (int r = 0; r < M.rows(); ++r) k += M.at(c, r) != 0;
        return k;
    };
    auto row_count = [&](int r) {
        int k = 0;
        for (int c = 0; c < M.columns(); ++c) k += M.at(c, r) != 0;
        return k;
    };
    bool ok = (col_count(c1) == 1 && row_count(r2) == 1) || (col_count(c2) == 1 && row_count(r1) == 1);
    if (!ok) throw DomainError("designated cells are not pendant in the required way");

    int ck = std::min(c1, c2), cd = std::max(c1, c2), rk = std::min(r1, r2), rd = std::max(r1, r2);
    GridMatrix out(M.columns() - 1, M.rows() - 1);
    auto cmap = [&](int c) { return c == cd ? ck : c - (c > cd); };
    auto rmap = [&](int r) { return r == rd ? rk : r - (r > rd); };
    for (auto [c, r] : M.nonzero_cells()) {
        int nc = cmap(c), nr = rmap(r);
        if (out.at(nc, nr) && !((c == c1 && r == r1) || (c == c2 && r == r2)))
            throw DomainError("merging designated cells collides with another entry");
        out.set(nc, nr, M.at(c, r));
    }
    return out;
}

TruncatedSeries UnicyclicGF::series(int N) const {
    return series_sqrt(TruncatedSeries::from_polynomial(discriminant, N)).inverse();
}

std::string UnicyclicGF::to_string() const {
    std::ostringstream os;
    os << "R = " << R.to_string() << "\nS = " << S.to_string() << "\nT = " << T.to_string()
       << "\nU = " << U.to_string() << "\nG = 1/sqrt(" << discriminant.to_string() << ")";
    return os.str();
}

UnicyclicGF unicyclic_gridded_gf(const GridMatrix& M, std::pair<int, int> e1, std::pair<int, int> e2) {
    UnicyclicGF out;
    out.merged = merge_pendant_cells(M, e1, e2);
    Stripped s = strip(M);
    AcyclicGF a = acyclic_gridded_gf(plan_build(M));
    if (!(a.matrix == s.matrix)) throw DomainError("internal: build script does not reproduce the matrix");
    auto var_of = [&](std::pair<int, int> e) {
        std::pair<int, int> t{s.column_map[e.first], s.row_map[e.second]};
        for (size_t i = 0; i < a.cell.size(); ++i)
            if (a.cell[i] == t) return static_cast<int>(i) + 1;
        throw DomainError("internal: designated cell has no mark");
    };
    int iu = var_of(e1), iv = var_of(e2);
    MultiPoly D = a.D;
    for (int i = 1; i < D.nvars(); ++i)
        if (i != iu && i != iv) D = D.evaluate_var(i, 1);
    std::vector<std::string> zuv{"z", "u", "v"};
    MultiPoly d3(zuv);
    for (auto& [e, c] : D.terms()) d3.add_term({e[0], e[iu], e[iv]}, c);
    auto part = [&](int a1, int b1) {
        MultiPoly p(std::vector<std::string>{"z"});
        for (auto& [e, c] : d3.terms())
            if (e[1] == a1 && e[2] == b1) p.add_term({e[0]}, c);
        return p.to_univariate(0);
    };
    Polynomial D00 = part(0, 0), D10 = part(1, 0), D01 = part(0, 1), D11 = part(1, 1);
    Polynomial zp = Polynomial::x();
    auto divz = [&](const Polynomial& p, int times) {
        Polynomial q = p;
        for (int i = 0; i < times; ++i) {
            auto [qq, r] = q.divmod(zp);
            if (!r.is_zero()) throw DomainError("internal: unexpected form of the acyclic denominator");
            q = qq;
        }
        return q;
    };
    out.R = divz(D00 - Polynomial{1}, 1);
    out.S = divz(D10, 1);
    out.T = divz(D01, 1);
    out.U = divz(D11, 2);
    Polynomial b = Polynomial{1} + zp * out.R + zp * out.U;
    out.discriminant = b * b - zp * out.S * out.T * Rational(4);
    return out;
}

}  // namespace permclass
