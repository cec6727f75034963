#include "permclass/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace permclass {

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

std::vector<std::vector<long>> Graph::adjacency_matrix() const {
    std::vector<std::vector<long>> A(n, std::vector<long>(n, 0));
    for (auto [a, b] : edges) {
        A[a][b] += 1;
        A[b][a] += 1;
    }
    return A;
}

std::vector<Graph> Graph::components() const {
    std::vector<int> comp(n, -1);
    auto adj = adjacency_lists();
    int k = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = k;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) comp[w] = k, stack.push_back(w);
        }
        ++k;
    }
    std::vector<Graph> out(k);
    std::vector<int> local(n);
    for (int v = 0; v < n; ++v) local[v] = out[comp[v]].n++;
    for (auto [a, b] : edges) out[comp[a]].edges.emplace_back(local[a], local[b]);
    return out;
}

bool Graph::is_connected() const {
    int nontrivial = 0;
    for (auto& c : components())
        if (!c.edges.empty()) ++nontrivial;
    return edges.empty() ? n <= 1 : nontrivial == 1;
}

bool Graph::is_forest() const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (auto [a, b] : edges) {
        int x = find(a), y = find(b);
        if (x == y) return false;
        parent[x] = y;
    }
    return true;
}

std::string Graph::to_edge_list() const {
    std::ostringstream os;
    for (auto [a, b] : edges) os << a << ' ' << b << '\n';
    return os.str();
}

Graph Graph::path(int n) {
    Graph g{n, {}};
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    g.edges.emplace_back(n - 1, 0);
    return g;
}

Graph Graph::star(int m) {
    Graph g{m + 1, {}};
    for (int i = 1; i <= m; ++i) g.edges.emplace_back(0, i);
    return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    Graph g = a;
    g.n += b.n;
    for (auto [x, y] : b.edges) g.edges.emplace_back(x + a.n, y + a.n);
    return g;
}

Graph RowColumnGraph::graph() const {
    Graph g{columns + rows, {}};
    for (auto& e : edges) g.edges.emplace_back(e.column, columns + e.row);
    return g;
}

std::string RowColumnGraph::to_edge_list() const {
    std::ostringstream os;
    for (auto& e : edges) os << 'c' << e.column + 1 << " r" << e.row + 1 << ' ' << e.sign << '\n';
    return os.str();
}

RowColumnGraph row_column_graph(const GridMatrix& M) {
    RowColumnGraph g;
    g.columns = M.columns();
    g.rows = M.rows();
    for (auto [c, r] : M.nonzero_cells()) g.edges.push_back({c, r, M.at(c, r)});
    return g;
}

Polynomial characteristic_polynomial(const Graph& G) {
    // Faddeev-LeVerrier over the integers: every division by k is exact.
    int n = G.n;
    auto A = G.adjacency_matrix();
    std::vector<BigInt> c(n + 1, 0);
    c[n] = 1;
    std::vector<std::vector<BigInt>> Mk(n, std::vector<BigInt>(n, 0));
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                BigInt s = 0;
                for (int l = 0; l < n; ++l)
                    if (A[i][l]) s += A[i][l] * Mk[l][j];
                next[i][j] = s;
            }
        for (int i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
        // c_{n-k} = -tr(A M_k) / k
        BigInt tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (A[i][l]) tr += A[i][l] * next[l][i];
        c[n - k] = -tr / k;
        Mk = std::move(next);
    }
    std::vector<Rational> coeffs(c.begin(), c.end());
    return Polynomial(coeffs);
}

static RootInterval nonnegative_largest_root(const Polynomial& p, const Rational& precision) {
    if (p.degree() <= 0) return {0, 0};
    RootInterval r = largest_real_root(p, precision);
    if (r.hi <= 0) return {0, 0};
    if (r.lo < 0) r.lo = 0;
    return r;
}

RootInterval spectral_radius(const Graph& G, const Rational& precision) {
    if (G.n == 0) throw DomainError("spectral radius of the empty graph");
    if (G.edges.empty()) return {0, 0};
    return nonnegative_largest_root(characteristic_polynomial(G), precision);
}

double spectral_radius_float(const Graph& G, int iterations) {
    if (G.edges.empty()) return 0;
    auto adj = G.adjacency_lists();
    std::vector<double> x(G.n, 1.0), y(G.n);
    double lambda = 0;
    for (int it = 0; it < iterations; ++it) {
        for (int v = 0; v < G.n; ++v) {
            y[v] = x[v];
            for (int w : adj[v]) y[v] += x[w];
        }
        double norm = 0;
        for (double t : y) norm = std::max(norm, std::abs(t));
        double prev = lambda;
        lambda = norm;
        for (int v = 0; v < G.n; ++v) x[v] = y[v] / norm;
        if (it > 50 && std::abs(lambda - prev) < 1e-15) break;
    }
    return lambda - 1;
}

namespace {

using IntPoly = std::vector<BigInt>;  // ascending

IntPoly matching_component(const Graph& G) {
    int n = G.n;
    if (n > 64) throw DomainError("matching polynomial limited to 64 vertices per component");
    std::vector<uint64_t> nb(n, 0);
    for (auto [a, b] : G.edges) {
        if (a == b) continue;
        nb[a] |= 1ull << b;
        nb[b] |= 1ull << a;
    }
    std::unordered_map<uint64_t, IntPoly> memo;
    std::function<IntPoly(uint64_t)> mu = [&](uint64_t S) -> IntPoly {
        if (S == 0) return {1};
        auto it = memo.find(S);
        if (it != memo.end()) return it->second;
        int v = __builtin_ctzll(S);
        uint64_t rest = S & ~(1ull << v);
        IntPoly a = mu(rest);
        IntPoly out(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
        uint64_t w = nb[v] & rest;
        while (w) {
            int u = __builtin_ctzll(w);
            w &= w - 1;
            IntPoly b = mu(rest & ~(1ull << u));
            for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
        }
        memo.emplace(S, out);
        return out;
    };
    uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    return mu(all);
}

}  // namespace

Polynomial matching_polynomial(const Graph& G) {
    Polynomial p{1};
    for (auto& comp : G.components()) {
        IntPoly c = matching_component(comp);
        p *= Polynomial(std::vector<Rational>(c.begin(), c.end()));
    }
    return p;
}

RootInterval largest_matching_root(const Graph& G, const Rational& precision) {
    if (G.edges.empty()) return {0, 0};
    return nonnegative_largest_root(matching_polynomial(G), precision);
}

bool has_negative_cycle(const RowColumnGraph& G) {
    int n = G.columns + G.rows;
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (auto& e : G.edges) {
        adj[e.column].emplace_back(G.columns + e.row, e.sign);
        adj[G.columns + e.row].emplace_back(e.column, e.sign);
    }
    // Sign potentials along a spanning forest; an edge that disagrees closes a negative cycle.
    std::vector<int> pot(n, 0);
    for (int s = 0; s < n; ++s) {
        if (pot[s]) continue;
        pot[s] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, sg] : adj[v]) {
                if (!pot[w]) {
                    pot[w] = pot[v] * sg;
                    q.push(w);
                } else if (pot[w] != pot[v] * sg) {
                    return true;
                }
            }
        }
    }
    return false;
}

GridMatrix double_refinement(const GridMatrix& M) {
    GridMatrix D(2 * M.columns(), 2 * M.rows());
    for (auto [c, r] : M.nonzero_cells()) {
        if (M.at(c, r) == 1) {
            D.set(2 * c, 2 * r, 1);
            D.set(2 * c + 1, 2 * r + 1, 1);
        } else {
            D.set(2 * c, 2 * r + 1, -1);
            D.set(2 * c + 1, 2 * r, -1);
        }
    }
    return D;
}

static RootInterval squared(const std::function<RootInterval(const Rational&)>& root, const Rational& precision) {
    RootInterval r = root(precision);
    Rational tighter = precision / (2 * r.hi + 1);
    if (!r.exact() && r.hi - r.lo > tighter) r = root(tighter);
    return {r.lo * r.lo, r.hi * r.hi};
}

RootInterval grid_growth_rate(const GridMatrix& M, const Rational& precision) {
    Graph g = row_column_graph(M).graph();
    return squared([&](const Rational& p) { return spectral_radius(g, p); }, precision);
}

RootInterval geom_growth_rate(const GridMatrix& M, const Rational& precision) {
    RowColumnGraph rc = row_column_graph(M);
    Graph g = has_negative_cycle(rc) ? row_column_graph(double_refinement(M)).graph() : rc.graph();
    return squared([&](const Rational& p) { return largest_matching_root(g, p); }, precision);
}

static void check_tree_input(const Graph& tree, int u, const std::vector<int>& k) {
    if (k.size() != tree.edges.size()) throw DomainError("one count per edge required");
    if (!tree.is_forest() || static_cast<int>(tree.edges.size()) != tree.n - 1) throw DomainError("graph is not a tree");
    if (u < 0 || u >= tree.n) throw DomainError("start vertex out of range");
    for (int x : k)
        if (x < 0) throw DomainError("negative traversal count");
}

BigInt tree_balanced_tours(const Graph& tree, int u, const std::vector<int>& k) {
    check_tree_input(tree, u, k);
    // Untraversed edges are dropped; what is left must be a tree through u, on which every
    // internal vertex is visited, so the product of multinomials applies.
    std::vector<std::vector<std::pair<int, int>>> adj(tree.n);
    for (size_t i = 0; i < tree.edges.size(); ++i)
        if (k[i] > 0) {
            auto [a, b] = tree.edges[i];
            adj[a].emplace_back(b, k[i]);
            adj[b].emplace_back(a, k[i]);
        }
    std::vector<int> parent(tree.n, -2);
    parent[u] = -1;
    std::vector<int> stack{u};
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, kk] : adj[v])
            if (parent[w] == -2) {
                parent[w] = v;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != std::count_if(k.begin(), k.end(), [](int x) { return x > 0; })) return 0;
    BigInt total = 1;
    for (int v = 0; v < tree.n; ++v) {
        if (parent[v] == -2) continue;
        std::vector<long> parts;
        for (auto [w, kk] : adj[v]) parts.push_back(w == parent[v] ? kk - 1 : kk);
        total *= multinomial(parts);
    }
    return total;
}

BigInt tree_balanced_tours_dfs(const Graph& tree, int u, const std::vector<int>& k) {
    check_tree_input(tree, u, k);
    int m = static_cast<int>(tree.edges.size());
    if (m > 15) throw DomainError("tour oracle limited to 15 edges");
    for (int x : k)
        if (x > 15) throw DomainError("tour oracle limited to 15 traversals per direction");
    // State: current vertex and remaining traversals per directed edge, 4 bits each.
    std::vector<int> rem(2 * m);
    for (int i = 0; i < m; ++i) rem[2 * i] = rem[2 * i + 1] = k[i];
    long steps = 2L * std::accumulate(k.begin(), k.end(), 0L);
    std::unordered_map<std::string, BigInt> memo;
    std::function<BigInt(int, long)> go = [&](int v, long left) -> BigInt {
        if (left == 0) return v == u ? 1 : 0;
        std::string key(rem.begin(), rem.end());
        key.push_back(static_cast<char>(v));
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        for (int i = 0; i < m; ++i) {
            auto [a, b] = tree.edges[i];
            int dir = -1, w = -1;
            if (a == v) dir = 0, w = b;
            else if (b == v) dir = 1, w = a;
            if (dir < 0 || rem[2 * i + dir] == 0) continue;
            --rem[2 * i + dir];
            total += go(w, left - 1);
            ++rem[2 * i + dir];
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return go(u, steps);
}

BigInt count_tours(const Graph& G, int length) {
    if (length < 0) throw DomainError("negative tour length");
    int n = G.n;
    auto A = G.adjacency_matrix();
    std::vector<std::vector<BigInt>> P(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) P[i][i] = 1;
    for (int s = 0; s < length; ++s) {
        std::vector<std::vector<BigInt>> Q(n, std::vector<BigInt>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (P[i][l] != 0)
                    for (int j = 0; j < n; ++j)
                        if (A[l][j]) Q[i][j] += P[i][l] * A[l][j];
        P = std::move(Q);
    }
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += P[i][i];
    return tr;
}

std::vector<double> LimitShape::column_mass() const {
    std::vector<double> out;
    for (auto& col : alpha) out.push_back(std::accumulate(col.begin(), col.end(), 0.0));
    return out;
}

std::vector<double> LimitShape::row_mass() const {
    std::vector<double> out(alpha.empty() ? 0 : alpha[0].size(), 0.0);
    for (auto& col : alpha)
        for (size_t r = 0; r < col.size(); ++r) out[r] += col[r];
    return out;
}

double limit_shape_growth(const GridMatrix& M, const std::vector<std::vector<double>>& alpha) {
    auto xlogx = [](double x) { return x > 0 ? x * std::log(x) : 0.0; };
    double lg = 0;
    for (int c = 0; c < M.columns(); ++c) {
        double kappa = 0;
        for (int r = 0; r < M.rows(); ++r)
            if (M.at(c, r)) kappa += alpha[c][r], lg -= xlogx(alpha[c][r]);
        lg += xlogx(kappa);
    }
    for (int r = 0; r < M.rows(); ++r) {
        double rho = 0;
        for (int c = 0; c < M.columns(); ++c)
            if (M.at(c, r)) rho += alpha[c][r], lg -= xlogx(alpha[c][r]);
        lg += xlogx(rho);
    }
    return std::exp(lg);
}

LimitShape limit_shape(const GridMatrix& M, double tolerance, int max_iterations) {
    auto cells = M.nonzero_cells();
    if (cells.empty()) throw DomainError("limit shape of an empty matrix");
    if (!row_column_graph(M).graph().is_connected()) throw DomainError("limit shape needs a connected row-column graph");
    int t = M.columns(), u = M.rows();
    LimitShape s;
    s.matrix = M;
    s.alpha.assign(t, std::vector<double>(u, 0.0));
    for (auto [c, r] : cells) s.alpha[c][r] = 1.0 / static_cast<double>(cells.size());
    for (int it = 1; it <= max_iterations; ++it) {
        auto kappa = s.column_mass();
        auto rho = s.row_mass();
        std::vector<std::vector<double>> next(t, std::vector<double>(u, 0.0));
        double total = 0;
        for (auto [c, r] : cells) total += next[c][r] = std::sqrt(kappa[c] * rho[r]);
        double change = 0;
        for (auto [c, r] : cells) {
            double v = 0.5 * s.alpha[c][r] + 0.5 * next[c][r] / total;
            change = std::max(change, std::abs(v - s.alpha[c][r]));
            s.alpha[c][r] = v;
        }
        if (change < tolerance) {
            s.iterations = it;
            s.growth = limit_shape_growth(M, s.alpha);
            return s;
        }
    }
    throw DomainError("limit shape iteration did not converge");
}

std::string limit_shape_svg(const LimitShape& shape, int size) {
    const GridMatrix& M = shape.matrix;
    auto kappa = shape.column_mass();
    auto rho = shape.row_mass();
    double amax = 0;
    for (auto& col : shape.alpha)
        for (double a : col) amax = std::max(amax, a);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
       << size << ' ' << size << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\" stroke=\"black\"/>\n";
    double x0 = 0;
    for (int c = 0; c < M.columns(); ++c) {
        double w = kappa[c] * size, y0 = 0;
        for (int r = 0; r < M.rows(); ++r) {
            double h = rho[r] * size;
            if (M.at(c, r) && w > 0 && h > 0) {
                // A thin strip along the cell's diagonal; y grows downward in SVG.
                double top = size - y0 - h, bottom = size - y0, d = 0.04 * std::min(w, h);
                double opacity = shape.alpha[c][r] / amax;
                os << "<polygon fill=\"navy\" fill-opacity=\"" << opacity << "\" points=\"";
                if (M.at(c, r) == 1)
                    os << x0 << ',' << bottom << ' ' << x0 + d << ',' << bottom << ' ' << x0 + w << ',' << top << ' '
                       << x0 + w - d << ',' << top;
                else
                    os << x0 << ',' << top << ' ' << x0 + d << ',' << top << ' ' << x0 + w << ',' << bottom << ' '
                       << x0 + w - d << ',' << bottom;
                os << "\"/>\n";
            }
            y0 += h;
        }
        x0 += w;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace permclass
