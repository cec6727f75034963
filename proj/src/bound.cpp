#include "permclass/bound.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <climits>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace permclass {

// ---------- plane trees ----------

int PlaneTree::size() const {
    int s = 1;
    for (auto& c : children) s += c.size();
    return s;
}

std::string PlaneTree::encode() const {
    std::string s = "(";
    for (auto& c : children) s += c.encode();
    return s + ")";
}

namespace {

PlaneTree decode_at(const std::string& s, size_t& p) {
    if (p >= s.size() || s[p] != '(') throw DomainError("bad tree encoding '" + s + "'");
    ++p;
    PlaneTree t;
    while (p < s.size() && s[p] == '(') t.children.push_back(decode_at(s, p));
    if (p >= s.size() || s[p] != ')') throw DomainError("bad tree encoding '" + s + "'");
    ++p;
    return t;
}

// All balanced words for forests of the given size, in lexicographic order ('(' < ')').
void forest_words(int size, std::string& cur, int open, int used, std::vector<std::string>& out) {
    if (used == size && open == 0) {
        out.push_back(cur);
        return;
    }
    if (used < size) {
        cur.push_back('(');
        forest_words(size, cur, open + 1, used + 1, out);
        cur.pop_back();
    }
    if (open > 0) {
        cur.push_back(')');
        forest_words(size, cur, open - 1, used, out);
        cur.pop_back();
    }
}

std::vector<std::string> all_forest_words(int size) {
    std::vector<std::string> out;
    std::string cur;
    forest_words(size, cur, 0, 0, out);
    return out;
}

// Matching close bracket of each open bracket.
std::vector<int> match_brackets(const std::string& s) {
    std::vector<int> m(s.size(), -1), st;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        if (s[i] == '(') st.push_back(i);
        else {
            m[st.back()] = i;
            st.pop_back();
        }
    }
    return m;
}

// Values lo.. for the trees in s[p, end), earlier components higher, each root below its subtree.
void place_forest(const std::string& s, const std::vector<int>& match, int p, int end, int lo, int* out, int& w) {
    int hi = lo + (end - p) / 2;
    while (p < end) {
        int stop = match[p] + 1;
        int sz = (stop - p) / 2;
        hi -= sz;
        out[w++] = hi;
        place_forest(s, match, p + 1, stop - 1, hi + 1, out, w);
        p = stop;
    }
}

std::vector<int> forest_word_points(const std::string& s) {
    std::vector<int> out(s.size() / 2);
    int w = 0;
    place_forest(s, match_brackets(s), 0, static_cast<int>(s.size()), 1, out.data(), w);
    return out;
}

int word_components(const std::string& s) {
    int depth = 0, h = 0;
    for (char c : s) {
        if (c == '(' && depth == 0) ++h;
        depth += c == '(' ? 1 : -1;
    }
    return h;
}

}  // namespace

PlaneTree PlaneTree::decode(const std::string& s) {
    size_t p = 0;
    PlaneTree t = decode_at(s, p);
    if (p != s.size()) throw DomainError("bad tree encoding '" + s + "'");
    return t;
}

int forest_size(const PlaneForest& f) {
    int s = 0;
    for (auto& t : f) s += t.size();
    return s;
}

std::string encode_forest(const PlaneForest& f) {
    std::string s;
    for (auto& t : f) s += t.encode();
    return s;
}

PlaneForest decode_forest(const std::string& s) {
    PlaneForest f;
    size_t p = 0;
    while (p < s.size()) f.push_back(decode_at(s, p));
    return f;
}

std::vector<PlaneForest> enumerate_forests(int size) {
    if (size < 0) throw DomainError("forest size must be nonnegative");
    std::vector<PlaneForest> out;
    for (auto& w : all_forest_words(size)) out.push_back(decode_forest(w));
    return out;
}

std::vector<PlaneTree> enumerate_trees(int size) {
    if (size < 1) throw DomainError("tree size must be positive");
    std::vector<PlaneTree> out;
    for (auto& f : enumerate_forests(size - 1)) out.push_back(PlaneTree{f});
    return out;
}

std::vector<int> red_forest_points(const PlaneForest& f) { return forest_word_points(encode_forest(f)); }

std::vector<int> red_points(const PlaneTree& t) { return forest_word_points(t.encode()); }

std::vector<int> blue_points(const PlaneTree& t) {
    auto r = red_points(t);
    int n = static_cast<int>(r.size());
    std::vector<int> b(n);
    for (int i = 0; i < n; ++i) b[i] = n + 1 - r[n - 1 - i];
    return b;
}

// ---------- the unsplit construction ----------

BigInt red_tree_count(int k) {
    if (k < 1) throw DomainError("tree size must be positive");
    return binomial(2 * k - 2, k - 1) / k;
}

BigInt blue_tree_count(int l, int d) {
    if (l < 1 || d < 0) throw DomainError("bad tree parameters");
    if (l == 1) return d == 0 ? 1 : 0;
    if (d < 1 || d > l - 1) return 0;
    BigInt num = BigInt(d) * binomial(2 * l - 3 - d, l - 2);
    return num / (l - 1);
}

BigInt preinterleaving_count(int k, int d) { return binomial(k - 1 + d, d); }

static void check_params(double lambda, double delta) {
    if (!(lambda > 0) || !(delta > 0) || !(delta < 1)) throw DomainError("need lambda > 0 and 0 < delta < 1");
}

double E_lambda_delta(double lambda, double delta) {
    check_params(lambda, delta);
    double dl = delta * lambda;
    double logE = std::log(4.0) + (2 - delta) * lambda * std::log(2 - delta) - (1 - delta) * lambda * std::log(1 - delta) +
                  2 * (1 + dl) * std::log(1 + dl) - 2 * dl * std::log(dl);
    return std::exp(logE);
}

double baseline_growth(double lambda, double delta) {
    return std::pow(E_lambda_delta(lambda, delta), 1 / (1 + lambda));
}

double delta_star(double lambda) {
    if (!(lambda > 0)) throw DomainError("need lambda > 0");
    return (2 * lambda - 1 + std::sqrt(1 + 4 * lambda + 8 * lambda * lambda)) / (2 * lambda * (2 + lambda));
}

static double log_big(const BigInt& x) {
    if (x <= 0) throw DomainError("log of a nonpositive count");
    long e;
    double m = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::log(m) + e * std::log(2.0);
}

double w0_growth_exact(int k, double lambda, double delta) {
    check_params(lambda, delta);
    if (k < 2) throw DomainError("need k >= 2");
    int l = static_cast<int>(std::ceil(lambda * k));
    int d = static_cast<int>(std::ceil(delta * lambda * k));
    if (l < 2 || d > l - 1) throw DomainError("blue trees too small for the root degree");
    double n = double(k) * (k + l + 1);
    double s = (k + 1) * log_big(red_tree_count(k)) + k * log_big(blue_tree_count(l, d)) +
               2.0 * k * log_big(preinterleaving_count(k, d));
    return std::exp(s / n);
}

// ---------- interleavings ----------

namespace {

constexpr int kMaxSide = 32;

struct Entry {
    int m, b;  // least blue value before the red vertex, and its value
};

struct Interleaver {
    const int* B;
    int nb;
    const int* R;
    int nr;
    int suffix_max[kMaxSide + 1];
    bool starts_213[kMaxSide + 1];   // red vertex heading a 213 among reds: no blue may precede it
    bool suffix_213[kMaxSide + 1];
    bool ends_132[kMaxSide + 1];     // blue vertex closing a 132 among blues: no red may follow it
    Entry stack[2 * kMaxSide + 2][kMaxSide + 1];
    long count = 0;

    // A red b is dangerous once blue a < c sit on either side of it; a later red above it closes a 1324.
    void run(int j, int r, int cur_min, int D, int depth, int sz) {
        if (r == nr) {
            ++count;
            return;
        }
        if (j == nb) {
            if (suffix_max[r] < D && (nb == 0 || !suffix_213[r])) ++count;
            return;
        }
        Entry* U = stack[depth];
        Entry* V = stack[depth + 1];
        if (!ends_132[j]) {
            int c = B[j], D2 = D, s2 = sz;
            while (s2 > 0 && U[s2 - 1].m < c) D2 = std::min(D2, U[--s2].b);
            std::copy(U, U + s2, V);
            run(j + 1, r, std::min(cur_min, c), D2, depth + 1, s2);
        }
        int d = R[r];
        if (d < D && !(starts_213[r] && cur_min != INT_MAX)) {
            std::copy(U, U + sz, V);
            int s2 = sz;
            if (cur_min != INT_MAX) {
                if (s2 > 0 && V[s2 - 1].m == cur_min) V[s2 - 1].b = std::min(V[s2 - 1].b, d);
                else V[s2++] = {cur_min, d};
            }
            run(j, r + 1, cur_min, D, depth + 1, s2);
        }
    }
};

bool has_1324(const std::vector<int>& p) {
    int n = static_cast<int>(p.size());
    for (int a = 0; a < n; ++a)
        for (int c = a + 2; c < n; ++c) {
            if (p[c] <= p[a]) continue;
            for (int b = a + 1; b < c; ++b) {
                if (p[b] <= p[c]) continue;
                for (int d = c + 1; d < n; ++d)
                    if (p[d] > p[b]) return true;
            }
        }
    return false;
}

long interleave(const int* B, int nb, const int* R, int nr) {
    if (nb > kMaxSide || nr > kMaxSide) throw DomainError("interleaving too long");
    Interleaver it;
    it.B = B;
    it.nb = nb;
    it.R = R;
    it.nr = nr;
    if (has_1324(std::vector<int>(B, B + nb)) || has_1324(std::vector<int>(R, R + nr))) return 0;
    it.suffix_max[nr] = INT_MIN;
    it.suffix_213[nr] = false;
    for (int r = nr - 1; r >= 0; --r) {
        it.suffix_max[r] = std::max(it.suffix_max[r + 1], R[r]);
        bool lower = false;
        it.starts_213[r] = false;
        for (int q = r + 1; q < nr && !it.starts_213[r]; ++q) {
            if (lower && R[q] > R[r]) it.starts_213[r] = true;
            lower = lower || R[q] < R[r];
        }
        it.suffix_213[r] = it.suffix_213[r + 1] || it.starts_213[r];
    }
    for (int j = 0; j < nb; ++j) {
        it.ends_132[j] = false;
        for (int a = 0; a < j && !it.ends_132[j]; ++a)
            for (int b = a + 1; b < j && !it.ends_132[j]; ++b) it.ends_132[j] = B[a] < B[j] && B[j] < B[b];
    }
    it.run(0, 0, INT_MAX, INT_MAX, 0, 0);
    return it.count;
}

}  // namespace

long count_interleavings(const std::vector<int>& blue, const std::vector<int>& red) {
    return interleave(blue.data(), static_cast<int>(blue.size()), red.data(), static_cast<int>(red.size()));
}

long count_interleavings_brute(const std::vector<int>& blue, const std::vector<int>& red) {
    int nb = static_cast<int>(blue.size()), nr = static_cast<int>(red.size());
    int off = 0;
    for (int x : blue) off = std::max(off, x);
    long count = 0;
    std::vector<int> seq;
    std::function<void(int, int)> rec = [&](int j, int r) {
        if (j == nb && r == nr) {
            count += !has_1324(seq);
            return;
        }
        if (j < nb) {
            seq.push_back(blue[j]);
            rec(j + 1, r);
            seq.pop_back();
        }
        if (r < nr) {
            seq.push_back(red[r] + off);
            rec(j, r + 1);
            seq.pop_back();
        }
    };
    rec(0, 0);
    return count;
}

long Q(const PlaneTree& t, const PlaneForest& f) {
    auto b = blue_points(t);
    b.pop_back();  // the subtree root sits to the right of everything
    auto r = red_forest_points(f);
    for (auto& x : r) x += t.size();
    return count_interleavings(b, r);
}

// ---------- limiting proportions ----------

double mu_beta(int i, double delta) {
    if (i < 1) throw DomainError("tree size must be positive");
    return std::pow(1 - delta, i - 1) / std::pow(2 - delta, 2 * i - 1);
}

double mu_gamma(int j, double lambda, double delta) {
    double dl = delta * lambda;
    return dl / std::pow(1 + dl, j + 1);
}

double mu_gamma_greater(int j, double lambda, double delta) { return 1 / std::pow(1 + delta * lambda, j + 1); }

double mu_rho(int m) { return std::ldexp(1.0, -(2 * m + 1)); }

double mu_rho_plus(int m, int h) { return std::ldexp(1.0, -(2 * m - h)); }

double mu(int i, int m, int h, double lambda, double delta) {
    check_params(lambda, delta);
    return mu_beta(i, delta) *
           (mu_gamma(m, lambda, delta) * mu_rho_plus(m, h) + mu_gamma_greater(m, lambda, delta) * mu_rho(m));
}

double mu(const PlaneTree& t, const PlaneForest& f, double lambda, double delta) {
    return mu(t.size(), forest_size(f), static_cast<int>(f.size()), lambda, delta);
}

// ---------- the product over pairs ----------

PairTable build_pair_table(int N, bool parallel) {
    if (N < 2) throw DomainError("need N >= 2");
    PairTable t;
    t.N = N;
    t.log_q.assign(N + 1, std::vector<std::vector<double>>(N + 1));
    for (int i = 0; i <= N; ++i)
        for (int m = 0; m <= N; ++m) t.log_q[i][m].assign(m + 1, 0.0);

    // Flattened point rows: blue without its root, red fringes with their component counts.
    std::vector<std::vector<int>> blue(N + 1), red(N + 1), comps(N + 1);
    std::vector<long> n_trees(N + 1, 0), n_forests(N + 1, 0);
    for (int s = 0; s <= N; ++s) {
        for (auto& w : all_forest_words(s)) {
            auto p = forest_word_points(w);
            red[s].insert(red[s].end(), p.begin(), p.end());
            comps[s].push_back(word_components(w));
            ++n_forests[s];
            if (s + 1 <= N) {
                auto tree = "(" + w + ")";
                auto r = forest_word_points(tree);
                int n = s + 1;
                for (int a = 0; a + 1 < n; ++a) blue[n].push_back(n + 1 - r[n - 1 - a]);
                ++n_trees[n];
            }
        }
    }

    for (int i = 1; i <= N; ++i)
        for (int m = 0; i + m <= N; ++m) {
            long nt = n_trees[i], nf = n_forests[m];
            t.pair_count += nt * nf;
            if (i == 1 || m == 0) continue;
            // per-tree partial sums keep the total independent of the thread count
            std::vector<std::vector<double>> part(nt, std::vector<double>(m + 1, 0.0));
            std::vector<long> nontrivial(nt, 0);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
            for (long a = 0; a < nt; ++a) {
                const int* B = blue[i].data() + a * (i - 1);
                std::vector<int> R(m);
                for (long f = 0; f < nf; ++f) {
                    for (int x = 0; x < m; ++x) R[x] = red[m][f * m + x] + i;
                    long q = interleave(B, i - 1, R.data(), m);
                    if (q > 1) {
                        part[a][comps[m][f]] += std::log(static_cast<double>(q));
                        ++nontrivial[a];
                    }
                }
            }
            for (long a = 0; a < nt; ++a) {
                for (int h = 0; h <= m; ++h) t.log_q[i][m][h] += part[a][h];
                t.nontrivial_count += nontrivial[a];
            }
        }
    return t;
}

double g_N(const PairTable& table, double lambda, double delta) {
    double lg = std::log(baseline_growth(lambda, delta));
    double w = 2 * delta * lambda / (1 + lambda);
    for (int i = 1; i <= table.N; ++i)
        for (int m = 1; i + m <= table.N; ++m)
            for (int h = 1; h <= m; ++h) {
                double s = table.log_q[i][m][h];
                if (s != 0) lg += w * mu(i, m, h, lambda, delta) * s;
            }
    return std::exp(lg);
}

double g_N(const BoundParams& params) { return g_N(build_pair_table(params.N), params.lambda, params.delta); }

BoundResult maximize_bound(const PairTable& table, const SearchConfig& cfg) {
    if (cfg.grid < 2) throw DomainError("grid needs at least two points per axis");
    BoundResult res;
    auto f = [&](double l, double d) {
        ++res.evaluations;
        if (!(l > 0) || !(d > 0) || !(d < 1)) return -std::numeric_limits<double>::infinity();
        return g_N(table, l, d);
    };
    double dl = (cfg.lambda_hi - cfg.lambda_lo) / (cfg.grid - 1);
    double dd = (cfg.delta_hi - cfg.delta_lo) / (cfg.grid - 1);
    double best = -1, bl = cfg.lambda_lo, bd = cfg.delta_lo;
    for (int a = 0; a < cfg.grid; ++a)
        for (int b = 0; b < cfg.grid; ++b) {
            double l = cfg.lambda_lo + a * dl, d = cfg.delta_lo + b * dd;
            double v = f(l, d);
            if (v > best) best = v, bl = l, bd = d;
        }

    // Nelder-Mead on -g
    struct Pt {
        double x[2];
        double v;
    };
    std::array<Pt, 3> s{Pt{{bl, bd}, -best}, Pt{{bl + dl, bd}, 0}, Pt{{bl, bd + dd}, 0}};
    for (int k = 1; k < 3; ++k) s[k].v = -f(s[k].x[0], s[k].x[1]);
    auto eval = [&](double x0, double x1) { return Pt{{x0, x1}, -f(x0, x1)}; };
    for (int it = 0; it < cfg.simplex_iterations; ++it) {
        std::sort(s.begin(), s.end(), [](const Pt& a, const Pt& b) { return a.v < b.v; });
        double spread = std::abs(s[2].v - s[0].v);
        double size = std::max({std::abs(s[1].x[0] - s[0].x[0]), std::abs(s[2].x[0] - s[0].x[0]),
                                std::abs(s[1].x[1] - s[0].x[1]), std::abs(s[2].x[1] - s[0].x[1])});
        if (spread < cfg.tolerance && size < 1e-7) {
            res.converged = true;
            break;
        }
        double c0 = (s[0].x[0] + s[1].x[0]) / 2, c1 = (s[0].x[1] + s[1].x[1]) / 2;
        Pt r = eval(2 * c0 - s[2].x[0], 2 * c1 - s[2].x[1]);
        if (r.v < s[0].v) {
            Pt e = eval(3 * c0 - 2 * s[2].x[0], 3 * c1 - 2 * s[2].x[1]);
            s[2] = e.v < r.v ? e : r;
        } else if (r.v < s[1].v) {
            s[2] = r;
        } else {
            bool outside = r.v < s[2].v;
            Pt c = outside ? eval((c0 + r.x[0]) / 2, (c1 + r.x[1]) / 2) : eval((c0 + s[2].x[0]) / 2, (c1 + s[2].x[1]) / 2);
            if (c.v < std::min(r.v, s[2].v)) {
                s[2] = c;
            } else {
                for (int k = 1; k < 3; ++k) s[k] = eval((s[0].x[0] + s[k].x[0]) / 2, (s[0].x[1] + s[k].x[1]) / 2);
            }
        }
    }
    std::sort(s.begin(), s.end(), [](const Pt& a, const Pt& b) { return a.v < b.v; });
    res.g = -s[0].v;
    res.lambda = s[0].x[0];
    res.delta = s[0].x[1];
    return res;
}

BoundResult maximize_bound(int N, const SearchConfig& config) { return maximize_bound(build_pair_table(N), config); }

// ---------- regular permutations ----------

namespace {

struct Piece {
    std::vector<int> pts;                // realization, position order
    std::vector<int> pos_nonroot;        // local indices of non-root vertices by position
    std::vector<int> val_nonroot;        // the same by value
    int root = 0;
};

Piece make_piece(const PlaneTree& t, bool red) {
    Piece p;
    p.pts = red ? red_points(t) : blue_points(t);
    int n = static_cast<int>(p.pts.size());
    p.root = red ? 0 : n - 1;
    for (int i = 0; i < n; ++i)
        if (i != p.root) p.pos_nonroot.push_back(i);
    p.val_nonroot = p.pos_nonroot;
    std::sort(p.val_nonroot.begin(), p.val_nonroot.end(), [&](int a, int b) { return p.pts[a] < p.pts[b]; });
    return p;
}

using Id = std::pair<int, int>;  // (piece, local index)

void merge_into(std::vector<Id>& out, const Shuffle& s, int blue_piece, const std::vector<int>& blue,
                int red_piece, const std::vector<int>& red) {
    if (s.size() != blue.size() + red.size()) throw DomainError("interleaving has the wrong length");
    size_t a = 0, b = 0;
    for (bool x : s) {
        if (x) {
            if (a >= blue.size()) throw DomainError("interleaving has the wrong number of blue entries");
            out.push_back({blue_piece, blue[a++]});
        } else {
            if (b >= red.size()) throw DomainError("interleaving has the wrong number of red entries");
            out.push_back({red_piece, red[b++]});
        }
    }
}

// Entry values from a position order and a bottom-to-top value order of the same ids.
std::vector<int> realise(const std::vector<Id>& pos, const std::vector<Id>& val, int max_piece, int max_local) {
    std::vector<int> rank((max_piece + 1) * (max_local + 1), 0);
    for (size_t i = 0; i < val.size(); ++i) rank[val[i].first * (max_local + 1) + val[i].second] = static_cast<int>(i) + 1;
    std::vector<int> out;
    out.reserve(pos.size());
    for (auto& id : pos) out.push_back(rank[id.first * (max_local + 1) + id.second]);
    return out;
}

bool avoids_1324_fast(const std::vector<int>& p) {
    int n = static_cast<int>(p.size());
    if (n < 4) return true;
    std::vector<int> pre(n), suf(n);
    pre[0] = p[0];
    for (int i = 1; i < n; ++i) pre[i] = std::min(pre[i - 1], p[i]);
    suf[n - 1] = p[n - 1];
    for (int i = n - 2; i >= 0; --i) suf[i] = std::max(suf[i + 1], p[i]);
    for (int b = 1; b < n; ++b)
        for (int c = b + 1; c + 1 < n; ++c)
            if (p[b] > p[c] && pre[b - 1] < p[c] && suf[c + 1] > p[b]) return false;
    return true;
}

int max_local(const std::vector<Piece>& pieces) {
    int m = 0;
    for (auto& p : pieces) m = std::max(m, static_cast<int>(p.pts.size()));
    return m;
}

std::vector<int> assemble_pieces(const std::vector<Piece>& red, const std::vector<Piece>& blue,
                                 const std::vector<Shuffle>& H, const std::vector<Shuffle>& V, std::vector<int>* labels) {
    int t = static_cast<int>(blue.size());
    std::vector<Id> pos, val;
    for (int j = 0; j <= t; ++j) {
        pos.push_back({2 * j, red[j].root});
        if (j < t) {
            merge_into(pos, H[j], 2 * j + 1, blue[j].pos_nonroot, 2 * j, red[j].pos_nonroot);
            pos.push_back({2 * j + 1, blue[j].root});
        } else {
            for (int x : red[j].pos_nonroot) pos.push_back({2 * j, x});
        }
    }
    for (int j = t; j >= 0; --j) {
        val.push_back({2 * j, red[j].root});
        if (j >= 1) {
            merge_into(val, V[j - 1], 2 * j - 1, blue[j - 1].val_nonroot, 2 * j, red[j].val_nonroot);
            val.push_back({2 * j - 1, blue[j - 1].root});
        } else {
            for (int x : red[0].val_nonroot) val.push_back({0, x});
        }
    }
    if (labels) {
        labels->clear();
        for (auto& id : pos) labels->push_back(id.first);
    }
    return realise(pos, val, 2 * t, std::max(max_local(red), max_local(blue)));
}

std::vector<Piece> pieces_of(const std::vector<PlaneTree>& trees, bool red) {
    std::vector<Piece> out;
    for (auto& t : trees) out.push_back(make_piece(t, red));
    return out;
}

// Subtree index of each non-root blue vertex; subtrees are position blocks ending at their roots.
std::vector<int> blue_subtree_of(const Piece& b) {
    int n = static_cast<int>(b.pts.size());
    std::vector<int> sub(n, -1);
    int s = 0;
    for (int i = 0; i + 1 < n; ++i) {
        sub[i] = s;
        // nearest higher entry to the right is the blue parent
        int par = i + 1;
        while (b.pts[par] < b.pts[i]) ++par;
        if (par == n - 1) ++s;
    }
    return sub;
}

bool unsplit(const Piece& b, const std::vector<int>& order, const Shuffle& s) {
    auto sub = blue_subtree_of(b);
    int last_sub = -1;
    bool red_since = false;
    size_t a = 0;
    for (bool x : s) {
        if (!x) {
            red_since = true;
            continue;
        }
        int cur = sub[order[a++]];
        if (cur == last_sub && red_since) return false;
        last_sub = cur;
        red_since = false;
    }
    return true;
}

}  // namespace

Permutation assemble_w(const WConstruction& w) {
    if (w.red.size() != w.blue.size() + 1 || w.horizontal.size() != w.blue.size() || w.vertical.size() != w.blue.size())
        throw DomainError("need t+1 red trees, t blue trees and t interleavings of each kind");
    return Permutation(assemble_pieces(pieces_of(w.red, true), pieces_of(w.blue, false), w.horizontal, w.vertical, nullptr));
}

std::vector<int> w_pieces(const WConstruction& w) {
    std::vector<int> labels;
    assemble_pieces(pieces_of(w.red, true), pieces_of(w.blue, false), w.horizontal, w.vertical, &labels);
    return labels;
}

static std::vector<int> horizontal_config(const Piece& r, const Piece& b, const Shuffle& s) {
    std::vector<Id> pos{{0, r.root}}, val;
    merge_into(pos, s, 1, b.pos_nonroot, 0, r.pos_nonroot);
    pos.push_back({1, b.root});
    for (int x : b.val_nonroot) val.push_back({1, x});
    val.push_back({1, b.root});
    val.push_back({0, r.root});
    for (int x : r.val_nonroot) val.push_back({0, x});
    return realise(pos, val, 1, std::max(r.pts.size(), b.pts.size()));
}

static std::vector<int> vertical_config(const Piece& b, const Piece& r, const Shuffle& s) {
    std::vector<Id> pos, val{{0, r.root}};
    for (int x : b.pos_nonroot) pos.push_back({1, x});
    pos.push_back({1, b.root});
    pos.push_back({0, r.root});
    for (int x : r.pos_nonroot) pos.push_back({0, x});
    merge_into(val, s, 1, b.val_nonroot, 0, r.val_nonroot);
    val.push_back({1, b.root});
    return realise(pos, val, 1, std::max(r.pts.size(), b.pts.size()));
}

bool horizontal_valid(const PlaneTree& red, const PlaneTree& blue, const Shuffle& s) {
    return avoids_1324_fast(horizontal_config(make_piece(red, true), make_piece(blue, false), s));
}

bool vertical_valid(const PlaneTree& blue, const PlaneTree& red, const Shuffle& s) {
    return avoids_1324_fast(vertical_config(make_piece(blue, false), make_piece(red, true), s));
}

std::vector<Shuffle> all_shuffles(int blue, int red) {
    if (blue < 0 || red < 0) throw DomainError("negative interleaving length");
    std::vector<Shuffle> out;
    Shuffle cur;
    std::function<void(int, int)> rec = [&](int a, int b) {
        if (a == 0 && b == 0) {
            out.push_back(cur);
            return;
        }
        if (a > 0) {
            cur.push_back(true);
            rec(a - 1, b);
            cur.pop_back();
        }
        if (b > 0) {
            cur.push_back(false);
            rec(a, b - 1);
            cur.pop_back();
        }
    };
    rec(blue, red);
    return out;
}

bool horizontal_unsplit(const PlaneTree& blue, const Shuffle& s) {
    auto b = make_piece(blue, false);
    return unsplit(b, b.pos_nonroot, s);
}

bool vertical_unsplit(const PlaneTree& blue, const Shuffle& s) {
    auto b = make_piece(blue, false);
    return unsplit(b, b.val_nonroot, s);
}

long horizontal_count_by_fringes(const PlaneTree& red, const PlaneTree& blue) {
    auto r = make_piece(red, true);
    auto b = make_piece(blue, false);
    int k = static_cast<int>(r.pts.size()), l = static_cast<int>(b.pts.size());
    auto sub = blue_subtree_of(b);
    int d = l == 1 ? 0 : sub[l - 2] + 1;
    // blocks of non-root vertices, the subtree root last in each
    std::vector<std::vector<int>> block(d);
    for (int i = 0; i + 1 < l; ++i) block[sub[i]].push_back(b.pts[i]);
    std::vector<int> parent(k, -1);
    for (int p = 1; p < k; ++p) {
        int q = p - 1;
        while (r.pts[q] > r.pts[p]) --q;
        parent[p] = q;
    }
    long total = 0;
    for (auto& pre : all_shuffles(d, k - 1)) {
        // merged positions: red vertex p (1..k-1) and blue root j
        std::vector<int> red_at(k, -1), root_at(d);
        int pos = 0, rp = 1, bj = 0;
        std::vector<int> red_order;
        for (bool x : pre) {
            if (x) root_at[bj++] = pos;
            else red_at[rp++] = pos;
            ++pos;
        }
        long prod = 1;
        for (int j = 0; j < d && prod; ++j) {
            int u = root_at[j];
            int y = j ? root_at[j - 1] : -1;
            int v = -1;
            for (int p = 1; p < k; ++p)
                if (red_at[p] > u && (v < 0 || red_at[p] < red_at[v])) v = p;
            int x = v < 0 ? 0 : parent[v];
            int lo = std::max(red_at[x], y);
            std::vector<int> fringe;
            for (int p = 1; p < k; ++p)
                if (red_at[p] > lo && red_at[p] < u) fringe.push_back(r.pts[p] + l);
            std::vector<int> nonroot(block[j].begin(), block[j].end() - 1);
            prod *= count_interleavings(nonroot, fringe);
        }
        total += prod;
    }
    return total;
}

WCheck check_w_avoidance(int t, int k_max, int l_max) {
    if (t < 0 || k_max < 1 || l_max < 1) throw DomainError("bad construction bounds");
    WCheck res;
    int npieces = 2 * t + 1;
    int keep = std::min(4, npieces);
    for (int k = 1; k <= k_max; ++k)
        for (int l = 1; l <= l_max; ++l) {
            auto reds = pieces_of(enumerate_trees(k), true);
            auto blues = pieces_of(enumerate_trees(l), false);
            // locally valid interleavings per (red, blue) pair
            std::vector<std::vector<std::vector<Shuffle>>> Hv(reds.size(), std::vector<std::vector<Shuffle>>(blues.size()));
            auto Vv = Hv;
            auto shuffles = all_shuffles(l - 1, k - 1);
            for (size_t a = 0; a < reds.size(); ++a)
                for (size_t b = 0; b < blues.size(); ++b)
                    for (auto& s : shuffles) {
                        if (avoids_1324_fast(horizontal_config(reds[a], blues[b], s))) Hv[a][b].push_back(s);
                        if (avoids_1324_fast(vertical_config(blues[b], reds[a], s))) Vv[a][b].push_back(s);
                    }
            // every subset of `keep` pieces, as a bitmask
            for (int mask = 0; mask < (1 << npieces); ++mask) {
                if (__builtin_popcount(mask) != keep) continue;
                std::vector<int> choice(npieces, 0);
                std::vector<Piece> rs(t + 1), bs(t);
                std::vector<Shuffle> H(t), V(t);
                std::vector<int> labels;
                std::function<void(int)> pick_link;
                auto present = [&](int piece) { return (mask >> piece & 1) != 0; };
                pick_link = [&](int link) {
                    if (link == 2 * t) {
                        auto p = assemble_pieces(rs, bs, H, V, &labels);
                        std::vector<int> sub;
                        for (size_t i = 0; i < p.size(); ++i)
                            if (present(labels[i])) sub.push_back(p[i]);
                        ++res.checked;
                        if (!avoids_1324_fast(sub)) ++res.failures;
                        return;
                    }
                    // link 2j joins R_j and B_{j+1} horizontally, link 2j+1 joins B_{j+1} and R_{j+1}
                    int j = link / 2;
                    bool horiz = link % 2 == 0;
                    int pa = horiz ? 2 * j : 2 * j + 2, pb = 2 * j + 1;
                    auto& opts = horiz ? Hv[choice[pa]][choice[pb]] : Vv[choice[pa]][choice[pb]];
                    if (opts.empty()) return;
                    size_t n = present(pa) && present(pb) ? opts.size() : 1;
                    for (size_t o = 0; o < n; ++o) {
                        (horiz ? H[j] : V[j]) = opts[o];
                        pick_link(link + 1);
                    }
                };
                std::function<void(int)> pick_tree = [&](int piece) {
                    if (piece == npieces) {
                        pick_link(0);
                        return;
                    }
                    bool red = piece % 2 == 0;
                    size_t n = present(piece) ? (red ? reds.size() : blues.size()) : 1;
                    for (size_t c = 0; c < n; ++c) {
                        choice[piece] = static_cast<int>(c);
                        if (red) rs[piece / 2] = reds[c];
                        else bs[piece / 2] = blues[c];
                        pick_tree(piece + 1);
                    }
                };
                pick_tree(0);
            }
        }
    return res;
}

BigInt count_w0_direct(int t, int k, int l, int d) {
    if (t < 0 || k < 1 || l < 1) throw DomainError("bad construction parameters");
    std::vector<PlaneTree> reds = enumerate_trees(k), blues;
    for (auto& b : enumerate_trees(l))
        if (static_cast<int>(b.children.size()) == d) blues.push_back(b);
    auto shuffles = all_shuffles(l - 1, k - 1);
    std::vector<long> h_count(blues.size(), 0), v_count(blues.size(), 0);
    for (size_t b = 0; b < blues.size(); ++b)
        for (auto& s : shuffles) {
            h_count[b] += horizontal_unsplit(blues[b], s);
            v_count[b] += vertical_unsplit(blues[b], s);
        }
    // walk every tuple of trees; interleaving counts multiply per tuple
    BigInt total = 0;
    std::function<void(int, BigInt)> rec = [&](int piece, BigInt acc) {
        if (piece == 2 * t + 1) {
            total += acc;
            return;
        }
        if (piece % 2 == 0) {
            for (size_t r = 0; r < reds.size(); ++r) rec(piece + 1, acc);
        } else {
            for (size_t b = 0; b < blues.size(); ++b) rec(piece + 1, acc * h_count[b] * v_count[b]);
        }
    };
    rec(0, BigInt(1));
    return total;
}

BigInt count_w0_formula(int t, int k, int l, int d) {
    BigInt r, b, p;
    mpz_pow_ui(r.get_mpz_t(), red_tree_count(k).get_mpz_t(), t + 1);
    mpz_pow_ui(b.get_mpz_t(), blue_tree_count(l, d).get_mpz_t(), t);
    mpz_pow_ui(p.get_mpz_t(), preinterleaving_count(k, d).get_mpz_t(), 2 * t);
    return r * b * p;
}

// ---------- Lukasiewicz paths ----------

bool LukaPath::valid() const {
    int y = 0;
    for (int s : steps) {
        if (s > 1) return false;
        y += s;
        if (y < 1) return false;
    }
    return true;
}

std::vector<int> LukaPath::heights() const {
    std::vector<int> h{0};
    for (int s : steps) h.push_back(h.back() + s);
    return h;
}

bool LukaPattern::valid() const {
    int y = 0;
    for (int s : steps) {
        if (s > 1) return false;
        y += s;
        if (y <= 0) return false;
    }
    return !steps.empty();
}

int LukaPattern::height(int i) const {
    int y = 0;
    for (int j = 0; j < i; ++j) y += steps[j];
    return y;
}

int LukaPattern::final_height() const { return height(static_cast<int>(steps.size())); }

std::vector<LukaPath> enumerate_luka_paths(int n) {
    if (n < 0) throw DomainError("length must be nonnegative");
    std::vector<LukaPath> out;
    LukaPath p;
    std::function<void(int)> rec = [&](int y) {
        if (static_cast<int>(p.steps.size()) == n) {
            out.push_back(p);
            return;
        }
        for (int s = 1; y + s >= 1; --s) {
            p.steps.push_back(s);
            rec(y + s);
            p.steps.pop_back();
        }
    };
    rec(0);
    return out;
}

static void preorder_degrees(const PlaneTree& t, std::vector<int>& out) {
    out.push_back(static_cast<int>(t.children.size()));
    for (auto& c : t.children) preorder_degrees(c, out);
}

LukaPath forest_to_path(const PlaneForest& f) {
    std::vector<int> deg;
    for (auto& t : f) preorder_degrees(t, deg);
    LukaPath p;
    for (auto it = deg.rbegin(); it != deg.rend(); ++it) p.steps.push_back(1 - *it);
    return p;
}

LukaPath tree_to_path(const PlaneTree& t) { return forest_to_path(PlaneForest{t}); }

PlaneForest path_to_forest(const LukaPath& p) {
    if (!p.valid()) throw DomainError("not a Lukasiewicz path");
    // Right to left in the tree is left to right in the path, so read the forest back from the end.
    std::vector<PlaneTree> stack;
    for (int s : p.steps) {
        int r = 1 - s;
        PlaneTree t;
        for (int c = 0; c < r; ++c) {
            t.children.push_back(std::move(stack.back()));
            stack.pop_back();
        }
        stack.push_back(std::move(t));
    }
    // the leftmost component is visited last
    return PlaneForest(stack.rbegin(), stack.rend());
}

PlaneTree path_to_tree(const LukaPath& p) {
    auto f = path_to_forest(p);
    if (f.size() != 1) throw DomainError("path does not end at height 1");
    return f[0];
}

long luka_pattern_count(const LukaPath& p, const LukaPattern& w, bool skip_first) {
    int n = static_cast<int>(p.steps.size()), m = static_cast<int>(w.steps.size());
    long c = 0;
    for (int k = skip_first ? 1 : 0; k + m <= n; ++k)
        if (std::equal(w.steps.begin(), w.steps.end(), p.steps.begin() + k)) ++c;
    return c;
}

MultiPoly autocorrelation(const LukaPattern& w) {
    std::vector<std::string> vars{"z", "y"};
    MultiPoly a(vars);
    int m = static_cast<int>(w.steps.size());
    for (int i = 1; i < m; ++i)
        if (std::equal(w.steps.begin() + i, w.steps.end(), w.steps.begin())) a.add_term({i, w.height(i)}, 1);
    return a;
}

std::vector<BigInt> luka_occurrence_distribution(const LukaPattern& w, int n, bool skip_first) {
    if (n < 0) throw DomainError("length must be nonnegative");
    int m = static_cast<int>(w.steps.size());
    std::vector<long> dist;
    std::vector<int> steps(n);
    std::function<void(int, int, int)> rec = [&](int i, int y, int occ) {
        if (i >= m && (!skip_first || i - m >= 1) && std::equal(w.steps.begin(), w.steps.end(), steps.begin() + (i - m))) ++occ;
        if (i == n) {
            if (static_cast<int>(dist.size()) <= occ) dist.resize(occ + 1, 0);
            ++dist[occ];
            return;
        }
        for (int s = 1; y + s >= 1; --s) {
            steps[i] = s;
            rec(i + 1, y + s, occ);
        }
    };
    rec(0, 0, 0);
    return std::vector<BigInt>(dist.begin(), dist.end());
}

namespace {

// Series in z through z^K whose coefficients are polynomials in u.
using Bi = std::vector<std::vector<BigInt>>;

Bi bi_zero(int K) { return Bi(K + 1); }

void bi_add_to(Bi& a, const Bi& b, int sign = 1) {
    for (size_t k = 0; k < b.size(); ++k) {
        if (a[k].size() < b[k].size()) a[k].resize(b[k].size(), 0);
        for (size_t j = 0; j < b[k].size(); ++j) a[k][j] += sign * b[k][j];
    }
}

Bi bi_mul(const Bi& a, const Bi& b) {
    int K = static_cast<int>(a.size()) - 1;
    Bi c = bi_zero(K);
    for (int x = 0; x <= K; ++x)
        for (int y = 0; x + y <= K; ++y) {
            if (a[x].empty() || b[y].empty()) continue;
            auto& t = c[x + y];
            if (t.size() < a[x].size() + b[y].size() - 1) t.resize(a[x].size() + b[y].size() - 1, 0);
            for (size_t i = 0; i < a[x].size(); ++i)
                for (size_t j = 0; j < b[y].size(); ++j) t[i + j] += a[x][i] * b[y][j];
        }
    return c;
}

Bi bi_shift(const Bi& a, int s) {
    int K = static_cast<int>(a.size()) - 1;
    Bi c = bi_zero(K);
    for (int k = 0; k + s <= K; ++k) c[k + s] = a[k];
    return c;
}

Bi bi_pow(const Bi& a, int e) {
    Bi r = bi_zero(static_cast<int>(a.size()) - 1);
    r[0] = {1};
    for (int i = 0; i < e; ++i) r = bi_mul(r, a);
    return r;
}

Bi bi_one_minus_u(const Bi& a) {
    Bi c = a;
    for (size_t k = 0; k < a.size(); ++k) {
        c[k].resize(a[k].size() + (a[k].empty() ? 0 : 1), 0);
        for (size_t j = 0; j < a[k].size(); ++j) c[k][j + 1] -= a[k][j];
    }
    return c;
}

}  // namespace

std::vector<std::vector<BigInt>> luka_equation_series(const LukaPattern& w, int k_max) {
    if (!w.valid()) throw DomainError("not a Lukasiewicz pattern");
    int m = static_cast<int>(w.steps.size()), h = w.final_height();
    Bi L = bi_zero(k_max);
    Bi one = bi_zero(k_max);
    one[0] = {1};
    std::vector<std::pair<int, int>> overlaps;  // (shift, height)
    for (int i = 1; i < m; ++i)
        if (std::equal(w.steps.begin() + i, w.steps.end(), w.steps.begin())) overlaps.push_back({i, w.height(i)});
    for (int it = 0; it <= k_max; ++it) {
        Bi onePL = one;
        bi_add_to(onePL, L);
        Bi zsq = bi_shift(bi_mul(onePL, onePL), 1);
        Bi corr = bi_shift(bi_mul(L, bi_pow(onePL, h)), m);
        Bi diff = L;
        bi_add_to(diff, zsq, -1);
        Bi ahat = bi_zero(k_max);
        for (auto [i, hi] : overlaps) bi_add_to(ahat, bi_shift(bi_pow(onePL, hi), i));
        bi_add_to(corr, bi_mul(diff, ahat));
        Bi next = zsq;
        bi_add_to(next, bi_one_minus_u(corr), -1);
        L = next;
    }
    for (auto& row : L)
        while (!row.empty() && row.back() == 0) row.pop_back();
    return L;
}

LukaReport luka_coefficient_checks(const LukaPattern& w, int k_max) {
    if (!w.valid()) throw DomainError("not a Lukasiewicz pattern");
    LukaReport rep;
    int m = static_cast<int>(w.steps.size()), h = w.final_height();
    auto eq = luka_equation_series(w, k_max);
    for (int k = 1; k <= k_max; ++k) {
        auto paths = enumerate_luka_paths(k);
        if (BigInt(static_cast<long>(paths.size())) != binomial(2 * k, k) / (k + 1)) {
            rep.catalan = false;
            rep.failures.push_back("path count at length " + std::to_string(k));
        }
        std::vector<BigInt> dist;
        BigInt total = 0;
        for (auto& p : paths) {
            long c = luka_pattern_count(p, w, true);
            if (static_cast<long>(dist.size()) <= c) dist.resize(c + 1, 0);
            dist[c] += 1;
            total += c;
            if (p.heights().back() == 1) {
                auto t = path_to_tree(p);
                if (tree_to_path(t).steps != p.steps || t.size() != k) {
                    rep.bijection = false;
                    rep.failures.push_back("bijection at length " + std::to_string(k));
                }
            }
        }
        BigInt expect = k - m - 1 >= 0 ? binomial(2 * k - 2 * m + h, k - m - 1) : BigInt(0);
        if (total != expect) {
            rep.occurrences = false;
            rep.failures.push_back("occurrence total at length " + std::to_string(k));
        }
        if (dist != eq[k]) {
            rep.distribution = false;
            rep.failures.push_back("distribution at length " + std::to_string(k));
        }
    }
    return rep;
}

}  // namespace permclass
