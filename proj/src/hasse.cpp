#include "permclass/hasse.hpp"

#include "permclass/multipoly.hpp"

#include <functional>

namespace permclass {

HasseClass parse_hasse_class(const std::string& name) {
    if (name == "schroeder_1324_2314" || name == "schroeder") return HasseClass::Schroeder_1324_2314;
    if (name == "forestlike") return HasseClass::Forestlike;
    if (name == "f_1234_2341") return HasseClass::F_1234_2341;
    if (name == "e_1243_2314") return HasseClass::E_1243_2314;
    throw DomainError("unknown class '" + name + "'");
}

std::string hasse_class_name(HasseClass c) {
    switch (c) {
        case HasseClass::Schroeder_1324_2314: return "schroeder_1324_2314";
        case HasseClass::Forestlike: return "forestlike";
        case HasseClass::F_1234_2341: return "f_1234_2341";
        case HasseClass::E_1243_2314: return "e_1243_2314";
    }
    return "";
}

Basis hasse_class_basis(HasseClass c) {
    switch (c) {
        case HasseClass::Schroeder_1324_2314: return Basis::parse("1324,2314");
        case HasseClass::Forestlike: return Basis::parse("1 3 2 4,2 1 3' 5 4");
        case HasseClass::F_1234_2341: return Basis::parse("1234,2341");
        case HasseClass::E_1243_2314: return Basis::parse("1243,2314");
    }
    throw DomainError("unknown class");
}

static TruncatedSeries poly_series(std::initializer_list<long> c, int N) {
    std::vector<Rational> v;
    for (long x : c) v.push_back(x);
    return TruncatedSeries::from_polynomial(Polynomial(v), N);
}

TruncatedSeries closed_gf(HasseClass c, int N) {
    if (N < 1) throw DomainError("series order must be at least 1");
    // One spare order so the divisions by z below keep N terms.
    int M = N + 1;
    switch (c) {
        case HasseClass::Schroeder_1324_2314: {
            auto s = series_sqrt(poly_series({1, -6, 1}, M));
            return ((poly_series({1, -1}, M) - s) * Rational(1, 2)).truncate(N);
        }
        case HasseClass::Forestlike: {
            auto s = series_sqrt(poly_series({1, -4}, M));
            auto num = poly_series({0, 0, 2, 2}, M) + poly_series({1, -5}, M) * (poly_series({1}, M) - s);
            auto den = poly_series({2, -10, 4, -2}, M);
            return (num / den).truncate(N);
        }
        case HasseClass::F_1234_2341: {
            auto s = series_sqrt(poly_series({1, -4}, M));
            auto num = poly_series({2, -10, 9, 7, -4}, M) - poly_series({2, -8, 9, -3}, M) * s;
            auto den = poly_series({1, -3, 1}, M) * (poly_series({1, -5, 4}, M) + poly_series({1, -3}, M) * s);
            // the quotient starts with a constant 1 for the empty permutation
            auto f = num / den;
            f[0] = 0;
            return f.truncate(N);
        }
        case HasseClass::E_1243_2314: {
            auto P = MultiPoly::parse(
                "z - 3*z^2 + 2*z^3 - y + 5*z*y - 8*z^2*y + 5*z^3*y + 2*z*y^2 - 5*z^2*y^2 + 4*z^3*y^2 + z^3*y^3",
                {"z", "y"});
            return series_algebraic_root(P, 0, N);
        }
    }
    throw DomainError("unknown class");
}

RootInterval growth_constant(HasseClass c, const Rational& precision) {
    switch (c) {
        case HasseClass::Schroeder_1324_2314:
            // reciprocal of the smaller root of 1 - 6z + z^2
            return largest_real_root(Polynomial{1, -6, 1}, precision);
        case HasseClass::Forestlike: {
            // the pole of 1/(1 - 5z + 2z^2 - z^3) lies inside the branch point at 1/4
            auto r = largest_real_root(Polynomial{1, -5, 2, -1}.reversed(), precision);
            if (r.hi < 4) return {4, 4};
            return r;
        }
        case HasseClass::F_1234_2341: return {4, 4};
        case HasseClass::E_1243_2314: return largest_real_root(Polynomial{2, -41, 101, -97, 36, -4}, precision);
    }
    throw DomainError("unknown class");
}

// ---------- catalytic series ----------

void CatalyticSeries::add(int deg, const Monomial& m, const BigInt& c) {
    if (deg < 0 || deg > order() || c == 0) return;
    auto& slot = coeff[deg][m];
    slot += c;
    if (slot == 0) coeff[deg].erase(m);
}

BigInt CatalyticSeries::at_ones(int deg) const {
    BigInt s = 0;
    for (auto& [m, c] : coeff[deg]) s += c;
    return s;
}

void CatalyticSeries::check_cap(int deg, int cap) const {
    for (auto& [m, c] : coeff[deg])
        for (int i = 0; i < nvars; ++i)
            if (m[i] > cap) throw std::logic_error("catalytic degree exceeds its cap");
}

using Mono = CatalyticSeries::Monomial;
using Poly = CatalyticSeries::Poly;

namespace {

enum { U = 0, V = 1, W = 2 };

// (f(..x=1..) - f) / (1 - x) on one variable: x^a becomes 1 + x + ... + x^{a-1}.
Poly divided_difference_at_one(const Poly& f, int x) {
    Poly out;
    for (auto& [m, c] : f)
        for (int e = 0; e < m[x]; ++e) {
            Mono n = m;
            n[x] = e;
            out[n] += c;
        }
    return out;
}

// Set variable x to 1.
Poly at_one(const Poly& f, int x) {
    Poly out;
    for (auto& [m, c] : f) {
        Mono n = m;
        n[x] = 0;
        out[n] += c;
    }
    return out;
}

// Rename variable `from` as `to` (to must be absent).
Poly rename(const Poly& f, int from, int to) {
    Poly out;
    for (auto& [m, c] : f) {
        Mono n = m;
        n[to] += n[from];
        n[from] = 0;
        out[n] += c;
    }
    return out;
}

// target += z^shift * g * prod over vars of 1/(1 - z x), truncated; vars may repeat.
void add_geometric(CatalyticSeries& target, int base_deg, const Poly& g, std::vector<int> vars) {
    int N = target.order();
    std::function<void(size_t, int, Mono)> rec = [&](size_t i, int deg, Mono extra) {
        if (deg > N) return;
        if (i == vars.size()) {
            for (auto& [m, c] : g) {
                Mono n{m[0] + extra[0], m[1] + extra[1], m[2] + extra[2]};
                target.add(deg, n, c);
            }
            return;
        }
        for (int k = 0; deg + k <= N; ++k) {
            Mono e = extra;
            e[vars[i]] += k;
            rec(i + 1, deg + k, e);
        }
    };
    rec(0, base_deg, Mono{0, 0, 0});
}

Poly times_monomial(const Poly& f, Mono m) {
    Poly out;
    for (auto& [k, c] : f) out[{k[0] + m[0], k[1] + m[1], k[2] + m[2]}] += c;
    return out;
}

// All four insertion operators applied to the z^m slice f, added into out.
void apply_1324_1432(CatalyticSeries& out, int m, const Poly& f) {
    if (f.empty()) return;
    // Case I: z w / ((1 - w)(1 - z w)) (f(1,1,1) - f(1,1,w))
    {
        Poly g = divided_difference_at_one(at_one(at_one(f, U), V), W);
        add_geometric(out, m + 1, times_monomial(g, {0, 0, 1}), {W});
    }
    // Case II: z u / ((1 - u)(1 - z u)) (f(1,v,w) - f(u,v,w))
    {
        Poly g = divided_difference_at_one(f, U);
        add_geometric(out, m + 1, times_monomial(g, {1, 0, 0}), {U});
    }
    // Case III: z v / ((1 - z u)(1 - v)(1 - z w)) (f(1,1,w) - f(1,v,w))
    {
        Poly g = divided_difference_at_one(at_one(f, U), V);
        add_geometric(out, m + 1, times_monomial(g, {0, 1, 0}), {U, W});
    }
    // Case IV: z^2 v w / ((1 - z u)(1 - v)(1 - z v)(1 - z w)) (f(1,1,1) - f(1,1,v))
    {
        Poly h = rename(at_one(at_one(f, U), V), W, V);
        Poly g = divided_difference_at_one(h, V);
        add_geometric(out, m + 2, times_monomial(g, {0, 1, 1}), {U, V, W});
    }
}

void seed_1324_1432(CatalyticSeries& out) {
    Poly one{{Mono{0, 0, 0}, BigInt(1)}};
    // paths z/(1 - z w), forked trees z^3 v w / ((1 - z u)(1 - z v)(1 - z w))
    add_geometric(out, 1, one, {W});
    add_geometric(out, 3, times_monomial(one, {0, 1, 1}), {U, V, W});
}

TruncatedSeries skew_closure(const std::vector<BigInt>& connected, int N) {
    std::vector<Rational> c(N + 1);
    for (int n = 1; n <= N; ++n) c[n] = connected[n];
    TruncatedSeries g(N, c);
    TruncatedSeries one = TruncatedSeries::constant(1, N);
    return g / (one - g);
}

}  // namespace

CatalyticSeries connected_1324_1432(int N) {
    if (N < 1) throw DomainError("series order must be at least 1");
    CatalyticSeries g(N);
    seed_1324_1432(g);
    // Every operator raises the z-degree, so slice m is final once all lower slices have been pushed up.
    for (int m = 1; m <= N; ++m) {
        g.check_cap(m, m);
        apply_1324_1432(g, m, g.coeff[m]);
    }
    // One further full application must reproduce the series.
    CatalyticSeries again(N);
    seed_1324_1432(again);
    for (int m = 1; m <= N; ++m) apply_1324_1432(again, m, g.coeff[m]);
    if (again.coeff != g.coeff) throw std::logic_error("functional equation is not at its fixpoint");
    return g;
}

TruncatedSeries series_1324_1432(int N) {
    auto g = connected_1324_1432(N);
    std::vector<BigInt> c(N + 1);
    for (int n = 1; n <= N; ++n) c[n] = g.at_ones(n);
    return skew_closure(c, N);
}

// ---------- plane permutations ----------

namespace {

enum { PU = 0, PQ = 1, PV = 2 };

// (f(u, x) - f(x, x)) / (u - x) for f in (u, v), with the second variable renamed to x.
Poly divided_difference_uv(const Poly& f, int x) {
    Poly out;
    for (auto& [m, c] : f) {
        int r = m[PU], s = m[PV];
        // u^r x^s -> x^s (u^r - x^r) / (u - x)
        for (int a = 0; a < r; ++a) {
            Mono n{0, 0, 0};
            n[PU] = a;
            n[x] = s + (r - 1 - a);
            out[n] += c;
        }
    }
    return out;
}

// (g(.., q, ..) - g(.., v, ..)) / (q - v) for g with no v, where the v-copy is g with q renamed.
Poly divided_difference_qv(const Poly& g) {
    Poly out;
    for (auto& [m, c] : g) {
        int t = m[PQ];
        for (int a = 0; a < t; ++a) {
            Mono n = m;
            n[PQ] = a;
            n[PV] = t - 1 - a;
            out[n] += c;
        }
    }
    return out;
}

void apply_plane(CatalyticSeries& out, int m, const Poly& f) {
    if (f.empty()) return;
    // z u v q / (q - v) [ (f(u,q) - f(q,q))/(u - q) - (f(u,v) - f(v,v))/(u - v) ], as an exact polynomial in q.
    Poly dq = divided_difference_uv(f, PQ);
    Poly d2 = divided_difference_qv(dq);
    int N = out.order();
    for (auto& [mono, c] : d2) {
        int j = mono[PQ] + 1;  // power of q after the factor q
        // q^j = sum_k C(j+k-1, k) (z u)^k
        for (int k = 0; m + 1 + k <= N; ++k) {
            Mono n{mono[PU] + 1 + k, 0, mono[PV] + 1};
            out.add(m + 1 + k, n, c * binomial(j + k - 1, k));
        }
    }
}

void seed_plane(CatalyticSeries& out) {
    // initial branch z u v / (1 - z u)
    for (int k = 0; k + 1 <= out.order(); ++k) out.add(k + 1, Mono{k + 1, 0, 1}, 1);
}

}  // namespace

CatalyticSeries plane_catalytic(int N) {
    if (N < 1) throw DomainError("series order must be at least 1");
    CatalyticSeries p(N, 3);
    seed_plane(p);
    for (int m = 1; m <= N; ++m) {
        p.check_cap(m, m + 1);
        apply_plane(p, m, p.coeff[m]);
    }
    CatalyticSeries again(N, 3);
    seed_plane(again);
    for (int m = 1; m <= N; ++m) apply_plane(again, m, p.coeff[m]);
    if (again.coeff != p.coeff) throw std::logic_error("functional equation is not at its fixpoint");
    return p;
}

TruncatedSeries series_plane(int N) {
    auto p = plane_catalytic(N);
    std::vector<Rational> c(N + 1);
    for (int n = 1; n <= N; ++n) c[n] = p.at_ones(n);
    return TruncatedSeries(N, c);
}

// ---------- conjecture checks ----------

BigInt apery(int n) {
    if (n < 0) throw DomainError("index must be nonnegative");
    BigInt a0 = 1, a1 = 3;
    if (n == 0) return a0;
    for (int k = 2; k <= n; ++k) {
        BigInt num = BigInt(11L * k * k - 11L * k + 3) * a1 + BigInt(long(k - 1) * (k - 1)) * a0;
        BigInt a2 = num / (long(k) * k);
        a0 = a1;
        a1 = a2;
    }
    return a1;
}

BigInt apery_direct(int n) {
    if (n < 0) throw DomainError("index must be nonnegative");
    BigInt s = 0;
    for (int k = 0; k <= n; ++k) {
        BigInt b = binomial(n, k);
        s += b * b * binomial(n + k, k);
    }
    return s;
}

BigInt van_hoeij(int n) {
    if (n < 2) throw DomainError("formula needs n >= 2");
    BigInt N = n;
    BigInt num = 24 * ((5 * N * N * N - 5 * N + 6) * apery(n + 1) - (5 * N * N + 15 * N + 18) * apery(n));
    BigInt den = 5 * (N - 1) * N * N * (N + 2) * (N + 2) * (N + 3) * (N + 3) * (N + 4);
    if (num % den != 0) throw DomainError("formula value is not an integer");
    return num / den;
}

std::vector<BigInt> plane_recurrence(int N) {
    std::vector<BigInt> p(N + 1, 0);
    if (N >= 1) p[1] = 1;
    if (N >= 2) p[2] = 2;
    for (long n = 3; n <= N; ++n) {
        BigInt num = BigInt(11 * n * n + 11 * n - 6) * p[n - 1] + BigInt((n - 2) * (n - 3)) * p[n - 2];
        BigInt den = (n + 3) * (n + 4);
        if (num % den != 0) throw DomainError("recurrence value is not an integer");
        p[n] = num / den;
    }
    return p;
}

static int sign3(int a, int b) { return (a > b) - (a < b); }

// Occurrence of pattern ending at the last entry of seq.
static bool ends_with_occurrence(const std::vector<int>& seq, int len, const std::vector<int>& pat) {
    int k = static_cast<int>(pat.size());
    if (k == 0) return true;
    if (k > len) return false;
    std::vector<int> pos(k);
    pos[k - 1] = len - 1;
    std::function<bool(int, int)> rec = [&](int i, int limit) -> bool {
        if (i < 0) return true;
        for (int p = limit - 1; p >= i; --p) {
            bool ok = true;
            for (int j = i + 1; j < k && ok; ++j)
                ok = sign3(seq[p], seq[pos[j]]) == sign3(pat[i], pat[j]);
            if (!ok) continue;
            pos[i] = p;
            if (rec(i - 1, p)) return true;
        }
        return false;
    };
    return rec(k - 2, len - 1);
}

bool inv_seq_contains(const std::vector<int>& seq, const std::vector<int>& pattern) {
    for (int len = static_cast<int>(pattern.size()); len <= static_cast<int>(seq.size()); ++len)
        if (ends_with_occurrence(seq, len, pattern)) return true;
    return pattern.empty();
}

BigInt count_inv_seq_avoiding(const std::vector<std::vector<int>>& patterns, int n) {
    if (n < 0) throw DomainError("length must be nonnegative");
    for (auto& p : patterns)
        for (int x : p)
            if (x < 0) throw DomainError("pattern entries must be nonnegative");
    for (auto& p : patterns)
        if (p.empty()) return 0;
    std::vector<int> seq(n);
    BigInt total = 0;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            ++total;
            return;
        }
        for (int e = 0; e <= i; ++e) {
            seq[i] = e;
            bool bad = false;
            for (auto& p : patterns)
                if (ends_with_occurrence(seq, i + 1, p)) {
                    bad = true;
                    break;
                }
            if (!bad) rec(i + 1);
        }
    };
    rec(0);
    return total;
}

}  // namespace permclass
