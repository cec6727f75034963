#include "permclass/skinny.hpp"

#include <algorithm>
#include <map>

namespace permclass {

namespace {

const std::vector<std::string> XY{"x", "y"};

MultiPoly P(const std::string& s) { return MultiPoly::parse(s, XY); }

// Numerator over a product of tracked factors. Factors are kept primitive; numerators are
// divided by them whenever the division is exact, which stands in for a gcd.
struct Factored {
    MultiPoly num{XY};
    std::vector<std::pair<MultiPoly, int>> den;

    void add_factor(MultiPoly f, int mult) {
        if (mult == 0) return;
        if (f.is_constant()) {
            Rational c = f.constant_term();
            for (int i = 0; i < mult; ++i) num = num * (Rational(1) / c);
            return;
        }
        Rational s = f.make_primitive();
        for (int i = 0; i < mult; ++i) num = num * s;
        for (auto& [g, m] : den)
            if (g == f) {
                m += mult;
                return;
            }
        den.emplace_back(std::move(f), mult);
    }

    void cancel() {
        for (auto& [f, m] : den)
            while (m > 0) {
                auto q = num.divide_exact(f);
                if (!q) break;
                num = std::move(*q);
                --m;
            }
        std::erase_if(den, [](const auto& e) { return e.second == 0; });
    }

    int mult_of(const MultiPoly& f) const {
        for (auto& [g, m] : den)
            if (g == f) return m;
        return 0;
    }
};

Factored operator+(const Factored& a, const Factored& b) {
    Factored r;
    std::vector<std::pair<MultiPoly, int>> all = a.den;
    for (auto& [f, m] : b.den) {
        bool found = false;
        for (auto& [g, k] : all)
            if (g == f) {
                k = std::max(k, m);
                found = true;
            }
        if (!found) all.emplace_back(f, m);
    }
    MultiPoly na = a.num, nb = b.num;
    for (auto& [f, m] : all) {
        na = na * f.pow(m - a.mult_of(f));
        nb = nb * f.pow(m - b.mult_of(f));
    }
    r.num = na + nb;
    r.den = all;
    r.cancel();
    return r;
}

Factored negate(Factored a) {
    a.num = -a.num;
    return a;
}

// Rational substitute for one variable: p / q.
struct Sub {
    MultiPoly p, q;
};

// f(sx, sy) as (numerator, power of each denominator polynomial).
std::pair<MultiPoly, std::map<int, int>> substitute_poly(const MultiPoly& f, const Sub& sx, const Sub& sy,
                                                         const std::vector<MultiPoly>& qs) {
    int dx = std::max(0, f.degree_in(0)), dy = std::max(0, f.degree_in(1));
    MultiPoly out(XY);
    std::vector<MultiPoly> px{MultiPoly::constant(XY, 1)}, qx{MultiPoly::constant(XY, 1)};
    std::vector<MultiPoly> py{MultiPoly::constant(XY, 1)}, qy{MultiPoly::constant(XY, 1)};
    for (int i = 1; i <= dx; ++i) {
        px.push_back(px.back() * sx.p);
        qx.push_back(qx.back() * sx.q);
    }
    for (int i = 1; i <= dy; ++i) {
        py.push_back(py.back() * sy.p);
        qy.push_back(qy.back() * sy.q);
    }
    for (auto& [e, c] : f.terms()) out += px[e[0]] * qx[dx - e[0]] * py[e[1]] * qy[dy - e[1]] * c;
    std::map<int, int> pw;
    for (size_t i = 0; i < qs.size(); ++i) {
        if (sx.q == qs[i]) pw[static_cast<int>(i)] += dx;
        if (sy.q == qs[i]) pw[static_cast<int>(i)] += dy;
    }
    return {out, pw};
}

Factored substitute(const Factored& h, const Sub& sx, const Sub& sy) {
    std::vector<MultiPoly> qs;
    for (auto* s : {&sx, &sy})
        if (!s->q.is_constant() && std::find(qs.begin(), qs.end(), s->q) == qs.end()) qs.push_back(s->q);
    std::vector<int> net(qs.size(), 0);  // positive: q power in the numerator
    Factored r;
    auto [n, npw] = substitute_poly(h.num, sx, sy, qs);
    r.num = n;
    for (auto& [i, k] : npw) net[i] -= k;
    for (auto& [f, m] : h.den) {
        auto [g, gpw] = substitute_poly(f, sx, sy, qs);
        r.add_factor(g, m);
        for (auto& [i, k] : gpw) net[i] += k * m;
    }
    for (size_t i = 0; i < qs.size(); ++i) {
        if (net[i] > 0) r.num = r.num * qs[i].pow(net[i]);
        else r.add_factor(qs[i], -net[i]);
    }
    r.cancel();
    return r;
}

Factored base_h() {
    Factored h;
    h.num = P("x*y");
    h.add_factor(P("1 - x"), 1);
    return h;
}

Factored extend(const Factored& h, bool same_direction) {
    MultiPoly x = P("x"), y = P("y"), one = P("1"), omx = P("1 - x");
    Sub X{x, one}, Y{y, one}, S{x, omx};  // S is x/(1-x)
    Factored bracket;
    if (same_direction) {
        bracket = substitute(h, X, Y) + negate(substitute(h, Y, Y)) + negate(substitute(h, X, S)) + substitute(h, S, S);
    } else {
        bracket = substitute(h, S, X) + negate(substitute(h, Y, X));
    }
    // The bracket vanishes on the kernel xy + x - y = 0, so the kernel divides its numerator.
    MultiPoly kernel = P("x*y + x - y");
    bracket.num = bracket.num * P("x*y");
    if (auto q = bracket.num.divide_exact(kernel)) bracket.num = *q;
    else bracket.add_factor(kernel, 1);
    bracket.cancel();
    return bracket;
}

Factored build_h(const std::vector<int>& V) {
    if (V.empty()) throw DomainError("empty skinny vector");
    for (int v : V)
        if (v != 1 && v != -1) throw DomainError("skinny vector entries must be +1 or -1");
    Factored h = base_h();
    for (size_t j = 1; j < V.size(); ++j) h = extend(h, V[j] == V[j - 1]);
    return h;
}

std::pair<Polynomial, Polynomial> diagonal(const Factored& h) {
    // x = y = z.
    auto uni = [](const MultiPoly& f) {
        std::vector<Rational> c(std::max(0, f.total_degree() + 1));
        for (auto& [e, v] : f.terms()) c[e[0] + e[1]] += v;
        return Polynomial(std::move(c));
    };
    Polynomial num = uni(h.num), den = Polynomial{1};
    for (auto& [f, m] : h.den) den *= uni(f).pow(m);
    return {num, den};
}

}  // namespace

RationalFunction skinny_h(const std::vector<int>& V) {
    Factored h = build_h(V);
    MultiPoly den = MultiPoly::constant(XY, 1);
    for (auto& [f, m] : h.den) den = den * f.pow(m);
    return RationalFunction(h.num, den);
}

RationalFunction skinny_gf(const std::vector<int>& V) {
    if (V.empty()) throw DomainError("empty skinny vector");
    Polynomial num, den{1};
    Factored h = base_h();
    for (size_t j = 0; j < V.size(); ++j) {
        if (V[j] != 1 && V[j] != -1) throw DomainError("skinny vector entries must be +1 or -1");
        if (j > 0) h = extend(h, V[j] == V[j - 1]);
        auto [a, b] = diagonal(h);
        num = num * b + a * den;
        den = den * b;
        Polynomial g = gcd(num, den);
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    // Divide by z.
    auto [q, r] = num.divmod(Polynomial{0, 1});
    if (!r.is_zero()) throw DomainError("skinny_gf: numerator not divisible by z");
    return RationalFunction::univariate(q, den).reduced();
}

RationalFunction skinny_ones_conjecture(int k) {
    RationalFunction sum = RationalFunction::univariate(Polynomial{-1}, Polynomial{1});
    for (int r = 1; r <= k; ++r) {
        Polynomial rz = Polynomial::monomial(r, 1);
        Polynomial num = rz.pow(k - r);
        Polynomial den = Polynomial{1, -r} * (rz - Polynomial{1}).pow(k - r);
        sum = sum + RationalFunction::univariate(num, den);
    }
    return sum.reduced();
}

}  // namespace permclass
