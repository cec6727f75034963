#include "permclass/roots.hpp"

namespace permclass {

int descartes_count(const Polynomial& p, const Rational& a, const Rational& b) {
    // Map (a, b) onto (0, inf) via x = (a + b t) / (1 + t).
    Polynomial q = p.shift(a).scale(b - a);
    return q.reversed().shift(1).sign_variations();
}

Rational root_bound(const Polynomial& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
    return m + 1;
}

static void isolate(const Polynomial& p, const Rational& a, const Rational& b, std::vector<RootInterval>& out) {
    int v = descartes_count(p, a, b);
    if (v == 0) return;
    if (v == 1) {
        out.push_back({a, b});
        return;
    }
    Rational m = (a + b) / 2;
    isolate(p, a, m, out);
    if (p.eval(m) == 0) out.push_back({m, m});
    isolate(p, m, b, out);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw DomainError("zero polynomial has no isolated roots");
    std::vector<RootInterval> out;
    if (p.degree() == 0) return out;
    Polynomial s = squarefree_part(p);
    isolate(s, lo, hi, out);
    return out;
}

std::vector<RootInterval> positive_roots(const Polynomial& p) {
    return isolate_real_roots(p, 0, root_bound(p));
}

RootInterval refine_root(const Polynomial& p, RootInterval r, const Rational& precision) {
    if (r.exact()) return r;
    Polynomial s = squarefree_part(p);
    int slo = sgn(s.eval(r.lo)), shi = sgn(s.eval(r.hi));
    while (r.hi - r.lo > precision) {
        Rational m = r.mid();
        int sm = sgn(s.eval(m));
        if (sm == 0) return {m, m};
        bool left;
        if (slo != 0 && shi != 0) left = sm != slo;
        else left = descartes_count(s, r.lo, m) == 1;
        if (left) {
            r.hi = m;
            shi = sm;
        } else {
            r.lo = m;
            slo = sm;
        }
    }
    return r;
}

RootInterval isolate_positive_real_root(const Polynomial& p, const Rational& precision, RootMode mode,
                                        std::optional<std::pair<Rational, Rational>> window) {
    std::vector<RootInterval> roots;
    if (mode == RootMode::InInterval) {
        if (!window) throw DomainError("InInterval mode needs a window");
        roots = isolate_real_roots(p, window->first, window->second);
        if (roots.size() != 1) throw DomainError("root in window is not unique");
    } else {
        roots = positive_roots(p);
        if (roots.empty()) throw DomainError("no positive real root");
        if (mode == RootMode::UniquePositive && roots.size() != 1) throw DomainError("positive root is not unique");
    }
    return refine_root(p, roots.back(), precision);
}

RootInterval largest_real_root(const Polynomial& p, const Rational& precision) {
    Rational b = root_bound(p);
    auto roots = isolate_real_roots(p, -b, b);
    if (roots.empty()) throw DomainError("no real root");
    return refine_root(p, roots.back(), precision);
}

}  // namespace permclass
