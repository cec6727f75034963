#include "permclass/multipoly.hpp"

#include <cctype>
#include <sstream>

namespace permclass {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, int index) {
    MultiPoly p(std::move(vars));
    Exponents e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, const Exponents& e, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::from_univariate(std::vector<std::string> vars, int index, const Polynomial& q) {
    MultiPoly p(std::move(vars));
    for (int i = 0; i <= q.degree(); ++i) {
        Exponents e(p.nvars(), 0);
        e[index] = i;
        p.add_term(e, q.coeff(i));
    }
    return p;
}

int MultiPoly::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[i] == name) return i;
    throw DomainError("unknown variable " + name);
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int e : terms_.begin()->first)
        if (e) return false;
    return true;
}

Rational MultiPoly::constant_term() const { return coeff(Exponents(nvars(), 0)); }

Rational MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r(*this);
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(vars_.empty() ? o.vars_ : vars_);
    Exponents e(r.nvars());
    for (auto& [ea, ca] : terms_)
        for (auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < r.nvars(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    if (s == 0) return MultiPoly(vars_);
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

MultiPoly MultiPoly::pow(int n) const {
    MultiPoly r = constant(vars_, 1), b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (auto& [e, c] : terms_) {
        int s = 0;
        for (int v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(vars_);
    for (auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f = e;
        --f[var];
        r.add_term(f, c * e[var]);
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
    std::vector<MultiPoly> out(std::max(0, degree_in(var) + 1), MultiPoly(vars_));
    for (auto& [e, c] : terms_) {
        Exponents f = e;
        f[var] = 0;
        out[e[var]].add_term(f, c);
    }
    return out;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& q) const {
    auto parts = coefficients_in(var);
    MultiPoly r(vars_);
    for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i) r = r * q + parts[i];
    return r;
}

MultiPoly MultiPoly::evaluate_var(int var, const Rational& value) const {
    MultiPoly r(vars_);
    for (auto& [e, c] : terms_) {
        Exponents f = e;
        f[var] = 0;
        Rational p = 1;
        for (int k = 0; k < e[var]; ++k) p *= value;
        r.add_term(f, c * p);
    }
    return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    Rational r = 0;
    for (auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        r += t;
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
    if (d.is_zero()) throw DomainError("division by zero polynomial");
    MultiPoly rem(*this), q(vars_.empty() ? d.vars_ : vars_);
    const auto& [ld, lc] = d.leading_term();
    Exponents f(ld.size());
    while (!rem.is_zero()) {
        const auto& [lr, rc] = rem.leading_term();
        for (size_t i = 0; i < ld.size(); ++i) {
            f[i] = lr[i] - ld[i];
            if (f[i] < 0) return std::nullopt;
        }
        Rational c = rc / lc;
        MultiPoly t = monomial(q.vars_, f, c);
        q += t;
        rem -= t * d;
    }
    return q;
}

Rational MultiPoly::make_primitive() {
    if (terms_.empty()) return 1;
    BigInt l = 1;
    for (auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    BigInt g = 0;
    for (auto& [e, c] : terms_) {
        BigInt n = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational s(l, g);
    s.canonicalize();
    if (leading_term().second < 0) s = -s;
    for (auto& [e, c] : terms_) c *= s;
    return s;
}

Polynomial MultiPoly::to_univariate(int var) const {
    std::vector<Rational> c(std::max(0, degree_in(var) + 1));
    for (auto& [e, v] : terms_) {
        for (int i = 0; i < nvars(); ++i)
            if (i != var && e[i] != 0) throw DomainError("polynomial is not univariate");
        c[e[var]] += v;
    }
    return Polynomial(std::move(c));
}

MultiPoly MultiPoly::with_vars(std::vector<std::string> vars) const {
    MultiPoly r(vars);
    std::vector<int> map(nvars());
    for (int i = 0; i < nvars(); ++i) map[i] = r.var_index(vars_[i]);
    for (auto& [e, c] : terms_) {
        Exponents f(r.nvars(), 0);
        for (int i = 0; i < nvars(); ++i) f[map[i]] += e[i];
        r.add_term(f, c);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.get_str();
        for (int i = 0; i < nvars(); ++i) {
            if (it->first[i] == 0) continue;
            os << "*" << vars_[i];
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

MultiPoly MultiPoly::parse(const std::string& s, std::vector<std::string> vars) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    MultiPoly r(vars);
    std::vector<std::string> terms;
    std::string cur;
    for (size_t i = 0; i < t.size(); ++i) {
        char ch = t[i];
        if ((ch == '+' || ch == '-') && i > 0 && t[i - 1] != '^' && t[i - 1] != '*' && t[i - 1] != '/') {
            terms.push_back(cur);
            cur = ch == '-' ? "-" : "";
        } else {
            cur += ch;
        }
    }
    terms.push_back(cur);
    for (auto term : terms) {
        if (term.empty()) continue;
        Rational c = 1;
        if (term[0] == '-') {
            c = -1;
            term = term.substr(1);
        } else if (term[0] == '+') {
            term = term.substr(1);
        }
        Exponents e(vars.size(), 0);
        std::stringstream ss(term);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            if (factor.empty()) continue;
            if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
                c *= parse_rational(factor);
                continue;
            }
            auto caret = factor.find('^');
            std::string name = factor.substr(0, caret);
            int pw = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
            e[r.var_index(name)] += pw;
        }
        r.add_term(e, c);
    }
    return r;
}

TruncatedSeries evaluate_on_series(const MultiPoly& P, const TruncatedSeries& y) {
    if (P.nvars() != 2) throw DomainError("expected a polynomial in (z, y)");
    int N = y.order();
    auto parts = P.coefficients_in(1);
    TruncatedSeries r(N);
    for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i)
        r = r * y + TruncatedSeries::from_polynomial(parts[i].to_univariate(0), N);
    return r;
}

TruncatedSeries series_algebraic_root(const MultiPoly& P, const Rational& y0, int N) {
    if (P.nvars() != 2) throw DomainError("expected a polynomial in (z, y)");
    MultiPoly Py = P.derivative(1);
    if (P.evaluate({0, y0}) != 0) throw DomainError("P(0, y0) is not zero");
    if (Py.evaluate({0, y0}) == 0) throw DomainError("singular branch: dP/dy vanishes at (0, y0)");
    TruncatedSeries y = TruncatedSeries::constant(y0, N);
    // Each Newton step doubles the number of correct coefficients.
    for (int prec = 1; prec <= N; prec *= 2) {
        TruncatedSeries f = evaluate_on_series(P, y);
        TruncatedSeries d = evaluate_on_series(Py, y);
        y = y - f / d;
    }
    if (!evaluate_on_series(P, y).is_zero()) throw DomainError("Newton iteration did not converge");
    return y;
}

}  // namespace permclass
