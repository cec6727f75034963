#include "permclass/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace permclass {

Polynomial::Polynomial(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> c) {
    for (long v : c) c_.emplace_back(v);
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int deg) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> r(c_);
    for (auto& v : r) v = -v;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> r(c_);
    for (auto& v : r) v *= s;
    return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem(c_);
    int dd = d.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<Rational> q(degree() - dd + 1);
    for (int i = degree(); i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] / d.leading();
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::pow(int e) const {
    Polynomial r = constant(1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Rational Polynomial::eval(const Rational& x) const {
    Rational r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
    return r;
}

double Polynomial::eval(double x) const {
    double r = 0;
    for (int i = degree(); i >= 0; --i) r = r * x + c_[i].get_d();
    return r;
}

Polynomial Polynomial::shift(const Rational& a) const {
    // Horner with a linear factor: repeated synthetic expansion.
    std::vector<Rational> r(c_);
    int n = degree();
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) r[j] += a * r[j + 1];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scale(const Rational& b) const {
    std::vector<Rational> r(c_);
    Rational p = 1;
    for (auto& v : r) {
        v *= p;
        p *= b;
    }
    return Polynomial(std::move(r));
}

Polynomial Polynomial::reversed() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
}

Polynomial Polynomial::primitive() const {
    if (is_zero()) return {};
    BigInt l = 1;
    for (auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    BigInt g = 0;
    for (auto& v : c_) {
        BigInt n = v.get_num() * (l / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational s(l, g);
    s.canonicalize();
    if (leading() < 0) s = -s;
    return *this * s;
}

Polynomial Polynomial::compose(const Polynomial& q) const {
    Polynomial r;
    for (int i = degree(); i >= 0; --i) r = r * q + constant(c_[i]);
    return r;
}

int Polynomial::sign_variations() const {
    int v = 0, last = 0;
    for (auto& c : c_) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i == 1) os << "*" << var;
        if (i > 1) os << "*" << var << "^" << i;
    }
    return os.str();
}

Polynomial Polynomial::parse(const std::string& s, const std::string& var) {
    // Accepts sums of terms "c", "c*z", "c*z^k", "z^k", "-z"; whitespace ignored.
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw DomainError("empty polynomial");
    std::vector<std::string> terms;
    std::string cur;
    for (size_t i = 0; i < t.size(); ++i) {
        char ch = t[i];
        bool sep = (ch == '+' || ch == '-') && i > 0 && t[i - 1] != '^' && t[i - 1] != '*' && t[i - 1] != '/';
        if (sep) {
            terms.push_back(cur);
            cur.clear();
            if (ch == '-') cur += '-';
        } else {
            cur += ch;
        }
    }
    terms.push_back(cur);
    Polynomial r;
    for (auto term : terms) {
        if (term.empty() || term == "+") continue;
        if (term[0] == '+') term = term.substr(1);
        Rational c = 1;
        int deg = 0;
        auto pos = term.find(var);
        std::string cpart = pos == std::string::npos ? term : term.substr(0, pos);
        if (pos != std::string::npos) {
            std::string rest = term.substr(pos + var.size());
            deg = 1;
            if (!rest.empty()) {
                if (rest[0] != '^') throw DomainError("bad term: " + term);
                deg = std::stoi(rest.substr(1));
            }
            if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
        }
        if (cpart.empty() || cpart == "-") c = cpart.empty() ? 1 : -1;
        else c = parse_rational(cpart);
        r += monomial(c, deg);
    }
    return r;
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? Polynomial() : r.primitive();
    }
    return a.is_zero() ? a : a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 0) return p;
    Polynomial g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

}  // namespace permclass
