#include "permclass/ratfun.hpp"

namespace permclass {

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::from_poly(const MultiPoly& p) {
    return RationalFunction(p, MultiPoly::constant(p.vars(), 1));
}

RationalFunction RationalFunction::univariate(const Polynomial& num, const Polynomial& den, const std::string& var) {
    return RationalFunction(MultiPoly::from_univariate({var}, 0, num), MultiPoly::from_univariate({var}, 0, den));
}

void RationalFunction::normalize() {
    if (num_.vars().empty()) num_ = num_.with_vars(den_.vars());
    Rational s = den_.make_primitive();
    num_ = num_ * s;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }
RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.num_.is_zero()) throw DomainError("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::reduced() const {
    if (den_.nvars() != 1) throw DomainError("reduction only for univariate rational functions");
    Polynomial n = num_.to_univariate(0), d = den_.to_univariate(0);
    if (n.is_zero()) return RationalFunction(num_, MultiPoly::constant(den_.vars(), 1));
    Polynomial g = gcd(n, d);
    n = n.divmod(g).first;
    d = d.divmod(g).first;
    return RationalFunction(MultiPoly::from_univariate(den_.vars(), 0, n), MultiPoly::from_univariate(den_.vars(), 0, d));
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw DomainError("pole at evaluation point");
    return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

bool ratfun_equal(const RationalFunction& a, const RationalFunction& b) {
    if (a.vars() != b.vars()) throw DomainError("ratfun_equal: variable sets differ");
    return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

TruncatedSeries ratio_series(const Polynomial& num, const Polynomial& den, int N) {
    if (den.coeff(0) == 0) throw DomainError("pole at 0");
    return TruncatedSeries::from_polynomial(num, N) / TruncatedSeries::from_polynomial(den, N);
}

TruncatedSeries ratfun_series(const RationalFunction& f, int N) {
    if (f.den().nvars() != 1) throw DomainError("ratfun_series needs a univariate function");
    return ratio_series(f.num().to_univariate(0), f.den().to_univariate(0), N);
}

}  // namespace permclass
