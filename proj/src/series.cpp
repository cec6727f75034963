#include "permclass/series.hpp"

#include <sstream>

namespace permclass {

TruncatedSeries::TruncatedSeries(int order) : order_(order), c_(order + 1) {}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {
    c_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, int order) {
    TruncatedSeries s(order);
    for (int i = 0; i <= std::min(order, p.degree()); ++i) s.c_[i] = p.coeff(i);
    return s;
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const { return *this + (-o); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= r.order_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const {
    TruncatedSeries r(*this);
    for (auto& v : r.c_) v *= s;
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0] == 0) throw DomainError("series inverse needs a nonzero constant term");
    TruncatedSeries r(order_);
    Rational inv0 = Rational(1) / c_[0];
    r.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
        r.c_[n] = -acc * inv0;
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& o) const { return *this * o.inverse(); }

TruncatedSeries TruncatedSeries::truncate(int order) const {
    if (order > order_) throw DomainError("cannot raise series order");
    return TruncatedSeries(order, std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::shift_up(int k) const {
    TruncatedSeries r(order_);
    for (int i = 0; i + k <= order_; ++i) r.c_[i + k] = c_[i];
    return r;
}

std::vector<BigInt> TruncatedSeries::integer_coeffs(int from) const {
    std::vector<BigInt> out;
    for (int i = from; i <= order_; ++i) {
        if (c_[i].get_den() != 1) throw DomainError("non-integer coefficient at z^" + std::to_string(i));
        out.push_back(c_[i].get_num());
    }
    return out;
}

bool TruncatedSeries::is_zero() const {
    for (auto& v : c_)
        if (v != 0) return false;
    return true;
}

std::string TruncatedSeries::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= order_; ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i == 1) os << "*" << var;
        if (i > 1) os << "*" << var << "^" << i;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << order_ + 1 << ")";
    return os.str();
}

TruncatedSeries series_sqrt(const TruncatedSeries& s) {
    if (s[0] == 0) throw DomainError("series_sqrt: zero constant term");
    Rational r0 = rational_sqrt(s[0]);
    int n = s.order();
    TruncatedSeries r(n);
    r[0] = r0;
    Rational inv = Rational(1) / (2 * r0);
    for (int k = 1; k <= n; ++k) {
        Rational acc = s[k];
        for (int i = 1; i < k; ++i) acc -= r[i] * r[k - i];
        r[k] = acc * inv;
    }
    return r;
}

}  // namespace permclass
