#include "permclass/numeric.hpp"

#include <cmath>

namespace permclass {

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(long n) {
    if (n < 0) return 0;
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt multinomial(const std::vector<long>& parts) {
    BigInt r = 1;
    long total = 0;
    for (long p : parts) {
        if (p < 0) return 0;
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '+') t += c;
    if (t.empty()) throw DomainError("empty rational");
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        bool neg = t[0] == '-';
        std::string ip = t.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
        std::string fp = t.substr(dot + 1);
        BigInt num(ip.empty() ? "0" : ip);
        BigInt den = 1;
        for (char c : fp) {
            if (c < '0' || c > '9') throw DomainError("bad decimal: " + s);
            num = num * 10 + (c - '0');
            den *= 10;
        }
        Rational q(neg ? BigInt(-num) : num, den);
        q.canonicalize();
        return q;
    }
    Rational q;
    if (q.set_str(t, 10) != 0) throw DomainError("bad rational: " + s);
    if (q.get_den() == 0) throw DomainError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
    Rational a = abs(q);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt scaled = a.get_num() * scale / a.get_den();
    std::string s = scaled.get_str();
    if (static_cast<int>(s.size()) <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    std::string out = s.substr(0, s.size() - digits);
    if (digits > 0) out += "." + s.substr(s.size() - digits);
    return (q < 0 ? "-" : "") + out;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational from_double(double x) {
    Rational q(x);
    q.canonicalize();
    return q;
}

bool is_square(const Rational& q) {
    if (q < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

Rational rational_sqrt(const Rational& q) {
    if (!is_square(q)) throw DomainError("not a rational square: " + q.get_str());
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return Rational(n, d);
}

}  // namespace permclass
