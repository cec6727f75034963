#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace permclass {

using BigInt = mpz_class;
using Rational = mpq_class;

// Raised for inputs outside an operation's domain; the CLI maps it to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BigInt binomial(long n, long k);
BigInt factorial(long n);
// Zero when any part is negative or the parts do not sum to n.
BigInt multinomial(const std::vector<long>& parts);

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);
// Truncated (not rounded) decimal expansion with the given number of fractional digits.
std::string to_decimal(const Rational& q, int digits);
double to_double(const Rational& q);
Rational from_double(double x);

bool is_square(const Rational& q);
Rational rational_sqrt(const Rational& q);

}  // namespace permclass
