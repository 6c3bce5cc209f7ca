#ifndef XICHAR_RATIONAL_HPP
#define XICHAR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace xichar {

// Exact rational. GMP keeps it canonical: gcd(|p|, q) = 1, q >= 1, 0 = 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", with "/q" omitted when q = 1.
std::string to_string(const Rational& r);

// Inverse of to_string. Accepts "p", "p/q", "-p/q". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

Integer factorial(unsigned n);
Integer binomial(long n, long k);

// Integer power of a rational; negative exponents invert.
Rational rational_pow(const Rational& base, long exponent);

inline bool is_one(const Rational& r) { return r == 1; }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational unit_like(const Rational&) { return Rational(1); }

}  // namespace xichar

#endif
