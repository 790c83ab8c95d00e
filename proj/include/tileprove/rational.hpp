#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tileprove {

// Arbitrary-precision integers and canonical rationals.  cpp_rational keeps
// gcd(|num|, den) = 1 and den >= 1 after every operation, which is the whole
// contract we need from the scalar layer.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline int sign(const BigInt& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

inline bool is_integer(const Rational& x) { return den(x) == 1; }

/// "p/q", or just "p" when q = 1.
std::string encode(const Rational& x);

/// Inverse of encode; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Floor of sqrt(n); n must be nonnegative.
BigInt isqrt_floor(const BigInt& n);

/// sqrt(n) when n is a perfect square, nullopt otherwise.
std::optional<BigInt> exact_isqrt(const BigInt& n);

/// Exact nonnegative square root of x when numerator and denominator are
/// both perfect squares; nullopt otherwise.  Throws std::domain_error for
/// negative input.
std::optional<Rational> sqrt_rational_exact(const Rational& x);

struct SquarefreeSplit {
  BigInt root;        // k
  BigInt squarefree;  // d, with n = k^2 * d
};

/// Trial-division decomposition n = k^2 * d with d squarefree; n >= 1.
SquarefreeSplit squarefree_split(const BigInt& n);

/// Product of the primes dividing n to an odd power; n >= 1.
BigInt squarefree_part(const BigInt& n);

}  // namespace tileprove
