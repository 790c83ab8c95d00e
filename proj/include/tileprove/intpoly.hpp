#pragma once

#include <vector>

#include "tileprove/rational.hpp"

namespace tileprove {

/// Integer-coefficient polynomial, ascending degree.  The zero polynomial is
/// the empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly constant(BigInt c);
  static IntPoly monomial(BigInt c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(int i) const;

  BigInt eval(const BigInt& x) const;
  /// q^deg * p(a/q), an integer; zero iff a/q is a root.
  BigInt eval_scaled(const BigInt& a, const BigInt& q) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly scaled(const BigInt& c) const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Every rational root of p, lowest terms, deduplicated, ascending.
/// Complete by the rational root theorem (content stripped first).
/// Throws std::invalid_argument on the zero polynomial.
std::vector<Rational> rational_roots(const IntPoly& p);

}  // namespace tileprove
