#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tileprove/rational.hpp"

namespace tileprove {

/**
 * Element rat + coef*sqrt(d) of a real quadratic field, d squarefree >= 0.
 *
 * Canonical form: d in {0,1} collapses to a plain rational (coef = 0, d = 0),
 * and coef = 0 forces d = 0, so every rational value has one representation.
 * Sign tests and comparisons are exact (conjugate/norm reasoning, no floating
 * point).  Mixing two distinct d > 1 in one operation throws.
 */
class QuadExt {
 public:
  QuadExt() : rat_(0), coef_(0), d_(0) {}
  QuadExt(int v) : rat_(v), coef_(0), d_(0) {}                    // NOLINT
  QuadExt(long v) : rat_(v), coef_(0), d_(0) {}                   // NOLINT
  QuadExt(const BigInt& v) : rat_(v), coef_(0), d_(0) {}          // NOLINT
  QuadExt(const Rational& v) : rat_(v), coef_(0), d_(0) {}        // NOLINT
  QuadExt(Rational rat, Rational coef, BigInt d);

  const Rational& rat() const { return rat_; }
  const Rational& coef() const { return coef_; }
  const BigInt& d() const { return d_; }

  bool is_zero() const { return rat_.is_zero() && coef_.is_zero(); }
  bool is_rational() const { return coef_.is_zero(); }
  bool is_integer() const { return coef_.is_zero() && tileprove::is_integer(rat_); }

  /// -1, 0, or +1, exactly.
  int sign() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
  friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.rat_ == b.rat_ && a.coef_ == b.coef_ && a.d_ == b.d_;
  }
  friend std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b);

  /// Field conjugate rat - coef*sqrt(d).
  QuadExt conjugate() const { return QuadExt(rat_, -coef_, d_); }

  double to_double() const;

  /// "p/q" for rationals, "p/q+r/s*sqrt(d)" (or "-...") otherwise.
  std::string encode() const;
  static QuadExt parse(std::string_view text);

 private:
  struct unchecked_t {};
  QuadExt(unchecked_t, Rational rat, Rational coef, BigInt d);
  void canonicalize();
  static BigInt common_field(const QuadExt& a, const QuadExt& b);

  Rational rat_;
  Rational coef_;
  BigInt d_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

/// sqrt(x) for rational x >= 0, as an exact QuadExt (reduces the radicand to
/// its squarefree part).
QuadExt quad_sqrt(const Rational& x);

struct QuadRoots {
  bool degenerate = false;      // identically-zero equation: caller must decide
  std::vector<QuadExt> roots;   // ascending, 0-2 entries
};

/// All real roots of A s^2 + B s + C = 0, exactly.  A = B = 0, C = 0 reports
/// degenerate; A = B = 0, C != 0 reports no roots.
QuadRoots solve_quadratic_exact(const Rational& A, const Rational& B,
                                const Rational& C);

}  // namespace tileprove
