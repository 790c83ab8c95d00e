#include "tileprove/intpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tileprove {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly IntPoly::constant(BigInt c) { return IntPoly({std::move(c)}); }

IntPoly IntPoly::monomial(BigInt c, int degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = std::move(c);
  return IntPoly(std::move(v));
}

const BigInt& IntPoly::coeff(int i) const {
  static const BigInt zero(0);
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[i];
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

BigInt IntPoly::eval_scaled(const BigInt& a, const BigInt& q) const {
  // sum a_i * p^i * q^(n-i) via Horner in p with a trailing power of q
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * a + *it * boost::multiprecision::pow(
                              q, static_cast<unsigned>(it - coeffs_.rbegin()));
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
  std::vector<BigInt> v = coeffs_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  n = boost::multiprecision::abs(n);
  std::vector<std::pair<BigInt, int>> factors;
  BigInt p = 2;
  while (p * p <= n) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [prime, e] : factors) {
    size_t base = divs.size();
    BigInt pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= prime;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");

  // strip x^k: x = 0 is a root iff k > 0
  std::vector<BigInt> c = p.coeffs();
  std::vector<Rational> roots;
  size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + shift);
  }
  if (c.size() <= 1) {  // constant remainder: no further roots
    return roots;
  }

  // strip integer content
  BigInt content = 0;
  for (const auto& x : c) content = boost::multiprecision::gcd(content, x);
  if (content > 1)
    for (auto& x : c) x /= content;

  IntPoly q{std::vector<BigInt>(c)};
  for (const BigInt& a : positive_divisors(c.front())) {
    for (const BigInt& b : positive_divisors(c.back())) {
      if (boost::multiprecision::gcd(a, b) != 1) continue;
      if (q.eval_scaled(a, b) == 0) roots.emplace_back(a, b);
      if (q.eval_scaled(-a, b) == 0) roots.emplace_back(-a, b);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace tileprove
