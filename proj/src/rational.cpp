#include "tileprove/rational.hpp"

namespace tileprove {

std::string encode(const Rational& x) {
  std::string s = num(x).str();
  if (den(x) != 1) {
    s += "/";
    s += den(x).str();
  }
  return s;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto slash = text.find('/');
  auto check_int = [](std::string_view t) {
    if (t.empty()) throw std::invalid_argument("empty integer in rational");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bare sign in rational");
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        throw std::invalid_argument("bad digit in rational");
  };
  if (slash == std::string_view::npos) {
    check_int(text);
    return Rational(BigInt(std::string(text)));
  }
  std::string_view p = text.substr(0, slash);
  std::string_view q = text.substr(slash + 1);
  check_int(p);
  check_int(q);
  BigInt qi{std::string(q)};
  if (qi == 0) throw std::invalid_argument("zero denominator");
  return Rational(BigInt(std::string(p)), qi);
}

BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

std::optional<BigInt> exact_isqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::optional<Rational> sqrt_rational_exact(const Rational& x) {
  if (x < 0) throw std::domain_error("sqrt of negative rational");
  auto p = exact_isqrt(num(x));
  if (!p) return std::nullopt;
  auto q = exact_isqrt(den(x));
  if (!q) return std::nullopt;
  return Rational(*p, *q);
}

SquarefreeSplit squarefree_split(const BigInt& n) {
  if (n < 1) throw std::domain_error("squarefree_split needs n >= 1");
  BigInt k = 1, d = 1, m = n;
  BigInt p = 2;
  while (p * p <= m) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      for (int i = 0; i < e / 2; ++i) k *= p;
      if (e % 2) d *= p;
    }
    p += (p == 2) ? 1 : 2;
  }
  if (m > 1) d *= m;
  return {k, d};
}

BigInt squarefree_part(const BigInt& n) { return squarefree_split(n).squarefree; }

}  // namespace tileprove
