#include "tileprove/quadext.hpp"

#include <cmath>
#include <ostream>

namespace tileprove {

namespace {

bool is_squarefree(const BigInt& d) {
  if (d < 0) return false;
  BigInt m = d, p = 2;
  while (p * p <= m) {
    if (m % (p * p) == 0) return false;
    while (m % p == 0) m /= p;
    p += (p == 2) ? 1 : 2;
  }
  return true;
}

}  // namespace

QuadExt::QuadExt(Rational rat, Rational coef, BigInt d)
    : rat_(std::move(rat)), coef_(std::move(coef)), d_(std::move(d)) {
  if (d_ < 0) throw std::invalid_argument("negative radicand");
  if (d_ > 1 && !coef_.is_zero() && !is_squarefree(d_))
    throw std::invalid_argument("radicand must be squarefree");
  canonicalize();
}

QuadExt::QuadExt(unchecked_t, Rational rat, Rational coef, BigInt d)
    : rat_(std::move(rat)), coef_(std::move(coef)), d_(std::move(d)) {
  canonicalize();
}

void QuadExt::canonicalize() {
  if (d_ == 1) {
    rat_ += coef_;
    coef_ = 0;
  } else if (d_ == 0) {
    coef_ = 0;  // sqrt(0) contributes nothing
  }
  if (coef_.is_zero()) d_ = 0;
}

BigInt QuadExt::common_field(const QuadExt& a, const QuadExt& b) {
  if (a.d_ == 0) return b.d_;
  if (b.d_ == 0 || a.d_ == b.d_) return a.d_;
  throw std::invalid_argument("mixed quadratic fields: sqrt(" + a.d_.str() +
                              ") vs sqrt(" + b.d_.str() + ")");
}

int QuadExt::sign() const {
  if (coef_.is_zero()) return rat_.sign();
  if (rat_.is_zero()) return coef_.sign();
  int sr = rat_.sign(), sc = coef_.sign();
  if (sr == sc) return sr;
  // Opposite signs: compare rat^2 against coef^2 * d; the winner's sign
  // decides.  Equality cannot happen for squarefree d > 1.
  Rational lhs = rat_ * rat_;
  Rational rhs = coef_ * coef_ * Rational(d_);
  if (lhs == rhs) return 0;
  return (lhs > rhs) ? sr : sc;
}

QuadExt QuadExt::operator-() const {
  return QuadExt(unchecked_t{}, -rat_, -coef_, d_);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = common_field(*this, o);
  rat_ += o.rat_;
  coef_ += o.coef_;
  canonicalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = common_field(*this, o);
  rat_ -= o.rat_;
  coef_ -= o.coef_;
  canonicalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  BigInt d = common_field(*this, o);
  Rational r = rat_ * o.rat_ + coef_ * o.coef_ * Rational(d);
  Rational c = rat_ * o.coef_ + coef_ * o.rat_;
  rat_ = std::move(r);
  coef_ = std::move(c);
  d_ = std::move(d);
  canonicalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  BigInt d = common_field(*this, o);
  Rational norm = o.rat_ * o.rat_ - o.coef_ * o.coef_ * Rational(d);
  // norm = 0 would mean sqrt(d) rational, impossible for squarefree d > 1.
  QuadExt numer = *this * o.conjugate();
  rat_ = numer.rat_ / norm;
  coef_ = numer.coef_ / norm;
  d_ = std::move(d);
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const QuadExt& a, const QuadExt& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double QuadExt::to_double() const {
  double v = static_cast<double>(rat_);
  if (!coef_.is_zero())
    v += static_cast<double>(coef_) * std::sqrt(static_cast<double>(d_));
  return v;
}

std::string QuadExt::encode() const {
  std::string s = tileprove::encode(rat_);
  if (!coef_.is_zero()) {
    s += (coef_.sign() > 0) ? "+" : "-";
    s += tileprove::encode(boost::multiprecision::abs(coef_));
    s += "*sqrt(";
    s += d_.str();
    s += ")";
  }
  return s;
}

QuadExt QuadExt::parse(std::string_view text) {
  auto star = text.find("*sqrt(");
  if (star == std::string_view::npos) return QuadExt(parse_rational(text));
  if (text.empty() || text.back() != ')')
    throw std::invalid_argument("malformed surd: " + std::string(text));
  std::string_view dpart = text.substr(star + 6, text.size() - star - 7);
  BigInt d{std::string(dpart)};
  // split the coefficient term off at the last +/- that is not a leading sign
  std::string_view head = text.substr(0, star);
  size_t split = std::string_view::npos;
  for (size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos)
    throw std::invalid_argument("malformed surd: " + std::string(text));
  Rational rat = parse_rational(head.substr(0, split));
  Rational coef = parse_rational(head.substr(split + 1));
  if (head[split] == '-') coef = -coef;
  return QuadExt(rat, coef, d);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  return os << x.encode();
}

QuadExt quad_sqrt(const Rational& x) {
  if (x < 0) throw std::domain_error("sqrt of negative rational");
  if (x.is_zero()) return QuadExt(0);
  // sqrt(n/m) = sqrt(n*m)/m = (k/m) * sqrt(d) with n*m = k^2 d.
  auto split = squarefree_split(num(x) * den(x));
  Rational coef(split.root, den(x));
  if (split.squarefree == 1) return QuadExt(coef);
  return QuadExt(Rational(0), coef, split.squarefree);
}

QuadRoots solve_quadratic_exact(const Rational& A, const Rational& B,
                                const Rational& C) {
  QuadRoots out;
  if (A.is_zero()) {
    if (B.is_zero()) {
      out.degenerate = C.is_zero();
      return out;
    }
    out.roots.push_back(QuadExt(-C / B));
    return out;
  }
  Rational disc = B * B - 4 * A * C;
  if (disc < 0) return out;
  Rational base = -B / (2 * A);
  if (disc.is_zero()) {
    out.roots.push_back(QuadExt(base));
    return out;
  }
  QuadExt surd = quad_sqrt(disc);
  QuadExt offset = surd * QuadExt(Rational(1) / (2 * A));
  out.roots.push_back(QuadExt(base) - offset);
  out.roots.push_back(QuadExt(base) + offset);
  if (out.roots[1] < out.roots[0]) std::swap(out.roots[0], out.roots[1]);
  return out;
}

}  // namespace tileprove
