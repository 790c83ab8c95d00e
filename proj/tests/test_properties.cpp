#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "tileprove/intpoly.hpp"
#include "tileprove/numbertheory.hpp"
#include "tileprove/quadext.hpp"
#include "tileprove/search3a2b.hpp"
#include "tileprove/tile.hpp"

using namespace tileprove;
using Float50 = boost::multiprecision::cpp_bin_float_50;

namespace {

Float50 to_f50(const Rational& x) {
  return Float50(num(x).str()) / Float50(den(x).str());
}

Float50 to_f50(const QuadExt& x) {
  Float50 v = to_f50(x.rat());
  if (!x.coef().is_zero())
    v += to_f50(x.coef()) * sqrt(Float50(x.d().str()));
  return v;
}

}  // namespace

TEST_CASE("quadratic root re-substitution, 1000 random coefficient triples") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coeff(-30, 30);
  int solved = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    Rational A(coeff(rng)), B(coeff(rng)), C(coeff(rng));
    QuadRoots sol = solve_quadratic_exact(A, B, C);
    if (sol.degenerate) continue;
    for (const QuadExt& r : sol.roots) {
      QuadExt residual = QuadExt(A) * r * r + QuadExt(B) * r + QuadExt(C);
      REQUIRE(residual.is_zero());
      ++solved;
    }
  }
  CHECK(solved > 500);  // the sample must actually exercise the solver
}

TEST_CASE("rational roots match exhaustive candidate substitution, 1000 quartics") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> small(-6, 6);
  std::uniform_int_distribution<int> nz(1, 5);
  for (int iter = 0; iter < 1000; ++iter) {
    // plant (q1 x - p1)(q2 x - p2) times a random quadratic
    int p1 = small(rng), q1 = nz(rng), p2 = small(rng), q2 = nz(rng);
    IntPoly planted = IntPoly({BigInt(-p1), BigInt(q1)}) *
                      IntPoly({BigInt(-p2), BigInt(q2)}) *
                      IntPoly({BigInt(small(rng)), BigInt(small(rng)),
                               BigInt(nz(rng))});
    auto got = rational_roots(planted);
    CHECK(std::find(got.begin(), got.end(), Rational(p1, q1)) != got.end());
    CHECK(std::find(got.begin(), got.end(), Rational(p2, q2)) != got.end());

    // exhaustive candidate sweep within the rational-root-theorem box,
    // after stripping any x^k factor (root 0 handled separately)
    std::vector<BigInt> cs = planted.coeffs();
    std::vector<Rational> brute;
    size_t shift = 0;
    while (shift < cs.size() && cs[shift] == 0) ++shift;
    if (shift > 0) brute.emplace_back(0);
    cs.erase(cs.begin(), cs.begin() + shift);
    long long a0l =
        boost::multiprecision::abs(cs.front()).convert_to<long long>();
    long long ll =
        boost::multiprecision::abs(cs.back()).convert_to<long long>();
    for (long long p = 1; p <= a0l; ++p)
      for (long long q = 1; q <= ll; ++q) {
        if (std::gcd(p, q) != 1) continue;
        for (long long sgn : {1LL, -1LL})
          if (planted.eval_scaled(BigInt(sgn * p), BigInt(q)) == 0)
            brute.emplace_back(sgn * p, q);
      }
    std::sort(brute.begin(), brute.end());
    brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
    CHECK(got == brute);
  }
}

TEST_CASE("quadext ordering agrees with 50-digit evaluation") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> small(-20, 20);
  std::uniform_int_distribution<int> denom(1, 9);
  const int ds[] = {2, 3, 5, 7, 11};
  std::uniform_int_distribution<int> di(0, 4);
  for (int iter = 0; iter < 2000; ++iter) {
    int d = ds[di(rng)];
    QuadExt x(Rational(small(rng), denom(rng)), Rational(small(rng), denom(rng)), d);
    QuadExt y(Rational(small(rng), denom(rng)), Rational(small(rng), denom(rng)), d);
    Float50 fx = to_f50(x), fy = to_f50(y);
    int exact = (x <=> y) < 0 ? -1 : ((x <=> y) > 0 ? 1 : 0);
    // collisions below 1e-40 would indicate equality; exact handles those
    if (exact == 0) {
      REQUIRE(abs(fx - fy) < Float50("1e-40"));
    } else {
      REQUIRE(((exact < 0) == (fx < fy)));
    }
  }
}

TEST_CASE("exact/float residual agreement on sampled search states") {
  // 10^4 states (dec, s): exact residual zero iff 50-digit |residual| < 1e-9
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> edge(0, 5);
  std::uniform_int_distribution<int> mpqr(-8, 8);
  std::uniform_int_distribution<int> mm(1, 8);
  int checked = 0, zeros = 0;
  const int N = 11;
  while (checked < 10000) {
    ColoringParams cp{mm(rng), mpqr(rng), mpqr(rng), mpqr(rng)};
    auto [A, B, C] = coloring_quadratic(cp);
    QuadRoots sol = solve_quadratic_exact(A, B, C);
    if (sol.degenerate) continue;
    for (const QuadExt& s : sol.roots) {
      if (s.sign() <= 0 || (QuadExt(1) - s).sign() <= 0) continue;
      BoundaryDecomposition dec{edge(rng), edge(rng), edge(rng),
                                edge(rng), edge(rng), edge(rng), 0, 0, 0};
      auto [ra, rb] = area_residuals(dec, s, N);
      Float50 fs = to_f50(s);
      Float50 one_minus = 1 - fs * fs;
      Float50 X = dec.r + dec.p * fs + dec.q * one_minus;
      Float50 Z = dec.w + dec.u * fs + dec.v * one_minus;
      Float50 fa = X * Z - N * one_minus;
      Float50 fb = X * Z - N * fs;
      REQUIRE(ra.is_zero() == (abs(fa) < Float50("1e-9")));
      REQUIRE(rb.is_zero() == (abs(fb) < Float50("1e-9")));
      zeros += ra.is_zero() + rb.is_zero();
      ++checked;
    }
  }
  CHECK(checked >= 10000);
  (void)zeros;
}

TEST_CASE("sum-of-two-squares witness search vs factorization criterion") {
  for (long long n = 1; n <= 10000; ++n) {
    bool witness = sum_of_two_squares_allowing_zero(n);
    // criterion: squarefree part free of primes congruent to 3 mod 4
    long long m = n;
    bool criterion = true;
    for (long long p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e % 2 == 1 && p % 4 == 3) criterion = false;
    }
    if (m > 1 && m % 4 == 3) criterion = false;
    REQUIRE(witness == criterion);
  }
}

TEST_CASE("sides_from_s satisfies the angle-sum law numerically") {
  // diagnostic: reconstruct the angles in doubles and check
  // 3*alpha + 2*beta = pi to 12 digits (the binding tests are exact)
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> numer(1, 99);
  for (int iter = 0; iter < 1000; ++iter) {
    int den = 100;
    int nu = numer(rng);
    TileShape t = sides_from_s(SParam{QuadExt(Rational(nu, den))});
    double a = t.a.to_double(), b = t.b.to_double(), c = t.c.to_double();
    if (a + b <= c || b + c <= a || c + a <= b) continue;  // flat shapes
    double alpha = std::acos((b * b + c * c - a * a) / (2 * b * c));
    double beta = std::acos((a * a + c * c - b * b) / (2 * a * c));
    CHECK(std::abs(3 * alpha + 2 * beta - std::acos(-1.0)) < 1e-12);
  }
}
