#include "tileprove/generators.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace tileprove {

namespace {

struct Builder {
  Tiling t;
  std::map<Coord, int> index;

  int point(const Coord& c) {
    auto [it, inserted] = index.try_emplace(c, static_cast<int>(t.points.size()));
    if (inserted) t.points.push_back(c);
    return it->second;
  }

  void tile(const Coord& a, const Coord& b, const Coord& c) {
    t.tiles.push_back({point(a), point(b), point(c)});
  }

  void finish(const Coord& A, const Coord& B, const Coord& C) {
    t.outer = {point(A), point(B), point(C)};
    BigInt d = 0;
    auto bump = [&d](const QuadExt& x) {
      if (x.d() > d) d = x.d();
    };
    for (const auto& g : t.gram) bump(g);
    for (const auto& sq : t.tile_sq_lengths) bump(sq);
    for (const auto& p : t.points) {
      bump(p[0]);
      bump(p[1]);
    }
    t.field_d = d;
  }
};

Coord lincomb(const Coord& o, int i, const Coord& u, int j, const Coord& v) {
  return {o[0] + i * u[0] + j * v[0], o[1] + i * u[1] + j * v[1]};
}

// Quadratic lattice block: origin + i*u1 + j*u2 over i+j <= n.
void lattice_block(Builder& b, const Coord& origin, const Coord& u1,
                   const Coord& u2, int n) {
  for (int i = 0; i + 1 <= n; ++i) {
    for (int j = 0; i + j + 1 <= n; ++j) {
      b.tile(lincomb(origin, i, u1, j, u2), lincomb(origin, i + 1, u1, j, u2),
             lincomb(origin, i, u1, j + 1, u2));
      if (i + j + 2 <= n)
        b.tile(lincomb(origin, i + 1, u1, j, u2),
               lincomb(origin, i, u1, j + 1, u2),
               lincomb(origin, i + 1, u1, j + 1, u2));
    }
  }
}

QuadExt half(const QuadExt& x) { return x * QuadExt(Rational(1, 2)); }

Coord ipt(const BigInt& x, const BigInt& y) {
  return {QuadExt(Rational(x)), QuadExt(Rational(y))};
}

// x = xr * sqrt(3), y rational: the hexagonal family lives in Q(sqrt 3)
Coord pt3(const Rational& x_sqrt3, const Rational& y) {
  if (x_sqrt3.is_zero()) return {QuadExt(0), QuadExt(y)};
  return {QuadExt(Rational(0), x_sqrt3, BigInt(3)), QuadExt(y)};
}

}  // namespace

Tiling gen_quadratic(const std::array<QuadExt, 3>& tile_sq, int n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  const QuadExt& a2 = tile_sq[0];
  const QuadExt& b2 = tile_sq[1];
  const QuadExt& c2 = tile_sq[2];
  // strict triangle inequality, tested on the squares:
  // 16 area^2 = 4 b^2 c^2 - (b^2 + c^2 - a^2)^2 > 0
  QuadExt heron = 4 * b2 * c2 - (b2 + c2 - a2) * (b2 + c2 - a2);
  if (a2.sign() <= 0 || b2.sign() <= 0 || c2.sign() <= 0 || heron.sign() <= 0)
    throw std::domain_error("degenerate tile");

  Builder b;
  b.t.gram = {c2, half(b2 + c2 - a2), b2};  // e1 = AB/n, e2 = AC/n
  b.t.tile_sq_lengths = tile_sq;
  Coord origin{QuadExt(0), QuadExt(0)};
  Coord e1{QuadExt(1), QuadExt(0)}, e2{QuadExt(0), QuadExt(1)};
  lattice_block(b, origin, e1, e2, n);
  b.finish(origin, lincomb(origin, n, e1, 0, e2), lincomb(origin, 0, e1, n, e2));
  return b.t;
}

Tiling gen_biquadratic(int e, int f) {
  if (!(e > f && f >= 1)) throw std::invalid_argument("need e > f >= 1");
  const BigInt E = e, F = f;
  Builder b;
  b.t.gram = {QuadExt(1), QuadExt(0), QuadExt(1)};
  b.t.tile_sq_lengths = {QuadExt(BigInt(E * E)), QuadExt(BigInt(F * F)),
                         QuadExt(BigInt(E * E + F * F))};

  Coord A = ipt(0, 0), B = ipt(E * E + F * F, 0), C = ipt(E * E, E * F);
  // altitude foot H = (e^2, 0); each half is the tile scaled by e resp. f
  lattice_block(b, A, ipt(E, 0), ipt(E, F), e);
  lattice_block(b, B, ipt(-F, 0), ipt(-F, E), f);
  b.finish(A, B, C);
  return b.t;
}

Tiling gen_double(const Tiling& t) {
  auto at = [&](int i) -> const Coord& { return t.points[i]; };
  auto dot_from = [&](const Coord& x, const Coord& y, const Coord& z) {
    QuadExt u0 = y[0] - x[0], u1 = y[1] - x[1];
    QuadExt v0 = z[0] - x[0], v1 = z[1] - x[1];
    return u0 * v0 * t.gram[0] + (u0 * v1 + u1 * v0) * t.gram[1] +
           u1 * v1 * t.gram[2];
  };
  int corner = -1;
  for (int i = 0; i < 3 && corner < 0; ++i)
    if (dot_from(at(t.outer[i]), at(t.outer[(i + 1) % 3]),
                 at(t.outer[(i + 2) % 3]))
            .is_zero())
      corner = i;
  if (corner < 0) throw std::domain_error("outer triangle has no right angle");

  const Coord V = at(t.outer[corner]);
  const Coord W1 = at(t.outer[(corner + 1) % 3]);  // reflection axis V-W1
  const Coord W2 = at(t.outer[(corner + 2) % 3]);

  const QuadExt u0 = W1[0] - V[0], u1 = W1[1] - V[1];
  const QuadExt uu = dot_from(V, W1, W1);
  auto reflect = [&](const Coord& x) -> Coord {
    QuadExt x0 = x[0] - V[0], x1 = x[1] - V[1];
    QuadExt proj = (x0 * u0 * t.gram[0] + (x0 * u1 + x1 * u0) * t.gram[1] +
                    x1 * u1 * t.gram[2]) /
                   uu;
    QuadExt two_proj = proj + proj;
    return {V[0] + two_proj * u0 - x0, V[1] + two_proj * u1 - x1};
  };

  Builder b;
  b.t.gram = t.gram;
  b.t.tile_sq_lengths = t.tile_sq_lengths;
  for (const auto& tri : t.tiles) b.tile(at(tri[0]), at(tri[1]), at(tri[2]));
  for (const auto& tri : t.tiles)
    b.tile(reflect(at(tri[0])), reflect(at(tri[1])), reflect(at(tri[2])));
  b.finish(W2, reflect(W2), W1);
  return b.t;
}

Tiling gen_pythagorean_mixed(int a, int b, int c) {
  const BigInt A = a, B = b, C = c;
  if (a < 1 || b < 1 || c < 1 || A * A + B * B != C * C ||
      std::gcd(std::gcd(a, b), c) != 1)
    throw std::invalid_argument("need a primitive Pythagorean triple");

  // Everything scaled by c so the altitude foot has integer coordinates:
  // the tile is (ca, cb, c^2).
  Builder bld;
  bld.t.gram = {QuadExt(1), QuadExt(0), QuadExt(1)};
  bld.t.tile_sq_lengths = {QuadExt(BigInt(C * C * A * A)),
                           QuadExt(BigInt(C * C * B * B)),
                           QuadExt(BigInt(C * C * C * C))};

  Coord pA = ipt(0, 0);
  Coord pB = ipt(2 * C * C * A, 0);
  Coord pC = ipt(C * C * A, C * C * B);            // apex
  Coord pF = ipt(2 * C * C * A - A * A * A, A * A * B);  // altitude foot on B-C

  // left half: c^2 tiles from pA towards M = (c^2 a, 0) and the apex
  lattice_block(bld, pA, ipt(C * A, 0), ipt(C * A, C * B), c);
  // right half, lower block: a^2 tiles from pB
  lattice_block(bld, pB, ipt(-A * A, A * B), ipt(-C * C, 0), a);
  // right half, upper block: b^2 tiles from pF
  lattice_block(bld, pF, ipt(-A * B, B * B), ipt(-A * B, -A * A), b);
  bld.finish(pA, pB, pC);
  return bld.t;
}

long long hexagonal_count(int k) {
  if (k < 0) throw std::domain_error("k must be >= 0");
  return 3LL * (k + 1) * (k + 1);
}

Tiling gen_hexagonal(int k) {
  if (k < 0 || k > 10) throw std::domain_error("k must lie in [0,10]");
  Builder b;
  b.t.gram = {QuadExt(1), QuadExt(0), QuadExt(1)};
  b.t.tile_sq_lengths = {QuadExt(1), QuadExt(1), QuadExt(3)};

  const int K = k + 1;  // tiles per side; side length K*sqrt(3)
  Coord A = pt3(0, 0), B = pt3(K, 0), C = pt3(Rational(K, 2), Rational(3 * K, 2));

  for (int i = 0; i < K; ++i) {
    // side AB, bases [i, i+1]*sqrt(3)
    b.tile(pt3(i, 0), pt3(i + 1, 0), pt3(Rational(2 * i + 1, 2), Rational(1, 2)));
    // side BC, walking from B to C
    b.tile(pt3(Rational(2 * K - i, 2), Rational(3 * i, 2)),
           pt3(Rational(2 * K - i - 1, 2), Rational(3 * i + 3, 2)),
           pt3(Rational(2 * K - i - 1, 2), Rational(3 * i + 1, 2)));
    // side CA, walking from C to A
    b.tile(pt3(Rational(K - i, 2), Rational(3 * (K - i), 2)),
           pt3(Rational(K - i - 1, 2), Rational(3 * (K - i - 1), 2)),
           pt3(Rational(K - i, 2), Rational(3 * (K - i) - 2, 2)));
  }

  // hexagons in bowling-pin rows; six tiles each (three rhombi split along
  // their long diagonals)
  for (int row = 0; row < k; ++row) {
    for (int col = 0; col < k - row; ++col) {
      Rational cx(2 * (col + 1) + row, 2);  // times sqrt(3)
      Rational cy(2 + 3 * row, 2);
      Coord O = pt3(cx, cy);
      const Rational hx(1, 2);
      Coord w[6] = {
          pt3(cx + hx, cy + Rational(1, 2)),  // 30
          pt3(cx, cy + 1),                    // 90
          pt3(cx - hx, cy + Rational(1, 2)),  // 150
          pt3(cx - hx, cy - Rational(1, 2)),  // 210
          pt3(cx, cy - 1),                    // 270
          pt3(cx + hx, cy - Rational(1, 2)),  // 330
      };
      for (int j = 0; j < 6; j += 2) {
        b.tile(w[j], w[(j + 1) % 6], w[(j + 2) % 6]);
        b.tile(w[j], O, w[(j + 2) % 6]);
      }
    }
  }

  b.finish(A, B, C);
  return b.t;
}

Tiling gen_sixfold(int n) {
  if (n < 1 || n > 10) throw std::domain_error("n must lie in [1,10]");
  Builder b;
  b.t.gram = {QuadExt(1), QuadExt(0), QuadExt(1)};
  b.t.tile_sq_lengths = {QuadExt(1), QuadExt(3), QuadExt(4)};

  // equilateral cells of side 2*sqrt(3) on the lattice (2,0)+(1,3) (x in
  // units of sqrt(3)); each cell splits into six 30-60-90 tiles through its
  // edge midpoints and centroid
  auto L = [&](int i, int j) { return pt3(Rational(2 * i + j), Rational(3 * j)); };
  auto cell = [&](const Coord& v0, const Coord& v1, const Coord& v2) {
    auto mid = [](const Coord& x, const Coord& y) {
      return Coord{half(x[0] + y[0]), half(x[1] + y[1])};
    };
    QuadExt third{Rational(1, 3)};
    Coord g{(v0[0] + v1[0] + v2[0]) * third, (v0[1] + v1[1] + v2[1]) * third};
    Coord m01 = mid(v0, v1), m12 = mid(v1, v2), m20 = mid(v2, v0);
    b.tile(v0, m01, g);
    b.tile(m01, v1, g);
    b.tile(v1, m12, g);
    b.tile(m12, v2, g);
    b.tile(v2, m20, g);
    b.tile(m20, v0, g);
  };
  for (int i = 0; i + 1 <= n; ++i) {
    for (int j = 0; i + j + 1 <= n; ++j) {
      cell(L(i, j), L(i + 1, j), L(i, j + 1));
      if (i + j + 2 <= n) cell(L(i + 1, j), L(i, j + 1), L(i + 1, j + 1));
    }
  }
  b.finish(L(0, 0), L(n, 0), L(0, n));
  return b.t;
}

}  // namespace tileprove
