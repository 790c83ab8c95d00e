#include "tileprove/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tileprove {

namespace {

using Vec = std::array<QuadExt, 2>;

Vec sub(const Coord& a, const Coord& b) { return {a[0] - b[0], a[1] - b[1]}; }

QuadExt dot_g(const Vec& u, const Vec& v, const std::array<QuadExt, 3>& g) {
  return u[0] * v[0] * g[0] + (u[0] * v[1] + u[1] * v[0]) * g[1] +
         u[1] * v[1] * g[2];
}

// Twice the signed area in basis units; exact up to the positive factor
// det(e1,e2), so sign tests are well defined.
QuadExt cross(const Vec& u, const Vec& v) { return u[0] * v[1] - u[1] * v[0]; }

int orient(const Coord& a, const Coord& b, const Coord& c) {
  return cross(sub(b, a), sub(c, a)).sign();
}

struct Tri {
  std::array<Coord, 3> v;  // CCW
};

// Weak separation: some edge of one triangle has the other entirely on its
// outer closed side.  For convex shapes this is exact: interiors intersect
// iff no such edge exists.
bool interiors_disjoint(const Tri& s, const Tri& t) {
  auto separated = [](const Tri& a, const Tri& b) {
    for (int i = 0; i < 3; ++i) {
      const Coord& p = a.v[i];
      const Coord& q = a.v[(i + 1) % 3];
      bool all_out = true;
      for (int j = 0; j < 3 && all_out; ++j)
        all_out = orient(p, q, b.v[j]) <= 0;
      if (all_out) return true;
    }
    return false;
  };
  return separated(s, t) || separated(t, s);
}

struct LineKey {
  std::array<QuadExt, 3> abc;  // A x + B y = C, leading coefficient 1
  bool operator<(const LineKey& o) const {
    for (int i = 0; i < 3; ++i) {
      auto c = abc[i] <=> o.abc[i];
      if (c != 0) return c < 0;
    }
    return false;
  }
};

struct LineEvents {
  bool param_is_x = false;
  // (param, delta): +w at interval start, -w at interval end
  std::vector<std::pair<QuadExt, int>> events;
};

// Adds a directed segment a->b with the given weight to the per-line chain.
void add_segment(std::map<LineKey, LineEvents>& lines, const Coord& a,
                 const Coord& b, int weight) {
  Vec d = sub(b, a);
  QuadExt A = d[1], B = -d[0];
  LineKey key;
  bool param_is_x;
  if (A.is_zero()) {
    key.abc = {QuadExt(0), QuadExt(1), (A * a[0] + B * a[1]) / B};
    param_is_x = true;
  } else {
    key.abc = {QuadExt(1), B / A, (A * a[0] + B * a[1]) / A};
    param_is_x = false;
  }
  auto& ev = lines[key];
  ev.param_is_x = param_is_x;
  QuadExt pa = param_is_x ? a[0] : a[1];
  QuadExt pb = param_is_x ? b[0] : b[1];
  int w = weight;
  if (pb < pa) {
    std::swap(pa, pb);
    w = -w;
  }
  ev.events.emplace_back(std::move(pa), w);
  ev.events.emplace_back(std::move(pb), -w);
}

bool chain_balanced(std::map<LineKey, LineEvents>& lines) {
  for (auto& [key, ev] : lines) {
    std::sort(ev.events.begin(), ev.events.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    int level = 0;
    for (size_t i = 0; i < ev.events.size(); ++i) {
      level += ev.events[i].second;
      bool boundary_next =
          i + 1 == ev.events.size() || ev.events[i + 1].first != ev.events[i].first;
      if (boundary_next && i + 1 < ev.events.size() && level != 0) return false;
    }
    if (level != 0) return false;
  }
  return true;
}

}  // namespace

VerifyReport verify(const Tiling& t) {
  VerifyReport rep;
  rep.n = t.tile_count();

  auto malformed = [&](const std::string& why) {
    rep.malformed = true;
    rep.malformed_reason = why;
    return rep;
  };

  const int npts = static_cast<int>(t.points.size());
  auto index_ok = [&](int i) { return i >= 0 && i < npts; };
  for (int i : t.outer)
    if (!index_ok(i)) return malformed("outer index out of range");
  for (const auto& tri : t.tiles)
    for (int i : tri)
      if (!index_ok(i)) return malformed("tile index out of range");

  // positive-definite Gram (nondegenerate basis)
  if (t.gram[0].sign() <= 0 || t.gram[2].sign() <= 0 ||
      (t.gram[0] * t.gram[2] - t.gram[1] * t.gram[1]).sign() <= 0)
    return malformed("gram matrix not positive definite");

  auto at = [&](int i) -> const Coord& { return t.points[i]; };

  std::vector<Tri> tris;
  tris.reserve(t.tiles.size());
  for (const auto& tri : t.tiles) {
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      return malformed("repeated point in a tile");
    Tri x{{at(tri[0]), at(tri[1]), at(tri[2])}};
    int o = orient(x.v[0], x.v[1], x.v[2]);
    if (o == 0) return malformed("degenerate (collinear) tile");
    if (o < 0) std::swap(x.v[1], x.v[2]);
    tris.push_back(std::move(x));
  }
  Tri outer{{at(t.outer[0]), at(t.outer[1]), at(t.outer[2])}};
  if (orient(outer.v[0], outer.v[1], outer.v[2]) == 0)
    return malformed("degenerate outer triangle");
  if (orient(outer.v[0], outer.v[1], outer.v[2]) < 0)
    std::swap(outer.v[1], outer.v[2]);

  // congruence: squared edge lengths as a multiset
  std::array<QuadExt, 3> want = t.tile_sq_lengths;
  std::sort(want.begin(), want.end());
  rep.congruent = true;
  for (const Tri& x : tris) {
    std::array<QuadExt, 3> got = {
        dot_g(sub(x.v[1], x.v[0]), sub(x.v[1], x.v[0]), t.gram),
        dot_g(sub(x.v[2], x.v[1]), sub(x.v[2], x.v[1]), t.gram),
        dot_g(sub(x.v[0], x.v[2]), sub(x.v[0], x.v[2]), t.gram)};
    std::sort(got.begin(), got.end());
    if (got != want) {
      rep.congruent = false;
      break;
    }
  }

  // pairwise interior disjointness
  rep.disjoint = true;
  for (size_t i = 0; i < tris.size() && rep.disjoint; ++i)
    for (size_t j = i + 1; j < tris.size(); ++j)
      if (!interiors_disjoint(tris[i], tris[j])) {
        rep.disjoint = false;
        break;
      }

  // coverage: exact area sum and boundary-chain balance
  QuadExt area_sum(0);
  std::map<LineKey, LineEvents> lines;
  for (const Tri& x : tris) {
    area_sum += cross(sub(x.v[1], x.v[0]), sub(x.v[2], x.v[0]));
    for (int e = 0; e < 3; ++e)
      add_segment(lines, x.v[e], x.v[(e + 1) % 3], +1);
  }
  QuadExt outer_area = cross(sub(outer.v[1], outer.v[0]), sub(outer.v[2], outer.v[0]));
  for (int e = 0; e < 3; ++e)
    add_segment(lines, outer.v[e], outer.v[(e + 1) % 3], -1);
  rep.covers = (area_sum == outer_area) && chain_balanced(lines);

  return rep;
}

ColoringReport coloring_number(const Tiling& t) {
  ColoringReport rep;
  auto fail = [&](const std::string& why) {
    rep.colorable = false;
    rep.violated = why;
    return rep;
  };

  // canonicalize coincident coordinates
  std::map<Coord, int> canon;
  std::vector<int> canon_of(t.points.size());
  std::vector<Coord> verts;
  for (size_t i = 0; i < t.points.size(); ++i) {
    auto [it, inserted] =
        canon.try_emplace(t.points[i], static_cast<int>(verts.size()));
    if (inserted) verts.push_back(t.points[i]);
    canon_of[i] = it->second;
  }

  const int nv = static_cast<int>(verts.size());
  std::vector<int> tiles_at(nv, 0);
  for (const auto& tri : t.tiles)
    for (int i : tri) tiles_at[canon_of[i]]++;

  const int A = canon_of[t.outer[0]], B = canon_of[t.outer[1]],
            C = canon_of[t.outer[2]];

  if (tiles_at[A] != 1) return fail("one tile at vertex A");

  // boundary vertex: on the outer boundary or interior to some tile edge
  auto on_segment = [&](const Coord& p, const Coord& a, const Coord& b,
                        bool strict) {
    if (orient(a, b, p) != 0) return false;
    int coordi = (a[0] == b[0]) ? 1 : 0;
    const QuadExt& x = p[coordi];
    QuadExt lo = a[coordi], hi = b[coordi];
    if (hi < lo) std::swap(lo, hi);
    return strict ? (lo < x && x < hi) : (lo <= x && x <= hi);
  };

  std::vector<bool> is_boundary(nv, false);
  for (int v = 0; v < nv; ++v) {
    if (v == A || v == B || v == C || tiles_at[v] == 0) continue;
    for (int e = 0; e < 3 && !is_boundary[v]; ++e)
      if (on_segment(verts[v], t.points[t.outer[e]],
                     t.points[t.outer[(e + 1) % 3]], false))
        is_boundary[v] = true;
    if (!is_boundary[v]) {
      for (const auto& tri : t.tiles) {
        for (int e = 0; e < 3 && !is_boundary[v]; ++e) {
          const Coord& a = t.points[tri[e]];
          const Coord& b = t.points[tri[(e + 1) % 3]];
          if (on_segment(verts[v], a, b, true)) is_boundary[v] = true;
        }
        if (is_boundary[v]) break;
      }
    }
  }

  for (int v = 0; v < nv; ++v) {
    if (v == A || v == B || v == C || tiles_at[v] == 0) continue;
    if (is_boundary[v] && tiles_at[v] % 2 == 0)
      return fail("odd number of tiles at every boundary vertex");
    if (!is_boundary[v] && tiles_at[v] % 2 == 1)
      return fail("even number of tiles at every interior vertex");
  }
  if (tiles_at[B] % 2 != tiles_at[C] % 2)
    return fail("equal parities at B and C");

  // adjacency: positive-length overlap of tile boundaries on a common line
  struct EdgeRec {
    QuadExt lo, hi;
    int tile;
  };
  std::map<LineKey, std::vector<EdgeRec>> lines;
  for (size_t ti = 0; ti < t.tiles.size(); ++ti) {
    const auto& tri = t.tiles[ti];
    for (int e = 0; e < 3; ++e) {
      const Coord& a = t.points[tri[e]];
      const Coord& b = t.points[tri[(e + 1) % 3]];
      Vec d = sub(b, a);
      QuadExt Ac = d[1], Bc = -d[0];
      LineKey key;
      bool param_is_x;
      if (Ac.is_zero()) {
        key.abc = {QuadExt(0), QuadExt(1), (Ac * a[0] + Bc * a[1]) / Bc};
        param_is_x = true;
      } else {
        key.abc = {QuadExt(1), Bc / Ac, (Ac * a[0] + Bc * a[1]) / Ac};
        param_is_x = false;
      }
      QuadExt pa = param_is_x ? a[0] : a[1];
      QuadExt pb = param_is_x ? b[0] : b[1];
      if (pb < pa) std::swap(pa, pb);
      lines[key].push_back({std::move(pa), std::move(pb), static_cast<int>(ti)});
    }
  }
  std::vector<std::vector<int>> adj(t.tiles.size());
  for (auto& [key, recs] : lines) {
    for (size_t i = 0; i < recs.size(); ++i)
      for (size_t j = i + 1; j < recs.size(); ++j) {
        if (recs[i].tile == recs[j].tile) continue;
        const QuadExt& lo = std::max(recs[i].lo, recs[j].lo);
        const QuadExt& hi = std::min(recs[i].hi, recs[j].hi);
        if (lo < hi) {
          adj[recs[i].tile].push_back(recs[j].tile);
          adj[recs[j].tile].push_back(recs[i].tile);
        }
      }
  }

  // 2-color from the tile at A
  int start = -1;
  for (size_t ti = 0; ti < t.tiles.size(); ++ti)
    for (int i : t.tiles[ti])
      if (canon_of[i] == A) start = static_cast<int>(ti);
  std::vector<int> color(t.tiles.size(), -1);
  std::vector<int> stack{start};
  color[start] = 1;  // black
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (int nb : adj[cur]) {
      if (color[nb] == -1) {
        color[nb] = 1 - color[cur];
        stack.push_back(nb);
      } else if (color[nb] == color[cur]) {
        return fail("colors change across tile boundaries");
      }
    }
  }
  for (int c : color)
    if (c == -1) return fail("tiling not edge-connected");

  rep.colorable = true;
  rep.black.resize(t.tiles.size());
  int black = 0, white = 0;
  for (size_t i = 0; i < color.size(); ++i) {
    rep.black[i] = color[i] == 1;
    (rep.black[i] ? black : white)++;
  }
  rep.M = black - white;
  rep.sign = (tiles_at[B] % 2 == 1) ? 1 : -1;
  return rep;
}

}  // namespace tileprove
