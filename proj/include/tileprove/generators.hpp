#pragma once

#include <array>

#include "tileprove/tiling.hpp"

namespace tileprove {

/// n^2 subdivision of a triangle similar to its tile; tile_sq = {a^2,b^2,c^2}
/// (squared side lengths, exact).  Throws std::domain_error for a degenerate
/// tile (strict triangle inequality checked on the squares).
Tiling gen_quadratic(const std::array<QuadExt, 3>& tile_sq, int n);

/// Right triangle split by the altitude from the right angle into two
/// similar triangles, quadratically tiled with e^2 and f^2 copies of the
/// common e-by-f right tile.  N = e^2 + f^2; rational coordinates.
/// Requires e > f >= 1.
Tiling gen_biquadratic(int e, int f);

/// Reflects a tiling whose outer triangle has a right angle across a leg;
/// 2N tiles of an isosceles triangle.  Throws std::domain_error when the
/// outer triangle has no right angle.
Tiling gen_double(const Tiling& t);

/// Isosceles triangle for a Pythagorean tile a^2 + b^2 = c^2 (gcd 1): one
/// half carries a c^2 quadratic block, the other is split by an altitude
/// into a^2 and b^2 blocks.  N = 2 c^2.
Tiling gen_pythagorean_mixed(int a, int b, int c);

/// 3(k+1)^2.
long long hexagonal_count(int k);

/// Equilateral triangle tiled by 3(k+1)^2 copies of the (pi/6, pi/6, 2pi/3)
/// tile: 1+2+...+k unit hexagons (six tiles each) in bowling-pin arrangement
/// plus k+1 tiles against each side.  Coordinates over Q(sqrt 3).  0 <= k <= 10.
Tiling gen_hexagonal(int k);

/// Equilateral triangle tiled by 6n^2 30-60-90 tiles: n^2 equilateral cells,
/// each split through its edge midpoints and centroid.  1 <= n <= 10.
Tiling gen_sixfold(int n);

}  // namespace tileprove
