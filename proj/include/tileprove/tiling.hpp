#pragma once

#include <array>
#include <string>
#include <vector>

#include "tileprove/quadext.hpp"

namespace tileprove {

using Coord = std::array<QuadExt, 2>;

/**
 * Exact tiling of a triangle: coordinates live in an affine basis (e1, e2)
 * described only by its Gram matrix (|e1|^2, e1.e2, |e2|^2), so congruence
 * and orientation checks stay inside Q(sqrt(field_d)).  field_d = 0 means
 * all scalars are rational.
 */
struct Tiling {
  BigInt field_d = 0;
  std::array<QuadExt, 3> gram{};            // g11, g12, g22
  std::vector<Coord> points;
  std::array<int, 3> outer{};               // indices of A, B, C
  std::vector<std::array<int, 3>> tiles;    // N index triples
  std::array<QuadExt, 3> tile_sq_lengths{}; // {a^2, b^2, c^2} as a multiset

  int tile_count() const { return static_cast<int>(tiles.size()); }
};

/// Bit-exact JSON round trip (scalars as exact strings).
std::string tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const std::string& text);

Tiling load_tiling(const std::string& path);
void save_tiling(const Tiling& t, const std::string& path);

}  // namespace tileprove
