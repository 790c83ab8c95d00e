#pragma once

#include <string>
#include <vector>

#include "tileprove/tiling.hpp"

namespace tileprove {

struct VerifyReport {
  bool malformed = false;
  std::string malformed_reason;
  bool congruent = false;  // every tile's squared-edge multiset matches
  bool disjoint = false;   // pairwise open interiors are disjoint
  bool covers = false;     // area sum + boundary-chain accounting
  int n = 0;

  bool ok() const { return !malformed && congruent && disjoint && covers; }
};

/// Exact verification: congruence via squared lengths against the Gram
/// matrix, disjointness via separating-axis orientation tests, coverage via
/// the boundary chain (every directed tile edge cancels against reversed
/// edges of other tiles or the outer boundary) plus the exact area sum.
VerifyReport verify(const Tiling& t);

struct ColoringReport {
  bool colorable = false;
  std::string violated;     // failed hypothesis when not colorable
  int M = 0;                // black minus white
  int sign = 0;             // +1: odd tile counts at B and C; -1: even
  std::vector<bool> black;  // per tile, in tile order
};

/// Two-colors the tiling from the tile at vertex A, colors flipping across
/// every shared boundary segment, provided: one tile at A; an odd number of
/// tiles at every boundary vertex; an even number at every interior vertex;
/// equal parities at B and C.
ColoringReport coloring_number(const Tiling& t);

}  // namespace tileprove
