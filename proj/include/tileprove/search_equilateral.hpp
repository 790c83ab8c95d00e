#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tileprove/intpoly.hpp"
#include "tileprove/tile.hpp"

namespace tileprove {

// Search for rational tiles admitting an equilateral N-tiling with a pi/3 or
// 2pi/3 tile angle.  The side of ABC decomposes as X = pa + qb + rc and the
// area equation X^2 = Nab, combined with c^2 = a^2 + b^2 -+ ab, squares to an
// integer quartic in s = a/b whose rational roots in (0,1) give candidates.
// Squaring admits both branches, so candidates satisfy
// (pa + qb + rc)^2 = Nab or (pa + qb - rc)^2 = Nab.

enum class Gamma { PiOver3, TwoPiOver3 };

std::string to_string(Gamma g);
int lawcos_sign(Gamma g);  // -1 for pi/3, +1 for 2pi/3

struct EquilateralCandidate {
  int N = 0;
  Gamma gamma = Gamma::PiOver3;
  int p = 0, q = 0, r = 0;  // first decomposition that produced the tile
  Rational s;               // a/b in lowest terms
  IntegerTile tile;
  int multiplicity = 1;     // number of (p,q,r) tuples producing this tile
};

/// The quartic 4(ps+q)^2 r^2 (s^2+1+sign*s) - (Ns-(ps+q)^2-r^2(s^2+1+sign*s))^2,
/// expanded over the integers.
IntPoly build_quartic(int N, int p, int q, int r, int sign);

/// All candidate tiles for an equilateral N-tiling with the given gamma,
/// deduplicated by tile, sorted by tile.
std::vector<EquilateralCandidate> find_candidates(int N, Gamma gamma,
                                                  int jobs = 1);

struct ScanRow {
  int N;
  std::vector<EquilateralCandidate> candidates;  // both gammas, sorted
};

/// find_candidates aggregated over [lo, hi] for one gamma or both.
std::vector<ScanRow> scan_range(int lo, int hi, std::optional<Gamma> gamma,
                                int jobs = 1);

struct ReferenceRow {
  int N;
  Gamma gamma;
  IntegerTile tile;
};

/// Previously reported candidate table for cross-checking; the N = 84 entry
/// (16,20,19) fails c^2 = a^2+b^2-ab (336 != 361) and is flagged when the
/// computed table disagrees.
const std::vector<ReferenceRow>& reference_rows();

}  // namespace tileprove
