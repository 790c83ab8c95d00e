#pragma once

#include <array>
#include <optional>
#include <string>

#include "tileprove/quadext.hpp"

namespace tileprove {

/// Angle cases of the main non-existence argument, plus the commensurable
/// branch handled by the closed-form classifier.
enum class AngleCase {
  ThreeAlphaTwoBeta,        // 3a + 2b = pi
  GammaTwoPiOver3,          // gamma = 2pi/3
  GammaPiOver3Equilateral,  // equilateral ABC, tile angle pi/3
  RightTileIsosceles,       // isosceles ABC, right-angled tile
  GammaEquals2Alpha,        // isosceles ABC, gamma = 2a
  Commensurable,            // all angles rational multiples of pi
};

std::string to_string(AngleCase c);

/// s = 2 sin(alpha/2) for the 3a+2b=pi family; exactly inside (0,1).
struct SParam {
  QuadExt s;
  explicit SParam(QuadExt value);
};

/// Tile sides with the case tag.  For ThreeAlphaTwoBeta, a/c = s and
/// b/c = 1-s^2.  For the gamma = pi/3 and 2pi/3 cases the side opposite the
/// special angle is stored as c, so c^2 = a^2 + b^2 -+ ab (minus for pi/3,
/// plus for 2pi/3) even where other conventions put that side first.
struct TileShape {
  QuadExt a, b, c;
  AngleCase angle_case;
};

/// (a, b, c) = (s, 1-s^2, 1), exactly.  Throws std::domain_error outside (0,1).
TileShape sides_from_s(const SParam& s);

struct IntegerTile {
  long long a = 0, b = 0, c = 0;
  friend auto operator<=>(const IntegerTile&, const IntegerTile&) = default;
};

/// Reconstructs the integer tile from rational s = a/b in (0,1):
/// c = b*sqrt(s^2+1+sign*s) when that surd is rational, gcd-normalized.
/// sign = -1 for gamma = pi/3, +1 for gamma = 2pi/3.
std::optional<IntegerTile> integer_tile_from_s(const Rational& s, int sign);

}  // namespace tileprove
