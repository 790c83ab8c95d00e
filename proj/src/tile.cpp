#include "tileprove/tile.hpp"

#include <numeric>
#include <stdexcept>

namespace tileprove {

std::string to_string(AngleCase c) {
  switch (c) {
    case AngleCase::ThreeAlphaTwoBeta: return "3a+2b=pi";
    case AngleCase::GammaTwoPiOver3: return "gamma=2pi/3";
    case AngleCase::GammaPiOver3Equilateral: return "equilateral, gamma=pi/3";
    case AngleCase::RightTileIsosceles: return "isosceles ABC, right tile";
    case AngleCase::GammaEquals2Alpha: return "isosceles ABC, gamma=2a";
    case AngleCase::Commensurable: return "commensurable angles";
  }
  return {};
}

SParam::SParam(QuadExt value) : s(std::move(value)) {
  if (s.sign() <= 0 || (QuadExt(1) - s).sign() <= 0)
    throw std::domain_error("s must lie strictly inside (0,1)");
}

TileShape sides_from_s(const SParam& sp) {
  const QuadExt& s = sp.s;
  return TileShape{s, QuadExt(1) - s * s, QuadExt(1),
                   AngleCase::ThreeAlphaTwoBeta};
}

std::optional<IntegerTile> integer_tile_from_s(const Rational& s, int sign) {
  if (s <= 0 || s >= 1) throw std::domain_error("s must lie inside (0,1)");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  BigInt a = num(s), b = den(s);
  BigInt cc = a * a + b * b + sign * a * b;
  auto c = exact_isqrt(cc);
  if (!c) return std::nullopt;
  BigInt g = boost::multiprecision::gcd(a, boost::multiprecision::gcd(b, *c));
  a /= g;
  b /= g;
  BigInt cv = *c / g;
  return IntegerTile{a.convert_to<long long>(), b.convert_to<long long>(),
                     cv.convert_to<long long>()};
}

}  // namespace tileprove
