#include "tileprove/search_equilateral.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tileprove {

std::string to_string(Gamma g) {
  return g == Gamma::PiOver3 ? "pi/3" : "2pi/3";
}

int lawcos_sign(Gamma g) { return g == Gamma::PiOver3 ? -1 : 1; }

IntPoly build_quartic(int N, int p, int q, int r, int sign) {
  if (p < 0 || q < 0 || r < 0 || N < 1)
    throw std::invalid_argument("build_quartic needs p,q,r >= 0 and N >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  IntPoly ps_q({BigInt(q), BigInt(p)});                       // ps + q
  IntPoly surd2({BigInt(1), BigInt(sign), BigInt(1)});        // s^2 + 1 + sign*s
  IntPoly lhs = (ps_q * ps_q * surd2).scaled(4 * BigInt(r) * r);
  IntPoly inner = IntPoly::monomial(BigInt(N), 1) - ps_q * ps_q -
                  surd2.scaled(BigInt(r) * r);
  return lhs - inner * inner;
}

std::vector<EquilateralCandidate> find_candidates(int N, Gamma gamma,
                                                  int /*jobs*/) {
  if (N < 3 || N > 200) throw std::domain_error("N must lie in [3,200]");
  const int sign = lawcos_sign(gamma);
  const int pq_min = gamma == Gamma::PiOver3 ? 1 : 0;  // a and b edges at the
                                                       // corners when gamma=pi/3
  const int bound = N / 6 + 1;

  std::map<IntegerTile, EquilateralCandidate> found;
  for (int p = pq_min; p <= bound; ++p) {
    for (int q = pq_min; q <= bound - p; ++q) {
      for (int r = 2; r <= bound - p - q; ++r) {
        IntPoly quartic = build_quartic(N, p, q, r, sign);
        if (quartic.is_zero()) continue;
        for (const Rational& s : rational_roots(quartic)) {
          if (s <= 0 || s >= 1) continue;
          auto tile = integer_tile_from_s(s, sign);
          if (!tile) continue;
          auto [it, inserted] = found.try_emplace(
              *tile, EquilateralCandidate{N, gamma, p, q, r, s, *tile, 1});
          if (!inserted) ++it->second.multiplicity;
        }
      }
    }
  }

  std::vector<EquilateralCandidate> out;
  out.reserve(found.size());
  for (auto& [tile, cand] : found) out.push_back(std::move(cand));
  return out;
}

std::vector<ScanRow> scan_range(int lo, int hi, std::optional<Gamma> gamma,
                                int jobs) {
  if (lo < 3 || hi > 200 || lo > hi)
    throw std::domain_error("range must satisfy 3 <= lo <= hi <= 200");
  std::vector<ScanRow> rows;
  for (int N = lo; N <= hi; ++N) {
    ScanRow row{N, {}};
    for (Gamma g : {Gamma::PiOver3, Gamma::TwoPiOver3}) {
      if (gamma && *gamma != g) continue;
      auto cs = find_candidates(N, g, jobs);
      row.candidates.insert(row.candidates.end(), cs.begin(), cs.end());
    }
    std::sort(row.candidates.begin(), row.candidates.end(),
              [](const EquilateralCandidate& a, const EquilateralCandidate& b) {
                if (a.tile != b.tile) return a.tile < b.tile;
                return a.gamma < b.gamma;
              });
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = {
      {40, Gamma::PiOver3, {5, 8, 7}},     {54, Gamma::PiOver3, {3, 8, 7}},
      {56, Gamma::TwoPiOver3, {7, 8, 13}}, {60, Gamma::TwoPiOver3, {3, 5, 7}},
      {65, Gamma::PiOver3, {9, 65, 61}},   {66, Gamma::TwoPiOver3, {11, 24, 31}},
      {70, Gamma::PiOver3, {7, 40, 37}},   {80, Gamma::TwoPiOver3, {5, 16, 19}},
      {84, Gamma::PiOver3, {16, 20, 19}},  {85, Gamma::PiOver3, {17, 80, 73}},
  };
  return rows;
}

}  // namespace tileprove
