#include "tileprove/verdict.hpp"

#include <stdexcept>

#include <json.hpp>

#include "tileprove/generators.hpp"
#include "tileprove/numbertheory.hpp"
#include "tileprove/search3a2b.hpp"
#include "tileprove/search_equilateral.hpp"
#include "tileprove/verify.hpp"

namespace tileprove {

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::ImpossibleComputed: return "impossible (computed)";
    case CaseStatus::ImpossibleCited: return "impossible (cited)";
    case CaseStatus::Inconclusive: return "inconclusive";
    case CaseStatus::TilingExists: return "tiling exists";
  }
  return {};
}

std::string to_string(Overall o) {
  switch (o) {
    case Overall::NoTiling: return "NoTiling";
    case Overall::TilingExists: return "TilingExists";
    case Overall::Unknown: return "Unknown";
  }
  return {};
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_square_int(int n) {
  if (n < 0) return false;
  int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

}  // namespace

std::optional<std::pair<Tiling, std::string>> construct_for(int N) {
  for (const NForm& form : forms_of(N)) {
    Tiling t;
    std::string family;
    switch (form.kind) {
      case NFormKind::Square: {
        std::array<QuadExt, 3> sq{QuadExt(9), QuadExt(16), QuadExt(25)};
        t = gen_quadratic(sq, static_cast<int>(form.e));
        family = "quadratic n=" + std::to_string(form.e);
        break;
      }
      case NFormKind::SumTwoSquares: {
        if (form.e == form.f) continue;  // covered by the 2n^2 construction
        t = gen_biquadratic(static_cast<int>(form.e), static_cast<int>(form.f));
        family = "biquadratic (" + std::to_string(form.e) + "," +
                 std::to_string(form.f) + ")";
        break;
      }
      case NFormKind::TwiceSquare: {
        std::array<QuadExt, 3> sq{QuadExt(9), QuadExt(16), QuadExt(25)};
        t = gen_double(gen_quadratic(sq, static_cast<int>(form.e)));
        family = "doubled quadratic n=" + std::to_string(form.e);
        break;
      }
      case NFormKind::ThriceSquare: {
        if (form.e > 11) continue;
        t = gen_hexagonal(static_cast<int>(form.e) - 1);
        family = "hexagonal k=" + std::to_string(form.e - 1);
        break;
      }
      case NFormKind::SixTimesSquare: {
        if (form.e > 10) continue;
        t = gen_sixfold(static_cast<int>(form.e));
        family = "sixfold n=" + std::to_string(form.e);
        break;
      }
    }
    if (verify(t).ok()) return {{std::move(t), family}};
  }
  return std::nullopt;
}

VerdictCertificate verdict(int N, int jobs) {
  if (N < 3 || N > 100) throw std::domain_error("N must lie in [3,100]");
  VerdictCertificate cert;
  cert.n = N;

  // (1) commensurable angles: closed-form classifier over the extended table
  {
    auto forms = forms_of(N);
    CaseResult cr;
    cr.angle_case = AngleCase::Commensurable;
    cr.rule =
        "tilings with all angles rational multiples of pi exist exactly for "
        "N of the forms n^2, e^2+f^2, 2n^2, 3n^2, 6n^2";
    cr.citation = "Snover et al. 1991; Laczkovich 1995/2012; companion "
                  "isosceles-tilings results";
    if (forms.empty()) {
      cr.status = CaseStatus::ImpossibleCited;
      cr.evidence = "no closed form matches";
    } else {
      auto built = construct_for(N);
      if (built) {
        cr.status = CaseStatus::TilingExists;
        cr.evidence = "verified construction: " + built->second;
        cert.witness = built->first;
        cert.witness_family = built->second;
      } else {
        cr.status = CaseStatus::Inconclusive;
        std::string fs;
        for (const auto& f : forms) fs += (fs.empty() ? "" : "; ") + f.describe();
        cr.evidence = "matching forms without a construction: " + fs;
      }
    }
    cert.cases.push_back(std::move(cr));
  }

  // (2) isosceles ABC tiled by a right-angled tile
  {
    CaseResult cr;
    cr.angle_case = AngleCase::RightTileIsosceles;
    cr.rule =
        "an isosceles triangle N-tiled by a right-angled tile forces N to be "
        "a square, a sum of two squares, or six times a square";
    cr.citation = "companion isosceles-tilings results";
    bool matches = is_square_int(N) || sum_of_two_squares_allowing_zero(N) ||
                   (N % 6 == 0 && is_square_int(N / 6));
    cr.status = matches ? CaseStatus::Inconclusive : CaseStatus::ImpossibleCited;
    cr.evidence = matches ? "a listed form matches N" : "no listed form matches N";
    cert.cases.push_back(std::move(cr));
  }

  // (3) isosceles ABC, gamma = 2*alpha
  {
    CaseResult cr;
    cr.angle_case = AngleCase::GammaEquals2Alpha;
    cr.rule = "in this case N is neither prime nor twice a prime";
    cr.citation = "companion isosceles-tilings results";
    bool ruled_out = is_prime(N) || (N % 2 == 0 && is_prime(N / 2));
    cr.status =
        ruled_out ? CaseStatus::ImpossibleCited : CaseStatus::Inconclusive;
    cr.evidence = ruled_out ? "N is prime or twice a prime"
                            : "N is neither prime nor twice a prime";
    cert.cases.push_back(std::move(cr));
  }

  // (4) 3a + 2b = pi: exhaustive exact search, both shapes.  Skipped when a
  // verified construction already settles existence: the search result
  // cannot change an overall TilingExists.
  {
    CaseResult cr;
    cr.angle_case = AngleCase::ThreeAlphaTwoBeta;
    cr.rule =
        "exhaustive search over coloring parameters and boundary "
        "decompositions for exact coloring+area solutions";
    if (cert.witness) {
      cr.status = CaseStatus::Inconclusive;
      cr.evidence = "search skipped: N is realized by a verified construction";
    } else {
      SearchOptions opts;
      opts.jobs = jobs;
      auto iso = search_isosceles(N, opts);
      auto sca = search_scalene(N, opts);
      size_t hits = iso.hits.size() + sca.hits.size();
      cr.status = hits == 0 ? CaseStatus::ImpossibleComputed
                            : CaseStatus::Inconclusive;
      cr.evidence = "isosceles hits=" + std::to_string(iso.hits.size()) +
                    " digest=" + hits_digest(iso.hits) +
                    "; scalene hits=" + std::to_string(sca.hits.size()) +
                    " digest=" + hits_digest(sca.hits);
    }
    cert.cases.push_back(std::move(cr));
  }

  // (5) gamma = 2pi/3 (any ABC), plus the computed equilateral subcase
  {
    CaseResult cr;
    cr.angle_case = AngleCase::GammaTwoPiOver3;
    cr.rule = "a tile with a 2pi/3 angle needs N >= 12";
    cr.citation = "area bound via the two-c-edges lemma";
    auto cands = find_candidates(N, Gamma::TwoPiOver3, jobs);
    std::string eq = "equilateral-subcase candidates=" +
                     std::to_string(cands.size());
    if (N < 12) {
      cr.status = CaseStatus::ImpossibleCited;
      cr.evidence = "N < 12; " + eq;
    } else {
      cr.status = CaseStatus::Inconclusive;
      cr.evidence = "N >= 12, no closed rule applies; " + eq;
    }
    cert.cases.push_back(std::move(cr));
  }

  // (6) equilateral ABC, tile angle pi/3: computed candidate scan
  {
    CaseResult cr;
    cr.angle_case = AngleCase::GammaPiOver3Equilateral;
    cr.rule =
        "rational-tile candidate scan of the squared area equation over all "
        "boundary decompositions within the p+q+r bound";
    auto cands = find_candidates(N, Gamma::PiOver3, jobs);
    cr.status = cands.empty() ? CaseStatus::ImpossibleComputed
                              : CaseStatus::Inconclusive;
    std::string tiles;
    for (const auto& c : cands)
      tiles += " (" + std::to_string(c.tile.a) + "," + std::to_string(c.tile.b) +
               "," + std::to_string(c.tile.c) + ")";
    cr.evidence = "candidates=" + std::to_string(cands.size()) + tiles;
    cert.cases.push_back(std::move(cr));
  }

  bool any_exists = false, all_impossible = true;
  for (const auto& c : cert.cases) {
    if (c.status == CaseStatus::TilingExists) any_exists = true;
    if (c.status != CaseStatus::ImpossibleComputed &&
        c.status != CaseStatus::ImpossibleCited)
      all_impossible = false;
  }
  cert.overall = any_exists ? Overall::TilingExists
                            : (all_impossible ? Overall::NoTiling
                                              : Overall::Unknown);
  return cert;
}

std::string certificate_to_json(const VerdictCertificate& cert) {
  nlohmann::json j;
  j["n"] = cert.n;
  j["overall"] = to_string(cert.overall);
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : cert.cases) {
    nlohmann::json cj;
    cj["case"] = to_string(c.angle_case);
    cj["status"] = to_string(c.status);
    cj["rule"] = c.rule;
    if (!c.citation.empty()) cj["citation"] = c.citation;
    cj["evidence"] = c.evidence;
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  if (cert.witness) {
    j["witness_family"] = cert.witness_family;
    j["witness_tiles"] = cert.witness->tile_count();
  }
  return j.dump(1);
}

}  // namespace tileprove
