#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tileprove/quadext.hpp"

namespace tileprove {

// Exhaustive exact search for parameter assignments consistent with both the
// coloring equation M(2+s-s^2) = Ps + Q(1-s^2) + R and an area equation, for
// tiles with 3a+2b = pi.  An empty result for a given N certifies that no
// N-tiling exists in this angle case; hits mean the method is inconclusive.

enum class SearchVariant { IsoscelesBaseAlpha, IsoscelesBaseBeta, Scalene };
enum class AreaEquation { BisAlpha, BisBeta };

std::string to_string(SearchVariant v);
std::string to_string(AreaEquation a);

struct ColoringParams {
  int M = 0, P = 0, Q = 0, R = 0;
};

struct BoundaryDecomposition {
  int p = 0, q = 0, r = 0;   // side X = pa + qb + rc
  int u = 0, v = 0, w = 0;   // side Z = ua + vb + wc
  int k = 0, ell = 0, m = 0; // side Y = ka + ell*b + mc
};

struct SearchHit {
  SearchVariant variant;
  ColoringParams params;
  BoundaryDecomposition dec;
  QuadExt s;
  AreaEquation which_area;
};

struct SearchOptions {
  int jobs = 1;
  bool debug_no_pruning = false;  // drop c-edge lower limits and the cutoff
  std::function<void(const std::string&)> progress;  // --verbose sink
};

struct SearchResult {
  std::vector<SearchHit> hits;       // sorted on (M,P,Q,R,p,q,r,u,v,w,s,area)
  long degenerate_tuples = 0;        // identically-zero coloring quadratics
};

/// Coefficients (Q-M, M-P, 2M-Q-R) of the coloring equation as a quadratic
/// in s.
std::array<Rational, 3> coloring_quadratic(const ColoringParams& params);

/// (X*Z - N(1-s^2), X*Z - N*s) with X = r + p*s + q(1-s^2) and
/// Z = w + u*s + v(1-s^2), computed exactly in the field of s.
/// Throws std::domain_error for s outside (0,1).
std::pair<QuadExt, QuadExt> area_residuals(const BoundaryDecomposition& dec,
                                           const QuadExt& s, int N);

SearchResult search_isosceles(int N, const SearchOptions& opts = {});
SearchResult search_scalene(int N, const SearchOptions& opts = {});

/// Deterministic digest of a hit list (FNV-1a over the canonical encoding).
std::string hits_digest(const std::vector<SearchHit>& hits);

}  // namespace tileprove
