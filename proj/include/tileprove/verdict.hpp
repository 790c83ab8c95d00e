#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tileprove/tile.hpp"
#include "tileprove/tiling.hpp"

namespace tileprove {

enum class CaseStatus {
  ImpossibleComputed,  // an exhaustive search here returned empty
  ImpossibleCited,     // ruled out by a cited classification result
  Inconclusive,        // neither ruled out nor realized
  TilingExists,        // realized by a verifier-passing construction
};

std::string to_string(CaseStatus s);

struct CaseResult {
  AngleCase angle_case;
  CaseStatus status;
  std::string rule;      // the mathematical rule applied, in words
  std::string citation;  // source key for cited rules, "" for computed ones
  std::string evidence;  // search digest / witness summary / hit counts
};

enum class Overall { NoTiling, TilingExists, Unknown };

std::string to_string(Overall o);

struct VerdictCertificate {
  int n = 0;
  Overall overall = Overall::Unknown;
  std::vector<CaseResult> cases;
  std::optional<Tiling> witness;  // a verified tiling when one was built
  std::string witness_family;
};

/// Case analysis for N-tilings: the commensurable classifier plus the five
/// incommensurable angle cases, each either computed (searches) or cited
/// (classification theorems), with a constructed witness when a closed form
/// of N admits one.  3 <= N <= 100.
VerdictCertificate verdict(int N, int jobs = 1);

std::string certificate_to_json(const VerdictCertificate& cert);

/// Attempts a verified construction for N from its closed forms; used by
/// verdict and the informational table.
std::optional<std::pair<Tiling, std::string>> construct_for(int N);

}  // namespace tileprove
