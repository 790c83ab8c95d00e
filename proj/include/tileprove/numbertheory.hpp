#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tileprove/rational.hpp"

namespace tileprove {

/// Closed forms of N admitting tilings with commensurable angles.
enum class NFormKind {
  Square,          // n^2
  SumTwoSquares,   // e^2 + f^2, e >= f >= 1
  TwiceSquare,     // 2 n^2
  ThriceSquare,    // 3 n^2
  SixTimesSquare,  // 6 n^2
};

struct NForm {
  NFormKind kind;
  long long e = 0;  // witness; (n, 0) for the pure-square kinds
  long long f = 0;

  long long reconstruct() const;
  std::string describe() const;
  friend bool operator==(const NForm&, const NForm&) = default;
};

/// Witness (e, f) with e^2 + f^2 = n and e >= f >= 1, largest e first;
/// nullopt when no such decomposition exists.
std::optional<std::pair<long long, long long>> is_sum_of_two_squares(long long n);

/// As above but allowing f = 0 (the classical representability notion).
bool sum_of_two_squares_allowing_zero(long long n);

/// Every form n matches, deterministic order (enum order) and witness
/// (lexicographically largest e).
std::vector<NForm> forms_of(long long n);

}  // namespace tileprove
