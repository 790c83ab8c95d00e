#include "tileprove/numbertheory.hpp"

#include <cmath>
#include <stdexcept>

namespace tileprove {

namespace {

long long isqrtll(long long n) {
  if (n < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<long long> square_root_of(long long n) {
  long long r = isqrtll(n);
  if (r >= 0 && r * r == n) return r;
  return std::nullopt;
}

}  // namespace

long long NForm::reconstruct() const {
  switch (kind) {
    case NFormKind::Square: return e * e;
    case NFormKind::SumTwoSquares: return e * e + f * f;
    case NFormKind::TwiceSquare: return 2 * e * e;
    case NFormKind::ThriceSquare: return 3 * e * e;
    case NFormKind::SixTimesSquare: return 6 * e * e;
  }
  return 0;
}

std::string NForm::describe() const {
  switch (kind) {
    case NFormKind::Square: return "n^2 (n=" + std::to_string(e) + ")";
    case NFormKind::SumTwoSquares:
      return "e^2+f^2 (" + std::to_string(e) + "," + std::to_string(f) + ")";
    case NFormKind::TwiceSquare: return "2n^2 (n=" + std::to_string(e) + ")";
    case NFormKind::ThriceSquare: return "3n^2 (n=" + std::to_string(e) + ")";
    case NFormKind::SixTimesSquare: return "6n^2 (n=" + std::to_string(e) + ")";
  }
  return {};
}

std::optional<std::pair<long long, long long>> is_sum_of_two_squares(long long n) {
  if (n < 2) return std::nullopt;
  for (long long e = isqrtll(n - 1); e >= 1 && e * e * 2 >= n; --e) {
    if (auto f = square_root_of(n - e * e); f && *f >= 1) return {{e, *f}};
  }
  return std::nullopt;
}

bool sum_of_two_squares_allowing_zero(long long n) {
  if (n == 0) return true;
  for (long long e = isqrtll(n); e >= 1 && e * e * 2 >= n; --e)
    if (square_root_of(n - e * e)) return true;
  return false;
}

std::vector<NForm> forms_of(long long n) {
  if (n < 1) throw std::invalid_argument("forms_of needs n >= 1");
  std::vector<NForm> out;
  if (auto r = square_root_of(n)) out.push_back({NFormKind::Square, *r, 0});
  if (auto w = is_sum_of_two_squares(n))
    out.push_back({NFormKind::SumTwoSquares, w->first, w->second});
  if (n % 2 == 0)
    if (auto r = square_root_of(n / 2)) out.push_back({NFormKind::TwiceSquare, *r, 0});
  if (n % 3 == 0)
    if (auto r = square_root_of(n / 3)) out.push_back({NFormKind::ThriceSquare, *r, 0});
  if (n % 6 == 0)
    if (auto r = square_root_of(n / 6)) out.push_back({NFormKind::SixTimesSquare, *r, 0});
  return out;
}

}  // namespace tileprove
