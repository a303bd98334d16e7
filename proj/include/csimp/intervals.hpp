#pragma once

// Canonical orderings of the intervals i < j and triples i < j < k of [n].
// Intervals are sorted by (j - i, i): for n = 2 the order is (0,1), (1,2), (0,2).
// Triples are sorted lexicographically.

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace csimp {

using Interval = std::pair<std::size_t, std::size_t>;
using Triple = std::array<std::size_t, 3>;

/// Levels with cached interval and triple lists.
inline constexpr std::size_t kIndexedLevels = 16;

constexpr std::size_t interval_count(std::size_t n) noexcept { return n * (n + 1) / 2; }

constexpr std::size_t interval_index(std::size_t n, std::size_t i, std::size_t j) noexcept {
  std::size_t const len = j - i;
  return (len - 1) * (n + 1) - (len - 1) * len / 2 + i;
}

inline std::vector<Interval> const& intervals(std::size_t n) {
  static auto const table = [] {
    std::array<std::vector<Interval>, kIndexedLevels> t;
    for (std::size_t m = 0; m < kIndexedLevels; ++m)
      for (std::size_t len = 1; len <= m; ++len)
        for (std::size_t i = 0; i + len <= m; ++i) t[m].emplace_back(i, i + len);
    return t;
  }();
  return table.at(n);
}

constexpr std::size_t triple_count(std::size_t n) noexcept {
  return (n + 1) * n * (n - (n > 0 ? 1 : 0)) / 6;
}

inline std::vector<Triple> const& triples(std::size_t n) {
  static auto const table = [] {
    std::array<std::vector<Triple>, kIndexedLevels> t;
    for (std::size_t m = 0; m < kIndexedLevels; ++m)
      for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j)
          for (std::size_t k = j + 1; k <= m; ++k) t[m].push_back({i, j, k});
    return t;
  }();
  return table.at(n);
}

/// Position of (i, j, k) in `triples(n)`.
inline std::size_t triple_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  std::size_t idx = 0;
  for (std::size_t a = 0; a < i; ++a) {
    std::size_t const rest = n - a;  // vertices above a
    idx += rest * (rest - 1) / 2;
  }
  for (std::size_t b = i + 1; b < j; ++b) idx += n - b;
  return idx + (k - j - 1);
}

}  // namespace csimp
