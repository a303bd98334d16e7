#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "csimp/catalan/lax_matrix.hpp"
#include "csimp/error.hpp"
#include "csimp/simplicial.hpp"

namespace csimp::catalan {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;  // exact at every step
  return r;
}

/// C_m = binom(2m, m) / (m + 1).
inline std::uint64_t catalan_number(std::uint64_t m) { return binomial(2 * m, m) / (m + 1); }

/// Motzkin numbers M_0 .. M_13 as tabulated in the literature.
inline constexpr std::array<std::uint64_t, 14> kMotzkinReference = {
    1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835};

/// M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}; used past the table.
inline std::vector<std::uint64_t> motzkin_numbers(std::size_t n_max) {
  std::vector<std::uint64_t> m(n_max + 1, 1);
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::uint64_t s = m[n - 1];
    for (std::size_t k = 0; k + 2 <= n; ++k) s += m[k] * m[n - 2 - k];
    m[n] = s;
  }
  return m;
}

struct ReferenceCounts {
  std::vector<std::uint64_t> catalan;  // catalan[n] = C_{n+1} = |ℂ_n|
  std::vector<std::uint64_t> motzkin;  // motzkin[n] = M_n = nondegenerate n-simplices
};

inline ReferenceCounts reference_counts(std::size_t n_max) {
  ReferenceCounts r;
  auto const computed = motzkin_numbers(n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    r.catalan.push_back(catalan_number(n + 1));
    r.motzkin.push_back(n < kMotzkinReference.size() ? kMotzkinReference[n] : computed[n]);
  }
  return r;
}

inline void check_level(std::size_t n, std::size_t bound) {
  if (n > bound) throw Error(Errc::LevelTooLarge, "level " + std::to_string(n) + " above bound " + std::to_string(bound));
}

/// Number of enumerated n-simplices failing the generic degeneracy test.
inline std::uint64_t nondegenerate_count(std::size_t n, std::size_t bound = 10) {
  check_level(n, bound);
  if (n == 0) return 1;
  CatalanSet const c(std::max<std::size_t>(n, 1));
  std::uint64_t count = 0;
  for_each_simplex(n, [&](LaxMatrix const& x) {
    if (!is_degenerate(c, x)) ++count;
  });
  return count;
}

/// sum_m binom(n, m) * nd_m, the count predicted by the Eilenberg–Zilber
/// decomposition of each simplex as a degeneracy of a unique non-degenerate one.
inline std::uint64_t binomial_sum(std::size_t n, std::vector<std::uint64_t> const& nondegenerate) {
  std::uint64_t s = 0;
  for (std::size_t m = 0; m <= n; ++m) s += binomial(n, m) * nondegenerate.at(m);
  return s;
}

/// Counts endo-ideals B ⊇ 1_[n] through their staircase profile: B is fixed
/// by h(i) = max{ j : (j,i) ∈ B }, a weakly increasing sequence with
/// i <= h(i) <= n. Such profiles are Young diagrams fitting between the
/// diagonal and the top edge, counted here by dynamic programming.
inline std::uint64_t dyck_crosscheck(std::size_t n) {
  check_level(n, kMaxLevel);
  // ways[h] = number of valid prefixes h(0..i) ending at value h
  std::vector<std::uint64_t> ways(n + 1, 0);
  for (std::size_t h = 0; h <= n; ++h) ways[h] = 1;  // i = 0
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(n + 1, 0);
    std::uint64_t running = 0;
    for (std::size_t h = 0; h <= n; ++h) {
      running += ways[h];
      if (h >= i) next[h] = running;
    }
    ways = std::move(next);
  }
  return ways[n];
}

struct LevelCount {
  std::uint64_t total = 0;
  std::uint64_t nondegenerate = 0;
};

/// Streams level n with the direct degeneracy criterion, split across
/// `workers` threads by the bits of the length-one intervals (which are
/// unconstrained, so every prefix is realised).
inline LevelCount count_level(std::size_t n, unsigned workers = 1) {
  check_level(n, kMaxLevel);
  if (n == 0) return {1, 1};
  std::size_t const prefix_len = std::min<std::size_t>(n, 12);
  std::size_t const prefixes = std::size_t{1} << prefix_len;
  workers = std::max(1u, workers);
  std::vector<LevelCount> partial(workers);
  auto run = [&](unsigned w) {
    for (std::size_t p = w; p < prefixes; p += workers) {
      std::vector<int> prefix(prefix_len);
      for (std::size_t k = 0; k < prefix_len; ++k) prefix[k] = (p >> (prefix_len - 1 - k)) & 1;
      for_each_simplex(
          n,
          [&](LaxMatrix const& x) {
            ++partial[w].total;
            if (!is_degenerate_direct(x)) ++partial[w].nondegenerate;
          },
          prefix);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  LevelCount sum;
  for (auto const& c : partial) {
    sum.total += c.total;
    sum.nondegenerate += c.nondegenerate;
  }
  return sum;
}

}  // namespace csimp::catalan
