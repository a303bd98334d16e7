#pragma once

// Enumeration of simplicial maps between truncated simplicial sets.
//
// A map is chosen on non-degenerate simplices only, level by level; a
// candidate image y for a non-degenerate x is accepted iff d_i(y) = f(d_i x)
// for every i. Degenerate simplices are then forced: x = s_j(d_j x) gives
// f(x) = s_j(f(d_j x)).

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "csimp/error.hpp"
#include "csimp/monotone.hpp"
#include "csimp/tabulated.hpp"

namespace csimp {

/// values[n][x] = f(x) for every x in X_n, 0 <= n <= r.
struct TruncatedMap {
  std::vector<std::vector<std::size_t>> values;

  std::size_t operator()(std::size_t n, std::size_t x) const { return values[n][x]; }
  auto operator<=>(TruncatedMap const&) const = default;
};

/// A rejected candidate and the face index where it disagreed.
struct RejectionWitness {
  std::size_t level = 0;
  std::size_t source = 0;     // non-degenerate x in X_level
  std::size_t candidate = 0;  // y in Y_level
  std::size_t face = 0;       // d_face(y) != f(d_face x)
  std::size_t expected = 0;   // f(d_face x) at the time of rejection
};

struct MapEnumeration {
  std::vector<TruncatedMap> maps;
  std::size_t candidates_tried = 0;
  std::size_t rejected = 0;
  std::vector<RejectionWitness> witnesses;  // first few rejections
  std::size_t coskeletal_boundaries_checked = 0;
};

struct MapEnumerationOptions {
  /// When set, Y must be tabulated to level r + 1 and every sampled
  /// (r+1)-boundary must have exactly one filler; otherwise NotCoskeletal.
  bool assert_coskeletal = false;
  std::size_t coskeletal_sample = 2000;
  std::size_t max_witnesses = 64;
};

namespace detail {

/// Extends f from non-degenerate simplices of level n to all of level n.
inline void fill_degenerate(SimplicialTable const& X, SimplicialTable const& Y, std::size_t n,
                            TruncatedMap& f) {
  for (std::size_t x = 0; x < X.size(n); ++x) {
    if (X.is_nondegenerate(n, x)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t const base = X.d(n, j, x);
      if (X.s(n - 1, j, base) == x) {
        f.values[n][x] = Y.s(n - 1, j, f.values[n - 1][base]);
        break;
      }
    }
  }
}

}  // namespace detail

inline MapEnumeration enumerate_truncated_maps(SimplicialTable const& X, SimplicialTable const& Y,
                                               std::size_t r, MapEnumerationOptions const& opt = {}) {
  if (r > X.top_level() || r > Y.top_level()) {
    throw Error(Errc::LevelOutOfRange, "both sets must be tabulated to level " + std::to_string(r));
  }
  MapEnumeration out;
  if (opt.assert_coskeletal) {
    if (Y.top_level() < r + 1) {
      throw Error(Errc::NotCoskeletal, "target not tabulated above the truncation level");
    }
    auto const rep = check_unique_fillers(Y, r + 1, opt.coskeletal_sample);
    out.coskeletal_boundaries_checked = rep.boundaries;
    if (!rep.ok) {
      throw Error(Errc::NotCoskeletal, std::to_string(rep.missing) + " unfilled and " +
                                           std::to_string(rep.multiple) + " multiply filled boundaries at level " +
                                           std::to_string(r + 1));
    }
  }

  // Work list: every non-degenerate simplex of X, ordered by level.
  struct Slot {
    std::size_t level;
    std::size_t x;
  };
  std::vector<Slot> slots;
  for (std::size_t n = 0; n <= r; ++n)
    for (std::size_t x : X.nondegenerate(n)) slots.push_back({n, x});

  TruncatedMap f;
  f.values.resize(r + 1);
  for (std::size_t n = 0; n <= r; ++n) f.values[n].assign(X.size(n), 0);

  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == slots.size()) {
      for (std::size_t n = 1; n <= r; ++n) detail::fill_degenerate(X, Y, n, f);
      out.maps.push_back(f);
      return;
    }
    auto const [n, x] = slots[k];
    // Entering a new level: everything below is now determined.
    if (k == 0 || slots[k - 1].level != n) {
      for (std::size_t m = 1; m < n; ++m) detail::fill_degenerate(X, Y, m, f);
    }
    for (std::size_t y = 0; y < Y.size(n); ++y) {
      ++out.candidates_tried;
      bool ok = true;
      for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
        if (Y.d(n, i, y) != f.values[n - 1][X.d(n, i, x)]) {
          ok = false;
          ++out.rejected;
          if (out.witnesses.size() < opt.max_witnesses)
            out.witnesses.push_back({n, x, y, i, f.values[n - 1][X.d(n, i, x)]});
          break;
        }
      }
      if (!ok) continue;
      f.values[n][x] = y;
      self(self, k + 1);
    }
  };
  search(search, 0);
  std::sort(out.maps.begin(), out.maps.end());
  return out;
}

/// Independent re-check: f commutes with the action of every monotone map
/// between levels <= r. Returns an empty string on success, else a witness.
inline std::string naturality_violation(SimplicialTable const& X, SimplicialTable const& Y, std::size_t r,
                                        TruncatedMap const& f) {
  for (std::size_t n = 0; n <= r; ++n) {
    for (std::size_t m = 0; m <= r; ++m) {
      for (auto const& xi : all_monotone_maps(m, n)) {
        for (std::size_t x = 0; x < X.size(n); ++x) {
          auto const lhs = Y.act(xi, {n, f.values[n][x]});
          auto const rhs = X.act(xi, {n, x});
          if (lhs.index != f.values[m][rhs.index]) {
            return "naturality fails for " + xi.to_string() + " at simplex " + std::to_string(x) +
                   " of level " + std::to_string(n);
          }
        }
      }
    }
  }
  return {};
}

/// Values of f on the non-degenerate simplices of X, level by level.
inline std::vector<std::size_t> nondegenerate_values(SimplicialTable const& X, TruncatedMap const& f) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < f.values.size(); ++n)
    for (std::size_t x : X.nondegenerate(n)) out.push_back(f.values[n][x]);
  return out;
}

}  // namespace csimp
