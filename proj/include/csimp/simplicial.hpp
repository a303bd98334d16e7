#pragma once

// Generic machinery for finite truncated simplicial sets.
//
// A model provides its simplices level by level and a contravariant action
// of monotone maps. Faces and degeneracies are the action of the generators:
//   d_i(x) = act(δ_i, x),   s_i(x) = act(σ_i, x).

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "csimp/error.hpp"
#include "csimp/monotone.hpp"

namespace csimp {

template <class S>
concept SimplicialModel =
    std::totally_ordered<typename S::simplex_type> &&
    requires(S const& s, std::size_t n, MonotoneMap const& f, typename S::simplex_type const& x) {
      { s.top_level() } -> std::convertible_to<std::size_t>;
      { s.level(n) } -> std::convertible_to<std::vector<typename S::simplex_type>>;
      { s.act(f, x) } -> std::convertible_to<typename S::simplex_type>;
      { x.level() } -> std::convertible_to<std::size_t>;
    };

template <SimplicialModel S>
typename S::simplex_type face(S const& s, std::size_t i, typename S::simplex_type const& x) {
  return s.act(face_map(i, x.level()), x);
}

template <SimplicialModel S>
typename S::simplex_type degeneracy(S const& s, std::size_t i, typename S::simplex_type const& x) {
  return s.act(degeneracy_map(i, x.level()), x);
}

/// True iff x = s_i(d_i(x)) for some i. This is equivalent to x lying in the
/// image of some s_i, since s_i(y) = x forces y = d_i(x).
template <SimplicialModel S>
bool is_degenerate(S const& s, typename S::simplex_type const& x) {
  std::size_t const n = x.level();
  if (n < 1 || n > s.top_level()) {
    throw Error(Errc::LevelOutOfRange, "degeneracy test needs 1 <= n <= top level, got " +
                                           std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (degeneracy(s, i, face(s, i, x)) == x) return true;
  }
  return false;
}

template <SimplicialModel S>
std::vector<typename S::simplex_type> nondegenerate_simplices(S const& s, std::size_t n) {
  auto all = s.level(n);
  if (n == 0) return all;
  std::erase_if(all, [&](auto const& x) { return is_degenerate(s, x); });
  return all;
}

/// Exhaustive check of the simplicial identities on every simplex of level
/// <= n_max; only composites that stay within the truncation are tested.
struct IdentityReport {
  bool ok = true;
  std::size_t checks = 0;
  std::string first_violation;  // empty when ok
};

template <SimplicialModel S>
IdentityReport verify_simplicial_identities(S const& s, std::size_t n_max) {
  if (n_max > s.top_level()) {
    throw Error(Errc::LevelOutOfRange, "n_max exceeds the truncation");
  }
  IdentityReport report;
  auto fail = [&](std::string const& law, std::size_t i, std::size_t j, std::size_t n) {
    if (report.ok) {
      report.ok = false;
      report.first_violation = law + " with i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                               " on a " + std::to_string(n) + "-simplex";
    }
  };
  std::size_t const top = s.top_level();
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (auto const& x : s.level(n)) {
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2) {
        for (std::size_t j = 1; j <= n; ++j)
          for (std::size_t i = 0; i < j; ++i) {
            ++report.checks;
            if (face(s, i, face(s, j, x)) != face(s, j - 1, face(s, i, x)))
              fail("d_i d_j = d_{j-1} d_i", i, j, n);
          }
      }
      // s_i s_j = s_{j+1} s_i for i <= j
      if (n + 2 <= top) {
        for (std::size_t j = 0; j <= n; ++j)
          for (std::size_t i = 0; i <= j; ++i) {
            ++report.checks;
            if (degeneracy(s, i, degeneracy(s, j, x)) != degeneracy(s, j + 1, degeneracy(s, i, x)))
              fail("s_i s_j = s_{j+1} s_i", i, j, n);
          }
      }
      if (n + 1 <= top) {
        for (std::size_t j = 0; j <= n; ++j) {
          auto const sj = degeneracy(s, j, x);
          for (std::size_t i = 0; i <= n + 1; ++i) {
            ++report.checks;
            if (i < j) {
              // d_i s_j = s_{j-1} d_i (needs n >= 1 for d_i on x)
              if (n >= 1 && face(s, i, sj) != degeneracy(s, j - 1, face(s, i, x)))
                fail("d_i s_j = s_{j-1} d_i", i, j, n);
            } else if (i == j || i == j + 1) {
              if (face(s, i, sj) != x) fail("d_i s_j = id", i, j, n);
            } else {
              if (face(s, i, sj) != degeneracy(s, j, face(s, i - 1, x)))
                fail("d_i s_j = s_j d_{i-1}", i, j, n);
            }
          }
        }
      }
    }
  }
  return report;
}

/// act(ξ ∘ ζ, x) = act(ζ, act(ξ, x)) for all ζ: [l] -> [m], ξ: [m] -> [n] with
/// l, m, n <= n_max, on every simplex. Returns the number of violations.
template <SimplicialModel S>
std::size_t functoriality_violations(S const& s, std::size_t n_max) {
  std::size_t bad = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto const xs = s.level(n);
    for (std::size_t m = 0; m <= n_max; ++m) {
      for (auto const& xi : all_monotone_maps(m, n)) {
        std::vector<typename S::simplex_type> pulled;
        pulled.reserve(xs.size());
        for (auto const& x : xs) pulled.push_back(s.act(xi, x));
        for (std::size_t l = 0; l <= n_max; ++l) {
          for (auto const& zeta : all_monotone_maps(l, m)) {
            auto const both = compose_monotone(xi, zeta);
            for (std::size_t k = 0; k < xs.size(); ++k)
              if (s.act(both, xs[k]) != s.act(zeta, pulled[k])) ++bad;
          }
        }
      }
    }
  }
  return bad;
}

/// The terminal simplicial set: one simplex in every level.
struct PointSimplex {
  std::size_t n = 0;
  std::size_t level() const noexcept { return n; }
  auto operator<=>(PointSimplex const&) const = default;
};

class PointSet {
 public:
  using simplex_type = PointSimplex;
  explicit PointSet(std::size_t top) : top_(top) {}
  std::size_t top_level() const noexcept { return top_; }
  std::vector<PointSimplex> level(std::size_t n) const { return {PointSimplex{n}}; }
  PointSimplex act(MonotoneMap const& f, PointSimplex const&) const {
    return PointSimplex{f.domain_top()};
  }

 private:
  std::size_t top_;
};

/// An n-boundary: (n-1)-simplices (x_0, ..., x_n) with d_j(x_i) = d_i(x_{j+1})
/// for 0 <= i <= j < n.
template <class Simplex>
struct Boundary {
  std::size_t dimension = 0;
  std::vector<Simplex> entries;
};

template <SimplicialModel S>
bool is_compatible(S const& s, Boundary<typename S::simplex_type> const& b) {
  std::size_t const n = b.dimension;
  if (b.entries.size() != n + 1) return false;
  for (auto const& x : b.entries)
    if (x.level() + 1 != n) return false;
  if (n < 2) return true;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i)
      if (face(s, j, b.entries[i]) != face(s, i, b.entries[j + 1])) return false;
  return true;
}

template <SimplicialModel S>
Boundary<typename S::simplex_type> boundary_of(S const& s, typename S::simplex_type const& x) {
  Boundary<typename S::simplex_type> b{x.level(), {}};
  for (std::size_t i = 0; i <= x.level(); ++i) b.entries.push_back(face(s, i, x));
  return b;
}

}  // namespace csimp
