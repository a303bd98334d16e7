#pragma once

// Index-coded truncated simplicial sets. A SimplicialTable stores, per
// level, the face and degeneracy operators as lookup tables on simplex
// indices; general monotone maps act through their epi-mono factorization.
// Tables are built from any SimplicialModel and may be edited afterwards
// (fault injection in tests).

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "csimp/error.hpp"
#include "csimp/monotone.hpp"
#include "csimp/simplicial.hpp"

namespace csimp {

struct SimplexCode {
  std::size_t dim = 0;
  std::size_t index = 0;
  std::size_t level() const noexcept { return dim; }
  auto operator<=>(SimplexCode const&) const = default;
};

class SimplicialTable {
 public:
  using simplex_type = SimplexCode;

  std::size_t top_level() const noexcept { return sizes_.empty() ? 0 : sizes_.size() - 1; }
  std::size_t size(std::size_t n) const { return sizes_.at(n); }

  std::vector<SimplexCode> level(std::size_t n) const {
    std::vector<SimplexCode> out(sizes_.at(n));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = {n, k};
    return out;
  }

  std::size_t d(std::size_t n, std::size_t i, std::size_t x) const { return faces_[n][i][x]; }
  std::size_t s(std::size_t n, std::size_t i, std::size_t x) const {
    if (n + 1 > top_level()) throw Error(Errc::LevelOutOfRange, "degeneracy leaves the truncation");
    return degeneracies_[n][i][x];
  }

  SimplexCode act(MonotoneMap const& xi, SimplexCode const& x) const {
    if (x.dim != xi.codomain_top()) throw Error(Errc::DomainMismatch, "simplex level mismatch");
    if (xi.domain_top() > top_level()) throw Error(Errc::LevelOutOfRange, "map leaves the truncation");
    auto const f = factor(xi);
    std::size_t level = x.dim;
    std::size_t idx = x.index;
    for (auto it = f.omitted.rbegin(); it != f.omitted.rend(); ++it) idx = d(level--, *it, idx);
    for (std::size_t j : f.repeated) idx = s(level++, j, idx);
    return {level, idx};
  }

  bool is_nondegenerate(std::size_t n, std::size_t x) const { return nondegenerate_[n][x]; }
  std::vector<std::size_t> nondegenerate(std::size_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < sizes_.at(n); ++x)
      if (nondegenerate_[n][x]) out.push_back(x);
    return out;
  }

  /// Simplices at level n whose face tuple equals `faces` (n >= 1).
  std::vector<std::size_t> fillers(std::size_t n, std::vector<std::size_t> const& faces) const {
    auto const& order = by_faces_.at(n);
    auto const [lo, hi] = std::equal_range(order.begin(), order.end(), faces, FaceLess{this, n});
    return {lo, hi};
  }

  std::vector<std::size_t> face_tuple(std::size_t n, std::size_t x) const {
    std::vector<std::size_t> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) out[i] = d(n, i, x);
    return out;
  }

  // Fault injection hooks; these deliberately bypass every invariant.
  void set_face(std::size_t n, std::size_t i, std::size_t x, std::size_t y) {
    faces_.at(n).at(i).at(x) = y;
  }
  void set_degeneracy(std::size_t n, std::size_t i, std::size_t x, std::size_t y) {
    degeneracies_.at(n).at(i).at(x) = y;
  }

  template <SimplicialModel S>
  friend class Tabulated;

 private:
  std::vector<std::size_t> sizes_;
  // faces_[n][i][x] = index of d_i x at level n-1 (empty for n = 0)
  std::vector<std::vector<std::vector<std::size_t>>> faces_;
  // degeneracies_[n][i][x] = index of s_i x at level n+1 (empty at the top)
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies_;
  std::vector<std::vector<bool>> nondegenerate_;
  // by_faces_[n] = indices of level n sorted by face tuple, as built
  std::vector<std::vector<std::size_t>> by_faces_;

  struct FaceLess {
    SimplicialTable const* t;
    std::size_t n;
    bool operator()(std::size_t x, std::size_t y) const {
      for (std::size_t i = 0; i <= n; ++i)
        if (t->d(n, i, x) != t->d(n, i, y)) return t->d(n, i, x) < t->d(n, i, y);
      return false;
    }
    bool operator()(std::size_t x, std::vector<std::size_t> const& f) const {
      for (std::size_t i = 0; i <= n; ++i)
        if (t->d(n, i, x) != f[i]) return t->d(n, i, x) < f[i];
      return false;
    }
    bool operator()(std::vector<std::size_t> const& f, std::size_t x) const {
      for (std::size_t i = 0; i <= n; ++i)
        if (f[i] != t->d(n, i, x)) return f[i] < t->d(n, i, x);
      return false;
    }
  };
};

/// A SimplicialTable that remembers the model's simplices in canonical
/// (sorted) order, so codes translate back to values.
template <SimplicialModel S>
class Tabulated {
 public:
  using value_type = typename S::simplex_type;

  Tabulated(S const& model, std::size_t top) {
    if (top > model.top_level()) throw Error(Errc::LevelOutOfRange, "model truncated below requested level");
    simplices_.resize(top + 1);
    auto& t = table_;
    t.sizes_.resize(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
      simplices_[n] = model.level(n);
      if (!std::is_sorted(simplices_[n].begin(), simplices_[n].end()))
        std::sort(simplices_[n].begin(), simplices_[n].end());
      t.sizes_[n] = simplices_[n].size();
    }
    t.faces_.resize(top + 1);
    t.degeneracies_.resize(top + 1);
    t.nondegenerate_.resize(top + 1);
    t.by_faces_.resize(top + 1);
    for (std::size_t n = 0; n <= top; ++n) {
      if (n >= 1) {
        t.faces_[n].assign(n + 1, std::vector<std::size_t>(t.sizes_[n]));
        for (std::size_t i = 0; i <= n; ++i) {
          auto const delta = face_map(i, n);
          for (std::size_t x = 0; x < t.sizes_[n]; ++x)
            t.faces_[n][i][x] = index_of(model.act(delta, simplices_[n][x]));
        }
      }
      if (n + 1 <= top) {
        t.degeneracies_[n].assign(n + 1, std::vector<std::size_t>(t.sizes_[n]));
        for (std::size_t i = 0; i <= n; ++i) {
          auto const sigma = degeneracy_map(i, n);
          for (std::size_t x = 0; x < t.sizes_[n]; ++x)
            t.degeneracies_[n][i][x] = index_of(model.act(sigma, simplices_[n][x]));
        }
      }
    }
    for (std::size_t n = 0; n <= top; ++n) {
      t.nondegenerate_[n].assign(t.sizes_[n], true);
      if (n >= 1) {
        for (std::size_t x = 0; x < t.sizes_[n]; ++x)
          for (std::size_t i = 0; i < n; ++i)
            if (t.degeneracies_[n - 1][i][t.faces_[n][i][x]] == x) t.nondegenerate_[n][x] = false;
        auto& order = t.by_faces_[n];
        order.resize(t.sizes_[n]);
        for (std::size_t x = 0; x < t.sizes_[n]; ++x) order[x] = x;
        std::sort(order.begin(), order.end(), SimplicialTable::FaceLess{&t, n});
      }
    }
  }

  SimplicialTable const& table() const noexcept { return table_; }
  SimplicialTable& table() noexcept { return table_; }
  value_type const& simplex(std::size_t n, std::size_t x) const { return simplices_.at(n).at(x); }
  std::vector<value_type> const& simplices(std::size_t n) const { return simplices_.at(n); }

  std::size_t index_of(value_type const& v) const {
    auto const& level = simplices_.at(v.level());
    auto const it = std::lower_bound(level.begin(), level.end(), v);
    if (it == level.end() || !(*it == v)) throw Error(Errc::InvalidInput, "simplex not present at its level");
    return static_cast<std::size_t>(it - level.begin());
  }

 private:
  SimplicialTable table_;
  std::vector<std::vector<value_type>> simplices_;
};

/// All compatible n-boundaries built from level n-1, in lexicographic order
/// of their index tuples; stops after `limit` boundaries (0 = no limit).
inline std::vector<std::vector<std::size_t>> enumerate_boundaries(SimplicialTable const& t, std::size_t n,
                                                                  std::size_t limit = 0) {
  if (n < 1 || n > t.top_level() + 1) throw Error(Errc::LevelOutOfRange, "boundary dimension out of range");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::size_t const lower = n - 1;
  auto extend = [&](auto&& self) -> bool {
    std::size_t const k = cur.size();
    if (k == n + 1) {
      out.push_back(cur);
      return limit == 0 || out.size() < limit;
    }
    for (std::size_t y = 0; y < t.size(lower); ++y) {
      // new entry x_k must satisfy d_{k-1}(x_i) = d_i(x_k) for all i < k
      bool ok = true;
      if (lower >= 1) {
        for (std::size_t i = 0; i < k && ok; ++i)
          ok = t.d(lower, k - 1, cur[i]) == t.d(lower, i, y);
      }
      if (!ok) continue;
      cur.push_back(y);
      bool const more = self(self);
      cur.pop_back();
      if (!more) return false;
    }
    return true;
  };
  extend(extend);
  return out;
}

struct CoskeletalReport {
  bool ok = true;
  std::size_t boundaries = 0;
  std::size_t missing = 0;   // boundaries without a filler
  std::size_t multiple = 0;  // boundaries with more than one filler
};

/// Checks that every (sampled) n-boundary has exactly one filler.
inline CoskeletalReport check_unique_fillers(SimplicialTable const& t, std::size_t n, std::size_t limit = 0) {
  if (n > t.top_level()) throw Error(Errc::LevelOutOfRange, "fillers need level n tabulated");
  CoskeletalReport r;
  for (auto const& b : enumerate_boundaries(t, n, limit)) {
    ++r.boundaries;
    auto const count = t.fillers(n, b).size();
    if (count == 0) ++r.missing;
    if (count > 1) ++r.multiple;
  }
  r.ok = r.missing == 0 && r.multiple == 0;
  return r;
}

}  // namespace csimp
