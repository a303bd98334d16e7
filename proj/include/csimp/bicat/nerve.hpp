#pragma once

// Nerves of strict locally-posetal inputs as truncated simplicial sets.
//
// Monoidal nerve N(B): an n-simplex has an object A_ij for every interval
// i < j and a 1-cell A_ijk : A_jk ⊗ A_ij -> A_ik for every triple, such that
// for every i < j < k < l
//     A_ijl ∘ (A_jkl ⊗ 1_{A_ij})  <=  A_ikl ∘ (1_{A_kl} ⊗ A_ijk).
// The 2-cell filling a 3-simplex is that inequality; the 4-simplex equation
// between such 2-cells holds automatically in a poset. Level 0 is a point.
//
// Plain nerve N(K): objects X_i per vertex and 1-cells A_ij : X_i -> X_j
// per interval with A_jk ∘ A_ij <= A_ik.
//
// Both act by pullback; collapsed intervals get I (resp. X_{ξp}) and
// collapsed triples get identity cells.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "csimp/bicat/structures.hpp"
#include "csimp/error.hpp"
#include "csimp/intervals.hpp"
#include "csimp/monotone.hpp"

namespace csimp::bicat {

inline constexpr std::size_t kMaxNerveLevel = 6;

struct NerveSimplex {
  std::size_t n = 0;
  std::vector<std::size_t> vertices;   // plain: X_i
  std::vector<std::size_t> intervals;  // monoidal: objects A_ij; plain: cells A_ij (canonical interval order)
  std::vector<std::size_t> triples;    // monoidal: cells A_ijk (lexicographic); plain: empty

  std::size_t level() const noexcept { return n; }
  std::size_t at(std::size_t i, std::size_t j) const { return intervals.at(interval_index(n, i, j)); }
  std::size_t at(std::size_t i, std::size_t j, std::size_t k) const { return triples.at(triple_index(n, i, j, k)); }
  auto operator<=>(NerveSimplex const&) const = default;
};

/// The 3-simplex condition on (i, j, k, l) inside s.
inline bool quadruple_holds(PosetalMonoidalBicat const& b, NerveSimplex const& s, std::size_t i, std::size_t j,
                            std::size_t k, std::size_t l) {
  auto const& K = b.bicat;
  auto const lhs = K.comp(s.at(i, j, l), b.tensor(s.at(j, k, l), K.id(s.at(i, j))));
  auto const rhs = K.comp(s.at(i, k, l), b.tensor(K.id(s.at(k, l)), s.at(i, j, k)));
  return K.le(lhs, rhs);
}

/// Whether s is a simplex of N(B): shapes, cell types and every quadruple.
inline bool is_nerve_simplex(PosetalMonoidalBicat const& b, NerveSimplex const& s) {
  std::size_t const n = s.n;
  if (!s.vertices.empty() || s.intervals.size() != interval_count(n) || s.triples.size() != triple_count(n))
    return false;
  auto const& K = b.bicat;
  for (auto x : s.intervals)
    if (x >= K.objects.size()) return false;
  for (auto const& [i, j, k] : triples(n)) {
    auto const c = s.at(i, j, k);
    if (c >= K.cells.size()) return false;
    if (K.cells[c].from != b.otensor(s.at(j, k), s.at(i, j)) || K.cells[c].to != s.at(i, k)) return false;
  }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k)
        for (std::size_t l = k + 1; l <= n; ++l)
          if (!quadruple_holds(b, s, i, j, k, l)) return false;
  return true;
}

inline bool is_nerve_simplex(PosetalBicat const& K, NerveSimplex const& s) {
  std::size_t const n = s.n;
  if (s.vertices.size() != n + 1 || s.intervals.size() != interval_count(n) || !s.triples.empty()) return false;
  for (auto x : s.vertices)
    if (x >= K.objects.size()) return false;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      auto const c = s.at(i, j);
      if (c >= K.cells.size() || K.cells[c].from != s.vertices[i] || K.cells[c].to != s.vertices[j]) return false;
    }
  for (auto const& [i, j, k] : triples(n))
    if (!K.le(K.comp(s.at(j, k), s.at(i, j)), s.at(i, k))) return false;
  return true;
}

inline NerveSimplex nerve_act(PosetalMonoidalBicat const& b, MonotoneMap const& xi, NerveSimplex const& s) {
  if (xi.codomain_top() != s.n) throw Error(Errc::DomainMismatch, "map codomain != simplex level");
  std::size_t const m = xi.domain_top();
  auto const& K = b.bicat;
  NerveSimplex out{m, {}, std::vector<std::size_t>(interval_count(m)), std::vector<std::size_t>(triple_count(m))};
  for (auto const& [p, q] : intervals(m))
    out.intervals[interval_index(m, p, q)] = xi(p) < xi(q) ? s.at(xi(p), xi(q)) : b.unit_object;
  for (auto const& [p, q, r] : triples(m)) {
    std::size_t cell;
    if (xi(p) < xi(q) && xi(q) < xi(r)) cell = s.at(xi(p), xi(q), xi(r));
    else cell = K.id(out.at(p, r));  // A'_pq or A'_qr is I, so A'_qr ⊗ A'_pq = A'_pr
    out.triples[triple_index(m, p, q, r)] = cell;
  }
  return out;
}

inline NerveSimplex nerve_act(PosetalBicat const& K, MonotoneMap const& xi, NerveSimplex const& s) {
  if (xi.codomain_top() != s.n) throw Error(Errc::DomainMismatch, "map codomain != simplex level");
  std::size_t const m = xi.domain_top();
  NerveSimplex out{m, std::vector<std::size_t>(m + 1), std::vector<std::size_t>(interval_count(m)), {}};
  for (std::size_t p = 0; p <= m; ++p) out.vertices[p] = s.vertices[xi(p)];
  for (auto const& [p, q] : intervals(m))
    out.intervals[interval_index(m, p, q)] = xi(p) < xi(q) ? s.at(xi(p), xi(q)) : K.id(out.vertices[p]);
  return out;
}

namespace detail {

inline void check_nerve_top(std::size_t top) {
  if (top > kMaxNerveLevel) throw Error(Errc::LevelTooLarge, "nerve level " + std::to_string(top));
}

inline std::vector<std::vector<std::vector<std::size_t>>> hom_table(PosetalBicat const& K) {
  std::size_t const no = K.objects.size();
  std::vector<std::vector<std::vector<std::size_t>>> h(no, std::vector<std::vector<std::size_t>>(no));
  for (std::size_t c = 0; c < K.cells.size(); ++c) h[K.cells[c].from][K.cells[c].to].push_back(c);
  return h;
}

}  // namespace detail

/// N(B) truncated at `top`, built level by level: every (n-1)-simplex is
/// extended by a new last vertex in all admissible ways.
class MonoidalNerve {
 public:
  using simplex_type = NerveSimplex;

  MonoidalNerve(PosetalMonoidalBicat b, std::size_t top) : b_(std::move(b)), top_(top) {
    detail::check_nerve_top(top);
    require_valid(b_);
    hom_ = detail::hom_table(b_.bicat);
    levels_.push_back({NerveSimplex{0, {}, {}, {}}});
    for (std::size_t n = 1; n <= top_; ++n) {
      std::vector<NerveSimplex> next;
      for (auto const& s : levels_.back()) extend(s, next);
      std::sort(next.begin(), next.end());
      levels_.push_back(std::move(next));
    }
  }

  std::size_t top_level() const noexcept { return top_; }
  std::vector<NerveSimplex> level(std::size_t n) const { return levels_.at(n); }
  NerveSimplex act(MonotoneMap const& xi, NerveSimplex const& s) const { return nerve_act(b_, xi, s); }
  PosetalMonoidalBicat const& input() const noexcept { return b_; }

 private:
  void extend(NerveSimplex const& old, std::vector<NerveSimplex>& out) const {
    std::size_t const n = old.n + 1;
    NerveSimplex s{n, {}, std::vector<std::size_t>(interval_count(n)), std::vector<std::size_t>(triple_count(n))};
    for (auto const& [i, j] : intervals(n - 1)) s.intervals[interval_index(n, i, j)] = old.at(i, j);
    for (auto const& [i, j, k] : triples(n - 1)) s.triples[triple_index(n, i, j, k)] = old.at(i, j, k);
    auto const& K = b_.bicat;
    // Choose A_in for i = n-1 .. 0; after each, A_ijn for j = n-1 .. i+1.
    auto choose_cell = [&](auto&& self_obj, auto&& self_cell, std::size_t i, std::size_t j) -> void {
      if (j == i) {
        if (i == 0) out.push_back(s);
        else self_obj(self_obj, self_cell, i - 1);
        return;
      }
      auto const from = b_.otensor(s.at(j, n), s.at(i, j));
      for (auto c : hom_[from][s.at(i, n)]) {
        s.triples[triple_index(n, i, j, n)] = c;
        bool ok = true;
        for (std::size_t k = j + 1; k < n && ok; ++k) ok = quadruple_holds(b_, s, i, j, k, n);
        if (ok) self_cell(self_obj, self_cell, i, j - 1);
      }
    };
    auto choose_obj = [&](auto&& self_obj, auto&& self_cell, std::size_t i) -> void {
      for (std::size_t x = 0; x < K.objects.size(); ++x) {
        s.intervals[interval_index(n, i, n)] = x;
        self_cell(self_obj, self_cell, i, n - 1);
      }
    };
    choose_obj(choose_obj, choose_cell, n - 1);
  }

  PosetalMonoidalBicat b_;
  std::size_t top_;
  std::vector<std::vector<std::vector<std::size_t>>> hom_;
  std::vector<std::vector<NerveSimplex>> levels_;
};

/// N(K) truncated at `top`, built by vertex extension as above.
class BicatNerve {
 public:
  using simplex_type = NerveSimplex;

  BicatNerve(PosetalBicat k, std::size_t top) : k_(std::move(k)), top_(top) {
    detail::check_nerve_top(top);
    require_valid(k_);
    hom_ = detail::hom_table(k_);
    std::vector<NerveSimplex> zero;
    for (std::size_t x = 0; x < k_.objects.size(); ++x) zero.push_back({0, {x}, {}, {}});
    levels_.push_back(std::move(zero));
    for (std::size_t n = 1; n <= top_; ++n) {
      std::vector<NerveSimplex> next;
      for (auto const& s : levels_.back()) extend(s, next);
      std::sort(next.begin(), next.end());
      levels_.push_back(std::move(next));
    }
  }

  std::size_t top_level() const noexcept { return top_; }
  std::vector<NerveSimplex> level(std::size_t n) const { return levels_.at(n); }
  NerveSimplex act(MonotoneMap const& xi, NerveSimplex const& s) const { return nerve_act(k_, xi, s); }
  PosetalBicat const& input() const noexcept { return k_; }

 private:
  void extend(NerveSimplex const& old, std::vector<NerveSimplex>& out) const {
    std::size_t const n = old.n + 1;
    NerveSimplex s{n, old.vertices, std::vector<std::size_t>(interval_count(n)), {}};
    s.vertices.push_back(0);
    for (auto const& [i, j] : intervals(n - 1)) s.intervals[interval_index(n, i, j)] = old.at(i, j);
    // Choose X_n, then A_in for i = n-1 .. 0 checking triples (i, j, n).
    auto choose = [&](auto&& self, std::size_t i) -> void {
      for (auto c : hom_[s.vertices[i]][s.vertices[n]]) {
        s.intervals[interval_index(n, i, n)] = c;
        bool ok = true;
        for (std::size_t j = i + 1; j < n && ok; ++j) ok = k_.le(k_.comp(s.at(j, n), s.at(i, j)), c);
        if (!ok) continue;
        if (i == 0) out.push_back(s);
        else self(self, i - 1);
      }
    };
    for (std::size_t x = 0; x < k_.objects.size(); ++x) {
      s.vertices[n] = x;
      choose(choose, n - 1);
    }
  }

  PosetalBicat k_;
  std::size_t top_;
  std::vector<std::vector<std::vector<std::size_t>>> hom_;
  std::vector<std::vector<NerveSimplex>> levels_;
};

}  // namespace csimp::bicat
