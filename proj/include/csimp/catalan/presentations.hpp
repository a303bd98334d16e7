#pragma once

// The two other presentations of Catalan simplices, with conversions to and
// from LaxMatrix:
//
//  * InterpolativeRelation on [n]: reflexive, symmetric, and
//    (i,k) ∈ R, i <= j <= k  ⇒  (i,j), (j,k) ∈ R.
//    R = diagonal ∪ {(i,j), (j,i) : i < j, x(i,j) = 0}.
//
//  * IdealRelation [n] ⇸ [n] containing the identity ideal. Pairs are (j,i)
//    with j in the codomain and i in the domain.
//    (j,i) ∈ B  ⇔  j <= i, or j > i and x(i,j) = 0.
//
// Ideals also carry the calculus needed to state the simplicial action:
// relational composition and the adjoint pair ξ_* ⊣ ξ^*.

#include <cstddef>
#include <string>
#include <vector>

#include "csimp/catalan/lax_matrix.hpp"
#include "csimp/error.hpp"
#include "csimp/monotone.hpp"

namespace csimp::catalan {

/// Dense boolean matrix over [rows] × [cols] (tops, so sizes are top + 1).
class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t row_top, std::size_t col_top)
      : rows_(row_top + 1), cols_(col_top + 1), cells_(rows_ * cols_, false) {}

  std::size_t row_top() const noexcept { return rows_ - 1; }
  std::size_t col_top() const noexcept { return cols_ - 1; }
  bool operator()(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, bool v = true) { cells_[r * cols_ + c] = v; }

  /// this ⊆ other (same shape required).
  bool subset_of(BoolMatrix const& o) const {
    for (std::size_t k = 0; k < cells_.size(); ++k)
      if (cells_[k] && !o.cells_[k]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (bool b : cells_) c += b;
    return c;
  }
  bool operator==(BoolMatrix const&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<bool> cells_;
};

struct InterpolativeRelation {
  std::size_t n = 0;
  BoolMatrix pairs;  // pairs(i, j) ⇔ (i, j) ∈ R

  bool operator==(InterpolativeRelation const&) const = default;
};

inline std::string relation_violation(InterpolativeRelation const& r) {
  if (r.pairs.row_top() != r.n || r.pairs.col_top() != r.n) return "shape is not [n]x[n]";
  for (std::size_t i = 0; i <= r.n; ++i) {
    if (!r.pairs(i, i)) return "not reflexive at " + std::to_string(i);
    for (std::size_t j = 0; j <= r.n; ++j)
      if (r.pairs(i, j) != r.pairs(j, i)) return "not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  for (std::size_t i = 0; i <= r.n; ++i)
    for (std::size_t k = i; k <= r.n; ++k)
      if (r.pairs(i, k))
        for (std::size_t j = i; j <= k; ++j)
          if (!r.pairs(i, j) || !r.pairs(j, k))
            return "interpolation fails for (" + std::to_string(i) + "," + std::to_string(k) + ") via " +
                   std::to_string(j);
  return {};
}

inline InterpolativeRelation lax_to_relation(LaxMatrix const& x) {
  std::size_t const n = x.level();
  InterpolativeRelation r{n, BoolMatrix(n, n)};
  for (std::size_t i = 0; i <= n; ++i) {
    r.pairs.set(i, i);
    for (std::size_t j = i + 1; j <= n; ++j)
      if (!x(i, j)) {
        r.pairs.set(i, j);
        r.pairs.set(j, i);
      }
  }
  return r;
}

inline LaxMatrix relation_to_lax(InterpolativeRelation const& r) {
  if (auto why = relation_violation(r); !why.empty()) throw Error(Errc::NotInterpolative, why);
  LaxMatrix x(r.n);
  for (std::size_t i = 0; i <= r.n; ++i)
    for (std::size_t j = i + 1; j <= r.n; ++j) x.set(i, j, !r.pairs(i, j));
  return x;
}

/// An ideal [m_top] ⇸ [n_top]: a subset of [n_top] × [m_top], down-closed in
/// the first coordinate and up-closed in the second.
struct IdealRelation {
  std::size_t m_top = 0;  // domain
  std::size_t n_top = 0;  // codomain
  BoolMatrix pairs;       // pairs(j, i) ⇔ (j, i) ∈ A, j ∈ [n_top], i ∈ [m_top]

  static IdealRelation empty(std::size_t m_top, std::size_t n_top) {
    return {m_top, n_top, BoolMatrix(n_top, m_top)};
  }
  bool contains(std::size_t j, std::size_t i) const { return pairs(j, i); }
  bool operator==(IdealRelation const&) const = default;
};

inline bool satisfies_ideal_law(IdealRelation const& a) {
  // q <= j, (j,i) ∈ A, i <= p ⇒ (q,p) ∈ A; checking neighbours suffices.
  for (std::size_t j = 0; j <= a.n_top; ++j)
    for (std::size_t i = 0; i <= a.m_top; ++i) {
      if (!a.pairs(j, i)) continue;
      if (j > 0 && !a.pairs(j - 1, i)) return false;
      if (i < a.m_top && !a.pairs(j, i + 1)) return false;
    }
  return true;
}

inline IdealRelation identity_ideal(std::size_t n) {
  auto a = IdealRelation::empty(n, n);
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = j; i <= n; ++i) a.pairs.set(j, i);
  return a;
}

/// A ∘ B for B: L ⇸ M and A: M ⇸ N, as relational composition.
inline IdealRelation ideal_compose(IdealRelation const& a, IdealRelation const& b) {
  if (b.n_top != a.m_top) throw Error(Errc::ShapeMismatch, "ideals are not composable");
  auto c = IdealRelation::empty(b.m_top, a.n_top);
  for (std::size_t q = 0; q <= a.n_top; ++q)
    for (std::size_t l = 0; l <= b.m_top; ++l)
      for (std::size_t mid = 0; mid <= a.m_top; ++mid)
        if (a.pairs(q, mid) && b.pairs(mid, l)) {
          c.pairs.set(q, l);
          break;
        }
  return c;
}

/// ξ_* = {(j,i) : j <= ξ(i)} : M ⇸ N and ξ^* = {(i,j) : ξ(i) <= j} : N ⇸ M.
struct AdjointIdeals {
  IdealRelation lower;  // ξ_*
  IdealRelation upper;  // ξ^*
};

inline AdjointIdeals adjoint_ideals(MonotoneMap const& xi) {
  std::size_t const m = xi.domain_top();
  std::size_t const n = xi.codomain_top();
  auto lower = IdealRelation::empty(m, n);
  auto upper = IdealRelation::empty(n, m);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      if (j <= xi(i)) lower.pairs.set(j, i);
      if (xi(i) <= j) upper.pairs.set(i, j);
    }
  return {lower, upper};
}

/// ξ^{-1}(B) = {(p,q) : (ξp, ξq) ∈ B}.
inline IdealRelation ideal_preimage(MonotoneMap const& xi, IdealRelation const& b) {
  if (b.m_top != xi.codomain_top() || b.n_top != xi.codomain_top())
    throw Error(Errc::ShapeMismatch, "ideal is not an endo-ideal on the codomain");
  std::size_t const m = xi.domain_top();
  auto out = IdealRelation::empty(m, m);
  for (std::size_t p = 0; p <= m; ++p)
    for (std::size_t q = 0; q <= m; ++q)
      if (b.pairs(xi(p), xi(q))) out.pairs.set(p, q);
  return out;
}

/// The simplicial action on ideals, ξ^* B ξ_*, computed by composition.
inline IdealRelation ideal_act(MonotoneMap const& xi, IdealRelation const& b) {
  auto const adj = adjoint_ideals(xi);
  return ideal_compose(adj.upper, ideal_compose(b, adj.lower));
}

inline IdealRelation lax_to_ideal(LaxMatrix const& x) {
  std::size_t const n = x.level();
  auto b = IdealRelation::empty(n, n);
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i <= n; ++i)
      if (j <= i || !x(i, j)) b.pairs.set(j, i);
  return b;
}

inline LaxMatrix ideal_to_lax(IdealRelation const& b) {
  if (b.m_top != b.n_top) throw Error(Errc::ShapeMismatch, "not an endo-ideal");
  if (!satisfies_ideal_law(b)) throw Error(Errc::NotAnIdeal, "relation is not an ideal");
  if (!identity_ideal(b.n_top).pairs.subset_of(b.pairs))
    throw Error(Errc::MissingIdentityIdeal, "ideal does not contain the identity ideal");
  LaxMatrix x(b.n_top);
  for (std::size_t i = 0; i <= b.n_top; ++i)
    for (std::size_t j = i + 1; j <= b.n_top; ++j) x.set(i, j, !b.pairs(j, i));
  return x;
}

/// Every endo-ideal on [n] containing 1_[n], by brute force over the
/// strictly-lower cells (independent of the LaxMatrix enumeration).
inline std::vector<IdealRelation> enumerate_ideals(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> lower;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) lower.emplace_back(j, i);
  if (lower.size() > 24) throw Error(Errc::LevelTooLarge, "brute-force ideal enumeration");
  std::vector<IdealRelation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << lower.size()); ++mask) {
    auto b = identity_ideal(n);
    for (std::size_t k = 0; k < lower.size(); ++k)
      if (mask >> k & 1) b.pairs.set(lower[k].first, lower[k].second);
    if (satisfies_ideal_law(b)) out.push_back(std::move(b));
  }
  return out;
}

}  // namespace csimp::catalan
