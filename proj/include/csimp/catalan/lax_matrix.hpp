#pragma once

// Simplices of the Catalan simplicial set as boolean interval tables.
//
// An n-simplex assigns a bit x(i,j) to every interval i < j of [n], subject
// to the closure law x(i,j) ∨ x(j,k) <= x(i,k) for i < j < k. Equivalently
// it is a normal lax functor [n] -> Σ2 into the one-object 2-category built
// from the monoidal poset (2, ∨, 0); x(i,i) = 0 is the normality condition.

#include <bitset>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "csimp/error.hpp"
#include "csimp/intervals.hpp"
#include "csimp/monotone.hpp"

namespace csimp::catalan {

/// Hard ceiling on levels handled anywhere in the library.
inline constexpr std::size_t kMaxLevel = 14;
inline constexpr std::size_t kMaxIntervals = interval_count(kMaxLevel);

class LaxMatrix {
 public:
  LaxMatrix() = default;
  explicit LaxMatrix(std::size_t n) : n_(n) {
    if (n > kMaxLevel) throw Error(Errc::LevelTooLarge, "level " + std::to_string(n));
  }

  /// Builds from bits in canonical interval order; validates closure.
  static LaxMatrix from_bits(std::size_t n, std::vector<int> const& bits) {
    LaxMatrix x(n);
    if (bits.size() != interval_count(n)) {
      throw Error(Errc::ShapeMismatch, "expected " + std::to_string(interval_count(n)) + " bits");
    }
    for (std::size_t k = 0; k < bits.size(); ++k) x.bits_[k] = bits[k] != 0;
    if (!x.satisfies_closure()) throw Error(Errc::InvalidInput, "bits violate the closure law");
    return x;
  }

  static LaxMatrix all_ones(std::size_t n) {
    LaxMatrix x(n);
    for (std::size_t k = 0; k < interval_count(n); ++k) x.bits_[k] = true;
    return x;
  }

  std::size_t level() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const {
    return i < j && bits_[interval_index(n_, i, j)];
  }
  bool bit(std::size_t k) const { return bits_[k]; }
  void set(std::size_t i, std::size_t j, bool v) { bits_[interval_index(n_, i, j)] = v; }
  void set_bit(std::size_t k, bool v) { bits_[k] = v; }

  bool satisfies_closure() const {
    for (std::size_t i = 0; i <= n_; ++i)
      for (std::size_t j = i + 1; j <= n_; ++j)
        for (std::size_t k = j + 1; k <= n_; ++k)
          if (((*this)(i, j) || (*this)(j, k)) && !(*this)(i, k)) return false;
    return true;
  }

  std::vector<int> bits() const {
    std::vector<int> out(interval_count(n_));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = bits_[k] ? 1 : 0;
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < interval_count(n_); ++k) s += bits_[k] ? '1' : '0';
    return s.empty() ? "-" : s;
  }

  bool operator==(LaxMatrix const& o) const noexcept { return n_ == o.n_ && bits_ == o.bits_; }
  /// Level first, then lexicographic on the bit list in canonical order.
  std::strong_ordering operator<=>(LaxMatrix const& o) const noexcept {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (std::size_t k = 0; k < interval_count(n_); ++k)
      if (bits_[k] != o.bits_[k]) return bits_[k] ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept { return std::hash<std::bitset<kMaxIntervals>>{}(bits_) ^ (n_ << 1); }

 private:
  std::size_t n_ = 0;
  std::bitset<kMaxIntervals> bits_;
};

/// Pullback along ξ: x'(p,q) = x(ξp, ξq), with 0 (the unit) wherever ξp = ξq.
inline LaxMatrix act_catalan(MonotoneMap const& xi, LaxMatrix const& x) {
  if (xi.codomain_top() != x.level()) throw Error(Errc::DomainMismatch, "map codomain != simplex level");
  std::size_t const m = xi.domain_top();
  LaxMatrix out(m);
  for (std::size_t q = 1; q <= m; ++q)
    for (std::size_t p = 0; p < q; ++p)
      if (x(xi(p), xi(q))) out.set(p, q, true);
  return out;
}

/// Depth-first enumeration in canonical order. Bits are assigned in interval
/// order; by the time x(i,k) is set, every interval inside it is known, so a
/// 0 is admissible iff all inner intervals are 0 and a 1 is always admissible.
/// Every partial assignment extends, hence the walk never backtracks empty.
template <class Visitor>
void for_each_simplex(std::size_t n, Visitor&& visit, std::vector<int> const& prefix = {}) {
  if (n > kMaxLevel) throw Error(Errc::LevelTooLarge, "level " + std::to_string(n));
  auto const ivs = intervals(n);
  LaxMatrix x(n);
  for (std::size_t k = 0; k < prefix.size(); ++k) x.set_bit(k, prefix[k] != 0);
  auto zero_ok = [&](std::size_t k) {
    auto const [i, j] = ivs[k];
    for (std::size_t m = i + 1; m < j; ++m)
      if (x(i, m) || x(m, j)) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == ivs.size()) {
      visit(static_cast<LaxMatrix const&>(x));
      return;
    }
    if (zero_ok(k)) {
      x.set_bit(k, false);
      self(self, k + 1);
    }
    x.set_bit(k, true);
    self(self, k + 1);
  };
  rec(rec, prefix.size());
}

inline std::vector<LaxMatrix> enumerate_level(std::size_t n) {
  std::vector<LaxMatrix> out;
  for_each_simplex(n, [&](LaxMatrix const& x) { out.push_back(x); });
  return out;
}

/// Direct degeneracy criterion: x = s_i(d_i x) iff x(i,i+1) = 0 and vertices
/// i and i+1 see every other vertex identically.
inline bool degenerate_at(LaxMatrix const& x, std::size_t i) {
  if (x(i, i + 1)) return false;
  for (std::size_t p = 0; p < i; ++p)
    if (x(p, i) != x(p, i + 1)) return false;
  for (std::size_t q = i + 2; q <= x.level(); ++q)
    if (x(i, q) != x(i + 1, q)) return false;
  return true;
}

inline bool is_degenerate_direct(LaxMatrix const& x) {
  for (std::size_t i = 0; i < x.level(); ++i)
    if (degenerate_at(x, i)) return true;
  return false;
}

/// The Catalan simplicial set, truncated at `top` for finite algorithms.
class CatalanSet {
 public:
  using simplex_type = LaxMatrix;

  explicit CatalanSet(std::size_t top = 6) : top_(top) {
    if (top > kMaxLevel) throw Error(Errc::LevelTooLarge, "level " + std::to_string(top));
  }
  std::size_t top_level() const noexcept { return top_; }
  std::vector<LaxMatrix> level(std::size_t n) const { return enumerate_level(n); }
  LaxMatrix act(MonotoneMap const& xi, LaxMatrix const& x) const { return act_catalan(xi, x); }

 private:
  std::size_t top_;
};

}  // namespace csimp::catalan

template <>
struct std::hash<csimp::catalan::LaxMatrix> {
  std::size_t operator()(csimp::catalan::LaxMatrix const& x) const noexcept { return x.hash(); }
};
