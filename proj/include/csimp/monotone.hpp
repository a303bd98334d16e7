#pragma once

// Arrows of the simplex category: order-preserving maps [m] -> [n] where
// [k] = {0, ..., k}.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "csimp/error.hpp"

namespace csimp {

class MonotoneMap {
 public:
  /// Validating constructor. `values[p]` is the image of p, so the list
  /// must have `domain_top + 1` entries.
  static MonotoneMap make(std::size_t domain_top, std::size_t codomain_top,
                          std::vector<std::size_t> values) {
    if (values.size() != domain_top + 1) {
      throw Error(Errc::DomainMismatch,
                  "expected " + std::to_string(domain_top + 1) + " values, got " +
                      std::to_string(values.size()));
    }
    for (std::size_t p = 0; p < values.size(); ++p) {
      if (values[p] > codomain_top) {
        throw Error(Errc::OutOfRange, "value " + std::to_string(values[p]) + " at " +
                                          std::to_string(p) + " exceeds " +
                                          std::to_string(codomain_top));
      }
      if (p > 0 && values[p] < values[p - 1]) {
        throw Error(Errc::NonMonotone, "values decrease at position " + std::to_string(p));
      }
    }
    return MonotoneMap(domain_top, codomain_top, std::move(values));
  }

  static MonotoneMap identity(std::size_t n) {
    std::vector<std::size_t> v(n + 1);
    for (std::size_t p = 0; p <= n; ++p) v[p] = p;
    return MonotoneMap(n, n, std::move(v));
  }

  std::size_t domain_top() const noexcept { return domain_top_; }
  std::size_t codomain_top() const noexcept { return codomain_top_; }
  std::vector<std::size_t> const& values() const noexcept { return values_; }
  std::size_t operator()(std::size_t p) const { return values_.at(p); }

  bool is_identity() const noexcept {
    if (domain_top_ != codomain_top_) return false;
    for (std::size_t p = 0; p < values_.size(); ++p)
      if (values_[p] != p) return false;
    return true;
  }
  bool is_injective() const noexcept {
    for (std::size_t p = 1; p < values_.size(); ++p)
      if (values_[p] == values_[p - 1]) return false;
    return true;
  }
  bool is_surjective() const noexcept {
    return values_.front() == 0 && values_.back() == codomain_top_ && [this] {
      for (std::size_t p = 1; p < values_.size(); ++p)
        if (values_[p] > values_[p - 1] + 1) return false;
      return true;
    }();
  }

  std::string to_string() const {
    std::string s = "[" + std::to_string(domain_top_) + "]->[" + std::to_string(codomain_top_) + "] (";
    for (std::size_t p = 0; p < values_.size(); ++p) {
      if (p) s += ",";
      s += std::to_string(values_[p]);
    }
    return s + ")";
  }

  auto operator<=>(MonotoneMap const&) const = default;

 private:
  MonotoneMap(std::size_t dom, std::size_t cod, std::vector<std::size_t> v)
      : domain_top_(dom), codomain_top_(cod), values_(std::move(v)) {}

  std::size_t domain_top_ = 0;
  std::size_t codomain_top_ = 0;
  std::vector<std::size_t> values_;
};

inline MonotoneMap make_monotone(std::size_t domain_top, std::size_t codomain_top,
                                 std::vector<std::size_t> values) {
  return MonotoneMap::make(domain_top, codomain_top, std::move(values));
}

/// outer ∘ inner, i.e. p ↦ outer(inner(p)).
inline MonotoneMap compose_monotone(MonotoneMap const& outer, MonotoneMap const& inner) {
  if (inner.codomain_top() != outer.domain_top()) {
    throw Error(Errc::DomainMismatch, "cannot compose " + outer.to_string() + " after " +
                                          inner.to_string());
  }
  std::vector<std::size_t> v(inner.domain_top() + 1);
  for (std::size_t p = 0; p <= inner.domain_top(); ++p) v[p] = outer(inner(p));
  return MonotoneMap::make(inner.domain_top(), outer.codomain_top(), std::move(v));
}

enum class GeneratorKind { face, degeneracy };

/// δ_i : [n-1] -> [n] misses i; σ_i : [n+1] -> [n] hits i twice.
inline MonotoneMap generator(GeneratorKind kind, std::size_t i, std::size_t n) {
  if (i > n) {
    throw Error(Errc::IndexOutOfRange,
                "index " + std::to_string(i) + " exceeds level " + std::to_string(n));
  }
  if (kind == GeneratorKind::face) {
    if (n == 0) throw Error(Errc::IndexOutOfRange, "no face maps into [0]");
    std::vector<std::size_t> v(n);
    for (std::size_t p = 0; p < n; ++p) v[p] = p < i ? p : p + 1;
    return MonotoneMap::make(n - 1, n, std::move(v));
  }
  std::vector<std::size_t> v(n + 2);
  for (std::size_t p = 0; p <= n + 1; ++p) v[p] = p <= i ? p : p - 1;
  return MonotoneMap::make(n + 1, n, std::move(v));
}

inline MonotoneMap face_map(std::size_t i, std::size_t n) {
  return generator(GeneratorKind::face, i, n);
}
inline MonotoneMap degeneracy_map(std::size_t i, std::size_t n) {
  return generator(GeneratorKind::degeneracy, i, n);
}

/// Epi-mono factorization ξ = μ ∘ ε. Acting contravariantly on a simplex,
/// ξ* = ε* ∘ μ*, which unfolds to
///   x ↦ s_{j_t} ⋯ s_{j_1} d_{o_1} ⋯ d_{o_s} x
/// with `omitted` = (o_1 < ⋯ < o_s) the vertices missed by ξ and
/// `repeated` = (j_1 < ⋯ < j_t) the positions p with ξ(p) = ξ(p+1).
struct EpiMono {
  std::vector<std::size_t> repeated;
  std::vector<std::size_t> omitted;
  std::size_t image_top = 0;
};

inline EpiMono factor(MonotoneMap const& xi) {
  EpiMono f;
  auto const& v = xi.values();
  std::vector<bool> hit(xi.codomain_top() + 1, false);
  for (std::size_t p = 0; p < v.size(); ++p) {
    hit[v[p]] = true;
    if (p + 1 < v.size() && v[p] == v[p + 1]) f.repeated.push_back(p);
  }
  for (std::size_t q = 0; q < hit.size(); ++q)
    if (!hit[q]) f.omitted.push_back(q);
  f.image_top = xi.codomain_top() - f.omitted.size();
  return f;
}

/// Rebuilds a map from its factorization: (δ_{o_s} ∘ ⋯ ∘ δ_{o_1}) ∘ (σ_{j_1} ∘ ⋯ ∘ σ_{j_t}).
inline MonotoneMap recompose(EpiMono const& f) {
  std::size_t const top = f.image_top + f.repeated.size();
  MonotoneMap result = MonotoneMap::identity(top);
  // Surjection part: σ_{j_t} is applied first, so it sits innermost.
  std::size_t level = top;
  for (auto it = f.repeated.rbegin(); it != f.repeated.rend(); ++it) {
    result = compose_monotone(degeneracy_map(*it, level - 1), result);
    --level;
  }
  for (std::size_t o : f.omitted) {
    result = compose_monotone(face_map(o, level + 1), result);
    ++level;
  }
  return result;
}

/// Every monotone map [m] -> [n], in lexicographic order of value lists.
inline std::vector<MonotoneMap> all_monotone_maps(std::size_t m, std::size_t n) {
  std::vector<MonotoneMap> out;
  std::vector<std::size_t> v(m + 1, 0);
  while (true) {
    out.push_back(MonotoneMap::make(m, n, v));
    // advance to the next weakly increasing sequence
    std::size_t p = m + 1;
    while (p > 0 && v[p - 1] == n) --p;
    if (p == 0) break;
    std::size_t const next = v[p - 1] + 1;
    for (std::size_t q = p - 1; q <= m; ++q) v[q] = next;
  }
  return out;
}

}  // namespace csimp
