#pragma once

// Order probes on ℂ_n.
//
// Inclusion order: B <= B' iff B ⊆ B' for the ideal presentation; on
// matrices this is x >= x' bitwise. Pullback along any ξ is monotone.
//
// Tamari order, transported along a bijection to Dyck paths:
//   h(i) = max{ j : (j,i) ∈ B } = largest j >= i with j = i or x(i,j) = 0,
// a weakly increasing sequence with i <= h(i) <= n. The path emits, for
// i = 0..n, (h(i) - h(i-1)) up-steps (h(-1) = -1) and then one down-step.
// A cover is a rotation: at a factor "DU" starting at p, let P be the
// shortest balanced word starting at the U; replace D·P by P·D. The order
// is the reflexive-transitive closure of the covers.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csimp/catalan/lax_matrix.hpp"
#include "csimp/catalan/presentations.hpp"
#include "csimp/error.hpp"
#include "csimp/monotone.hpp"

namespace csimp::catalan {

inline constexpr std::size_t kOrderProbeBound = 6;

using DyckPath = std::string;  // over {'U', 'D'}

inline std::vector<std::size_t> staircase_profile(LaxMatrix const& x) {
  std::size_t const n = x.level();
  std::vector<std::size_t> h(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    h[i] = i;
    for (std::size_t j = i + 1; j <= n && !x(i, j); ++j) h[i] = j;
  }
  return h;
}

inline DyckPath to_dyck(LaxMatrix const& x) {
  auto const h = staircase_profile(x);
  DyckPath p;
  std::size_t prev = 0;  // h(i-1) + 1
  for (std::size_t i = 0; i < h.size(); ++i) {
    p.append(h[i] + 1 - prev, 'U');
    p.push_back('D');
    prev = h[i] + 1;
  }
  return p;
}

inline LaxMatrix from_dyck(DyckPath const& p) {
  if (p.size() % 2 != 0 || p.empty()) throw Error(Errc::InvalidInput, "Dyck path of odd or zero length");
  std::size_t const n = p.size() / 2 - 1;
  LaxMatrix x = LaxMatrix::all_ones(n);
  std::size_t ups = 0;
  std::size_t i = 0;
  for (char c : p) {
    if (c == 'U') {
      ++ups;
      continue;
    }
    if (ups < i + 1) throw Error(Errc::InvalidInput, "path dips below the diagonal");
    for (std::size_t j = i + 1; j < ups; ++j) x.set(i, j, false);
    ++i;
  }
  if (!x.satisfies_closure()) throw Error(Errc::InvalidInput, "path does not come from a staircase profile");
  return x;
}

inline std::vector<DyckPath> rotation_covers(DyckPath const& p) {
  std::vector<DyckPath> out;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    if (p[k] != 'D' || p[k + 1] != 'U') continue;
    int depth = 0;
    std::size_t end = k + 1;
    for (; end < p.size(); ++end) {
      depth += p[end] == 'U' ? 1 : -1;
      if (depth == 0) break;
    }
    std::string q = p.substr(0, k) + p.substr(k + 1, end - k) + 'D' + p.substr(end + 1);
    out.push_back(std::move(q));
  }
  return out;
}

/// The Tamari order on one level, stored as a reachability matrix over the
/// canonical enumeration.
class TamariLevel {
 public:
  explicit TamariLevel(std::size_t n) : elems_(enumerate_level(n)) {
    std::size_t const size = elems_.size();
    for (std::size_t k = 0; k < size; ++k) index_.emplace(to_dyck(elems_[k]), k);
    covers_.resize(size);
    for (std::size_t k = 0; k < size; ++k)
      for (auto const& q : rotation_covers(to_dyck(elems_[k]))) covers_[k].push_back(index_.at(q));
    leq_.assign(size, std::vector<bool>(size, false));
    for (std::size_t k = 0; k < size; ++k) {
      std::vector<std::size_t> stack{k};
      leq_[k][k] = true;
      while (!stack.empty()) {
        auto const u = stack.back();
        stack.pop_back();
        for (auto v : covers_[u])
          if (!leq_[k][v]) {
            leq_[k][v] = true;
            stack.push_back(v);
          }
      }
    }
  }

  std::vector<LaxMatrix> const& elements() const noexcept { return elems_; }
  std::size_t index_of(LaxMatrix const& x) const { return index_.at(to_dyck(x)); }
  std::vector<std::size_t> const& covers(std::size_t k) const { return covers_.at(k); }
  bool leq(LaxMatrix const& x, LaxMatrix const& y) const { return leq_[index_of(x)][index_of(y)]; }

 private:
  std::vector<LaxMatrix> elems_;
  std::map<DyckPath, std::size_t> index_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<std::vector<bool>> leq_;
};

struct OrderViolation {
  std::string map;  // e.g. "d_1" or "s_0"
  LaxMatrix lower;  // lower <= upper at the source level
  LaxMatrix upper;
  LaxMatrix lower_image;  // images, not comparable in the same direction
  LaxMatrix upper_image;
};

struct OrderProbeReport {
  std::size_t n = 0;
  // inclusion order on ideals, all ξ: [m] -> [k] with m, k <= n
  bool inclusion_preserved = true;
  std::size_t inclusion_checks = 0;
  std::vector<OrderViolation> inclusion_violations;
  // Tamari order, faces d_i: ℂ_n -> ℂ_{n-1} and degeneracies s_i: ℂ_n -> ℂ_{n+1}
  std::size_t tamari_covers = 0;
  bool tamari_faces_preserved = true;
  bool tamari_degeneracies_preserved = true;
  std::vector<std::string> tamari_failing_maps;
  std::vector<OrderViolation> tamari_violations;  // a few per failing map
  // n = 3 only: some ρ with ρ <= s_1(i), d_1(ρ) = s_1(c) and s_1(c) not <= i
  bool remark_pattern_found = false;
  std::vector<LaxMatrix> remark_witnesses;
};

namespace detail {

inline bool ideal_leq(LaxMatrix const& x, LaxMatrix const& y) {
  return lax_to_ideal(x).pairs.subset_of(lax_to_ideal(y).pairs);
}

inline void probe_tamari_map(std::string const& name, MonotoneMap const& xi, TamariLevel const& src,
                             TamariLevel const& dst, OrderProbeReport& rep, bool& preserved,
                             std::size_t per_map) {
  std::size_t found = 0;
  auto const& el = src.elements();
  for (std::size_t a = 0; a < el.size(); ++a)
    for (auto b : src.covers(a)) {
      auto const fa = act_catalan(xi, el[a]);
      auto const fb = act_catalan(xi, el[b]);
      if (dst.leq(fa, fb)) continue;
      if (found == 0) rep.tamari_failing_maps.push_back(name);
      preserved = false;
      if (found++ < per_map) rep.tamari_violations.push_back({name, el[a], el[b], fa, fb});
    }
}

}  // namespace detail

inline OrderProbeReport order_probe(std::size_t n, std::size_t violations_per_map = 3) {
  if (n > kOrderProbeBound) throw Error(Errc::LevelTooLarge, "order probe bound is " + std::to_string(kOrderProbeBound));
  OrderProbeReport rep;
  rep.n = n;

  std::vector<std::vector<LaxMatrix>> levels;
  for (std::size_t k = 0; k <= n; ++k) levels.push_back(enumerate_level(k));
  for (std::size_t k = 0; k <= n; ++k)
    for (std::size_t m = 0; m <= n; ++m)
      for (auto const& xi : all_monotone_maps(m, k))
        for (auto const& x : levels[k])
          for (auto const& y : levels[k]) {
            if (!detail::ideal_leq(x, y)) continue;
            ++rep.inclusion_checks;
            auto const bx = ideal_act(xi, lax_to_ideal(x));
            auto const by = ideal_act(xi, lax_to_ideal(y));
            if (!bx.pairs.subset_of(by.pairs)) {
              rep.inclusion_preserved = false;
              if (rep.inclusion_violations.size() < violations_per_map)
                rep.inclusion_violations.push_back(
                    {xi.to_string(), x, y, act_catalan(xi, x), act_catalan(xi, y)});
            }
          }

  TamariLevel const here(n);
  for (std::size_t a = 0; a < here.elements().size(); ++a) rep.tamari_covers += here.covers(a).size();
  if (n >= 1) {
    TamariLevel const below(n - 1);
    for (std::size_t i = 0; i <= n; ++i)
      detail::probe_tamari_map("d_" + std::to_string(i), face_map(i, n), here, below, rep,
                               rep.tamari_faces_preserved, violations_per_map);
  }
  TamariLevel const above(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    detail::probe_tamari_map("s_" + std::to_string(i), degeneracy_map(i, n), here, above, rep,
                             rep.tamari_degeneracies_preserved, violations_per_map);

  if (n == 3) {
    auto const c = LaxMatrix::all_ones(1);
    auto const i2 = LaxMatrix::from_bits(2, {0, 0, 1});
    auto const s1c = act_catalan(degeneracy_map(1, 1), c);
    auto const s1i = act_catalan(degeneracy_map(1, 2), i2);
    TamariLevel const two(2);
    if (!two.leq(s1c, i2)) {
      for (auto const& rho : here.elements())
        if (act_catalan(face_map(1, 3), rho) == s1c && here.leq(rho, s1i)) rep.remark_witnesses.push_back(rho);
    }
    rep.remark_pattern_found = !rep.remark_witnesses.empty();
  }
  return rep;
}

}  // namespace csimp::catalan
