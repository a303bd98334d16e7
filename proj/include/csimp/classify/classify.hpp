#pragma once

// Simplicial maps out of ℂ into nerves, and the algebraic structures they
// classify.
//
// In a strict locally-posetal monoidal bicategory a skew monoidale (A, t, i),
// t : A ⊗ A -> A and i : I -> A, is three inequalities:
//   α : t ∘ (t ⊗ 1)  <=  t ∘ (1 ⊗ t)     (associativity constraint)
//   λ : t ∘ (i ⊗ 1)  <=  1_A             (left unit constraint; 𝔩 is an identity)
//   ρ : 1_A          <=  t ∘ (1 ⊗ i)     (right unit constraint)
// The coherence axioms between these 2-cells hold because parallel 2-cells
// in a poset are equal. Strictness also gives I ⊗ I = I, so the unit
// object adjustment of the general statement changes nothing here.
//
// A monad in a locally-posetal K is (X, t) with t ∘ t <= t and 1_X <= t.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "csimp/bicat/nerve.hpp"
#include "csimp/bicat/structures.hpp"
#include "csimp/catalan/catalogue.hpp"
#include "csimp/catalan/lax_matrix.hpp"
#include "csimp/error.hpp"
#include "csimp/maps.hpp"
#include "csimp/tabulated.hpp"

namespace csimp::classify {

using bicat::NerveSimplex;
using bicat::PosetalBicat;
using bicat::PosetalMonoidalBicat;
using catalan::LaxMatrix;

/// Maps are determined on the 4-truncation; the target is tabulated one
/// level higher for the coskeletal spot-check.
inline constexpr std::size_t kTruncation = 4;

struct SkewMonoidale {
  std::size_t carrier = 0;
  std::size_t mult = 0;  // t
  std::size_t unit = 0;  // i
  auto operator<=>(SkewMonoidale const&) const = default;
};

struct MonadInK {
  std::size_t carrier = 0;
  std::size_t endo = 0;
  auto operator<=>(MonadInK const&) const = default;
};

// α, λ, ρ in the orientation stated at the top of this file.
inline bool alpha_holds(PosetalMonoidalBicat const& b, SkewMonoidale const& m) {
  auto const& K = b.bicat;
  auto const one = K.id(m.carrier);
  return K.le(K.comp(m.mult, b.tensor(m.mult, one)), K.comp(m.mult, b.tensor(one, m.mult)));
}
inline bool lambda_holds(PosetalMonoidalBicat const& b, SkewMonoidale const& m) {
  auto const& K = b.bicat;
  auto const one = K.id(m.carrier);
  return K.le(K.comp(m.mult, b.tensor(m.unit, one)), one);
}
inline bool rho_holds(PosetalMonoidalBicat const& b, SkewMonoidale const& m) {
  auto const& K = b.bicat;
  auto const one = K.id(m.carrier);
  return K.le(one, K.comp(m.mult, b.tensor(one, m.unit)));
}
/// The cell forced on the simplex k: 1_A ∘ (i ⊗ 1_I) <= 1_A ∘ (1_I ⊗ i).
inline bool kappa_holds(PosetalMonoidalBicat const& b, SkewMonoidale const& m) {
  auto const& K = b.bicat;
  auto const one = K.id(m.carrier);
  auto const unit_id = K.id(b.unit_object);
  return K.le(K.comp(one, b.tensor(m.unit, unit_id)), K.comp(one, b.tensor(unit_id, m.unit)));
}

/// Every candidate (A, t, i), in index order.
inline std::vector<SkewMonoidale> skew_candidates(PosetalMonoidalBicat const& b) {
  auto const& K = b.bicat;
  std::vector<SkewMonoidale> out;
  for (std::size_t a = 0; a < K.objects.size(); ++a)
    for (auto t : K.hom(b.otensor(a, a), a))
      for (auto i : K.hom(b.unit_object, a)) out.push_back({a, t, i});
  return out;
}

inline std::vector<SkewMonoidale> skew_monoidales(PosetalMonoidalBicat const& b) {
  bicat::require_valid(b);
  std::vector<SkewMonoidale> out;
  for (auto const& m : skew_candidates(b)) {
    if (!alpha_holds(b, m) || !lambda_holds(b, m) || !rho_holds(b, m)) continue;
    if (!kappa_holds(b, m)) throw Error(Errc::InvalidInput, "the k-cell fails on a strict input");
    out.push_back(m);
  }
  return out;
}

inline std::vector<MonadInK> monads(PosetalBicat const& k) {
  bicat::require_valid(k);
  std::vector<MonadInK> out;
  for (std::size_t x = 0; x < k.objects.size(); ++x)
    for (auto t : k.hom(x, x))
      if (k.le(k.comp(t, t), t) && k.le(k.id(x), t)) out.push_back({x, t});
  return out;
}

/// A simplicial map ℂ -> N, with its values on the named simplices.
struct MapRecord {
  TruncatedMap map;
  std::vector<std::pair<std::string, NerveSimplex>> named;

  NerveSimplex const& at(std::string const& name) const {
    for (auto const& [n, s] : named)
      if (n == name) return s;
    throw Error(Errc::InvalidInput, "no named simplex " + name);
  }
};

/// ℂ tabulated to the truncation, the target nerve one level higher, and
/// the catalogue positions; shared by every classification on one input.
template <class Nerve>
class CatalanMapContext {
 public:
  template <class Input>
  explicit CatalanMapContext(Input const& input)
      : x_(catalan::CatalanSet(kTruncation), kTruncation),
        nerve_(input, kTruncation + 1),
        y_(nerve_, kTruncation + 1),
        catalogue_(catalan::catalogue()) {}

  Tabulated<catalan::CatalanSet> const& source() const noexcept { return x_; }
  Tabulated<Nerve> const& target() const noexcept { return y_; }
  Nerve const& nerve() const noexcept { return nerve_; }
  std::vector<catalan::NamedSimplex> const& catalogue() const noexcept { return catalogue_; }

  MapRecord record(TruncatedMap f) const {
    MapRecord r{std::move(f), {}};
    for (auto const& e : catalogue_) {
      auto const idx = x_.index_of(e.matrix);
      r.named.emplace_back(e.name, y_.simplex(e.level, r.map(e.level, idx)));
    }
    return r;
  }

  /// Generic enumeration of truncated maps, with the coskeletal spot-check.
  MapEnumeration enumerate() const {
    MapEnumerationOptions opt;
    opt.assert_coskeletal = true;
    return enumerate_truncated_maps(x_.table(), y_.table(), kTruncation, opt);
  }

  std::vector<MapRecord> maps_from_catalan() const {
    std::vector<MapRecord> out;
    for (auto& f : enumerate().maps) out.push_back(record(std::move(f)));
    return out;
  }

 private:
  Tabulated<catalan::CatalanSet> x_;
  Nerve nerve_;
  Tabulated<Nerve> y_;
  std::vector<catalan::NamedSimplex> catalogue_;
};

using MonoidalContext = CatalanMapContext<bicat::MonoidalNerve>;
using PlainContext = CatalanMapContext<bicat::BicatNerve>;

inline std::vector<MapRecord> maps_from_catalan(PosetalMonoidalBicat const& b) {
  return MonoidalContext(b).maps_from_catalan();
}
inline std::vector<MapRecord> maps_from_catalan(PosetalBicat const& k) { return PlainContext(k).maps_from_catalan(); }

/// The simplex F(x) for the map F determined by (A, t, i): A_pq is A where
/// x(p,q) = 1 and I elsewhere; A_pqr is read off the restriction of x to
/// {p, q, r}, whose five possible shapes are s_0★ ↦ 1_I, s_1c ↦ 1_A,
/// s_0c ↦ 1_A, t ↦ t and i ↦ i.
inline NerveSimplex formula_image(PosetalMonoidalBicat const& b, SkewMonoidale const& m, LaxMatrix const& x) {
  std::size_t const n = x.level();
  auto const& K = b.bicat;
  NerveSimplex s{n, {}, std::vector<std::size_t>(interval_count(n)), std::vector<std::size_t>(triple_count(n))};
  for (auto const& [p, q] : intervals(n)) s.intervals[interval_index(n, p, q)] = x(p, q) ? m.carrier : b.unit_object;
  for (auto const& [p, q, r] : triples(n)) {
    bool const pq = x(p, q), qr = x(q, r), pr = x(p, r);
    std::size_t cell;
    if (!pr) cell = K.id(b.unit_object);
    else if (pq && qr) cell = m.mult;
    else if (pq || qr) cell = K.id(m.carrier);
    else cell = m.unit;
    s.triples[triple_index(n, p, q, r)] = cell;
  }
  return s;
}

/// Maps obtained from candidates (A, t, i) whose images of a, ℓ, r, k are
/// nerve simplices. Degenerate 3-simplices and all 4-simplices impose
/// nothing further on a posetal target; that is re-checked when the
/// assignment is materialised (a failure throws).
inline std::vector<MapRecord> direct_classification(MonoidalContext const& ctx) {
  auto const& b = ctx.nerve().input();
  std::map<std::string, LaxMatrix> named;
  for (auto const& e : ctx.catalogue()) named.emplace(e.name, e.matrix);
  std::vector<MapRecord> out;
  for (auto const& m : skew_candidates(b)) {
    bool ok = true;
    for (auto const* name : {"a", "l", "r", "k"}) ok = ok && bicat::is_nerve_simplex(b, formula_image(b, m, named.at(name)));
    if (!ok) continue;
    TruncatedMap f;
    auto const& X = ctx.source();
    for (std::size_t n = 0; n <= kTruncation; ++n) {
      f.values.emplace_back();
      for (auto const& x : X.simplices(n)) {
        auto const img = formula_image(b, m, x);
        if (!bicat::is_nerve_simplex(b, img))
          throw Error(Errc::InvalidInput, "formula image of " + x.to_string() + " is not a nerve simplex");
        f.values.back().push_back(ctx.target().index_of(img));
      }
    }
    out.push_back(ctx.record(std::move(f)));
  }
  std::sort(out.begin(), out.end(), [](MapRecord const& l, MapRecord const& r) { return l.map < r.map; });
  return out;
}

inline std::vector<MapRecord> direct_classification(PosetalMonoidalBicat const& b) {
  return direct_classification(MonoidalContext(b));
}

struct Correspondence {
  nlohmann::ordered_json map;
  nlohmann::ordered_json structure;
};

struct ClassificationReport {
  std::string input;
  std::size_t map_count = 0;
  std::size_t structure_count = 0;
  std::size_t direct_count = 0;  // theorem only
  bool ok = false;
  std::vector<Correspondence> correspondence;
  std::vector<std::string> failures;  // empty iff ok
  std::vector<std::string> notes;

  std::string verdict() const { return ok ? "OK" : "FAIL"; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["input"] = input;
    j["maps"] = map_count;
    j["structures"] = structure_count;
    j["verdict"] = verdict();
    auto arr = nlohmann::ordered_json::array();
    for (auto const& c : correspondence) arr.push_back({{"map", c.map}, {"structure", c.structure}});
    j["correspondence"] = std::move(arr);
    return j;
  }
};

namespace detail {

/// Naturality and image re-checks shared by both verifications.
template <class Ctx, class Valid>
void recheck_maps(Ctx const& ctx, std::vector<MapRecord> const& maps, Valid&& valid, ClassificationReport& rep) {
  for (std::size_t k = 0; k < maps.size(); ++k) {
    auto const why = naturality_violation(ctx.source().table(), ctx.target().table(), kTruncation, maps[k].map);
    if (!why.empty()) rep.failures.push_back("map " + std::to_string(k) + ": " + why);
    for (auto const& [name, s] : maps[k].named)
      if (!valid(s)) rep.failures.push_back("map " + std::to_string(k) + ": image of " + name + " is not a nerve simplex");
  }
}

/// The correspondence must be a bijection between maps and structures.
template <class Structure>
void check_bijection(std::vector<Structure> const& images, std::vector<Structure> const& structures,
                     ClassificationReport& rep) {
  std::set<Structure> const found(structures.begin(), structures.end());
  std::set<Structure> seen;
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (!found.contains(images[k])) rep.failures.push_back("map " + std::to_string(k) + " lands outside the structures");
    if (!seen.insert(images[k]).second) rep.failures.push_back("map " + std::to_string(k) + " repeats a structure");
  }
  for (auto const& s : structures)
    if (!seen.contains(s)) rep.failures.push_back("a structure is hit by no map");
}

}  // namespace detail

inline ClassificationReport verify_theorem(PosetalMonoidalBicat const& b, std::string name = "input") {
  ClassificationReport rep;
  rep.input = std::move(name);
  MonoidalContext const ctx(b);
  auto const& K = b.bicat;
  auto const maps = ctx.maps_from_catalan();
  auto const direct = direct_classification(ctx);
  auto const structures = skew_monoidales(b);
  rep.map_count = maps.size();
  rep.direct_count = direct.size();
  rep.structure_count = structures.size();

  detail::recheck_maps(ctx, maps, [&](NerveSimplex const& s) { return bicat::is_nerve_simplex(b, s); }, rep);

  std::vector<TruncatedMap> generic, formula;
  for (auto const& m : maps) generic.push_back(m.map);
  for (auto const& m : direct) formula.push_back(m.map);
  if (generic != formula) rep.failures.push_back("direct classification differs from generic map enumeration");

  std::vector<SkewMonoidale> images;
  for (auto const& m : maps) {
    SkewMonoidale const s{m.at("c").intervals.at(0), m.at("t").triples.at(0), m.at("i").triples.at(0)};
    images.push_back(s);
    nlohmann::ordered_json fm;
    for (auto const* gen : {"c", "t", "i"}) {
      auto const& v = m.at(gen);
      fm[gen] = v.n == 1 ? K.objects[v.intervals[0]] : K.cells[v.triples[0]].name;
    }
    rep.correspondence.push_back(
        {fm, {{"carrier", K.objects[s.carrier]}, {"mult", K.cells[s.mult].name}, {"unit", K.cells[s.unit].name}}});
  }
  detail::check_bijection(images, structures, rep);

  rep.notes = {
      "strict input: I ⊗ I = I, so the adjusted bicategory with unit I ⊗ I is the input itself",
      "F(l) and F(r) are λ and ρ on the nose: the invertible comparison cells are identities",
      "axioms between α, λ, ρ hold since parallel 2-cells in a poset are equal",
  };
  rep.ok = rep.failures.empty();
  return rep;
}

inline ClassificationReport verify_monad_remark(PosetalBicat const& k, std::string name = "input") {
  ClassificationReport rep;
  rep.input = std::move(name);
  PlainContext const ctx(k);
  auto const maps = ctx.maps_from_catalan();
  auto const structures = monads(k);
  rep.map_count = maps.size();
  rep.structure_count = structures.size();

  detail::recheck_maps(ctx, maps, [&](NerveSimplex const& s) { return bicat::is_nerve_simplex(k, s); }, rep);

  std::vector<MonadInK> images;
  for (auto const& m : maps) {
    MonadInK const s{m.at("star").vertices.at(0), m.at("c").intervals.at(0)};
    images.push_back(s);
    rep.correspondence.push_back({{{"star", k.objects[s.carrier]}, {"c", k.cells[s.endo].name}},
                                  {{"carrier", k.objects[s.carrier]}, {"endo", k.cells[s.endo].name}}});
  }
  detail::check_bijection(images, structures, rep);
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace csimp::classify
