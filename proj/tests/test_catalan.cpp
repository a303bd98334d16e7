#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "csimp/catalan/catalogue.hpp"
#include "csimp/catalan/counting.hpp"
#include "csimp/catalan/export.hpp"
#include "csimp/catalan/lax_matrix.hpp"
#include "csimp/catalan/presentations.hpp"
#include "csimp/catalan/tamari.hpp"
#include "csimp/simplicial.hpp"
#include "csimp/tabulated.hpp"

using namespace csimp;
using namespace csimp::catalan;

namespace {

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::IoError;
}

LaxMatrix lax(std::size_t n, std::vector<int> bits) { return LaxMatrix::from_bits(n, bits); }

// Every bit table at level n that satisfies the closure law, found by
// scanning all 2^(intervals) tables and sorting.
std::vector<LaxMatrix> closure_brute_force(std::size_t n) {
  std::size_t const k = interval_count(n);
  std::vector<LaxMatrix> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    LaxMatrix x(n);
    for (std::size_t b = 0; b < k; ++b) x.set_bit(b, mask >> b & 1);
    bool ok = true;
    for (std::size_t i = 0; i <= n && ok; ++i)
      for (std::size_t j = i; j <= n && ok; ++j)
        for (std::size_t l = j; l <= n && ok; ++l) {
          bool const ij = i < j && x(i, j), jl = j < l && x(j, l), il = i < l && x(i, l);
          if ((ij || jl) && !il) ok = false;
        }
    if (ok) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// C_{m+1} = sum_k C_k C_{m-k}
std::vector<std::uint64_t> catalan_recurrence(std::size_t top) {
  std::vector<std::uint64_t> c(top + 1, 0);
  c[0] = 1;
  for (std::size_t m = 1; m <= top; ++m)
    for (std::size_t k = 0; k < m; ++k) c[m] += c[k] * c[m - 1 - k];
  return c;
}

// Motzkin numbers by counting lattice paths with steps U, F, D that stay
// above the axis.
std::vector<std::uint64_t> motzkin_paths(std::size_t top) {
  std::vector<std::uint64_t> out;
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<std::uint64_t> h(n + 2, 0);
    h[0] = 1;
    for (std::size_t step = 0; step < n; ++step) {
      std::vector<std::uint64_t> next(n + 2, 0);
      for (std::size_t y = 0; y <= n; ++y) {
        next[y] += h[y];
        next[y + 1] += h[y];
        if (y > 0) next[y - 1] += h[y];
      }
      h = std::move(next);
    }
    out.push_back(h[0]);
  }
  return out;
}

InterpolativeRelation relation_preimage(MonotoneMap const& xi, InterpolativeRelation const& r) {
  std::size_t const m = xi.domain_top();
  InterpolativeRelation out{m, BoolMatrix(m, m)};
  for (std::size_t p = 0; p <= m; ++p)
    for (std::size_t q = 0; q <= m; ++q)
      if (r.pairs(xi(p), xi(q))) out.pairs.set(p, q);
  return out;
}

}  // namespace

TEST_CASE("level enumeration examples") {
  CHECK(enumerate_level(2).size() == 5);
  CHECK(enumerate_level(0).size() == 1);
  CHECK(enumerate_level(4).size() == 42);
  CHECK(code_of([] { enumerate_level(15); }) == Errc::LevelTooLarge);
}

TEST_CASE("enumeration is the sorted set of closed bit tables") {
  for (std::size_t n = 0; n <= 5; ++n) {
    INFO("n = " << n);
    auto const level = enumerate_level(n);
    CHECK(level == closure_brute_force(n));
    CHECK(std::is_sorted(level.begin(), level.end()));
  }
}

TEST_CASE("action examples") {
  auto c = lax(1, {1});
  CHECK(act_catalan(degeneracy_map(1, 1), c) == lax(2, {1, 0, 1}));
  auto ell = lax(3, {1, 0, 0, 1, 1, 1});
  CHECK(act_catalan(face_map(1, 3), ell) == lax(2, {1, 0, 1}));
  CHECK(act_catalan(MonotoneMap::identity(3), ell) == ell);
}

TEST_CASE("closure law is preserved by every action up to level 6") {
  for (std::size_t n = 0; n <= 6; ++n) {
    auto const level = enumerate_level(n);
    for (auto const& x : level) REQUIRE(x.satisfies_closure());
    for (std::size_t m = 0; m <= 6; ++m)
      for (auto const& xi : all_monotone_maps(m, n))
        for (auto const& x : level) {
          if (!act_catalan(xi, x).satisfies_closure()) FAIL(xi.to_string() << " on " << x.to_string());
        }
  }
}

TEST_CASE("relation presentation examples") {
  auto r = lax_to_relation(lax(2, {1, 1, 1}));
  CHECK(r.pairs.count() == 3);
  auto ri = lax_to_relation(lax(2, {0, 0, 1}));
  CHECK(ri.pairs.count() == 7);
  CHECK(ri.pairs(0, 1));
  CHECK(ri.pairs(2, 1));
  CHECK_FALSE(ri.pairs(0, 2));
  CHECK(lax_to_relation(lax(2, {0, 0, 0})).pairs.count() == 9);

  InterpolativeRelation bad{2, BoolMatrix(2, 2)};
  for (std::size_t i = 0; i <= 2; ++i) bad.pairs.set(i, i);
  bad.pairs.set(0, 2);
  bad.pairs.set(2, 0);
  CHECK(code_of([&] { relation_to_lax(bad); }) == Errc::NotInterpolative);
}

TEST_CASE("ideal presentation examples and errors") {
  auto b = lax_to_ideal(lax(1, {1}));
  CHECK(b == identity_ideal(1));
  auto full = lax_to_ideal(lax(1, {0}));
  CHECK(full.pairs.count() == 4);

  auto not_ideal = identity_ideal(1);
  not_ideal.pairs.set(0, 1, false);
  CHECK(code_of([&] { ideal_to_lax(not_ideal); }) == Errc::NotAnIdeal);
  auto missing = IdealRelation::empty(1, 1);
  missing.pairs.set(0, 1);
  CHECK(code_of([&] { ideal_to_lax(missing); }) == Errc::MissingIdentityIdeal);
  CHECK(code_of([] { ideal_to_lax(IdealRelation::empty(1, 2)); }) == Errc::ShapeMismatch);
}

TEST_CASE("presentations are bijections up to level 6") {
  for (std::size_t n = 0; n <= 6; ++n) {
    INFO("n = " << n);
    auto const level = enumerate_level(n);
    std::set<std::vector<bool>> relations, ideals;
    for (auto const& x : level) {
      auto const r = lax_to_relation(x);
      REQUIRE(relation_violation(r).empty());
      CHECK(relation_to_lax(r) == x);
      auto const b = lax_to_ideal(x);
      CHECK(ideal_to_lax(b) == x);
      std::vector<bool> rk, bk;
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
          rk.push_back(r.pairs(i, j));
          bk.push_back(b.pairs(i, j));
        }
      relations.insert(rk);
      ideals.insert(bk);
    }
    CHECK(relations.size() == level.size());
    CHECK(ideals.size() == level.size());
    CHECK(enumerate_ideals(n).size() == level.size());
  }
}

TEST_CASE("every brute-force ideal converts to a simplex") {
  for (std::size_t n = 0; n <= 5; ++n) {
    auto const level = enumerate_level(n);
    std::set<LaxMatrix> const known(level.begin(), level.end());
    for (auto const& b : enumerate_ideals(n)) {
      auto const x = ideal_to_lax(b);
      CHECK(known.contains(x));
      CHECK(lax_to_ideal(x) == b);
    }
  }
}

TEST_CASE("conversions commute with the action up to level 6") {
  for (std::size_t n = 0; n <= 6; ++n)
    for (auto const& x : enumerate_level(n)) {
      auto const r = lax_to_relation(x);
      auto const b = lax_to_ideal(x);
      for (std::size_t m = 0; m <= 6; ++m)
        for (auto const& xi : all_monotone_maps(m, n)) {
          auto const y = act_catalan(xi, x);
          if (!(lax_to_relation(y) == relation_preimage(xi, r)) || !(lax_to_ideal(y) == ideal_preimage(xi, b)))
            FAIL(xi.to_string() << " on " << x.to_string());
        }
    }
}

TEST_CASE("adjoint ideals") {
  auto const id = adjoint_ideals(MonotoneMap::identity(1));
  CHECK(id.lower == identity_ideal(1));
  CHECK(id.upper == identity_ideal(1));

  auto const s = adjoint_ideals(degeneracy_map(0, 0));
  auto lower = IdealRelation::empty(1, 0);
  lower.pairs.set(0, 0);
  lower.pairs.set(0, 1);
  auto upper = IdealRelation::empty(0, 1);
  upper.pairs.set(0, 0);
  upper.pairs.set(1, 0);
  CHECK(s.lower == lower);
  CHECK(s.upper == upper);

  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n)
      for (auto const& xi : all_monotone_maps(m, n)) {
        auto const a = adjoint_ideals(xi);
        CHECK(satisfies_ideal_law(a.lower));
        CHECK(satisfies_ideal_law(a.upper));
        CHECK(identity_ideal(m).pairs.subset_of(ideal_compose(a.upper, a.lower).pairs));
        CHECK(ideal_compose(a.lower, a.upper).pairs.subset_of(identity_ideal(n).pairs));
        for (auto const& b : enumerate_ideals(n)) CHECK(ideal_act(xi, b) == ideal_preimage(xi, b));
      }
}

TEST_CASE("counts against independent recurrences") {
  auto const cat = catalan_recurrence(11);
  auto const motz = motzkin_paths(10);
  auto const ref = reference_counts(10);
  std::vector<std::uint64_t> nd;
  for (std::size_t n = 0; n <= 10; ++n) {
    INFO("n = " << n);
    CHECK(catalan_number(n + 1) == cat[n + 1]);
    CHECK(ref.catalan[n] == cat[n + 1]);
    CHECK(ref.motzkin[n] == motz[n]);
    CHECK(kMotzkinReference[n] == motz[n]);
    CHECK(dyck_crosscheck(n) == cat[n + 1]);
    auto const c = count_level(n);
    CHECK(c.total == cat[n + 1]);
    CHECK(c.nondegenerate == motz[n]);
    nd.push_back(c.nondegenerate);
    CHECK(binomial_sum(n, nd) == c.total);
  }
  CHECK(motzkin_numbers(13) == std::vector<std::uint64_t>(kMotzkinReference.begin(), kMotzkinReference.end()));
}

TEST_CASE("count examples") {
  auto const ref = reference_counts(5);
  CHECK(std::vector<std::uint64_t>(ref.catalan.begin(), ref.catalan.end()) ==
        std::vector<std::uint64_t>{1, 2, 5, 14, 42, 132});
  CHECK(std::vector<std::uint64_t>(ref.motzkin.begin(), ref.motzkin.end()) ==
        std::vector<std::uint64_t>{1, 1, 2, 4, 9, 21});
  CHECK(nondegenerate_count(3) == 4);
  CHECK(nondegenerate_count(4) == 9);
  CHECK(nondegenerate_count(10) == 2188);
  CHECK(dyck_crosscheck(2) == 5);
  CHECK(dyck_crosscheck(0) == 1);
  CHECK(dyck_crosscheck(6) == 429);
  CHECK(code_of([] { nondegenerate_count(11); }) == Errc::LevelTooLarge);
}

TEST_CASE("threaded counting matches single-threaded") {
  for (std::size_t n : {0u, 3u, 8u}) {
    auto const a = count_level(n, 1);
    auto const b = count_level(n, 4);
    CHECK(a.total == b.total);
    CHECK(a.nondegenerate == b.nondegenerate);
  }
}

TEST_CASE("non-degenerate counts via the generic detector") {
  CatalanSet C(6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(nondegenerate_simplices(C, n).size() == kMotzkinReference[n]);
}

TEST_CASE("Catalan set is 2-coskeletal at levels 3 and 4") {
  Tabulated T(CatalanSet(4), 4);
  for (std::size_t n : {3u, 4u}) {
    auto const r = check_unique_fillers(T.table(), n);
    CHECK(r.ok);
    CHECK(r.missing == 0);
    CHECK(r.multiple == 0);
    CHECK(r.boundaries == T.table().size(n));
  }
}

TEST_CASE("catalogue matrices") {
  CHECK(named_simplex("l") == lax(3, {1, 0, 0, 1, 1, 1}));
  CHECK(named_simplex("r") == lax(3, {0, 0, 1, 1, 1, 1}));
  CHECK(named_simplex("k") == lax(3, {0, 0, 0, 1, 1, 1}));
  CHECK(named_simplex("a") == lax(3, {1, 1, 1, 1, 1, 1}));
  CHECK(named_simplex("t") == lax(2, {1, 1, 1}));
  CHECK(named_simplex("i") == lax(2, {0, 0, 1}));
  CHECK(named_simplex("c") == lax(1, {1}));
}

TEST_CASE("catalogue names exhaust the non-degenerate simplices") {
  auto const rep = verify_catalogue();
  CHECK(rep.nondegenerate_per_level == std::vector<std::size_t>{1, 1, 2, 4, 9});
  std::set<LaxMatrix> named;
  for (auto const& e : catalogue()) {
    CHECK(e.matrix.level() == e.level);
    CHECK(e.faces.size() == (e.level == 0 ? 0 : e.level + 1));
    CHECK(named.insert(e.matrix).second);
  }
  for (std::size_t n = 0; n <= 4; ++n)
    for (auto const& x : nondegenerate_simplices(CatalanSet(4), n)) CHECK(named.contains(x));
}

TEST_CASE("recorded face tuples through level 3 have a unique filler") {
  for (auto const& e : catalogue()) {
    if (e.level > 3) continue;
    INFO(e.name);
    CHECK(e.verbatim);
    CHECK(to_string(e.recorded) == to_string(e.faces));
  }
}

TEST_CASE("recorded 4-simplex tuples: which resolve only after exchanging l and r") {
  // Six of the nine recorded tuples have no filler as written; each has
  // exactly one once l and r are exchanged.
  std::set<std::string> mismatched;
  for (auto const& e : catalogue())
    if (!e.verbatim) mismatched.insert(e.name);
  CHECK(mismatched == std::set<std::string>{"A3", "A4", "A6", "A7", "A8", "A9"});
  auto const rep = verify_catalogue();
  CHECK_FALSE(rep.ok);
  CHECK(std::set<std::string>(rep.mismatched.begin(), rep.mismatched.end()) == mismatched);
}

TEST_CASE("Dyck bijection") {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<DyckPath> seen;
    for (auto const& x : enumerate_level(n)) {
      auto const p = to_dyck(x);
      CHECK(p.size() == 2 * (n + 1));
      int h = 0;
      for (char ch : p) {
        h += ch == 'U' ? 1 : -1;
        CHECK(h >= 0);
      }
      CHECK(h == 0);
      CHECK(from_dyck(p) == x);
      seen.insert(p);
    }
    CHECK(seen.size() == catalan_number(n + 1));
  }
  CHECK(code_of([] { from_dyck("DU"); }) == Errc::InvalidInput);
}

TEST_CASE("Tamari covers have the known edge count") {
  // the Hasse diagram of the Tamari lattice on m nodes has (m-1) C_m / 2 edges
  for (std::size_t n = 0; n <= 6; ++n) {
    TamariLevel T(n);
    std::size_t edges = 0;
    for (std::size_t k = 0; k < T.elements().size(); ++k) edges += T.covers(k).size();
    CHECK(edges == n * catalan_number(n + 1) / 2);
    // unique bottom and top
    std::size_t bottoms = 0, tops = 0;
    for (auto const& x : T.elements()) {
      bool bottom = true, top = true;
      for (auto const& y : T.elements()) {
        if (!T.leq(x, y)) bottom = false;
        if (!T.leq(y, x)) top = false;
      }
      bottoms += bottom;
      tops += top;
    }
    CHECK(bottoms == 1);
    CHECK(tops == 1);
  }
}

TEST_CASE("order probe") {
  auto const p1 = order_probe(1);
  CHECK(p1.inclusion_preserved);
  CHECK(p1.tamari_faces_preserved);
  CHECK(p1.tamari_degeneracies_preserved);

  auto const p3 = order_probe(3);
  CHECK(p3.inclusion_preserved);
  CHECK(p3.inclusion_violations.empty());
  CHECK(p3.tamari_covers == 21);
  CHECK_FALSE(p3.tamari_faces_preserved);
  REQUIRE_FALSE(p3.tamari_violations.empty());
  TamariLevel const T3(3), T2(2), T4(4);
  for (auto const& v : p3.tamari_violations) {
    CHECK(T3.leq(v.lower, v.upper));
    auto const& target = v.lower_image.level() == 2 ? T2 : T4;
    CHECK_FALSE(target.leq(v.lower_image, v.upper_image));
  }
  CHECK(p3.remark_pattern_found);

  auto const p4 = order_probe(4);
  CHECK(p4.inclusion_preserved);
  CHECK(code_of([] { order_probe(7); }) == Errc::LevelTooLarge);
}

TEST_CASE("export is deterministic") {
  auto const j3 = export_level(3);
  CHECK(j3["n"] == 3);
  CHECK(j3["count"] == 14);
  CHECK(j3["simplices"].size() == 14);
  auto const& nd = j3["nondegenerate"];
  CHECK(std::count(nd.begin(), nd.end(), true) == 4);
  CHECK(export_level(0)["simplices"].size() == 1);
  CHECK(export_level(3).dump() == j3.dump());
  CHECK(export_level_text(4) == export_level_text(4));
}
