#include <catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "csimp/catalan/lax_matrix.hpp"
#include "csimp/bicat/nerve.hpp"
#include "csimp/maps.hpp"
#include "csimp/monotone.hpp"
#include "csimp/simplicial.hpp"
#include "csimp/tabulated.hpp"

using namespace csimp;
using catalan::CatalanSet;
using catalan::LaxMatrix;

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

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

LaxMatrix lax(std::size_t n, std::vector<int> bits) { return LaxMatrix::from_bits(n, bits); }

}  // namespace

TEST_CASE("make_monotone validates its input") {
  auto id = make_monotone(1, 1, {0, 1});
  CHECK(id.is_identity());
  auto d0 = make_monotone(0, 1, {1});
  CHECK(d0 == face_map(0, 1));
  CHECK(code_of([] { make_monotone(1, 1, {1, 0}); }) == Errc::NonMonotone);
  CHECK(code_of([] { make_monotone(1, 1, {0, 2}); }) == Errc::OutOfRange);
  CHECK(code_of([] { make_monotone(2, 1, {0, 1}); }) == Errc::DomainMismatch);
}

TEST_CASE("composition of monotone maps") {
  auto sigma0 = degeneracy_map(0, 0);
  auto delta0 = face_map(0, 1);
  CHECK(compose_monotone(sigma0, delta0).is_identity());
  auto c = compose_monotone(face_map(1, 2), face_map(0, 1));
  CHECK(c.domain_top() == 0);
  CHECK(c.codomain_top() == 2);
  CHECK(c.values() == std::vector<std::size_t>{2});
  auto xi = make_monotone(2, 3, {0, 2, 2});
  CHECK(compose_monotone(MonotoneMap::identity(3), xi) == xi);
  CHECK(code_of([] { compose_monotone(face_map(0, 1), face_map(0, 2)); }) == Errc::DomainMismatch);
}

TEST_CASE("generators") {
  CHECK(generator(GeneratorKind::face, 0, 1).values() == std::vector<std::size_t>{1});
  CHECK(generator(GeneratorKind::degeneracy, 1, 1).values() == std::vector<std::size_t>{0, 1, 1});
  CHECK(code_of([] { generator(GeneratorKind::face, 3, 2); }) == Errc::IndexOutOfRange);
}

TEST_CASE("all_monotone_maps has binomial size and no repeats") {
  for (std::size_t m = 0; m <= 5; ++m)
    for (std::size_t n = 0; n <= 5; ++n) {
      auto maps = all_monotone_maps(m, n);
      CHECK(maps.size() == choose(m + n + 1, m + 1));
      std::set<std::vector<std::size_t>> seen;
      for (auto const& f : maps) seen.insert(f.values());
      CHECK(seen.size() == maps.size());
    }
}

TEST_CASE("epi-mono factorisation recomposes every map up to level 5") {
  for (std::size_t m = 0; m <= 5; ++m)
    for (std::size_t n = 0; n <= 5; ++n)
      for (auto const& xi : all_monotone_maps(m, n)) {
        auto const f = factor(xi);
        INFO(xi.to_string());
        CHECK(recompose(f) == xi);
        CHECK(f.image_top + f.repeated.size() == m);
        CHECK(f.image_top + f.omitted.size() == n);
      }
}

TEST_CASE("simplicial identities on the generators") {
  // δ_j δ_i = δ_i δ_{j-1} for i < j, σ_j σ_i = σ_i σ_{j+1} for i <= j
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t j = 0; j <= n + 1; ++j)
      for (std::size_t i = 0; i < j; ++i)
        CHECK(compose_monotone(face_map(j, n + 1), face_map(i, n)) ==
              compose_monotone(face_map(i, n + 1), face_map(j - 1, n)));
  for (std::size_t n = 0; n <= 5; ++n)
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t i = 0; i <= j; ++i)
        CHECK(compose_monotone(degeneracy_map(j, n), degeneracy_map(i, n + 1)) ==
              compose_monotone(degeneracy_map(i, n), degeneracy_map(j + 1, n + 1)));
}

TEST_CASE("degeneracy detector examples") {
  CatalanSet C(5);
  CHECK_FALSE(is_degenerate(C, lax(2, {1, 1, 1})));
  auto c = lax(1, {1});
  CHECK(is_degenerate(C, degeneracy(C, 0, c)));
  CHECK(is_degenerate(C, lax(1, {0})));
  CHECK(code_of([&] { is_degenerate(C, LaxMatrix(0)); }) == Errc::LevelOutOfRange);
}

TEST_CASE("degeneracy detector agrees with the image of the s_i") {
  CatalanSet C(5);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<LaxMatrix> image;
    for (auto const& y : C.level(n - 1))
      for (std::size_t i = 0; i < n; ++i) image.insert(C.act(degeneracy_map(i, n - 1), y));
    for (auto const& x : C.level(n)) {
      CHECK(is_degenerate(C, x) == image.contains(x));
      CHECK(catalan::is_degenerate_direct(x) == image.contains(x));
    }
  }
}

TEST_CASE("functoriality of the action on the Catalan set up to level 5") {
  CHECK(functoriality_violations(CatalanSet(5), 5) == 0);
  CHECK(functoriality_violations(PointSet(5), 5) == 0);
}

TEST_CASE("identity harness passes on the Catalan set and the nerve of (2,or,0)") {
  auto r = verify_simplicial_identities(CatalanSet(5), 5);
  CHECK(r.ok);
  CHECK(r.checks > 0);
  bicat::MonoidalNerve N(bicat::embed(bicat::two_or()), 4);
  CHECK(verify_simplicial_identities(N, 4).ok);
  CHECK(verify_simplicial_identities(PointSet(4), 4).ok);
  CHECK(code_of([] { verify_simplicial_identities(CatalanSet(3), 4); }) == Errc::LevelOutOfRange);
}

TEST_CASE("identity harness names the identity broken by a corrupted table") {
  Tabulated T(CatalanSet(3), 3);
  SECTION("a face entry") {
    auto& t = T.table();
    auto const top = T.index_of(lax(2, {1, 1, 1}));
    t.set_face(2, 0, top, (t.d(2, 0, top) + 1) % t.size(1));
    auto r = verify_simplicial_identities(t, 3);
    CHECK_FALSE(r.ok);
    CHECK(r.first_violation.starts_with("d_i"));
  }
  SECTION("a degeneracy entry") {
    auto& t = T.table();
    t.set_degeneracy(1, 0, 0, (t.s(1, 0, 0) + 1) % t.size(2));
    auto r = verify_simplicial_identities(t, 3);
    CHECK_FALSE(r.ok);
    CHECK(r.first_violation.find("s_j") != std::string::npos);
  }
}

TEST_CASE("tabulated copies agree with the model") {
  CatalanSet C(4);
  Tabulated T(C, 4);
  auto const& t = T.table();
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(t.size(n) == C.level(n).size());
    for (std::size_t m = 0; m <= 4; ++m)
      for (auto const& xi : all_monotone_maps(m, n))
        for (std::size_t x = 0; x < t.size(n); ++x)
          CHECK(T.simplex(m, t.act(xi, {n, x}).index) == C.act(xi, T.simplex(n, x)));
  }
}

TEST_CASE("boundaries and fillers") {
  CatalanSet C(3);
  auto b = boundary_of(C, lax(3, {1, 1, 1, 1, 1, 1}));
  CHECK(is_compatible(C, b));
  b.entries[0] = lax(2, {0, 0, 1});
  CHECK_FALSE(is_compatible(C, b));
  Tabulated T(C, 3);
  // (c, ★s_0, c): x(1,2)=1, x(0,2)=0, x(0,1)=1 breaks the closure law
  std::size_t const c = T.index_of(lax(1, {1})), z = T.index_of(lax(1, {0}));
  CHECK(T.table().fillers(2, {c, z, c}).empty());
  CHECK(T.table().fillers(2, {c, c, c}).size() == 1);
}

namespace {

// Brute force over every family of level-wise functions f_n: X_n -> Y_n,
// n <= r, keeping those that commute with every monotone map.
std::size_t brute_force_maps(SimplicialTable const& X, SimplicialTable const& Y, std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t n = 0; n <= r; ++n)
    for (std::size_t x = 0; x < X.size(n); ++x) slots.emplace_back(n, x);
  TruncatedMap f;
  f.values.resize(r + 1);
  for (std::size_t n = 0; n <= r; ++n) f.values[n].assign(X.size(n), 0);
  std::size_t count = 0;
  while (true) {
    if (naturality_violation(X, Y, r, f).empty()) ++count;
    std::size_t k = 0;
    for (; k < slots.size(); ++k) {
      auto [n, x] = slots[k];
      if (++f.values[n][x] < Y.size(n)) break;
      f.values[n][x] = 0;
    }
    if (k == slots.size()) return count;
  }
}

}  // namespace

TEST_CASE("map enumeration counts") {
  Tabulated X(CatalanSet(5), 5);
  SECTION("Catalan to itself") {
    auto e = enumerate_truncated_maps(X.table(), X.table(), 4);
    CHECK(e.maps.size() == 2);
  }
  SECTION("Catalan to the point") {
    Tabulated P(PointSet(4), 4);
    CHECK(enumerate_truncated_maps(X.table(), P.table(), 4).maps.size() == 1);
  }
  SECTION("Catalan to the plain nerve of the suspension") {
    bicat::BicatNerve N(bicat::suspend(bicat::two_or()).bicat, 5);
    Tabulated Y(N, 5);
    MapEnumerationOptions opt;
    opt.assert_coskeletal = true;
    CHECK(enumerate_truncated_maps(X.table(), Y.table(), 4, opt).maps.size() == 2);
  }
}

TEST_CASE("map enumeration matches a brute force over all level-wise functions") {
  Tabulated X(CatalanSet(2), 2);
  bicat::BicatNerve N(bicat::suspend(bicat::two_or()).bicat, 2);
  Tabulated Y(N, 2);
  bicat::BicatNerve D(bicat::discrete_bicat({"p", "q"}), 2);
  Tabulated Z(D, 2);
  for (auto const* target : {&X.table(), &Y.table(), &Z.table()}) {
    auto e = enumerate_truncated_maps(X.table(), *target, 2);
    CHECK(e.maps.size() == brute_force_maps(X.table(), *target, 2));
  }
}

TEST_CASE("enumerated maps pass naturality and rejections carry witnesses") {
  Tabulated X(CatalanSet(4), 4);
  auto e = enumerate_truncated_maps(X.table(), X.table(), 4);
  for (auto const& f : e.maps) CHECK(naturality_violation(X.table(), X.table(), 4, f).empty());
  CHECK(e.rejected > 0);
  REQUIRE_FALSE(e.witnesses.empty());
  for (auto const& w : e.witnesses) {
    CHECK(X.table().is_nondegenerate(w.level, w.source));
    CHECK(w.expected < X.table().size(w.level - 1));
    CHECK(X.table().d(w.level, w.face, w.candidate) != w.expected);
  }
}

TEST_CASE("coskeletal assertion rejects an under-tabulated or non-coskeletal target") {
  Tabulated X(CatalanSet(2), 2);
  MapEnumerationOptions opt;
  opt.assert_coskeletal = true;
  CHECK(code_of([&] { enumerate_truncated_maps(X.table(), X.table(), 2, opt); }) == Errc::NotCoskeletal);
  // 2-boundaries of the Catalan set need not have a filler, so it is not 1-coskeletal
  CHECK(code_of([&] { enumerate_truncated_maps(X.table(), X.table(), 1, opt); }) == Errc::NotCoskeletal);
}
