#include <catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "csimp/bicat/io.hpp"
#include "csimp/classify/classify.hpp"

using namespace csimp;
using namespace csimp::bicat;
using namespace csimp::classify;

namespace {

std::string suite(std::string const& name) { return std::string(CSIMP_SUITE_DIR) + "/" + name + ".json"; }

// Skew monoidales in a poset seen as a locally discrete 2-category: the
// cells t and i exist iff A⊗A <= A and e <= A, and are then unique.
std::size_t poset_monoidales(MonoidalPoset const& p) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    if (p.leq[p.tensor[a][a]][a] && p.leq[p.unit][a]) ++count;
  return count;
}

// In the suspension, α is automatic and λ, ρ say t·i <= e <= t·i.
std::size_t suspension_monoidales(MonoidalPoset const& m) {
  std::size_t count = 0;
  for (std::size_t t = 0; t < m.size(); ++t)
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto const ti = m.tensor[t][i];
      if (m.leq[ti][m.unit] && m.leq[m.unit][ti]) ++count;
    }
  return count;
}

// Monads in the suspension: t·t <= t and e <= t.
std::set<std::size_t> suspension_monads(MonoidalPoset const& m) {
  std::set<std::size_t> out;
  for (std::size_t t = 0; t < m.size(); ++t)
    if (m.leq[m.tensor[t][t]][t] && m.leq[m.unit][t]) out.insert(t);
  return out;
}

MonoidalPoset chain4_plus() {
  // 0 < 1 < 2 < 3 with truncated addition, unit 0
  std::vector<std::string> e{"0", "1", "2", "3"};
  std::vector<std::pair<std::string, std::string>> leq;
  std::vector<std::vector<std::string>> t(4, std::vector<std::string>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      if (a <= b) leq.emplace_back(e[a], e[b]);
      t[a][b] = e[std::min<std::size_t>(a + b, 3)];
    }
  return make_monoidal_poset(e, leq, t, "0");
}

}  // namespace

TEST_CASE("skew monoidale counts") {
  CHECK(skew_monoidales(embed(two_or())).size() == 2);
  CHECK(skew_monoidales(embed(two_and())).size() == 1);
  CHECK(skew_monoidales(embed(two_and()))[0].carrier == 1);
  CHECK(skew_monoidales(embed(chain(3, true))).size() == 3);
  CHECK(skew_monoidales(embed(chain(3, false))).size() == 1);
  auto const s = suspend(two_or());
  auto const sm = skew_monoidales(s);
  REQUIRE(sm.size() == 1);
  CHECK(sm[0].mult == 0);
  CHECK(sm[0].unit == 0);
}

TEST_CASE("skew monoidale counts against direct poset computations") {
  for (auto const& p : {two_or(), two_and(), chain(3, true), chain(3, false), chain(4, true), chain4_plus()}) {
    CHECK(skew_monoidales(embed(p)).size() == poset_monoidales(p));
    CHECK(skew_monoidales(suspend(p)).size() == suspension_monoidales(p));
  }
}

TEST_CASE("kappa holds on every candidate of the suite") {
  for (auto const* name : {"or2", "and2", "chain3-max", "chain3-min", "sigma-or2"}) {
    auto const b = load_input(suite(name)).as_monoidal();
    for (auto const& m : skew_candidates(b)) CHECK(kappa_holds(b, m));
  }
}

TEST_CASE("monad counts") {
  CHECK(monads(suspend(two_or()).bicat).size() == 2);
  CHECK(monads(embed(two_or()).bicat).size() == 2);
  CHECK(monads(trivial_bicat()).size() == 1);
}

TEST_CASE("monads in a suspension computed two ways") {
  for (auto const& m : {two_or(), two_and(), chain(3, true), chain(3, false), chain4_plus()}) {
    std::set<std::size_t> found;
    for (auto const& t : monads(suspend(m).bicat)) found.insert(t.endo);
    CHECK(found == suspension_monads(m));
  }
}

TEST_CASE("maps from the Catalan set") {
  CHECK(maps_from_catalan(embed(two_or())).size() == 2);
  CHECK(maps_from_catalan(embed(two_and())).size() == 1);
  CHECK(maps_from_catalan(suspend(two_or()).bicat).size() == 2);
}

TEST_CASE("direct classification agrees with generic enumeration") {
  for (auto const* name : {"or2", "and2", "chain3-max", "chain3-min", "sigma-or2"}) {
    INFO(name);
    auto const b = load_input(suite(name)).as_monoidal();
    MonoidalContext const ctx(b);
    auto const direct = direct_classification(ctx);
    auto const generic = ctx.maps_from_catalan();
    REQUIRE(direct.size() == generic.size());
    for (std::size_t k = 0; k < direct.size(); ++k) CHECK(direct[k].map == generic[k].map);
  }
  CHECK(direct_classification(embed(chain(3, true))).size() == 3);
  CHECK(direct_classification(embed(chain(3, false))).size() == 1);
}

TEST_CASE("every map re-checks naturality and lands on nerve simplices") {
  for (auto const* name : {"or2", "chain3-max", "sigma-or2"}) {
    auto const b = load_input(suite(name)).as_monoidal();
    MonoidalContext const ctx(b);
    for (auto const& m : ctx.maps_from_catalan()) {
      CHECK(naturality_violation(ctx.source().table(), ctx.target().table(), kTruncation, m.map).empty());
      for (auto const* a : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9"}) CHECK(is_nerve_simplex(b, m.at(a)));
    }
  }
}

TEST_CASE("theorem verdicts on the suite") {
  struct Case {
    char const* name;
    std::size_t count;
  };
  for (auto const& c : {Case{"or2", 2}, Case{"and2", 1}, Case{"chain3-max", 3}, Case{"chain3-min", 1},
                        Case{"sigma-or2", 1}, Case{"poset-or2", 2}}) {
    INFO(c.name);
    auto const rep = verify_theorem(load_input(suite(c.name)).as_monoidal(), c.name);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
    CHECK(rep.verdict() == "OK");
    CHECK(rep.map_count == c.count);
    CHECK(rep.structure_count == c.count);
    CHECK(rep.direct_count == c.count);
    CHECK(rep.correspondence.size() == c.count);
  }
}

TEST_CASE("monad verdicts") {
  struct Case {
    char const* name;
    std::size_t count;
  };
  for (auto const& c : {Case{"sigma-or2", 2}, Case{"chain2-discrete", 2}, Case{"trivial", 1}}) {
    INFO(c.name);
    auto const rep = verify_monad_remark(load_input(suite(c.name)).as_bicat(), c.name);
    CHECK(rep.ok);
    CHECK(rep.map_count == c.count);
    CHECK(rep.structure_count == c.count);
  }
}

TEST_CASE("report json layout") {
  auto const j = verify_theorem(embed(two_or()), "or2").to_json();
  std::vector<std::string> keys;
  for (auto const& [k, _] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"input", "maps", "structures", "verdict", "correspondence"});
  CHECK(j["verdict"] == "OK");
  CHECK(j["correspondence"].size() == 2);
  CHECK(j["correspondence"][0].contains("map"));
  CHECK(j["correspondence"][0].contains("structure"));
}
