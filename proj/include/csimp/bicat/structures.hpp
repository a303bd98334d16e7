#pragma once

// Finite strict locally-posetal inputs: monoidal posets, 2-categories whose
// homs are posets, and monoidal versions of the latter. Everything is stored
// by index; names exist for I/O and reports.
//
// Conventions: compose[g][f] = g ∘ f (f first), defined iff f.to == g.from;
// cell_tensor[f][g] = f ⊗ g : f.from ⊗ g.from -> f.to ⊗ g.to.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "csimp/error.hpp"

namespace csimp::bicat {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

using Table = std::vector<std::vector<std::size_t>>;
using Order = std::vector<std::vector<bool>>;

struct ValidationReport {
  bool ok = true;
  std::size_t checks = 0;
  std::string first_violation;

  void fail(std::string why) {
    if (ok) first_violation = std::move(why);
    ok = false;
  }
  bool check(bool cond, auto&& describe) {
    ++checks;
    if (!cond) fail(describe());
    return cond;
  }
};

inline std::size_t find_name(std::vector<std::string> const& names, std::string const& name, char const* what) {
  for (std::size_t k = 0; k < names.size(); ++k)
    if (names[k] == name) return k;
  throw Error(Errc::InvalidInput, std::string("unknown ") + what + " " + name);
}

struct MonoidalPoset {
  std::vector<std::string> elements;
  Order leq;     // leq[a][b] ⇔ a <= b
  Table tensor;  // tensor[a][b] = a ⊗ b
  std::size_t unit = 0;

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t index_of(std::string const& name) const { return find_name(elements, name, "element"); }
  bool is_commutative() const {
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        if (tensor[a][b] != tensor[b][a]) return false;
    return true;
  }
};

struct Cell {
  std::size_t from = 0;
  std::size_t to = 0;
  std::string name;
};

struct PosetalBicat {
  std::vector<std::string> objects;
  std::vector<Cell> cells;
  Order leq;       // only between parallel cells
  Table compose;   // compose[g][f] = g ∘ f, npos when not composable
  std::vector<std::size_t> identities;

  std::size_t object_index(std::string const& name) const { return find_name(objects, name, "object"); }
  std::size_t cell_index(std::string const& name) const {
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (cells[k].name == name) return k;
    throw Error(Errc::InvalidInput, "unknown cell " + name);
  }

  std::size_t comp(std::size_t g, std::size_t f) const {
    auto const h = compose.at(g).at(f);
    if (h == npos) throw Error(Errc::InvalidInput, cells[g].name + " and " + cells[f].name + " do not compose");
    return h;
  }
  bool le(std::size_t f, std::size_t g) const { return leq.at(f).at(g); }
  std::size_t id(std::size_t x) const { return identities.at(x); }

  std::vector<std::size_t> hom(std::size_t x, std::size_t y) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (cells[k].from == x && cells[k].to == y) out.push_back(k);
    return out;
  }
};

struct PosetalMonoidalBicat {
  PosetalBicat bicat;
  Table obj_tensor;
  Table cell_tensor;
  std::size_t unit_object = 0;

  std::size_t tensor(std::size_t f, std::size_t g) const { return cell_tensor.at(f).at(g); }
  std::size_t otensor(std::size_t x, std::size_t y) const { return obj_tensor.at(x).at(y); }
};

namespace detail {

inline bool square(Table const& t, std::size_t n) {
  if (t.size() != n) return false;
  for (auto const& row : t)
    if (row.size() != n) return false;
  return true;
}
inline bool square(Order const& t, std::size_t n) {
  if (t.size() != n) return false;
  for (auto const& row : t)
    if (row.size() != n) return false;
  return true;
}

inline void validate_order(Order const& leq, std::vector<std::string> const& names, ValidationReport& rep,
                           auto&& comparable) {
  std::size_t const n = names.size();
  for (std::size_t a = 0; a < n; ++a) {
    rep.check(leq[a][a], [&] { return "leq is not reflexive at " + names[a]; });
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq[a][b]) continue;
      rep.check(comparable(a, b), [&] { return names[a] + " <= " + names[b] + " relates non-parallel cells"; });
      rep.check(a == b || !leq[b][a], [&] { return "leq is not antisymmetric on " + names[a] + ", " + names[b]; });
      for (std::size_t c = 0; c < n; ++c)
        if (leq[b][c])
          rep.check(leq[a][c], [&] {
            return "leq is not transitive: " + names[a] + " <= " + names[b] + " <= " + names[c];
          });
    }
  }
}

}  // namespace detail

inline ValidationReport validate(MonoidalPoset const& p) {
  ValidationReport rep;
  std::size_t const n = p.size();
  if (n == 0) {
    rep.fail("no elements");
    return rep;
  }
  if (!detail::square(p.leq, n) || !detail::square(p.tensor, n) || p.unit >= n) {
    rep.fail("table shapes do not match the element list");
    return rep;
  }
  for (auto const& row : p.tensor)
    for (auto v : row)
      if (v >= n) {
        rep.fail("tensor value out of range");
        return rep;
      }
  auto const& e = p.elements;
  detail::validate_order(p.leq, e, rep, [](std::size_t, std::size_t) { return true; });
  for (std::size_t a = 0; a < n; ++a) {
    rep.check(p.tensor[p.unit][a] == a && p.tensor[a][p.unit] == a,
              [&] { return "unit law fails at " + e[a]; });
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        rep.check(p.tensor[p.tensor[a][b]][c] == p.tensor[a][p.tensor[b][c]],
                  [&] { return "tensor is not associative at (" + e[a] + "," + e[b] + "," + e[c] + ")"; });
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.leq[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        rep.check(p.leq[p.tensor[a][c]][p.tensor[b][c]], [&] {
          return "tensor is not monotone: " + e[a] + " <= " + e[b] + " but " + e[a] + "⊗" + e[c] +
                 " not <= " + e[b] + "⊗" + e[c];
        });
        rep.check(p.leq[p.tensor[c][a]][p.tensor[c][b]], [&] {
          return "tensor is not monotone: " + e[a] + " <= " + e[b] + " but " + e[c] + "⊗" + e[a] +
                 " not <= " + e[c] + "⊗" + e[b];
        });
      }
    }
  return rep;
}

inline ValidationReport validate(PosetalBicat const& k) {
  ValidationReport rep;
  std::size_t const no = k.objects.size();
  std::size_t const nc = k.cells.size();
  if (no == 0) {
    rep.fail("no objects");
    return rep;
  }
  if (!detail::square(k.leq, nc) || !detail::square(k.compose, nc) || k.identities.size() != no) {
    rep.fail("table shapes do not match the object and cell lists");
    return rep;
  }
  std::vector<std::string> names;
  for (auto const& c : k.cells) {
    if (c.from >= no || c.to >= no) {
      rep.fail("cell " + c.name + " has an unknown endpoint");
      return rep;
    }
    names.push_back(c.name);
  }
  for (std::size_t x = 0; x < no; ++x) {
    auto const i = k.identities[x];
    if (i >= nc || k.cells[i].from != x || k.cells[i].to != x) {
      rep.fail("identity of " + k.objects[x] + " is not an endo-cell on it");
      return rep;
    }
  }
  detail::validate_order(k.leq, names, rep, [&](std::size_t a, std::size_t b) {
    return k.cells[a].from == k.cells[b].from && k.cells[a].to == k.cells[b].to;
  });
  for (std::size_t g = 0; g < nc; ++g)
    for (std::size_t f = 0; f < nc; ++f) {
      auto const h = k.compose[g][f];
      if (k.cells[f].to != k.cells[g].from) {
        rep.check(h == npos, [&] { return "composite " + names[g] + "∘" + names[f] + " given for non-composable cells"; });
        continue;
      }
      if (!rep.check(h != npos && h < nc, [&] { return "composite " + names[g] + "∘" + names[f] + " is missing"; }))
        return rep;
      rep.check(k.cells[h].from == k.cells[f].from && k.cells[h].to == k.cells[g].to,
                [&] { return "composite " + names[g] + "∘" + names[f] + " has the wrong endpoints"; });
    }
  if (!rep.ok) return rep;
  for (std::size_t f = 0; f < nc; ++f) {
    auto const& c = k.cells[f];
    rep.check(k.compose[f][k.id(c.from)] == f && k.compose[k.id(c.to)][f] == f,
              [&] { return "identity law fails at " + names[f]; });
  }
  for (std::size_t f = 0; f < nc; ++f)
    for (std::size_t g = 0; g < nc; ++g) {
      if (k.cells[f].to != k.cells[g].from) continue;
      for (std::size_t h = 0; h < nc; ++h) {
        if (k.cells[g].to != k.cells[h].from) continue;
        rep.check(k.compose[h][k.compose[g][f]] == k.compose[k.compose[h][g]][f],
                  [&] { return "composition is not associative at (" + names[h] + "," + names[g] + "," + names[f] + ")"; });
      }
    }
  // monotone in each argument
  for (std::size_t f = 0; f < nc; ++f)
    for (std::size_t f2 = 0; f2 < nc; ++f2) {
      if (f == f2 || !k.leq[f][f2]) continue;
      for (std::size_t g = 0; g < nc; ++g) {
        if (k.cells[f].to == k.cells[g].from)
          rep.check(k.leq[k.compose[g][f]][k.compose[g][f2]], [&] {
            return "composition is not monotone: " + names[f] + " <= " + names[f2] + " after " + names[g];
          });
        if (k.cells[g].to == k.cells[f].from)
          rep.check(k.leq[k.compose[f][g]][k.compose[f2][g]], [&] {
            return "composition is not monotone: " + names[f] + " <= " + names[f2] + " before " + names[g];
          });
      }
    }
  return rep;
}

inline ValidationReport validate(PosetalMonoidalBicat const& b) {
  auto rep = validate(b.bicat);
  if (!rep.ok) return rep;
  auto const& k = b.bicat;
  std::size_t const no = k.objects.size();
  std::size_t const nc = k.cells.size();
  if (!detail::square(b.obj_tensor, no) || !detail::square(b.cell_tensor, nc) || b.unit_object >= no) {
    rep.fail("tensor table shapes do not match the object and cell lists");
    return rep;
  }
  for (auto const& row : b.obj_tensor)
    for (auto v : row)
      if (v >= no) {
        rep.fail("object tensor value out of range");
        return rep;
      }
  for (auto const& row : b.cell_tensor)
    for (auto v : row)
      if (v >= nc) {
        rep.fail("cell tensor value out of range");
        return rep;
      }
  auto const& on = k.objects;
  auto cn = [&](std::size_t f) { return k.cells[f].name; };
  std::size_t const u = b.unit_object;
  for (std::size_t x = 0; x < no; ++x) {
    rep.check(b.obj_tensor[u][x] == x && b.obj_tensor[x][u] == x, [&] { return "object unit law fails at " + on[x]; });
    for (std::size_t y = 0; y < no; ++y)
      for (std::size_t z = 0; z < no; ++z)
        rep.check(b.obj_tensor[b.obj_tensor[x][y]][z] == b.obj_tensor[x][b.obj_tensor[y][z]],
                  [&] { return "object tensor is not associative at (" + on[x] + "," + on[y] + "," + on[z] + ")"; });
  }
  for (std::size_t f = 0; f < nc; ++f)
    for (std::size_t g = 0; g < nc; ++g) {
      auto const h = b.cell_tensor[f][g];
      rep.check(k.cells[h].from == b.obj_tensor[k.cells[f].from][k.cells[g].from] &&
                    k.cells[h].to == b.obj_tensor[k.cells[f].to][k.cells[g].to],
                [&] { return "cell tensor " + cn(f) + "⊗" + cn(g) + " has the wrong endpoints"; });
    }
  if (!rep.ok) return rep;
  std::size_t const iu = k.id(u);
  for (std::size_t f = 0; f < nc; ++f) {
    rep.check(b.cell_tensor[iu][f] == f && b.cell_tensor[f][iu] == f, [&] { return "cell unit law fails at " + cn(f); });
    for (std::size_t g = 0; g < nc; ++g)
      for (std::size_t h = 0; h < nc; ++h)
        rep.check(b.cell_tensor[b.cell_tensor[f][g]][h] == b.cell_tensor[f][b.cell_tensor[g][h]],
                  [&] { return "cell tensor is not associative at (" + cn(f) + "," + cn(g) + "," + cn(h) + ")"; });
  }
  for (std::size_t x = 0; x < no; ++x)
    for (std::size_t y = 0; y < no; ++y)
      rep.check(b.cell_tensor[k.id(x)][k.id(y)] == k.id(b.obj_tensor[x][y]),
                [&] { return "tensor does not preserve identities at (" + on[x] + "," + on[y] + ")"; });
  // monotone in each argument
  for (std::size_t f = 0; f < nc; ++f)
    for (std::size_t f2 = 0; f2 < nc; ++f2) {
      if (f == f2 || !k.leq[f][f2]) continue;
      for (std::size_t g = 0; g < nc; ++g) {
        rep.check(k.leq[b.cell_tensor[f][g]][b.cell_tensor[f2][g]],
                  [&] { return "cell tensor is not monotone: " + cn(f) + " <= " + cn(f2) + ", right factor " + cn(g); });
        rep.check(k.leq[b.cell_tensor[g][f]][b.cell_tensor[g][f2]],
                  [&] { return "cell tensor is not monotone: " + cn(f) + " <= " + cn(f2) + ", left factor " + cn(g); });
      }
    }
  // interchange, (f ⊗ 1)∘(1 ⊗ g) = (1 ⊗ g)∘(f ⊗ 1), and preservation of composites
  for (std::size_t f = 0; f < nc; ++f)
    for (std::size_t g = 0; g < nc; ++g) {
      auto const& cf = k.cells[f];
      auto const& cg = k.cells[g];
      auto const lhs = k.compose[b.cell_tensor[f][k.id(cg.to)]][b.cell_tensor[k.id(cf.from)][g]];
      auto const rhs = k.compose[b.cell_tensor[k.id(cf.to)][g]][b.cell_tensor[f][k.id(cg.from)]];
      rep.check(lhs == rhs, [&] { return "interchange fails for " + cn(f) + ", " + cn(g); });
      rep.check(lhs == b.cell_tensor[f][g], [&] { return "tensor does not preserve composition at " + cn(f) + ", " + cn(g); });
    }
  return rep;
}

inline void require_valid(auto const& input) {
  if (auto const rep = validate(input); !rep.ok) throw Error(Errc::InvalidInput, rep.first_violation);
}

/// The poset as a locally discrete 2-category with one cell "a<=b" per
/// comparable pair and the tensor carried over.
inline PosetalMonoidalBicat embed(MonoidalPoset const& p) {
  require_valid(p);
  std::size_t const n = p.size();
  PosetalMonoidalBicat b;
  auto& k = b.bicat;
  k.objects = p.elements;
  Table cell_of(n, std::vector<std::size_t>(n, npos));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      if (p.leq[a][c]) {
        cell_of[a][c] = k.cells.size();
        k.cells.push_back({a, c, p.elements[a] + "<=" + p.elements[c]});
      }
  std::size_t const nc = k.cells.size();
  k.leq.assign(nc, std::vector<bool>(nc, false));
  k.compose.assign(nc, std::vector<std::size_t>(nc, npos));
  b.cell_tensor.assign(nc, std::vector<std::size_t>(nc, npos));
  for (std::size_t f = 0; f < nc; ++f) {
    k.leq[f][f] = true;
    for (std::size_t g = 0; g < nc; ++g) {
      auto const& cf = k.cells[f];
      auto const& cg = k.cells[g];
      if (cf.to == cg.from) k.compose[g][f] = cell_of[cf.from][cg.to];
      b.cell_tensor[f][g] = cell_of[p.tensor[cf.from][cg.from]][p.tensor[cf.to][cg.to]];
    }
  }
  for (std::size_t a = 0; a < n; ++a) k.identities.push_back(cell_of[a][a]);
  b.obj_tensor = p.tensor;
  b.unit_object = p.unit;
  return b;
}

/// The one-object 2-category with hom M, composition and tensor both given
/// by M's tensor. Lawful only when M is commutative.
inline PosetalMonoidalBicat suspend(MonoidalPoset const& m) {
  require_valid(m);
  if (!m.is_commutative()) throw Error(Errc::NotCommutative, "suspension needs a commutative tensor");
  PosetalMonoidalBicat b;
  auto& k = b.bicat;
  k.objects = {"*"};
  for (auto const& e : m.elements) k.cells.push_back({0, 0, e});
  k.leq = m.leq;
  k.compose = m.tensor;
  k.identities = {m.unit};
  b.obj_tensor = {{0}};
  b.cell_tensor = m.tensor;
  b.unit_object = 0;
  return b;
}

/// Builds a monoidal poset from names; leq must list every pair (including
/// reflexive ones) and tensor every ordered pair of elements.
inline MonoidalPoset make_monoidal_poset(std::vector<std::string> elements,
                                         std::vector<std::pair<std::string, std::string>> const& leq,
                                         std::vector<std::vector<std::string>> const& tensor, std::string const& unit) {
  MonoidalPoset p;
  p.elements = std::move(elements);
  std::size_t const n = p.size();
  p.leq.assign(n, std::vector<bool>(n, false));
  for (auto const& [a, b] : leq) p.leq[p.index_of(a)][p.index_of(b)] = true;
  if (tensor.size() != n) throw Error(Errc::InvalidInput, "tensor table has the wrong number of rows");
  p.tensor.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (tensor[a].size() != n) throw Error(Errc::InvalidInput, "tensor table row has the wrong length");
    for (std::size_t c = 0; c < n; ++c) p.tensor[a][c] = p.index_of(tensor[a][c]);
  }
  p.unit = p.index_of(unit);
  return p;
}

/// A finite chain 0 < 1 < ... < n-1 with tensor max (unit bottom) or min (unit top).
inline MonoidalPoset chain(std::size_t n, bool use_max) {
  MonoidalPoset p;
  for (std::size_t a = 0; a < n; ++a) p.elements.push_back(std::to_string(a));
  p.leq.assign(n, std::vector<bool>(n, false));
  p.tensor.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      p.leq[a][b] = a <= b;
      p.tensor[a][b] = use_max ? std::max(a, b) : std::min(a, b);
    }
  p.unit = use_max ? 0 : n - 1;
  return p;
}

/// (2, ∨, 0) and (2, ∧, 1).
inline MonoidalPoset two_or() { return chain(2, true); }
inline MonoidalPoset two_and() { return chain(2, false); }

/// One object with only its identity cell.
inline PosetalBicat trivial_bicat() {
  PosetalBicat k;
  k.objects = {"*"};
  k.cells = {{0, 0, "1"}};
  k.leq = {{true}};
  k.compose = {{0}};
  k.identities = {0};
  return k;
}

/// Objects with identity cells only.
inline PosetalBicat discrete_bicat(std::vector<std::string> objects) {
  PosetalBicat k;
  k.objects = std::move(objects);
  std::size_t const n = k.objects.size();
  for (std::size_t x = 0; x < n; ++x) {
    k.cells.push_back({x, x, "1_" + k.objects[x]});
    k.identities.push_back(x);
  }
  k.leq.assign(n, std::vector<bool>(n, false));
  k.compose.assign(n, std::vector<std::size_t>(n, npos));
  for (std::size_t x = 0; x < n; ++x) {
    k.leq[x][x] = true;
    k.compose[x][x] = x;
  }
  return k;
}

}  // namespace csimp::bicat
