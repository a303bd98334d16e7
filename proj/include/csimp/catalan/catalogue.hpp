#pragma once

// The named non-degenerate simplices of ℂ in dimensions 0 to 4, each recorded
// by its full face tuple (d_0, ..., d_n). Faces are earlier names or
// degeneracies of them, written outermost first: s0s1(c) = s_0(s_1(c)).
//
// The recorded 4-simplex tuples are kept exactly as published. Six of them
// (A3, A4, A6, A7, A8, A9) only have a filler once ℓ and r are exchanged;
// such entries resolve through the exchange and are flagged, and
// verify_catalogue() reports them.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "csimp/catalan/lax_matrix.hpp"
#include "csimp/error.hpp"
#include "csimp/simplicial.hpp"

namespace csimp::catalan {

struct FaceExpr {
  std::vector<std::size_t> degeneracies;  // outermost first
  std::string base;

  std::string to_string() const {
    std::string s;
    for (auto d : degeneracies) s += "s" + std::to_string(d);
    return s.empty() ? base : s + "(" + base + ")";
  }
  bool operator==(FaceExpr const&) const = default;
};

inline std::string to_string(std::vector<FaceExpr> const& faces) {
  std::string s = "(";
  for (std::size_t i = 0; i < faces.size(); ++i) s += (i ? ", " : "") + faces[i].to_string();
  return s + ")";
}

struct NamedSimplex {
  std::string name;
  std::size_t level = 0;
  std::vector<FaceExpr> recorded;  // as published
  std::vector<FaceExpr> faces;     // recomputed by pullback and named
  LaxMatrix matrix;
  bool verbatim = true;  // recorded tuple has this simplex as its filler
};

namespace detail {

inline FaceExpr f(std::string base) { return {{}, std::move(base)}; }
inline FaceExpr f(std::vector<std::size_t> degs, std::string base) { return {std::move(degs), std::move(base)}; }

struct Entry {
  std::string name;
  std::size_t level;
  std::vector<FaceExpr> faces;
};

inline std::vector<Entry> catalogue_entries() {
  return {
      {"star", 0, {}},
      {"c", 1, {f("star"), f("star")}},
      {"t", 2, {f("c"), f("c"), f("c")}},
      {"i", 2, {f({0}, "star"), f("c"), f({0}, "star")}},
      {"a", 3, {f("t"), f("t"), f("t"), f("t")}},
      {"l", 3, {f("i"), f({1}, "c"), f("t"), f({1}, "c")}},
      {"r", 3, {f({0}, "c"), f("t"), f({0}, "c"), f("i")}},
      {"k", 3, {f("i"), f({1}, "c"), f({0}, "c"), f("i")}},
      {"A1", 4, {f("a"), f("a"), f("a"), f("a"), f("a")}},
      {"A2", 4, {f("r"), f({1}, "t"), f("a"), f({1}, "t"), f("l")}},
      {"A3", 4, {f("r"), f("r"), f({2}, "t"), f("a"), f({2}, "t")}},
      {"A4", 4, {f({0}, "t"), f("a"), f({0}, "t"), f("l"), f("l")}},
      {"A5", 4, {f({1}, "i"), f({2}, "i"), f("k"), f({0}, "i"), f({1}, "i")}},
      {"A6", 4, {f({0}, "i"), f("r"), f("k"), f("l"), f({2}, "i")}},
      {"A7", 4, {f("k"), f("r"), f({0, 1}, "c"), f("l"), f("k")}},
      {"A8", 4, {f("l"), f({1}, "t"), f({0}, "t"), f("l"), f("k")}},
      {"A9", 4, {f("k"), f("r"), f({2}, "t"), f({1}, "t"), f("r")}},
  };
}

inline LaxMatrix evaluate(FaceExpr const& e, std::map<std::string, LaxMatrix> const& known) {
  auto it = known.find(e.base);
  if (it == known.end()) throw Error(Errc::InvalidInput, "catalogue refers to unknown simplex " + e.base);
  LaxMatrix x = it->second;
  for (auto d = e.degeneracies.rbegin(); d != e.degeneracies.rend(); ++d)
    x = act_catalan(degeneracy_map(*d, x.level()), x);
  return x;
}

inline std::vector<FaceExpr> exchange_l_r(std::vector<FaceExpr> faces) {
  for (auto& fe : faces) {
    if (fe.base == "l") fe.base = "r";
    else if (fe.base == "r") fe.base = "l";
  }
  return faces;
}

/// Non-degenerate simplices of the level whose faces are exactly `faces`.
inline std::vector<LaxMatrix> nondegenerate_fillers(std::size_t level, std::vector<LaxMatrix> const& faces) {
  CatalanSet const c(level + 1);
  std::vector<LaxMatrix> hits;
  for (auto const& x : enumerate_level(level)) {
    if (level >= 1 && is_degenerate(c, x)) continue;
    bool match = true;
    for (std::size_t i = 0; i < faces.size() && match; ++i) match = face(c, i, x) == faces[i];
    if (match) hits.push_back(x);
  }
  return hits;
}

/// Names a simplex as a known name or an iterated degeneracy of one, using
/// the normal form s_{j1} ⋯ s_{jk}(y) with j1 > ⋯ > jk.
inline FaceExpr describe(LaxMatrix const& x, std::map<std::string, LaxMatrix> const& known) {
  for (auto const& [name, v] : known)
    if (v == x) return {{}, name};
  CatalanSet const c(x.level() + 1);
  for (std::size_t j = 0; j < x.level(); ++j) {
    auto const base = face(c, j, x);
    if (degeneracy(c, j, base) == x) {
      auto inner = describe(base, known);
      if (inner.degeneracies.empty() || inner.degeneracies.front() < j) {
        inner.degeneracies.insert(inner.degeneracies.begin(), j);
        return inner;
      }
    }
  }
  throw Error(Errc::InvalidInput, "cannot name simplex " + x.to_string());
}

}  // namespace detail

/// Display symbol for a catalogue name (★ and ℓ are spelled "star" and "l").
inline std::string display_name(std::string const& name) {
  if (name == "star") return "★";
  if (name == "l") return "ℓ";
  return name;
}

/// Resolves every entry to its unique non-degenerate filler.
inline std::vector<NamedSimplex> catalogue() {
  std::map<std::string, LaxMatrix> known;
  std::vector<NamedSimplex> out;
  auto evaluate_all = [&](std::vector<FaceExpr> const& exprs) {
    std::vector<LaxMatrix> faces;
    for (auto const& fe : exprs) faces.push_back(detail::evaluate(fe, known));
    return faces;
  };
  for (auto const& e : detail::catalogue_entries()) {
    bool verbatim = true;
    auto hits = detail::nondegenerate_fillers(e.level, evaluate_all(e.faces));
    if (hits.empty()) {
      verbatim = false;
      hits = detail::nondegenerate_fillers(e.level, evaluate_all(detail::exchange_l_r(e.faces)));
    }
    if (hits.size() != 1) {
      throw Error(Errc::InvalidInput, "catalogue entry " + e.name + " matches " + std::to_string(hits.size()) +
                                          " non-degenerate simplices");
    }
    NamedSimplex ns{e.name, e.level, e.faces, {}, hits.front(), verbatim};
    CatalanSet const c(e.level + 1);
    for (std::size_t i = 0; e.level >= 1 && i <= e.level; ++i)
      ns.faces.push_back(detail::describe(face(c, i, ns.matrix), known));
    known.emplace(e.name, ns.matrix);
    out.push_back(std::move(ns));
  }
  return out;
}

inline LaxMatrix named_simplex(std::string const& name) {
  for (auto const& ns : catalogue())
    if (ns.name == name) return ns.matrix;
  throw Error(Errc::InvalidInput, "no catalogue entry " + name);
}

struct CatalogueReport {
  bool ok = true;
  std::vector<std::string> problems;
  std::vector<std::string> mismatched;               // entries whose recorded tuple has no filler
  std::vector<std::size_t> nondegenerate_per_level;  // levels 0..4
};

/// Recomputes every face by pullback and compares with the recorded tuple,
/// checks that each recorded tuple has exactly one filler among all simplices
/// of its level, and checks that the names exhaust the non-degenerate
/// simplices in each dimension.
inline CatalogueReport verify_catalogue() {
  CatalogueReport rep;
  auto const entries = catalogue();
  std::map<std::string, LaxMatrix> known;
  for (auto const& e : entries) known.emplace(e.name, e.matrix);
  for (auto const& e : entries) {
    if (e.matrix.level() != e.level) rep.problems.push_back(e.name + ": wrong level");
    CatalanSet const c(e.level + 1);
    bool same = true;
    for (std::size_t i = 0; i < e.recorded.size(); ++i) {
      auto const got = act_catalan(face_map(i, e.level), e.matrix);
      if (detail::evaluate(e.recorded[i], known) != got) same = false;
      if (detail::evaluate(e.faces[i], known) != got) rep.problems.push_back(e.name + ": face naming is inconsistent");
    }
    if (!same) {
      rep.mismatched.push_back(e.name);
      rep.problems.push_back(e.name + ": recorded " + to_string(e.recorded) + " but faces are " + to_string(e.faces));
    }
    if (e.level >= 2) {
      std::size_t fillers = 0;
      for (auto const& x : enumerate_level(e.level)) {
        bool match = true;
        for (std::size_t i = 0; i <= e.level && match; ++i)
          match = face(c, i, x) == detail::evaluate(e.recorded[i], known);
        fillers += match;
      }
      if (fillers != 1) rep.problems.push_back(e.name + ": recorded tuple has " + std::to_string(fillers) + " fillers");
    }
  }
  CatalanSet const c(5);
  for (std::size_t n = 0; n <= 4; ++n) {
    auto nd = nondegenerate_simplices(c, n);
    rep.nondegenerate_per_level.push_back(nd.size());
    std::vector<LaxMatrix> named;
    for (auto const& e : entries)
      if (e.level == n) named.push_back(e.matrix);
    std::sort(nd.begin(), nd.end());
    std::sort(named.begin(), named.end());
    if (nd != named) rep.problems.push_back("level " + std::to_string(n) + ": names do not exhaust the non-degenerate simplices");
  }
  rep.ok = rep.problems.empty();
  return rep;
}

}  // namespace csimp::catalan
