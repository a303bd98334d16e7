#pragma once

// JSON input and output for the three input kinds.
//
//   MonoidalPoset: {"elements": [...], "leq": [[a,b], ...], "tensor": {"a,b": "c", ...}, "unit": "a"}
//   PosetalBicat:  {"objects": [...], "cells": [{"from": X, "to": Y, "name": f}, ...],
//                   "leq": [[f,g], ...], "compose": {"g,f": "h", ...}, "identities": {"X": "f"}}
//   monoidal:      the above plus "obj_tensor": {"X,Y": "Z"}, "cell_tensor": {"f,g": "h"},
//                  "unit_object": "I"
//
// Keys are exact and unknown keys are rejected. Names may not contain ','.
// leq lists every related pair, reflexive ones included.

#include <cstddef>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "csimp/bicat/structures.hpp"
#include "csimp/error.hpp"

namespace csimp::bicat {

using Json = nlohmann::ordered_json;

namespace detail {

inline void require_keys(Json const& j, std::set<std::string> const& required, std::set<std::string> const& optional_keys = {}) {
  if (!j.is_object()) throw Error(Errc::InvalidInput, "expected a JSON object");
  for (auto const& [key, _] : j.items())
    if (!required.contains(key) && !optional_keys.contains(key)) throw Error(Errc::InvalidInput, "unknown key " + key);
  for (auto const& key : required)
    if (!j.contains(key)) throw Error(Errc::InvalidInput, "missing key " + key);
}

inline std::string name_of(Json const& j) {
  if (!j.is_string()) throw Error(Errc::InvalidInput, "expected a name string, got " + j.dump());
  auto s = j.get<std::string>();
  if (s.empty() || s.find(',') != std::string::npos) throw Error(Errc::InvalidInput, "bad name '" + s + "'");
  return s;
}

inline std::vector<std::string> names_of(Json const& j) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, "expected an array of names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (auto const& e : j) {
    out.push_back(name_of(e));
    if (!seen.insert(out.back()).second) throw Error(Errc::InvalidInput, "duplicate name " + out.back());
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> pairs_of(Json const& j) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, "leq must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (auto const& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error(Errc::InvalidInput, "leq entry is not a pair: " + p.dump());
    out.emplace_back(name_of(p[0]), name_of(p[1]));
  }
  return out;
}

/// Reads {"a,b": "c"} into table[index(a)][index(b)] = index(c).
inline Table binary_table(Json const& j, std::size_t n, auto&& index, bool total) {
  if (!j.is_object()) throw Error(Errc::InvalidInput, "binary table must be an object");
  Table t(n, std::vector<std::size_t>(n, npos));
  for (auto const& [key, value] : j.items()) {
    auto const comma = key.find(',');
    if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
      throw Error(Errc::InvalidInput, "table key must be \"a,b\": " + key);
    auto const a = index(key.substr(0, comma));
    auto const b = index(key.substr(comma + 1));
    if (t[a][b] != npos) throw Error(Errc::InvalidInput, "duplicate table key " + key);
    t[a][b] = index(name_of(value));
  }
  if (total)
    for (auto const& row : t)
      for (auto v : row)
        if (v == npos) throw Error(Errc::InvalidInput, "binary table is not total");
  return t;
}

inline Order order_of(std::vector<std::pair<std::string, std::string>> const& pairs, std::size_t n, auto&& index) {
  Order o(n, std::vector<bool>(n, false));
  for (auto const& [a, b] : pairs) o[index(a)][index(b)] = true;
  return o;
}

inline Json table_json(Table const& t, auto&& name) {
  Json out = Json::object();
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t[a].size(); ++b)
      if (t[a][b] != npos) out[name(a) + "," + name(b)] = name(t[a][b]);
  return out;
}

inline Json order_json(Order const& o, auto&& name) {
  Json out = Json::array();
  for (std::size_t a = 0; a < o.size(); ++a)
    for (std::size_t b = 0; b < o[a].size(); ++b)
      if (o[a][b]) out.push_back({name(a), name(b)});
  return out;
}

inline PosetalBicat bicat_fields(Json const& j) {
  PosetalBicat k;
  k.objects = names_of(j.at("objects"));
  auto obj = [&](std::string const& s) { return k.object_index(s); };
  if (!j.at("cells").is_array()) throw Error(Errc::InvalidInput, "cells must be an array");
  std::set<std::string> seen;
  for (auto const& c : j.at("cells")) {
    require_keys(c, {"from", "to", "name"});
    k.cells.push_back({obj(name_of(c.at("from"))), obj(name_of(c.at("to"))), name_of(c.at("name"))});
    if (!seen.insert(k.cells.back().name).second) throw Error(Errc::InvalidInput, "duplicate cell " + k.cells.back().name);
  }
  auto cell = [&](std::string const& s) { return k.cell_index(s); };
  k.leq = order_of(pairs_of(j.at("leq")), k.cells.size(), cell);
  k.compose = binary_table(j.at("compose"), k.cells.size(), cell, false);
  auto const& ids = j.at("identities");
  if (!ids.is_object() || ids.size() != k.objects.size())
    throw Error(Errc::InvalidInput, "identities must name one cell per object");
  k.identities.assign(k.objects.size(), npos);
  for (auto const& [x, f] : ids.items()) k.identities[obj(x)] = cell(name_of(f));
  return k;
}

inline Json bicat_fields_json(PosetalBicat const& k) {
  Json j;
  j["objects"] = k.objects;
  auto cells = Json::array();
  for (auto const& c : k.cells) cells.push_back({{"from", k.objects[c.from]}, {"to", k.objects[c.to]}, {"name", c.name}});
  j["cells"] = std::move(cells);
  auto cname = [&](std::size_t f) { return k.cells[f].name; };
  j["leq"] = order_json(k.leq, cname);
  j["compose"] = table_json(k.compose, cname);
  Json ids = Json::object();
  for (std::size_t x = 0; x < k.objects.size(); ++x) ids[k.objects[x]] = cname(k.identities[x]);
  j["identities"] = std::move(ids);
  return j;
}

}  // namespace detail

inline MonoidalPoset monoidal_poset_from_json(Json const& j) {
  detail::require_keys(j, {"elements", "leq", "tensor", "unit"});
  MonoidalPoset p;
  p.elements = detail::names_of(j.at("elements"));
  auto idx = [&](std::string const& s) { return p.index_of(s); };
  p.leq = detail::order_of(detail::pairs_of(j.at("leq")), p.size(), idx);
  p.tensor = detail::binary_table(j.at("tensor"), p.size(), idx, true);
  p.unit = idx(detail::name_of(j.at("unit")));
  return p;
}

inline Json to_json(MonoidalPoset const& p) {
  auto name = [&](std::size_t a) { return p.elements[a]; };
  Json j;
  j["elements"] = p.elements;
  j["leq"] = detail::order_json(p.leq, name);
  j["tensor"] = detail::table_json(p.tensor, name);
  j["unit"] = p.elements[p.unit];
  return j;
}

inline PosetalBicat bicat_from_json(Json const& j) {
  detail::require_keys(j, {"objects", "cells", "leq", "compose", "identities"});
  return detail::bicat_fields(j);
}

inline Json to_json(PosetalBicat const& k) { return detail::bicat_fields_json(k); }

inline PosetalMonoidalBicat monoidal_bicat_from_json(Json const& j) {
  detail::require_keys(j, {"objects", "cells", "leq", "compose", "identities", "obj_tensor", "cell_tensor", "unit_object"});
  PosetalMonoidalBicat b;
  b.bicat = detail::bicat_fields(j);
  auto const& k = b.bicat;
  b.obj_tensor = detail::binary_table(j.at("obj_tensor"), k.objects.size(),
                                      [&](std::string const& s) { return k.object_index(s); }, true);
  b.cell_tensor = detail::binary_table(j.at("cell_tensor"), k.cells.size(),
                                       [&](std::string const& s) { return k.cell_index(s); }, true);
  b.unit_object = k.object_index(detail::name_of(j.at("unit_object")));
  return b;
}

inline Json to_json(PosetalMonoidalBicat const& b) {
  auto j = detail::bicat_fields_json(b.bicat);
  auto const& k = b.bicat;
  j["obj_tensor"] = detail::table_json(b.obj_tensor, [&](std::size_t x) { return k.objects[x]; });
  j["cell_tensor"] = detail::table_json(b.cell_tensor, [&](std::size_t f) { return k.cells[f].name; });
  j["unit_object"] = k.objects[b.unit_object];
  return j;
}

/// A parsed input file; exactly one of the three kinds is set, chosen by
/// its keys ("elements" vs "objects", and "obj_tensor" for the monoidal kind).
struct Input {
  std::string name;
  std::optional<MonoidalPoset> poset;
  std::optional<PosetalBicat> bicat;
  std::optional<PosetalMonoidalBicat> monoidal;

  /// The monoidal bicategory to classify in: given directly or embedded.
  PosetalMonoidalBicat as_monoidal() const {
    if (monoidal) return *monoidal;
    if (poset) return embed(*poset);
    throw Error(Errc::InvalidInput, name + " has no monoidal structure");
  }
  /// The underlying 2-category.
  PosetalBicat as_bicat() const {
    if (bicat) return *bicat;
    if (monoidal) return monoidal->bicat;
    return embed(*poset).bicat;
  }
};

inline Input parse_input(Json const& j, std::string name) {
  if (!j.is_object()) throw Error(Errc::InvalidInput, "input must be a JSON object");
  Input in;
  in.name = std::move(name);
  try {
    if (j.contains("elements")) {
      in.poset = monoidal_poset_from_json(j);
      require_valid(*in.poset);
    } else if (j.contains("obj_tensor")) {
      in.monoidal = monoidal_bicat_from_json(j);
      require_valid(*in.monoidal);
    } else {
      in.bicat = bicat_from_json(j);
      require_valid(*in.bicat);
    }
  } catch (nlohmann::json::exception const& e) {
    throw Error(Errc::InvalidInput, e.what());
  }
  return in;
}

inline Input load_input(std::string const& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::IoError, "cannot read " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (nlohmann::json::exception const& e) {
    throw Error(Errc::InvalidInput, path + ": " + e.what());
  }
  auto stem = path.substr(path.find_last_of('/') + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos) stem.resize(dot);
  return parse_input(j, stem);
}

}  // namespace csimp::bicat
