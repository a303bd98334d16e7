#pragma once

// JSON export of one level of ℂ:
//   {"n": n, "count": |ℂ_n|, "simplices": [[bits...], ...], "nondegenerate": [bool, ...]}
// Bits follow the canonical interval order (length, then left endpoint) and
// simplices follow the canonical enumeration, so exports diff cleanly.

#include <cstddef>
#include <string>

#include <json.hpp>

#include "csimp/catalan/lax_matrix.hpp"

namespace csimp::catalan {

inline nlohmann::ordered_json export_level(std::size_t n) {
  nlohmann::ordered_json out;
  out["n"] = n;
  auto simplices = nlohmann::ordered_json::array();
  auto nondegenerate = nlohmann::ordered_json::array();
  std::size_t count = 0;
  for_each_simplex(n, [&](LaxMatrix const& x) {
    ++count;
    simplices.push_back(x.bits());
    nondegenerate.push_back(!is_degenerate_direct(x));
  });
  out["count"] = count;
  out["simplices"] = std::move(simplices);
  out["nondegenerate"] = std::move(nondegenerate);
  return out;
}

/// One simplex per line; otherwise compact.
inline std::string export_level_text(std::size_t n) {
  auto const j = export_level(n);
  std::string s = "{\"n\": " + j["n"].dump() + ", \"count\": " + j["count"].dump() + ",\n \"simplices\": [";
  auto const& xs = j["simplices"];
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ",\n  " : "\n  ") + xs[k].dump();
  s += xs.empty() ? "],\n" : "\n ],\n";
  s += " \"nondegenerate\": " + j["nondegenerate"].dump() + "}\n";
  return s;
}

}  // namespace csimp::catalan
