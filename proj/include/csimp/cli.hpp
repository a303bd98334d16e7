#pragma once

// Command-line front end. parse_args validates a verb and its options;
// run dispatches to the library and writes text or JSON.
//
// Exit status: 0 when every check passes, 1 when a verdict fails, 2 on
// usage or input errors.

#include <cstddef>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csimp/bicat/io.hpp"
#include "csimp/bicat/nerve.hpp"
#include "csimp/catalan/catalogue.hpp"
#include "csimp/catalan/counting.hpp"
#include "csimp/catalan/export.hpp"
#include "csimp/catalan/lax_matrix.hpp"
#include "csimp/catalan/tamari.hpp"
#include "csimp/classify/classify.hpp"
#include "csimp/error.hpp"
#include "csimp/simplicial.hpp"

namespace csimp::cli {

inline constexpr std::size_t kDefaultCountLevel = 10;
inline constexpr std::size_t kDefaultStructureLevel = 6;
inline constexpr std::size_t kLevelCeiling = catalan::kMaxLevel;
inline constexpr std::size_t kNerveIdentityLevel = 4;

enum class Verb { count, enumerate, catalogue, verify_identities, verify_theorem, verify_monads, order_probe, export_ };
enum class Format { text, json };

struct Command {
  Verb verb = Verb::count;
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> n;
  std::optional<std::string> input;
  Format format = Format::text;
  std::optional<std::string> output;
  std::optional<std::string> what;
};

inline std::vector<std::pair<std::string, Verb>> const& verbs() {
  static std::vector<std::pair<std::string, Verb>> const v = {
      {"count", Verb::count},
      {"enumerate", Verb::enumerate},
      {"catalogue", Verb::catalogue},
      {"verify-identities", Verb::verify_identities},
      {"verify-theorem", Verb::verify_theorem},
      {"verify-monads", Verb::verify_monads},
      {"order-probe", Verb::order_probe},
      {"export", Verb::export_},
  };
  return v;
}

inline std::string usage() {
  std::string s = "usage: csimp <verb> [options]\nverbs:";
  for (auto const& [name, _] : verbs()) s += " " + name;
  s +=
      "\noptions: --max-n N  --n N  --input FILE  --format text|json  --output FILE  --what catalan|report\n";
  return s;
}

inline std::size_t parse_level(std::string const& flag, std::string const& text, std::size_t ceiling) {
  std::size_t pos = 0;
  long long v = -1;
  try {
    v = std::stoll(text, &pos);
  } catch (std::exception const&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || v < 0)
    throw Error(Errc::BadLevel, flag + " expects a non-negative integer, got '" + text + "'");
  if (static_cast<unsigned long long>(v) > ceiling)
    throw Error(Errc::BadLevel, flag + " " + text + " exceeds the ceiling " + std::to_string(ceiling));
  return static_cast<std::size_t>(v);
}

inline Command parse_args(std::vector<std::string> const& args) {
  if (args.empty()) throw Error(Errc::UnknownVerb, "no verb given");
  Command cmd;
  bool known = false;
  for (auto const& [name, v] : verbs())
    if (name == args[0]) {
      cmd.verb = v;
      known = true;
    }
  if (!known) throw Error(Errc::UnknownVerb, "unknown verb '" + args[0] + "'");

  CLI::App app{"csimp"};
  std::string max_n, n, input, format = "text", output, what;
  app.add_option("--max-n", max_n);
  app.add_option("--n", n);
  app.add_option("--input", input);
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", output);
  app.add_option("--what", what)->check(CLI::IsMember({"catalan", "report"}));
  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);  // CLI11 takes reversed argv
  try {
    app.parse(rest);
  } catch (CLI::ParseError const& e) {
    throw Error(Errc::MissingOption, e.what());
  }

  std::size_t const max_ceiling = cmd.verb == Verb::order_probe ? catalan::kOrderProbeBound : kLevelCeiling;
  if (app.count("--max-n")) cmd.max_n = parse_level("--max-n", max_n, kLevelCeiling);
  if (app.count("--n")) cmd.n = parse_level("--n", n, max_ceiling);
  if (app.count("--input")) cmd.input = input;
  if (app.count("--output")) cmd.output = output;
  if (app.count("--what")) cmd.what = what;
  cmd.format = format == "json" ? Format::json : Format::text;

  auto require = [&](bool present, char const* flag) {
    if (!present) throw Error(Errc::MissingOption, args[0] + " needs " + flag);
  };
  switch (cmd.verb) {
    case Verb::enumerate: require(cmd.n.has_value(), "--n"); break;
    case Verb::verify_theorem:
    case Verb::verify_monads: require(cmd.input.has_value(), "--input"); break;
    case Verb::export_:
      require(cmd.what.has_value(), "--what");
      require(cmd.output.has_value(), "--output");
      if (*cmd.what == "catalan") require(cmd.n.has_value(), "--n");
      if (*cmd.what == "report") require(cmd.input.has_value(), "--input");
      break;
    default: break;
  }
  return cmd;
}

inline unsigned worker_count() {
  if (char const* env = std::getenv("CATALAN_WORKERS")) {
    try {
      auto const w = std::stoul(env);
      if (w >= 1 && w <= 256) return static_cast<unsigned>(w);
    } catch (std::exception const&) {
    }
  }
  return 1;
}

using Json = nlohmann::ordered_json;

namespace detail {

/// Right-aligns to `width` code points (names may hold multi-byte UTF-8).
inline std::string pad(std::string s, std::size_t width) {
  std::size_t points = 0;
  for (unsigned char c : s) points += (c & 0xC0) != 0x80;
  if (points < width) s.insert(0, width - points, ' ');
  return s;
}

inline int run_count(Command const& cmd, std::ostream& out) {
  std::size_t const top = cmd.max_n.value_or(kDefaultCountLevel);
  auto const ref = catalan::reference_counts(top);
  unsigned const workers = worker_count();
  std::vector<std::uint64_t> nd;
  bool all = true;
  Json rows = Json::array();
  if (cmd.format == Format::text)
    out << pad("n", 3) << pad("count", 12) << pad("catalan", 12) << pad("nondeg", 10) << pad("motzkin", 10)
        << pad("binom-sum", 12) << "  match\n";
  for (std::size_t n = 0; n <= top; ++n) {
    auto const c = catalan::count_level(n, workers);
    nd.push_back(c.nondegenerate);
    auto const bs = catalan::binomial_sum(n, nd);
    bool const match = c.total == ref.catalan[n] && c.nondegenerate == ref.motzkin[n] && bs == c.total;
    all = all && match;
    if (cmd.format == Format::text) {
      out << pad(std::to_string(n), 3) << pad(std::to_string(c.total), 12) << pad(std::to_string(ref.catalan[n]), 12)
          << pad(std::to_string(c.nondegenerate), 10) << pad(std::to_string(ref.motzkin[n]), 10)
          << pad(std::to_string(bs), 12) << "  " << (match ? "yes" : "NO") << "\n";
    } else {
      rows.push_back({{"n", n},
                      {"count", c.total},
                      {"catalan", ref.catalan[n]},
                      {"nondegenerate", c.nondegenerate},
                      {"motzkin", ref.motzkin[n]},
                      {"binomial_sum", bs},
                      {"match", match}});
    }
  }
  if (cmd.format == Format::json) out << Json{{"rows", rows}, {"verdict", all ? "OK" : "FAIL"}}.dump(2) << "\n";
  else out << "verdict=" << (all ? "OK" : "FAIL") << "\n";
  return all ? 0 : 1;
}

inline int run_enumerate(Command const& cmd, std::ostream& out) {
  if (cmd.format == Format::json) {
    out << catalan::export_level_text(*cmd.n);
    return 0;
  }
  catalan::for_each_simplex(*cmd.n, [&](catalan::LaxMatrix const& x) {
    out << x.to_string() << (catalan::is_degenerate_direct(x) ? "" : "  nondegenerate") << "\n";
  });
  return 0;
}

inline int run_catalogue(Command const& cmd, std::ostream& out) {
  auto const entries = catalan::catalogue();
  auto const rep = catalan::verify_catalogue();
  if (cmd.format == Format::json) {
    Json j;
    auto arr = Json::array();
    for (auto const& e : entries) {
      Json faces = Json::array(), recorded = Json::array();
      for (auto const& f : e.faces) faces.push_back(f.to_string());
      for (auto const& f : e.recorded) recorded.push_back(f.to_string());
      arr.push_back({{"name", e.name},
                     {"level", e.level},
                     {"bits", e.matrix.bits()},
                     {"faces", faces},
                     {"recorded", recorded},
                     {"verbatim", e.verbatim}});
    }
    j["simplices"] = std::move(arr);
    j["nondegenerate_per_level"] = rep.nondegenerate_per_level;
    j["problems"] = rep.problems;
    j["verdict"] = rep.ok ? "OK" : "FAIL";
    out << j.dump(2) << "\n";
  } else {
    for (auto const& e : entries) {
      out << pad(catalan::display_name(e.name), 4) << "  level " << e.level << "  " << pad(e.matrix.to_string(), 10);
      if (e.level >= 1) out << "  " << catalan::to_string(e.faces);
      if (!e.verbatim) out << "  recorded as " << catalan::to_string(e.recorded);
      out << "\n";
    }
    out << "nondegenerate per level:";
    for (auto c : rep.nondegenerate_per_level) out << " " << c;
    out << "\n";
    for (auto const& p : rep.problems) out << "problem: " << p << "\n";
    out << "verdict=" << (rep.ok ? "OK" : "FAIL") << "\n";
  }
  return rep.ok ? 0 : 1;
}

inline int run_identities(Command const& cmd, std::ostream& out) {
  Json results = Json::array();
  bool all = true;
  auto emit = [&](std::string const& what, IdentityReport const& r) {
    all = all && r.ok;
    if (cmd.format == Format::text)
      out << what << ": checks=" << r.checks << " verdict=" << (r.ok ? "OK" : "FAIL")
          << (r.ok ? "" : " first violation: " + r.first_violation) << "\n";
    else
      results.push_back({{"set", what}, {"checks", r.checks}, {"verdict", r.ok ? "OK" : "FAIL"}, {"first_violation", r.first_violation}});
  };
  if (cmd.input) {
    auto const in = bicat::load_input(*cmd.input);
    std::size_t const top = std::min(cmd.max_n.value_or(kNerveIdentityLevel), bicat::kMaxNerveLevel);
    if (in.monoidal || in.poset) {
      bicat::MonoidalNerve const nv(in.as_monoidal(), top);
      emit("monoidal nerve of " + in.name, verify_simplicial_identities(nv, top));
    }
    bicat::BicatNerve const nv(in.as_bicat(), top);
    emit("nerve of " + in.name, verify_simplicial_identities(nv, top));
  } else {
    std::size_t const top = cmd.max_n.value_or(kDefaultStructureLevel);
    emit("catalan", verify_simplicial_identities(catalan::CatalanSet(top), top));
  }
  if (cmd.format == Format::json) out << Json{{"results", results}, {"verdict", all ? "OK" : "FAIL"}}.dump(2) << "\n";
  return all ? 0 : 1;
}

inline classify::ClassificationReport classification(bicat::Input const& in) {
  if (in.monoidal || in.poset) return classify::verify_theorem(in.as_monoidal(), in.name);
  return classify::verify_monad_remark(in.as_bicat(), in.name);
}

inline int run_theorem(Command const& cmd, std::ostream& out, bool monads) {
  auto const in = bicat::load_input(*cmd.input);
  auto const rep = monads ? classify::verify_monad_remark(in.as_bicat(), in.name)
                          : classify::verify_theorem(in.as_monoidal(), in.name);
  if (cmd.format == Format::json) {
    out << rep.to_json().dump(2) << "\n";
  } else {
    out << "maps=" << rep.map_count << (monads ? " monads=" : " structures=") << rep.structure_count
        << " verdict=" << rep.verdict() << "\n";
    for (auto const& f : rep.failures) out << "failure: " << f << "\n";
  }
  return rep.ok ? 0 : 1;
}

inline Json violation_json(catalan::OrderViolation const& v) {
  return {{"map", v.map},
          {"lower", v.lower.bits()},
          {"upper", v.upper.bits()},
          {"lower_image", v.lower_image.bits()},
          {"upper_image", v.upper_image.bits()}};
}

inline int run_order_probe(Command const& cmd, std::ostream& out) {
  std::size_t const n = cmd.n.value_or(3);
  auto const r = catalan::order_probe(n);
  bool const tamari = r.tamari_faces_preserved && r.tamari_degeneracies_preserved;
  if (cmd.format == Format::json) {
    Json j;
    j["n"] = n;
    j["inclusion_preserved"] = r.inclusion_preserved;
    j["inclusion_checks"] = r.inclusion_checks;
    j["tamari_covers"] = r.tamari_covers;
    j["tamari_faces_preserved"] = r.tamari_faces_preserved;
    j["tamari_degeneracies_preserved"] = r.tamari_degeneracies_preserved;
    j["tamari_failing_maps"] = r.tamari_failing_maps;
    auto arr = Json::array();
    for (auto const& v : r.tamari_violations) arr.push_back(violation_json(v));
    j["tamari_violations"] = std::move(arr);
    if (n == 3) {
      j["remark_pattern_found"] = r.remark_pattern_found;
      auto w = Json::array();
      for (auto const& x : r.remark_witnesses) w.push_back(x.bits());
      j["remark_witnesses"] = std::move(w);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "level " << n << "\n";
    out << "inclusion order: " << (r.inclusion_preserved ? "preserved" : "NOT preserved") << " by every monotone map ("
        << r.inclusion_checks << " comparable pairs checked)\n";
    out << "tamari order (" << r.tamari_covers << " covers): "
        << (tamari ? "preserved by all faces and degeneracies" : "not preserved") << "\n";
    if (!tamari) {
      out << "failing maps:";
      for (auto const& m : r.tamari_failing_maps) out << " " << m;
      out << "\n";
      for (auto const& v : r.tamari_violations)
        out << "  " << v.map << ": " << v.lower.to_string() << " <= " << v.upper.to_string() << " but "
            << v.lower_image.to_string() << " not <= " << v.upper_image.to_string() << "\n";
    }
    if (n == 3) {
      out << "rho <= s_1(i) with d_1(rho) = s_1(c) not <= i: " << (r.remark_pattern_found ? "found" : "not found");
      for (auto const& x : r.remark_witnesses) out << " " << x.to_string();
      out << "\n";
    }
  }
  // Failing Tamari preservation is an observation, not a failed check.
  return r.inclusion_preserved ? 0 : 1;
}

inline int run_export(Command const& cmd, std::ostream& out) {
  if (*cmd.what == "catalan") {
    out << catalan::export_level_text(*cmd.n);
    return 0;
  }
  auto const rep = classification(bicat::load_input(*cmd.input));
  out << rep.to_json().dump(2) << "\n";
  return rep.ok ? 0 : 1;
}

inline int dispatch(Command const& cmd, std::ostream& out) {
  switch (cmd.verb) {
    case Verb::count: return run_count(cmd, out);
    case Verb::enumerate: return run_enumerate(cmd, out);
    case Verb::catalogue: return run_catalogue(cmd, out);
    case Verb::verify_identities: return run_identities(cmd, out);
    case Verb::verify_theorem: return run_theorem(cmd, out, false);
    case Verb::verify_monads: return run_theorem(cmd, out, true);
    case Verb::order_probe: return run_order_probe(cmd, out);
    case Verb::export_: return run_export(cmd, out);
  }
  return 2;
}

}  // namespace detail

/// Runs the command; output goes to `out` unless --output names a file.
/// Library errors propagate as csimp::Error.
inline int run(Command const& cmd, std::ostream& out) {
  if (!cmd.output) return detail::dispatch(cmd, out);
  std::ostringstream buf;
  int const status = detail::dispatch(cmd, buf);
  std::ofstream f(*cmd.output, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(Errc::IoError, "cannot write " + *cmd.output);
  f << buf.str();
  if (!f.flush()) throw Error(Errc::IoError, "write failed for " + *cmd.output);
  return status;
}

/// parse + run with the exit-status contract; errors go to `err`.
inline int main_entry(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_args(args), out);
  } catch (Error const& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == Errc::UnknownVerb || e.code() == Errc::MissingOption) err << usage();
    return 2;
  }
}

}  // namespace csimp::cli
