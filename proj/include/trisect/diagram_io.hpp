#pragma once

// JSON diagram files:
//
//   { "genus": 1, "boundary": 0, "basis": "e1 f1",
//     "alpha": [[1,0]], "beta": [[0,1]], "gamma": [[1,1]],
//     "common": {"gamma_alpha": [], "alpha_beta": [], "beta_gamma": []},
//     "geo": {"alpha.0:beta.0": 1} }
//
// "basis", "boundary", "common" and "geo" are optional. A common entry is
// either an index i (same position in both systems) or a pair [i, j].
// Integers may be given as JSON numbers or as decimal strings.

#include "trisect/diagram.hpp"
#include "trisect/error.hpp"

#include <json.hpp>

#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

namespace trisect {

namespace detail {

using nlohmann::json;

inline auto line_col(std::string_view text, std::size_t byte) -> std::pair<std::size_t, std::size_t> {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline auto json_int(const json &j, const std::string &where) -> Int {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    const auto &s = j.get_ref<const std::string &>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool ok = s.size() > start;
    for (std::size_t i = start; i < s.size(); ++i) ok = ok && s[i] >= '0' && s[i] <= '9';
    if (ok) {
      Int v(s.substr(start));
      return start ? Int(-v) : v;
    }
  }
  throw Error(ErrorCode::Parse, where + ": expected an integer");
}

inline auto json_count(const json &j, const std::string &where) -> std::uint64_t {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw Error(ErrorCode::Parse, where + ": expected a non-negative integer");
}

inline auto parse_curve_ref(std::string_view s, const std::string &where) -> CurveRef {
  auto dot = s.find('.');
  if (dot == std::string_view::npos)
    throw Error(ErrorCode::Parse, where + ": expected <system>.<index>");
  auto label = parse_system_label(s.substr(0, dot));
  if (!label) throw Error(ErrorCode::Parse, where + ": unknown system '" + std::string(s.substr(0, dot)) + "'");
  auto idx = s.substr(dot + 1);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), v);
  if (idx.empty() || ec != std::errc() || ptr != idx.data() + idx.size())
    throw Error(ErrorCode::Parse, where + ": bad curve index '" + std::string(idx) + "'");
  return {*label, v};
}

inline auto int_to_json(const Int &v) -> std::string {
  static const Int lo(std::numeric_limits<std::int64_t>::min());
  static const Int hi(std::numeric_limits<std::int64_t>::max());
  if (v < lo || v > hi) return "\"" + v.str() + "\"";
  return v.str();
}

} // namespace detail

/// Parses and structurally validates a diagram file. Vector lengths, common
/// indices and geo references are checked here; cut-system pairings are left
/// to validate_cut_system / validate_diagram.
inline auto parse_diagram(std::string_view text) -> StarDiagram {
  using detail::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error &e) {
    auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + " column " +
                                      std::to_string(col) + ": malformed JSON");
  }
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "top level must be an object");

  static const std::set<std::string> known{"genus", "boundary", "basis", "alpha",
                                           "beta",  "gamma",    "common", "geo"};
  for (const auto &[key, _] : doc.items())
    if (!known.count(key)) throw Error(ErrorCode::UnknownField, "/" + key);

  StarDiagram d;
  if (!doc.contains("genus")) throw Error(ErrorCode::Parse, "/genus: missing");
  d.genus = static_cast<std::size_t>(detail::json_count(doc["genus"], "/genus"));
  if (doc.contains("boundary"))
    d.boundary = static_cast<std::size_t>(detail::json_count(doc["boundary"], "/boundary"));

  const SymplecticLattice lattice{d.genus};
  if (doc.contains("basis")) {
    if (!doc["basis"].is_string() || doc["basis"].get<std::string>() != lattice.basis_label())
      throw Error(ErrorCode::Parse, "/basis: expected \"" + lattice.basis_label() + "\"");
  }

  for (auto label : {SystemLabel::Alpha, SystemLabel::Beta, SystemLabel::Gamma}) {
    const auto key = to_string(label);
    if (!doc.contains(key)) throw Error(ErrorCode::Parse, "/" + key + ": missing");
    const auto &arr = doc[key];
    if (!arr.is_array()) throw Error(ErrorCode::Parse, "/" + key + ": expected an array");
    auto &sys = d.system(label);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto where = "/" + key + "/" + std::to_string(i);
      if (!arr[i].is_array()) throw Error(ErrorCode::Parse, where + ": expected an array");
      if (arr[i].size() != lattice.dimension())
        throw Error(ErrorCode::VectorLength, where + ": expected " +
                                                 std::to_string(lattice.dimension()) +
                                                 " entries, got " + std::to_string(arr[i].size()));
      HomologyVector v;
      for (std::size_t k = 0; k < arr[i].size(); ++k)
        v.push_back(detail::json_int(arr[i][k], where + "/" + std::to_string(k)));
      sys.classes.push_back(std::move(v));
    }
  }

  if (doc.contains("common")) {
    const auto &c = doc["common"];
    if (!c.is_object()) throw Error(ErrorCode::Parse, "/common: expected an object");
    for (const auto &[key, val] : c.items()) {
      std::optional<SystemPair> pair;
      for (auto p : {SystemPair::GammaAlpha, SystemPair::AlphaBeta, SystemPair::BetaGamma})
        if (to_string(p) == key) pair = p;
      if (!pair) throw Error(ErrorCode::UnknownField, "/common/" + key);
      if (!val.is_array()) throw Error(ErrorCode::Parse, "/common/" + key + ": expected an array");
      auto [la, lb] = systems_of(*pair);
      for (std::size_t i = 0; i < val.size(); ++i) {
        const auto where = "/common/" + key + "/" + std::to_string(i);
        CommonPair cp;
        if (val[i].is_array()) {
          if (val[i].size() != 2) throw Error(ErrorCode::Parse, where + ": expected [i, j]");
          cp.first = detail::json_count(val[i][0], where + "/0");
          cp.second = detail::json_count(val[i][1], where + "/1");
        } else {
          cp.first = cp.second = detail::json_count(val[i], where);
        }
        const auto &a = d.system(la);
        const auto &b = d.system(lb);
        if (cp.first >= a.size() || cp.second >= b.size())
          throw Error(ErrorCode::CommonIndexMismatch, where + ": index out of range");
        if (a.classes[cp.first] != b.classes[cp.second])
          throw Error(ErrorCode::CommonIndexMismatch,
                      where + ": " + to_string(la) + "[" + std::to_string(cp.first) + "] and " +
                          to_string(lb) + "[" + std::to_string(cp.second) +
                          "] have different classes");
        d.common[static_cast<std::size_t>(*pair)].push_back(cp);
      }
    }
  }

  if (doc.contains("geo")) {
    const auto &g = doc["geo"];
    if (!g.is_object()) throw Error(ErrorCode::Parse, "/geo: expected an object");
    for (const auto &[key, val] : g.items()) {
      const auto where = "/geo/" + key;
      auto colon = key.find(':');
      if (colon == std::string::npos)
        throw Error(ErrorCode::Parse, where + ": expected <sysA>.<i>:<sysB>.<j>");
      auto a = detail::parse_curve_ref(std::string_view(key).substr(0, colon), where);
      auto b = detail::parse_curve_ref(std::string_view(key).substr(colon + 1), where);
      for (auto r : {a, b})
        if (r.index >= d.system(r.system).size())
          throw Error(ErrorCode::Parse, where + ": curve " + r.str() + " does not exist");
      d.geo.set(a, b, detail::json_count(val, where));
    }
  }
  return d;
}

/// Canonical text form; parse_diagram(serialize_diagram(d)) == d and the
/// output is byte-stable.
inline auto serialize_diagram(const StarDiagram &d) -> std::string {
  std::ostringstream os;
  auto vectors = [&](const CurveSystem &s) {
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) os << ", ";
      os << '[';
      for (std::size_t k = 0; k < s.classes[i].size(); ++k) {
        if (k) os << ',';
        os << detail::int_to_json(s.classes[i][k]);
      }
      os << ']';
    }
    os << ']';
  };
  os << "{\n";
  os << "  \"genus\": " << d.genus << ",\n";
  os << "  \"boundary\": " << d.boundary << ",\n";
  os << "  \"basis\": \"" << d.lattice().basis_label() << "\",\n";
  for (const auto &s : d.systems) {
    os << "  \"" << to_string(s.label) << "\": ";
    vectors(s);
    os << ",\n";
  }
  os << "  \"common\": {";
  for (std::size_t p = 0; p < 3; ++p) {
    if (p) os << ", ";
    os << '"' << to_string(static_cast<SystemPair>(p)) << "\": [";
    for (std::size_t i = 0; i < d.common[p].size(); ++i) {
      if (i) os << ',';
      const auto &c = d.common[p][i];
      if (c.first == c.second)
        os << c.first;
      else
        os << '[' << c.first << ',' << c.second << ']';
    }
    os << ']';
  }
  os << '}';
  if (!d.geo.empty()) {
    os << ",\n  \"geo\": {";
    bool first = true;
    for (const auto &[key, count] : d.geo.entries()) {
      if (!first) os << ", ";
      first = false;
      os << '"' << key.first.str() << ':' << key.second.str() << "\": " << count;
    }
    os << '}';
  }
  os << "\n}\n";
  return os.str();
}

} // namespace trisect
