#pragma once

#include "trisect/error.hpp"
#include "trisect/fraction.hpp"
#include "trisect/zmatrix.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trisect {

using HomologyVector = std::vector<Int>;

/// H_1 of a closed genus-g surface in the basis (e1, f1, ..., eg, fg) with
/// e_i . f_i = 1 and every other basis pairing zero.
struct SymplecticLattice {
  std::size_t genus = 0;

  [[nodiscard]] auto dimension() const -> std::size_t { return 2 * genus; }

  [[nodiscard]] auto pairing(const HomologyVector &u, const HomologyVector &v) const -> Int {
    Int s = 0;
    for (std::size_t i = 0; i < genus; ++i)
      s += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i];
    return s;
  }

  [[nodiscard]] auto form() const -> IntMatrix {
    IntMatrix j(dimension(), dimension());
    for (std::size_t i = 0; i < genus; ++i) {
      j(2 * i, 2 * i + 1) = 1;
      j(2 * i + 1, 2 * i) = -1;
    }
    return j;
  }

  [[nodiscard]] auto basis_label() const -> std::string {
    std::string s;
    for (std::size_t i = 1; i <= genus; ++i) {
      if (i > 1) s += ' ';
      s += "e" + std::to_string(i) + " f" + std::to_string(i);
    }
    return s;
  }
};

enum class SystemLabel { Alpha = 0, Beta = 1, Gamma = 2 };

inline auto to_string(SystemLabel l) -> std::string {
  switch (l) {
  case SystemLabel::Alpha: return "alpha";
  case SystemLabel::Beta: return "beta";
  case SystemLabel::Gamma: return "gamma";
  }
  return "alpha";
}

inline auto parse_system_label(std::string_view s) -> std::optional<SystemLabel> {
  if (s == "alpha") return SystemLabel::Alpha;
  if (s == "beta") return SystemLabel::Beta;
  if (s == "gamma") return SystemLabel::Gamma;
  return std::nullopt;
}

struct CurveSystem {
  SystemLabel label = SystemLabel::Alpha;
  std::vector<HomologyVector> classes;

  [[nodiscard]] auto size() const -> std::size_t { return classes.size(); }
  friend auto operator==(const CurveSystem &, const CurveSystem &) -> bool = default;
};

struct CurveRef {
  SystemLabel system = SystemLabel::Alpha;
  std::size_t index = 0;

  friend auto operator<=>(const CurveRef &, const CurveRef &) = default;
  [[nodiscard]] auto str() const -> std::string {
    return to_string(system) + "." + std::to_string(index);
  }
};

/// Symmetric table of geometric intersection numbers between curves.
class GeoTable {
public:
  void set(CurveRef a, CurveRef b, std::uint64_t count) {
    entries_[ordered(a, b)] = count;
  }
  [[nodiscard]] auto get(CurveRef a, CurveRef b) const -> std::optional<std::uint64_t> {
    auto it = entries_.find(ordered(a, b));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] auto empty() const -> bool { return entries_.empty(); }
  [[nodiscard]] auto entries() const
      -> const std::map<std::pair<CurveRef, CurveRef>, std::uint64_t> & {
    return entries_;
  }
  friend auto operator==(const GeoTable &, const GeoTable &) -> bool = default;

private:
  static auto ordered(CurveRef a, CurveRef b) -> std::pair<CurveRef, CurveRef> {
    return a <= b ? std::pair{a, b} : std::pair{b, a};
  }
  std::map<std::pair<CurveRef, CurveRef>, std::uint64_t> entries_;
};

/// Adjacent system pairs, in file order.
enum class SystemPair { GammaAlpha = 0, AlphaBeta = 1, BetaGamma = 2 };

inline auto systems_of(SystemPair p) -> std::pair<SystemLabel, SystemLabel> {
  switch (p) {
  case SystemPair::GammaAlpha: return {SystemLabel::Gamma, SystemLabel::Alpha};
  case SystemPair::AlphaBeta: return {SystemLabel::Alpha, SystemLabel::Beta};
  case SystemPair::BetaGamma: return {SystemLabel::Beta, SystemLabel::Gamma};
  }
  return {SystemLabel::Alpha, SystemLabel::Beta};
}

inline auto to_string(SystemPair p) -> std::string {
  switch (p) {
  case SystemPair::GammaAlpha: return "gamma_alpha";
  case SystemPair::AlphaBeta: return "alpha_beta";
  case SystemPair::BetaGamma: return "beta_gamma";
  }
  return "alpha_beta";
}

/// A curve shared by both systems of a pair: index into the first system and
/// index into the second (e.g. gamma index, alpha index for GammaAlpha).
struct CommonPair {
  std::size_t first = 0;
  std::size_t second = 0;
  friend auto operator<=>(const CommonPair &, const CommonPair &) = default;
};

/// (Sigma_{g,b}; alpha, beta, gamma; Delta_{gamma,alpha}, Delta_{alpha,beta},
/// Delta_{beta,gamma}) recorded at the level of homology classes.
struct StarDiagram {
  std::size_t genus = 0;
  std::size_t boundary = 0;
  std::array<CurveSystem, 3> systems{CurveSystem{SystemLabel::Alpha, {}},
                                     CurveSystem{SystemLabel::Beta, {}},
                                     CurveSystem{SystemLabel::Gamma, {}}};
  std::array<std::vector<CommonPair>, 3> common;
  GeoTable geo;

  [[nodiscard]] auto lattice() const -> SymplecticLattice { return {genus}; }
  [[nodiscard]] auto system(SystemLabel l) const -> const CurveSystem & {
    return systems[static_cast<std::size_t>(l)];
  }
  auto system(SystemLabel l) -> CurveSystem & {
    return systems[static_cast<std::size_t>(l)];
  }
  [[nodiscard]] auto alpha() const -> const CurveSystem & { return systems[0]; }
  [[nodiscard]] auto beta() const -> const CurveSystem & { return systems[1]; }
  [[nodiscard]] auto gamma() const -> const CurveSystem & { return systems[2]; }
  [[nodiscard]] auto common_of(SystemPair p) const -> const std::vector<CommonPair> & {
    return common[static_cast<std::size_t>(p)];
  }

  /// Closed classical diagram: no boundary and g curves per system.
  [[nodiscard]] auto is_closed_classical() const -> bool {
    return boundary == 0 &&
           std::all_of(systems.begin(), systems.end(),
                       [&](const CurveSystem &s) { return s.size() == genus; });
  }

  friend auto operator==(const StarDiagram &, const StarDiagram &) -> bool = default;
};

// ---------------------------------------------------------------------------
// Validation

enum class Severity { Error, Advisory };

struct Violation {
  Severity severity = Severity::Error;
  std::string kind;    ///< Pairing, ZeroVector, VectorLength, CommonIndex
  std::string where;   ///< e.g. "alpha[0],alpha[1]"
  std::string message;
};

inline auto has_errors(const std::vector<Violation> &v) -> bool {
  return std::any_of(v.begin(), v.end(),
                     [](const Violation &x) { return x.severity == Severity::Error; });
}

/// Cut-system check: every pair of curves in the system must have zero
/// algebraic intersection. Zero classes are legal (separating or
/// boundary-parallel curves) and only reported as advisories.
inline auto validate_cut_system(const CurveSystem &sys, const SymplecticLattice &lattice)
    -> std::vector<Violation> {
  std::vector<Violation> out;
  const auto name = to_string(sys.label);
  bool lengths_ok = true;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (sys.classes[i].size() != lattice.dimension()) {
      out.push_back({Severity::Error, "VectorLength", name + "[" + std::to_string(i) + "]",
                     "expected " + std::to_string(lattice.dimension()) + " entries, got " +
                         std::to_string(sys.classes[i].size())});
      lengths_ok = false;
    }
  }
  if (!lengths_ok) return out;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto &v = sys.classes[i];
    if (std::all_of(v.begin(), v.end(), [](const Int &x) { return x == 0; }))
      out.push_back({Severity::Advisory, "ZeroVector", name + "[" + std::to_string(i) + "]",
                     "null-homologous curve (separating or boundary parallel)"});
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      Int p = lattice.pairing(v, sys.classes[j]);
      if (p != 0)
        out.push_back({Severity::Error, "Pairing",
                       name + "[" + std::to_string(i) + "]," + name + "[" +
                           std::to_string(j) + "]",
                       "algebraic intersection " + p.str()});
    }
  }
  return out;
}

/// Cut-system checks on all three systems plus the common-curve indices.
inline auto validate_diagram(const StarDiagram &d) -> std::vector<Violation> {
  std::vector<Violation> out;
  for (const auto &sys : d.systems) {
    auto v = validate_cut_system(sys, d.lattice());
    out.insert(out.end(), v.begin(), v.end());
  }
  for (std::size_t p = 0; p < 3; ++p) {
    auto [la, lb] = systems_of(static_cast<SystemPair>(p));
    const auto &a = d.system(la);
    const auto &b = d.system(lb);
    for (const auto &c : d.common[p]) {
      const auto where = to_string(static_cast<SystemPair>(p)) + "(" +
                         std::to_string(c.first) + "," + std::to_string(c.second) + ")";
      if (c.first >= a.size() || c.second >= b.size()) {
        out.push_back({Severity::Error, "CommonIndex", where, "index out of range"});
      } else if (a.classes[c.first] != b.classes[c.second]) {
        out.push_back({Severity::Error, "CommonIndex", where,
                       "common curve has different classes in the two systems"});
      }
    }
  }
  return out;
}

struct StandardPairReport {
  bool standard = false;
  std::size_t stabilizing_pairs = 0; ///< delta_stab: pairs meeting once
  std::size_t common_curves = 0;     ///< Delta_all
  std::size_t only_first = 0;        ///< curves of the first system disjoint from the second
  std::size_t only_second = 0;
  std::vector<std::string> problems;
};

/// Decides whether two curve systems form a standard pair: within-system
/// curves are disjoint, the common curves are shared, and the remaining
/// curves either pair off bijectively with exactly one geometric
/// intersection or miss the other system entirely.
inline auto validate_standard_pair(const CurveSystem &a, const CurveSystem &b,
                                   const GeoTable &geo,
                                   const std::vector<CommonPair> &common)
    -> StandardPairReport {
  StandardPairReport rep;
  auto geo_at = [&](CurveRef x, CurveRef y) -> std::uint64_t {
    auto v = geo.get(x, y);
    if (!v)
      throw Error(ErrorCode::MissingGeo,
                  "no geometric intersection recorded for " + x.str() + ":" + y.str());
    return *v;
  };
  auto within = [&](const CurveSystem &s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        auto v = geo.get({s.label, i}, {s.label, j});
        if (v && *v != 0)
          rep.problems.push_back(to_string(s.label) + " curves " + std::to_string(i) +
                                 " and " + std::to_string(j) + " intersect");
      }
  };
  within(a);
  within(b);

  std::vector<bool> a_common(a.size(), false), b_common(b.size(), false);
  for (const auto &c : common) {
    if (c.first >= a.size() || c.second >= b.size())
      throw Error(ErrorCode::CommonIndexMismatch, "common index out of range");
    if (a.classes[c.first] != b.classes[c.second])
      rep.problems.push_back("common curve " + std::to_string(c.first) + "/" +
                             std::to_string(c.second) + " has mismatched classes");
    a_common[c.first] = true;
    b_common[c.second] = true;
  }
  rep.common_curves = common.size();

  const std::size_t dim = a.size() ? a.classes[0].size() : (b.size() ? b.classes[0].size() : 0);
  const SymplecticLattice lattice{dim / 2};
  std::vector<std::size_t> b_match(b.size(), 0);
  std::vector<std::size_t> a_match(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto n = geo_at({a.label, i}, {b.label, j});
      const Int alg = abs_int(lattice.pairing(a.classes[i], b.classes[j]));
      if (alg > n || (Int(n) - alg) % 2 != 0)
        rep.problems.push_back("geometric count " + std::to_string(n) + " for " +
                               CurveRef{a.label, i}.str() + ":" + CurveRef{b.label, j}.str() +
                               " contradicts algebraic intersection " + alg.str());
      if (n == 0) continue;
      if (a_common[i] || b_common[j]) {
        rep.problems.push_back("common curve meets " + CurveRef{a.label, i}.str() + ":" +
                               CurveRef{b.label, j}.str());
      } else if (n > 1) {
        rep.problems.push_back(CurveRef{a.label, i}.str() + " meets " +
                               CurveRef{b.label, j}.str() + " " + std::to_string(n) +
                               " times");
      } else {
        ++a_match[i];
        ++b_match[j];
      }
    }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a_match[i] > 1)
      rep.problems.push_back(CurveRef{a.label, i}.str() + " meets several curves once");
    if (a_match[i] == 1) ++rep.stabilizing_pairs;
    if (!a_common[i] && a_match[i] == 0) ++rep.only_first;
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b_match[j] > 1)
      rep.problems.push_back(CurveRef{b.label, j}.str() + " meets several curves once");
    if (!b_common[j] && b_match[j] == 0) ++rep.only_second;
  }
  rep.standard = rep.problems.empty();
  return rep;
}

enum class Genus1Kind { S3, S1xS2, Invalid };

inline auto to_string(Genus1Kind k) -> std::string {
  switch (k) {
  case Genus1Kind::S3: return "S3";
  case Genus1Kind::S1xS2: return "S1xS2";
  case Genus1Kind::Invalid: return "Invalid";
  }
  return "Invalid";
}

/// Genus-one Heegaard pair with slopes x, y.
inline auto genus1_pair_kind(const Fraction &x, const Fraction &y) -> Genus1Kind {
  const Int d = abs_int(dmet(x, y));
  if (d == 1) return Genus1Kind::S3;
  if (d == 0) return Genus1Kind::S1xS2;
  return Genus1Kind::Invalid;
}

// ---------------------------------------------------------------------------
// Parameter tuples

struct BridgeData {
  std::int64_t bridges = 0;           ///< b: trivial arcs per handlebody
  std::array<std::int64_t, 3> disks{}; ///< c_i: trivial disks per sector
  friend auto operator==(const BridgeData &, const BridgeData &) -> bool = default;

  [[nodiscard]] auto str() const -> std::string {
    return std::to_string(bridges) + ";" + std::to_string(disks[0]) + "," +
           std::to_string(disks[1]) + "," + std::to_string(disks[2]);
  }
};

namespace detail {

inline auto parse_i64(std::string_view s, std::string_view what) -> std::int64_t {
  std::int64_t v = 0;
  auto first = s.data();
  auto last = s.data() + s.size();
  if (!s.empty() && s[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last)
    throw Error(ErrorCode::InvalidParams, "bad integer '" + std::string(s) + "' in " +
                                              std::string(what));
  return v;
}

inline auto split(std::string_view s, char sep) -> std::vector<std::string_view> {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline auto strip_parens(std::string_view s) -> std::string_view {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return s.substr(1, s.size() - 2);
  return s;
}

inline auto parse_triple(std::string_view s, std::string_view what) -> std::array<std::int64_t, 3> {
  auto parts = split(s, ',');
  if (parts.size() == 1) {
    auto v = parse_i64(parts[0], what);
    return {v, v, v};
  }
  if (parts.size() != 3)
    throw Error(ErrorCode::InvalidParams, "expected k or k1,k2,k3 in " + std::string(what));
  return {parse_i64(parts[0], what), parse_i64(parts[1], what), parse_i64(parts[2], what)};
}

} // namespace detail

/// (g; k1,k2,k3) with boundary count b and optional bridge data (b; c1,c2,c3).
struct TrisectionParams {
  std::int64_t genus = 0;
  std::array<std::int64_t, 3> k{};
  std::int64_t boundary = 0;
  std::optional<BridgeData> bridge;

  friend auto operator==(const TrisectionParams &, const TrisectionParams &) -> bool = default;

  [[nodiscard]] auto is_closed() const -> bool { return boundary == 0; }

  void validate() const {
    if (genus < 0 || boundary < 0)
      throw Error(ErrorCode::InvalidParams, "genus and boundary must be non-negative");
    for (auto ki : k)
      if (ki < 0 || ki > genus)
        throw Error(ErrorCode::InvalidParams, "need 0 <= k_i <= g in " + str());
    if (bridge) {
      const auto cmax = *std::max_element(bridge->disks.begin(), bridge->disks.end());
      if (cmax < 1 || bridge->bridges < cmax)
        throw Error(ErrorCode::InvalidParams, "bridge data needs b >= max(c_i) >= 1");
    }
  }

  /// "g;k1,k2,k3[;b]"; a single k means the balanced tuple. Parentheses allowed.
  static auto parse(std::string_view text) -> TrisectionParams {
    auto body = detail::strip_parens(text);
    auto parts = detail::split(body, ';');
    if (parts.size() < 2 || parts.size() > 3)
      throw Error(ErrorCode::InvalidParams, "expected g;k1,k2,k3[;b], got '" + std::string(text) + "'");
    TrisectionParams p;
    p.genus = detail::parse_i64(parts[0], "genus");
    p.k = detail::parse_triple(parts[1], "sector genera");
    if (parts.size() == 3) p.boundary = detail::parse_i64(parts[2], "boundary");
    p.validate();
    return p;
  }

  [[nodiscard]] auto str() const -> std::string {
    std::string s = std::to_string(genus) + ";" + std::to_string(k[0]) + "," +
                    std::to_string(k[1]) + "," + std::to_string(k[2]);
    if (boundary != 0) s += ";" + std::to_string(boundary);
    return s;
  }
};

/// "b;c1,c2,c3"
inline auto parse_bridge(std::string_view text) -> BridgeData {
  auto parts = detail::split(detail::strip_parens(text), ';');
  if (parts.size() != 2)
    throw Error(ErrorCode::InvalidParams, "expected b;c1,c2,c3, got '" + std::string(text) + "'");
  BridgeData bd;
  bd.bridges = detail::parse_i64(parts[0], "bridge count");
  bd.disks = detail::parse_triple(parts[1], "disk counts");
  const auto cmax = *std::max_element(bd.disks.begin(), bd.disks.end());
  if (cmax < 1 || bd.bridges < cmax)
    throw Error(ErrorCode::InvalidParams, "bridge data needs b >= max(c_i) >= 1");
  return bd;
}

/// Counting shadow of a star diagram: genus, boundary circles and the
/// number of curves in each system.
struct StarShape {
  std::int64_t genus = 0;
  std::int64_t boundary = 0;
  std::array<std::int64_t, 3> curves{};
  friend auto operator==(const StarShape &, const StarShape &) -> bool = default;
};

inline auto shape_of(const StarDiagram &d) -> StarShape {
  return {static_cast<std::int64_t>(d.genus), static_cast<std::int64_t>(d.boundary),
          {static_cast<std::int64_t>(d.alpha().size()), static_cast<std::int64_t>(d.beta().size()),
           static_cast<std::int64_t>(d.gamma().size())}};
}

} // namespace trisect
