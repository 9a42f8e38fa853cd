#pragma once

#include "trisect/diagram.hpp"
#include "trisect/error.hpp"
#include "trisect/fraction.hpp"
#include "trisect/zmatrix.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace trisect {

/// Slopes of the three curve systems of the genus-three diagram D(x, y, z).
struct FareyTriple {
  Fraction x, y, z;

  [[nodiscard]] auto at(std::size_t i) const -> const Fraction & {
    return i == 0 ? x : (i == 1 ? y : z);
  }
  [[nodiscard]] auto str() const -> std::string {
    return x.str() + " " + y.str() + " " + z.str();
  }
  friend auto operator==(const FareyTriple &, const FareyTriple &) -> bool = default;
};

enum class TripleKind { FareyTriplet, TwoDistinct, AllEqual, Invalid };

inline auto to_string(TripleKind k) -> std::string {
  switch (k) {
  case TripleKind::FareyTriplet: return "FareyTriplet";
  case TripleKind::TwoDistinct: return "TwoDistinct";
  case TripleKind::AllEqual: return "AllEqual";
  case TripleKind::Invalid: return "Invalid";
  }
  return "Invalid";
}

/// D(x, y, z) is a trisection diagram iff every pair satisfies |d| <= 1.
inline auto triple_kind(const FareyTriple &t) -> TripleKind {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (abs_int(dmet(t.at(i), t.at(j))) > 1) return TripleKind::Invalid;
  std::set<Fraction> distinct{t.x, t.y, t.z};
  switch (distinct.size()) {
  case 1: return TripleKind::AllEqual;
  case 2: return TripleKind::TwoDistinct;
  default: return TripleKind::FareyTriplet;
  }
}

namespace detail {

inline auto exact_div(const Int &num, const Int &den) -> Int {
  if (den == 0 || num % den != 0)
    throw std::logic_error("intersection form entry is not integral: " + num.str() + "/" +
                           den.str());
  return num / den;
}

/// Moves the repeated slope into positions 2 and 3.
inline auto repeated_last(const FareyTriple &t) -> FareyTriple {
  if (t.y == t.z) return t;
  if (t.x == t.y) return {t.z, t.x, t.x};
  return {t.y, t.x, t.x}; // x == z
}

} // namespace detail

/// Closed-form intersection form of the manifold of D(a/b, c/d, p/q):
///
///   [ bd/(ad-bc)          -1   b(cq-dp)/(bc-ad)          ]
///   [ -1                   0   0                         ]
///   [ b(cq-dp)/(bc-ad)     0   (bp-aq)(cq-dp)/(bc-ad)    ]
///
/// For two distinct slopes the repeated one is moved to slots 2-3 first and
/// the surviving 2x2 block is returned.
inline auto qx(const FareyTriple &t) -> IntMatrix {
  const auto kind = triple_kind(t);
  if (kind == TripleKind::AllEqual || kind == TripleKind::Invalid)
    throw Error(ErrorCode::FormUndefined,
                "no closed-form intersection form for " + to_string(kind) + " triple " + t.str());
  const FareyTriple s = kind == TripleKind::TwoDistinct ? detail::repeated_last(t) : t;
  const Int &a = s.x.num(), &b = s.x.den();
  const Int &c = s.y.num(), &d = s.y.den();
  const Int &p = s.z.num(), &q = s.z.den();
  const Int ad_bc = a * d - b * c;
  const Int q11 = detail::exact_div(b * d, ad_bc);
  if (kind == TripleKind::TwoDistinct) return IntMatrix{{q11, -1}, {-1, 0}};
  const Int q13 = detail::exact_div(b * (c * q - d * p), -ad_bc);
  const Int q33 = detail::exact_div((b * p - a * q) * (c * q - d * p), -ad_bc);
  return IntMatrix{{q11, -1, q13}, {-1, 0, 0}, {q13, 0, q33}};
}

enum class FareyManifold { CP2_CP2_CP2bar, CP2_CP2bar_CP2bar, S2xS2, S2twS2, SpunLens, None };
enum class SimpleSummand { S4, CP2, CP2bar };
enum class SphereBundle { S2xS2, S2twS2 };

inline auto to_string(SimpleSummand s) -> std::string {
  switch (s) {
  case SimpleSummand::S4: return "S4";
  case SimpleSummand::CP2: return "CP2";
  case SimpleSummand::CP2bar: return "CP2bar";
  }
  return "S4";
}
inline auto to_string(SphereBundle s) -> std::string {
  return s == SphereBundle::S2xS2 ? "S2xS2" : "S2~xS2";
}

struct FareyClassification {
  TripleKind kind = TripleKind::Invalid;
  FareyManifold manifold = FareyManifold::None;
  std::optional<std::pair<SimpleSummand, SphereBundle>> refined; ///< T # S
  FormClass form;                ///< ZeroForm for AllEqual / Invalid
  IntMatrix form_matrix;         ///< qx of the canonical representative
  Int lens_p = 0, lens_q = 0;    ///< SpunLens(p, q)

  [[nodiscard]] auto manifold_name() const -> std::string {
    switch (manifold) {
    case FareyManifold::CP2_CP2_CP2bar: return "CP2#CP2#CP2bar";
    case FareyManifold::CP2_CP2bar_CP2bar: return "CP2#CP2bar#CP2bar";
    case FareyManifold::S2xS2: return "S2xS2";
    case FareyManifold::S2twS2: return "S2~xS2";
    case FareyManifold::SpunLens: return "SpunLens(" + lens_p.str() + "," + lens_q.str() + ")";
    case FareyManifold::None: return "None";
    }
    return "None";
  }
  [[nodiscard]] auto refined_name() const -> std::string {
    if (!refined) return "";
    return to_string(refined->first) + "#" + to_string(refined->second);
  }
};

/// Canonical representative of the unordered triple: ascending slopes.
/// A cyclic relabeling of the systems preserves the oriented manifold and a
/// transposition reverses orientation, so the ordered qx of a Farey triplet
/// only determines the signature up to sign; classification works on the
/// sorted representative to be independent of the order given.
inline auto canonical_triple(const FareyTriple &t) -> FareyTriple {
  std::array<Fraction, 3> v{t.x, t.y, t.z};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

inline auto classify(const FareyTriple &t) -> FareyClassification {
  FareyClassification out;
  out.kind = triple_kind(t);
  switch (out.kind) {
  case TripleKind::Invalid:
    return out;
  case TripleKind::AllEqual:
    out.manifold = FareyManifold::SpunLens;
    out.lens_p = t.x.den();
    out.lens_q = t.x.num();
    return out;
  case TripleKind::TwoDistinct: {
    const auto s = detail::repeated_last(canonical_triple(t));
    out.form_matrix = qx(s);
    out.form = classify_unimodular(out.form_matrix);
    const bool bd_even = (s.x.den() * s.y.den()) % 2 == 0;
    const auto bundle = bd_even ? SphereBundle::S2xS2 : SphereBundle::S2twS2;
    out.manifold = bd_even ? FareyManifold::S2xS2 : FareyManifold::S2twS2;
    out.refined = std::pair{SimpleSummand::S4, bundle};
    return out;
  }
  case TripleKind::FareyTriplet: {
    out.form_matrix = qx(canonical_triple(t));
    out.form = classify_unimodular(out.form_matrix);
    out.manifold = out.form.signature > 0 ? FareyManifold::CP2_CP2_CP2bar
                                          : FareyManifold::CP2_CP2bar_CP2bar;
    // qx = [[q11,-1],[-1,0]] + <q33> after e3 -> e3 + q13 e2
    const auto &m = out.form_matrix;
    out.refined = std::pair{m(2, 2) > 0 ? SimpleSummand::CP2 : SimpleSummand::CP2bar,
                            m(0, 0) % 2 == 0 ? SphereBundle::S2xS2 : SphereBundle::S2twS2};
    return out;
  }
  }
  return out;
}

/// The two slopes completing {x, y} to a Farey triangle:
/// (a+c)/(b+d) and (a-c)/(b-d).
inline auto mediants(const Fraction &x, const Fraction &y) -> std::pair<Fraction, Fraction> {
  if (abs_int(dmet(x, y)) != 1)
    throw Error(ErrorCode::NotNeighbors, x.str() + " and " + y.str() + " are not Farey neighbors");
  return {Fraction(x.num() + y.num(), x.den() + y.den()),
          Fraction(x.num() - y.num(), x.den() - y.den())};
}

/// Slopes of height at most n: 1/0 together with every reduced a/b with
/// 1 <= b <= n and |a| <= n, in ascending order.
inline auto bounded_slopes(std::size_t n) -> std::vector<Fraction> {
  std::set<Fraction> set{Fraction::infinity()};
  const auto bound = static_cast<long>(n);
  for (long b = 1; b <= bound; ++b)
    for (long a = -bound; a <= bound; ++a)
      if (gcd_int(a, b) == 1) set.insert(Fraction(a, b));
  return {set.begin(), set.end()};
}

struct AtlasRow {
  FareyTriple triple;
  FareyClassification classification;
};

/// Visits every valid unordered triple over bounded_slopes(max_den), each
/// represented in ascending order, with its classification.
inline void enumerate_triples(std::size_t max_den, const std::function<void(const AtlasRow &)> &visit) {
  const auto slopes = bounded_slopes(max_den);
  const std::size_t n = slopes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (abs_int(dmet(slopes[i], slopes[j])) > 1) continue;
      for (std::size_t k = j; k < n; ++k) {
        FareyTriple t{slopes[i], slopes[j], slopes[k]};
        if (triple_kind(t) == TripleKind::Invalid) continue;
        visit({t, classify(t)});
      }
    }
}

inline auto enumerate_triples(std::size_t max_den) -> std::vector<AtlasRow> {
  std::vector<AtlasRow> rows;
  enumerate_triples(max_den, [&](const AtlasRow &r) { rows.push_back(r); });
  return rows;
}

inline void write_atlas_csv(std::ostream &os, const std::vector<AtlasRow> &rows) {
  os << "triple,kind,manifold,refined,rank,signature,parity,det\n";
  for (const auto &r : rows) {
    const auto &c = r.classification;
    Int det = c.form_matrix.empty() ? Int(1) : determinant(c.form_matrix);
    os << r.triple.str() << ',' << to_string(c.kind) << ',' << c.manifold_name() << ','
       << c.refined_name() << ',' << c.form.rank << ',' << c.form.signature << ','
       << to_string(c.form.parity) << ',' << det << '\n';
  }
}

/// Homology-level model of D(x, y, z) on the genus-3 lattice
/// (e1 f1 e2 f2 e3 f3). Each system holds two central classes and one slope
/// class a*l + b*m written in that system's torus frame (l, m):
///
///   alpha: e1, e2                        frame (e3, f3)
///   beta:  f1, f2                        frame (e3, f3)
///   gamma: e1+f1+e2+f2+e3, e1+f2         frame (e3-e1-f2, f3-f2)
///
/// Any two systems reduce to Z^2/(slope, slope') in the common frame, so
/// a pair is a Heegaard diagram of S^3 or S^1 x S^2 exactly when |d| <= 1,
/// while all three together also kill l: H_1 = Z^2/(slopes, l), which is 0
/// for two or more distinct slopes and Z/p for D(q/p, q/p, q/p).
inline auto farey_homology_model(const FareyTriple &t) -> StarDiagram {
  if (triple_kind(t) == TripleKind::Invalid)
    throw Error(ErrorCode::InvalidTriple, "pairwise |d| exceeds 1 for " + t.str());
  using V = HomologyVector;
  auto slope = [](const Fraction &f, const V &l, const V &m) {
    V v(6);
    for (std::size_t i = 0; i < 6; ++i) v[i] = f.num() * l[i] + f.den() * m[i];
    return v;
  };
  const V e1{1, 0, 0, 0, 0, 0}, f1{0, 1, 0, 0, 0, 0}, e2{0, 0, 1, 0, 0, 0},
      f2{0, 0, 0, 1, 0, 0}, lam{0, 0, 0, 0, 1, 0}, mu{0, 0, 0, 0, 0, 1};
  const V gamma_l{-1, 0, 0, -1, 1, 0}, gamma_m{0, 0, 0, -1, 0, 1};

  StarDiagram d;
  d.genus = 3;
  d.boundary = 0;
  d.systems[0].classes = {e1, e2, slope(t.x, lam, mu)};
  d.systems[1].classes = {f1, f2, slope(t.y, lam, mu)};
  d.systems[2].classes = {V{1, 1, 1, 1, 1, 0}, V{1, 0, 0, 1, 0, 0}, slope(t.z, gamma_l, gamma_m)};
  return d;
}

} // namespace trisect
