#pragma once

#include "trisect/diagram.hpp"
#include "trisect/error.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace trisect {

/// Both pieces are relative trisections with closed trisection surface and
/// pages of genus page_genus.
struct ClosedPage {
  std::int64_t page_genus = 0;
};

/// Both surfaces expose exactly n boundary circles, all of which are glued.
/// The sector genera of the result are not determined numerically by the
/// gluing; they are reported only when the caller supplies them.
struct BoundaryCircles {
  std::int64_t n = 0;
  std::optional<std::array<std::int64_t, 3>> sector_genera;
};

using PastingMode = std::variant<ClosedPage, BoundaryCircles>;

struct PastingInput {
  TrisectionParams left;
  TrisectionParams right;
  PastingMode mode;
};

struct PastedParams {
  std::int64_t genus = 0;
  std::optional<std::array<std::int64_t, 3>> k;

  friend auto operator==(const PastedParams &, const PastedParams &) -> bool = default;

  [[nodiscard]] auto str() const -> std::string {
    std::string s = std::to_string(genus);
    if (k) s += ";" + std::to_string((*k)[0]) + "," + std::to_string((*k)[1]) + "," +
                std::to_string((*k)[2]);
    return s;
  }
};

inline auto paste(const PastingInput &in) -> PastedParams {
  in.left.validate();
  in.right.validate();
  if (const auto *page = std::get_if<ClosedPage>(&in.mode)) {
    if (page->page_genus < 0) throw Error(ErrorCode::InvalidParams, "page genus must be >= 0");
    if (!in.left.is_closed() || !in.right.is_closed())
      throw Error(ErrorCode::ModeMismatch, "closed-page pasting needs b = 0 on both sides");
    std::array<std::int64_t, 3> k{};
    for (std::size_t i = 0; i < 3; ++i)
      k[i] = in.left.k[i] + in.right.k[i] + 2 * page->page_genus;
    return {in.left.genus + in.right.genus + 2, k};
  }
  const auto &circles = std::get<BoundaryCircles>(in.mode);
  if (circles.n <= 0) throw Error(ErrorCode::ModeMismatch, "need at least one boundary circle");
  if (in.left.boundary != circles.n || in.right.boundary != circles.n)
    throw Error(ErrorCode::ModeMismatch,
                "both surfaces must have exactly " + std::to_string(circles.n) +
                    " boundary circles (got " + std::to_string(in.left.boundary) + " and " +
                    std::to_string(in.right.boundary) + ")");
  // chi(S u S') = chi(S) + chi(S') with chi = 2 - 2g - b on each side.
  return {in.left.genus + in.right.genus + circles.n - 1, circles.sector_genera};
}

/// (g; k) # (g'; k') along surfaces in matching bridge position (b; c):
/// G = g + g' + 2b - 1, K_i = k_i + k_i' + c_i.
inline auto fiber_sum(const TrisectionParams &left, const TrisectionParams &right)
    -> TrisectionParams {
  left.validate();
  right.validate();
  if (!left.bridge || !right.bridge)
    throw Error(ErrorCode::InvalidParams, "fiber sum needs bridge data on both sides");
  if (!left.is_closed() || !right.is_closed())
    throw Error(ErrorCode::BoundaryNotSupported, "fiber sum is defined for closed tuples");
  if (*left.bridge != *right.bridge)
    throw Error(ErrorCode::CellDecompositionMismatch,
                "bridge positions differ: " + left.bridge->str() + " vs " + right.bridge->str());
  const auto &br = *left.bridge;
  TrisectionParams out;
  out.genus = left.genus + right.genus + 2 * br.bridges - 1;
  for (std::size_t i = 0; i < 3; ++i) out.k[i] = left.k[i] + right.k[i] + br.disks[i];
  return out;
}

/// Removes t stabilizations from sector i (1-based).
inline auto destabilize(const TrisectionParams &p, int sector, std::int64_t times)
    -> TrisectionParams {
  p.validate();
  if (sector < 1 || sector > 3)
    throw Error(ErrorCode::InvalidParams, "sector must be 1, 2 or 3");
  if (times < 0) throw Error(ErrorCode::InvalidParams, "times must be >= 0");
  auto &ki = p.k[static_cast<std::size_t>(sector - 1)];
  if (ki < times || p.genus < times)
    throw Error(ErrorCode::CannotDestabilize,
                "cannot destabilize " + p.str() + " " + std::to_string(times) +
                    " times in sector " + std::to_string(sector));
  TrisectionParams out = p;
  out.bridge.reset();
  out.genus -= times;
  out.k[static_cast<std::size_t>(sector - 1)] -= times;
  for (auto k : out.k)
    if (k > out.genus)
      throw Error(ErrorCode::CannotDestabilize,
                  "result " + out.str() + " has a sector genus above the surface genus");
  return out;
}

// ---------------------------------------------------------------------------
// Poking and curve complements

inline void require_counts(const std::array<std::int64_t, 3> &c, const char *what) {
  for (auto v : c)
    if (v < 0) throw Error(ErrorCode::InvalidParams, std::string(what) + " must be >= 0");
}

/// Removes |p_eps| disks near system eps; each new boundary circle joins
/// that system as a null-homologous curve.
inline auto poke(const StarShape &s, const std::array<std::int64_t, 3> &counts) -> StarShape {
  require_counts(counts, "poke counts");
  StarShape out = s;
  for (std::size_t i = 0; i < 3; ++i) {
    out.boundary += counts[i];
    out.curves[i] += counts[i];
  }
  return out;
}

inline auto poke(const StarDiagram &d, const std::array<std::int64_t, 3> &counts) -> StarDiagram {
  require_counts(counts, "poke counts");
  StarDiagram out = d;
  const HomologyVector zero(d.lattice().dimension(), Int(0));
  for (std::size_t i = 0; i < 3; ++i) {
    out.boundary += static_cast<std::size_t>(counts[i]);
    for (std::int64_t j = 0; j < counts[i]; ++j) out.systems[i].classes.push_back(zero);
  }
  return out;
}

/// Complement of a decomposed curve a1 u a2 u a3. Each arc set meets the
/// neighboring ones in |a| points, which become punctures; every system
/// gains |b_i| boundary-parallel curves and one essential curve per arc
/// (the boundary of its neighborhood). For a closed manifold and single
/// arcs, the two new curves of each system are parallel and one is dropped.
inline auto curve_complement(const StarShape &s, const std::array<std::int64_t, 3> &arcs)
    -> StarShape {
  require_counts(arcs, "arc counts");
  if (arcs[0] != arcs[1] || arcs[1] != arcs[2])
    throw Error(ErrorCode::UnequalArcs, "a decomposed curve has |a1| = |a2| = |a3|");
  const std::int64_t a = arcs[0];
  StarShape out = s;
  out.boundary += 3 * a;
  const bool drop_parallel = s.boundary == 0 && a == 1;
  for (auto &c : out.curves) c += 2 * a - (drop_parallel ? 1 : 0);
  return out;
}

/// Surface genus after removing a single-arc decomposed curve from a closed
/// diagram and gluing back a genus-0 piece along the three new boundary
/// circles: g + 0 + 3 - 1 = g + 2.
inline auto surgery_closure_genus(const StarShape &closed) -> std::int64_t {
  if (closed.boundary != 0)
    throw Error(ErrorCode::BoundaryNotSupported, "surgery closure starts from a closed diagram");
  const auto holed = curve_complement(closed, {1, 1, 1});
  TrisectionParams left{holed.genus, {0, 0, 0}, holed.boundary, std::nullopt};
  TrisectionParams right{0, {0, 0, 0}, holed.boundary, std::nullopt};
  return paste({left, right, BoundaryCircles{holed.boundary, std::nullopt}}).genus;
}

} // namespace trisect
