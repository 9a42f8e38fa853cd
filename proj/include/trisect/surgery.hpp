#pragma once

// Torus surgery plans. A plan glues T^2 x D^2 back into the complement of a
// torus through a chain of T^3 x I blocks; only the gluing matrices are
// tracked. Block actions, as 3x3 matrices:
//
//   COMPLEMENT, TAU0, TAUEMPTY   identity
//   TAUij                        rotation sigma_ij: M(i,j) = -1, M(j,i) = 1
//   TAUij INV                    its inverse
//   TAUij SWAP                   the coordinate transposition P_ij
//   SHEAR a b c d                f (+) 1 with f = [[a,b],[c,d]] on coordinates 1,2
//
// and the composite is the left-to-right product.

#include "trisect/error.hpp"
#include "trisect/zmatrix.hpp"

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trisect {

enum class BlockKind { Complement, Tau0, Tau, ShearGlue, TauEmpty };
enum class TauAction { Rotation, RotationInverse, Swap };

struct SurgeryBlock {
  BlockKind kind = BlockKind::Tau0;
  std::size_t i = 0, j = 0;          ///< 1-based axes for Tau blocks
  TauAction action = TauAction::Rotation;
  IntMatrix glue;                    ///< 2x2 for ShearGlue

  friend auto operator==(const SurgeryBlock &, const SurgeryBlock &) -> bool = default;

  static auto complement() -> SurgeryBlock { return {BlockKind::Complement, 0, 0, {}, {}}; }
  static auto tau0() -> SurgeryBlock { return {BlockKind::Tau0, 0, 0, {}, {}}; }
  static auto tau_empty() -> SurgeryBlock { return {BlockKind::TauEmpty, 0, 0, {}, {}}; }
  static auto tau(std::size_t i, std::size_t j, TauAction a) -> SurgeryBlock {
    if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
      throw Error(ErrorCode::Parse, "tau axes must be two distinct indices in 1..3");
    return {BlockKind::Tau, i, j, a, {}};
  }
  static auto shear(IntMatrix f) -> SurgeryBlock {
    if (f.rows() != 2 || f.cols() != 2 || determinant(f) != 1)
      throw Error(ErrorCode::NotSL3, "shear gluing must be a 2x2 matrix of determinant 1");
    return {BlockKind::ShearGlue, 0, 0, TauAction::Rotation, std::move(f)};
  }

  [[nodiscard]] auto matrix() const -> IntMatrix {
    IntMatrix m = IntMatrix::identity(3);
    if (kind == BlockKind::ShearGlue) {
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) m(r, c) = glue(r, c);
    } else if (kind == BlockKind::Tau) {
      const std::size_t a = i - 1, b = j - 1;
      m(a, a) = 0;
      m(b, b) = 0;
      switch (action) {
      case TauAction::Rotation: m(a, b) = -1, m(b, a) = 1; break;
      case TauAction::RotationInverse: m(a, b) = 1, m(b, a) = -1; break;
      case TauAction::Swap: m(a, b) = 1, m(b, a) = 1; break;
      }
    }
    return m;
  }

  [[nodiscard]] auto str() const -> std::string {
    switch (kind) {
    case BlockKind::Complement: return "COMPLEMENT";
    case BlockKind::Tau0: return "TAU0";
    case BlockKind::TauEmpty: return "TAUEMPTY";
    case BlockKind::ShearGlue:
      return "SHEAR " + glue(0, 0).str() + " " + glue(0, 1).str() + " " + glue(1, 0).str() +
             " " + glue(1, 1).str();
    case BlockKind::Tau: {
      std::string s = "TAU" + std::to_string(i) + std::to_string(j);
      if (action == TauAction::RotationInverse) s += " INV";
      if (action == TauAction::Swap) s += " SWAP";
      return s;
    }
    }
    return "";
  }
};

struct SurgeryPlan {
  std::vector<SurgeryBlock> blocks;
  IntMatrix composite;

  friend auto operator==(const SurgeryPlan &, const SurgeryPlan &) -> bool = default;

  [[nodiscard]] auto product() const -> IntMatrix {
    IntMatrix m = IntMatrix::identity(3);
    for (const auto &b : blocks) m = m * b.matrix();
    return m;
  }

  /// Sets the composite from the blocks and checks it against `expected`.
  void seal(const IntMatrix &expected) {
    composite = product();
    if (composite != expected)
      throw std::logic_error("surgery plan composite " + composite.str() + " differs from " +
                             expected.str());
  }

  [[nodiscard]] auto str() const -> std::string {
    std::string out;
    for (const auto &b : blocks) out += b.str() + "\n";
    out += "COMPOSITE";
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) out += " " + composite(r, c).str();
    return out + "\n";
  }
};

/// Inverse of SurgeryPlan::str. The COMPOSITE line must agree with the blocks.
inline auto parse_plan(std::string_view text) -> SurgeryPlan {
  SurgeryPlan plan;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_composite = false;
  auto read_ints = [](std::istringstream &ls, std::size_t n, const std::string &where) {
    std::vector<Int> v;
    std::string tok;
    while (ls >> tok) {
      try {
        v.emplace_back(tok);
      } catch (const std::exception &) {
        throw Error(ErrorCode::Parse, where + ": bad integer '" + tok + "'");
      }
    }
    if (v.size() != n)
      throw Error(ErrorCode::Parse, where + ": expected " + std::to_string(n) + " integers");
    return v;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (have_composite) throw Error(ErrorCode::Parse, "text after COMPOSITE line");
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "COMPLEMENT") {
      plan.blocks.push_back(SurgeryBlock::complement());
    } else if (head == "TAU0") {
      plan.blocks.push_back(SurgeryBlock::tau0());
    } else if (head == "TAUEMPTY") {
      plan.blocks.push_back(SurgeryBlock::tau_empty());
    } else if (head == "SHEAR") {
      auto v = read_ints(ls, 4, "SHEAR");
      plan.blocks.push_back(SurgeryBlock::shear(IntMatrix{{v[0], v[1]}, {v[2], v[3]}}));
    } else if (head.size() == 5 && head.rfind("TAU", 0) == 0) {
      std::string mod;
      ls >> mod;
      TauAction a = TauAction::Rotation;
      if (mod == "INV") a = TauAction::RotationInverse;
      else if (mod == "SWAP") a = TauAction::Swap;
      else if (!mod.empty()) throw Error(ErrorCode::Parse, "unknown tau modifier '" + mod + "'");
      plan.blocks.push_back(SurgeryBlock::tau(static_cast<std::size_t>(head[3] - '0'),
                                              static_cast<std::size_t>(head[4] - '0'), a));
    } else if (head == "COMPOSITE") {
      auto v = read_ints(ls, 9, "COMPOSITE");
      plan.composite = IntMatrix{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]}};
      have_composite = true;
    } else {
      throw Error(ErrorCode::Parse, "unknown plan line '" + line + "'");
    }
  }
  if (!have_composite) throw Error(ErrorCode::Parse, "missing COMPOSITE line");
  if (plan.product() != plan.composite)
    throw Error(ErrorCode::Parse, "COMPOSITE does not match the blocks");
  return plan;
}

/// Plan for an arbitrary gluing matrix: the factorization of M over the
/// rotation/shear alphabet, framed by the complement and the end caps.
inline auto surgery_plan_general(const IntMatrix &m) -> SurgeryPlan {
  const auto word = sl3_factor(m);
  SurgeryPlan plan;
  plan.blocks = {SurgeryBlock::complement(), SurgeryBlock::tau0()};
  for (const auto &f : word.factors) {
    if (f.gen == Sl3Gen::Shear) {
      plan.blocks.push_back(SurgeryBlock::shear(IntMatrix{{1, f.k}, {0, 1}}));
      continue;
    }
    auto [a, b] = f.axes();
    // axes() lists (i, j) with M(i,j) = -1; fold the inverses back onto
    // the labels 12, 23, 31.
    const bool inverse = f.gen == Sl3Gen::Sigma12Inv || f.gen == Sl3Gen::Sigma23Inv ||
                         f.gen == Sl3Gen::Sigma31Inv;
    if (inverse) std::swap(a, b);
    plan.blocks.push_back(SurgeryBlock::tau(a + 1, b + 1, inverse ? TauAction::RotationInverse
                                                                  : TauAction::Rotation));
  }
  plan.blocks.push_back(SurgeryBlock::tau_empty());
  plan.seal(m);
  return plan;
}

/// A-logarithmic transform. Conjugating by the transposition of coordinates
/// 1 and 3 moves the glue f (+) 1, f = [[a22,a21],[a12,a11]], to
/// [[1,0,0],[0,a11,a12],[0,a21,a22]]. The 0-transform
/// A = [[0,1],[-1,0]] collapses to the single block TAU23 INV.
inline auto log_transform_plan(const IntMatrix &a) -> SurgeryPlan {
  if (a.rows() != 2 || a.cols() != 2 || determinant(a) != 1)
    throw Error(ErrorCode::NotSL3, "log transform matrix must be 2x2 with determinant 1");
  const IntMatrix expected{{1, 0, 0}, {0, a(0, 0), a(0, 1)}, {0, a(1, 0), a(1, 1)}};
  SurgeryPlan plan;
  if (a == IntMatrix{{0, 1}, {-1, 0}}) {
    plan.blocks = {SurgeryBlock::complement(), SurgeryBlock::tau0(),
                   SurgeryBlock::tau(2, 3, TauAction::RotationInverse), SurgeryBlock::tau_empty()};
  } else {
    const IntMatrix f{{a(1, 1), a(1, 0)}, {a(0, 1), a(0, 0)}};
    plan.blocks = {SurgeryBlock::complement(), SurgeryBlock::tau0(),
                   SurgeryBlock::tau(3, 1, TauAction::Swap), SurgeryBlock::shear(f),
                   SurgeryBlock::tau(3, 1, TauAction::Swap), SurgeryBlock::tau_empty()};
  }
  plan.seal(expected);
  return plan;
}

/// Luttinger surgery X -> X_{m,n}, gluing matrix A_{m,n} = [[1,0,m],[0,1,n],[0,0,1]]:
/// tau23, shear(m) and shear(n) each conjugated by tau13, tau23.
inline auto luttinger_plan(const Int &m, const Int &n) -> SurgeryPlan {
  SurgeryPlan plan;
  plan.blocks = {SurgeryBlock::complement(),
                 SurgeryBlock::tau0(),
                 SurgeryBlock::tau(2, 3, TauAction::Swap),
                 SurgeryBlock::shear(IntMatrix{{1, m}, {0, 1}}),
                 SurgeryBlock::tau(1, 3, TauAction::Swap),
                 SurgeryBlock::shear(IntMatrix{{1, n}, {0, 1}}),
                 SurgeryBlock::tau(1, 3, TauAction::Swap),
                 SurgeryBlock::tau(2, 3, TauAction::Swap),
                 SurgeryBlock::tau_empty()};
  plan.seal(IntMatrix{{1, 0, m}, {0, 1, n}, {0, 0, 1}});
  return plan;
}

} // namespace trisect
