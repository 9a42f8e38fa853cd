#pragma once

#include "trisect/diagram.hpp"
#include "trisect/error.hpp"
#include "trisect/zmatrix.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trisect {

struct HomologyReport {
  std::size_t h1_free_rank = 0;
  std::vector<Int> h1_torsion;
  std::optional<std::int64_t> euler;

  friend auto operator==(const HomologyReport &, const HomologyReport &) -> bool = default;

  /// "0", "Z", "Z^2 + Z/2", "Z/3 + Z/6", ...
  [[nodiscard]] auto h1_str() const -> std::string {
    std::string s;
    if (h1_free_rank == 1) s = "Z";
    if (h1_free_rank > 1) s = "Z^" + std::to_string(h1_free_rank);
    for (const auto &t : h1_torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + t.str();
    }
    return s.empty() ? "0" : s;
  }
};

/// H_1(X) = Z^{2g} / span(alpha u beta u gamma): every curve bounds a disk in
/// one of the handlebodies and pi_1(Sigma) surjects onto pi_1(X).
inline auto first_homology(const StarDiagram &d) -> HomologyReport {
  auto violations = validate_diagram(d);
  if (has_errors(violations))
    throw Error(ErrorCode::InvalidDiagram,
                violations.front().where + ": " + violations.front().message);
  const std::size_t dim = d.lattice().dimension();
  std::size_t count = 0;
  for (const auto &s : d.systems) count += s.size();
  IntMatrix relations(dim, count);
  std::size_t col = 0;
  for (const auto &s : d.systems)
    for (const auto &v : s.classes) {
      for (std::size_t i = 0; i < dim; ++i) relations(i, col) = v[i];
      ++col;
    }
  auto coker = cokernel_invariants(relations);
  return {coker.free_rank, std::move(coker.torsion), std::nullopt};
}

inline void require_closed(const TrisectionParams &p) {
  p.validate();
  if (!p.is_closed())
    throw Error(ErrorCode::BoundaryNotSupported,
                "only closed parameter tuples (b = 0) are supported");
}

/// chi(X) = 2 + g - k1 - k2 - k3 for a closed trisection.
inline auto euler_char(const TrisectionParams &p) -> std::int64_t {
  require_closed(p);
  return 2 + p.genus - p.k[0] - p.k[1] - p.k[2];
}

/// (h0, h1, h2, h3, h4) = (1, k1, g - k2, k3, 1).
inline auto handle_counts(const TrisectionParams &p) -> std::array<std::int64_t, 5> {
  require_closed(p);
  return {1, p.k[0], p.genus - p.k[1], p.k[2], 1};
}

} // namespace trisect
