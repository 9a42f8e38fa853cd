#pragma once

#include "trisect/error.hpp"

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace trisect {

/// Graph embedded in a surface, given by a rotation system. Edge e owns the
/// darts 2e and 2e+1; each vertex lists its darts in counterclockwise order.
class RibbonGraph {
public:
  RibbonGraph() = default;

  /// Rotation lists for every vertex. Throws DanglingDart unless every dart
  /// 0 .. 2E-1 occurs exactly once.
  explicit RibbonGraph(std::vector<std::vector<std::size_t>> rotations)
      : rotation_(std::move(rotations)) {
    check();
  }

  auto add_vertex() -> std::size_t {
    rotation_.emplace_back();
    return rotation_.size() - 1;
  }

  /// Appends an edge u - v; its darts go last in the rotations at u and v.
  auto add_edge(std::size_t u, std::size_t v) -> std::size_t {
    if (u >= rotation_.size() || v >= rotation_.size())
      throw Error(ErrorCode::DanglingDart, "edge endpoint is not a vertex");
    const std::size_t e = edges_++;
    rotation_[u].push_back(2 * e);
    rotation_[v].push_back(2 * e + 1);
    index();
    return e;
  }

  [[nodiscard]] auto vertex_count() const -> std::size_t { return rotation_.size(); }
  [[nodiscard]] auto edge_count() const -> std::size_t { return edges_; }
  [[nodiscard]] auto rotations() const -> const std::vector<std::vector<std::size_t>> & {
    return rotation_;
  }
  [[nodiscard]] auto vertex_of(std::size_t dart) const -> std::size_t { return vertex_[dart]; }

  /// Next dart counterclockwise around the vertex of `dart`.
  [[nodiscard]] auto rotate(std::size_t dart) const -> std::size_t {
    const auto &cyc = rotation_[vertex_[dart]];
    return cyc[(slot_[dart] + 1) % cyc.size()];
  }

  /// Boundary walk of the thickened graph: phi = rotate o flip. Each orbit is
  /// one boundary circle; an isolated vertex contributes one circle of its own.
  [[nodiscard]] auto faces() const -> std::vector<std::vector<std::size_t>> {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(2 * edges_, false);
    for (std::size_t d = 0; d < 2 * edges_; ++d) {
      if (seen[d]) continue;
      std::vector<std::size_t> orbit;
      for (std::size_t x = d; !seen[x]; x = rotate(x ^ 1)) {
        seen[x] = true;
        orbit.push_back(x);
      }
      out.push_back(std::move(orbit));
    }
    for (const auto &cyc : rotation_)
      if (cyc.empty()) out.emplace_back();
    return out;
  }

  /// Connected component label of every vertex.
  [[nodiscard]] auto components() const -> std::vector<std::size_t> {
    std::vector<std::size_t> parent(rotation_.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t e = 0; e < edges_; ++e) parent[find(vertex_[2 * e])] = find(vertex_[2 * e + 1]);
    std::vector<std::size_t> label(rotation_.size());
    for (std::size_t v = 0; v < rotation_.size(); ++v) label[v] = find(v);
    return label;
  }

private:
  void check() {
    std::size_t darts = 0;
    for (const auto &cyc : rotation_) darts += cyc.size();
    if (darts % 2 != 0)
      throw Error(ErrorCode::DanglingDart, "odd number of darts: some edge has one end");
    edges_ = darts / 2;
    std::vector<int> count(darts, 0);
    for (const auto &cyc : rotation_)
      for (auto d : cyc) {
        if (d >= darts)
          throw Error(ErrorCode::DanglingDart, "dart " + std::to_string(d) + " has no partner");
        if (++count[d] > 1)
          throw Error(ErrorCode::DanglingDart, "dart " + std::to_string(d) + " listed twice");
      }
    index();
  }

  void index() {
    vertex_.assign(2 * edges_, 0);
    slot_.assign(2 * edges_, 0);
    for (std::size_t v = 0; v < rotation_.size(); ++v)
      for (std::size_t s = 0; s < rotation_[v].size(); ++s) {
        vertex_[rotation_[v][s]] = v;
        slot_[rotation_[v][s]] = s;
      }
  }

  std::vector<std::vector<std::size_t>> rotation_;
  std::size_t edges_ = 0;
  std::vector<std::size_t> vertex_;
  std::vector<std::size_t> slot_;
};

struct ShadowCurves {
  std::size_t boundary_parallel = 0;
  std::size_t essential = 0;
  std::vector<std::int64_t> component_genus; ///< one entry per connected component

  [[nodiscard]] auto total() const -> std::size_t { return boundary_parallel + essential; }
};

/// Boundary circles of a regular neighborhood of the shadow graph. A tree
/// component thickens to a disk, whose single boundary circle is
/// boundary-parallel; every circle of a component containing a cycle is
/// essential. Per component, V - E + F = 2 - 2h must give h >= 0.
inline auto shadow_boundary_curves(const RibbonGraph &rg) -> ShadowCurves {
  const auto label = rg.components();
  const std::size_t n = rg.vertex_count();
  std::vector<std::int64_t> verts(n, 0), edges(n, 0), faces(n, 0);
  for (std::size_t v = 0; v < n; ++v) ++verts[label[v]];
  for (std::size_t e = 0; e < rg.edge_count(); ++e) ++edges[label[rg.vertex_of(2 * e)]];

  for (const auto &f : rg.faces())
    if (!f.empty()) ++faces[label[rg.vertex_of(f.front())]];
  for (std::size_t v = 0; v < n; ++v)
    if (rg.rotations()[v].empty()) ++faces[label[v]];

  ShadowCurves out;
  for (std::size_t c = 0; c < n; ++c) {
    if (label[c] != c) continue;
    const std::int64_t chi = verts[c] - edges[c] + faces[c];
    if (chi > 2 || (2 - chi) % 2 != 0)
      throw std::logic_error("face tracing violates Euler characteristic");
    out.component_genus.push_back((2 - chi) / 2);
    if (edges[c] == verts[c] - 1)
      out.boundary_parallel += static_cast<std::size_t>(faces[c]);
    else
      out.essential += static_cast<std::size_t>(faces[c]);
  }
  return out;
}

} // namespace trisect
