#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qubatch/exec.hpp"
#include "qubatch/lattice.hpp"

namespace qubatch {

enum class GraphKind { bipartite, general };

/// Trivial-intersection graph on lattice slices. Bipartite: left side is the
/// dim-m slice, right side the dim-(k-m) slice, edges only across sides.
/// General: all half-dimension subspaces of (Z_2)^{2s}, edges between
/// trivially intersecting pairs.
struct IntersectionGraph {
  GraphKind kind = GraphKind::general;
  Ambient amb;
  uint32_t left_dim = 0;   // general: the half dimension
  uint32_t right_dim = 0;  // bipartite only
  uint32_t n_left = 0;     // general: all vertices
  std::vector<Subspace> vertices;          // bipartite: left slice then right
  std::vector<std::vector<uint32_t>> adj;  // sorted neighbor lists
  uint64_t edge_count = 0;

  uint32_t vertex_count() const { return static_cast<uint32_t>(vertices.size()); }
  bool has_edge(uint32_t u, uint32_t v) const;
};

/// Bipartite graph between the dim-m and dim-(k-m) slices; requires m != k-m
/// (for m = k/2 use build_halfdim_graph). Every vertex has degree p^{m(k-m)}.
IntersectionGraph build_bipartite_graph(uint32_t k, uint32_t m, uint32_t p = 2,
                                        uint64_t cap = kDefaultCap,
                                        Exec exec = Exec::parallel);

/// The graph on all s-dimensional subspaces of (Z_2)^{2s}; 2^{s^2}-regular.
IntersectionGraph build_halfdim_graph(uint32_t k, uint64_t cap = kDefaultCap,
                                      Exec exec = Exec::parallel);

std::map<uint64_t, uint64_t> degree_profile(const IntersectionGraph& g);

/// Partition of the vertex set; each component sorted, components ordered by
/// smallest vertex.
std::vector<std::vector<uint32_t>> connected_components(const IntersectionGraph& g);

/// Edge connectivity via unit-capacity max-flow from a fixed source to every
/// other vertex. Returns 0 for disconnected graphs. Vertex count must be
/// small (<= 200); quadratic in flow runs.
uint64_t edge_connectivity(const IntersectionGraph& g);

/// Lexicographically first triangle, or nullopt when triangle-free.
std::optional<std::array<uint32_t, 3>> find_triangle(const IntersectionGraph& g);

}  // namespace qubatch
