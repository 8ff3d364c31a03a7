#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qubatch/graph.hpp"

namespace qubatch {

struct Matching {
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  uint64_t size() const { return pairs.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Maximum matching of a bipartite intersection graph (Hopcroft-Karp layered
/// augmentation). Deterministic: vertices processed in canonical order, ties
/// broken by lowest index. Pairs are (left, right), sorted by left.
Matching max_bipartite_matching(const IntersectionGraph& g);

/// Maximum matching of a general graph (blossom contraction). Deterministic
/// under canonical vertex order. Pairs are (min, max), sorted.
Matching max_general_matching(const IntersectionGraph& g);

/// Independent validity check: pairs vertex-disjoint and every pair an edge,
/// with the edge predicate re-verified through fplinalg intersection rather
/// than the stored adjacency.
bool matching_is_valid(const IntersectionGraph& g, const Matching& m);

}  // namespace qubatch
