#include "qubatch/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace qubatch {
namespace {

constexpr uint32_t kNone = std::numeric_limits<uint32_t>::max();

// Hopcroft-Karp. Left vertices are [0, n_left), right are [n_left, n).
// Deterministic: BFS seeds free left vertices in index order, DFS scans
// sorted adjacency in index order.
class HopcroftKarp {
 public:
  HopcroftKarp(const IntersectionGraph& g)
      : g_(g),
        n_left_(g.n_left),
        match_left_(g.n_left, kNone),
        match_right_(g.vertex_count(), kNone) {}

  std::vector<std::pair<uint32_t, uint32_t>> run() {
    while (bfs()) {
      for (uint32_t u = 0; u < n_left_; ++u) {
        if (match_left_[u] == kNone) dfs(u);
      }
    }
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t u = 0; u < n_left_; ++u) {
      if (match_left_[u] != kNone) pairs.emplace_back(u, match_left_[u]);
    }
    return pairs;
  }

 private:
  bool bfs() {
    dist_.assign(n_left_, kNone);
    std::deque<uint32_t> queue;
    for (uint32_t u = 0; u < n_left_; ++u) {
      if (match_left_[u] == kNone) {
        dist_[u] = 0;
        queue.push_back(u);
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const uint32_t u = queue.front();
      queue.pop_front();
      for (uint32_t v : g_.adj[u]) {
        const uint32_t w = match_right_[v];
        if (w == kNone) {
          found = true;
        } else if (dist_[w] == kNone) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(uint32_t u) {
    for (uint32_t v : g_.adj[u]) {
      const uint32_t w = match_right_[v];
      if (w == kNone || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kNone;
    return false;
  }

  const IntersectionGraph& g_;
  uint32_t n_left_;
  std::vector<uint32_t> match_left_;
  std::vector<uint32_t> match_right_;
  std::vector<uint32_t> dist_;
};

// Blossom algorithm (alternating-tree search with cycle contraction),
// O(V^3). Roots are tried in index order and adjacency is scanned in index
// order, so the outcome is deterministic.
class Blossom {
 public:
  explicit Blossom(const IntersectionGraph& g)
      : g_(g), n_(g.vertex_count()), match_(n_, kNone), parent_(n_), base_(n_) {}

  std::vector<std::pair<uint32_t, uint32_t>> run() {
    for (uint32_t v = 0; v < n_; ++v) {
      if (match_[v] == kNone) augment_from(v);
    }
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t v = 0; v < n_; ++v) {
      if (match_[v] != kNone && v < match_[v]) pairs.emplace_back(v, match_[v]);
    }
    return pairs;
  }

 private:
  uint32_t lowest_common_base(uint32_t a, uint32_t b) {
    std::vector<bool> used(n_, false);
    for (;;) {
      a = base_[a];
      used[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (used[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(uint32_t v, uint32_t b, uint32_t child, std::vector<bool>& in_blossom) {
    while (base_[v] != b) {
      in_blossom[base_[v]] = true;
      in_blossom[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  void contract(uint32_t u, uint32_t v, std::deque<uint32_t>& queue,
                std::vector<bool>& in_queue) {
    const uint32_t b = lowest_common_base(u, v);
    std::vector<bool> in_blossom(n_, false);
    mark_path(u, b, v, in_blossom);
    mark_path(v, b, u, in_blossom);
    for (uint32_t i = 0; i < n_; ++i) {
      if (in_blossom[base_[i]]) {
        base_[i] = b;
        if (!in_queue[i]) {
          in_queue[i] = true;
          queue.push_back(i);
        }
      }
    }
  }

  void augment_from(uint32_t root) {
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (uint32_t i = 0; i < n_; ++i) base_[i] = i;
    std::vector<bool> in_queue(n_, false);
    std::deque<uint32_t> queue{root};
    in_queue[root] = true;

    while (!queue.empty()) {
      const uint32_t u = queue.front();
      queue.pop_front();
      for (uint32_t v : g_.adj[u]) {
        if (base_[u] == base_[v] || match_[u] == v) continue;
        if (v == root || (match_[v] != kNone && parent_[match_[v]] != kNone)) {
          contract(u, v, queue, in_queue);
        } else if (parent_[v] == kNone) {
          parent_[v] = u;
          if (match_[v] == kNone) {
            flip_path(v);
            return;
          }
          if (!in_queue[match_[v]]) {
            in_queue[match_[v]] = true;
            queue.push_back(match_[v]);
          }
        }
      }
    }
  }

  void flip_path(uint32_t v) {
    while (v != kNone) {
      const uint32_t pv = parent_[v];
      const uint32_t next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  const IntersectionGraph& g_;
  uint32_t n_;
  std::vector<uint32_t> match_;
  std::vector<uint32_t> parent_;
  std::vector<uint32_t> base_;
};

}  // namespace

Matching max_bipartite_matching(const IntersectionGraph& g) {
  if (g.kind != GraphKind::bipartite) {
    throw domain_error("bipartite matcher requires a bipartite graph");
  }
  Matching m;
  m.pairs = HopcroftKarp(g).run();
  return m;
}

Matching max_general_matching(const IntersectionGraph& g) {
  if (g.kind != GraphKind::general) {
    throw domain_error("general matcher requires a general graph");
  }
  Matching m;
  m.pairs = Blossom(g).run();
  return m;
}

bool matching_is_valid(const IntersectionGraph& g, const Matching& m) {
  std::vector<bool> used(g.vertex_count(), false);
  for (const auto& [u, v] : m.pairs) {
    if (u >= g.vertex_count() || v >= g.vertex_count() || u == v) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = true;
    // re-verify the edge predicate through the exact intersection
    if (!intersect(g.vertices[u], g.vertices[v]).is_trivial()) return false;
    if (!g.has_edge(u, v)) return false;
  }
  return true;
}

}  // namespace qubatch
