#include "qubatch/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace qubatch {
namespace {

// Adjacency kernel, bipartite: left vertex rows computed independently and
// mirrored afterwards, so scheduling cannot change the result.
std::vector<std::vector<uint32_t>> bipartite_adjacency(
    const std::vector<Subspace>& verts, uint32_t n_left, Exec exec) {
  const uint32_t n = static_cast<uint32_t>(verts.size());
  std::vector<std::vector<uint32_t>> adj(n);
  const int64_t left = n_left;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int64_t i = 0; i < left; ++i) {
    auto& row = adj[static_cast<size_t>(i)];
    for (uint32_t j = n_left; j < n; ++j) {
      if (trivially_intersects(verts[static_cast<size_t>(i)], verts[j])) row.push_back(j);
    }
  }
  for (uint32_t i = 0; i < n_left; ++i) {
    for (uint32_t j : adj[i]) adj[j].push_back(i);
  }
  for (uint32_t j = n_left; j < n; ++j) std::sort(adj[j].begin(), adj[j].end());
  return adj;
}

// Adjacency kernel, general: full row per vertex (predicate is symmetric).
std::vector<std::vector<uint32_t>> general_adjacency(const std::vector<Subspace>& verts,
                                                     Exec exec) {
  const uint32_t n = static_cast<uint32_t>(verts.size());
  std::vector<std::vector<uint32_t>> adj(n);
  const int64_t nn = n;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int64_t i = 0; i < nn; ++i) {
    auto& row = adj[static_cast<size_t>(i)];
    for (uint32_t j = 0; j < n; ++j) {
      if (j == static_cast<uint32_t>(i)) continue;
      if (trivially_intersects(verts[static_cast<size_t>(i)], verts[j])) row.push_back(j);
    }
  }
  return adj;
}

uint64_t count_edges(const std::vector<std::vector<uint32_t>>& adj) {
  uint64_t deg_sum = 0;
  for (const auto& row : adj) deg_sum += row.size();
  return deg_sum / 2;
}

}  // namespace

bool IntersectionGraph::has_edge(uint32_t u, uint32_t v) const {
  const auto& row = adj[u];
  return std::binary_search(row.begin(), row.end(), v);
}

IntersectionGraph build_bipartite_graph(uint32_t k, uint32_t m, uint32_t p,
                                        uint64_t cap, Exec exec) {
  const Ambient amb{p, k};
  validate_ambient(amb);
  if (m < 1 || m >= k) throw domain_error("bipartite graph requires 1 <= m < k");
  if (2 * m == k) {
    throw domain_error("m = k/2 has a single slice; use the half-dimension graph");
  }
  IntersectionGraph g;
  g.kind = GraphKind::bipartite;
  g.amb = amb;
  g.left_dim = m;
  g.right_dim = k - m;
  LatticeSlice left = enumerate_subspaces(amb, m, cap, exec);
  LatticeSlice right = enumerate_subspaces(amb, k - m, cap, exec);
  g.n_left = static_cast<uint32_t>(left.subspaces.size());
  g.vertices = std::move(left.subspaces);
  g.vertices.insert(g.vertices.end(), std::make_move_iterator(right.subspaces.begin()),
                    std::make_move_iterator(right.subspaces.end()));
  g.adj = bipartite_adjacency(g.vertices, g.n_left, exec);
  g.edge_count = count_edges(g.adj);
  return g;
}

IntersectionGraph build_halfdim_graph(uint32_t k, uint64_t cap, Exec exec) {
  if (k % 2 != 0) throw domain_error("half-dimension graph requires even k");
  const Ambient amb{2, k};
  validate_ambient(amb);
  IntersectionGraph g;
  g.kind = GraphKind::general;
  g.amb = amb;
  g.left_dim = g.right_dim = k / 2;
  LatticeSlice slice = enumerate_subspaces(amb, k / 2, cap, exec);
  g.vertices = std::move(slice.subspaces);
  g.n_left = static_cast<uint32_t>(g.vertices.size());
  g.adj = general_adjacency(g.vertices, exec);
  g.edge_count = count_edges(g.adj);
  return g;
}

std::map<uint64_t, uint64_t> degree_profile(const IntersectionGraph& g) {
  std::map<uint64_t, uint64_t> profile;
  for (const auto& row : g.adj) ++profile[row.size()];
  return profile;
}

std::vector<std::vector<uint32_t>> connected_components(const IntersectionGraph& g) {
  const uint32_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<uint32_t>> components;
  for (uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<uint32_t> comp;
    std::deque<uint32_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const uint32_t u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (uint32_t v : g.adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

namespace {

// Dinic max-flow on a unit-capacity undirected graph.
class UnitFlow {
 public:
  explicit UnitFlow(const IntersectionGraph& g) : n_(g.vertex_count()), head_(n_, -1) {
    for (uint32_t u = 0; u < n_; ++u) {
      for (uint32_t v : g.adj[u]) {
        if (u < v) add_undirected(u, v);
      }
    }
  }

  uint64_t max_flow(uint32_t s, uint32_t t) {
    for (auto& e : edges_) e.cap = 1;
    uint64_t flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (uint64_t pushed = dfs(s, t)) flow += pushed;
    }
    return flow;
  }

 private:
  struct Edge {
    uint32_t to;
    int32_t next;
    uint32_t cap;
  };

  void add_undirected(uint32_t u, uint32_t v) {
    edges_.push_back({v, head_[u], 1});
    head_[u] = static_cast<int32_t>(edges_.size()) - 1;
    edges_.push_back({u, head_[v], 1});
    head_[v] = static_cast<int32_t>(edges_.size()) - 1;
  }

  bool bfs(uint32_t s, uint32_t t) {
    level_.assign(n_, -1);
    std::queue<uint32_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const uint32_t u = q.front();
      q.pop();
      for (int32_t e = head_[u]; e != -1; e = edges_[e].next) {
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          q.push(edges_[e].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  uint64_t dfs(uint32_t u, uint32_t t) {
    if (u == t) return 1;
    for (int32_t& e = iter_[u]; e != -1; e = edges_[e].next) {
      Edge& ed = edges_[e];
      if (ed.cap > 0 && level_[ed.to] == level_[u] + 1) {
        if (dfs(ed.to, t)) {
          --ed.cap;
          ++edges_[e ^ 1].cap;
          return 1;
        }
      }
    }
    return 0;
  }

  uint32_t n_;
  std::vector<int32_t> head_;
  std::vector<Edge> edges_;
  std::vector<int32_t> level_;
  std::vector<int32_t> iter_;
};

}  // namespace

uint64_t edge_connectivity(const IntersectionGraph& g) {
  const uint32_t n = g.vertex_count();
  if (n > 200) throw cap_error("edge connectivity limited to graphs with <= 200 vertices");
  if (n < 2) return 0;
  if (connected_components(g).size() > 1) return 0;
  UnitFlow flow(g);
  uint64_t best = UINT64_MAX;
  for (uint32_t t = 1; t < n; ++t) best = std::min(best, flow.max_flow(0, t));
  return best;
}

std::optional<std::array<uint32_t, 3>> find_triangle(const IntersectionGraph& g) {
  const uint32_t n = g.vertex_count();
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v : g.adj[u]) {
      if (v <= u) continue;
      // first common neighbor above v, adjacency lists are sorted
      const auto& a = g.adj[u];
      const auto& b = g.adj[v];
      size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
          if (a[i] > v) return std::array<uint32_t, 3>{u, v, a[i]};
          ++i;
          ++j;
        } else if (a[i] < b[j]) {
          ++i;
        } else {
          ++j;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace qubatch
