#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "helpers.hpp"
#include "qubatch/graph.hpp"
#include "qubatch/matching.hpp"
#include "qubatch/oracle.hpp"

using namespace qubatch;
using namespace qubatch::testing;

namespace {

// Hand-built graph for matcher and component edge cases; vertices are dummy
// subspaces so the struct is well-formed.
IntersectionGraph synthetic(uint32_t n, const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
  IntersectionGraph g;
  g.kind = GraphKind::general;
  g.amb = Ambient{2, 6};
  const auto slice = enumerate_subspaces(g.amb, 1);
  REQUIRE(slice.subspaces.size() >= n);
  g.vertices.assign(slice.subspaces.begin(), slice.subspaces.begin() + n);
  g.n_left = n;
  g.adj.resize(n);
  for (auto [u, v] : edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  g.edge_count = edges.size();
  return g;
}

}  // namespace

TEST_CASE("bipartite graph shapes") {
  const IntersectionGraph g31 = build_bipartite_graph(3, 1);
  CHECK(g31.n_left == 7);
  CHECK(g31.vertex_count() == 14);
  CHECK(degree_profile(g31) == std::map<uint64_t, uint64_t>{{4, 14}});

  const IntersectionGraph g41 = build_bipartite_graph(4, 1);
  CHECK(g41.vertex_count() == 30);
  CHECK(degree_profile(g41) == std::map<uint64_t, uint64_t>{{8, 30}});

  CHECK_THROWS_AS(build_bipartite_graph(2, 1), domain_error);
  CHECK_THROWS_AS(build_bipartite_graph(4, 2), domain_error);
  CHECK_THROWS_AS(build_bipartite_graph(3, 0), domain_error);

  // degree law holds for p = 3 as well
  const IntersectionGraph g3 = build_bipartite_graph(3, 1, 3);
  CHECK(g3.n_left == 13);
  CHECK(degree_profile(g3) == std::map<uint64_t, uint64_t>{{9, 26}});
}

TEST_CASE("half-dimension graph shapes") {
  const IntersectionGraph g4 = build_halfdim_graph(4);
  CHECK(g4.vertex_count() == 35);
  CHECK(degree_profile(g4) == std::map<uint64_t, uint64_t>{{16, 35}});

  const IntersectionGraph g2 = build_halfdim_graph(2);
  CHECK(g2.vertex_count() == 3);
  CHECK(degree_profile(g2) == std::map<uint64_t, uint64_t>{{2, 3}});

  CHECK_THROWS_AS(build_halfdim_graph(3), domain_error);
}

TEST_CASE("half-dimension graph k=6 is 512-regular") {
  const IntersectionGraph g6 = build_halfdim_graph(6);
  CHECK(g6.vertex_count() == 1395);
  CHECK(degree_profile(g6) == std::map<uint64_t, uint64_t>{{512, 1395}});
}

TEST_CASE("every stored edge satisfies the trivial-intersection predicate") {
  for (const IntersectionGraph& g : {build_bipartite_graph(3, 1), build_halfdim_graph(4)}) {
    for (uint32_t u = 0; u < g.vertex_count(); ++u) {
      for (uint32_t v : g.adj[u]) {
        CHECK(intersect(g.vertices[u], g.vertices[v]).is_trivial());
      }
    }
    // and no edge is missing
    uint64_t pairs = 0;
    for (uint32_t u = 0; u < g.vertex_count(); ++u) {
      const uint32_t begin = g.kind == GraphKind::bipartite ? g.n_left : u + 1;
      for (uint32_t v = begin; v < g.vertex_count(); ++v) {
        if (g.kind == GraphKind::bipartite && u >= g.n_left) continue;
        const bool expected = intersect(g.vertices[u], g.vertices[v]).is_trivial();
        CHECK(g.has_edge(u, v) == expected);
        pairs += expected;
      }
    }
    CHECK(pairs == g.edge_count);
  }
}

TEST_CASE("bipartite matchings are perfect at the published sizes") {
  const IntersectionGraph g31 = build_bipartite_graph(3, 1);
  const Matching m31 = max_bipartite_matching(g31);
  CHECK(m31.size() == 7);
  CHECK(matching_is_valid(g31, m31));

  const IntersectionGraph g41 = build_bipartite_graph(4, 1);
  const Matching m41 = max_bipartite_matching(g41);
  CHECK(m41.size() == 15);
  CHECK(matching_is_valid(g41, m41));

  const IntersectionGraph g51 = build_bipartite_graph(5, 1);
  const Matching m51 = max_bipartite_matching(g51);
  CHECK(m51.size() == 31);
  CHECK(matching_is_valid(g51, m51));

  const IntersectionGraph g52 = build_bipartite_graph(5, 2);
  const Matching m52 = max_bipartite_matching(g52);
  CHECK(m52.size() == 155);
  CHECK(matching_is_valid(g52, m52));

  CHECK_THROWS_AS(max_bipartite_matching(build_halfdim_graph(2)), domain_error);
}

TEST_CASE("general matchings") {
  const IntersectionGraph g4 = build_halfdim_graph(4);
  const Matching m4 = max_general_matching(g4);
  CHECK(m4.size() == 17);
  CHECK(matching_is_valid(g4, m4));

  const IntersectionGraph g2 = build_halfdim_graph(2);
  const Matching m2 = max_general_matching(g2);
  CHECK(m2.size() == 1);
  CHECK(matching_is_valid(g2, m2));

  const IntersectionGraph empty = synthetic(3, {});
  CHECK(max_general_matching(empty).size() == 0);

  CHECK_THROWS_AS(max_general_matching(build_bipartite_graph(3, 1)), domain_error);
}

TEST_CASE("blossom agrees with the exhaustive oracle on small graphs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const uint32_t n = 4 + rng() % 9;  // up to 12
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < n; ++u) {
      for (uint32_t v = u + 1; v < n; ++v) {
        if (rng() % 100 < 35) edges.emplace_back(u, v);
      }
    }
    const IntersectionGraph g = synthetic(n, edges);
    CHECK(max_general_matching(g).size() == oracle::brute_max_matching(g.adj));
  }
  // odd cycle forces a blossom contraction
  const IntersectionGraph c5 = synthetic(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(max_general_matching(c5).size() == 2);
}

TEST_CASE("half-dimension graph k=6: connected, matched to the floor bound") {
  const IntersectionGraph g6 = build_halfdim_graph(6);
  CHECK(connected_components(g6).size() == 1);
  const Matching m = max_general_matching(g6);
  CHECK(m.size() == 697);  // floor(1395 / 2)
  CHECK(matching_is_valid(g6, m));
}

TEST_CASE("degree profile edge cases") {
  const IntersectionGraph lonely = synthetic(1, {});
  CHECK(degree_profile(lonely) == std::map<uint64_t, uint64_t>{{0, 1}});
}

TEST_CASE("connected components") {
  const auto comps4 = connected_components(build_halfdim_graph(4));
  REQUIRE(comps4.size() == 1);
  CHECK(comps4[0].size() == 35);

  CHECK(connected_components(build_bipartite_graph(4, 1)).size() == 1);

  const IntersectionGraph isolated = synthetic(3, {});
  CHECK(connected_components(isolated).size() == 3);
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(build_halfdim_graph(4)) == 16);
  CHECK(edge_connectivity(build_bipartite_graph(3, 1)) == 4);

  const IntersectionGraph path2 = synthetic(2, {{0, 1}});
  CHECK(edge_connectivity(path2) == 1);

  const IntersectionGraph split = synthetic(4, {{0, 1}, {2, 3}});
  CHECK(edge_connectivity(split) == 0);
}

TEST_CASE("triangles") {
  const IntersectionGraph g4 = build_halfdim_graph(4);
  const auto tri = find_triangle(g4);
  REQUIRE(tri.has_value());
  CHECK(g4.has_edge((*tri)[0], (*tri)[1]));
  CHECK(g4.has_edge((*tri)[1], (*tri)[2]));
  CHECK(g4.has_edge((*tri)[0], (*tri)[2]));

  const auto tri2 = find_triangle(build_halfdim_graph(2));
  REQUIRE(tri2.has_value());
  CHECK(*tri2 == std::array<uint32_t, 3>{0, 1, 2});

  CHECK_FALSE(find_triangle(build_bipartite_graph(3, 1)).has_value());
}

TEST_CASE("the constructive triangle witness is discoverable") {
  // H = <e1, e2>, K = <e3, e4>, L = {h + phi(h)} with phi(e1)=e3, phi(e2)=e4
  const IntersectionGraph g4 = build_halfdim_graph(4);
  const Subspace h = sub(kZ2_4, "1000;0100");
  const Subspace k = sub(kZ2_4, "0010;0001");
  const Subspace l = sub(kZ2_4, "1010;0101");
  auto index_of = [&](const Subspace& s) {
    for (uint32_t i = 0; i < g4.vertex_count(); ++i) {
      if (g4.vertices[i] == s) return i;
    }
    FAIL("vertex not found");
    return UINT32_MAX;
  };
  const uint32_t hi = index_of(h), ki = index_of(k), li = index_of(l);
  CHECK(g4.has_edge(hi, ki));
  CHECK(g4.has_edge(ki, li));
  CHECK(g4.has_edge(hi, li));
}

TEST_CASE("matching validator rejects bad matchings") {
  const IntersectionGraph g = build_bipartite_graph(3, 1);
  Matching overlapping{{{0, 7}, {0, 8}}};
  CHECK_FALSE(matching_is_valid(g, overlapping));
  Matching non_edge;
  // left vertex 0 paired with a right vertex it contains
  const Subspace& left0 = g.vertices[0];
  for (uint32_t v = g.n_left; v < g.vertex_count(); ++v) {
    if (!intersect(left0, g.vertices[v]).is_trivial()) {
      non_edge.pairs = {{0, v}};
      break;
    }
  }
  REQUIRE(non_edge.pairs.size() == 1);
  CHECK_FALSE(matching_is_valid(g, non_edge));
}
