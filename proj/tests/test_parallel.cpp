// The OpenMP kernels must match the serial reference implementations
// byte for byte.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "qubatch/batch.hpp"
#include "qubatch/graph.hpp"
#include "qubatch/oracle.hpp"

using namespace qubatch;
using namespace qubatch::testing;

TEST_CASE("slice enumeration: serial == parallel") {
  for (const Ambient amb : {Ambient{2, 6}, Ambient{3, 4}}) {
    for (uint32_t m = 1; m < amb.k; ++m) {
      const LatticeSlice serial = enumerate_subspaces(amb, m, kDefaultCap, Exec::serial);
      const LatticeSlice parallel = enumerate_subspaces(amb, m, kDefaultCap, Exec::parallel);
      CHECK(serial == parallel);
    }
  }
}

TEST_CASE("graph adjacency: serial == parallel") {
  {
    const IntersectionGraph s = build_halfdim_graph(4, kDefaultCap, Exec::serial);
    const IntersectionGraph p = build_halfdim_graph(4, kDefaultCap, Exec::parallel);
    CHECK(s.adj == p.adj);
    CHECK(s.vertices == p.vertices);
    CHECK(s.edge_count == p.edge_count);
  }
  {
    const IntersectionGraph s = build_halfdim_graph(6, kDefaultCap, Exec::serial);
    const IntersectionGraph p = build_halfdim_graph(6, kDefaultCap, Exec::parallel);
    CHECK(s.adj == p.adj);
  }
  {
    const IntersectionGraph s = build_bipartite_graph(5, 2, 2, kDefaultCap, Exec::serial);
    const IntersectionGraph p = build_bipartite_graph(5, 2, 2, kDefaultCap, Exec::parallel);
    CHECK(s.adj == p.adj);
  }
}

TEST_CASE("uniformity sweep: serial == parallel") {
  const QuasiUniformCode code =
      build_code(SubgroupSystem(kZ2_3, full_lattice_positions(kZ2_3)));
  const auto s = oracle::check_quasi_uniform(code, 3, false, oracle::kDefaultSeed, 256,
                                             Exec::serial);
  const auto p = oracle::check_quasi_uniform(code, 3, false, oracle::kDefaultSeed, 256,
                                             Exec::parallel);
  REQUIRE(s.reports.size() == p.reports.size());
  for (size_t i = 0; i < s.reports.size(); ++i) {
    CHECK(s.reports[i].subset == p.reports[i].subset);
    CHECK(s.reports[i].multiplicities == p.reports[i].multiplicities);
    CHECK(s.reports[i].support_size == p.reports[i].support_size);
    CHECK(s.reports[i].expected_support == p.reports[i].expected_support);
    CHECK(s.reports[i].uniform == p.reports[i].uniform);
    CHECK(s.reports[i].pass == p.reports[i].pass);
  }
}

TEST_CASE("full batch build: serial == parallel") {
  const BatchCode s = build_full_lattice_batch_code(4, 2, kDefaultCap, Exec::serial);
  const BatchCode p = build_full_lattice_batch_code(4, 2, kDefaultCap, Exec::parallel);
  CHECK(s.params() == p.params());
  CHECK(s.plan() == p.plan());
  CHECK(s.code().system().positions() == p.code().system().positions());
}
