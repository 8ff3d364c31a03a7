#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "qubatch/graph.hpp"
#include "qubatch/oracle.hpp"

using namespace qubatch;
using namespace qubatch::testing;
namespace oc = qubatch::oracle;

TEST_CASE("quasi-uniformity of the length-7 code, exhaustive |A| <= 3") {
  const QuasiUniformCode code = length7_code();
  const auto result = oc::check_quasi_uniform(code, 3);
  CHECK_FALSE(result.sampled);
  CHECK(result.all_pass());

  for (const auto& rep : result.reports) {
    CHECK(rep.uniform);
    CHECK(rep.support_size == rep.expected_support);
    if (rep.subset.empty()) {
      CHECK(rep.support_size == 1);
    } else if (rep.subset.size() == 1) {
      CHECK(rep.support_size == 4);  // [G : G_i] = 4
    } else if (rep.subset.size() == 2) {
      // all pairs of distinct order-2 subgroups intersect trivially
      CHECK(rep.support_size == 8);
    }
  }
}

TEST_CASE("support law splits on the pair intersection") {
  // full (Z_2)^3 lattice code: pairs of order-4 subgroups share a line,
  // giving support |G|/|G_A| = 8/2 = 4
  const QuasiUniformCode code =
      build_code(SubgroupSystem(kZ2_3, full_lattice_positions(kZ2_3)));
  const auto result = oc::check_quasi_uniform(code, 2);
  CHECK(result.all_pass());
  bool saw_support4 = false, saw_support8 = false;
  for (const auto& rep : result.reports) {
    if (rep.subset.size() == 2) {
      CHECK((rep.support_size == 4 || rep.support_size == 8));
      saw_support4 |= rep.support_size == 4;
      saw_support8 |= rep.support_size == 8;
      // multiplicity is |G_A| on every support point
      for (const auto& [key, cnt] : rep.multiplicities) {
        CHECK(cnt == code.code_size() / rep.support_size);
      }
    }
  }
  CHECK(saw_support4);
  CHECK(saw_support8);
}

TEST_CASE("ternary code columns repeat each label three times") {
  const auto result = oc::check_quasi_uniform(ternary_code(), 1);
  CHECK(result.all_pass());
  for (const auto& rep : result.reports) {
    if (rep.subset.size() == 1) {
      CHECK(rep.support_size == 3);
      for (const auto& [key, cnt] : rep.multiplicities) CHECK(cnt == 3);
    }
  }
}

TEST_CASE("long codes need explicit sampling") {
  const QuasiUniformCode code =
      build_code(SubgroupSystem(kZ2_4, full_lattice_positions(kZ2_4)));
  CHECK_THROWS_AS(oc::check_quasi_uniform(code, 2), cap_error);

  const auto result = oc::check_quasi_uniform(code, 2, /*allow_sampling=*/true);
  CHECK(result.sampled);
  CHECK(result.seed == oc::kDefaultSeed);
  CHECK(result.all_pass());

  // reproducible given the seed
  const auto again = oc::check_quasi_uniform(code, 2, true);
  REQUIRE(result.reports.size() == again.reports.size());
  for (size_t i = 0; i < result.reports.size(); ++i) {
    CHECK(result.reports[i].subset == again.reports[i].subset);
    CHECK(result.reports[i].support_size == again.reports[i].support_size);
  }
}

TEST_CASE("exhaustive matching oracle") {
  // triangle
  CHECK(oc::brute_max_matching({{1, 2}, {0, 2}, {0, 1}}) == 1);
  // 4-cycle
  CHECK(oc::brute_max_matching({{1, 3}, {0, 2}, {1, 3}, {0, 2}}) == 2);
  // half-dimension graph of (Z_2)^2 is the triangle
  CHECK(oc::brute_max_matching(build_halfdim_graph(2).adj) == 1);
  CHECK(oc::brute_max_matching({}) == 0);

  std::vector<std::vector<uint32_t>> big(13);
  CHECK_THROWS_AS(oc::brute_max_matching(big), cap_error);
}

TEST_CASE("serveability sweeps") {
  CHECK(oc::brute_serveability(batch733(), 3));
  CHECK(oc::brute_serveability(batch633(), 3));
  CHECK_FALSE(oc::brute_serveability(batch733(), 4));  // capacity

  CHECK_THROWS_AS(oc::brute_serveability(batch733(), 9), cap_error);
}

TEST_CASE("complement counting oracle") {
  CHECK(oc::brute_complement_count(sub(kZ2_4, "1000;0100")) == 16);
  CHECK(oc::brute_complement_count(sub(Ambient{2, 2}, "10")) == 2);
  CHECK(oc::brute_complement_count(sub(kZ3_2, "10")) == 3);
  CHECK_THROWS_AS(oc::brute_complement_count(Subspace::full(kZ2_3)), domain_error);
  CHECK_THROWS_AS(oc::brute_complement_count(Subspace::trivial(kZ2_3)), domain_error);
}

TEST_CASE("oracle and main path agree on complements") {
  for (const Subspace& s : enumerate_subspaces(kZ2_3, 1).subspaces) {
    CHECK(oc::brute_complement_count(s) == complements_of(s).size());
  }
  for (const Subspace& s : enumerate_subspaces(kZ2_3, 2).subspaces) {
    CHECK(oc::brute_complement_count(s) == complements_of(s).size());
  }
}

TEST_CASE("minimum distance oracle") {
  CHECK(oc::brute_min_distance(ternary_code()) == 3);

  const QuasiUniformCode code7 = length7_code();
  CHECK(oc::brute_min_distance(code7) == code7.minimum_distance());

  // two copies of the trivial subgroup: a repetition-style length-2 code
  const SubgroupSystem rep(kZ2_3, {Subspace::trivial(kZ2_3), Subspace::trivial(kZ2_3)},
                           /*allow_duplicates=*/true);
  CHECK(oc::brute_min_distance(build_code(rep)) == 2);

  const Ambient z22{2, 2};
  const QuasiUniformCode small =
      build_code(SubgroupSystem(z22, enumerate_subspaces(z22, 1).subspaces));
  CHECK(oc::brute_min_distance(small) == small.minimum_distance());
}

TEST_CASE("uniformity cap on the group size") {
  // (Z_2)^13 would have 8192 codewords; reject before any work
  const Ambient big{2, 13};
  const SubgroupSystem sys(big, {Subspace::trivial(big)});
  CHECK_THROWS_AS(oc::check_quasi_uniform(build_code(sys), 1), cap_error);
}
