#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "qubatch/gaussian.hpp"
#include "qubatch/subspace.hpp"

using namespace qubatch;
using namespace qubatch::testing;

TEST_CASE("rref canonicalizes spans") {
  const Subspace s = rref(kZ2_3, {vec(kZ2_3, "110"), vec(kZ2_3, "011")});
  CHECK(s.dim() == 2);
  CHECK(to_string(s) == "101;011");

  CHECK(rref(kZ2_3, {}).is_trivial());
  CHECK(rref(kZ2_3, {}).dim() == 0);

  const Subspace dup = rref(kZ2_3, {vec(kZ2_3, "100"), vec(kZ2_3, "100")});
  CHECK(dup.dim() == 1);
  CHECK(to_string(dup) == "100");
}

TEST_CASE("rref rejects mixed ambients") {
  CHECK_THROWS_AS(rref(kZ2_3, {vec(kZ3_2, "10")}), domain_error);
  CHECK_THROWS_AS(rref(std::vector<FpVector>{}), domain_error);
}

TEST_CASE("membership") {
  const Subspace line = sub(kZ2_3, "101");
  CHECK(contains(line, vec(kZ2_3, "101")));
  CHECK(contains(line, vec(kZ2_3, "000")));
  CHECK_FALSE(contains(line, vec(kZ2_3, "100")));

  // (1,1,0) lies in the first order-4 subgroup <(100),(010)>
  CHECK(contains(sub(kZ2_3, "100;010"), vec(kZ2_3, "110")));

  CHECK_THROWS_AS(contains(line, vec(kZ3_2, "10")), domain_error);
}

TEST_CASE("intersection") {
  CHECK(intersect(sub(kZ2_3, "100"), sub(kZ2_3, "010")).is_trivial());

  const Subspace s = sub(kZ2_3, "100;011");
  CHECK(intersect(s, s) == s);

  // the two order-4 subgroups <(100),(010)> and <(100),(001)> meet in <(100)>
  const Subspace meet = intersect(sub(kZ2_3, "100;010"), sub(kZ2_3, "100;001"));
  CHECK(meet == sub(kZ2_3, "100"));

  CHECK_THROWS_AS(intersect(sub(kZ2_3, "100"), sub(kZ3_2, "10")), domain_error);
}

TEST_CASE("sum") {
  const Ambient amb{2, 2};
  CHECK(sum(sub(amb, "10"), sub(amb, "01")) == Subspace::full(amb));

  const Subspace s = sub(kZ2_3, "110");
  CHECK(sum(s, Subspace::trivial(kZ2_3)) == s);

  // <(100)> + <(011)> is the third order-4 subgroup of the published list
  CHECK(sum(sub(kZ2_3, "100"), sub(kZ2_3, "011")) == sub(kZ2_3, "100;011"));
}

TEST_CASE("gaussian binomial values") {
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(4, 1, 2) == 15);
  CHECK(gaussian_binomial(4, 3, 2) == 15);
  CHECK(gaussian_binomial(3, 1, 3) == 13);
  CHECK(gaussian_binomial(3, 2, 2) == 7);
  CHECK(gaussian_binomial(2, 1, 3) == 4);
  CHECK(gaussian_binomial(5, 0, 7) == 1);
  CHECK(gaussian_binomial(10, 5, 2) == 109221651);
  // exceeds 64 bits
  CHECK(gaussian_binomial(12, 6, 5).str() == "19138263752352528498478556");

  CHECK_THROWS_AS(gaussian_binomial(3, 4, 2), domain_error);
  CHECK_THROWS_AS(gaussian_binomial(3, 1, 4), domain_error);
}

TEST_CASE("gaussian binomial symmetry") {
  for (uint32_t p : {2u, 3u, 5u}) {
    for (uint32_t k = 0; k <= 12; ++k) {
      for (uint32_t m = 0; m <= k; ++m) {
        CHECK(gaussian_binomial(k, m, p) == gaussian_binomial(k, k - m, p));
      }
    }
  }
}

TEST_CASE("canonical form is independent of generator order") {
  std::mt19937 rng(7);
  for (uint32_t p : {2u, 3u}) {
    const Ambient amb{p, 4};
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<FpVector> rows;
      const int nrows = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < nrows; ++i) {
        std::vector<uint32_t> coords(4);
        for (auto& c : coords) c = rng() % p;
        rows.emplace_back(amb, coords);
      }
      const Subspace reference = rref(amb, rows);
      std::shuffle(rows.begin(), rows.end(), rng);
      CHECK(rref(amb, rows) == reference);
      // idempotence: re-canonicalizing the canonical basis changes nothing
      std::vector<FpVector> basis;
      for (uint32_t i = 0; i < reference.dim(); ++i) basis.push_back(reference.row(i));
      CHECK(rref(amb, basis) == reference);
    }
  }
}

TEST_CASE("dimension formula over exhaustive lattices") {
  for (const Ambient amb : {Ambient{2, 4}, Ambient{3, 3}}) {
    std::vector<Subspace> all{Subspace::trivial(amb), Subspace::full(amb)};
    for (const auto& slice : enumerate_lattice(amb)) {
      all.insert(all.end(), slice.subspaces.begin(), slice.subspaces.end());
    }
    for (const Subspace& a : all) {
      for (const Subspace& b : all) {
        const Subspace meet = intersect(a, b);
        const Subspace join = sum(a, b);
        CHECK(join.dim() + meet.dim() == a.dim() + b.dim());
        CHECK(trivially_intersects(a, b) == meet.is_trivial());
      }
    }
  }
}

TEST_CASE("contains agrees with exhaustive element enumeration") {
  std::mt19937 rng(11);
  auto check_subspace = [&](Ambient amb, uint32_t m) {
    std::vector<FpVector> gens;
    for (uint32_t i = 0; i < m; ++i) {
      std::vector<uint32_t> coords(amb.k);
      for (auto& c : coords) c = rng() % amb.p;
      gens.emplace_back(amb, coords);
    }
    const Subspace s = rref(amb, gens);
    // walk every coefficient combination of the canonical basis
    std::vector<uint64_t> members;
    const uint64_t combos = pow_u64(amb.p, s.dim());
    for (uint64_t c = 0; c < combos; ++c) {
      FpVector v = FpVector::zero(amb);
      uint64_t rest = c;
      for (uint32_t i = 0; i < s.dim(); ++i) {
        v = v + s.row(i).scaled(static_cast<uint32_t>(rest % amb.p));
        rest /= amb.p;
      }
      members.push_back(vector_to_index(v));
    }
    std::sort(members.begin(), members.end());
    CHECK(members.size() == combos);  // distinct combinations, basis is independent
    for (uint64_t e = 0; e < pow_u64(amb.p, amb.k); ++e) {
      const FpVector v = vector_from_index(amb, e);
      const bool member = std::binary_search(members.begin(), members.end(), e);
      CHECK(contains(s, v) == member);
    }
  };
  check_subspace(Ambient{2, 10}, 8);
  check_subspace(Ambient{3, 4}, 3);
  check_subspace(Ambient{5, 3}, 2);
}

TEST_CASE("textual form round trip") {
  const Subspace s = sub(kZ2_3, "100;011");
  CHECK(subspace_from_string(kZ2_3, to_string(s)) == s);
  CHECK(to_string(Subspace::trivial(kZ2_3)) == "");
  CHECK(subspace_from_string(kZ2_3, "") == Subspace::trivial(kZ2_3));

  const FpVector v = vec(kZ3_2, "21");
  CHECK(to_string(v) == "21");
  CHECK(vector_from_index(kZ3_2, vector_to_index(v)) == v);
  CHECK_THROWS_AS(vector_from_string(kZ3_2, "31"), domain_error);
  CHECK_THROWS_AS(vector_from_string(kZ3_2, "2"), domain_error);
}

TEST_CASE("primality validation") {
  CHECK_THROWS_AS(validate_ambient(Ambient{6, 2}), domain_error);
  CHECK_THROWS_AS(validate_ambient(Ambient{1, 2}), domain_error);
  CHECK_THROWS_AS(validate_ambient(Ambient{2, 0}), domain_error);
  CHECK_NOTHROW(validate_ambient(Ambient{65521, 2}));   // largest prime <= 2^16
  CHECK_THROWS_AS(validate_ambient(Ambient{65536, 2}), domain_error);
}

TEST_CASE("canonical order is a strict total order per slice") {
  const auto slice = enumerate_subspaces(kZ2_3, 1);
  for (size_t i = 0; i + 1 < slice.subspaces.size(); ++i) {
    CHECK(slice.subspaces[i] < slice.subspaces[i + 1]);
  }
  CHECK(to_string(slice.subspaces.front()) == "001");
  CHECK(to_string(slice.subspaces.back()) == "111");
}
