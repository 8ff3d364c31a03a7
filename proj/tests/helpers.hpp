#pragma once

// Shared fixtures for the test binaries: the worked subgroup families and
// code tables used across suites.

#include <string>
#include <vector>

#include "qubatch/batch.hpp"
#include "qubatch/code.hpp"
#include "qubatch/lattice.hpp"

namespace qubatch::testing {

inline const Ambient kZ2_3{2, 3};
inline const Ambient kZ3_2{3, 2};
inline const Ambient kZ2_4{2, 4};

inline Subspace sub(Ambient amb, const std::string& rows) {
  return subspace_from_string(amb, rows);
}

inline FpVector vec(Ambient amb, const std::string& digits) {
  return vector_from_string(amb, digits);
}

/// The seven order-2 subgroups of (Z_2)^3 in the order G_1..G_7 of the worked
/// length-7 code: <100>,<010>,<001>,<101>,<110>,<011>,<111>.
inline std::vector<Subspace> order2_subgroups_z23() {
  std::vector<Subspace> out;
  for (const char* g : {"100", "010", "001", "101", "110", "011", "111"}) {
    out.push_back(sub(kZ2_3, g));
  }
  return out;
}

/// The seven order-4 subgroups of (Z_2)^3, by the published generator pairs.
inline std::vector<Subspace> order4_subgroups_z23() {
  std::vector<Subspace> out;
  for (const char* g : {"100;010", "100;001", "100;011", "010;001", "010;101",
                        "001;110", "110;011"}) {
    out.push_back(sub(kZ2_3, g));
  }
  return out;
}

/// The four order-3 subgroups of Z_3 x Z_3: <(10)>,<(01)>,<(11)>,<(12)>.
inline std::vector<Subspace> order3_subgroups_z32() {
  std::vector<Subspace> out;
  for (const char* g : {"10", "01", "11", "12"}) out.push_back(sub(kZ3_2, g));
  return out;
}

inline QuasiUniformCode length7_code() {
  return build_code(SubgroupSystem(kZ2_3, order2_subgroups_z23()));
}

inline QuasiUniformCode ternary_code() {
  return build_code(SubgroupSystem(kZ3_2, order3_subgroups_z32()));
}

/// All positions of the full (Z_2)^3 lattice code, canonical slice order.
inline std::vector<Subspace> full_lattice_positions(Ambient amb) {
  std::vector<Subspace> out;
  for (const auto& slice : enumerate_lattice(amb)) {
    out.insert(out.end(), slice.subspaces.begin(), slice.subspaces.end());
  }
  return out;
}

/// Published coset table of the ternary code: information digits -> symbols.
inline std::vector<std::pair<std::string, std::vector<uint64_t>>> ternary_table() {
  return {
      {"00", {0, 0, 0, 0}}, {"01", {1, 0, 1, 1}}, {"02", {2, 0, 2, 2}},
      {"10", {0, 1, 2, 1}}, {"11", {1, 1, 0, 2}}, {"12", {2, 1, 1, 0}},
      {"20", {0, 2, 1, 2}}, {"21", {1, 2, 2, 0}}, {"22", {2, 2, 0, 1}},
  };
}

/// Published table of the length-7 binary code, two-bit blocks read as
/// integers (e.g. "10" -> 2).
inline std::vector<std::pair<std::string, std::vector<uint64_t>>> length7_table() {
  return {
      {"000", {0, 0, 0, 0, 0, 0, 0}}, {"100", {0, 2, 1, 2, 2, 1, 2}},
      {"010", {1, 0, 2, 1, 2, 2, 1}}, {"001", {2, 1, 0, 2, 1, 2, 3}},
      {"110", {1, 2, 3, 3, 0, 3, 3}}, {"101", {2, 3, 1, 0, 3, 3, 1}},
      {"011", {3, 1, 2, 3, 3, 0, 2}}, {"111", {3, 3, 3, 1, 1, 1, 0}},
  };
}

/// The (7,3,3,2) batch code: seven order-2 subgroups in canonical order,
/// plan pairs (0,1),(2,3),(4,5).
inline BatchCode batch733() {
  LatticeSlice slice = enumerate_subspaces(kZ2_3, 1);
  RecoveryPlan plan{{{0, 1}, {2, 3}, {4, 5}}};
  return build_batch_code(SubgroupSystem(kZ2_3, slice.subspaces), plan);
}

/// The shortened (6,3,3) variant: one unmatched position removed.
inline BatchCode batch633() {
  LatticeSlice slice = enumerate_subspaces(kZ2_3, 1);
  std::vector<Subspace> positions(slice.subspaces.begin(), slice.subspaces.begin() + 6);
  RecoveryPlan plan{{{0, 1}, {2, 3}, {4, 5}}};
  return build_batch_code(SubgroupSystem(kZ2_3, std::move(positions)), plan);
}

}  // namespace qubatch::testing
