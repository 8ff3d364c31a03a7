#pragma once

#include <cstdint>
#include <vector>

#include "qubatch/exec.hpp"
#include "qubatch/gaussian.hpp"
#include "qubatch/subspace.hpp"

namespace qubatch {

inline constexpr uint64_t kDefaultCap = 1'000'000;

/// All subspaces of one dimension, in canonical order without duplicates.
struct LatticeSlice {
  Ambient amb;
  uint32_t dim = 0;
  std::vector<Subspace> subspaces;

  friend bool operator==(const LatticeSlice&, const LatticeSlice&) = default;
};

/// All m-dimensional subspaces of (Z_p)^k, canonical order. The enumeration
/// iterates canonical RREF matrices directly (pivot-column sets, then free
/// entries), so the size equals gaussian_binomial(k, m, p) by construction.
LatticeSlice enumerate_subspaces(Ambient amb, uint32_t m,
                                 uint64_t cap = kDefaultCap,
                                 Exec exec = Exec::parallel);

/// Slices for m = 1..k-1. Rejects inputs whose total count exceeds cap.
std::vector<LatticeSlice> enumerate_lattice(Ambient amb,
                                            uint64_t cap = kDefaultCap,
                                            Exec exec = Exec::parallel);

/// All (k-m)-dimensional subspaces U with S ∩ U = {0}; there are exactly
/// p^{m(k-m)} of them, built by the block-matrix parameterization and
/// returned sorted in canonical order. dim S must be strictly between 0 and k.
std::vector<Subspace> complements_of(const Subspace& s);

/// All m-dimensional subspaces containing K, built through the quotient-space
/// bijection; the count is gaussian_binomial(k - dim K, m - dim K, p).
std::vector<Subspace> superspaces_containing(const Subspace& kernel, uint32_t m,
                                             uint64_t cap = kDefaultCap);

}  // namespace qubatch
