#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qubatch/lattice.hpp"
#include "qubatch/subspace.hpp"

namespace qubatch {

/// Thrown when the total intersection of the chosen subgroups is not {0};
/// carries the offending intersection. (Quotienting instead is a modeling
/// step left to the caller.)
class nontrivial_intersection_error : public domain_error {
 public:
  nontrivial_intersection_error(std::string msg, Subspace inter)
      : domain_error(std::move(msg)), intersection(std::move(inter)) {}
  Subspace intersection;
};

/// Thrown by subset decoding when the selected subgroups do not pin down a
/// unique vector; carries the residual direction subspace.
class ambiguous_decode_error : public domain_error {
 public:
  ambiguous_decode_error(std::string msg, Subspace res)
      : domain_error(std::move(msg)), residual(std::move(res)) {}
  Subspace residual;
};

/// An ordered family of subgroups G_1..G_n of (Z_p)^k with trivial total
/// intersection. Duplicate positions are rejected unless explicitly allowed.
class SubgroupSystem {
 public:
  SubgroupSystem(Ambient amb, std::vector<Subspace> positions,
                 bool allow_duplicates = false);

  const Ambient& ambient() const { return amb_; }
  uint32_t length() const { return static_cast<uint32_t>(positions_.size()); }
  const Subspace& position(uint32_t i) const { return positions_[i]; }
  const std::vector<Subspace>& positions() const { return positions_; }

 private:
  Ambient amb_;
  std::vector<Subspace> positions_;
};

/// One coset label per position; symbol i lies in [0, alphabet_sizes[i]).
struct Codeword {
  std::vector<uint64_t> symbols;
  friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Comma-separated decimal labels, e.g. "3,1,2,3,3,0,2".
std::string to_string(const Codeword& w);
Codeword codeword_from_string(std::string_view text);

/// Quasi-uniform code built from a subgroup system. The coset labeling is
/// canonical: reduce g by the RREF basis of G_i, read the free coordinates in
/// increasing column order as base-p digits (first digit most significant),
/// pack to an integer. The subgroup's own coset gets label 0 and labels add
/// component-wise, so the code is a group under symbol-wise addition.
class QuasiUniformCode {
 public:
  const SubgroupSystem& system() const { return sys_; }
  const Ambient& ambient() const { return sys_.ambient(); }
  uint32_t length() const { return sys_.length(); }
  uint64_t code_size() const { return code_size_; }  // |G| = p^k
  const std::vector<uint64_t>& alphabet_sizes() const { return alphabets_; }

  uint64_t label_of(uint32_t pos, const FpVector& g) const;
  /// Canonical representative of the coset with the given label.
  FpVector coset_rep(uint32_t pos, uint64_t label) const;
  /// Label rendered as the k - m_i base-p digits of its coset representative,
  /// e.g. "01" for the two-bit blocks of binary examples.
  std::string symbol_digits(uint32_t pos, uint64_t label) const;

  Codeword encode(const FpVector& g) const;
  FpVector decode_full(const Codeword& w) const;
  /// Decodes using only the positions in subset; requires their subgroups to
  /// intersect trivially, otherwise throws ambiguous_decode_error.
  FpVector decode_subset(const Codeword& w, std::span<const uint32_t> subset) const;

  std::vector<std::pair<FpVector, Codeword>> code_table(
      uint64_t cap = kDefaultCap) const;
  /// Minimum symbol-Hamming distance; equals the minimum weight over nonzero
  /// information vectors for this group-code structure.
  uint32_t minimum_distance(uint64_t cap = kDefaultCap) const;

  friend QuasiUniformCode build_code(SubgroupSystem system);

 private:
  explicit QuasiUniformCode(SubgroupSystem sys);

  SubgroupSystem sys_;
  std::vector<uint64_t> alphabets_;
  uint64_t code_size_ = 0;
};

/// Validates that the total intersection is trivial and fixes the canonical
/// labeling; deterministic given the system.
QuasiUniformCode build_code(SubgroupSystem system);

}  // namespace qubatch
