#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qubatch/fp.hpp"

namespace qubatch {

/// A subspace of (Z_p)^k held in canonical form: the basis is in reduced
/// row-echelon form with strictly increasing pivot columns, so two Subspace
/// values are equal as sets iff they compare equal. dim 0 is the trivial
/// subgroup {0} and is a first-class value.
class Subspace {
 public:
  static Subspace trivial(Ambient amb);
  static Subspace full(Ambient amb);

  /// Wraps rows already known to be canonical RREF (used by enumerators).
  /// Validated with assertions only.
  static Subspace from_rref_unchecked(Ambient amb, std::vector<uint32_t> rows,
                                      std::vector<uint32_t> pivots);

  const Ambient& ambient() const { return amb_; }
  uint32_t dim() const { return static_cast<uint32_t>(pivots_.size()); }
  uint32_t codim() const { return amb_.k - dim(); }
  bool is_trivial() const { return pivots_.empty(); }
  bool is_full() const { return dim() == amb_.k; }

  const std::vector<uint32_t>& pivots() const { return pivots_; }
  /// Columns without a pivot, increasing. These index the coset coordinates.
  std::vector<uint32_t> free_columns() const;

  std::span<const uint32_t> row_data(uint32_t i) const;
  FpVector row(uint32_t i) const;
  const std::vector<uint32_t>& flat_rows() const { return rows_; }

  friend bool operator==(const Subspace&, const Subspace&) = default;
  /// Canonical total order: lexicographic on the flattened basis, ties by dim.
  std::strong_ordering operator<=>(const Subspace& o) const;

 private:
  Subspace(Ambient amb, std::vector<uint32_t> rows, std::vector<uint32_t> pivots)
      : amb_(amb), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

  Ambient amb_;
  std::vector<uint32_t> rows_;    // dim x k, flat row-major
  std::vector<uint32_t> pivots_;  // strictly increasing pivot columns
};

/// Span of the given rows in canonical form; dim = rank. The ambient must be
/// supplied explicitly so the empty set of rows spans the trivial subspace.
Subspace rref(Ambient amb, const std::vector<FpVector>& rows);
/// Ambient deduced from the first row; rows must be nonempty and consistent.
Subspace rref(const std::vector<FpVector>& rows);

bool contains(const Subspace& s, const FpVector& v);

/// Canonical coset representative: v with the pivot coordinates of s
/// eliminated. reduce(s, v) == reduce(s, w) iff v - w is in s, and the result
/// is zero at every pivot column. Linear in v.
FpVector reduce(const Subspace& s, const FpVector& v);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// True iff a and b meet only in {0}. Equivalent to
/// intersect(a, b).is_trivial(), computed by a stacked rank check with a
/// packed bit-row fast path for p = 2.
bool trivially_intersects(const Subspace& a, const Subspace& b);

/// Rows as base-p digit strings joined by ';', e.g. "100;011".
/// The trivial subspace is the empty string.
std::string to_string(const Subspace& s);
Subspace subspace_from_string(Ambient amb, std::string_view text);

/// One solution x to sum_j x_j * cols[j] = target over F_p, or nullopt when
/// the system is inconsistent. Free unknowns are fixed to zero.
std::optional<std::vector<uint32_t>> solve_combination(
    Ambient amb, const std::vector<FpVector>& cols, const FpVector& target);

}  // namespace qubatch
