#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qubatch/errors.hpp"

namespace qubatch {

/// Ambient space parameters: vectors live in (Z_p)^k.
struct Ambient {
  uint32_t p = 2;
  uint32_t k = 1;
  friend auto operator<=>(const Ambient&, const Ambient&) = default;
};

bool is_prime(uint32_t n);

/// Throws domain_error unless p is prime (p <= 2^16) and k >= 1.
void validate_ambient(const Ambient& amb);

/// A vector over F_p with k coordinates, each in [0, p).
class FpVector {
 public:
  FpVector(Ambient amb, std::vector<uint32_t> coords);
  static FpVector zero(Ambient amb);

  const Ambient& ambient() const { return amb_; }
  uint32_t dim() const { return amb_.k; }
  uint32_t operator[](uint32_t i) const { return coords_[i]; }
  const std::vector<uint32_t>& coords() const { return coords_; }
  bool is_zero() const;

  FpVector operator+(const FpVector& o) const;
  FpVector operator-(const FpVector& o) const;
  FpVector scaled(uint32_t c) const;

  friend bool operator==(const FpVector&, const FpVector&) = default;
  std::strong_ordering operator<=>(const FpVector& o) const;

 private:
  Ambient amb_;
  std::vector<uint32_t> coords_;
};

/// Base-p digit string, one digit per coordinate, e.g. (0,1,1) -> "011".
/// Digits 0-9 then a-z; requires p <= 36.
std::string to_string(const FpVector& v);
FpVector vector_from_string(Ambient amb, std::string_view digits);

/// Index of v in canonical vector order: coordinate 0 is the most significant
/// base-p digit. Inverse of vector_from_index.
uint64_t vector_to_index(const FpVector& v);
FpVector vector_from_index(Ambient amb, uint64_t index);

/// p^e with overflow check against uint64_t.
uint64_t pow_u64(uint64_t p, uint32_t e);

uint32_t mod_inverse(uint32_t a, uint32_t p);

}  // namespace qubatch
