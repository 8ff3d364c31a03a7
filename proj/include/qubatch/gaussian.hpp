#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace qubatch {

using BigInt = boost::multiprecision::cpp_int;

/// Number of m-dimensional subspaces of a k-dimensional space over F_p:
/// prod_{i=1..m} (p^{k-i+1} - 1) / (p^i - 1), evaluated exactly
/// (full numerator product before the division, arbitrary precision).
BigInt gaussian_binomial(uint32_t k, uint32_t m, uint32_t p);

}  // namespace qubatch
