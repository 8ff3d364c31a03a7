#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qubatch/batch.hpp"
#include "qubatch/code.hpp"
#include "qubatch/exec.hpp"

// Independent brute-force verifiers. These deliberately avoid the main
// enumeration/matching/decoding paths; shared machinery is limited to
// FpVector arithmetic and the code's own encode (the object under test).
namespace qubatch::oracle {

inline constexpr uint64_t kDefaultSeed = 0x5EED;

struct UniformityReport {
  std::vector<uint32_t> subset;  // positions, 0-based, increasing
  uint64_t support_size = 0;
  uint64_t expected_support = 0;  // |G| / |G_A|
  std::map<std::vector<uint64_t>, uint64_t> multiplicities;
  bool uniform = false;
  bool pass = false;  // uniform && support_size == expected_support
};

struct UniformityResult {
  uint64_t seed = kDefaultSeed;
  bool sampled = false;
  std::vector<UniformityReport> reports;
  bool all_pass() const;
};

/// Projects all codewords onto every subset A with |A| <= max_subset_size
/// (the empty subset included) and checks uniformity over the support plus
/// the support-size law |G|/|G_A|. Exhaustive for n <= 20; larger codes
/// require allow_sampling, which draws sample_count subsets per size from the
/// recorded seed.
UniformityResult check_quasi_uniform(const QuasiUniformCode& code,
                                     uint32_t max_subset_size,
                                     bool allow_sampling = false,
                                     uint64_t seed = kDefaultSeed,
                                     uint32_t sample_count = 256,
                                     Exec exec = Exec::parallel);

/// Exact maximum matching size by bitmask dynamic programming; <= 12 vertices.
uint64_t brute_max_matching(const std::vector<std::vector<uint32_t>>& adj);

/// True iff every multiset request of size t is correctly served for every
/// information vector. Requests beyond plan capacity make this false.
bool brute_serveability(const BatchCode& bc, uint32_t t);

/// Complement count by exhaustive span enumeration over element sets
/// (independent of RREF canonicalization); must equal p^{m(k-m)}.
uint64_t brute_complement_count(const Subspace& s);

/// All-pairs symbol-Hamming minimum over the full code table.
uint32_t brute_min_distance(const QuasiUniformCode& code);

}  // namespace qubatch::oracle
