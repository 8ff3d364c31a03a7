#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qubatch/code.hpp"
#include "qubatch/exec.hpp"

namespace qubatch {

/// Disjoint recovery pairs: position indices (0-based), pairwise distinct
/// across all pairs, each pair's subgroups intersecting trivially.
struct RecoveryPlan {
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  uint32_t t() const { return static_cast<uint32_t>(pairs.size()); }
  friend bool operator==(const RecoveryPlan&, const RecoveryPlan&) = default;
};

struct BatchParams {
  uint32_t n = 0;       // code length
  uint32_t k_info = 0;  // information vector length
  uint32_t t = 0;       // number of disjoint recovery pairs
  uint32_t r = 2;       // recovery set size
  uint32_t rho = 0;     // redundancy n - k_info
  friend bool operator==(const BatchParams&, const BatchParams&) = default;
};

/// Multiset of requested information-symbol indices, 1-based (i_l in [k]).
struct BatchRequest {
  std::vector<uint32_t> indices;
};

/// Comma-separated indices with repetition allowed, e.g. "1,2,2".
BatchRequest request_from_string(std::string_view text);
std::string to_string(const BatchRequest& req);

struct ServiceItem {
  uint32_t request_index = 0;                 // the 1-based symbol asked for
  std::pair<uint32_t, uint32_t> pair_used;    // recovery pair positions
  FpVector decoded;                           // full information vector
  uint32_t value = 0;                         // extracted symbol
};

struct ServiceAssignment {
  std::vector<ServiceItem> items;
};

class BatchCode {
 public:
  BatchCode(QuasiUniformCode code, RecoveryPlan plan);

  const QuasiUniformCode& code() const { return code_; }
  const RecoveryPlan& plan() const { return plan_; }
  const BatchParams& params() const { return params_; }

 private:
  QuasiUniformCode code_;
  RecoveryPlan plan_;
  BatchParams params_;
};

/// Validates the plan against the system (disjoint positions, trivially
/// intersecting pairs) and assembles the batch code.
BatchCode build_batch_code(SubgroupSystem system, RecoveryPlan plan);

/// The full construction: positions are all nontrivial subgroups of (Z_p)^k
/// in canonical slice order; the plan pairs slice m with slice k-m through a
/// bipartite perfect matching for every m < k/2, plus, for even k, the
/// maximum matching of the half-dimension graph (p = 2 only in that case).
BatchCode build_full_lattice_batch_code(uint32_t k, uint32_t p = 2,
                                        uint64_t cap = kDefaultCap,
                                        Exec exec = Exec::parallel);

/// Serves a multiset request: request l is assigned to plan pair l, each pair
/// decodes the whole vector and the requested coordinate is extracted.
ServiceAssignment serve_request(const BatchCode& bc, const Codeword& w,
                                const BatchRequest& req);

/// Optimal-length bound 2t - r for a batch with r distinct symbols.
uint64_t length_bound(uint64_t t, uint64_t r);

/// Gap n - (2t - r) of a built code against the bound, for r in [1, min(t,k)].
std::vector<std::pair<uint32_t, int64_t>> bound_gaps(const BatchCode& bc);

/// Repairs the symbol at erased position e from the first plan pair untouched
/// by the erasure set: decode the vector from that pair, re-encode position e.
uint64_t repair_symbol(const BatchCode& bc, const Codeword& w,
                       const std::set<uint32_t>& erased, uint32_t e);

/// Number of plan pairs disjoint from the erasure set (availability report).
uint32_t intact_pair_count(const BatchCode& bc, const std::set<uint32_t>& erased);

}  // namespace qubatch
