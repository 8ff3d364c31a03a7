#include "qubatch/batch.hpp"

#include <algorithm>
#include <array>

#include "qubatch/graph.hpp"
#include "qubatch/matching.hpp"

namespace qubatch {

BatchRequest request_from_string(std::string_view text) {
  BatchRequest req;
  if (text.empty()) return req;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string tok(text.substr(start, end - start));
    size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size() || v == 0) {
      throw domain_error("invalid request index '" + tok + "' (indices are 1-based)");
    }
    req.indices.push_back(static_cast<uint32_t>(v));
    if (end == text.size()) break;
    start = end + 1;
  }
  return req;
}

std::string to_string(const BatchRequest& req) {
  std::string out;
  for (size_t i = 0; i < req.indices.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(req.indices[i]);
  }
  return out;
}

BatchCode::BatchCode(QuasiUniformCode code, RecoveryPlan plan)
    : code_(std::move(code)), plan_(std::move(plan)) {
  params_.n = code_.length();
  params_.k_info = code_.ambient().k;
  params_.t = plan_.t();
  params_.r = 2;
  params_.rho = params_.n - params_.k_info;
}

BatchCode build_batch_code(SubgroupSystem system, RecoveryPlan plan) {
  const uint32_t n = system.length();
  std::vector<bool> used(n, false);
  for (const auto& [i, j] : plan.pairs) {
    if (i >= n || j >= n) throw domain_error("plan pair position out of range");
    if (i == j || used[i] || used[j]) {
      throw domain_error("plan pairs must use pairwise distinct positions");
    }
    used[i] = used[j] = true;
    if (!intersect(system.position(i), system.position(j)).is_trivial()) {
      throw domain_error("plan pair (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") has nontrivially intersecting subgroups");
    }
  }
  return BatchCode(build_code(std::move(system)), std::move(plan));
}

BatchCode build_full_lattice_batch_code(uint32_t k, uint32_t p, uint64_t cap, Exec exec) {
  const Ambient amb{p, k};
  validate_ambient(amb);
  if (k < 2) throw domain_error("full-lattice construction requires k >= 2");
  if (k % 2 == 0 && p != 2) {
    throw domain_error("even k pairs the half-dimension slice, available for p = 2 only");
  }

  const auto slices = enumerate_lattice(amb, cap, exec);
  std::vector<uint32_t> offset(k, 0);  // offset[m-1] = first position of slice m
  {
    uint32_t pos = 0;
    for (uint32_t m = 1; m < k; ++m) {
      offset[m - 1] = pos;
      pos += static_cast<uint32_t>(slices[m - 1].subspaces.size());
    }
  }
  std::vector<Subspace> positions;
  for (const auto& slice : slices) {
    positions.insert(positions.end(), slice.subspaces.begin(), slice.subspaces.end());
  }

  RecoveryPlan plan;
  for (uint32_t m = 1; 2 * m < k; ++m) {
    IntersectionGraph g = build_bipartite_graph(k, m, p, cap, exec);
    Matching match = max_bipartite_matching(g);
    if (match.size() != g.n_left) {
      throw domain_error("bipartite matching between slices " + std::to_string(m) + " and " +
                         std::to_string(k - m) + " is not perfect");
    }
    for (const auto& [u, v] : match.pairs) {
      plan.pairs.emplace_back(offset[m - 1] + u, offset[k - m - 1] + (v - g.n_left));
    }
  }
  if (k % 2 == 0) {
    IntersectionGraph g = build_halfdim_graph(k, cap, exec);
    Matching match = max_general_matching(g);
    const uint32_t base = offset[k / 2 - 1];
    for (const auto& [u, v] : match.pairs) {
      plan.pairs.emplace_back(base + u, base + v);
    }
  }
  return build_batch_code(SubgroupSystem(amb, std::move(positions)), std::move(plan));
}

ServiceAssignment serve_request(const BatchCode& bc, const Codeword& w,
                                const BatchRequest& req) {
  const BatchParams& prm = bc.params();
  if (req.indices.size() > prm.t) {
    throw domain_error("request of size " + std::to_string(req.indices.size()) +
                       " exceeds batch capacity t = " + std::to_string(prm.t));
  }
  ServiceAssignment out;
  out.items.reserve(req.indices.size());
  for (size_t l = 0; l < req.indices.size(); ++l) {
    const uint32_t idx = req.indices[l];
    if (idx < 1 || idx > prm.k_info) {
      throw domain_error("request index " + std::to_string(idx) + " outside [1, k]");
    }
    const auto pair = bc.plan().pairs[l];
    const std::array<uint32_t, 2> subset{pair.first, pair.second};
    FpVector g = bc.code().decode_subset(w, subset);
    const uint32_t value = g[idx - 1];
    out.items.push_back(ServiceItem{idx, pair, std::move(g), value});
  }
  return out;
}

uint64_t length_bound(uint64_t t, uint64_t r) {
  if (r < 1 || r > t) throw domain_error("bound requires 1 <= r <= t");
  return 2 * t - r;
}

std::vector<std::pair<uint32_t, int64_t>> bound_gaps(const BatchCode& bc) {
  const BatchParams& prm = bc.params();
  std::vector<std::pair<uint32_t, int64_t>> gaps;
  const uint32_t rmax = std::min(prm.t, prm.k_info);
  for (uint32_t r = 1; r <= rmax; ++r) {
    gaps.emplace_back(r, static_cast<int64_t>(prm.n) -
                             static_cast<int64_t>(length_bound(prm.t, r)));
  }
  return gaps;
}

uint32_t intact_pair_count(const BatchCode& bc, const std::set<uint32_t>& erased) {
  uint32_t count = 0;
  for (const auto& [i, j] : bc.plan().pairs) {
    if (!erased.count(i) && !erased.count(j)) ++count;
  }
  return count;
}

uint64_t repair_symbol(const BatchCode& bc, const Codeword& w,
                       const std::set<uint32_t>& erased, uint32_t e) {
  if (e >= bc.params().n) throw domain_error("erased position out of range");
  if (!erased.count(e)) {
    throw domain_error("position " + std::to_string(e) + " is not in the erasure set");
  }
  for (const auto& [i, j] : bc.plan().pairs) {
    if (erased.count(i) || erased.count(j)) continue;
    const std::array<uint32_t, 2> subset{i, j};
    const FpVector g = bc.code().decode_subset(w, subset);
    return bc.code().label_of(e, g);
  }
  std::string positions;
  for (uint32_t x : erased) {
    if (!positions.empty()) positions += ",";
    positions += std::to_string(x);
  }
  throw domain_error("irreparable: no recovery pair is disjoint from erasures {" +
                     positions + "}");
}

}  // namespace qubatch
