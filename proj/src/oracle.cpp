#include "qubatch/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>

namespace qubatch::oracle {
namespace {

// Subset enumeration in lexicographic order of increasing index vectors,
// sizes ascending; the empty subset comes first.
std::vector<std::vector<uint32_t>> subsets_up_to(uint32_t n, uint32_t max_size) {
  std::vector<std::vector<uint32_t>> out;
  out.push_back({});
  for (uint32_t size = 1; size <= std::min(max_size, n); ++size) {
    std::vector<uint32_t> cur(size);
    for (uint32_t i = 0; i < size; ++i) cur[i] = i;
    for (;;) {
      out.push_back(cur);
      uint32_t i = size;
      while (i > 0 && cur[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (uint32_t j = i; j < size; ++j) cur[j] = cur[j - 1] + 1;
    }
  }
  return out;
}

std::vector<std::vector<uint32_t>> sampled_subsets(uint32_t n, uint32_t max_size,
                                                   uint64_t seed, uint32_t per_size) {
  std::vector<std::vector<uint32_t>> out;
  out.push_back({});
  std::mt19937_64 rng(seed);
  std::set<std::vector<uint32_t>> seen;
  for (uint32_t size = 1; size <= std::min(max_size, n); ++size) {
    uint32_t added = 0;
    for (uint32_t trial = 0; trial < per_size * 4 && added < per_size; ++trial) {
      std::set<uint32_t> pick;
      while (pick.size() < size) {
        pick.insert(static_cast<uint32_t>(rng() % n));
      }
      std::vector<uint32_t> subset(pick.begin(), pick.end());
      if (seen.insert(subset).second) {
        out.push_back(std::move(subset));
        ++added;
      }
    }
  }
  return out;
}

}  // namespace

bool UniformityResult::all_pass() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const UniformityReport& r) { return r.pass; });
}

UniformityResult check_quasi_uniform(const QuasiUniformCode& code,
                                     uint32_t max_subset_size, bool allow_sampling,
                                     uint64_t seed, uint32_t sample_count, Exec exec) {
  if (code.code_size() > 4096) {
    throw cap_error("uniformity check limited to codes with |G| <= 4096");
  }
  const uint32_t n = code.length();
  UniformityResult result;
  result.seed = seed;
  result.sampled = n > 20;
  if (result.sampled && !allow_sampling) {
    throw cap_error("code length " + std::to_string(n) +
                    " > 20 needs sampled subsets; enable sampling");
  }
  const auto subsets = result.sampled ? sampled_subsets(n, max_subset_size, seed, sample_count)
                                      : subsets_up_to(n, max_subset_size);

  // All codewords, projected per subset (direct counting; the only shared
  // machinery is encode itself).
  const auto table = code.code_table(4096);

  result.reports.resize(subsets.size());
  const int64_t count = static_cast<int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int64_t s = 0; s < count; ++s) {
    const auto& subset = subsets[static_cast<size_t>(s)];
    UniformityReport rep;
    rep.subset = subset;
    for (const auto& [g, w] : table) {
      std::vector<uint64_t> key;
      key.reserve(subset.size());
      for (uint32_t pos : subset) key.push_back(w.symbols[pos]);
      ++rep.multiplicities[key];
    }
    rep.support_size = rep.multiplicities.size();
    Subspace inter = Subspace::full(code.ambient());
    for (uint32_t pos : subset) inter = intersect(inter, code.system().position(pos));
    rep.expected_support = code.code_size() / pow_u64(code.ambient().p, inter.dim());
    rep.uniform = true;
    uint64_t first = rep.multiplicities.empty() ? 0 : rep.multiplicities.begin()->second;
    for (const auto& [key, cnt] : rep.multiplicities) {
      if (cnt != first) rep.uniform = false;
    }
    rep.pass = rep.uniform && rep.support_size == rep.expected_support;
    result.reports[static_cast<size_t>(s)] = std::move(rep);
  }
  return result;
}

uint64_t brute_max_matching(const std::vector<std::vector<uint32_t>>& adj) {
  const uint32_t n = static_cast<uint32_t>(adj.size());
  if (n > 12) throw cap_error("brute-force matching limited to 12 vertices");
  std::vector<int8_t> memo(static_cast<size_t>(1) << n, -1);
  std::vector<uint32_t> mask_of(n);
  for (uint32_t v = 0; v < n; ++v) {
    uint32_t m = 0;
    for (uint32_t u : adj[v]) m |= 1u << u;
    mask_of[v] = m;
  }
  // f(used) = max matching among vertices not in `used`
  auto rec = [&](auto&& self, uint32_t used) -> uint8_t {
    if (used == (1u << n) - 1) return 0;
    if (memo[used] >= 0) return static_cast<uint8_t>(memo[used]);
    uint32_t v = 0;
    while (used & (1u << v)) ++v;
    uint8_t best = self(self, used | (1u << v));  // leave v unmatched
    uint32_t cand = mask_of[v] & ~used;
    while (cand) {
      const uint32_t u = static_cast<uint32_t>(std::countr_zero(cand));
      cand &= cand - 1;
      best = std::max<uint8_t>(best,
                               1 + self(self, used | (1u << v) | (1u << u)));
    }
    memo[used] = static_cast<int8_t>(best);
    return best;
  };
  return n == 0 ? 0 : rec(rec, 0);
}

bool brute_serveability(const BatchCode& bc, uint32_t t) {
  const uint32_t k = bc.params().k_info;
  if (k > 4 || t > 8) throw cap_error("serveability sweep limited to k <= 4, t <= 8");
  if (t > bc.params().t) return false;  // capacity

  // all multisets of size t over [1, k]
  std::vector<std::vector<uint32_t>> requests;
  std::vector<uint32_t> cur(t, 1);
  for (;;) {
    requests.push_back(cur);
    uint32_t i = t;
    while (i > 0 && cur[i - 1] == k) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (uint32_t j = i; j < t; ++j) cur[j] = cur[i - 1];
  }

  const uint64_t size = bc.code().code_size();
  for (uint64_t e = 0; e < size; ++e) {
    const FpVector g = vector_from_index(bc.code().ambient(), e);
    const Codeword w = bc.code().encode(g);
    for (const auto& indices : requests) {
      const ServiceAssignment sa = serve_request(bc, w, BatchRequest{indices});
      for (size_t l = 0; l < indices.size(); ++l) {
        if (sa.items[l].value != g[indices[l] - 1]) return false;
        if (sa.items[l].decoded != g) return false;
      }
      // assigned pairs must be pairwise disjoint
      std::set<uint32_t> seen;
      for (const auto& item : sa.items) {
        if (!seen.insert(item.pair_used.first).second) return false;
        if (!seen.insert(item.pair_used.second).second) return false;
      }
    }
  }
  return true;
}

namespace {

// Element-set span closure, independent of RREF machinery. Elements are
// canonical vector indices.
std::vector<uint64_t> span_elements(const std::vector<FpVector>& gens, Ambient amb) {
  std::set<uint64_t> span{0};
  std::vector<FpVector> current{FpVector::zero(amb)};
  for (const FpVector& g : gens) {
    std::vector<FpVector> next;
    for (uint32_t c = 0; c < amb.p; ++c) {
      const FpVector cg = g.scaled(c);
      for (const FpVector& v : current) {
        FpVector w = v + cg;
        if (span.insert(vector_to_index(w)).second) next.push_back(std::move(w));
      }
    }
    for (FpVector& w : next) current.push_back(std::move(w));
  }
  return {span.begin(), span.end()};
}

}  // namespace

uint64_t brute_complement_count(const Subspace& s) {
  const Ambient amb = s.ambient();
  const uint32_t m = s.dim();
  if (m == 0 || m == amb.k) {
    throw domain_error("complements are defined for 0 < dim < k");
  }
  const uint64_t size = pow_u64(amb.p, amb.k);
  if (size > 4096) throw cap_error("brute complement count limited to |G| <= 4096");
  const uint32_t f = amb.k - m;

  std::set<uint64_t> s_elems;
  {
    std::vector<FpVector> gens;
    for (uint32_t i = 0; i < m; ++i) gens.push_back(s.row(i));
    for (uint64_t e : span_elements(gens, amb)) s_elems.insert(e);
  }

  // every f-dim subspace, as the set of spans of f-tuples of nonzero vectors
  std::vector<FpVector> nonzero;
  for (uint64_t e = 1; e < size; ++e) nonzero.push_back(vector_from_index(amb, e));
  const uint64_t target_size = pow_u64(amb.p, f);

  std::set<std::vector<uint64_t>> complements;
  std::vector<uint32_t> pick(f);
  for (uint32_t i = 0; i < f; ++i) pick[i] = i;
  const uint32_t nnz = static_cast<uint32_t>(nonzero.size());
  uint64_t combos = 1;
  for (uint32_t i = 0; i < f; ++i) combos = combos * (nnz - i) / (i + 1);
  if (combos > 2'000'000) throw cap_error("brute complement enumeration too large");
  for (;;) {
    std::vector<FpVector> gens;
    for (uint32_t i : pick) gens.push_back(nonzero[i]);
    auto elems = span_elements(gens, amb);
    if (elems.size() == target_size) {
      bool trivial_meet = true;
      for (uint64_t e : elems) {
        if (e != 0 && s_elems.count(e)) {
          trivial_meet = false;
          break;
        }
      }
      if (trivial_meet) complements.insert(std::move(elems));
    }
    uint32_t i = f;
    while (i > 0 && pick[i - 1] == nnz - f + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (uint32_t j = i; j < f; ++j) pick[j] = pick[j - 1] + 1;
  }
  return complements.size();
}

uint32_t brute_min_distance(const QuasiUniformCode& code) {
  if (code.code_size() > 1024) {
    throw cap_error("brute minimum distance limited to |G| <= 1024");
  }
  const auto table = code.code_table(1024);
  uint32_t best = code.length();
  for (size_t i = 0; i < table.size(); ++i) {
    for (size_t j = i + 1; j < table.size(); ++j) {
      uint32_t d = 0;
      for (uint32_t c = 0; c < code.length(); ++c) {
        d += table[i].second.symbols[c] != table[j].second.symbols[c];
      }
      best = std::min(best, d);
    }
  }
  return best;
}

}  // namespace qubatch::oracle
