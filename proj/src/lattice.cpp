#include "qubatch/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace qubatch {
namespace {

// Free positions of the RREF shape with pivot columns `pivots`: entries
// (i, j) with j > pivots[i] and j not itself a pivot column.
std::vector<std::pair<uint32_t, uint32_t>> free_positions(
    const std::vector<uint32_t>& pivots, uint32_t k) {
  std::vector<bool> is_pivot(k, false);
  for (uint32_t c : pivots) is_pivot[c] = true;
  std::vector<std::pair<uint32_t, uint32_t>> free;
  for (uint32_t i = 0; i < pivots.size(); ++i) {
    for (uint32_t j = pivots[i] + 1; j < k; ++j) {
      if (!is_pivot[j]) free.emplace_back(i, j);
    }
  }
  return free;
}

// All subspaces whose RREF basis has the given pivot columns; p^free of them.
void fill_pivot_bucket(Ambient amb, const std::vector<uint32_t>& pivots,
                       std::vector<Subspace>& out) {
  const uint32_t k = amb.k;
  const uint32_t m = static_cast<uint32_t>(pivots.size());
  const auto free = free_positions(pivots, k);
  std::vector<uint32_t> base(static_cast<size_t>(m) * k, 0);
  for (uint32_t i = 0; i < m; ++i) base[static_cast<size_t>(i) * k + pivots[i]] = 1;

  std::vector<uint32_t> digits(free.size(), 0);
  while (true) {
    std::vector<uint32_t> rows = base;
    for (size_t d = 0; d < free.size(); ++d) {
      rows[static_cast<size_t>(free[d].first) * k + free[d].second] = digits[d];
    }
    out.push_back(Subspace::from_rref_unchecked(amb, std::move(rows), pivots));
    size_t d = digits.size();
    while (d > 0 && digits[d - 1] == amb.p - 1) digits[--d] = 0;
    if (d == 0) break;
    ++digits[d - 1];
  }
}

std::vector<std::vector<uint32_t>> pivot_combinations(uint32_t k, uint32_t m) {
  std::vector<std::vector<uint32_t>> combos;
  if (m > k) return combos;
  std::vector<uint32_t> cur(m);
  for (uint32_t i = 0; i < m; ++i) cur[i] = i;
  while (true) {
    combos.push_back(cur);
    uint32_t i = m;
    while (i > 0 && cur[i - 1] == k - m + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (uint32_t j = i; j < m; ++j) cur[j] = cur[j - 1] + 1;
  }
  return combos;
}

}  // namespace

LatticeSlice enumerate_subspaces(Ambient amb, uint32_t m, uint64_t cap, Exec exec) {
  validate_ambient(amb);
  if (m > amb.k) throw domain_error("slice dimension out of range 0..k");
  const BigInt expected = gaussian_binomial(amb.k, m, amb.p);
  if (expected > cap) {
    throw cap_error("slice of " + expected.str() + " subspaces exceeds cap " +
                    std::to_string(cap));
  }
  LatticeSlice slice{amb, m, {}};
  if (m == 0) {
    slice.subspaces.push_back(Subspace::trivial(amb));
    return slice;
  }
  const auto combos = pivot_combinations(amb.k, m);
  std::vector<std::vector<Subspace>> buckets(combos.size());
  const int64_t ncombos = static_cast<int64_t>(combos.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (int64_t i = 0; i < ncombos; ++i) {
    fill_pivot_bucket(amb, combos[static_cast<size_t>(i)], buckets[static_cast<size_t>(i)]);
  }
  size_t total = 0;
  for (const auto& b : buckets) total += b.size();
  slice.subspaces.reserve(total);
  for (auto& b : buckets) {
    for (auto& s : b) slice.subspaces.push_back(std::move(s));
  }
  std::sort(slice.subspaces.begin(), slice.subspaces.end());
  assert(BigInt(slice.subspaces.size()) == expected);
  return slice;
}

std::vector<LatticeSlice> enumerate_lattice(Ambient amb, uint64_t cap, Exec exec) {
  validate_ambient(amb);
  if (amb.k < 2) throw domain_error("lattice enumeration requires k >= 2");
  BigInt total = 0;
  for (uint32_t m = 1; m < amb.k; ++m) total += gaussian_binomial(amb.k, m, amb.p);
  if (total > cap) {
    throw cap_error("lattice of " + total.str() + " subspaces exceeds cap " +
                    std::to_string(cap));
  }
  std::vector<LatticeSlice> slices;
  slices.reserve(amb.k - 1);
  for (uint32_t m = 1; m < amb.k; ++m) {
    slices.push_back(enumerate_subspaces(amb, m, cap, exec));
  }
  return slices;
}

std::vector<Subspace> complements_of(const Subspace& s) {
  const Ambient amb = s.ambient();
  const uint32_t m = s.dim();
  const uint32_t k = amb.k;
  if (m == 0 || m == k) {
    throw domain_error("complements are defined for 0 < dim < k");
  }
  const uint32_t f = k - m;
  const auto free_cols = s.free_columns();
  const uint64_t count = pow_u64(amb.p, m * f);

  // Block-matrix bijection: with the basis of s extended by the unit vectors
  // at its free columns, each m x (k-m) matrix A yields the complement
  // spanned by e_{free_j} + sum_i A[i][j] * basis_i.
  std::vector<Subspace> out;
  out.reserve(count);
  std::vector<uint32_t> a(static_cast<size_t>(m) * f, 0);
  while (true) {
    std::vector<FpVector> gens;
    gens.reserve(f);
    for (uint32_t j = 0; j < f; ++j) {
      std::vector<uint32_t> v(k, 0);
      v[free_cols[j]] = 1;
      for (uint32_t i = 0; i < m; ++i) {
        const uint32_t coef = a[static_cast<size_t>(i) * f + j];
        if (coef == 0) continue;
        auto row = s.row_data(i);
        for (uint32_t c = 0; c < k; ++c) {
          v[c] = static_cast<uint32_t>((v[c] + static_cast<uint64_t>(coef) * row[c]) % amb.p);
        }
      }
      gens.emplace_back(amb, std::move(v));
    }
    out.push_back(rref(amb, gens));
    size_t d = a.size();
    while (d > 0 && a[d - 1] == amb.p - 1) a[--d] = 0;
    if (d == 0) break;
    ++a[d - 1];
  }
  std::sort(out.begin(), out.end());
  assert(out.size() == count);
  assert(std::adjacent_find(out.begin(), out.end()) == out.end());
  return out;
}

std::vector<Subspace> superspaces_containing(const Subspace& kernel, uint32_t m,
                                             uint64_t cap) {
  const Ambient amb = kernel.ambient();
  const uint32_t d = kernel.dim();
  if (m < d || m > amb.k) {
    throw domain_error("superspace dimension must satisfy dim K <= m <= k");
  }
  if (m == d) return {kernel};

  // The quotient by K is coordinatized by K's free columns; lift each
  // (m-d)-dimensional subspace of the quotient and adjoin K's basis.
  const auto free_cols = kernel.free_columns();
  const Ambient quot{amb.p, amb.k - d};
  const LatticeSlice qslice = enumerate_subspaces(quot, m - d, cap, Exec::serial);

  std::vector<Subspace> out;
  out.reserve(qslice.subspaces.size());
  for (const Subspace& q : qslice.subspaces) {
    std::vector<FpVector> gens;
    gens.reserve(d + q.dim());
    for (uint32_t i = 0; i < d; ++i) gens.push_back(kernel.row(i));
    for (uint32_t i = 0; i < q.dim(); ++i) {
      std::vector<uint32_t> v(amb.k, 0);
      auto qrow = q.row_data(i);
      for (uint32_t j = 0; j < quot.k; ++j) v[free_cols[j]] = qrow[j];
      gens.emplace_back(amb, std::move(v));
    }
    out.push_back(rref(amb, gens));
  }
  std::sort(out.begin(), out.end());
  assert(std::adjacent_find(out.begin(), out.end()) == out.end());
  return out;
}

}  // namespace qubatch
