#include "qubatch/subspace.hpp"

#include <algorithm>
#include <cassert>

namespace qubatch {
namespace {

void require_same_ambient(const Ambient& a, const Ambient& b) {
  if (a != b) throw domain_error("ambient parameters (p, k) do not match");
}

// In-place RREF of an r x width flat matrix, eliminating along the first
// `cols` columns only (rows keep their full width). Returns the pivot columns.
// Pivot rows come first; rows that remain nonzero somewhere beyond the
// eliminated columns are kept after them, fully zero rows are dropped.
std::vector<uint32_t> rref_inplace(std::vector<uint32_t>& m, uint32_t width,
                                   uint32_t cols, uint32_t p) {
  const uint32_t nrows = width == 0 ? 0 : static_cast<uint32_t>(m.size() / width);
  std::vector<uint32_t> pivots;
  uint32_t rank = 0;
  for (uint32_t c = 0; c < cols && rank < nrows; ++c) {
    uint32_t pr = rank;
    while (pr < nrows && m[pr * width + c] == 0) ++pr;
    if (pr == nrows) continue;
    if (pr != rank) {
      for (uint32_t j = 0; j < width; ++j) std::swap(m[pr * width + j], m[rank * width + j]);
    }
    const uint32_t inv = mod_inverse(m[rank * width + c], p);
    if (inv != 1) {
      for (uint32_t j = 0; j < width; ++j) {
        m[rank * width + j] =
            static_cast<uint32_t>((static_cast<uint64_t>(m[rank * width + j]) * inv) % p);
      }
    }
    for (uint32_t i = 0; i < nrows; ++i) {
      if (i == rank) continue;
      const uint32_t f = m[i * width + c];
      if (f == 0) continue;
      for (uint32_t j = 0; j < width; ++j) {
        const uint64_t sub = (static_cast<uint64_t>(f) * m[rank * width + j]) % p;
        m[i * width + j] = static_cast<uint32_t>((m[i * width + j] + p - sub) % p);
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  uint32_t keep = rank;
  for (uint32_t i = rank; i < nrows; ++i) {
    bool nonzero = false;
    for (uint32_t j = 0; j < width && !nonzero; ++j) nonzero = m[i * width + j] != 0;
    if (nonzero) {
      if (i != keep) {
        for (uint32_t j = 0; j < width; ++j) m[keep * width + j] = m[i * width + j];
      }
      ++keep;
    }
  }
  m.resize(static_cast<size_t>(keep) * width);
  return pivots;
}

// Rank of an r x k flat matrix over F_p, destructive on a copy.
uint32_t rank_of(std::vector<uint32_t> m, uint32_t k, uint32_t p) {
  return static_cast<uint32_t>(rref_inplace(m, k, k, p).size());
}

// Packed-bit rank for p = 2, k <= 64.
uint32_t rank_of_gf2(const std::vector<uint64_t>& rows) {
  std::vector<uint64_t> basis;
  basis.reserve(rows.size());
  uint32_t rank = 0;
  for (uint64_t r : rows) {
    for (uint64_t b : basis) {
      r = std::min(r, r ^ b);
    }
    if (r != 0) {
      basis.push_back(r);
      ++rank;
    }
  }
  return rank;
}

}  // namespace

Subspace Subspace::trivial(Ambient amb) {
  validate_ambient(amb);
  return Subspace(amb, {}, {});
}

Subspace Subspace::full(Ambient amb) {
  validate_ambient(amb);
  std::vector<uint32_t> rows(static_cast<size_t>(amb.k) * amb.k, 0);
  std::vector<uint32_t> pivots(amb.k);
  for (uint32_t i = 0; i < amb.k; ++i) {
    rows[static_cast<size_t>(i) * amb.k + i] = 1;
    pivots[i] = i;
  }
  return Subspace(amb, std::move(rows), std::move(pivots));
}

Subspace Subspace::from_rref_unchecked(Ambient amb, std::vector<uint32_t> rows,
                                       std::vector<uint32_t> pivots) {
  assert(rows.size() == static_cast<size_t>(pivots.size()) * amb.k);
#ifndef NDEBUG
  for (size_t i = 0; i < pivots.size(); ++i) {
    assert(rows[i * amb.k + pivots[i]] == 1);
    if (i > 0) assert(pivots[i] > pivots[i - 1]);
  }
#endif
  return Subspace(amb, std::move(rows), std::move(pivots));
}

std::vector<uint32_t> Subspace::free_columns() const {
  std::vector<uint32_t> free;
  free.reserve(codim());
  size_t pi = 0;
  for (uint32_t c = 0; c < amb_.k; ++c) {
    if (pi < pivots_.size() && pivots_[pi] == c) {
      ++pi;
    } else {
      free.push_back(c);
    }
  }
  return free;
}

std::span<const uint32_t> Subspace::row_data(uint32_t i) const {
  return {rows_.data() + static_cast<size_t>(i) * amb_.k, amb_.k};
}

FpVector Subspace::row(uint32_t i) const {
  auto data = row_data(i);
  return FpVector(amb_, std::vector<uint32_t>(data.begin(), data.end()));
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
  require_same_ambient(amb_, o.amb_);
  if (auto cmp = std::lexicographical_compare_three_way(
          rows_.begin(), rows_.end(), o.rows_.begin(), o.rows_.end());
      cmp != 0) {
    return cmp;
  }
  return dim() <=> o.dim();
}

Subspace rref(Ambient amb, const std::vector<FpVector>& rows) {
  validate_ambient(amb);
  std::vector<uint32_t> m;
  m.reserve(rows.size() * amb.k);
  for (const FpVector& r : rows) {
    require_same_ambient(amb, r.ambient());
    m.insert(m.end(), r.coords().begin(), r.coords().end());
  }
  auto pivots = rref_inplace(m, amb.k, amb.k, amb.p);
  return Subspace::from_rref_unchecked(amb, std::move(m), std::move(pivots));
}

Subspace rref(const std::vector<FpVector>& rows) {
  if (rows.empty()) {
    throw domain_error("cannot deduce ambient from an empty row set; pass it explicitly");
  }
  return rref(rows.front().ambient(), rows);
}

FpVector reduce(const Subspace& s, const FpVector& v) {
  require_same_ambient(s.ambient(), v.ambient());
  const uint32_t p = s.ambient().p;
  const uint32_t k = s.ambient().k;
  std::vector<uint32_t> out = v.coords();
  for (uint32_t i = 0; i < s.dim(); ++i) {
    const uint32_t c = s.pivots()[i];
    const uint32_t f = out[c];
    if (f == 0) continue;
    auto row = s.row_data(i);
    for (uint32_t j = 0; j < k; ++j) {
      const uint64_t sub = (static_cast<uint64_t>(f) * row[j]) % p;
      out[j] = static_cast<uint32_t>((out[j] + p - sub) % p);
    }
  }
  return FpVector(s.ambient(), std::move(out));
}

bool contains(const Subspace& s, const FpVector& v) {
  return reduce(s, v).is_zero();
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a.ambient(), b.ambient());
  const uint32_t k = a.ambient().k;
  std::vector<uint32_t> m;
  m.reserve((a.dim() + b.dim()) * static_cast<size_t>(k));
  m.insert(m.end(), a.flat_rows().begin(), a.flat_rows().end());
  m.insert(m.end(), b.flat_rows().begin(), b.flat_rows().end());
  auto pivots = rref_inplace(m, k, k, a.ambient().p);
  return Subspace::from_rref_unchecked(a.ambient(), std::move(m), std::move(pivots));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a.ambient(), b.ambient());
  const Ambient amb = a.ambient();
  const uint32_t k = amb.k;
  // Zassenhaus: reduce [A|A ; B|0]; rows with zero left half carry the
  // intersection in their right half.
  const uint32_t width = 2 * k;
  std::vector<uint32_t> m(static_cast<size_t>(a.dim() + b.dim()) * width, 0);
  for (uint32_t i = 0; i < a.dim(); ++i) {
    auto row = a.row_data(i);
    for (uint32_t j = 0; j < k; ++j) {
      m[static_cast<size_t>(i) * width + j] = row[j];
      m[static_cast<size_t>(i) * width + k + j] = row[j];
    }
  }
  for (uint32_t i = 0; i < b.dim(); ++i) {
    auto row = b.row_data(i);
    for (uint32_t j = 0; j < k; ++j) {
      m[static_cast<size_t>(a.dim() + i) * width + j] = row[j];
    }
  }
  rref_inplace(m, width, width, amb.p);
  const uint32_t nrows = static_cast<uint32_t>(m.size() / width);
  std::vector<uint32_t> inter;
  for (uint32_t i = 0; i < nrows; ++i) {
    bool left_zero = true;
    for (uint32_t j = 0; j < k && left_zero; ++j) left_zero = m[static_cast<size_t>(i) * width + j] == 0;
    if (left_zero) {
      inter.insert(inter.end(), m.begin() + static_cast<size_t>(i) * width + k,
                   m.begin() + static_cast<size_t>(i + 1) * width);
    }
  }
  auto pivots = rref_inplace(inter, k, k, amb.p);
  return Subspace::from_rref_unchecked(amb, std::move(inter), std::move(pivots));
}

bool trivially_intersects(const Subspace& a, const Subspace& b) {
  require_same_ambient(a.ambient(), b.ambient());
  const uint32_t k = a.ambient().k;
  const uint32_t target = a.dim() + b.dim();
  if (target > k) return false;
  if (a.ambient().p == 2 && k <= 64) {
    std::vector<uint64_t> rows;
    rows.reserve(target);
    for (uint32_t i = 0; i < a.dim(); ++i) {
      uint64_t bits = 0;
      auto row = a.row_data(i);
      for (uint32_t j = 0; j < k; ++j) bits |= static_cast<uint64_t>(row[j]) << j;
      rows.push_back(bits);
    }
    for (uint32_t i = 0; i < b.dim(); ++i) {
      uint64_t bits = 0;
      auto row = b.row_data(i);
      for (uint32_t j = 0; j < k; ++j) bits |= static_cast<uint64_t>(row[j]) << j;
      rows.push_back(bits);
    }
    return rank_of_gf2(rows) == target;
  }
  std::vector<uint32_t> m;
  m.reserve(static_cast<size_t>(target) * k);
  m.insert(m.end(), a.flat_rows().begin(), a.flat_rows().end());
  m.insert(m.end(), b.flat_rows().begin(), b.flat_rows().end());
  return rank_of(std::move(m), k, a.ambient().p) == target;
}

std::string to_string(const Subspace& s) {
  std::string out;
  for (uint32_t i = 0; i < s.dim(); ++i) {
    if (i > 0) out.push_back(';');
    out += to_string(s.row(i));
  }
  return out;
}

Subspace subspace_from_string(Ambient amb, std::string_view text) {
  std::vector<FpVector> rows;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    rows.push_back(vector_from_string(amb, text.substr(start, end - start)));
    start = end + 1;
  }
  return rref(amb, rows);
}

std::optional<std::vector<uint32_t>> solve_combination(
    Ambient amb, const std::vector<FpVector>& cols, const FpVector& target) {
  validate_ambient(amb);
  require_same_ambient(amb, target.ambient());
  const uint32_t k = amb.k;
  const uint32_t t = static_cast<uint32_t>(cols.size());
  const uint32_t width = t + 1;
  // k x (t+1) augmented system, unknowns indexed by cols.
  std::vector<uint32_t> m(static_cast<size_t>(k) * width, 0);
  for (uint32_t j = 0; j < t; ++j) {
    require_same_ambient(amb, cols[j].ambient());
    for (uint32_t i = 0; i < k; ++i) m[static_cast<size_t>(i) * width + j] = cols[j][i];
  }
  for (uint32_t i = 0; i < k; ++i) m[static_cast<size_t>(i) * width + t] = target[i];
  auto pivots = rref_inplace(m, width, t, amb.p);
  const uint32_t nrows = static_cast<uint32_t>(m.size() / width);
  // a leftover row 0 .. 0 | c with c != 0 means inconsistent
  for (uint32_t i = static_cast<uint32_t>(pivots.size()); i < nrows; ++i) {
    if (m[static_cast<size_t>(i) * width + t] != 0) return std::nullopt;
  }
  std::vector<uint32_t> x(t, 0);
  for (uint32_t i = 0; i < pivots.size(); ++i) {
    x[pivots[i]] = m[static_cast<size_t>(i) * width + t];
  }
  return x;
}

}  // namespace qubatch
