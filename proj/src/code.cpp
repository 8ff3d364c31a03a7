#include "qubatch/code.hpp"

#include <algorithm>
#include <set>

namespace qubatch {

SubgroupSystem::SubgroupSystem(Ambient amb, std::vector<Subspace> positions,
                               bool allow_duplicates)
    : amb_(amb), positions_(std::move(positions)) {
  validate_ambient(amb_);
  if (positions_.empty()) throw domain_error("a subgroup system needs at least one position");
  for (const Subspace& s : positions_) {
    if (s.ambient() != amb_) throw domain_error("position ambient does not match system");
  }
  if (!allow_duplicates) {
    std::set<Subspace> seen;
    for (const Subspace& s : positions_) {
      if (!seen.insert(s).second) {
        throw domain_error("duplicate position at index " +
                           std::to_string(&s - positions_.data()) +
                           " (pass allow_duplicates to permit)");
      }
    }
  }
}

QuasiUniformCode::QuasiUniformCode(SubgroupSystem sys) : sys_(std::move(sys)) {
  const Ambient amb = sys_.ambient();
  code_size_ = pow_u64(amb.p, amb.k);
  alphabets_.reserve(sys_.length());
  for (uint32_t i = 0; i < sys_.length(); ++i) {
    alphabets_.push_back(pow_u64(amb.p, sys_.position(i).codim()));
  }
}

QuasiUniformCode build_code(SubgroupSystem system) {
  Subspace total = Subspace::full(system.ambient());
  for (uint32_t i = 0; i < system.length(); ++i) {
    total = intersect(total, system.position(i));
    if (total.is_trivial()) break;
  }
  if (!total.is_trivial()) {
    throw nontrivial_intersection_error(
        "total intersection of the subgroups is nontrivial: " + to_string(total) +
        " (choose subgroups whose intersection is {0})",
        total);
  }
  return QuasiUniformCode(std::move(system));
}

uint64_t QuasiUniformCode::label_of(uint32_t pos, const FpVector& g) const {
  const Subspace& s = sys_.position(pos);
  const FpVector rep = reduce(s, g);
  uint64_t label = 0;
  for (uint32_t c : s.free_columns()) label = label * ambient().p + rep[c];
  return label;
}

FpVector QuasiUniformCode::coset_rep(uint32_t pos, uint64_t label) const {
  const Subspace& s = sys_.position(pos);
  if (label >= alphabets_[pos]) {
    throw data_error("label " + std::to_string(label) + " out of range for position " +
                     std::to_string(pos));
  }
  const auto free_cols = s.free_columns();
  std::vector<uint32_t> v(ambient().k, 0);
  for (size_t j = free_cols.size(); j-- > 0;) {
    v[free_cols[j]] = static_cast<uint32_t>(label % ambient().p);
    label /= ambient().p;
  }
  return FpVector(ambient(), std::move(v));
}

std::string QuasiUniformCode::symbol_digits(uint32_t pos, uint64_t label) const {
  const std::string digits = to_string(coset_rep(pos, label));
  std::string out;
  for (uint32_t c : sys_.position(pos).free_columns()) out.push_back(digits[c]);
  return out;
}

Codeword QuasiUniformCode::encode(const FpVector& g) const {
  if (g.ambient() != ambient()) throw domain_error("vector ambient does not match code");
  Codeword w;
  w.symbols.reserve(length());
  for (uint32_t i = 0; i < length(); ++i) w.symbols.push_back(label_of(i, g));
  return w;
}

namespace {

// Running affine intersection: the set rep + dir, shrunk one coset at a time.
struct AffineState {
  FpVector rep;
  Subspace dir;
};

// Intersects state with the coset a + s. Returns false when empty.
bool intersect_coset(AffineState& st, const FpVector& a, const Subspace& s) {
  const Ambient amb = a.ambient();
  // Solve sum_j x_j * reduce_s(dir_j) = reduce_s(a - rep) for a point of the
  // current set lying in the coset.
  std::vector<FpVector> cols;
  cols.reserve(st.dir.dim());
  for (uint32_t i = 0; i < st.dir.dim(); ++i) cols.push_back(reduce(s, st.dir.row(i)));
  const FpVector target = reduce(s, a - st.rep);
  const auto solution = solve_combination(amb, cols, target);
  if (!solution) return false;
  FpVector point = st.rep;
  for (uint32_t i = 0; i < st.dir.dim(); ++i) {
    if ((*solution)[i] != 0) point = point + st.dir.row(i).scaled((*solution)[i]);
  }
  st.dir = intersect(st.dir, s);
  st.rep = reduce(st.dir, point);  // canonical representative
  return true;
}

}  // namespace

FpVector QuasiUniformCode::decode_subset(const Codeword& w,
                                         std::span<const uint32_t> subset) const {
  if (w.symbols.size() != length()) {
    throw data_error("word has " + std::to_string(w.symbols.size()) +
                     " symbols, expected " + std::to_string(length()));
  }
  if (subset.empty()) throw domain_error("decode subset must be nonempty");
  for (uint32_t pos : subset) {
    if (pos >= length()) throw domain_error("position index out of range");
    if (w.symbols[pos] >= alphabets_[pos]) {
      throw data_error("symbol " + std::to_string(w.symbols[pos]) +
                       " at position " + std::to_string(pos) + " out of range");
    }
  }
  AffineState st{coset_rep(subset[0], w.symbols[subset[0]]), sys_.position(subset[0])};
  for (size_t i = 1; i < subset.size(); ++i) {
    const uint32_t pos = subset[i];
    if (!intersect_coset(st, coset_rep(pos, w.symbols[pos]), sys_.position(pos))) {
      throw data_error("not a codeword: coset intersection is empty");
    }
    if (st.dir.is_trivial()) {
      // Remaining positions only need a consistency check.
      for (size_t j = i + 1; j < subset.size(); ++j) {
        const uint32_t q = subset[j];
        if (label_of(q, st.rep) != w.symbols[q]) {
          throw data_error("not a codeword: coset intersection is empty");
        }
      }
      return st.rep;
    }
  }
  if (!st.dir.is_trivial()) {
    throw ambiguous_decode_error(
        "subset does not determine the vector; residual subgroup " + to_string(st.dir),
        st.dir);
  }
  return st.rep;
}

FpVector QuasiUniformCode::decode_full(const Codeword& w) const {
  std::vector<uint32_t> all(length());
  for (uint32_t i = 0; i < length(); ++i) all[i] = i;
  return decode_subset(w, all);
}

std::vector<std::pair<FpVector, Codeword>> QuasiUniformCode::code_table(uint64_t cap) const {
  if (code_size_ > cap) {
    throw cap_error("code table of " + std::to_string(code_size_) + " rows exceeds cap");
  }
  std::vector<std::pair<FpVector, Codeword>> table;
  table.reserve(code_size_);
  for (uint64_t e = 0; e < code_size_; ++e) {
    FpVector g = vector_from_index(ambient(), e);
    Codeword w = encode(g);
    table.emplace_back(std::move(g), std::move(w));
  }
  return table;
}

uint32_t QuasiUniformCode::minimum_distance(uint64_t cap) const {
  if (code_size_ > cap) {
    throw cap_error("minimum distance sweep of " + std::to_string(code_size_) +
                    " codewords exceeds cap");
  }
  // Group code: distance(c1, c2) = weight(c1 - c2), so the minimum distance
  // is the minimum weight over nonzero information vectors.
  uint32_t best = length();
  for (uint64_t e = 1; e < code_size_; ++e) {
    const Codeword w = encode(vector_from_index(ambient(), e));
    uint32_t weight = 0;
    for (uint64_t s : w.symbols) weight += s != 0;
    best = std::min(best, weight);
  }
  return best;
}

std::string to_string(const Codeword& w) {
  std::string out;
  for (size_t i = 0; i < w.symbols.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(w.symbols[i]);
  }
  return out;
}

Codeword codeword_from_string(std::string_view text) {
  Codeword w;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string tok(text.substr(start, end - start));
    size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) {
      throw domain_error("invalid codeword symbol '" + tok + "'");
    }
    w.symbols.push_back(v);
    if (end == text.size()) break;
    start = end + 1;
  }
  return w;
}

}  // namespace qubatch
