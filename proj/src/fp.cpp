#include "qubatch/fp.hpp"

#include <limits>
#include <utility>

namespace qubatch {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void validate_ambient(const Ambient& amb) {
  if (amb.k < 1) throw domain_error("ambient dimension k must be >= 1");
  if (amb.p > 65536 || !is_prime(amb.p)) {
    throw domain_error("modulus " + std::to_string(amb.p) + " is not a prime <= 2^16");
  }
}

FpVector::FpVector(Ambient amb, std::vector<uint32_t> coords)
    : amb_(amb), coords_(std::move(coords)) {
  validate_ambient(amb_);
  if (coords_.size() != amb_.k) {
    throw domain_error("coordinate count " + std::to_string(coords_.size()) +
                       " does not match ambient dimension " + std::to_string(amb_.k));
  }
  for (uint32_t c : coords_) {
    if (c >= amb_.p) throw domain_error("coordinate out of range [0, p)");
  }
}

FpVector FpVector::zero(Ambient amb) {
  return FpVector(amb, std::vector<uint32_t>(amb.k, 0));
}

bool FpVector::is_zero() const {
  for (uint32_t c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

namespace {
void require_same_ambient(const Ambient& a, const Ambient& b) {
  if (a != b) throw domain_error("ambient parameters (p, k) do not match");
}
}  // namespace

FpVector FpVector::operator+(const FpVector& o) const {
  require_same_ambient(amb_, o.amb_);
  std::vector<uint32_t> out(amb_.k);
  for (uint32_t i = 0; i < amb_.k; ++i) out[i] = (coords_[i] + o.coords_[i]) % amb_.p;
  return FpVector(amb_, std::move(out));
}

FpVector FpVector::operator-(const FpVector& o) const {
  require_same_ambient(amb_, o.amb_);
  std::vector<uint32_t> out(amb_.k);
  for (uint32_t i = 0; i < amb_.k; ++i) {
    out[i] = (coords_[i] + amb_.p - o.coords_[i]) % amb_.p;
  }
  return FpVector(amb_, std::move(out));
}

FpVector FpVector::scaled(uint32_t c) const {
  c %= amb_.p;
  std::vector<uint32_t> out(amb_.k);
  for (uint32_t i = 0; i < amb_.k; ++i) {
    out[i] = static_cast<uint32_t>((static_cast<uint64_t>(coords_[i]) * c) % amb_.p);
  }
  return FpVector(amb_, std::move(out));
}

std::strong_ordering FpVector::operator<=>(const FpVector& o) const {
  require_same_ambient(amb_, o.amb_);
  for (uint32_t i = 0; i < amb_.k; ++i) {
    if (auto cmp = coords_[i] <=> o.coords_[i]; cmp != 0) return cmp;
  }
  return std::strong_ordering::equal;
}

namespace {
constexpr uint32_t kMaxTextualModulus = 36;

char digit_char(uint32_t v) {
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + (v - 10));
}

uint32_t digit_value(char c, uint32_t p) {
  uint32_t v;
  if (c >= '0' && c <= '9') {
    v = static_cast<uint32_t>(c - '0');
  } else if (c >= 'a' && c <= 'z') {
    v = static_cast<uint32_t>(c - 'a') + 10;
  } else {
    throw domain_error(std::string("invalid digit character '") + c + "'");
  }
  if (v >= p) throw domain_error(std::string("digit '") + c + "' out of range for p");
  return v;
}
}  // namespace

std::string to_string(const FpVector& v) {
  if (v.ambient().p > kMaxTextualModulus) {
    throw domain_error("textual form supports p <= 36");
  }
  std::string out;
  out.reserve(v.dim());
  for (uint32_t i = 0; i < v.dim(); ++i) out.push_back(digit_char(v[i]));
  return out;
}

FpVector vector_from_string(Ambient amb, std::string_view digits) {
  validate_ambient(amb);
  if (amb.p > kMaxTextualModulus) throw domain_error("textual form supports p <= 36");
  if (digits.size() != amb.k) {
    throw domain_error("digit string length " + std::to_string(digits.size()) +
                       " does not match k = " + std::to_string(amb.k));
  }
  std::vector<uint32_t> coords(amb.k);
  for (uint32_t i = 0; i < amb.k; ++i) coords[i] = digit_value(digits[i], amb.p);
  return FpVector(amb, std::move(coords));
}

uint64_t vector_to_index(const FpVector& v) {
  uint64_t idx = 0;
  for (uint32_t i = 0; i < v.dim(); ++i) idx = idx * v.ambient().p + v[i];
  return idx;
}

FpVector vector_from_index(Ambient amb, uint64_t index) {
  std::vector<uint32_t> coords(amb.k);
  for (uint32_t i = amb.k; i-- > 0;) {
    coords[i] = static_cast<uint32_t>(index % amb.p);
    index /= amb.p;
  }
  if (index != 0) throw domain_error("vector index out of range");
  return FpVector(amb, std::move(coords));
}

uint64_t pow_u64(uint64_t p, uint32_t e) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<uint64_t>::max() / p) {
      throw cap_error("p^" + std::to_string(e) + " overflows 64 bits");
    }
    r *= p;
  }
  return r;
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
  // extended Euclid; p prime, a != 0 mod p
  int64_t t = 0, newt = 1;
  int64_t r = p, newr = a % p;
  while (newr != 0) {
    int64_t q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw domain_error("element has no inverse mod p");
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

}  // namespace qubatch
