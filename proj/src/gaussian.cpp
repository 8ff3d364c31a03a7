#include "qubatch/gaussian.hpp"

#include "qubatch/fp.hpp"

namespace qubatch {

BigInt gaussian_binomial(uint32_t k, uint32_t m, uint32_t p) {
  validate_ambient(Ambient{p, std::max(k, 1u)});
  if (m > k) throw domain_error("gaussian binomial requires 0 <= m <= k");
  BigInt num = 1;
  BigInt den = 1;
  const BigInt base = p;
  for (uint32_t i = 1; i <= m; ++i) {
    num *= boost::multiprecision::pow(base, k - i + 1) - 1;
    den *= boost::multiprecision::pow(base, i) - 1;
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw domain_error("gaussian binomial division was not exact");
  return q;
}

}  // namespace qubatch
