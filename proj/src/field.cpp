#include "frobforge/field.hpp"

#include <string>

#include "frobforge/errors.hpp"

namespace frobforge {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InvalidArgument("characteristic must be prime (got " +
                          std::to_string(p) + ")");
  }
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw InvalidArgument("inverse of zero in F_p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

Coeff PrimeField::pow(Coeff a, std::uint64_t n) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a;
  while (n > 0) {
    if (n & 1u) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

}  // namespace frobforge
