#pragma once

#include <cstdint>

namespace frobforge {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// The prime field F_p. Values are residues in [0, p).
class PrimeField {
 public:
  /// Throws InvalidArgument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  Coeff add(Coeff a, Coeff b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Throws InvalidArgument on zero.
  Coeff inv(Coeff a) const;
  Coeff pow(Coeff a, std::uint64_t n) const noexcept;

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  std::uint32_t p_;
};

}  // namespace frobforge
