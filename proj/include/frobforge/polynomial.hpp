#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobforge/field.hpp"

namespace frobforge {

inline constexpr std::size_t kMaxVars = 16;
inline constexpr std::int64_t kDegreeMinusInfinity =
    std::numeric_limits<std::int64_t>::min();

/// Exponent vector plus its weighted degree. Rings build and combine these;
/// the degree is only meaningful relative to the ring that produced it.
struct Monomial {
  std::array<std::uint32_t, kMaxVars> exps{};
  std::int64_t degree = 0;

  std::uint32_t operator[](std::size_t i) const { return exps[i]; }
  bool is_one() const noexcept { return degree == 0 && exps == decltype(exps){}; }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exps[i] > other.exps[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exps[i] != 0 && other.exps[i] != 0) return false;
    }
    return true;
  }
  /// Bit i set iff variable i occurs (variables beyond 31 fold onto bit 31).
  std::uint32_t support_mask() const noexcept {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exps[i] != 0) m |= 1u << i;
    }
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.exps == b.exps;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exps) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Product order eliminating the first `block` variables: the weighted
  /// degree in that block decides first, ties broken by grevlex inside each
  /// block.
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::Elimination, block);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  std::string name() const;

  friend bool operator==(const MonomialOrder& a,
                         const MonomialOrder& b) noexcept {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}
  Kind kind_;
  std::size_t block_;
};

/// A polynomial ring F_p[x_1..x_n] with a fixed term order and positive
/// variable weights (all 1 unless stated otherwise).
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> vars,
           MonomialOrder order, std::vector<std::int64_t> weights = {});

  static std::shared_ptr<const PolyRing> make(
      std::uint32_t p, std::vector<std::string> vars,
      MonomialOrder order = MonomialOrder::grevlex(),
      std::vector<std::int64_t> weights = {});

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept {
    return field_.characteristic();
  }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& var_names() const noexcept { return vars_; }
  std::optional<std::size_t> var_index(std::string_view name) const;
  const std::vector<std::int64_t>& weights() const noexcept {
    return weights_;
  }
  const MonomialOrder& order() const noexcept { return order_; }
  bool standard_graded() const noexcept;

  /// Three-way comparison under the ring order: negative, zero, positive.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

  Monomial one() const { return Monomial{}; }
  Monomial variable(std::size_t i, std::uint32_t power = 1) const;
  Monomial monomial(std::span<const std::uint32_t> exps) const;
  /// Checked product; throws OverflowError on exponent overflow.
  Monomial mul(const Monomial& a, const Monomial& b) const;
  /// Requires b | a.
  Monomial div(const Monomial& a, const Monomial& b) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  Monomial power(const Monomial& a, std::uint64_t n) const;
  std::int64_t degree_of(const Monomial& a) const noexcept;

  bool same_as(const PolyRing& other) const noexcept;
  std::shared_ptr<const PolyRing> with_order(MonomialOrder order) const;

  std::string monomial_to_string(const Monomial& m) const;

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  std::vector<std::int64_t> weights_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial; terms are kept strictly descending under the ring
/// order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial term(RingPtr ring, const Monomial& m, Coeff c);
  /// Sorts and combines arbitrary terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts that `terms` is already canonical.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const PolyRing& ring() const { return *ring_; }
  bool has_ring() const noexcept { return static_cast<bool>(ring_); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Nonzero constant.
  bool is_unit() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Weighted degree of the leading term; kDegreeMinusInfinity for zero.
  std::int64_t degree() const noexcept;
  bool is_homogeneous() const noexcept;
  /// Throws InvalidArgument on zero.
  const Term& leading_term() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) {
    return f += g;
  }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) {
    return f -= g;
  }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  Polynomial monic() const;
  Polynomial pow(std::uint64_t n) const;
  /// f^q computed term-wise; q must be a power of the characteristic.
  Polynomial frobenius_power(std::uint64_t q) const;
  Polynomial derivative(std::size_t var) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept;

 private:
  void require_same_ring(const Polynomial& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial poly_power(const Polynomial& f, std::uint64_t n);
/// Leading term under an arbitrary order on the same variables.
Term leading_term(const Polynomial& f, const MonomialOrder& order);

/// Re-expresses f in `target`, sending variable i of f's ring to variable
/// index_map[i] of target.
Polynomial map_variables(const Polynomial& f, const RingPtr& target,
                         std::span<const std::size_t> index_map);

/// Evaluates f at the given images (one per variable of f's ring), all living
/// in the same target ring.
Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      std::span<const Polynomial> images);

/// Parses `3*x^2*y + z^3 - 1` style text. Parentheses and integer powers of
/// parenthesised sums are accepted too.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

bool is_power_of(std::uint64_t q, std::uint64_t p) noexcept;

}  // namespace frobforge
