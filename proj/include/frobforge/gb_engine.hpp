#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobforge/polynomial.hpp"

/// Buchberger engine over finite free modules P^r with a position-over-term
/// order; component 0 is the most significant position. Ideals are the rank-1
/// case. All input must be homogeneous for the ring's variable weights plus
/// the per-component degree shifts.
namespace frobforge::gb {

struct ModTerm {
  Monomial mono;
  std::uint32_t comp;
  Coeff coeff;
};

/// Terms strictly descending under the module order, no zero coefficients.
using ModVec = std::vector<ModTerm>;

struct Space {
  RingPtr ring;
  std::vector<std::int64_t> shifts;

  Space() = default;
  Space(RingPtr r, std::vector<std::int64_t> s)
      : ring(std::move(r)), shifts(std::move(s)) {}
  /// Rank-1 space with zero shift.
  explicit Space(RingPtr r) : ring(std::move(r)), shifts{0} {}

  std::size_t rank() const noexcept { return shifts.size(); }
  int compare(const ModTerm& a, const ModTerm& b) const noexcept {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return ring->compare(a.mono, b.mono);
  }
  std::int64_t degree(const ModTerm& t) const noexcept {
    return t.mono.degree + shifts[t.comp];
  }
};

ModVec from_polynomial(const Polynomial& f, std::uint32_t comp = 0);
ModVec from_entries(const Space& space, std::span<const Polynomial> entries);
/// Terms of `v` landing in components [first, first + count), renumbered
/// from zero.
std::vector<Polynomial> to_entries(const Space& space, const ModVec& v,
                                   std::size_t first, std::size_t count);
std::vector<Polynomial> to_entries(const Space& space, const ModVec& v);
Polynomial to_polynomial(const Space& space, const ModVec& v);

ModVec normalize(const Space& space, std::vector<ModTerm> terms);
ModVec add(const Space& space, const ModVec& a, const ModVec& b);
/// a - c * m * b.
ModVec sub_mul(const Space& space, const ModVec& a, Coeff c, const Monomial& m,
               const ModVec& b);
ModVec scale(const Space& space, const ModVec& a, Coeff c);
bool is_homogeneous(const Space& space, const ModVec& v);

struct Options {
  /// Ignore pairs and inputs above this (shifted) degree; the result is then
  /// a degree-truncated basis.
  std::optional<std::int64_t> max_degree;
  bool reduce_tails = true;
};

/// A reduced Groebner basis: monic, inter-reduced, ascending by leading term.
class Basis {
 public:
  Basis() = default;
  Basis(Space space, std::vector<ModVec> elements, bool complete);

  const Space& space() const noexcept { return space_; }
  const std::vector<ModVec>& elements() const noexcept { return elements_; }
  bool complete() const noexcept { return complete_; }
  bool is_zero() const noexcept { return elements_.empty(); }

  ModVec normal_form(const ModVec& v) const;
  bool reduces_to_zero(const ModVec& v) const;

  /// Leading monomials landing in component c.
  std::vector<Monomial> leading_monomials(std::uint32_t comp) const;

 private:
  const ModVec* find_reducer(const ModTerm& t, std::uint32_t mask) const;

  Space space_;
  std::vector<ModVec> elements_;
  std::vector<std::uint32_t> masks_;
  bool complete_ = true;
};

struct Input {
  ModVec vec;
  /// Uncounted inputs are processed first within their degree, so the
  /// `minimal` report only covers counted inputs that are not generated by
  /// everything of lower degree plus the uncounted ones.
  bool counted = true;
};

struct Result {
  Basis basis;
  /// Indices of counted inputs that survived reduction at their degree.
  std::vector<std::size_t> minimal;
};

/// Throws InhomogeneousInput, BudgetExceeded.
Result compute(const Space& space, std::vector<Input> inputs,
               const Options& options = {});

}  // namespace frobforge::gb
