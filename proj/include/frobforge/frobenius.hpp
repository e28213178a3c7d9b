#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobforge/homalg.hpp"

namespace frobforge {

/// e together with q = p^e.
class FrobeniusLevel {
 public:
  FrobeniusLevel(std::uint32_t p, unsigned e);
  unsigned e() const noexcept { return e_; }
  std::uint64_t q() const noexcept { return q_; }

 private:
  unsigned e_;
  std::uint64_t q_;
};

/// I^[q]: generated by the q-th powers of the given generators.
Ideal bracket_power(const Ideal& I, const FrobeniusLevel& level);
/// Entrywise q-th powers; degree shifts are multiplied by q.
GradedMatrix frobenius_matrix(const GradedMatrix& A, const FrobeniusLevel& level);
FreeComplex frobenius_complex(const FreeComplex& C, const FrobeniusLevel& level);
/// Column-wise q-th powers of a submodule's generators.
Submodule frobenius_submodule(const Submodule& N, const FrobeniusLevel& level);

/// {f in R : f^q in A}.
Ideal frobenius_preimage(const Ideal& A, const FrobeniusLevel& level);

struct Certification {
  enum class Kind { Exact, StabilizedHeuristic, BudgetExhausted };
  Kind kind = Kind::BudgetExhausted;
  /// First level of the constant run (StabilizedHeuristic), or the last
  /// level computed (BudgetExhausted).
  unsigned e = 0;
  unsigned window = 0;

  std::string label() const;
};

struct ClosureWitness {
  Polynomial element;
  unsigned e = 0;
  /// element^q = sum cofactors[i] * gens[i]^q in R.
  std::vector<Polynomial> cofactors;
};

struct ClosureResult {
  /// Input generators followed by the new minimal generators.
  Ideal closure;
  std::vector<ClosureWitness> witnesses;
  Certification certification;
  /// J_0, J_1, ... as computed.
  std::vector<Ideal> chain;
};

ClosureResult frobenius_closure(const Ideal& I, unsigned max_e = 6, unsigned window = 2);

/// Smallest e <= max_e with f^q in I^[q], if any.
std::optional<unsigned> frobenius_membership(const Polynomial& f, const Ideal& I,
                                             unsigned max_e);

/// Radical of I in R (the nilradical of R/I), as a Frobenius-preimage fixpoint.
Ideal char_p_radical(const Ideal& I);

struct FrobeniusMembership {
  enum class Status { Member, NotMember, Exhausted };
  Status status = Status::Exhausted;
  /// Level of membership (Member) or the last level tried (Exhausted).
  unsigned e = 0;
  /// With NotMember: the component whose entry avoids the radical.
  std::optional<std::size_t> witness_row;
};

/// Is v^[q] in N^[q] for some e <= max_e?
FrobeniusMembership submodule_frobenius_membership(const Submodule::Vector& v,
                                                   const Submodule& N, unsigned max_e);

struct TightClosureEvidence {
  Polynomial element;
  Ideal ideal;
  Polynomial multiplier;
  unsigned e_from = 0;
  unsigned e_to = 0;
  /// passed[k] refers to level e_from + k.
  std::vector<bool> passed;
  bool all_passed = false;
  /// How the multiplier was accepted.
  std::string multiplier_check;
};

/// c is accepted when it is nonzero modulo the nilradical and a
/// nonzerodivisor on R_red; throws InvalidArgument otherwise.
bool valid_multiplier(const Ring& R, const Polynomial& c);
TightClosureEvidence tight_closure_evidence(const Polynomial& x, const Ideal& I,
                                            const Polynomial& c, unsigned e_from,
                                            unsigned e_to);

}  // namespace frobforge
