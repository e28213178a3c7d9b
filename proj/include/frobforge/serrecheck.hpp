#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobforge/homalg.hpp"

namespace frobforge {

enum class Equidimensional { Yes, No, Asserted, Undecided };
std::string to_string(Equidimensional e);

struct RingProfile {
  Ring ring;
  int dim = 0;
  int depth = 0;
  int codim = 0;
  bool cm = false;
  Equidimensional equidimensional = Equidimensional::Undecided;
};

/// `assert_equidimensional` skips the computation and records Asserted.
RingProfile ring_profile(const Ring& R, bool assert_equidimensional = false);

/// Equidimensionality of R, read off the Ext modules over the ambient ring.
/// Undecided only when a budget runs out.
Equidimensional equidimensional(const Ring& R);

struct SerreVerdict {
  enum class Property { R, S };
  Property property = Property::S;
  int k = 0;
  bool holds = true;
  /// S_k: the offending Ext index; R_k: unused.
  std::optional<int> witness_index;
  /// S_k: dimension of that Ext module; R_k: dimension of the singular locus.
  std::optional<int> witness_dimension;

  std::string label() const;
};

SerreVerdict serre_S(const Ring& R, int k);

/// I0 + I_c(Jacobian) in R, c = codim. Throws InvalidArgument unless the
/// equidimensionality status is Yes or Asserted.
Ideal singular_locus_ideal(const Ring& R, Equidimensional status);
Ideal singular_locus_ideal(const Ring& R);

SerreVerdict serre_R(const Ring& R, int k, Equidimensional status);
SerreVerdict serre_R(const Ring& R, int k);

bool is_reduced(const Ring& R);

struct NormalVerdict {
  bool holds = false;
  SerreVerdict r1;
  SerreVerdict s2;
};

NormalVerdict is_normal(const Ring& R, Equidimensional status);
NormalVerdict is_normal(const Ring& R);

struct PrimeComponent {
  enum class Tier { Certified, Probable };
  Ideal prime;
  Tier tier = Tier::Probable;
  /// How a Certified leaf was recognized.
  std::string certificate;
};

struct MinimalPrimesResult {
  bool decided = false;
  std::vector<PrimeComponent> components;
  /// f, g outside the radical with f g inside it, from the first split.
  std::optional<std::pair<Polynomial, Polynomial>> split_witness;
};

struct PrimeBudget {
  std::size_t max_nodes = 64;
  /// Cap on linear forms tried per node when hunting zero divisors.
  std::size_t max_linear_forms = 400;
};

MinimalPrimesResult minimal_primes(const Ideal& I, const PrimeBudget& budget = {});

struct DomainVerdict {
  enum class Status { Yes, No, Undecided };
  Status status = Status::Undecided;
  std::string certificate;
  /// Nonzero f, g with f g = 0 in R.
  std::optional<std::pair<Polynomial, Polynomial>> witness;
};

DomainVerdict is_domain(const Ring& R, const PrimeBudget& budget = {});

/// depth R_Q for a homogeneous prime Q of R, via the Ext modules over P:
/// ht_P Q minus the largest i with Q in the support of Ext^i_P(R, P).
int depth_at_prime(const Ring& R, const Ideal& Q);

struct HeightResult {
  int height = 0;
  /// Every prime involved carries a Certified tier.
  bool certified = false;
};

/// ht I in R, from the minimal primes of I and of R; nullopt when the prime
/// search runs out of budget.
std::optional<HeightResult> ideal_height(const Ideal& I, const PrimeBudget& budget = {});

/// Partial derivative matrix of I0's generators, a graded matrix over R.
GradedMatrix jacobian_matrix(const Ring& R);

}  // namespace frobforge
