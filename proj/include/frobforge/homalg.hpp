#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobforge/groebner.hpp"

namespace frobforge {

/// Matrix over R whose entry (i, j) is zero or homogeneous of degree
/// col_degrees[j] - row_degrees[i].
class GradedMatrix {
 public:
  GradedMatrix() = default;
  /// Zero matrix.
  GradedMatrix(Ring ring, std::vector<std::int64_t> row_degrees,
               std::vector<std::int64_t> col_degrees);
  /// Validates the grading.
  GradedMatrix(Ring ring, std::vector<std::int64_t> row_degrees,
               std::vector<std::int64_t> col_degrees,
               std::vector<std::vector<Polynomial>> rows);
  /// Column degrees inferred from the entries (zero columns get degree 0).
  static GradedMatrix with_inferred_columns(Ring ring,
                                            std::vector<std::int64_t> row_degrees,
                                            std::vector<std::vector<Polynomial>> rows,
                                            std::size_t ncols);
  static GradedMatrix from_columns(Ring ring, std::vector<std::int64_t> row_degrees,
                                   std::vector<std::int64_t> col_degrees,
                                   const std::vector<Submodule::Vector>& columns);
  static GradedMatrix identity(Ring ring, std::vector<std::int64_t> degrees);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return row_degrees_.size(); }
  std::size_t cols() const noexcept { return col_degrees_.size(); }
  const std::vector<std::int64_t>& row_degrees() const noexcept { return row_degrees_; }
  const std::vector<std::int64_t>& col_degrees() const noexcept { return col_degrees_; }

  const Polynomial& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols() + j];
  }
  /// Sets an entry, reduced modulo I0; checks its degree.
  void set(std::size_t i, std::size_t j, const Polynomial& f);

  Submodule::Vector column(std::size_t j) const;
  std::vector<Submodule::Vector> columns() const;
  /// Column span as a submodule of R^rows.
  Submodule image() const;

  GradedMatrix transpose() const;
  /// Entries are reduced modulo I0.
  GradedMatrix operator*(const GradedMatrix& other) const;
  GradedMatrix operator-(const GradedMatrix& other) const;
  bool is_zero() const;
  /// Every entry lies in the irrelevant ideal.
  bool entries_in_max_ideal() const;
  bool operator==(const GradedMatrix& other) const;

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<std::int64_t> row_degrees_;
  std::vector<std::int64_t> col_degrees_;
  std::vector<Polynomial> entries_;
};

/// 0 -> F_n -> ... -> F_1 -> F_0 -> 0 with differential(i) : F_i -> F_{i-1}.
class FreeComplex {
 public:
  FreeComplex() = default;
  /// A single free module in homological degree 0.
  FreeComplex(Ring ring, std::vector<std::int64_t> f0_degrees);
  /// differentials[k] is d_{k+1}; module degrees are read off the matrices.
  FreeComplex(Ring ring, std::vector<GradedMatrix> differentials);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t length() const noexcept { return diffs_.size(); }
  /// d_i for 1 <= i <= length.
  const GradedMatrix& differential(std::size_t i) const { return diffs_.at(i - 1); }
  const std::vector<GradedMatrix>& differentials() const noexcept { return diffs_; }
  std::size_t rank(std::size_t i) const { return degrees_.at(i).size(); }
  const std::vector<std::int64_t>& degrees(std::size_t i) const { return degrees_.at(i); }
  /// b_0, ..., b_n.
  std::vector<std::size_t> betti() const;

  /// d_{i-1} d_i = 0 for every i.
  bool is_complex() const;

 private:
  Ring ring_;
  std::vector<GradedMatrix> diffs_;
  std::vector<std::vector<std::int64_t>> degrees_;
};

/// phi_i : G_i -> L_i of internal degree `shift`.
struct ChainMap {
  FreeComplex source;
  FreeComplex target;
  std::vector<GradedMatrix> levels;
  std::int64_t shift = 0;

  bool commutes() const;
};

struct ResolutionResult {
  FreeComplex complex;
  bool minimal = true;
  bool terminated = false;
  std::vector<std::size_t> betti;
};

/// Koszul complex with basis e_S of each exterior power ordered
/// lexicographically; d(e_S) = sum_k (-1)^k f_{s_k} e_{S \ s_k}.
FreeComplex koszul_complex(const Ring& R, const std::vector<Polynomial>& seq);

/// I_t(A); unit ideal for t <= 0, zero ideal beyond the matrix size.
Ideal minors_ideal(const GradedMatrix& A, int t);
/// Largest r with I_r(A) nonzero in R.
int matrix_rank(const GradedMatrix& A);

/// Grade of a proper ideal on R, by Koszul homology on minimal generators.
int grade(const Ideal& I);
/// grade(I) >= k, with the unit ideal counting as infinite grade.
bool grade_at_least(const Ideal& I, int k);

struct AcyclicityVerdict {
  enum class Failure { None, Rank, Grade };
  bool acyclic = false;
  Failure failure = Failure::None;
  /// Index i of the first violated condition.
  std::size_t index = 0;
  /// r_1 .. r_n.
  std::vector<int> ranks;
};

AcyclicityVerdict buchsbaum_eisenbud_acyclic(const FreeComplex& C);

struct HomologyResult {
  bool vanishes = false;
  /// H_i = R^g / relations, g = number of kernel generators.
  Submodule presentation;
  int dimension = kEmptyDimension;
  bool finite_length = true;
};

/// Cheap test for H_i = 0.
bool homology_vanishes(const FreeComplex& C, std::size_t i);
HomologyResult complex_homology(const FreeComplex& C, std::size_t i);

FreeComplex tensor_complexes(const FreeComplex& C, const FreeComplex& D);
/// G_k = Hom(F_{n-k}, R) with differential the transpose of d_{n-k+1}.
FreeComplex dual_complex(const FreeComplex& C);

/// Module R^r / N given by the columns of N.
ResolutionResult minimal_free_resolution(const Submodule& N, std::size_t max_steps);
/// R / I.
ResolutionResult minimal_free_resolution(const Ideal& I, std::size_t max_steps);

/// Presentation of R/I as a quotient of R^1.
Submodule cyclic_presentation(const Ideal& I);
/// N + I0 R^r, presented over the ambient polynomial ring.
Submodule lift_to_ambient(const Submodule& N);

/// nullopt stands for infinite projective dimension.
std::optional<int> projective_dimension(const Submodule& N);
std::optional<int> projective_dimension(const Ideal& I);
std::string pd_to_string(const std::optional<int>& pd);

/// depth of R^r / N (default: R itself) as n - pd_P.
int depth_graded(const Ring& R);
int depth_graded(const Submodule& N);
int depth_graded(const Ideal& I);

/// Extends phi0 : G_0 -> L_0 to a chain map; throws NoLift.
ChainMap lift_chain_map(const FreeComplex& G, const FreeComplex& L,
                        const GradedMatrix& phi0, std::int64_t shift = 0);
/// h_i : G_i -> L_{i+1} with phi_i = d h_i + h_{i-1} d; throws NoLift.
std::vector<GradedMatrix> lift_homotopy(const ChainMap& phi);

/// Ext^i_P(R^r/N, P) for i = 0..pd_P, from the dualized minimal resolution
/// over the ambient polynomial ring.
std::vector<HomologyResult> ext_over_ambient(const Submodule& N);

}  // namespace frobforge
