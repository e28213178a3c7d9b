#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "frobforge/gb_engine.hpp"
#include "frobforge/polynomial.hpp"

namespace frobforge {

/// R = P / I0 with P = F_p[x_1..x_n]; I0 may be empty. The irrelevant ideal
/// (x_1..x_n) plays the role of the maximal ideal.
class RingDescriptor {
 public:
  RingDescriptor(RingPtr poly, std::vector<Polynomial> quotient);

  static std::shared_ptr<const RingDescriptor> make(
      std::uint32_t p, std::vector<std::string> vars,
      std::vector<std::string> quotient = {},
      MonomialOrder order = MonomialOrder::grevlex(),
      std::vector<std::int64_t> weights = {});
  static std::shared_ptr<const RingDescriptor> over(
      RingPtr poly, std::vector<Polynomial> quotient = {});

  const RingPtr& poly() const noexcept { return poly_; }
  std::uint32_t characteristic() const noexcept {
    return poly_->characteristic();
  }
  std::size_t nvars() const noexcept { return poly_->nvars(); }
  const std::vector<Polynomial>& quotient_gens() const noexcept {
    return quotient_;
  }
  /// Reduced Groebner basis of I0 in P.
  const gb::Basis& quotient_basis() const noexcept { return quotient_basis_; }
  bool is_polynomial_ring() const noexcept { return quotient_basis_.is_zero(); }

  Polynomial parse(std::string_view text) const;
  Polynomial variable(std::size_t i) const;
  Polynomial zero() const { return Polynomial(poly_); }
  Polynomial one() const { return Polynomial::constant(poly_, 1); }
  /// Canonical representative of f modulo I0.
  Polynomial reduce(const Polynomial& f) const;
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }

  /// P itself viewed as a ring descriptor.
  std::shared_ptr<const RingDescriptor> ambient() const;
  /// R / (extra), presented over the same P.
  std::shared_ptr<const RingDescriptor> quotient_by(
      const std::vector<Polynomial>& extra) const;

  std::string to_string() const;

 private:
  RingPtr poly_;
  std::vector<Polynomial> quotient_;
  gb::Basis quotient_basis_;
};

using Ring = std::shared_ptr<const RingDescriptor>;

/// Same polynomial ring and same quotient ideal.
bool same_ring(const Ring& a, const Ring& b);

void require_homogeneous(const Polynomial& f, const char* what);

/// An ideal of R given by generators in P. Its Groebner basis is that of the
/// lifted ideal gens + I0 in P, computed on first use and shared by copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(Ring ring, std::vector<Polynomial> gens);
  static Ideal zero(Ring ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(const Ring& ring) { return Ideal(ring, {ring->one()}); }
  static Ideal parse(const Ring& ring, const std::vector<std::string>& gens);
  static Ideal maximal(const Ring& ring);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }

  const gb::Basis& basis() const;
  /// Reduced Groebner basis of gens + I0 as polynomials.
  std::vector<Polynomial> gb_polys() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& J) const;
  bool equals(const Ideal& J) const;
  /// I = R.
  bool is_unit() const;
  /// I = 0 in R.
  bool is_zero() const;

  Ideal operator+(const Ideal& J) const;
  Ideal operator*(const Ideal& J) const;
  Ideal with(const std::vector<Polynomial>& extra) const;
  /// Same generators, now generating gens + I0 in P (quotient dropped).
  Ideal lifted() const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    gb::Basis basis;
  };
  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Column span inside the graded free module R^rank with basis degrees
/// `row_degrees`: a column c is homogeneous of degree deg(c_i) + row_degrees[i]
/// for every nonzero entry.
class Submodule {
 public:
  using Vector = std::vector<Polynomial>;

  Submodule() = default;
  /// Column degrees are inferred when omitted; zero columns then get 0.
  Submodule(Ring ring, std::vector<std::int64_t> row_degrees,
            std::vector<Vector> columns, std::vector<std::int64_t> col_degrees = {});

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return row_degrees_.size(); }
  const std::vector<std::int64_t>& row_degrees() const noexcept {
    return row_degrees_;
  }
  const std::vector<Vector>& columns() const noexcept { return columns_; }
  const std::vector<std::int64_t>& column_degrees() const noexcept {
    return col_degrees_;
  }
  gb::Space space() const { return gb::Space(ring_->poly(), row_degrees_); }

  /// Basis of columns + I0 * R^rank in P^rank.
  const gb::Basis& basis() const;
  bool contains(const Vector& v) const;
  Vector normal_form(const Vector& v) const;
  /// The submodule is all of R^rank.
  bool is_everything() const;

  /// Basis of the graph module spanned by (column_j ; e_j) plus I0 multiples,
  /// over P^(rank + columns) with the column part last.
  const gb::Basis& lift_basis() const;

 private:

  struct Cache {
    std::once_flag once;
    gb::Basis basis;
    std::once_flag lift_once;
    gb::Basis lift_basis;
  };
  Ring ring_;
  std::vector<std::int64_t> row_degrees_;
  std::vector<Vector> columns_;
  std::vector<std::int64_t> col_degrees_;
  std::shared_ptr<Cache> cache_;
};

std::int64_t vector_degree(const Submodule::Vector& v,
                           const std::vector<std::int64_t>& row_degrees);

/// Reduced basis of an ideal (of gens + I0).
std::vector<Polynomial> buchberger(const Ideal& I);
/// Reduced basis of a submodule (columns + I0 multiples), as vectors.
std::vector<Submodule::Vector> buchberger(const Submodule& M);

Polynomial normal_form(const Polynomial& f, const Ideal& I);

/// (I : J).
Ideal colon_ideal(const Ideal& I, const Ideal& J);
/// (I : f^infinity).
Ideal saturation(const Ideal& I, const Polynomial& f);
/// (I : J^infinity).
Ideal saturation(const Ideal& I, const Ideal& J);
/// I + I0 intersected with the subring omitting `drop_vars`.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_vars);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

/// Preimage of A under the map source -> A.ring() sending variable j of the
/// source polynomial ring to images[j]. The source's own quotient is ignored;
/// the target quotient is added to A.
Ideal ring_map_preimage(const Ideal& A, const std::vector<Polynomial>& images,
                        const Ring& source);

/// Distinguished dimension of the zero ring.
inline constexpr int kEmptyDimension = -1;

/// dim R / I.
int krull_dimension(const Ideal& I);
int krull_dimension(const Ring& R);
/// Dimension of P / (monomials), given as leading monomials.
int monomial_dimension(const std::vector<Monomial>& monomials, std::size_t nvars);
/// Krull dimension of R^rank / M.
int quotient_dimension(const Submodule& M);

/// Kernel of the column map R^m -> R^rank, minimally generated (graded
/// Nakayama), with basis degrees equal to the column degrees of M.
Submodule syzygy_module(const Submodule& M);

/// Coefficients c with sum c_j * column_j = v in R^rank, if any.
std::optional<Submodule::Vector> lift(const Submodule::Vector& v,
                                      const Submodule& M);
bool submodule_membership(const Submodule::Vector& v, const Submodule& M);

/// Minimal homogeneous generators of (I + I0) / I0, picked from the given
/// generators.
std::vector<Polynomial> minimal_generators(const Ideal& I);
/// Minimal generating columns of M modulo I0.
std::vector<Submodule::Vector> minimal_generators(const Submodule& M);

/// ann(R^rank / M).
Ideal annihilator(const Submodule& M);

/// (I : f) = I, i.e. f is a nonzerodivisor on R / I.
bool is_nonzerodivisor(const Polynomial& f, const Ideal& I);

}  // namespace frobforge
