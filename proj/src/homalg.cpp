#include "frobforge/homalg.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "frobforge/errors.hpp"

namespace frobforge {

// ---------------------------------------------------------------------------
// GradedMatrix

GradedMatrix::GradedMatrix(Ring ring, std::vector<std::int64_t> row_degrees,
                           std::vector<std::int64_t> col_degrees)
    : ring_(std::move(ring)),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      entries_(row_degrees_.size() * col_degrees_.size(), Polynomial(ring_->poly())) {}

GradedMatrix::GradedMatrix(Ring ring, std::vector<std::int64_t> row_degrees,
                           std::vector<std::int64_t> col_degrees,
                           std::vector<std::vector<Polynomial>> rows)
    : GradedMatrix(std::move(ring), std::move(row_degrees), std::move(col_degrees)) {
  if (rows.size() != this->rows()) throw InvalidArgument("matrix row count mismatch");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols()) throw InvalidArgument("matrix column count mismatch");
    for (std::size_t j = 0; j < cols(); ++j) set(i, j, rows[i][j]);
  }
}

GradedMatrix GradedMatrix::with_inferred_columns(Ring ring,
                                                 std::vector<std::int64_t> row_degrees,
                                                 std::vector<std::vector<Polynomial>> rows,
                                                 std::size_t ncols) {
  std::vector<std::int64_t> cd(ncols, 0);
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].at(j).is_zero()) {
        cd[j] = rows[i][j].degree() + row_degrees.at(i);
        break;
      }
    }
  }
  return GradedMatrix(std::move(ring), std::move(row_degrees), std::move(cd), std::move(rows));
}

GradedMatrix GradedMatrix::from_columns(Ring ring, std::vector<std::int64_t> row_degrees,
                                        std::vector<std::int64_t> col_degrees,
                                        const std::vector<Submodule::Vector>& columns) {
  GradedMatrix A(std::move(ring), std::move(row_degrees), std::move(col_degrees));
  if (columns.size() != A.cols()) throw InvalidArgument("matrix column count mismatch");
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != A.rows()) throw InvalidArgument("matrix row count mismatch");
    for (std::size_t i = 0; i < A.rows(); ++i) A.set(i, j, columns[j][i]);
  }
  return A;
}

GradedMatrix GradedMatrix::identity(Ring ring, std::vector<std::int64_t> degrees) {
  GradedMatrix I(ring, degrees, degrees);
  for (std::size_t i = 0; i < degrees.size(); ++i) I.set(i, i, ring->one());
  return I;
}

void GradedMatrix::set(std::size_t i, std::size_t j, const Polynomial& f) {
  Polynomial g = f.has_ring() ? ring_->reduce(f) : Polynomial(ring_->poly());
  if (!g.is_zero()) {
    if (!g.ring().same_as(*ring_->poly())) throw AmbientMismatch("matrix entry in another ring");
    require_homogeneous(g, "matrix entry");
    if (g.degree() != col_degrees_[j] - row_degrees_[i]) {
      throw InhomogeneousInput("matrix entry " + g.to_string() + " at (" + std::to_string(i) +
                               "," + std::to_string(j) + ") has the wrong degree");
    }
  }
  entries_[i * cols() + j] = std::move(g);
}

Submodule::Vector GradedMatrix::column(std::size_t j) const {
  Submodule::Vector v;
  v.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) v.push_back(at(i, j));
  return v;
}

std::vector<Submodule::Vector> GradedMatrix::columns() const {
  std::vector<Submodule::Vector> out;
  for (std::size_t j = 0; j < cols(); ++j) out.push_back(column(j));
  return out;
}

Submodule GradedMatrix::image() const {
  return Submodule(ring_, row_degrees_, columns(), col_degrees_);
}

GradedMatrix GradedMatrix::transpose() const {
  std::vector<std::int64_t> rd, cd;
  for (auto d : col_degrees_) rd.push_back(-d);
  for (auto d : row_degrees_) cd.push_back(-d);
  GradedMatrix T(ring_, rd, cd);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) T.entries_[j * rows() + i] = at(i, j);
  }
  return T;
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& B) const {
  if (cols() != B.rows()) throw InvalidArgument("matrix product size mismatch");
  // The inner grading offset carries over to the product's columns.
  std::int64_t delta = cols() == 0 ? 0 : col_degrees_[0] - B.row_degrees_[0];
  std::vector<std::int64_t> cd;
  for (auto d : B.col_degrees_) cd.push_back(d + delta);
  GradedMatrix C(ring_, row_degrees_, cd);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < B.cols(); ++j) {
      Polynomial s(ring_->poly());
      for (std::size_t k = 0; k < cols(); ++k) {
        const auto& a = at(i, k);
        const auto& b = B.at(k, j);
        if (!a.is_zero() && !b.is_zero()) s += a * b;
      }
      C.set(i, j, s);
    }
  }
  return C;
}

GradedMatrix GradedMatrix::operator-(const GradedMatrix& B) const {
  if (rows() != B.rows() || cols() != B.cols()) {
    throw InvalidArgument("matrix difference size mismatch");
  }
  GradedMatrix C = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    C.entries_[k] = ring_->reduce(entries_[k] - B.entries_[k]);
  }
  return C;
}

bool GradedMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& f) { return f.is_zero(); });
}

bool GradedMatrix::entries_in_max_ideal() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const Polynomial& f) { return f.is_unit(); });
}

bool GradedMatrix::operator==(const GradedMatrix& B) const {
  return rows() == B.rows() && cols() == B.cols() && entries_ == B.entries_;
}

std::string GradedMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string();
    }
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// FreeComplex

FreeComplex::FreeComplex(Ring ring, std::vector<std::int64_t> f0_degrees)
    : ring_(std::move(ring)), degrees_{std::move(f0_degrees)} {}

FreeComplex::FreeComplex(Ring ring, std::vector<GradedMatrix> differentials)
    : ring_(std::move(ring)), diffs_(std::move(differentials)) {
  if (diffs_.empty()) throw InvalidArgument("complex needs a differential or an F_0");
  degrees_.push_back(diffs_[0].row_degrees());
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (!same_ring(diffs_[k].ring(), ring_)) throw AmbientMismatch("differential in another ring");
    if (k > 0 && diffs_[k].row_degrees() != diffs_[k - 1].col_degrees()) {
      throw InvalidArgument("differentials do not compose: module degrees differ");
    }
    degrees_.push_back(diffs_[k].col_degrees());
  }
}

std::vector<std::size_t> FreeComplex::betti() const {
  std::vector<std::size_t> b;
  for (const auto& d : degrees_) b.push_back(d.size());
  return b;
}

bool FreeComplex::is_complex() const {
  for (std::size_t k = 1; k < diffs_.size(); ++k) {
    if (!(diffs_[k - 1] * diffs_[k]).is_zero()) return false;
  }
  return true;
}

bool ChainMap::commutes() const {
  for (std::size_t i = 1; i < levels.size() && i <= source.length(); ++i) {
    GradedMatrix right = levels[i - 1] * source.differential(i);
    if (i <= target.length()) {
      GradedMatrix left = target.differential(i) * levels[i];
      if (!(left - right).is_zero()) return false;
    } else if (!right.is_zero()) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Koszul complexes

namespace {

std::vector<std::uint32_t> subsets_of_size(std::size_t n, std::size_t k) {
  // Lexicographic order on sorted index lists.
  std::vector<std::uint32_t> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return out;
  for (;;) {
    std::uint32_t m = 0;
    for (auto i : idx) m |= 1u << i;
    out.push_back(m);
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == n - k + t - 1) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
  return out;
}

}  // namespace

FreeComplex koszul_complex(const Ring& R, const std::vector<Polynomial>& seq) {
  const std::size_t n = seq.size();
  if (n > 16) throw InvalidArgument("Koszul complex on more than 16 elements");
  std::vector<std::int64_t> deg(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!seq[i].is_zero()) require_homogeneous(seq[i], "Koszul sequence element");
    deg[i] = seq[i].is_zero() ? 0 : seq[i].degree();
  }
  if (n == 0) return FreeComplex(R, std::vector<std::int64_t>{0});
  std::vector<std::vector<std::uint32_t>> bases(n + 1);
  std::vector<std::vector<std::int64_t>> degs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    bases[k] = subsets_of_size(n, k);
    for (auto m : bases[k]) {
      std::int64_t d = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (m >> i & 1u) d += deg[i];
      }
      degs[k].push_back(d);
    }
  }
  std::vector<GradedMatrix> diffs;
  for (std::size_t k = 1; k <= n; ++k) {
    GradedMatrix d(R, degs[k - 1], degs[k]);
    std::unordered_map<std::uint32_t, std::size_t> row_index;
    for (std::size_t r = 0; r < bases[k - 1].size(); ++r) row_index[bases[k - 1][r]] = r;
    for (std::size_t c = 0; c < bases[k].size(); ++c) {
      const std::uint32_t S = bases[k][c];
      int t = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(S >> i & 1u)) continue;
        Polynomial e = (t % 2 == 0) ? seq[i] : -seq[i];
        d.set(row_index.at(S & ~(1u << i)), c, e);
        ++t;
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(R, std::move(diffs));
}

// ---------------------------------------------------------------------------
// Minors and rank

namespace {

/// Visits the t x t minors of A (reduced mod I0) until `visit` returns false.
template <typename Visit>
void for_each_minor(const GradedMatrix& A, int t, Visit&& visit) {
  const Ring& R = A.ring();
  const std::size_t r = A.rows(), c = A.cols();
  if (c > 30) throw InvalidArgument("minors of matrices with more than 30 columns");
  const auto row_sets = subsets_of_size(r, static_cast<std::size_t>(t));
  std::vector<std::vector<std::uint32_t>> col_levels(t + 1);
  for (int k = 1; k <= t; ++k) col_levels[k] = subsets_of_size(c, static_cast<std::size_t>(k));
  for (auto rows_mask : row_sets) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < r; ++i) {
      if (rows_mask >> i & 1u) rows.push_back(i);
    }
    // D[mask] = det(rows[0..|mask|) x mask) by expansion along the last row.
    std::unordered_map<std::uint32_t, Polynomial> prev, cur;
    for (auto m : col_levels[1]) {
      prev.emplace(m, A.at(rows[0], static_cast<std::size_t>(std::countr_zero(m))));
    }
    for (int k = 2; k <= t; ++k) {
      cur.clear();
      const std::size_t row = rows[static_cast<std::size_t>(k - 1)];
      for (auto m : col_levels[k]) {
        Polynomial s(R->poly());
        int pos = 0;
        for (std::size_t j = 0; j < c; ++j) {
          if (!(m >> j & 1u)) continue;
          const auto& a = A.at(row, j);
          if (!a.is_zero()) {
            const auto& sub = prev.at(m & ~(1u << j));
            if (!sub.is_zero()) {
              Polynomial term = a * sub;
              if ((pos + k - 1) % 2 == 0) s += term; else s -= term;
            }
          }
          ++pos;
        }
        cur.emplace(m, R->reduce(s));
      }
      std::swap(prev, cur);
    }
    for (auto m : col_levels[t]) {
      if (!visit(prev.at(m))) return;
    }
  }
}

}  // namespace

Ideal minors_ideal(const GradedMatrix& A, int t) {
  const Ring& R = A.ring();
  if (t <= 0) return Ideal::unit(R);
  if (static_cast<std::size_t>(t) > std::min(A.rows(), A.cols())) return Ideal::zero(R);
  std::vector<Polynomial> minors;
  for_each_minor(A, t, [&](const Polynomial& m) {
    if (!m.is_zero()) minors.push_back(m);
    return true;
  });
  return Ideal(R, std::move(minors));
}

int matrix_rank(const GradedMatrix& A) {
  const int limit = static_cast<int>(std::min(A.rows(), A.cols()));
  for (int t = 1; t <= limit; ++t) {
    bool found = false;
    for_each_minor(A, t, [&](const Polynomial& m) {
      found = !m.is_zero();
      return !found;
    });
    if (!found) return t - 1;
  }
  return limit;
}

// ---------------------------------------------------------------------------
// Homology

namespace {

Submodule kernel_of(const FreeComplex& C, std::size_t i) {
  if (i == 0) {
    const auto& d = C.degrees(0);
    std::vector<Submodule::Vector> cols;
    for (std::size_t k = 0; k < d.size(); ++k) {
      Submodule::Vector e(d.size(), C.ring()->zero());
      e[k] = C.ring()->one();
      cols.push_back(std::move(e));
    }
    return Submodule(C.ring(), d, std::move(cols), d);
  }
  return syzygy_module(C.differential(i).image());
}

Submodule image_in(const FreeComplex& C, std::size_t i) {
  if (i + 1 <= C.length()) return C.differential(i + 1).image();
  return Submodule(C.ring(), C.degrees(i), {}, {});
}

}  // namespace

bool homology_vanishes(const FreeComplex& C, std::size_t i) {
  if (i > C.length()) return true;
  if (C.rank(i) == 0) return true;
  Submodule K = kernel_of(C, i);
  if (K.columns().empty()) return true;
  Submodule B = image_in(C, i);
  for (const auto& k : K.columns()) {
    if (!B.contains(k)) return false;
  }
  return true;
}

HomologyResult complex_homology(const FreeComplex& C, std::size_t i) {
  if (i > C.length()) throw InvalidArgument("homology index out of range");
  const Ring& R = C.ring();
  HomologyResult out;
  Submodule K = C.rank(i) == 0 ? Submodule(R, C.degrees(i), {}, {}) : kernel_of(C, i);
  const auto& kd = K.column_degrees();
  std::vector<Submodule::Vector> rel;
  if (!K.columns().empty()) {
    Submodule B = image_in(C, i);
    Submodule gens(R, C.degrees(i), K.columns(), kd);
    for (const auto& b : B.columns()) {
      auto c = lift(b, gens);
      if (!c) throw Error("image of the next differential is not inside the kernel");
      rel.push_back(std::move(*c));
    }
    Submodule syz = syzygy_module(gens);
    for (const auto& s : syz.columns()) rel.push_back(s);
  }
  out.presentation = Submodule(R, kd, std::move(rel));
  out.dimension = quotient_dimension(out.presentation);
  out.vanishes = out.dimension == kEmptyDimension;
  out.finite_length = out.dimension <= 0;
  return out;
}

// ---------------------------------------------------------------------------
// Grade and acyclicity

namespace {

/// Koszul homology test H_j(gens) = 0 for j in (k - needed, k].
bool top_koszul_vanish(const Ring& R, const std::vector<Polynomial>& gens, int needed) {
  FreeComplex K = koszul_complex(R, gens);
  const int k = static_cast<int>(gens.size());
  for (int j = k; j > k - needed; --j) {
    if (!homology_vanishes(K, static_cast<std::size_t>(j))) return false;
  }
  return true;
}

}  // namespace

int grade(const Ideal& I) {
  if (I.is_unit()) throw InvalidArgument("grade of the unit ideal");
  auto gens = minimal_generators(I);
  const int k = static_cast<int>(gens.size());
  if (k == 0) return 0;
  FreeComplex K = koszul_complex(I.ring(), gens);
  for (int j = k; j >= 1; --j) {
    if (!homology_vanishes(K, static_cast<std::size_t>(j))) return k - j;
  }
  return k;
}

bool grade_at_least(const Ideal& I, int k) {
  if (k <= 0 || I.is_unit()) return true;
  auto gens = minimal_generators(I);
  if (static_cast<int>(gens.size()) < k) return false;
  return top_koszul_vanish(I.ring(), gens, k);
}

AcyclicityVerdict buchsbaum_eisenbud_acyclic(const FreeComplex& C) {
  AcyclicityVerdict v;
  const std::size_t n = C.length();
  v.ranks.assign(n + 2, 0);
  for (std::size_t i = 1; i <= n; ++i) v.ranks[i] = matrix_rank(C.differential(i));
  for (std::size_t i = 1; i <= n; ++i) {
    if (v.ranks[i] + v.ranks[i + 1] != static_cast<int>(C.rank(i))) {
      v.failure = AcyclicityVerdict::Failure::Rank;
      v.index = i;
      v.ranks = std::vector<int>(v.ranks.begin() + 1, v.ranks.begin() + 1 + static_cast<std::ptrdiff_t>(n));
      return v;
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    Ideal Ir = minors_ideal(C.differential(i), v.ranks[i]);
    if (!grade_at_least(Ir, static_cast<int>(i))) {
      v.failure = AcyclicityVerdict::Failure::Grade;
      v.index = i;
      v.ranks = std::vector<int>(v.ranks.begin() + 1, v.ranks.begin() + 1 + static_cast<std::ptrdiff_t>(n));
      return v;
    }
  }
  v.acyclic = true;
  v.ranks = std::vector<int>(v.ranks.begin() + 1, v.ranks.begin() + 1 + static_cast<std::ptrdiff_t>(n));
  return v;
}

// ---------------------------------------------------------------------------
// Tensor and dual

FreeComplex tensor_complexes(const FreeComplex& C, const FreeComplex& D) {
  if (!same_ring(C.ring(), D.ring())) throw AmbientMismatch("tensor of complexes over different rings");
  const Ring& R = C.ring();
  const std::size_t nc = C.length(), nd = D.length(), n = nc + nd;
  // Block (i, k - i) with i ascending; inside a block, index a * rank(D_j) + b.
  auto blocks = [&](std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i <= std::min(k, nc); ++i) {
      if (k - i <= nd) out.push_back({i, k - i});
    }
    return out;
  };
  std::vector<std::vector<std::int64_t>> degs(n + 1);
  std::vector<std::vector<std::size_t>> offsets(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (auto [i, j] : blocks(k)) {
      offsets[k].push_back(degs[k].size());
      for (auto da : C.degrees(i)) {
        for (auto db : D.degrees(j)) degs[k].push_back(da + db);
      }
    }
  }
  if (n == 0) return FreeComplex(R, degs[0]);
  std::vector<GradedMatrix> diffs;
  for (std::size_t k = 1; k <= n; ++k) {
    GradedMatrix d(R, degs[k - 1], degs[k]);
    auto src = blocks(k);
    auto dst = blocks(k - 1);
    auto dst_offset = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
      for (std::size_t b = 0; b < dst.size(); ++b) {
        if (dst[b].first == i && dst[b].second == j) return offsets[k - 1][b];
      }
      return std::nullopt;
    };
    for (std::size_t sb = 0; sb < src.size(); ++sb) {
      auto [i, j] = src[sb];
      const std::size_t so = offsets[k][sb];
      const std::size_t rc = C.rank(i), rd = D.rank(j);
      if (i >= 1) {
        auto to = dst_offset(i - 1, j);
        const auto& dc = C.differential(i);
        for (std::size_t a = 0; a < rc; ++a) {
          for (std::size_t a2 = 0; a2 < C.rank(i - 1); ++a2) {
            const auto& e = dc.at(a2, a);
            if (e.is_zero()) continue;
            for (std::size_t b = 0; b < rd; ++b) d.set(*to + a2 * rd + b, so + a * rd + b, e);
          }
        }
      }
      if (j >= 1) {
        auto to = dst_offset(i, j - 1);
        const auto& dd = D.differential(j);
        const std::size_t rd2 = D.rank(j - 1);
        for (std::size_t a = 0; a < rc; ++a) {
          for (std::size_t b = 0; b < rd; ++b) {
            for (std::size_t b2 = 0; b2 < rd2; ++b2) {
              const auto& e = dd.at(b2, b);
              if (e.is_zero()) continue;
              d.set(*to + a * rd2 + b2, so + a * rd + b, (i % 2 == 0) ? e : -e);
            }
          }
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(R, std::move(diffs));
}

FreeComplex dual_complex(const FreeComplex& C) {
  const std::size_t n = C.length();
  if (n == 0) {
    std::vector<std::int64_t> d;
    for (auto x : C.degrees(0)) d.push_back(-x);
    return FreeComplex(C.ring(), d);
  }
  std::vector<GradedMatrix> diffs;
  for (std::size_t k = 1; k <= n; ++k) diffs.push_back(C.differential(n - k + 1).transpose());
  return FreeComplex(C.ring(), std::move(diffs));
}

// ---------------------------------------------------------------------------
// Resolutions

Submodule cyclic_presentation(const Ideal& I) {
  std::vector<Submodule::Vector> cols;
  for (const auto& g : I.gens()) cols.push_back({g});
  return Submodule(I.ring(), {0}, std::move(cols));
}

Submodule lift_to_ambient(const Submodule& N) {
  const Ring& R = N.ring();
  Ring P = R->ambient();
  std::vector<Submodule::Vector> cols = N.columns();
  std::vector<std::int64_t> cd = N.column_degrees();
  for (const auto& g : R->quotient_gens()) {
    for (std::size_t i = 0; i < N.rank(); ++i) {
      Submodule::Vector v(N.rank(), P->zero());
      v[i] = g;
      cols.push_back(std::move(v));
      cd.push_back(g.degree() + N.row_degrees()[i]);
    }
  }
  return Submodule(P, N.row_degrees(), std::move(cols), std::move(cd));
}

namespace {

/// Removes unit entries by row and column operations (first unit in a
/// row-major scan), so the remaining columns present the same module with
/// every entry in the irrelevant ideal.
void prune_units(const Ring& R, std::vector<std::int64_t>& row_deg,
                 std::vector<Submodule::Vector>& cols, std::vector<std::int64_t>& col_deg) {
  const auto& F = R->poly()->field();
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = 0; i < row_deg.size() && !pivot; ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j][i].is_unit()) {
          pivot = {i, j};
          break;
        }
      }
    }
    if (!pivot) return;
    auto [pi, pj] = *pivot;
    const Coeff uinv = F.inv(cols[pj][pi].leading_term().coeff);
    const Submodule::Vector pcol = cols[pj];
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j == pj || cols[j][pi].is_zero()) continue;
      Polynomial factor = cols[j][pi].scaled(uinv);
      for (std::size_t i = 0; i < row_deg.size(); ++i) {
        if (!pcol[i].is_zero()) cols[j][i] = R->reduce(cols[j][i] - factor * pcol[i]);
      }
    }
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pj));
    col_deg.erase(col_deg.begin() + static_cast<std::ptrdiff_t>(pj));
    for (auto& c : cols) c.erase(c.begin() + static_cast<std::ptrdiff_t>(pi));
    row_deg.erase(row_deg.begin() + static_cast<std::ptrdiff_t>(pi));
  }
}

}  // namespace

ResolutionResult minimal_free_resolution(const Submodule& N, std::size_t max_steps) {
  const Ring& R = N.ring();
  std::vector<std::int64_t> row_deg = N.row_degrees();
  std::vector<Submodule::Vector> cols;
  std::vector<std::int64_t> col_deg;
  for (std::size_t j = 0; j < N.columns().size(); ++j) {
    Submodule::Vector c = N.columns()[j];
    bool nonzero = false;
    for (auto& e : c) {
      e = R->reduce(e);
      nonzero = nonzero || !e.is_zero();
    }
    if (!nonzero) continue;
    cols.push_back(std::move(c));
    col_deg.push_back(N.column_degrees()[j]);
  }
  prune_units(R, row_deg, cols, col_deg);
  ResolutionResult res;
  // Drop columns that became zero, then pick minimal generators.
  std::vector<Submodule::Vector> kept;
  std::vector<std::int64_t> kept_deg;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (std::any_of(cols[j].begin(), cols[j].end(), [](const Polynomial& f) { return !f.is_zero(); })) {
      kept.push_back(cols[j]);
      kept_deg.push_back(col_deg[j]);
    }
  }
  Submodule first(R, row_deg, kept, kept_deg);
  auto mins = minimal_generators(first);
  if (mins.empty() || max_steps == 0) {
    res.complex = FreeComplex(R, row_deg);
    res.terminated = mins.empty();
    res.betti = res.complex.betti();
    return res;
  }
  Submodule gens(R, row_deg, std::move(mins));
  std::vector<GradedMatrix> diffs;
  diffs.push_back(GradedMatrix::from_columns(R, row_deg, gens.column_degrees(), gens.columns()));
  for (;;) {
    Submodule syz = syzygy_module(diffs.back().image());
    if (syz.columns().empty()) {
      res.terminated = true;
      break;
    }
    if (diffs.size() >= max_steps) break;
    diffs.push_back(GradedMatrix::from_columns(R, syz.row_degrees(), syz.column_degrees(),
                                               syz.columns()));
  }
  res.complex = FreeComplex(R, std::move(diffs));
  res.betti = res.complex.betti();
  return res;
}

ResolutionResult minimal_free_resolution(const Ideal& I, std::size_t max_steps) {
  return minimal_free_resolution(cyclic_presentation(I), max_steps);
}

namespace {

int ambient_pd(const Submodule& N) {
  Submodule L = lift_to_ambient(N);
  auto res = minimal_free_resolution(L, L.ring()->nvars() + 1);
  if (!res.terminated) throw Error("resolution over the polynomial ring did not terminate");
  if (res.complex.rank(0) == 0) throw InvalidArgument("depth of the zero module");
  return static_cast<int>(res.complex.length());
}

}  // namespace

int depth_graded(const Submodule& N) {
  return static_cast<int>(N.ring()->nvars()) - ambient_pd(N);
}

int depth_graded(const Ideal& I) { return depth_graded(cyclic_presentation(I)); }

int depth_graded(const Ring& R) { return depth_graded(Ideal::zero(R)); }

std::optional<int> projective_dimension(const Submodule& N) {
  const Ring& R = N.ring();
  if (R->is_polynomial_ring()) {
    auto res = minimal_free_resolution(N, R->nvars() + 1);
    if (!res.terminated) throw Error("resolution over the polynomial ring did not terminate");
    return static_cast<int>(res.complex.length());
  }
  const int d = depth_graded(R);
  auto res = minimal_free_resolution(N, static_cast<std::size_t>(d) + 1);
  if (res.terminated) return static_cast<int>(res.complex.length());
  return std::nullopt;
}

std::optional<int> projective_dimension(const Ideal& I) {
  return projective_dimension(cyclic_presentation(I));
}

std::string pd_to_string(const std::optional<int>& pd) {
  return pd ? std::to_string(*pd) : std::string("infinite");
}

// ---------------------------------------------------------------------------
// Chain maps

namespace {

GradedMatrix lift_through(const GradedMatrix& V, const GradedMatrix& d,
                          std::vector<std::int64_t> col_degrees, const char* what) {
  Submodule im = d.image();
  GradedMatrix out(V.ring(), d.col_degrees(), std::move(col_degrees));
  for (std::size_t j = 0; j < V.cols(); ++j) {
    auto c = lift(V.column(j), im);
    if (!c) throw NoLift(std::string(what) + ": column " + std::to_string(j) + " does not lift");
    for (std::size_t a = 0; a < c->size(); ++a) out.set(a, j, (*c)[a]);
  }
  return out;
}

std::vector<std::int64_t> shifted(const std::vector<std::int64_t>& d, std::int64_t s) {
  std::vector<std::int64_t> out = d;
  for (auto& x : out) x += s;
  return out;
}

}  // namespace

ChainMap lift_chain_map(const FreeComplex& G, const FreeComplex& L,
                        const GradedMatrix& phi0, std::int64_t shift) {
  if (phi0.rows() != L.rank(0) || phi0.cols() != G.rank(0)) {
    throw InvalidArgument("phi0 has the wrong shape");
  }
  ChainMap phi{G, L, {phi0}, shift};
  for (std::size_t i = 1; i <= G.length(); ++i) {
    GradedMatrix V = phi.levels[i - 1] * G.differential(i);
    if (i > L.length()) {
      if (!V.is_zero()) throw NoLift("chain map leaves the target complex");
      phi.levels.emplace_back(G.ring(), std::vector<std::int64_t>{},
                              shifted(G.degrees(i), shift));
      continue;
    }
    phi.levels.push_back(lift_through(V, L.differential(i), shifted(G.degrees(i), shift),
                                      "chain map lift"));
  }
  return phi;
}

std::vector<GradedMatrix> lift_homotopy(const ChainMap& phi) {
  const FreeComplex& G = phi.source;
  const FreeComplex& L = phi.target;
  std::vector<GradedMatrix> h;
  for (std::size_t i = 0; i < phi.levels.size(); ++i) {
    GradedMatrix W = phi.levels[i];
    if (i >= 1) W = W - h[i - 1] * G.differential(i);
    if (i + 1 > L.length()) {
      if (!W.is_zero()) throw NoLift("no homotopy: map is nonzero past the target length");
      h.emplace_back(G.ring(), std::vector<std::int64_t>{}, shifted(G.degrees(i), phi.shift));
      continue;
    }
    h.push_back(lift_through(W, L.differential(i + 1), shifted(G.degrees(i), phi.shift),
                             "homotopy lift"));
  }
  return h;
}

std::vector<HomologyResult> ext_over_ambient(const Submodule& N) {
  Submodule L = lift_to_ambient(N);
  auto res = minimal_free_resolution(L, L.ring()->nvars() + 1);
  if (!res.terminated) throw Error("resolution over the polynomial ring did not terminate");
  FreeComplex D = dual_complex(res.complex);
  const std::size_t pd = res.complex.length();
  std::vector<HomologyResult> out;
  for (std::size_t i = 0; i <= pd; ++i) out.push_back(complex_homology(D, pd - i));
  return out;
}

}  // namespace frobforge
