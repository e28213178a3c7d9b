#include "frobforge/serrecheck.hpp"

#include <algorithm>
#include <cstdlib>

#include "frobforge/errors.hpp"
#include "frobforge/frobenius.hpp"

namespace frobforge {

std::string to_string(Equidimensional e) {
  switch (e) {
    case Equidimensional::Yes:
      return "Yes";
    case Equidimensional::No:
      return "No";
    case Equidimensional::Asserted:
      return "Asserted";
    case Equidimensional::Undecided:
      return "Undecided";
  }
  return "?";
}

std::string SerreVerdict::label() const {
  std::string s = std::string(property == Property::R ? "R_" : "S_") + std::to_string(k);
  s += holds ? " holds" : " fails";
  if (!holds && property == Property::S && witness_index) {
    s += " (Ext^" + std::to_string(*witness_index) + " has dimension " +
         std::to_string(witness_dimension.value_or(kEmptyDimension)) + ")";
  }
  if (!holds && property == Property::R && witness_dimension) {
    s += " (singular locus of dimension " + std::to_string(*witness_dimension) + ")";
  }
  return s;
}

namespace {

void require_proper(const Ring& R) {
  if (Ideal::zero(R).is_unit()) throw InvalidArgument("the zero ring has no ring properties");
}

/// Ext^i_P(R, P) for i = 0..pd_P R together with their annihilators in P.
struct ExtData {
  std::vector<HomologyResult> ext;
  std::vector<Ideal> ann;
};

ExtData ext_data(const Ring& R) {
  ExtData d;
  d.ext = ext_over_ambient(cyclic_presentation(Ideal::zero(R)));
  const Ring P = R->ambient();
  for (const auto& h : d.ext) {
    d.ann.push_back(h.vanishes ? Ideal::unit(P) : annihilator(h.presentation));
  }
  return d;
}

Equidimensional equidimensional_from(const Ring& R, const ExtData& d) {
  const int n = static_cast<int>(R->nvars());
  const int c = n - krull_dimension(R);
  const Ring P = R->ambient();
  // A minimal prime of height i is minimal over ann Ext^i and avoids every
  // ann Ext^j with j < i; embedded primes of height i contain one of those.
  for (int i = c + 1; i < static_cast<int>(d.ext.size()); ++i) {
    if (d.ext[i].vanishes) continue;
    Ideal T = Ideal::unit(P);
    for (int j = 0; j < i; ++j) {
      if (!d.ext[j].vanishes) T = T * d.ann[j];
    }
    if (krull_dimension(saturation(d.ann[i], T)) == n - i) return Equidimensional::No;
  }
  return Equidimensional::Yes;
}

}  // namespace

Equidimensional equidimensional(const Ring& R) {
  require_proper(R);
  try {
    return equidimensional_from(R, ext_data(R));
  } catch (const BudgetExceeded&) {
    return Equidimensional::Undecided;
  }
}

RingProfile ring_profile(const Ring& R, bool assert_equidimensional) {
  require_proper(R);
  RingProfile prof;
  prof.ring = R;
  prof.dim = krull_dimension(R);
  prof.depth = depth_graded(R);
  prof.codim = static_cast<int>(R->nvars()) - prof.dim;
  prof.cm = prof.depth == prof.dim;
  prof.equidimensional = assert_equidimensional ? Equidimensional::Asserted : equidimensional(R);
  return prof;
}

SerreVerdict serre_S(const Ring& R, int k) {
  require_proper(R);
  SerreVerdict v;
  v.property = SerreVerdict::Property::S;
  v.k = k;
  if (k <= 0) return v;
  const int n = static_cast<int>(R->nvars());
  const int c = n - krull_dimension(R);
  ExtData d = ext_data(R);
  const int top = static_cast<int>(d.ext.size());
  if (k == 1) {
    // S_1 means no embedded primes. An associated prime of height i is
    // embedded iff it also lies over ann Ext^j for some j < i.
    for (int i = 1; i < top; ++i) {
      if (d.ext[i].vanishes) continue;
      for (int j = 0; j < i; ++j) {
        if (d.ext[j].vanishes) continue;
        if (krull_dimension(d.ann[i] + d.ann[j]) == n - i) {
          v.holds = false;
          v.witness_index = i;
          v.witness_dimension = d.ext[i].dimension;
          return v;
        }
      }
    }
    return v;
  }
  for (int i = c + 1; i < top; ++i) {
    if (d.ext[i].vanishes) continue;
    if (d.ext[i].dimension > n - i - k) {
      v.holds = false;
      v.witness_index = i;
      v.witness_dimension = d.ext[i].dimension;
      return v;
    }
  }
  return v;
}

GradedMatrix jacobian_matrix(const Ring& R) {
  std::vector<Polynomial> gens;
  for (const auto& g : R->quotient_gens()) {
    if (!g.is_zero()) gens.push_back(g);
  }
  const auto& w = R->poly()->weights();
  std::vector<std::int64_t> rows, cols;
  for (const auto& g : gens) rows.push_back(-g.degree());
  for (std::size_t j = 0; j < R->nvars(); ++j) cols.push_back(-w[j]);
  GradedMatrix J(R, rows, cols);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < R->nvars(); ++j) {
      Polynomial d = gens[i].derivative(j);
      if (!d.is_zero()) J.set(i, j, d);
    }
  }
  return J;
}

Ideal singular_locus_ideal(const Ring& R, Equidimensional status) {
  if (status != Equidimensional::Yes && status != Equidimensional::Asserted) {
    throw InvalidArgument("the Jacobian criterion needs an equidimensional ring (status " +
                          to_string(status) + ")");
  }
  require_proper(R);
  const int c = static_cast<int>(R->nvars()) - krull_dimension(R);
  if (c == 0) return Ideal::unit(R);
  return minors_ideal(jacobian_matrix(R), c);
}

Ideal singular_locus_ideal(const Ring& R) {
  return singular_locus_ideal(R, equidimensional(R));
}

SerreVerdict serre_R(const Ring& R, int k, Equidimensional status) {
  Ideal L = singular_locus_ideal(R, status);
  SerreVerdict v;
  v.property = SerreVerdict::Property::R;
  v.k = k;
  const int dl = krull_dimension(L);
  v.witness_dimension = dl;
  if (dl == kEmptyDimension) return v;
  v.holds = krull_dimension(R) - dl >= k + 1;
  return v;
}

SerreVerdict serre_R(const Ring& R, int k) { return serre_R(R, k, equidimensional(R)); }

bool is_reduced(const Ring& R) { return char_p_radical(Ideal::zero(R)).is_zero(); }

NormalVerdict is_normal(const Ring& R, Equidimensional status) {
  NormalVerdict v;
  v.r1 = serre_R(R, 1, status);
  v.s2 = serre_S(R, 2);
  v.holds = v.r1.holds && v.s2.holds;
  return v;
}

NormalVerdict is_normal(const Ring& R) { return is_normal(R, equidimensional(R)); }

namespace {

bool is_monomial_basis(const std::vector<Polynomial>& gb) {
  return std::all_of(gb.begin(), gb.end(), [](const Polynomial& g) { return g.terms().size() == 1; });
}

unsigned total_exponent(const Monomial& m) {
  unsigned s = 0;
  for (auto e : m.exps) s += e;
  return s;
}

bool is_variable(const Polynomial& g) {
  return g.terms().size() == 1 && total_exponent(g.terms()[0].mono) == 1;
}

bool is_linear(const Polynomial& g) {
  return std::all_of(g.terms().begin(), g.terms().end(),
                     [](const Term& t) { return total_exponent(t.mono) == 1; });
}

/// Z^n / (row span) is torsion-free: every diagonal entry left by
/// unimodular row and column operations is a unit.
bool lattice_saturated(std::vector<std::vector<std::int64_t>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  while (r < rows && r < cols) {
    std::size_t pi = r, pj = r;
    std::int64_t best = 0;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
          best = std::llabs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(m[r], m[pi]);
    for (auto& row : m) std::swap(row[r], row[pj]);
    bool clean = true;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t f = m[i][r] / m[r][r];
      for (std::size_t j = r; j < cols; ++j) m[i][j] -= f * m[r][j];
      clean = clean && m[i][r] == 0;
    }
    for (std::size_t j = r + 1; j < cols; ++j) {
      const std::int64_t f = m[r][j] / m[r][r];
      for (std::size_t i = r; i < rows; ++i) m[i][j] -= f * m[i][r];
      clean = clean && m[r][j] == 0;
    }
    if (!clean) continue;
    if (std::llabs(m[r][r]) != 1) return false;
    ++r;
  }
  return true;
}

// Nonzero linear forms up to scaling, homogeneous for the ring's weights,
// variables first; at most `cap` of them (nullopt if there are more).
std::optional<std::vector<Polynomial>> linear_forms(const Ring& P, std::size_t cap) {
  const std::size_t n = P->nvars();
  const std::uint64_t p = P->characteristic();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(P->variable(i));
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > 4 * cap * p) return std::nullopt;
  }
  const auto& w = P->poly()->weights();
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<std::uint64_t> digits(n);
    std::uint64_t x = code;
    std::size_t support = 0;
    for (std::size_t i = 0; i < n; ++i) {
      digits[i] = x % p;
      x /= p;
      support += digits[i] != 0;
    }
    if (support < 2) continue;
    std::size_t first = 0;
    while (digits[first] == 0) ++first;
    if (digits[first] != 1) continue;
    bool homogeneous = true;
    Polynomial f = P->zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (digits[i] == 0) continue;
      homogeneous = homogeneous && w[i] == w[first];
      f = f + P->variable(i).scaled(static_cast<Coeff>(digits[i]));
    }
    if (!homogeneous) continue;
    out.push_back(f);
    if (out.size() > cap) return std::nullopt;
  }
  return out;
}

/// Standard monomials of degree d outside the monomial ideal of `lead`.
std::vector<Monomial> standard_monomials(const PolyRing& P, const std::vector<Monomial>& lead, int d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(P.nvars(), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == e.size()) {
      e[i] = static_cast<std::uint32_t>(left);
      const Monomial m = P.monomial(e);
      if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); })) {
        out.push_back(m);
      }
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = static_cast<std::uint32_t>(k);
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Rank of a dense matrix over F_p (rows are modified).
std::size_t rank_mod_p(std::vector<std::vector<Coeff>> m, const PrimeField& F) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const Coeff inv = F.inv(m[r][c]);
    for (auto& x : m[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Coeff f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

/// J radical, standard graded, dim P/J = 1: J is prime iff the degree-zero
/// part A of (P/J)_l is a field, for a linear nonzerodivisor l. A is finite
/// and reduced, so it is a field iff its Frobenius-fixed subalgebra is F_p.
/// A is realised as (P/J)_D where multiplication by l is bijective onwards.
std::string closed_point_certificate(const Ideal& J, const PrimeBudget& budget) {
  const Ring& P = J.ring();
  const PolyRing& PR = *P->poly();
  if (!PR.standard_graded() || krull_dimension(J) != 1) return {};
  if (!char_p_radical(J).equals(J)) return {};
  auto forms = linear_forms(P, budget.max_linear_forms);
  if (!forms) return {};
  std::optional<Polynomial> l;
  for (const auto& c : *forms) {
    if (!J.contains(c) && colon_ideal(J, Ideal(P, {c})).equals(J)) {
      l = c;
      break;
    }
  }
  if (!l) return {};
  std::vector<Monomial> lead;
  for (const auto& g : J.gb_polys()) lead.push_back(g.leading_term().mono);
  // H is nondecreasing and stops growing for good at the first plateau.
  int D = 0;
  std::vector<Monomial> basis = standard_monomials(PR, lead, 0);
  for (;; ++D) {
    if (D > 24) return {};
    auto next = standard_monomials(PR, lead, D + 1);
    if (next.size() == basis.size()) break;
    basis = std::move(next);
  }
  const std::uint32_t p = PR.characteristic();
  const std::size_t d = basis.size();
  const auto top = standard_monomials(PR, lead, static_cast<int>(p) * D);
  if (top.size() != d) return {};
  auto coords = [&](const Polynomial& f) {
    std::vector<Coeff> v(d, 0);
    const Polynomial nf = J.normal_form(f);
    for (const auto& t : nf.terms()) {
      auto it = std::find(top.begin(), top.end(), t.mono);
      if (it == top.end()) throw InvalidArgument("normal form left the standard basis");
      v[static_cast<std::size_t>(it - top.begin())] = t.coeff;
    }
    return v;
  };
  // Columns: l^((p-1)D) b_j, then b_j^p; solving gives the Frobenius matrix X.
  const Polynomial shift = l->pow(static_cast<std::uint64_t>(p - 1) * static_cast<std::uint64_t>(D));
  std::vector<std::vector<Coeff>> G(d, std::vector<Coeff>(d)), Fm(d, std::vector<Coeff>(d));
  for (std::size_t j = 0; j < d; ++j) {
    const Polynomial b = Polynomial::term(P->poly(), basis[j], 1);
    const auto g = coords(shift * b);
    const auto f = coords(b.frobenius_power(p));
    for (std::size_t i = 0; i < d; ++i) {
      G[i][j] = g[i];
      Fm[i][j] = f[i];
    }
  }
  const PrimeField& F = PR.field();
  // Reduce [G | Fm] to [I | X].
  std::vector<std::vector<Coeff>> aug(d);
  for (std::size_t i = 0; i < d; ++i) {
    aug[i] = G[i];
    aug[i].insert(aug[i].end(), Fm[i].begin(), Fm[i].end());
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && aug[piv][c] == 0) ++piv;
    if (piv == d) return {};
    std::swap(aug[c], aug[piv]);
    const Coeff inv = F.inv(aug[c][c]);
    for (auto& x : aug[c]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const Coeff f = aug[i][c];
      for (std::size_t j = 0; j < 2 * d; ++j) aug[i][j] = F.sub(aug[i][j], F.mul(f, aug[c][j]));
    }
  }
  std::vector<std::vector<Coeff>> X(d, std::vector<Coeff>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) X[i][j] = F.sub(aug[i][d + j], i == j ? 1 : 0);
  }
  if (d - rank_mod_p(X, F) != 1) return {};
  return "one closed point (Frobenius-fixed part F_p)";
}

/// Sound primality proofs for special shapes; empty string if none applies.
std::string prime_certificate(const Ideal& J, const PrimeBudget& budget) {
  const Ring& P = J.ring();
  // P/J = k[other vars]/J' where the linear basis elements eliminate V.
  // The reduced basis keeps every other element free of V.
  std::vector<bool> in_v(P->nvars(), false);
  std::vector<Polynomial> rest;
  for (const auto& g : J.gb_polys()) {
    if (is_linear(g)) {
      const auto& lt = g.terms()[0].mono;
      for (std::size_t i = 0; i < P->nvars(); ++i) in_v[i] = in_v[i] || lt[i] != 0;
    } else {
      rest.push_back(g);
    }
  }
  if (rest.empty()) return "linear";

  if (std::all_of(rest.begin(), rest.end(), [](const Polynomial& g) { return g.terms().size() == 2; })) {
    Polynomial prod = P->one();
    for (std::size_t i = 0; i < P->nvars(); ++i) {
      if (!in_v[i]) prod = prod * P->variable(i);
    }
    std::vector<std::vector<std::int64_t>> lattice;
    for (const auto& b : rest) {
      std::vector<std::int64_t> row(P->nvars());
      for (std::size_t i = 0; i < P->nvars(); ++i) {
        row[i] = static_cast<std::int64_t>(b.terms()[0].mono[i]) -
                 static_cast<std::int64_t>(b.terms()[1].mono[i]);
      }
      lattice.push_back(std::move(row));
    }
    if (saturation(J, prod).equals(J) && lattice_saturated(lattice)) return "binomial lattice saturated";
  }

  // A single form of degree 2 or 3 is prime iff it has no linear factor.
  const auto& w = P->poly()->weights();
  if (rest.size() == 1 && std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 1; })) {
    const std::int64_t d = rest[0].degree();
    if (d == 2 || d == 3) {
      auto forms = linear_forms(P, budget.max_linear_forms);
      if (!forms) return {};
      for (const auto& l : *forms) {
        bool avoids_v = true;
        for (const auto& t : l.terms())
          for (std::size_t i = 0; i < P->nvars(); ++i) avoids_v = avoids_v && !(in_v[i] && t.mono[i] != 0);
        if (avoids_v && Ideal(P, {l}).contains(rest[0])) return {};
      }
      return "no linear factor";
    }
  }
  return closed_point_certificate(J, budget);
}

}  // namespace

MinimalPrimesResult minimal_primes(const Ideal& I, const PrimeBudget& budget) {
  const Ring& R = I.ring();
  const Ring P = R->ambient();
  MinimalPrimesResult out;
  std::vector<Polynomial> start = I.gens();
  for (const auto& g : R->quotient_gens()) start.push_back(g);
  std::vector<PrimeComponent> leaves;
  try {
    std::vector<Ideal> work{char_p_radical(Ideal(P, start))};
    std::size_t nodes = 0;
    while (!work.empty()) {
      Ideal J = work.back();
      work.pop_back();
      if (J.is_unit()) continue;
      if (++nodes > budget.max_nodes) return out;
      auto gb = J.gb_polys();
      std::optional<Polynomial> f;
      if (is_monomial_basis(gb)) {
        for (const auto& g : gb) {
          if (!is_variable(g)) {
            const auto& m = g.terms()[0].mono;
            std::size_t i = 0;
            while (m[i] == 0) ++i;
            f = P->variable(i);
            break;
          }
        }
        if (!f) {
          leaves.push_back({J, PrimeComponent::Tier::Certified, "monomial"});
          continue;
        }
      } else {
        std::string cert = prime_certificate(J, budget);
        if (!cert.empty()) {
          leaves.push_back({J, PrimeComponent::Tier::Certified, cert});
          continue;
        }
        auto forms = linear_forms(P, budget.max_linear_forms);
        std::vector<Polynomial> cands;
        if (forms) {
          cands = *forms;
        } else {
          for (std::size_t i = 0; i < P->nvars(); ++i) cands.push_back(P->variable(i));
        }
        for (const auto& c : cands) {
          if (J.contains(c)) continue;
          if (!colon_ideal(J, Ideal(P, {c})).equals(J)) {
            f = c;
            break;
          }
        }
        if (!f) {
          leaves.push_back({J, PrimeComponent::Tier::Probable, {}});
          continue;
        }
      }
      // J radical, so (J : f) = (J : f^infinity).
      Ideal A = colon_ideal(J, Ideal(P, {*f}));
      if (!out.split_witness) {
        for (const auto& g : A.gens()) {
          if (!J.contains(g)) {
            out.split_witness = std::make_pair(R->reduce(*f), R->reduce(g));
            break;
          }
        }
      }
      work.push_back(A);
      work.push_back(char_p_radical(J.with({*f})));
    }
  } catch (const BudgetExceeded&) {
    return out;
  }
  // Keep the minimal members.
  std::vector<PrimeComponent> kept;
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < leaves.size() && !drop; ++b) {
      if (a == b || !leaves[a].prime.contains(leaves[b].prime)) continue;
      drop = !leaves[b].prime.contains(leaves[a].prime) || b < a;
    }
    if (!drop) kept.push_back(leaves[a]);
  }
  for (auto& c : kept) {
    c.prime = Ideal(R, minimal_generators(Ideal(R, c.prime.gb_polys())));
  }
  std::sort(kept.begin(), kept.end(), [](const PrimeComponent& x, const PrimeComponent& y) {
    return x.prime.to_string() < y.prime.to_string();
  });
  out.components = std::move(kept);
  out.decided = true;
  return out;
}

DomainVerdict is_domain(const Ring& R, const PrimeBudget& budget) {
  DomainVerdict v;
  if (Ideal::zero(R).is_unit()) {
    v.status = DomainVerdict::Status::No;
    v.certificate = "zero ring";
    return v;
  }
  Ideal nil = char_p_radical(Ideal::zero(R));
  for (const auto& f : nil.gens()) {
    if (R->is_zero(f)) continue;
    Polynomial prev = R->reduce(f), cur = R->reduce(f * f);
    while (!cur.is_zero()) {
      prev = cur;
      cur = R->reduce(cur * f);
    }
    v.status = DomainVerdict::Status::No;
    v.certificate = "nilpotent element";
    v.witness = std::make_pair(R->reduce(f), prev);
    return v;
  }
  auto mp = minimal_primes(Ideal::zero(R), budget);
  if (!mp.decided) {
    v.certificate = "minimal primes out of budget";
    return v;
  }
  if (mp.components.size() > 1) {
    v.status = DomainVerdict::Status::No;
    v.certificate = std::to_string(mp.components.size()) + " minimal primes";
    v.witness = mp.split_witness;
    return v;
  }
  if (mp.components.size() == 1 && mp.components[0].tier == PrimeComponent::Tier::Certified) {
    v.status = DomainVerdict::Status::Yes;
    v.certificate = "reduced with one minimal prime (" + mp.components[0].certificate + ")";
    return v;
  }
  v.certificate = "single minimal prime, primality not certified";
  return v;
}

int depth_at_prime(const Ring& R, const Ideal& Q) {
  require_proper(R);
  if (Q.is_unit()) throw InvalidArgument("depth at the unit ideal");
  const int n = static_cast<int>(R->nvars());
  const Ring P = R->ambient();
  ExtData d = ext_data(R);
  Ideal lifted = Q.lifted();
  int local_pd = -1;
  for (int i = 0; i < static_cast<int>(d.ext.size()); ++i) {
    if (!d.ext[i].vanishes && lifted.contains(d.ann[i])) local_pd = i;
  }
  if (local_pd < 0) throw InvalidArgument("prime does not contain the defining ideal");
  return (n - krull_dimension(Q)) - local_pd;
}

std::optional<HeightResult> ideal_height(const Ideal& I, const PrimeBudget& budget) {
  const Ring& R = I.ring();
  if (I.is_unit()) throw InvalidArgument("height of the unit ideal");
  const int n = static_cast<int>(R->nvars());
  auto over = minimal_primes(I, budget);
  auto base = minimal_primes(Ideal::zero(R), budget);
  if (!over.decided || !base.decided) return std::nullopt;
  HeightResult h{n + 1, true};
  for (const auto& c : over.components) {
    h.certified = h.certified && c.tier == PrimeComponent::Tier::Certified;
    int below = n + 1;
    for (const auto& b : base.components) {
      if (c.prime.contains(b.prime)) {
        below = std::min(below, n - krull_dimension(b.prime));
        h.certified = h.certified && b.tier == PrimeComponent::Tier::Certified;
      }
    }
    h.height = std::min(h.height, (n - krull_dimension(c.prime)) - below);
  }
  return h;
}

}  // namespace frobforge
