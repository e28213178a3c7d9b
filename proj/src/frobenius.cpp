#include "frobforge/frobenius.hpp"

#include "frobforge/budget.hpp"
#include "frobforge/errors.hpp"

namespace frobforge {

FrobeniusLevel::FrobeniusLevel(std::uint32_t p, unsigned e) : e_(e), q_(1) {
  for (unsigned k = 0; k < e; ++k) {
    q_ *= p;
    if (q_ > (1ull << 31)) throw OverflowError("Frobenius level p^e does not fit a machine word");
  }
}

namespace {

FrobeniusLevel level_of(const Ring& R, unsigned e) { return FrobeniusLevel(R->characteristic(), e); }

Polynomial qpow(const Ring& R, const Polynomial& f, std::uint64_t q) {
  return R->reduce(f.frobenius_power(q));
}

}  // namespace

Ideal bracket_power(const Ideal& I, const FrobeniusLevel& level) {
  if (level.q() == 1) return I;
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.frobenius_power(level.q()));
  return Ideal(I.ring(), std::move(gens));
}

GradedMatrix frobenius_matrix(const GradedMatrix& A, const FrobeniusLevel& level) {
  const auto q = static_cast<std::int64_t>(level.q());
  if (q == 1) return A;
  std::vector<std::int64_t> rd = A.row_degrees(), cd = A.col_degrees();
  for (auto& d : rd) d *= q;
  for (auto& d : cd) d *= q;
  GradedMatrix B(A.ring(), rd, cd);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (!A.at(i, j).is_zero()) B.set(i, j, A.at(i, j).frobenius_power(level.q()));
    }
  }
  return B;
}

FreeComplex frobenius_complex(const FreeComplex& C, const FrobeniusLevel& level) {
  if (C.length() == 0) {
    std::vector<std::int64_t> d = C.degrees(0);
    for (auto& x : d) x *= static_cast<std::int64_t>(level.q());
    return FreeComplex(C.ring(), d);
  }
  std::vector<GradedMatrix> diffs;
  for (const auto& d : C.differentials()) diffs.push_back(frobenius_matrix(d, level));
  return FreeComplex(C.ring(), std::move(diffs));
}

Submodule frobenius_submodule(const Submodule& N, const FrobeniusLevel& level) {
  const auto q = static_cast<std::int64_t>(level.q());
  if (q == 1) return N;
  std::vector<std::int64_t> rd = N.row_degrees(), cd = N.column_degrees();
  for (auto& d : rd) d *= q;
  for (auto& d : cd) d *= q;
  std::vector<Submodule::Vector> cols;
  for (const auto& c : N.columns()) {
    Submodule::Vector v;
    for (const auto& x : c) v.push_back(qpow(N.ring(), x, level.q()));
    cols.push_back(std::move(v));
  }
  return Submodule(N.ring(), rd, std::move(cols), cd);
}

Ideal frobenius_preimage(const Ideal& A, const FrobeniusLevel& level) {
  if (level.q() == 1) return A;
  const Ring& R = A.ring();
  DegreeScale scale(static_cast<std::int64_t>(level.q()));
  if (A.is_unit()) return Ideal::unit(R);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < R->nvars(); ++i) {
    images.push_back(Polynomial::term(
        R->poly(), R->poly()->variable(i, static_cast<std::uint32_t>(level.q())), 1));
  }
  Ideal pre = ring_map_preimage(A, images, R);
  // The eliminated generators can sit in high degree; trim them while the
  // scaled cap is still in force.
  Ideal out(R, minimal_generators(Ideal(R, pre.gens())));
  out.basis();
  return out;
}

std::string Certification::label() const {
  switch (kind) {
    case Kind::Exact:
      return "Exact";
    case Kind::StabilizedHeuristic:
      return "StabilizedHeuristic(" + std::to_string(e) + ", " + std::to_string(window) + ")";
    case Kind::BudgetExhausted:
      return "BudgetExhausted(" + std::to_string(e) + ")";
  }
  return "?";
}

namespace {

/// Generators of J that are new modulo I (and I0), lowest degree first.
std::vector<Polynomial> new_generators(const Ideal& I, const Ideal& J) {
  const Ring& R = I.ring();
  std::vector<gb::Input> inputs;
  for (const auto& g : R->quotient_basis().elements()) inputs.push_back({g, false});
  for (const auto& g : I.gens()) inputs.push_back({gb::from_polynomial(g), false});
  const std::size_t offset = inputs.size();
  auto jg = J.gb_polys();
  for (const auto& g : jg) inputs.push_back({gb::from_polynomial(g), true});
  auto res = gb::compute(gb::Space(R->poly()), std::move(inputs));
  std::vector<Polynomial> out;
  for (auto k : res.minimal) out.push_back(jg[k - offset]);
  return out;
}

ClosureWitness make_witness(const Ideal& I, const Polynomial& w, unsigned e) {
  const Ring& R = I.ring();
  const auto lv = level_of(R, e);
  DegreeScale scale(static_cast<std::int64_t>(lv.q()));
  std::vector<Submodule::Vector> cols;
  for (const auto& g : I.gens()) cols.push_back({g.frobenius_power(lv.q())});
  Submodule B(R, {0}, std::move(cols));
  auto c = lift({qpow(R, w, lv.q())}, B);
  if (!c) throw Error("closure element has no Frobenius certificate");
  return {w, e, *c};
}

}  // namespace

ClosureResult frobenius_closure(const Ideal& I, unsigned max_e, unsigned window) {
  const Ring& R = I.ring();
  if (I.is_unit()) throw InvalidArgument("Frobenius closure of the unit ideal");
  if (window == 0) window = 1;
  ClosureResult out;
  out.chain.push_back(I);
  unsigned run_start = 0, run = 0;
  bool stabilized = false;
  for (unsigned e = 1; e <= max_e; ++e) {
    Ideal J = frobenius_preimage(bracket_power(I, level_of(R, e)), level_of(R, e));
    if (J.equals(out.chain.back())) {
      ++run;
    } else {
      run = 0;
      run_start = e;
    }
    out.chain.push_back(J);
    if (run >= window) {
      stabilized = true;
      break;
    }
  }
  const Ideal& last = out.chain.back();
  std::vector<Polynomial> gens = I.gens();
  for (const auto& g : new_generators(I, last)) {
    gens.push_back(g);
    // Witness at the first level where g shows up.
    unsigned first = 0;
    while (first < out.chain.size() && !out.chain[first].contains(g)) ++first;
    out.witnesses.push_back(make_witness(I, g, first));
  }
  out.closure = Ideal(R, std::move(gens));
  if (R->is_polynomial_ring()) {
    // Frobenius is flat over a regular ring, so every ideal is closed.
    if (!out.witnesses.empty()) throw Error("Frobenius closure grew over a regular ring");
    out.certification = {Certification::Kind::Exact, 0, window};
  } else if (stabilized) {
    out.certification = {Certification::Kind::StabilizedHeuristic, run_start, window};
  } else {
    out.certification = {Certification::Kind::BudgetExhausted,
                         static_cast<unsigned>(out.chain.size() - 1), window};
  }
  return out;
}

std::optional<unsigned> frobenius_membership(const Polynomial& f, const Ideal& I,
                                             unsigned max_e) {
  const Ring& R = I.ring();
  for (unsigned e = 0; e <= max_e; ++e) {
    const auto lv = level_of(R, e);
    DegreeScale scale(static_cast<std::int64_t>(lv.q()));
    if (bracket_power(I, lv).contains(f.frobenius_power(lv.q()))) return e;
  }
  return std::nullopt;
}

Ideal char_p_radical(const Ideal& I) {
  const Ring& R = I.ring();
  const auto lv = level_of(R, 1);
  Ideal cur = I;
  for (int step = 0; step < 64; ++step) {
    Ideal next = frobenius_preimage(cur, lv);
    if (next.equals(cur)) return Ideal(R, minimal_generators(cur));
    cur = Ideal(R, next.gb_polys());
  }
  throw BudgetExceeded(BudgetExceeded::Kind::Iterations, 64, "radical chain did not stabilize");
}

FrobeniusMembership submodule_frobenius_membership(const Submodule::Vector& v,
                                                   const Submodule& N, unsigned max_e) {
  const Ring& R = N.ring();
  FrobeniusMembership out;
  if (N.contains(v)) {
    out.status = FrobeniusMembership::Status::Member;
    return out;
  }
  // v^[q] in N^[q] forces v_k^q into the ideal of row k, hence v_k into its radical.
  for (std::size_t k = 0; k < N.rank(); ++k) {
    if (R->is_zero(v[k])) continue;
    std::vector<Polynomial> row;
    for (const auto& c : N.columns()) row.push_back(c[k]);
    Ideal rad = char_p_radical(Ideal(R, row));
    if (!rad.contains(v[k])) {
      out.status = FrobeniusMembership::Status::NotMember;
      out.witness_row = k;
      return out;
    }
  }
  for (unsigned e = 1; e <= max_e; ++e) {
    const auto lv = level_of(R, e);
    DegreeScale scale(static_cast<std::int64_t>(lv.q()));
    Submodule::Vector vq;
    for (const auto& x : v) vq.push_back(qpow(R, x, lv.q()));
    if (frobenius_submodule(N, lv).contains(vq)) {
      out.status = FrobeniusMembership::Status::Member;
      out.e = e;
      return out;
    }
    out.e = e;
  }
  out.status = FrobeniusMembership::Status::Exhausted;
  return out;
}

bool valid_multiplier(const Ring& R, const Polynomial& c) {
  Ideal nil = char_p_radical(Ideal::zero(R));
  if (c.is_zero() || nil.contains(c)) return false;
  return colon_ideal(nil, Ideal(R, {c})).equals(nil);
}

TightClosureEvidence tight_closure_evidence(const Polynomial& x, const Ideal& I,
                                            const Polynomial& c, unsigned e_from,
                                            unsigned e_to) {
  const Ring& R = I.ring();
  if (!valid_multiplier(R, c)) {
    throw InvalidArgument("multiplier is a zero divisor modulo the nilradical");
  }
  TightClosureEvidence ev{x, I, c, e_from, e_to, {}, true,
                          "nonzero and a nonzerodivisor modulo the nilradical"};
  for (unsigned e = e_from; e <= e_to; ++e) {
    const auto lv = level_of(R, e);
    DegreeScale scale(static_cast<std::int64_t>(lv.q()));
    bool ok = bracket_power(I, lv).contains(c * x.frobenius_power(lv.q()));
    ev.passed.push_back(ok);
    ev.all_passed = ev.all_passed && ok;
  }
  return ev;
}

}  // namespace frobforge
