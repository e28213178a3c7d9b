#include <algorithm>
#include <chrono>

#include "frobforge/budget.hpp"
#include "frobforge/errors.hpp"
#include "frobforge/verifier.hpp"

namespace frobforge {

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "Pass";
    case CheckStatus::Fail:
      return "Fail";
    case CheckStatus::Undecided:
      return "Undecided";
  }
  return "?";
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Confirmed:
      return "Confirmed";
    case VerdictStatus::HypothesisFailed:
      return "HypothesisFailed";
    case VerdictStatus::CounterexampleCandidate:
      return "CounterexampleCandidate";
    case VerdictStatus::Undecided:
      return "Undecided";
  }
  return "?";
}

VerdictStatus aggregate(const std::vector<CheckResult>& hypotheses,
                        const std::vector<CheckResult>& conclusions) {
  bool hyp_undecided = false, definite = true;
  for (const auto& h : hypotheses) {
    if (h.status == CheckStatus::Fail) return VerdictStatus::HypothesisFailed;
    if (h.status == CheckStatus::Undecided) hyp_undecided = true;
    if (h.tier == Tier::Probable) definite = false;
  }
  if (hyp_undecided) return VerdictStatus::Undecided;
  bool concl_undecided = false;
  for (const auto& c : conclusions) {
    if (c.status == CheckStatus::Fail) {
      if (definite && c.tier != Tier::Probable) return VerdictStatus::CounterexampleCandidate;
      concl_undecided = true;
    }
    if (c.status == CheckStatus::Undecided) concl_undecided = true;
  }
  return concl_undecided ? VerdictStatus::Undecided : VerdictStatus::Confirmed;
}

namespace {

using Tag = Certificate::Tag;

CheckResult pass(std::string name, std::string detail, Tier tier = Tier::Exact) {
  return {std::move(name), CheckStatus::Pass, tier, std::move(detail)};
}
CheckResult fail(std::string name, std::string detail, Tier tier = Tier::Exact) {
  return {std::move(name), CheckStatus::Fail, tier, std::move(detail)};
}
CheckResult undecided(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::Undecided, Tier::Probable, std::move(detail)};
}
CheckResult check(std::string name, bool ok, std::string detail, Tier tier = Tier::Exact) {
  return ok ? pass(std::move(name), std::move(detail), tier)
            : fail(std::move(name), std::move(detail), tier);
}

/// Runs a check, mapping exhausted budgets to Undecided.
template <class F>
CheckResult guarded(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const BudgetExceeded& e) {
    return undecided(name, e.what());
  } catch (const NoLift& e) {
    return undecided(name, e.what());
  }
}

std::string seq_string(const std::vector<Polynomial>& seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ", ";
    s += seq[i].to_string();
  }
  return s + ")";
}

unsigned effective_max_e(std::uint32_t p, const VerifyBudgets& b) {
  unsigned e = 0;
  std::uint64_t q = p;
  while (e < b.max_e && q <= b.max_q) {
    ++e;
    q *= p;
  }
  return e;
}

struct Context {
  const Instance& inst;
  const VerifyBudgets& budgets;
  Ring R;
  Ideal I;
  Ring S;
  unsigned max_e;
  SeededRng rng;
  std::optional<std::optional<int>> pd_cache;

  const std::optional<int>& pd() {
    if (!pd_cache) pd_cache = projective_dimension(I);
    return *pd_cache;
  }
  const Certificate* probable(Tag tag) const {
    const auto* c = inst.find(tag);
    return c && c->tier == Tier::Probable ? c : nullptr;
  }
  /// pd as the hypotheses see it: an uncertified certificate is trusted.
  std::optional<int> pd_value() {
    if (const auto* c = probable(Tag::FinitePd)) return c->value;
    return pd();
  }
  std::uint64_t stream(std::string_view name) const { return rng.split(name).next(); }
};

bool hyp(TheoremVerdict& v, CheckResult r) {
  const bool ok = r.status == CheckStatus::Pass;
  v.hypotheses.push_back(std::move(r));
  return ok;
}
void concl(TheoremVerdict& v, CheckResult r) { v.conclusions.push_back(std::move(r)); }

CheckResult pd_hypothesis(Context& c) {
  const std::string name = "pd R/I finite";
  if (const auto* cert = c.probable(Tag::FinitePd)) {
    return pass(name, "uncertified pd = " + pd_to_string(cert->value), Tier::Probable);
  }
  return guarded(name, [&] {
    const auto& pd = c.pd();
    return check(name, pd.has_value(), "pd = " + pd_to_string(pd));
  });
}

/// Frobenius-closedness of J: a witness refutes it outright; otherwise the
/// tier follows the closure certification.
CheckResult closed_check(const std::string& name, const Ideal& J, const Context& c) {
  return guarded(name, [&] {
    auto res = frobenius_closure(J, c.max_e, c.budgets.window);
    if (!res.witnesses.empty()) {
      const auto& w = res.witnesses.front();
      return fail(name, "(" + w.element.to_string() + ")^q lies in the bracket power at e = " +
                            std::to_string(w.e));
    }
    switch (res.certification.kind) {
      case Certification::Kind::Exact:
        return pass(name, "closed: " + res.certification.label());
      case Certification::Kind::StabilizedHeuristic:
        return pass(name, "closed: " + res.certification.label(), Tier::Probable);
      case Certification::Kind::BudgetExhausted:
        break;
    }
    return undecided(name, res.certification.label());
  });
}

/// Folds per-sample checks into one result named `name`.
CheckResult combine(const std::string& name, const std::vector<CheckResult>& parts,
                    Tier pass_tier) {
  std::string detail = "sampled, " + std::to_string(parts.size()) + " witnesses";
  for (const auto& p : parts) {
    if (p.status == CheckStatus::Fail) return fail(name, p.name + ": " + p.detail, p.tier);
  }
  for (const auto& p : parts) {
    if (p.status == CheckStatus::Undecided) return undecided(name, p.name + ": " + p.detail);
  }
  Tier tier = pass_tier;
  for (const auto& p : parts) {
    if (p.tier == Tier::Probable) tier = Tier::Probable;
  }
  return pass(name, detail, tier);
}

/// Sampled maximal regular sequences on A and their thickenings (x^t).
std::vector<CheckResult> parameter_checks(const Ring& A, const Context& c, unsigned max_t,
                                          std::uint64_t seed) {
  std::vector<CheckResult> parts;
  const int depth = depth_graded(A);
  if (depth == 0) {
    parts.push_back(closed_check("(0)", Ideal::zero(A), c));
    return parts;
  }
  for (const auto& seq : sample_regular_sequences(A, static_cast<unsigned>(depth),
                                                  c.budgets.samples, seed)) {
    for (unsigned t = 1; t <= max_t; ++t) {
      std::vector<Polynomial> thick;
      for (const auto& y : seq.elements) thick.push_back(y.pow(t));
      parts.push_back(closed_check(seq_string(thick), Ideal(A, thick), c));
    }
  }
  return parts;
}

// ---------------------------------------------------------------------------

void run_acyclic_chain_map(Context& c, TheoremVerdict& v) {
  const Ring& R = c.R;
  FreeComplex L;
  std::string how;
  {
    auto res = minimal_free_resolution(c.I, R->nvars() + 2);
    if (res.terminated) {
      L = res.complex;
      how = "minimal resolution of R/I";
    } else {
      L = koszul_complex(R, minimal_generators(c.I));
      how = "Koszul complex on minimal generators";
    }
  }
  if (!hyp(v, guarded("L acyclic", [&] {
        auto be = buchsbaum_eisenbud_acyclic(L);
        return check("L acyclic", be.acyclic,
                     how + (be.acyclic ? "" : ", BE fails at index " + std::to_string(be.index)));
      })))
    return;
  const std::size_t d = L.length();

  // G: Koszul complex on d elements of I, so that w * I_1(b_1) stays in I.
  SeededRng rng = c.rng.split("G");
  const auto gens = minimal_generators(c.I);
  std::vector<Polynomial> ys;
  for (std::size_t j = 0; j < d; ++j) {
    Polynomial y = gens[j % gens.size()];
    if (j >= gens.size() || rng.below(3) == 0) {
      Polynomial m = random_form(R, static_cast<std::int64_t>(rng.below(2)), rng, 2);
      if (!m.is_zero()) y = R->reduce(y * m);
    }
    if (y.is_zero()) y = gens[j % gens.size()];
    ys.push_back(y);
  }
  FreeComplex G = koszul_complex(R, ys);

  Polynomial w = R->zero();
  unsigned level = 0;
  if (!hyp(v, guarded("im phi_0 in (im a_1)^F", [&] {
        auto closure = frobenius_closure(c.I, c.max_e, c.budgets.window);
        if (!closure.witnesses.empty()) {
          w = closure.witnesses.front().element;
        } else {
          Polynomial m = random_form(R, static_cast<std::int64_t>(rng.below(2)), rng, 2);
          w = R->reduce(gens.front() * (m.is_zero() ? R->one() : m));
        }
        auto e = frobenius_membership(w, c.I, c.max_e);
        if (!e) return undecided("im phi_0 in (im a_1)^F", "no level found for " + w.to_string());
        level = *e;
        return pass("im phi_0 in (im a_1)^F", "phi_0 = [" + w.to_string() + "], e = " + std::to_string(*e));
      })))
    return;

  ChainMap phi;
  if (!hyp(v, guarded("chain map G -> L", [&] {
        auto phi0 = GradedMatrix::with_inferred_columns(R, L.degrees(0), {{w}}, 1);
        phi = lift_chain_map(G, L, phi0, w.degree());
        return check("chain map G -> L", phi.commutes(), "G = Koszul" + seq_string(ys));
      })))
    return;

  const GradedMatrix& phid = phi.levels.at(d);
  const GradedMatrix& bd = G.differential(d);
  concl(v, guarded("im phi_d in (I_1(b_d) L_d)^F", [&] {
    std::vector<Polynomial> entries;
    for (std::size_t i = 0; i < bd.rows(); ++i)
      for (std::size_t j = 0; j < bd.cols(); ++j)
        if (!bd.at(i, j).is_zero()) entries.push_back(bd.at(i, j));
    Ideal J(R, entries);
    unsigned top = 0;
    for (std::size_t i = 0; i < phid.rows(); ++i) {
      for (std::size_t j = 0; j < phid.cols(); ++j) {
        const auto& f = phid.at(i, j);
        if (auto e = frobenius_membership(f, J, c.max_e)) {
          top = std::max(top, *e);
          continue;
        }
        if (!char_p_radical(J).contains(f)) {
          return fail("im phi_d in (I_1(b_d) L_d)^F", f.to_string() + " is outside the radical");
        }
        return undecided("im phi_d in (I_1(b_d) L_d)^F", f.to_string() + " not reached");
      }
    }
    return pass("im phi_d in (I_1(b_d) L_d)^F", "e = " + std::to_string(top));
  }));
  concl(v, guarded("im phi_d^dual in (im b_d^dual)^F", [&] {
    const std::string name = "im phi_d^dual in (im b_d^dual)^F";
    Submodule N = bd.transpose().image();
    unsigned top = 0;
    for (const auto& col : phid.transpose().columns()) {
      auto m = submodule_frobenius_membership(col, N, c.max_e);
      if (m.status == FrobeniusMembership::Status::NotMember) {
        return fail(name, "row " + std::to_string(*m.witness_row) + " avoids the radical");
      }
      if (m.status == FrobeniusMembership::Status::Exhausted) {
        return undecided(name, "exhausted at e = " + std::to_string(m.e));
      }
      top = std::max(top, m.e);
    }
    return pass(name, "e = " + std::to_string(top));
  }));
  concl(v, guarded("F(L) acyclic", [&] {
    FrobeniusLevel lv(R->characteristic(), std::max(level, 1u));
    DegreeScale scale(static_cast<std::int64_t>(lv.q()));
    auto be = buchsbaum_eisenbud_acyclic(frobenius_complex(L, lv));
    return check("F(L) acyclic", be.acyclic, "e = " + std::to_string(lv.e()));
  }));
}

void run_quotient_closed(Context& c, TheoremVerdict& v) {
  const std::size_t n = c.R->nvars();
  const std::size_t idx = n >= 2 ? (n - 2 + c.inst.seed) % n : 0;
  Ideal J = c.I.with({c.R->variable(idx)});
  Ideal Jbar(c.S, {c.S->variable(idx)});
  v.note = "J = I + (" + c.R->variable(idx).to_string() + ")";
  if (!hyp(v, closed_check("image of J Frobenius closed in R/I", Jbar, c))) return;
  concl(v, closed_check("J Frobenius closed in R", J, c));
}

/// Nonzerodivisors on R/I; empty when depth R/I = 0.
std::vector<Polynomial> sampled_nzds(Context& c) {
  std::vector<Polynomial> out;
  if (depth_graded(c.S) == 0) return out;
  for (auto& s : sample_regular_sequences(c.S, 1, c.budgets.samples, c.stream("nzd"))) {
    out.push_back(s.elements.front());
  }
  return out;
}

void run_pd_regular_element(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  std::vector<Polynomial> ys;
  if (!hyp(v, guarded("y regular on R/I", [&] {
        ys = sampled_nzds(c);
        if (ys.empty()) return fail("y regular on R/I", "depth R/I = 0");
        return pass("y regular on R/I", "sampled " + seq_string(ys));
      })))
    return;
  std::vector<CheckResult> parts;
  for (const auto& y : ys) {
    const std::string name = "pd R/(I + (" + y.to_string() + ")) finite";
    parts.push_back(guarded(name, [&] {
      auto pd = projective_dimension(c.I.with({y}));
      return check(name, pd.has_value(), "pd = " + pd_to_string(pd));
    }));
  }
  concl(v, combine("pd R/(I + (y)) finite", parts, Tier::Exact));
  v.note = "sampled, " + std::to_string(ys.size()) + " witnesses";
}

void run_regular_sequences_closed(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  if (!hyp(v, guarded("maximal regular sequences on R/I Frobenius closed", [&] {
        return combine("maximal regular sequences on R/I Frobenius closed",
                       parameter_checks(c.S, c, 1, c.stream("S")), Tier::Probable);
      })))
    return;
  concl(v, guarded("regular sequences on R Frobenius closed", [&] {
    const int depth = depth_graded(c.R);
    std::vector<CheckResult> parts;
    for (int len = 1; len <= depth; ++len) {
      for (const auto& seq : sample_regular_sequences(c.R, static_cast<unsigned>(len), 1,
                                                      c.stream("R" + std::to_string(len)))) {
        parts.push_back(closed_check(seq_string(seq.elements), Ideal(c.R, seq.elements), c));
      }
    }
    if (parts.empty()) return pass("regular sequences on R Frobenius closed", "depth R = 0");
    return combine("regular sequences on R Frobenius closed", parts, Tier::Probable);
  }));
  v.note = "sampled";
}

void run_f_injective(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  if (!hyp(v, guarded("R Cohen-Macaulay", [&] {
        auto prof = ring_profile(c.R);
        return check("R Cohen-Macaulay", prof.cm,
                     "depth " + std::to_string(prof.depth) + ", dim " + std::to_string(prof.dim));
      })))
    return;
  const std::string hname = "R/I F-injective (surrogate)";
  if (!hyp(v, guarded(hname, [&] {
        auto r = combine(hname, parameter_checks(c.S, c, c.budgets.max_t, c.stream("S")),
                         Tier::Probable);
        if (r.status == CheckStatus::Pass && !ring_profile(c.S).cm) {
          return undecided(hname, "surrogate needs R/I Cohen-Macaulay");
        }
        return r;
      })))
    return;
  concl(v, guarded("R F-injective (surrogate)", [&] {
    return combine("R F-injective (surrogate)",
                   parameter_checks(c.R, c, c.budgets.max_t, c.stream("R")), Tier::Probable);
  }));
  v.note = "surrogate: sampled parameter ideals, thickenings t <= " +
           std::to_string(c.budgets.max_t);
}

void run_f_rational_cm(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  if (!hyp(v, guarded("R/I Cohen-Macaulay", [&] {
        auto prof = ring_profile(c.S);
        return check("R/I Cohen-Macaulay", prof.cm,
                     "depth " + std::to_string(prof.depth) + ", dim " + std::to_string(prof.dim));
      })))
    return;
  concl(v, guarded("R Cohen-Macaulay", [&] {
    auto prof = ring_profile(c.R);
    return check("R Cohen-Macaulay", prof.cm,
                 "depth " + std::to_string(prof.depth) + ", dim " + std::to_string(prof.dim));
  }));
  v.note = "tight-closure half evidence only; excellence satisfied by construction";
}

void run_dimension_inequality(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  concl(v, guarded("dim R <= dim R/I + pd", [&] {
    const int dR = krull_dimension(c.R), dS = krull_dimension(c.I);
    const int pd = *c.pd_value();
    return check("dim R <= dim R/I + pd", dR <= dS + pd,
                 std::to_string(dR) + " <= " + std::to_string(dS) + " + " + std::to_string(pd));
  }));
}

void run_inequality_chain(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  const int pd = *c.pd_value();
  const int g = grade(c.I);
  const int drop = krull_dimension(c.R) - krull_dimension(c.I);
  std::optional<HeightResult> height;
  auto h = guarded("height I", [&] {
    height = ideal_height(c.I, c.budgets.primes);
    if (!height) return undecided("height I", "prime search budget");
    return pass("height I", std::to_string(height->height),
                height->certified ? Tier::Certified : Tier::Probable);
  });
  if (h.status != CheckStatus::Pass) {
    concl(v, h);
    return;
  }
  const int ht = height->height;
  concl(v, check("grade I <= height I", g <= ht, std::to_string(g) + " <= " + h.detail, h.tier));
  concl(v, check("height I <= dim R - dim R/I", ht <= drop,
                 h.detail + " <= " + std::to_string(drop), h.tier));
  concl(v, check("dim R - dim R/I <= pd", drop <= pd,
                 std::to_string(drop) + " <= " + std::to_string(pd)));
  if (g == pd) {
    concl(v, check("equalities for perfect I", g == ht && ht == drop && drop == pd,
                   "grade = height = drop = pd = " + std::to_string(pd), h.tier));
  }
}

/// Certified primes Q with I not in Q and Q + I primary to the maximal ideal.
std::vector<Ideal> admissible_primes(Context& c) {
  std::vector<Ideal> out;
  SeededRng rng = c.rng.split("primes");
  auto base = minimal_primes(Ideal::zero(c.R), c.budgets.primes);
  std::vector<Ideal> roots;
  for (const auto& comp : base.components) {
    if (comp.tier == PrimeComponent::Tier::Certified) roots.push_back(comp.prime);
  }
  if (roots.empty()) return out;
  const unsigned attempts = 6 * c.budgets.samples + 6;
  for (unsigned a = 0; a < attempts && out.size() < c.budgets.samples; ++a) {
    const Ideal& Q0 = roots[rng.below(roots.size())];
    const int top = krull_dimension(Q0);
    const auto j = rng.below(static_cast<std::uint64_t>(std::max(top, 0)) + 1);
    std::vector<Polynomial> forms;
    for (std::uint64_t k = 0; k < j; ++k) forms.push_back(random_form(c.R, 1, rng));
    auto mp = minimal_primes(Q0.with(forms), c.budgets.primes);
    for (const auto& comp : mp.components) {
      if (comp.tier != PrimeComponent::Tier::Certified) continue;
      const Ideal& Q = comp.prime;
      if (Q.contains(c.I) || krull_dimension(Q + c.I) != 0) continue;
      bool seen = false;
      for (const auto& o : out) seen = seen || o.equals(Q);
      if (!seen) out.push_back(Q);
      if (out.size() >= c.budgets.samples) break;
    }
  }
  return out;
}

template <class F>
void run_prime_sampling(Context& c, TheoremVerdict& v, const std::string& name, F&& conclusion) {
  if (!hyp(v, pd_hypothesis(c))) return;
  std::vector<Ideal> primes;
  if (!hyp(v, guarded("certified primes Q, I not in Q, Q + I m-primary", [&] {
        primes = admissible_primes(c);
        const std::string hn = "certified primes Q, I not in Q, Q + I m-primary";
        if (primes.empty()) return undecided(hn, "no admissible prime sampled");
        return pass(hn, "sampled " + std::to_string(primes.size()), Tier::Certified);
      })))
    return;
  std::vector<CheckResult> parts;
  for (const auto& Q : primes) parts.push_back(guarded(Q.to_string(), [&] { return conclusion(Q); }));
  concl(v, combine(name, parts, Tier::Exact));
  v.note = "sampled, " + std::to_string(primes.size()) + " witnesses";
}

void run_prime_dimension(Context& c, TheoremVerdict& v) {
  run_prime_sampling(c, v, "dim R/Q <= pd", [&](const Ideal& Q) {
    const int d = krull_dimension(Q), pd = *c.pd_value();
    return check(Q.to_string(), d <= pd, std::to_string(d) + " <= " + std::to_string(pd));
  });
}

void run_prime_depth(Context& c, TheoremVerdict& v) {
  run_prime_sampling(c, v, "depth R <= depth R_Q + pd", [&](const Ideal& Q) {
    const int dR = depth_graded(c.R), dQ = depth_at_prime(c.R, Q), pd = *c.pd_value();
    return check(Q.to_string(), dR <= dQ + pd,
                 std::to_string(dR) + " <= " + std::to_string(dQ) + " + " + std::to_string(pd));
  });
}

CheckResult equidim_check(const std::string& name, const Ring& A) {
  return guarded(name, [&] {
    auto e = equidimensional(A);
    if (e == Equidimensional::Undecided) return undecided(name, "undecided");
    return check(name, e != Equidimensional::No, to_string(e));
  });
}

/// Largest k in [lo, hi] with pred(k), or nullopt.
template <class P>
std::optional<int> largest(int lo, int hi, P&& pred) {
  std::optional<int> best;
  for (int k = lo; k <= hi; ++k) {
    if (!pred(k)) break;
    best = k;
  }
  return best;
}

void run_serre_r(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  if (!hyp(v, equidim_check("R equidimensional", c.R))) return;
  hyp(v, pass("R catenary", "graded quotient of a polynomial ring"));
  if (!hyp(v, guarded("I perfect", [&] {
        const int g = grade(c.I);
        const int pd = *c.pd_value();
        return check("I perfect", g == pd, "grade " + std::to_string(g) + ", pd " + std::to_string(pd));
      })))
    return;
  int k = 0;
  if (!hyp(v, guarded("R/I satisfies R_k", [&] {
        const std::string hn = "R/I satisfies R_k";
        auto eq = equidimensional(c.S);
        if (eq == Equidimensional::No) return undecided(hn, "R/I not equidimensional");
        if (eq == Equidimensional::Undecided) return undecided(hn, "equidimensionality undecided");
        auto best = largest(0, krull_dimension(c.S),
                            [&](int j) { return serre_R(c.S, j, eq).holds; });
        if (!best) return fail(hn, serre_R(c.S, 0, eq).label());
        k = *best;
        return pass(hn, "k = " + std::to_string(k));
      })))
    return;
  concl(v, guarded("R satisfies R_k", [&] {
    auto r = serre_R(c.R, k, equidimensional(c.R));
    return check("R satisfies R_k", r.holds, r.label());
  }));
}

void run_serre_s(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  int k = 0;
  if (!hyp(v, guarded("R/I satisfies S_k", [&] {
        auto best = largest(1, std::max(1, krull_dimension(c.S)),
                            [&](int j) { return serre_S(c.S, j).holds; });
        if (!best) return fail("R/I satisfies S_k", serre_S(c.S, 1).label());
        k = *best;
        return pass("R/I satisfies S_k", "k = " + std::to_string(k));
      })))
    return;
  concl(v, guarded("R satisfies S_k", [&] {
    auto s = serre_S(c.R, k);
    return check("R satisfies S_k", s.holds, s.label());
  }));
}

void run_serre_rs(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  int k = 0;
  if (!hyp(v, guarded("R/I satisfies R_k and S_k+1", [&] {
        const std::string hn = "R/I satisfies R_k and S_k+1";
        auto eq = equidimensional(c.S);
        if (eq == Equidimensional::Undecided) return undecided(hn, "equidimensionality undecided");
        if (eq == Equidimensional::No) {
          // Not equidimensional while S_1 holds: the Jacobian criterion is unavailable.
          if (!serre_S(c.S, 1).holds) return fail(hn, serre_S(c.S, 1).label());
          return undecided(hn, "R/I not equidimensional");
        }
        auto best = largest(0, krull_dimension(c.S), [&](int j) {
          return serre_S(c.S, j + 1).holds && serre_R(c.S, j, eq).holds;
        });
        if (!best) return fail(hn, "R_0 and S_1 do not both hold");
        k = *best;
        return pass(hn, "k = " + std::to_string(k));
      })))
    return;
  concl(v, guarded("R satisfies S_k+1", [&] {
    auto s = serre_S(c.R, k + 1);
    return check("R satisfies S_k+1", s.holds, s.label());
  }));
  concl(v, guarded("R satisfies R_k", [&] {
    auto eq = equidimensional(c.R);
    if (eq == Equidimensional::No) return undecided("R satisfies R_k", "R not equidimensional");
    if (eq == Equidimensional::Undecided) return undecided("R satisfies R_k", "equidimensionality undecided");
    auto r = serre_R(c.R, k, eq);
    return check("R satisfies R_k", r.holds, r.label());
  }));
}

void run_reduced(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  if (!hyp(v, guarded("R/I reduced", [&] { return check("R/I reduced", is_reduced(c.S), ""); })))
    return;
  concl(v, guarded("R reduced", [&] { return check("R reduced", is_reduced(c.R), ""); }));
}

/// Graded normal rings are domains, so a non-equidimensional ring is not normal.
CheckResult normal_check(const std::string& name, const Ring& A) {
  return guarded(name, [&] {
    auto eq = equidimensional(A);
    if (eq == Equidimensional::Undecided) return undecided(name, "equidimensionality undecided");
    if (eq == Equidimensional::No) return fail(name, "not equidimensional");
    auto nv = is_normal(A, eq);
    return check(name, nv.holds, nv.r1.label() + ", " + nv.s2.label());
  });
}

void run_normal(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  if (!hyp(v, normal_check("R/I normal", c.S))) return;
  concl(v, normal_check("R normal", c.R));
}

CheckResult domain_check(const std::string& name, const Ring& A, const PrimeBudget& budget) {
  return guarded(name, [&] {
    auto d = is_domain(A, budget);
    switch (d.status) {
      case DomainVerdict::Status::Yes:
        return pass(name, d.certificate, Tier::Certified);
      case DomainVerdict::Status::No: {
        std::string detail = d.certificate;
        if (d.witness) detail += " (" + d.witness->first.to_string() + ") * (" +
                                 d.witness->second.to_string() + ") = 0";
        return fail(name, detail);
      }
      case DomainVerdict::Status::Undecided:
        break;
    }
    return undecided(name, d.certificate);
  });
}

void run_domain(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  if (c.probable(Tag::QuotientDomain)) {
    hyp(v, pass("R/I domain", "uncertified certificate", Tier::Probable));
  } else if (!hyp(v, domain_check("R/I domain", c.S, c.budgets.primes))) {
    return;
  }
  concl(v, domain_check("R domain", c.R, c.budgets.primes));
}

void run_zero_divisor(Context& c, TheoremVerdict& v) {
  if (!hyp(v, pd_hypothesis(c))) return;
  std::vector<Polynomial> fs;
  if (!hyp(v, guarded("f nonzerodivisor on R/I", [&] {
        fs = sampled_nzds(c);
        if (fs.empty()) return fail("f nonzerodivisor on R/I", "depth R/I = 0");
        return pass("f nonzerodivisor on R/I", "sampled " + seq_string(fs));
      })))
    return;
  std::vector<CheckResult> parts;
  for (const auto& f : fs) {
    parts.push_back(guarded(f.to_string(), [&] {
      return check(f.to_string(), is_nonzerodivisor(f, Ideal::zero(c.R)), "(0 : f) = 0");
    }));
  }
  concl(v, combine("f nonzerodivisor on R", parts, Tier::Exact));
  v.note = "sampled, " + std::to_string(fs.size()) + " witnesses";
}

// ---------------------------------------------------------------------------

Instance pd_control(std::uint32_t p) {
  GenerationParams params;
  params.p = p;
  params.n = 2;
  return generate_instance(InstanceKind::ControlInfinitePd, params, 0);
}

/// (z) on the Fermat cubic: R/(z) carries (y) with y's Frobenius closure
/// strictly bigger, e.g. containing x^2.
Instance closure_control(std::uint32_t p) {
  Instance inst;
  inst.kind = InstanceKind::RegularSequenceOnQuotient;
  inst.ring = RingDescriptor::make(p, {"x", "y", "z"}, {"x^3 + y^3 + z^3"});
  inst.ideal = Ideal::parse(inst.ring, {"z"});
  inst.name = "control (z) on the Fermat cubic";
  inst.certificates = {{Tag::RegularSequenceGens, Tier::Exact, 1},
                       {Tag::FinitePd, Tier::Exact, 1},
                       {Tag::PerfectIdeal, Tier::Exact, 1}};
  return inst;
}

using Procedure = void (*)(Context&, TheoremVerdict&);

struct Entry {
  TheoremInfo info;
  Procedure run;
  /// Needs a nonzero ideal.
  bool nonzero_ideal;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {{"T3.3", "chain maps into acyclic free complexes respect Frobenius closure at the top level", pd_control},
       run_acyclic_chain_map, true},
      {{"L3.4", "if the image of J is Frobenius closed in R/I then J is Frobenius closed in R", closure_control},
       run_quotient_closed, false},
      {{"L3.6", "pd R/I finite and y regular on R/I give pd R/(I + (y)) finite", pd_control},
       run_pd_regular_element, false},
      {{"P3.7", "pd R/I finite and closed maximal regular sequences on R/I give closed regular sequences on R", pd_control},
       run_regular_sequences_closed, false},
      {{"T4.3", "R Cohen-Macaulay, pd R/I finite, R/I F-injective give R F-injective", pd_control},
       run_f_injective, false},
      {{"T4.4-CM", "pd R/I finite and R/I Cohen-Macaulay give R Cohen-Macaulay", pd_control},
       run_f_rational_cm, false},
      {{"T5.2", "pd R/I finite gives dim R <= dim R/I + pd", pd_control}, run_dimension_inequality, false},
      {{"C5.4", "grade I <= height I <= dim R - dim R/I <= pd, equal for perfect I", pd_control},
       run_inequality_chain, true},
      {{"L5.6", "dim R/Q <= pd for primes Q with I not in Q and Q + I m-primary", pd_control},
       run_prime_dimension, false},
      {{"L5.8", "depth R <= depth R_Q + pd for the same primes", pd_control}, run_prime_depth, false},
      {{"T5.7", "R equidimensional, I perfect, R/I R_k give R R_k", pd_control}, run_serre_r, true},
      {{"T5.9", "pd R/I finite and R/I S_k give R S_k", pd_control}, run_serre_s, false},
      {{"T5.10", "pd R/I finite and R/I R_k, S_k+1 give the same for R", pd_control}, run_serre_rs, false},
      {{"C5.11", "pd R/I finite and R/I reduced give R reduced", pd_control}, run_reduced, false},
      {{"C5.12", "pd R/I finite and R/I normal give R normal", pd_control}, run_normal, false},
      {{"L5.13", "a nonzerodivisor on R/I of finite pd is a nonzerodivisor on R", pd_control},
       run_zero_divisor, false},
      {{"T5.14", "pd R/I finite and R/I a domain give R a domain", pd_control}, run_domain, false},
  };
  return table;
}

const Entry* find_entry(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return &e;
  }
  return nullptr;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const TheoremInfo* find_theorem(std::string_view id) {
  const auto* e = find_entry(id);
  return e ? &e->info : nullptr;
}

TheoremVerdict verify_theorem(std::string_view theorem_id, const Instance& inst,
                              const VerifyBudgets& budgets) {
  const auto* entry = find_entry(theorem_id);
  if (!entry) throw SchemaMismatch("unknown theorem " + std::string(theorem_id));
  if (!inst.ring || !same_ring(inst.ideal.ring(), inst.ring)) {
    throw SchemaMismatch("instance ideal does not live in the instance ring");
  }
  if (inst.ideal.is_unit()) throw SchemaMismatch("R/I must be nonzero");
  if (entry->nonzero_ideal && inst.ideal.is_zero()) {
    throw SchemaMismatch(entry->info.id + " needs a nonzero ideal");
  }
  recheck_certificates(inst);

  const auto start = std::chrono::steady_clock::now();
  Budget budget;
  budget.degree_cap = budgets.degree_cap;
  budget.time_ms = budgets.time_ms;
  BudgetScope scope(budget);

  TheoremVerdict v;
  v.theorem_id = entry->info.id;
  v.instance_digest = inst.digest();
  v.instance_name = inst.name;
  Context ctx{inst,
              budgets,
              inst.ring,
              inst.ideal,
              inst.ring->quotient_by(inst.ideal.gens()),
              effective_max_e(inst.ring->characteristic(), budgets),
              SeededRng(inst.seed).split(entry->info.id),
              std::nullopt};
  try {
    entry->run(ctx, v);
  } catch (const BudgetExceeded& e) {
    v.conclusions.push_back(undecided("budget", e.what()));
  }
  v.status = aggregate(v.hypotheses, v.conclusions);
  if (v.status == VerdictStatus::HypothesisFailed && v.conclusions.empty()) {
    v.note = v.note.empty() ? "conclusions not evaluated" : v.note + "; conclusions not evaluated";
  }
  v.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return v;
}

}  // namespace frobforge
