#include "doctest.h"
#include "frobforge/errors.hpp"
#include "frobforge/verifier.hpp"

using namespace frobforge;

namespace {

using Tag = Certificate::Tag;

Ring fermat(std::uint32_t p = 2) {
  return RingDescriptor::make(p, {"x", "y", "z"}, {"x^3 + y^3 + z^3"});
}

Instance fermat_instance(const std::vector<std::string>& gens) {
  Instance inst;
  inst.kind = InstanceKind::RegularSequenceOnQuotient;
  inst.ring = fermat();
  inst.ideal = Ideal::parse(inst.ring, gens);
  inst.name = "Fermat " + inst.ideal.to_string();
  const int n = static_cast<int>(gens.size());
  inst.certificates = {{Tag::RegularSequenceGens, Tier::Exact, n},
                       {Tag::FinitePd, Tier::Exact, n},
                       {Tag::PerfectIdeal, Tier::Exact, n}};
  return inst;
}

const CheckResult* named(const std::vector<CheckResult>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

/// (I0 : f) = I0 computed in the ambient ring.
bool ambient_nzd(const Ring& R, const std::vector<Polynomial>& prefix, const Polynomial& f) {
  Ring P = R->ambient();
  std::vector<Polynomial> base = R->quotient_gens();
  base.insert(base.end(), prefix.begin(), prefix.end());
  Ideal J(P, base);
  return colon_ideal(J, Ideal(P, {f})).equals(J);
}

}  // namespace

TEST_CASE("seeded streams") {
  SeededRng a(42), b(42);
  for (int i = 0; i < 5; ++i) CHECK(a.next() == b.next());
  auto s1 = SeededRng(42).split("one"), s2 = SeededRng(42).split("two");
  CHECK(s1.next() != s2.next());
  CHECK(SeededRng(42).split("one").next() == SeededRng(42).split("one").next());
  SeededRng c(3);
  for (int i = 0; i < 100; ++i) CHECK(c.below(7) < 7);
  CHECK_THROWS_AS(c.below(0), InvalidArgument);
  CHECK(stable_digest("") == "cbf29ce484222325");
  CHECK(stable_digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("random forms are homogeneous of the requested degree") {
  auto R = fermat(3);
  SeededRng rng(5);
  for (int d = 1; d <= 4; ++d) {
    auto f = random_form(R, d, rng);
    if (!f.is_zero()) CHECK(f.degree() == d);
    CHECK(R->reduce(f) == f);
  }
}

TEST_CASE("instance kinds") {
  CHECK(parse_instance_kind("ToricDomain") == std::optional<InstanceKind>(InstanceKind::ToricDomain));
  CHECK(!parse_instance_kind("Torus"));
  for (auto k : all_instance_kinds()) CHECK(parse_instance_kind(to_string(k)) == k);

  GenerationParams one;
  one.n = 1;
  auto ctl = generate_instance(InstanceKind::ControlInfinitePd, one, 0);
  CHECK(ctl.ring->to_string() == "F_2[x]/(x^2)");
  CHECK(ctl.ideal.to_string() == "(x)");
  REQUIRE(ctl.find(Tag::ControlNegative));
  CHECK(!projective_dimension(ctl.ideal));

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto t = generate_instance(InstanceKind::ToricDomain, GenerationParams{}, seed);
    CHECK(same_ring(t.ring, RingDescriptor::make(2, {"x", "y", "z", "w"}, {"x*w - y*z"})));
    const auto* d = t.find(Tag::QuotientDomain);
    REQUIRE(d);
    CHECK(d->tier == Tier::Certified);
    CHECK(t.find(Tag::FinitePd)->value == std::optional<int>(1));
  }

  GenerationParams params;
  params.base = fermat();
  params.max_degree = 1;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto r = generate_instance(InstanceKind::RegularSequenceOnQuotient, params, seed);
    REQUIRE(r.ideal.gens().size() == 1);
    CHECK(r.ideal.gens()[0].degree() == 1);
    CHECK(ambient_nzd(r.ring, {}, r.ideal.gens()[0]));
    CHECK(r.find(Tag::FinitePd)->value == std::optional<int>(1));
    CHECK(r.seed == seed);
  }

  GenerationParams deep;
  deep.base = RingDescriptor::make(2, {"x", "y"}, {"x^2", "x*y"});
  CHECK_THROWS_AS(generate_instance(InstanceKind::RegularSequenceOnQuotient, deep, 1), InvalidArgument);

  for (std::uint32_t p : {2u, 3u}) {
    GenerationParams dp;
    dp.p = p;
    auto det = generate_instance(InstanceKind::DeterminantalPerfect, dp, 9);
    CHECK(grade(det.ideal) == 2);
    CHECK(projective_dimension(det.ideal) == std::optional<int>(2));
  }
}

TEST_CASE("regular sequence sampling") {
  auto R = fermat();
  auto seqs = sample_regular_sequences(R, 2, 3, 11);
  REQUIRE(seqs.size() == 3);
  for (const auto& s : seqs) {
    REQUIRE(s.elements.size() == 2);
    CHECK(s.maximal);
    CHECK(ambient_nzd(R, {}, s.elements[0]));
    CHECK(ambient_nzd(R, {s.elements[0]}, s.elements[1]));
  }
  CHECK(!sample_regular_sequences(R, 1, 1, 11).front().maximal);
  CHECK(sample_regular_sequences(R, 0, 4, 11).empty());
  auto D = RingDescriptor::make(2, {"x"}, {"x^2"});
  CHECK_THROWS_AS(sample_regular_sequences(D, 1, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(sample_regular_sequences(R, 3, 1, 0), InvalidArgument);
}

TEST_CASE("certificate honesty") {
  for (auto kind : all_instance_kinds()) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      GenerationParams params;
      params.p = p;
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto inst = generate_instance(kind, params, seed);
        CHECK_NOTHROW(recheck_certificates(inst));
      }
    }
  }
  auto bad = fermat_instance({"z"});
  bad.certificates[1].value = 2;
  CHECK_THROWS_AS(recheck_certificates(bad), DataIntegrityError);
  CHECK_THROWS_AS(verify_theorem("T5.2", bad), DataIntegrityError);

  // A wrongly certified control, or a wrong domain claim.
  auto ctl = theorem_registry().front().control(2);
  ctl.certificates.push_back({Tag::FinitePd, Tier::Exact, 1});
  CHECK_THROWS_AS(recheck_certificates(ctl), DataIntegrityError);
  // x^3 + y^3 + z^3 = z^3 modulo x + y over F_2.
  auto cut = fermat_instance({"x + y"});
  cut.certificates.push_back({Tag::QuotientDomain, Tier::Certified, std::nullopt});
  CHECK_THROWS_AS(recheck_certificates(cut), DataIntegrityError);
}

TEST_CASE("verdict aggregation") {
  CheckResult ok{"h", CheckStatus::Pass, Tier::Exact, ""};
  CheckResult soft{"h", CheckStatus::Pass, Tier::Probable, ""};
  CheckResult no{"c", CheckStatus::Fail, Tier::Exact, ""};
  CheckResult soft_no{"c", CheckStatus::Fail, Tier::Probable, ""};
  CheckResult open{"c", CheckStatus::Undecided, Tier::Probable, ""};
  CHECK(aggregate({ok}, {ok}) == VerdictStatus::Confirmed);
  CHECK(aggregate({soft}, {ok}) == VerdictStatus::Confirmed);
  CHECK(aggregate({ok, no}, {no}) == VerdictStatus::HypothesisFailed);
  CHECK(aggregate({open, no}, {}) == VerdictStatus::HypothesisFailed);
  CHECK(aggregate({open}, {ok}) == VerdictStatus::Undecided);
  CHECK(aggregate({ok}, {no}) == VerdictStatus::CounterexampleCandidate);
  CHECK(aggregate({ok, soft}, {no}) == VerdictStatus::Undecided);
  CHECK(aggregate({ok}, {soft_no}) == VerdictStatus::Undecided);
  CHECK(aggregate({ok}, {ok, open}) == VerdictStatus::Undecided);
  CHECK(aggregate({}, {}) == VerdictStatus::Confirmed);
}

TEST_CASE("no false alarms from uncertified hypotheses") {
  // The control has infinite pd; a Probable certificate claiming otherwise
  // is trusted by the hypothesis check but never yields a counterexample.
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto inst = theorem_registry().front().control(p);
    inst.certificates = {{Tag::FinitePd, Tier::Probable, 1}};
    auto v = verify_theorem("C5.11", inst);
    REQUIRE(!v.hypotheses.empty());
    CHECK(v.hypotheses[0].tier == Tier::Probable);
    const auto* r = named(v.conclusions, "R reduced");
    REQUIRE(r);
    CHECK(r->status == CheckStatus::Fail);
    CHECK(v.status == VerdictStatus::Undecided);
  }
  // R/(z) = F_2[x,y]/(xy) is not a domain, but an injected Probable claim
  // says it is.
  Instance inj;
  inj.ring = RingDescriptor::make(2, {"x", "y", "z"}, {"x*y"});
  inj.ideal = Ideal::parse(inj.ring, {"z"});
  inj.name = "node cut by z";
  inj.certificates = {{Tag::QuotientDomain, Tier::Probable, std::nullopt}};
  auto v = verify_theorem("T5.14", inj);
  CHECK(named(v.conclusions, "R domain")->status == CheckStatus::Fail);
  CHECK(v.status == VerdictStatus::Undecided);
}

TEST_CASE("inequality chain on the Fermat cubic") {
  auto inst = fermat_instance({"z"});
  auto v = verify_theorem("C5.4", inst);
  CHECK(v.status == VerdictStatus::Confirmed);
  const auto* eq = named(v.conclusions, "equalities for perfect I");
  REQUIRE(eq);
  CHECK(eq->detail == "grade = height = drop = pd = 1");
  // Independent values: one linear form drops the dimension by one.
  CHECK(krull_dimension(inst.ring) - krull_dimension(inst.ideal) == 1);
  CHECK(grade(inst.ideal) == 1);
}

TEST_CASE("Serre control: F_p[x,y]/(x^2) with I = (x)") {
  auto ctl = find_theorem("T5.9")->control(2);
  auto v = verify_theorem("T5.9", ctl);
  CHECK(v.status == VerdictStatus::HypothesisFailed);
  REQUIRE(v.hypotheses.size() == 1);
  CHECK(v.hypotheses[0].detail == "pd = infinite");
  // R/I = F_2[y] is S_2 while R is not reduced.
  auto S = ctl.ring->quotient_by(ctl.ideal.gens());
  CHECK(serre_S(S, 2).holds);
  CHECK(!is_reduced(ctl.ring));
}

TEST_CASE("acyclic chain maps: Koszul against the resolution") {
  auto inst = fermat_instance({"y", "z"});
  auto v = verify_theorem("T3.3", inst);
  CHECK(v.status == VerdictStatus::Confirmed);
  const auto* h = named(v.hypotheses, "im phi_0 in (im a_1)^F");
  REQUIRE(h);
  CHECK(h->detail == "phi_0 = [x^2], e = 1");
  const auto* c = named(v.conclusions, "im phi_d in (I_1(b_d) L_d)^F");
  REQUIRE(c);
  CHECK(c->status == CheckStatus::Pass);
  CHECK(named(v.conclusions, "F(L) acyclic")->status == CheckStatus::Pass);
}

TEST_CASE("Frobenius closure lifts from the quotient") {
  auto v = verify_theorem("L3.4", find_theorem("L3.4")->control(2));
  CHECK(v.status == VerdictStatus::HypothesisFailed);
  // The cone F_3[x,y,z]/(xz - y^2) is F-pure; (x, y) closed in R/(z) = F_3[x, y]/(y^2).
  Instance cone;
  cone.ring = RingDescriptor::make(3, {"x", "y", "z"}, {"x*z - y^2"});
  cone.ideal = Ideal::parse(cone.ring, {"x - z"});
  cone.name = "cone cut by x - z";
  auto w = verify_theorem("L3.4", cone);
  CHECK(w.status != VerdictStatus::CounterexampleCandidate);
}

TEST_CASE("control discipline") {
  for (const auto& info : theorem_registry()) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      auto v = verify_theorem(info.id, info.control(p));
      INFO(info.id, " p=", p);
      CHECK(v.status == VerdictStatus::HypothesisFailed);
    }
  }
}

TEST_CASE("schema checks") {
  auto inst = fermat_instance({"z"});
  CHECK_THROWS_AS(verify_theorem("T9.9", inst), SchemaMismatch);
  Instance unit = inst;
  unit.ideal = Ideal::unit(inst.ring);
  unit.certificates.clear();
  CHECK_THROWS_AS(verify_theorem("T5.2", unit), SchemaMismatch);
  Instance zero = inst;
  zero.ideal = Ideal::zero(inst.ring);
  zero.certificates.clear();
  CHECK_THROWS_AS(verify_theorem("T3.3", zero), SchemaMismatch);
  CHECK(verify_theorem("T5.2", zero).status == VerdictStatus::Confirmed);
  Instance foreign = inst;
  foreign.ideal = Ideal::parse(RingDescriptor::make(2, {"x", "y", "z"}), {"z"});
  CHECK_THROWS_AS(verify_theorem("T5.2", foreign), SchemaMismatch);
}

TEST_CASE("suites") {
  CHECK(run_suite(SuiteConfig{}).verdicts.empty());

  auto config = default_suite(17, 2, {2, 3});
  auto a = run_suite(config);
  auto b = run_suite(config);
  REQUIRE(a.verdicts.size() == b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    CHECK(a.verdicts[i].theorem_id == b.verdicts[i].theorem_id);
    CHECK(a.verdicts[i].instance_digest == b.verdicts[i].instance_digest);
    CHECK(a.verdicts[i].status == b.verdicts[i].status);
    REQUIRE(a.verdicts[i].conclusions.size() == b.verdicts[i].conclusions.size());
    for (std::size_t j = 0; j < a.verdicts[i].conclusions.size(); ++j)
      CHECK(a.verdicts[i].conclusions[j].detail == b.verdicts[i].conclusions[j].detail);
  }
  for (std::size_t i = 1; i < a.verdicts.size(); ++i) {
    const auto& x = a.verdicts[i - 1];
    const auto& y = a.verdicts[i];
    CHECK((x.theorem_id < y.theorem_id ||
           (x.theorem_id == y.theorem_id && x.instance_digest <= y.instance_digest)));
  }
  CHECK(!a.alarm());
  CHECK(a.confirmed + a.hypothesis_failed + a.undecided + a.counterexamples == a.verdicts.size());
  // Every theorem's control shows up once per prime.
  std::size_t controls = 0;
  for (const auto& v : a.verdicts) controls += v.instance_name.rfind("control", 0) == 0;
  CHECK(controls == 2 * theorem_registry().size());
}

TEST_CASE("property: perfection survives cutting by a common regular element") {
  // Graded stand-in for localization: l regular on R and R/I keeps grade = pd.
  for (auto kind : {InstanceKind::HypersurfaceQuotient, InstanceKind::DeterminantalPerfect,
                    InstanceKind::MonomialCM, InstanceKind::ToricDomain,
                    InstanceKind::RegularSequenceOnQuotient}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto inst = generate_instance(kind, GenerationParams{}, seed);
      if (!inst.find(Tag::PerfectIdeal)) continue;
      auto S = inst.ring->quotient_by(inst.ideal.gens());
      if (depth_graded(S) == 0) continue;
      for (const auto& s : sample_regular_sequences(S, 1, 2, seed)) {
        const auto& l = s.elements.front();
        if (!is_nonzerodivisor(l, Ideal::zero(inst.ring))) continue;
        auto Rc = inst.ring->quotient_by({l});
        Ideal Ic(Rc, inst.ideal.gens());
        auto pd = projective_dimension(Ic);
        REQUIRE(pd);
        CHECK(*pd == *projective_dimension(inst.ideal));
        CHECK(grade(Ic) == *pd);
      }
    }
  }
}
