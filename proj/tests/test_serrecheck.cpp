#include "doctest.h"
#include "frobforge/errors.hpp"
#include "frobforge/serrecheck.hpp"

using namespace frobforge;

namespace {

Ring node() { return RingDescriptor::make(2, {"x", "y"}, {"x*y"}); }
Ring cone() { return RingDescriptor::make(5, {"x", "y", "z"}, {"x*z - y^2"}); }
Ring embedded() { return RingDescriptor::make(3, {"x", "y"}, {"x^2", "x*y"}); }
Ring segre() { return RingDescriptor::make(3, {"x", "y", "z", "w"}, {"x*w - y*z"}); }
// A plane and a line through the origin: reduced but not equidimensional.
Ring plane_line() { return RingDescriptor::make(3, {"x", "y", "z"}, {"x*z", "y*z"}); }

}  // namespace

TEST_CASE("ring profiles") {
  auto a = ring_profile(node());
  CHECK(a.dim == 1);
  CHECK(a.depth == 1);
  CHECK(a.cm);
  CHECK(a.codim == 1);

  auto b = ring_profile(embedded());
  CHECK(b.dim == 1);
  CHECK(b.depth == 0);
  CHECK(!b.cm);

  auto c = ring_profile(cone());
  CHECK(c.dim == 2);
  CHECK(c.depth == 2);
  CHECK(c.cm);
  CHECK(c.equidimensional == Equidimensional::Yes);

  CHECK(ring_profile(plane_line()).equidimensional == Equidimensional::No);
  CHECK(ring_profile(plane_line(), true).equidimensional == Equidimensional::Asserted);
  CHECK(equidimensional(embedded()) == Equidimensional::Yes);
}

TEST_CASE("Serre S_k") {
  auto v = serre_S(embedded(), 1);
  CHECK(!v.holds);
  CHECK(v.witness_index == std::optional<int>(2));
  CHECK(v.witness_dimension == std::optional<int>(0));
  CHECK(v.label() == "S_1 fails (Ext^2 has dimension 0)");
  CHECK(serre_S(embedded(), 0).holds);

  for (int k = 0; k <= 4; ++k) CHECK(serre_S(node(), k).holds);
  CHECK(serre_S(segre(), 2).holds);

  // Reduced, so no embedded primes, but depth 1 at the origin.
  CHECK(serre_S(plane_line(), 1).holds);
  CHECK(!serre_S(plane_line(), 2).holds);
}

TEST_CASE("singular locus and Serre R_k") {
  auto L = singular_locus_ideal(cone());
  CHECK(L.equals(Ideal::maximal(cone())));
  auto P = RingDescriptor::make(3, {"x", "y"});
  CHECK(singular_locus_ideal(P).is_unit());
  auto D = RingDescriptor::make(2, {"x", "y"}, {"x^2"});
  CHECK(singular_locus_ideal(D).is_zero());
  CHECK(jacobian_matrix(D).is_zero());

  CHECK(serre_R(cone(), 1).holds);
  CHECK(!serre_R(cone(), 2).holds);
  CHECK(serre_R(node(), 0).holds);
  auto r1 = serre_R(node(), 1);
  CHECK(!r1.holds);
  CHECK(r1.witness_dimension == std::optional<int>(0));
  CHECK(!serre_R(D, 0).holds);

  CHECK_THROWS_AS(singular_locus_ideal(plane_line()), InvalidArgument);
  CHECK_THROWS_AS(singular_locus_ideal(cone(), Equidimensional::Undecided), InvalidArgument);
}

TEST_CASE("reduced and normal") {
  CHECK(!is_reduced(RingDescriptor::make(2, {"x", "y"}, {"x^2"})));
  CHECK(is_reduced(node()));
  CHECK(is_reduced(RingDescriptor::make(3, {"x"})));

  auto n = is_normal(cone());
  CHECK(n.holds);
  CHECK(n.r1.holds);
  CHECK(n.s2.holds);
  CHECK(!is_normal(node()).holds);
  CHECK(is_normal(RingDescriptor::make(2, {"x", "y", "z"})).holds);
}

TEST_CASE("minimal primes") {
  auto R = RingDescriptor::make(2, {"x", "y"});
  auto a = minimal_primes(Ideal::parse(R, {"x*y"}));
  REQUIRE(a.decided);
  REQUIRE(a.components.size() == 2);
  CHECK(a.components[0].prime.equals(Ideal::parse(R, {"x"})));
  CHECK(a.components[1].prime.equals(Ideal::parse(R, {"y"})));
  CHECK(a.components[0].tier == PrimeComponent::Tier::Certified);

  auto b = minimal_primes(Ideal::parse(R, {"x^2"}));
  REQUIRE(b.components.size() == 1);
  CHECK(b.components[0].prime.equals(Ideal::parse(R, {"x"})));

  auto S = RingDescriptor::make(3, {"x", "y", "z", "w"});
  auto c = minimal_primes(Ideal::parse(S, {"x*w - y*z"}));
  REQUIRE(c.components.size() == 1);
  CHECK(c.components[0].tier == PrimeComponent::Tier::Certified);
  CHECK(c.components[0].certificate == "binomial lattice saturated");

  // x^2 - y^2 = (x - y)(x + y) over F_3.
  auto T = RingDescriptor::make(3, {"x", "y"});
  auto d = minimal_primes(Ideal::parse(T, {"x^2 - y^2"}));
  REQUIRE(d.components.size() == 2);
  for (const auto& comp : d.components) CHECK(comp.tier == PrimeComponent::Tier::Certified);

  // The twisted cubic is prime; its lattice is saturated.
  auto tc = minimal_primes(Ideal::parse(S, {"x*z - y^2", "y*w - z^2", "x*w - y*z"}));
  REQUIRE(tc.components.size() == 1);
  CHECK(tc.components[0].tier == PrimeComponent::Tier::Certified);

  // x^2 - y^2 over F_2 is a square: (x + y).
  auto e = minimal_primes(Ideal::parse(R, {"x^2 + y^2"}));
  REQUIRE(e.components.size() == 1);
  CHECK(e.components[0].prime.equals(Ideal::parse(R, {"x + y"})));

  auto budget = minimal_primes(Ideal::parse(S, {"x*y", "z*w"}), PrimeBudget{1, 400});
  CHECK(!budget.decided);
}

TEST_CASE("domains") {
  auto F = RingDescriptor::make(2, {"x", "y", "z"}, {"x^3 + y^3 + z^3"});
  auto a = is_domain(F);
  CHECK(a.status == DomainVerdict::Status::Yes);

  auto b = is_domain(node());
  CHECK(b.status == DomainVerdict::Status::No);
  REQUIRE(b.witness);
  CHECK(b.witness->first.to_string() == "x");
  CHECK(b.witness->second.to_string() == "y");

  CHECK(is_domain(segre()).status == DomainVerdict::Status::Yes);

  auto c = is_domain(RingDescriptor::make(2, {"x", "y"}, {"x^3"}));
  CHECK(c.status == DomainVerdict::Status::No);
  REQUIRE(c.witness);
  CHECK(c.witness->first.to_string() == "x");
  CHECK(c.witness->second.to_string() == "x^2");

  // x^3 + y^3 = (x + y)(x^2 - xy + y^2) is reducible.
  CHECK(is_domain(RingDescriptor::make(5, {"x", "y", "z"}, {"x^3 + y^3"})).status ==
        DomainVerdict::Status::No);
}

TEST_CASE("property: S-monotonicity and the CM equivalence") {
  std::vector<Ring> rings{node(), cone(), embedded(), segre(), plane_line(),
                          RingDescriptor::make(2, {"x", "y", "z"}, {"x^2", "x*y", "x*z"}),
                          RingDescriptor::make(3, {"x", "y", "z", "w"}, {"x*z", "x*w", "y*z", "y*w"}),
                          RingDescriptor::make(2, {"x", "y", "z"}, {"x*y", "y*z"})};
  for (const auto& R : rings) {
    auto prof = ring_profile(R);
    bool all = true;
    for (int k = 0; k <= 4; ++k) {
      bool sk = serre_S(R, k).holds;
      if (k < 4 && serre_S(R, k + 1).holds) CHECK(sk);
      if (k <= prof.dim) all = all && sk;
    }
    CHECK(prof.cm == all);
    CHECK(prof.depth <= prof.dim);
  }
}

TEST_CASE("property: reduced iff R_0 and S_1 on equidimensional rings") {
  std::vector<Ring> rings{node(), cone(), embedded(), segre(),
                          RingDescriptor::make(2, {"x", "y"}, {"x^2"}),
                          RingDescriptor::make(3, {"x", "y", "z"}, {"x^2*y", "x*z^2"}),
                          RingDescriptor::make(2, {"x", "y", "z", "w"}, {"x*z", "x*w", "y*z", "y*w"})};
  for (const auto& R : rings) {
    auto eq = equidimensional(R);
    if (eq != Equidimensional::Yes) continue;
    bool routes = serre_R(R, 0, eq).holds && serre_S(R, 1).holds;
    CHECK(is_reduced(R) == routes);
  }
}

TEST_CASE("property: height plus coheight on certified primes") {
  std::vector<std::pair<Ring, std::vector<std::string>>> cases{
      {segre(), {"x", "y"}},
      {segre(), {"x", "z"}},
      {segre(), {"x - w", "y"}},
      {cone(), {"x", "y"}},
      {plane_line(), {"x", "y"}},
      {RingDescriptor::make(3, {"x", "y", "z", "w"}, {"x*z", "x*w", "y*z", "y*w"}), {"x", "y", "z"}}};
  for (const auto& [R, gens] : cases) {
    auto mp = minimal_primes(Ideal::parse(R, gens));
    REQUIRE(mp.decided);
    for (const auto& c : mp.components) {
      if (c.tier != PrimeComponent::Tier::Certified) continue;
      auto h = ideal_height(c.prime);
      REQUIRE(h);
      // Graded quotients are catenary; equality needs R equidimensional.
      if (equidimensional(R) == Equidimensional::Yes) {
        CHECK(krull_dimension(R) == h->height + krull_dimension(c.prime));
      } else {
        CHECK(krull_dimension(R) >= h->height + krull_dimension(c.prime));
      }
    }
  }
}

TEST_CASE("local depth and heights") {
  auto R = node();
  CHECK(depth_at_prime(R, Ideal::parse(R, {"x"})) == 0);
  CHECK(depth_at_prime(R, Ideal::maximal(R)) == 1);
  auto E = embedded();
  CHECK(depth_at_prime(E, Ideal::parse(E, {"x"})) == 0);
  CHECK(depth_at_prime(E, Ideal::maximal(E)) == 0);
  auto C = cone();
  CHECK(depth_at_prime(C, Ideal::parse(C, {"x", "y"})) == 1);

  auto F = RingDescriptor::make(2, {"x", "y", "z"}, {"x^3 + y^3 + z^3"});
  auto h = ideal_height(Ideal::parse(F, {"z"}));
  REQUIRE(h);
  CHECK(h->height == 1);
  CHECK(h->certified);
  auto hm = ideal_height(Ideal::maximal(F));
  REQUIRE(hm);
  CHECK(hm->height == 2);

  // ht (x, z) in k[x,y,z]/(xy) is 1: it sits over the component (x).
  auto N = RingDescriptor::make(3, {"x", "y", "z"}, {"x*y"});
  auto hn = ideal_height(Ideal::parse(N, {"x", "z"}));
  REQUIRE(hn);
  CHECK(hn->height == 1);
}

TEST_CASE("property: point orbits on a conic are prime iff the cubic is irreducible") {
  // The points (1 : t : t^2) with m(t) = t^3 + a t^2 + b t + c = 0. Over the
  // conic's coordinate ring these generators are M(s, u) s and M(s, u) u for
  // the binary form M of m, so the quotient is a domain iff m is irreducible,
  // i.e. for a cubic iff m has no root in F_p.
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b)
        for (std::uint32_t c = 0; c < p; ++c) {
          bool has_root = false;
          for (std::uint32_t t = 0; t < p; ++t) has_root = has_root || (t * t * t + a * t * t + b * t + c) % p == 0;
          const auto A = std::to_string(a), B = std::to_string(b), C = std::to_string(c);
          auto R = RingDescriptor::make(
              p, {"x", "y", "z"},
              {"x*z - y^2", "y*z + " + A + "*x*z + " + B + "*x*y + " + C + "*x^2",
               "z^2 + " + A + "*y*z + " + B + "*x*z + " + C + "*x*y"});
          CAPTURE(R->to_string());
          const auto v = is_domain(R);
          CHECK(v.status == (has_root ? DomainVerdict::Status::No : DomainVerdict::Status::Yes));
        }
  }
}
