#include <random>

#include "doctest.h"
#include "frobforge/errors.hpp"
#include "frobforge/polynomial.hpp"

using namespace frobforge;

namespace {

Polynomial P(const RingPtr& R, const char* s) { return parse_polynomial(s, R); }

Polynomial random_poly(const RingPtr& R, std::mt19937_64& rng, int terms, int maxdeg) {
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(R->nvars());
    for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (maxdeg + 1));
    ts.push_back({R->monomial(e), static_cast<Coeff>(rng() % R->characteristic())});
  }
  return Polynomial::from_terms(R, ts);
}

}  // namespace

TEST_CASE("field rejects composite characteristic") {
  CHECK_THROWS_AS(PrimeField(4), InvalidArgument);
  CHECK_THROWS_WITH(PrimeField(4), "characteristic must be prime (got 4)");
  PrimeField F(997);
  for (Coeff a = 1; a < 997; a += 37) CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("addition") {
  auto R2 = PolyRing::make(2, {"x", "y"});
  CHECK((P(R2, "x+y") + P(R2, "x+y")).is_zero());
  auto f = P(R2, "x^2*y + y");
  CHECK(f + Polynomial(R2) == f);
  auto R5 = PolyRing::make(5, {"x", "y"});
  CHECK(P(R5, "x^2") + P(R5, "3*x^2") == P(R5, "4*x^2"));
  CHECK((P(R5, "x^2") + P(R5, "3*x^2")).to_string() == "4*x^2");
}

TEST_CASE("multiplication") {
  auto R2 = PolyRing::make(2, {"x", "y"});
  CHECK(P(R2, "x+y") * P(R2, "x+y") == P(R2, "x^2+y^2"));
  auto f = P(R2, "x*y + y^3");
  CHECK(f * Polynomial::constant(R2, 1) == f);
  auto R5 = PolyRing::make(5, {"x", "y"});
  CHECK(P(R5, "x+y") * P(R5, "x-y") == P(R5, "x^2 + 4*y^2"));
}

TEST_CASE("ambient mismatch") {
  auto A = PolyRing::make(2, {"x", "y"});
  auto B = PolyRing::make(3, {"x", "y"});
  CHECK_THROWS_AS(poly_add(P(A, "x"), P(B, "x")), AmbientMismatch);
}

TEST_CASE("powers") {
  auto R2 = PolyRing::make(2, {"x", "y"});
  CHECK(poly_power(P(R2, "x+y"), 2) == P(R2, "x^2+y^2"));
  CHECK(poly_power(P(R2, "x+y"), 0) == Polynomial::constant(R2, 1));
  auto R3 = PolyRing::make(3, {"x", "y", "z"});
  CHECK(poly_power(P(R3, "x+y+z"), 3) == P(R3, "x^3+y^3+z^3"));
}

TEST_CASE("exponent overflow is an error") {
  auto R = PolyRing::make(2, {"x"});
  CHECK_THROWS_AS(poly_power(P(R, "x^65536"), 1u << 16), OverflowError);
}

TEST_CASE("leading terms") {
  auto G = PolyRing::make(2, {"x", "y"});
  auto f = P(G, "x^2 + x*y + y^3");
  CHECK(G->monomial_to_string(leading_term(f, MonomialOrder::grevlex()).mono) == "y^3");
  CHECK(G->monomial_to_string(leading_term(f, MonomialOrder::lex()).mono) == "x^2");
  auto R7 = PolyRing::make(7, {"x", "y"});
  auto t = leading_term(P(R7, "5*x"), MonomialOrder::grevlex());
  CHECK(t.coeff == 5);
  CHECK(R7->monomial_to_string(t.mono) == "x");
  CHECK_THROWS(leading_term(Polynomial(G), MonomialOrder::grevlex()));
}

TEST_CASE("parser diagnostics") {
  auto R = PolyRing::make(3, {"x", "y"});
  CHECK_THROWS_AS(P(R, "x + q"), ParseError);
  CHECK_THROWS_AS(P(R, "x +"), ParseError);
  CHECK(P(R, "(x+y)^3") == P(R, "x^3+y^3"));
  CHECK(P(R, "2*x - -y") == P(R, "2*x + y"));
  CHECK(Polynomial(R).degree() == kDegreeMinusInfinity);
}

TEST_CASE("property: ring axioms on random triples") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 7u, 997u}) {
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      auto R = PolyRing::make(p, {"x", "y", "z"}, order);
      for (int trial = 0; trial < 20; ++trial) {
        auto a = random_poly(R, rng, 4, 3);
        auto b = random_poly(R, rng, 4, 3);
        auto c = random_poly(R, rng, 4, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        if (!a.is_zero() && !b.is_zero()) {
          auto lab = leading_term(a * b, order);
          auto la = leading_term(a, order);
          auto lb = leading_term(b, order);
          CHECK(lab.mono == R->mul(la.mono, lb.mono));
          CHECK(lab.coeff == R->field().mul(la.coeff, lb.coeff));
        }
      }
    }
  }
}

TEST_CASE("property: p^e powers agree with the term-wise map") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = PolyRing::make(p, {"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
      auto f = random_poly(R, rng, 3, 2);
      std::uint64_t q = 1;
      for (int e = 0; e <= 3; ++e, q *= p) {
        // Repeated multiplication as the independent route.
        Polynomial slow = Polynomial::constant(R, 1);
        for (std::uint64_t k = 0; k < q; ++k) slow = slow * f;
        CHECK(poly_power(f, q) == slow);
        CHECK(f.frobenius_power(q) == slow);
      }
    }
  }
}
