#include <doctest.h>

#include "lnd/univariate.hpp"
#include "support.hpp"

using namespace lnd;
using lnd::test::P;

TEST_CASE("arithmetic") {
  const auto r = PolyRing::make({"a", "b"}, {"X"});
  CHECK(P(r, "X + 1") * P(r, "X - 1") == P(r, "X^2 - 1"));
  CHECK(P(r, "a + b").pow(2) == P(r, "a^2 + 2*a*b + b^2"));
  CHECK(P(r, "3*a*X - 1/2") + Poly(r) == P(r, "3*a*X - 1/2"));
  CHECK((P(r, "a") - P(r, "a")).is_zero());
}

TEST_CASE("arithmetic laws on random polynomials") {
  std::mt19937_64 rng(test::seed());
  const auto r = PolyRing::make({"t"}, {"X", "Y"});
  for (int i = 0; i < 100; ++i) {
    const Poly f = test::random_poly(rng, r, 4, 2, 2), g = test::random_poly(rng, r, 4, 2, 2),
               h = test::random_poly(rng, r, 4, 2, 2);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
  }
}

TEST_CASE("partial derivatives") {
  const auto r = PolyRing::make({"t"}, {"X1", "X2"});
  CHECK(P(r, "X1^2*X2").partial("X1") == P(r, "2*X1*X2"));
  CHECK(P(r, "t*(1 - t)*X2 + t/2*X1^2 + (t - 1)*X1").partial("X1") == P(r, "t*X1 + t - 1"));
  CHECK(P(r, "t^3 + 5").partial("X1").is_zero());
}

TEST_CASE("parse errors carry columns") {
  const auto r = PolyRing::make({"t"}, {"X"});
  try {
    parse_poly(r, "t **", 4);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(parse_poly(r, "Y + 1"), ParseError);
  CHECK_THROWS_AS(parse_poly(r, "X / (t)"), ParseError);
  CHECK_THROWS_AS(parse_poly(r, "(X + 1"), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(test::seed() + 1);
  const auto r = PolyRing::make({"a", "b"}, {"X", "Y"});
  for (int i = 0; i < 100; ++i) {
    const Poly f = test::random_poly(rng, r, 5, 2, 3);
    CHECK(parse_poly(r, f.str()) == f);
  }
}

TEST_CASE("gcd") {
  const auto r = PolyRing::make({"a", "b"}, {"X"});
  CHECK(gcd(P(r, "a"), P(r, "b")) == P(r, "1"));
  CHECK(gcd(P(r, "a*b"), P(r, "a^2")) == P(r, "a"));
  const auto q = PolyRing::make({"t"}, {"X1"});
  CHECK(is_unit(gcd(P(q, "t*(1 - t)"), P(q, "t*X1 + t - 1"))));
  // independent check: neither degree-1 factor divides the second input
  CHECK_FALSE(divide_exact(P(q, "t*X1 + t - 1"), P(q, "t")));
  CHECK_FALSE(divide_exact(P(q, "t*X1 + t - 1"), P(q, "1 - t")));
  CHECK(gcd(Poly(q), Poly(q)).is_zero());
  const std::vector<Poly> zeros{Poly(q), Poly(q)};
  CHECK_THROWS_AS(multivariate_gcd(zeros), DomainError);
}

TEST_CASE("extended Euclid") {
  const auto r = PolyRing::make({"t"}, {"X"});
  auto e = extended_euclid(P(r, "t"), P(r, "1 - t"));
  CHECK(e.gcd == P(r, "1"));
  CHECK(e.alpha * P(r, "t") + e.beta * P(r, "1 - t") == P(r, "1"));
  e = extended_euclid(P(r, "t^2"), P(r, "t"));
  CHECK(e.gcd == P(r, "t"));
  CHECK(e.alpha == P(r, "0"));
  CHECK(e.beta == P(r, "1"));
  e = extended_euclid(P(r, "t^2 - 1"), P(r, "t + 1"));
  CHECK(e.gcd == P(r, "t + 1"));
  CHECK(e.alpha == P(r, "0"));
  CHECK(e.beta == P(r, "1"));
}

TEST_CASE("reduction modulo a prime of Q[t]") {
  const auto r = PolyRing::make({"t"}, {"X1"});
  CHECK(reduce_mod_prime(P(r, "t*X1 + t - 1"), P(r, "t")) == P(r, "-1"));
  CHECK(reduce_mod_prime(P(r, "t*X1 + t - 1"), P(r, "1 - t")) == P(r, "X1"));
  CHECK(reduce_mod_prime(P(r, "(t^2 + 1)*X1"), P(r, "t^2 + 1")).is_zero());

  std::mt19937_64 rng(test::seed() + 2);
  const Poly p = P(r, "t^2 + 1");
  for (int i = 0; i < 50; ++i) {
    const Poly f = test::random_poly(rng, r, 4, 3, 2), g = test::random_poly(rng, r, 4, 3, 2);
    CHECK(reduce_mod_prime(f * g, p) == reduce_mod_prime(reduce_mod_prime(f, p) * reduce_mod_prime(g, p), p));
    CHECK(reduce_mod_prime(f + g, p) == reduce_mod_prime(f, p) + reduce_mod_prime(g, p));
  }
}

TEST_CASE("irreducibility of small degree") {
  const auto r = PolyRing::make({"t"}, {"X"});
  CHECK(irreducible_smalldeg(P(r, "t^2 + 1")) == Tri::yes);
  CHECK(irreducible_smalldeg(P(r, "t^2 - 1")) == Tri::no);
  CHECK(irreducible_smalldeg(P(r, "t^4 + 1")) == Tri::unknown);
  CHECK(irreducible_smalldeg(P(r, "2*t + 3")) == Tri::yes);
  const auto f = factor_smalldeg(P(r, "t - t^2"));
  REQUIRE(f);
  CHECK(f->size() == 2);
}

TEST_CASE("exact division") {
  const auto r = PolyRing::make({"a", "b"}, {"X", "Y"});
  const auto q = divide_exact(P(r, "a^2*X^2 - b^2*Y^2"), P(r, "a*X - b*Y"));
  REQUIRE(q);
  CHECK(*q == P(r, "a*X + b*Y"));
  const auto d = divide(P(r, "X^2 + 1"), P(r, "X"));
  CHECK_FALSE(d.remainder.is_zero());
  CHECK(d.quotient * P(r, "X") + d.remainder == P(r, "X^2 + 1"));
}

TEST_CASE("monomials within bounds agree with a brute-force count") {
  const auto r = PolyRing::make({"a", "b"}, {"X", "Y", "Z"});
  for (std::uint32_t p = 0; p <= 3; ++p)
    for (std::uint32_t v = 0; v <= 3; ++v) {
      std::size_t brute = 0;
      for (std::uint32_t e0 = 0; e0 <= p; ++e0)
        for (std::uint32_t e1 = 0; e0 + e1 <= p; ++e1)
          for (std::uint32_t e2 = 0; e2 <= v; ++e2)
            for (std::uint32_t e3 = 0; e2 + e3 <= v; ++e3)
              for (std::uint32_t e4 = 0; e2 + e3 + e4 <= v; ++e4) ++brute;
      const auto m = monomials_within(*r, p, v);
      CHECK(m.size() == brute);
      CHECK(std::is_sorted(m.begin(), m.end(), GrlexLess{}));
    }
}

TEST_CASE("ring homomorphisms") {
  const auto r = PolyRing::make({"t"}, {"X", "Y"});
  const Poly f = P(r, "t*X^2 + Y");
  const Poly g = map_variables(f, r, {P(r, "t"), P(r, "X + Y"), P(r, "X")});
  CHECK(g == P(r, "t*(X + Y)^2 + X"));
}

TEST_CASE("univariate rational roots") {
  const UPoly p({Rational(-1), Rational(0), Rational(1)});
  auto roots = p.rational_roots();
  std::sort(roots.begin(), roots.end());
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == -1);
  CHECK(roots[1] == 1);
}
