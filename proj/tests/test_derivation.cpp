#include <doctest.h>

#include "support.hpp"

using namespace lnd;
using lnd::test::make_derivation;
using lnd::test::P;

namespace {

Derivation final_example() { return make_derivation({"t"}, {"X1", "X2"}, {"t*(1 - t)", "-t*X1 + 1 - t"}); }

}  // namespace

TEST_CASE("apply") {
  const auto d = make_derivation({"a", "b"}, {"X", "Y"}, {"a", "b"});
  CHECK(d.apply(P(d.ring(), "X*Y")) == P(d.ring(), "a*Y + b*X"));
  CHECK(d.apply(P(d.ring(), "b*X - a*Y")).is_zero());
  const auto f = final_example();
  CHECK(f.apply(P(f.ring(), "1/2*X1^2 + (1 - t)*X2")) == P(f.ring(), "(1 - t)^2"));
}

TEST_CASE("iterate") {
  const auto d = make_derivation({}, {"X"}, {"1"});
  CHECK(d.iterate(P(d.ring(), "X*X^2"), 3) == P(d.ring(), "6"));
  const auto n = make_derivation({"f1", "f2"}, {"X1", "X2"}, {"f1", "f2"});
  CHECK(n.iterate(P(n.ring(), "X1*X2"), 2) == P(n.ring(), "2*f1*f2"));
  const Poly g = P(n.ring(), "X1^3 + f2*X2");
  CHECK(n.iterate(g, 0) == g);
}

TEST_CASE("derivations are validated") {
  const auto r = PolyRing::make({"t"}, {"X", "Y"});
  CHECK_THROWS_AS(Derivation(r, {P(r, "1")}), DomainError);
  CHECK_THROWS_AS(Derivation(r, {P(r, "0"), P(r, "0")}), DomainError);
}

TEST_CASE("deg_D") {
  const auto d = make_derivation({}, {"X", "Y"}, {"Y", "1"});
  CHECK(deg_D(d, Poly(d.ring())).kind == DDegree::Kind::minus_infinity);
  CHECK(deg_D(d, P(d.ring(), "X")) == DDegree{DDegree::Kind::finite, 2});
  const auto n = make_derivation({"f1", "f2"}, {"X1", "X2"}, {"f1", "f2"});
  CHECK(deg_D(n, P(n.ring(), "X1*X2")).value == 2);
  const auto e = make_derivation({}, {"X"}, {"X"});
  CHECK(deg_D(e, P(e.ring(), "X")).kind == DDegree::Kind::never);
  const auto s = make_derivation({}, {"X", "Y"}, {"Y", "X"});
  CHECK_FALSE(deg_D(s, P(s.ring(), "X"), 8).finite());
}

TEST_CASE("classify") {
  const auto n = make_derivation({"a", "b"}, {"X", "Y"}, {"a", "b"});
  auto rep = classify(n);
  CHECK(rep.lnd == Tri::yes);
  CHECK(rep.classification == Classification::nice);
  CHECK(rep.irreducible);
  CHECK(rep.degrees[0].value == 1);
  CHECK(rep.degrees[1].value == 1);

  const auto f = final_example();
  rep = classify(f);
  CHECK(rep.lnd == Tri::yes);
  CHECK(rep.nice_set == std::vector<std::size_t>{0});
  REQUIRE(rep.quasi);
  CHECK(rep.quasi->b == P(f.ring(), "t*(1 - t)"));
  CHECK(rep.quasi->f == P(f.ring(), "t/2*X1^2 + (t - 1)*X1"));
  CHECK(rep.quasi->d == 2);
  CHECK(-rep.quasi->f.partial("X1") == f.image(1));
  CHECK(rep.quasi->f.constant_term() == 0);

  CHECK(classify(make_derivation({}, {"X"}, {"X"})).lnd == Tri::no);
  CHECK_FALSE(classify(make_derivation({"t"}, {"X", "Y"}, {"t", "t*X"})).irreducible);
}

TEST_CASE("fixed point freeness") {
  CHECK(is_fixed_point_free(make_derivation({"t"}, {"X", "Y"}, {"t", "1 - t"})).value == Tri::yes);
  CHECK(is_fixed_point_free(make_derivation({"a", "b"}, {"X", "Y"}, {"a", "b"})).value == Tri::no);
  const auto f = final_example();
  const auto v = is_fixed_point_free(f);
  CHECK(v.value == Tri::no);
  REQUIRE(v.failing_primes.size() == 1);
}

TEST_CASE("localized fixed point freeness") {
  const auto f = final_example();
  CHECK(localized_fpf(f, P(f.ring(), "t")));
  CHECK_FALSE(localized_fpf(f, P(f.ring(), "1 - t")));
  const auto g = make_derivation({"t"}, {"X1", "X2"}, {"t", "-1"});
  CHECK(localized_fpf(g, P(g.ring(), "t")));
}

TEST_CASE("kernel elements") {
  const auto n = make_derivation({"a", "b"}, {"X", "Y"}, {"a", "b"});
  CHECK(verify_kernel_element(n, P(n.ring(), "b*X - a*Y")));
  const auto w = make_derivation({"a", "b"}, {"X", "Y", "Z"}, {"a", "b", "b*X - a*Y"});
  const Poly u = P(w.ring(), "b*X - a*Y");
  CHECK(verify_kernel_element(w, P(w.ring(), "b*Z") - u * P(w.ring(), "Y")));
  CHECK(verify_kernel_element(w, u));
  const auto x = make_derivation({"a"}, {"X"}, {"a"});
  CHECK_FALSE(verify_kernel_element(x, P(x.ring(), "X")));
}

TEST_CASE("factorizations are validated") {
  const auto r = PolyRing::make({"t"}, {"X"});
  CHECK_NOTHROW(validate_factorization(P(r, "t - t^2"), {{P(r, "t"), 1}, {P(r, "1 - t"), 1}}));
  CHECK_THROWS(validate_factorization(P(r, "t - t^2"), {{P(r, "t"), 2}}));
  CHECK_THROWS(validate_factorization(P(r, "t^4 + 1"), {{P(r, "t^4 + 1"), 1}}));
  CHECK_NOTHROW(validate_factorization(P(r, "t^4 + 1"), {{P(r, "t^4 + 1"), 1, true}}));
}

TEST_CASE("unit ideal in the coefficient ring") {
  const auto r = PolyRing::make({"a", "b"}, {"X"});
  auto v = unit_ideal_in_coefficients({P(r, "a"), P(r, "b")}, 4);
  CHECK(v.value == Tri::no);
  v = unit_ideal_in_coefficients({P(r, "a"), P(r, "1 - a*b")}, 4);
  REQUIRE(v.value == Tri::yes);
  CHECK(v.bezout[0] * P(r, "a") + v.bezout[1] * P(r, "1 - a*b") == P(r, "1"));
}
