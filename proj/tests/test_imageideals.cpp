#include <doctest.h>

#include "lnd/imageideals.hpp"
#include "support.hpp"

using namespace lnd;
using lnd::test::make_derivation;
using lnd::test::P;

namespace {

Derivation final_example() { return make_derivation({"t"}, {"X1", "X2"}, {"t*(1 - t)", "-t*X1 + 1 - t"}); }

std::vector<Poly> polys(const RingPtr& r, const std::vector<std::string>& xs) {
  std::vector<Poly> out;
  for (const auto& x : xs) out.push_back(P(r, x));
  return out;
}

Rational fact(std::size_t n) {
  Rational r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= static_cast<long>(i);
  return r;
}

}  // namespace

TEST_CASE("kernel generators") {
  const auto n = make_derivation({"a", "b"}, {"X", "Y"}, {"a", "b"});
  auto k = kernel_generator(n);
  REQUIRE(k.generators.size() == 1);
  CHECK(k.generators[0] == P(n.ring(), "b*X - a*Y"));
  CHECK(k.certified);
  const auto f = final_example();
  k = kernel_generator(f);
  CHECK(k.generators[0] == P(f.ring(), "t*(1 - t)*X2 + t/2*X1^2 + (t - 1)*X1"));
  const auto s = make_derivation({}, {"X", "Y"}, {"1", "0"});
  CHECK(kernel_generator(s).generators[0] == P(s.ring(), "-Y"));
}

TEST_CASE("minimal exponent") {
  CHECK(min_exponent(1, 2) == 1);
  CHECK(min_exponent(3, 2) == 2);
  for (std::uint32_t j = 0; j < 10; ++j) CHECK(min_exponent(j, 1) == 0);
  CHECK_THROWS(min_exponent(3, 0));
}

TEST_CASE("image ideal of the nice derivation DX = a, DY = b") {
  const auto d = make_derivation({"a", "b"}, {"X", "Y"}, {"a", "b"});
  const auto res = image_ideal(d, 2);
  CHECK(res.theorem == Theorem::inice);
  CHECK(res.generators == polys(d.ring(), {"b^2", "a*b", "a^2"}));
  CHECK(res.fully_certified());
  // D^j(X^i1 Y^i2) = j! a^i1 b^i2, by the product rule on j linear factors
  for (std::size_t i = 0; i < res.generators.size(); ++i)
    CHECK(d.iterate(res.preimages[i], 2) == res.generators[i] * res.factors[i]);
  CHECK(d.iterate(P(d.ring(), "X*Y"), 2) == P(d.ring(), "a*b") * fact(2));
}

TEST_CASE("image ideal of the final example") {
  const auto f = final_example();
  ImageIdealOptions o;
  o.bounds = {3, 2};
  auto res = image_ideal(f, 1, o);
  CHECK(res.theorem == Theorem::quasi2var_pid);
  CHECK(res.generators == polys(f.ring(), {"t - 1"}));
  res = image_ideal(f, 2, o);
  CHECK(res.generators == polys(f.ring(), {"t - 1"}));
  REQUIRE(res.m);
  CHECK(*res.m == 1);
  for (const auto& g : res.generators) CHECK(f.apply(g).is_zero());
}

TEST_CASE("quasi branch divisibility") {
  const auto f = final_example();
  const Poly b = P(f.ring(), "t*(1 - t)");
  for (std::uint32_t j = 1; j <= 4; ++j)
    for (std::uint32_t i2 = 0; 2 * i2 <= j; ++i2) {
      const std::uint32_t i1 = j - 2 * i2;
      const Poly img = f.iterate(P(f.ring(), "X1").pow(i1) * P(f.ring(), "X2").pow(i2), j);
      CHECK(divide_exact(img, b.pow(min_exponent(j, 2))));
    }
}

TEST_CASE("strictness decomposition") {
  const auto f = final_example();
  auto s = strictness_decompose(f);
  CHECK(s.kind == StrictnessKind::strictly_1_quasi);
  CHECK(s.u == P(f.ring(), "t/2*X1^2 + (t - 1)*X1"));
  const auto rep = classify(f);
  CHECK(rep.quasi->f == s.u + rep.quasi->b * s.v);

  const auto g = make_derivation({"t"}, {"X1", "X2"}, {"t", "-1 - t*X1"});
  s = strictness_decompose(g);
  CHECK(s.kind == StrictnessKind::nice_able);
  CHECK(s.u == P(g.ring(), "X1"));
  CHECK(s.v == P(g.ring(), "1/2*X1^2"));
  REQUIRE(s.new_coordinate);
  CHECK(*s.new_coordinate == P(g.ring(), "X2 + 1/2*X1^2"));
  CHECK(g.apply(*s.new_coordinate) == P(g.ring(), "-1"));
  CHECK(g.iterate(*s.new_coordinate, 2).is_zero());
}

TEST_CASE("slice construction") {
  const auto f = make_derivation({"t"}, {"X", "Y"}, {"t", "1 - t"});
  auto s = slice_construct(f);
  REQUIRE(s);
  CHECK(*s == P(f.ring(), "X + Y"));
  const auto x = make_derivation({}, {"X"}, {"1"});
  s = slice_construct(x);
  REQUIRE(s);
  CHECK(*s == P(x.ring(), "X"));
  const auto g = make_derivation({"t"}, {"X1", "X2"}, {"t", "-1 - t*X1"});
  s = slice_construct(g);
  REQUIRE(s);
  CHECK(g.apply(*s) == P(g.ring(), "1"));
  CHECK_THROWS_AS(slice_construct(final_example(), {3, 2}), DomainError);
}

TEST_CASE("slice law") {
  for (const auto& d : {make_derivation({}, {"X"}, {"1"}), make_derivation({"t"}, {"X", "Y"}, {"t", "1 - t"})}) {
    const auto s = slice_construct(d);
    REQUIRE(s);
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(d.iterate(s->pow(static_cast<unsigned>(n)) * (Rational(1) / fact(n)), n) == P(d.ring(), "1"));
      const auto res = image_ideal(d, n);
      CHECK(res.theorem == Theorem::slice);
      CHECK(res.generators == polys(d.ring(), {"1"}));
    }
  }
}

TEST_CASE("three-variable reduction") {
  const auto d = make_derivation({"t"}, {"X", "Y", "Z"}, {"0", "t", "X"});
  const auto red = nice3var_reduce(d);
  CHECK(red.coordinates[0] == P(d.ring(), "X"));
  Poly rel(d.ring());
  for (std::size_t i = 0; i < 3; ++i) rel += red.syzygy[i] * d.image(i);
  CHECK(rel.is_zero());
  const auto& m = red.matrix;
  const Poly det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  CHECK(det.is_constant());
  CHECK_FALSE(det.is_zero());
  for (const auto& g : red.kernel.generators) CHECK(d.apply(g).is_zero());

  const auto e = make_derivation({"t"}, {"X", "Y", "Z"}, {"t", "-t", "X + Y"});
  const auto r2 = nice3var_reduce(e);
  CHECK(r2.coordinates[0] == P(e.ring(), "X + Y"));
  for (const auto& g : r2.kernel.generators) CHECK(e.apply(g).is_zero());
}

TEST_CASE("three-variable image ideals") {
  const auto d = make_derivation({"t"}, {"X", "Y", "Z"}, {"0", "t", "X"});
  for (std::size_t j = 1; j <= 2; ++j) {
    const auto res = image_ideal(d, j);
    CHECK(res.theorem == Theorem::pid3var);
    CHECK(res.generators.size() == j + 1);
  }
  CHECK(image_ideal(d, 1).generators == polys(d.ring(), {"X", "t"}));
  const auto s = make_derivation({"t"}, {"X", "Y", "Z"}, {"1", "0", "0"});
  CHECK(image_ideal(s, 2).theorem == Theorem::slice);
  const auto w = make_derivation({"a", "b"}, {"X", "Y", "Z"}, {"a", "b", "b*X - a*Y"});
  const auto res = image_ideal(w, 1);
  CHECK(res.theorem == Theorem::oracle_only);
  REQUIRE(res.oracle);
  CHECK(res.oracle->overall == oracle::Verdict::pass);
}

TEST_CASE("monotone containment of image ideals") {
  const auto d = make_derivation({"a", "b"}, {"X", "Y"}, {"a", "b"});
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto lo = image_ideal(d, n), hi = image_ideal(d, n + 1);
    for (const auto& g : hi.generators)
      CHECK(oracle::ideal_membership_bounded(lo.generators, g, {1, 0}).value == Tri::yes);
  }
}

TEST_CASE("degenerate and unsupported inputs") {
  const auto d = make_derivation({"a", "b"}, {"X", "Y"}, {"a", "b"});
  const auto z = image_ideal(d, 0);
  CHECK(z.theorem == Theorem::trivial);
  CHECK(z.generators == polys(d.ring(), {"1"}));
  CHECK_THROWS_AS(image_ideal(make_derivation({}, {"X"}, {"X"}), 1), Unsupported);
  CHECK_THROWS_AS(image_ideal(make_derivation({"t"}, {"X", "Y"}, {"t", "t"}), 1), DomainError);
}
