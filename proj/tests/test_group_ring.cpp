#include <doctest.h>

#include "oracles.hpp"
#include "relpoly/group_ring.hpp"
#include "relpoly/sampling.hpp"
#include "relpoly/word.hpp"

using namespace relpoly;

namespace {

Word W(const std::string& s, GenNames n = {}) { return parse_word(s, n); }

}  // namespace

TEST_CASE("ring arithmetic") {
  const RingElement a = ring_from_word(W("xy"), 2);
  const RingElement b = ring_from_word(W("xy"), -2);
  CHECK(ring_add(a, b) == ring_zero());
  CHECK(ring_negate(a) == b);
  CHECK(ring_mul(ring_one(), a) == a);
  CHECK(ring_mul(a, ring_zero()) == ring_zero());

  // Multiplication reduces across the juncture: (xy) * (Yx) = x^2.
  CHECK(ring_mul(ring_from_word(W("xy")), ring_from_word(W("Yx"))) ==
        ring_from_word(W("x^2")));

  CHECK(augmentation(ring_add(a, ring_one())) == 3);
  CHECK(augmentation(ring_mul(a, a)) == 4);  // multiplicative on these
}

TEST_CASE("derivative base cases and the letter rule") {
  CHECK(fox_derivative(W("x"), Gen::x) == ring_one());
  CHECK(fox_derivative(W("x"), Gen::y) == ring_zero());
  CHECK(fox_derivative(W("X"), Gen::x) == ring_from_word(W("X"), -1));
  CHECK(fox_derivative(Word{}, Gen::x) == ring_zero());

  // d(xy)/dy = x; d(xY)/dy = -xY.
  CHECK(fox_derivative(W("xy"), Gen::y) == ring_from_word(W("x")));
  CHECK(fox_derivative(W("xY"), Gen::y) == ring_from_word(W("xY"), -1));
}

TEST_CASE("derivative agrees with the recursive product-rule oracle") {
  Rng rng(11);
  for (int i = 0; i < 250; ++i) {
    const Word w = random_reduced_word(rng, 1 + (i % 30));
    CHECK(fox_derivative(w, Gen::x) == oracle::fox_recursive(w, Gen::x));
    CHECK(fox_derivative(w, Gen::y) == oracle::fox_recursive(w, Gen::y));
  }
}

TEST_CASE("derivative of a ring element is linear") {
  const RingElement f =
      ring_add(ring_from_word(W("xyX"), 3), ring_from_word(W("Y"), -2));
  const RingElement expect = ring_add(
      ring_mul(ring_from_word(Word{}, 3), fox_derivative(W("xyX"), Gen::y)),
      ring_mul(ring_from_word(Word{}, -2), fox_derivative(W("Y"), Gen::y)));
  CHECK(fox_derivative(f, Gen::y) == expect);
}

TEST_CASE("fundamental formula holds on random elements") {
  Rng rng(13);
  for (int i = 0; i < 150; ++i) {
    RingElement f = ring_from_word(random_reduced_word(rng, 1 + (i % 20)),
                                   1 + static_cast<Int>(i % 3));
    if (i % 2 == 0) {
      f = ring_add(f, ring_from_word(random_reduced_word(rng, 1 + (i % 7)),
                                     -2 + static_cast<Int>(i % 5)));
    }
    CHECK(fundamental_formula_check(f));
  }
}

TEST_CASE("abelian support counts terms and signed sums separately") {
  // d(xyXY)/dx = 1 - xyX: two terms at distinct lattice points.
  const LatticeMultiset m =
      abelian_support(fox_derivative(W("xyXY"), Gen::x));
  CHECK(m.counts == std::map<Vec2, Int>{{{0, 0}, 1}, {{0, 1}, 1}});
  CHECK(m.signed_sums == std::map<Vec2, Int>{{{0, 0}, 1}, {{0, 1}, -1}});

  // x + yxY abelianize to the same point: count 2, signed sum 2.
  const LatticeMultiset s = abelian_support(
      ring_add(ring_from_word(W("x")), ring_from_word(W("yxY"))));
  CHECK(s.counts == std::map<Vec2, Int>{{{1, 0}, 2}});
  CHECK(s.signed_sums == std::map<Vec2, Int>{{{1, 0}, 2}});

  // x - yxY: the signed sums cancel but the count remains.
  const LatticeMultiset c = abelian_support(
      ring_add(ring_from_word(W("x")), ring_from_word(W("yxY"), -1)));
  CHECK(c.counts == std::map<Vec2, Int>{{{1, 0}, 2}});
  CHECK(c.signed_sums.empty());
}

TEST_CASE("derivative of a one-relator word in ta-names") {
  // r = t^-1 a^2 t a^-1 with slots t = x, a = y. Derivative with respect to
  // a has exactly three terms: +t^-1, +t^-1 a, -r' where r' = t^-1 a^2 t a^-1.
  const GenNames ta = GenNames::of("ta");
  const Word bs = W("TaatA", ta);  // t^-1 a^2 t a^-1
  const RingElement d = fox_derivative(bs, Gen::y);
  REQUIRE(d.terms.size() == 3);
  CHECK(d.terms.at(W("T", ta)) == 1);
  CHECK(d.terms.at(W("Ta", ta)) == 1);
  CHECK(d.terms.at(bs) == -1);

  const LatticeMultiset m = abelian_support(d);
  CHECK(m.counts ==
        std::map<Vec2, Int>{{{-1, 0}, 1}, {{-1, 1}, 1}, {{0, 1}, 1}});
}
