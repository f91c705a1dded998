#include <doctest.h>

#include <functional>
#include <string>

#include "oracles.hpp"
#include "relpoly/pipeline.hpp"
#include "relpoly/sampling.hpp"

using namespace relpoly;

namespace {

Word W(const std::string& s, GenNames n = {}) { return parse_word(s, n); }

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

const GenNames kTA = GenNames::of("ta");

}  // namespace

TEST_CASE("presentation normalization") {
  const Presentation pi = make_presentation(W("YxyXy"));
  CHECK(is_cyclically_reduced(pi.relator));
  CHECK(pi.relator == W("y"));
  CHECK(free_reduce(concat(concat(pi.conjugator, pi.relator),
                           inverse(pi.conjugator))) == free_reduce(pi.original));

  const Presentation flat = make_presentation(W("yxyXY^2x"));
  CHECK(flat.relator == flat.original);
  CHECK(flat.conjugator.empty());

  CHECK(code_of([] { make_presentation(W("xyYX")); }) == "empty-relator");
  CHECK(code_of([] { make_presentation(Word{}); }) == "empty-relator");
}

TEST_CASE("classification by exponent sums") {
  CHECK(analyze(make_presentation(W("xyXY"))).cls == Classification::Nice);
  CHECK(analyze(make_presentation(W("xyXY"))).b1 == 2);

  const Analysis simple = analyze(make_presentation(W("Taata", kTA)));
  CHECK(simple.cls == Classification::Simple);
  CHECK(simple.eps == Vec2{0, 3});
  CHECK(simple.b1 == 1);

  const Analysis conv = analyze(make_presentation(W("xy^2")));
  CHECK(conv.cls == Classification::SimpleConvertible);
  CHECK(conv.eps == Vec2{1, 2});
  CHECK(conv.b1 == 1);

  const Analysis pow = analyze(make_presentation(W("x^3")));
  CHECK(pow.cls == Classification::PowerOfGenerator);

  const Analysis sq = analyze(make_presentation(W("xyxy")));
  CHECK(sq.power_root == W("xy"));
  CHECK(sq.power_multiplicity == 2);
  CHECK(sq.cls == Classification::SimpleConvertible);

  CHECK(to_string(Classification::Nice) == "nice");
  CHECK(to_string(Classification::SimpleConvertible) == "simple-convertible");
}

TEST_CASE("walk route and both derivative routes agree") {
  Rng rng(47);
  for (int i = 0; i < 120; ++i) {
    const Presentation pi =
        make_presentation(random_nice_relator(rng, 24));
    const MarkedPolytope w = polytope_via_walk(pi);
    const MarkedPolytope dy = polytope_via_fox(pi, Gen::y);
    const MarkedPolytope dx = polytope_via_fox(pi, Gen::x);
    CHECK(equal_up_to_translation(w, dy));
    CHECK(equal_up_to_translation(w, dx));
  }
}

TEST_CASE("commutator gives a single marked point") {
  const PolytopeResult pr = marked_polytope(make_presentation(W("xyXY")));
  CHECK(pr.info.cls == Classification::Nice);
  CHECK(pr.polytope.is_point());
  CHECK(pr.polytope.vertex(0) == MarkedVertex{{0, 0}, true});
  CHECK(pr.to_original.a == 1);
  CHECK(pr.to_original.b == 0);
  CHECK(pr.to_original.c == 0);
  CHECK(pr.to_original.d == 1);
  CHECK(pr.effective.relator == pr.original.relator);
}

TEST_CASE("a sixteen-letter relator gives a marked triangle") {
  // Fox derivative with respect to x has eight terms whose hull, minus the
  // unit y-segment, is a triangle with exactly one unmarked vertex.
  const Word r = W("XYxy^2XYx^2YXyXyxY");
  const PolytopeResult pr = marked_polytope(make_presentation(r));
  REQUIRE(pr.polytope.size() == 3);
  CHECK(pr.polytope.vertex(0) == MarkedVertex{{0, 0}, true});
  CHECK(pr.polytope.vertex(1) == MarkedVertex{{1, 0}, true});
  CHECK(pr.polytope.vertex(2) == MarkedVertex{{0, 1}, false});
}

TEST_CASE("rank-one polytopes") {
  // t^-1 a^2 t a^-1: the two-syllable shape with a unit exponent has no
  // consistent marking and is rejected.
  CHECK(code_of([] {
          marked_polytope(make_presentation(W("TaatA", kTA), kTA));
        }) == "baumslag-solitar-excluded");

  // t^-1 a^2 t a^-3 is accepted: a single unmarked point.
  const PolytopeResult bs23 =
      marked_polytope(make_presentation(W("Taata^-3", kTA), kTA));
  CHECK(bs23.info.cls == Classification::Simple);
  CHECK(bs23.polytope.is_point());
  CHECK(!bs23.polytope.vertex(0).marked);

  // t^-2 a t^2 a: prefix sums spread two levels, every extreme column has a
  // single term, so the interval has both endpoints marked.
  const PolytopeResult sp =
      marked_polytope(make_presentation(W("T^2at^2a", kTA), kTA));
  CHECK(sp.info.eps == Vec2{0, 2});
  REQUIRE(sp.polytope.is_segment());
  CHECK(sp.polytope.vertex(0) == MarkedVertex{{0, 0}, true});
  CHECK(sp.polytope.vertex(1) == MarkedVertex{{1, 0}, true});
}

TEST_CASE("single-generator relators are rejected whole") {
  CHECK(code_of([] { marked_polytope(make_presentation(W("x^3"))); }) ==
        "power-of-generator");
  // xy converts to a one-generator relator (the group is infinite cyclic).
  CHECK(code_of([] { marked_polytope(make_presentation(W("xy"))); }) ==
        "power-of-generator");
}

TEST_CASE("simple form reaches the target character values") {
  Rng rng(53);
  int converted = 0;
  for (int i = 0; i < 150; ++i) {
    const Word w = random_reduced_word(rng, 2 + (i % 16));
    Presentation pi{GenNames{}, w, {}, {}};
    try {
      pi = make_presentation(w);
    } catch (const Error&) {
      continue;
    }
    const Vec2 eps = abelianize(pi.relator);
    if (eps == Vec2{0, 0}) continue;
    const Direction phi = positive_orthogonal(eps);
    SimpleFormResult sf{pi, {}, 0};
    try {
      sf = simple_form(pi, phi);
    } catch (const Error& e) {
      // Only the resource caps may stop the loop.
      CHECK(std::string(e.code()) == "conversion-too-large");
      continue;
    }
    ++converted;
    const Int det = sf.to_original.det();
    CHECK((det == 1 || det == -1));
    // The character rewritten in converted coordinates is exactly (0, 1).
    CHECK(pull_back(phi, sf.to_original) == Direction::checked(0, 1));
    // Exponent sums transport by the same map.
    CHECK(sf.to_original.apply(abelianize(sf.pres.relator)) ==
          abelianize(pi.relator));
  }
  CHECK(converted > 60);
}

TEST_CASE("convertible presentations transport the polytope") {
  const PolytopeResult pr = marked_polytope(make_presentation(W("x^2y^3")));
  CHECK(pr.info.cls == Classification::SimpleConvertible);
  CHECK(pr.conversion_steps > 0);
  const Int det = pr.to_original.det();
  CHECK((det == 1 || det == -1));
  // The converted relator is Simple with the quotient generated by slot x.
  CHECK(abelianize(pr.effective.relator).x == 0);

  // Original characters that kill the exponent sums map to multiples of the
  // effective x-direction.
  const Direction phi = positive_orthogonal(pr.info.eps);
  const Direction eff = effective_direction(pr, phi);
  CHECK(eff.v.y == 0);
}

TEST_CASE("characters must kill the exponent sums") {
  const PolytopeResult pr =
      marked_polytope(make_presentation(W("Taata^-3", kTA), kTA));
  CHECK(code_of([&] { effective_direction(pr, Direction::checked(0, 1)); }) ==
        "character-does-not-descend");
  CHECK(code_of([&] { effective_direction(pr, Direction::checked(1, 1)); }) ==
        "character-does-not-descend");
  const Direction ok = effective_direction(pr, Direction::checked(1, 0));
  CHECK(ok.v.y == 0);

  // Rank two: every direction descends.
  const PolytopeResult nice = marked_polytope(make_presentation(W("xyXY")));
  CHECK(effective_direction(nice, Direction::checked(3, -5)) ==
        Direction::checked(3, -5));
}
