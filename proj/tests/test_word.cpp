#include <doctest.h>

#include <functional>
#include <string>

#include "oracles.hpp"
#include "relpoly/sampling.hpp"
#include "relpoly/word.hpp"

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

}  // namespace

TEST_CASE("parse and render round-trip") {
  CHECK(render_word(W("xyXY")) == "xyXY");
  CHECK(render_word(W("x^3Y^2")) == "x^3Y^2");
  CHECK(render_word(W("x^-2")) == "X^2");
  CHECK(render_word(W("  x \t y ")) == "xy");
  CHECK(W("x^1") == W("x"));
  CHECK(W("") == Word{});
  CHECK(render_word(W("xxxx")) == "x^4");

  const GenNames ta = GenNames::of("ta");
  CHECK(render_word(W("TaataA", ta), ta) == "Ta^2taA");
  CHECK(W("t", ta) == Word{{Gen::x, +1}});
  CHECK(W("A", ta) == Word{{Gen::y, -1}});
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { W("xz"); }) == "unknown-letter");
  CHECK(code_of([] { W("x^"); }) == "malformed-exponent");
  CHECK(code_of([] { W("x^0"); }) == "malformed-exponent");
  CHECK(code_of([] { W("^2"); }) == "malformed-exponent");
  CHECK(code_of([] { W("x^-"); }) == "malformed-exponent");
  CHECK(code_of([] { W("x^99999999"); }) == "malformed-exponent");
  CHECK(code_of([] { GenNames::of("xx"); }) == "invalid-generators");
  CHECK(code_of([] { GenNames::of("xY"); }) == "invalid-generators");
  CHECK(code_of([] { GenNames::of("xyz"); }) == "invalid-generators");
}

TEST_CASE("free group algebra") {
  CHECK(free_reduce(W("xX")) == Word{});
  CHECK(free_reduce(W("xyYXxy")) == W("xy"));
  CHECK(free_reduce(concat(W("xy"), inverse(W("xy")))) == Word{});
  CHECK(inverse(W("xyX")) == W("xYX"));
  CHECK(repeat(W("xy"), 3) == W("xyxyxy"));
  CHECK(repeat(W("xy"), 0) == Word{});
  CHECK(swap_generators(W("xYx")) == W("yXy"));
  CHECK(swap_generators(swap_generators(W("xxYxY"))) == W("xxYxY"));

  CHECK(is_reduced(W("xyX")));
  CHECK(!is_reduced(W("xXy")));
  CHECK(is_cyclically_reduced(W("xyXY")));
  CHECK(!is_cyclically_reduced(W("xyX")));

  CHECK(abelianize(W("xyXY")) == Vec2{0, 0});
  CHECK(abelianize(W("x^3Y^2x")) == Vec2{4, -2});
}

TEST_CASE("cyclic reduction keeps the conjugacy relation") {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_reduced_word(rng, 1 + (i % 24));
    const CyclicReduction cr = cyclic_reduce(w);
    CHECK(is_cyclically_reduced(cr.core));
    const Word rebuilt = free_reduce(
        concat(concat(cr.conjugator, cr.core), inverse(cr.conjugator)));
    CHECK(rebuilt == free_reduce(w));
  }
  const CyclicReduction cr = cyclic_reduce(W("yxyXY"));
  CHECK(cr.core == W("y"));
  CHECK(cr.conjugator == W("yx"));
}

TEST_CASE("cyclic permutation") {
  CHECK(cyclic_permute(W("xyXY"), 0) == W("xyXY"));
  CHECK(cyclic_permute(W("xyXY"), 1) == W("yXYx"));
  CHECK(cyclic_permute(W("xyXY"), 3) == W("YxyX"));
  CHECK(code_of([] { cyclic_permute(W("xy"), 2); }) == "index-out-of-range");
}

TEST_CASE("prefixes walk the word once") {
  const auto ps = prefixes(W("xyX"));
  REQUIRE(ps.size() == 3);
  CHECK(ps[0] == Word{});
  CHECK(ps[1] == W("x"));
  CHECK(ps[2] == W("xy"));
}

TEST_CASE("syllable form") {
  const SyllableForm s = syllables(W("xyXY"));
  CHECK(free_reduce(s.rotated) == cyclic_permute(W("xyXY"), s.rotation));
  REQUIRE(s.exponents.size() == 2);
  CHECK(s.exponents[0] == std::pair<Int, Int>{1, 1});
  CHECK(s.exponents[1] == std::pair<Int, Int>{-1, -1});

  // Starts inside a y-run: the rotation must shift to an x-run boundary.
  const SyllableForm t = syllables(W("yx^2y"));
  CHECK(t.rotation == 1);
  CHECK(t.rotated == W("x^2y^2"));
  REQUIRE(t.exponents.size() == 1);
  CHECK(t.exponents[0] == std::pair<Int, Int>{2, 2});

  Vec2 sum{0, 0};
  const SyllableForm u = syllables(W("Y^2xyx^3Y"));
  for (const auto& [m, n] : u.exponents) {
    CHECK(m != 0);
    CHECK(n != 0);
    sum = sum + Vec2{m, n};
  }
  CHECK(sum == abelianize(W("Y^2xyx^3Y")));

  CHECK(code_of([] { syllables(W("x^3")); }) == "syllable-form-unavailable");
  CHECK(code_of([] { syllables(W("xyX")); }) == "syllable-form-unavailable");
}

TEST_CASE("proper power root matches the border-function oracle") {
  CHECK(proper_power_root(W("xyxy")).multiplicity == 2);
  CHECK(proper_power_root(W("xyxy")).root == W("xy"));
  CHECK(proper_power_root(W("xyX")).multiplicity == 1);
  CHECK(proper_power_root(W("x^6")).multiplicity == 6);

  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    Word w = random_reduced_word(rng, 1 + (i % 12));
    if (i % 3 == 1) w = repeat(w, 2);
    if (i % 3 == 2) w = repeat(w, 3);
    if (!is_cyclically_reduced(w)) continue;
    const PowerRoot pr = proper_power_root(w);
    const auto [oroot, omult] = oracle::kmp_root(w);
    CHECK(pr.multiplicity == static_cast<Int>(omult));
    CHECK(pr.root == oroot);
    CHECK(repeat(pr.root, pr.multiplicity) == w);
  }
}
