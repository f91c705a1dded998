#pragma once

#include <string>

#include "relpoly/polytope.hpp"
#include "relpoly/word.hpp"

namespace relpoly {

// A two-generator one-relator presentation. The stored relator is nonempty
// and cyclically reduced; the word as given is kept for reporting, with
// original == conjugator . relator . conjugator^-1 in the free group.
struct Presentation {
  GenNames names;
  Word original;
  Word relator;
  Word conjugator;
};

// Normalizes a raw relator. Throws "empty-relator" when the word reduces to
// nothing (the group would be free, outside this library's scope).
Presentation make_presentation(const Word& raw, GenNames names = {});

// Shape of the relator's exponent-sum vector, which decides which polytope
// construction applies.
enum class Classification {
  Nice,               // exponent sums (0, 0): both generators survive in H_1
  Simple,             // exponent sums (0, n), n != 0: x generates H_1 mod torsion
  SimpleConvertible,  // other nonzero sums: a basis change reaches Simple
  PowerOfGenerator,   // the relator uses only one generator
};
std::string to_string(Classification c);

struct Analysis {
  Vec2 eps;         // exponent-sum vector of the relator
  int b1 = 2;       // rank of the group's abelianization: 2 iff eps == (0, 0)
  Classification cls = Classification::Nice;
  Word power_root;  // relator == power_root repeated power_multiplicity times
  Int power_multiplicity = 1;
};

Analysis analyze(const Presentation& pi);

// Walk route (exponent sums (0, 0) only): the hull N of the relator's cyclic
// prefix walk, with multiplicity-1 hull points marked, decomposes uniquely as
// N = M + X + Y for the unit segments X, Y; returns M.
MarkedPolytope polytope_via_walk(const Presentation& pi);

// Derivative route (same precondition): the marked hull of the derivative
// with respect to `var` decomposes as M plus the unit segment on the *other*
// generator's axis; returns M.
MarkedPolytope polytope_via_fox(const Presentation& pi, Gen var);

struct SimpleFormResult {
  Presentation pres;      // converted presentation; phi-values are (0, 1)
  LinearMap to_original;  // converted exponent coordinates -> original ones
  int steps = 0;          // substitution rounds performed
};

// Change of free generating set after which the given character takes the
// values phi(x) = 0, phi(y) = 1. Each round substitutes y -> y x^{e} with e
// chosen so |phi(x)| + |phi(y)| strictly drops, so the loop terminates; the
// presented group is unchanged and the polytope is carried along by
// to_original. Throws "conversion-too-large" if the rewritten relator or the
// round count exceeds fixed resource caps.
SimpleFormResult simple_form(const Presentation& pi, Direction phi);

// One-dimensional polytope for a Simple presentation (x the generator of the
// infinite quotient): an interval on the x-axis read off the prefix sums of
// the relator's x-syllable exponents, with endpoint marks taken from the
// extreme columns of the derivative with respect to y. Throws
// "baumslag-solitar-excluded" for the relator shape x^{+-1} y^{n_1} x^{-+1}
// y^{n_2} with some |n_i| == 1, where no consistent marking exists.
MarkedPolytope b1_one_polytope(const Presentation& pi);

// Everything the downstream invariants need about one presentation.
struct PolytopeResult {
  Presentation original;
  Analysis info;
  MarkedPolytope polytope;  // normalized: componentwise-min corner at (0, 0)
  Presentation effective;   // presentation in whose coordinates it lives
  LinearMap to_original;    // effective exponent coordinates -> original ones
  int conversion_steps = 0;
};

// Full construction. Exponent sums (0, 0): all three routes (walk and both
// derivatives) are computed and must agree up to translation including marks
// ("route-mismatch" otherwise — an internal bug, never user error). Nonzero
// exponent sums: converts to Simple if needed, then uses the interval route.
// Throws "power-of-generator" when the relator (before or after conversion)
// involves only one generator.
PolytopeResult marked_polytope(const Presentation& pi);

// The given character rewritten in the effective presentation's coordinates.
// Characters must kill the relator's exponent-sum vector to define a map on
// the group at all ("character-does-not-descend"; vacuous for sums (0, 0)).
Direction effective_direction(const PolytopeResult& pr, Direction phi);

}  // namespace relpoly
