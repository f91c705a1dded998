#pragma once

#include <random>

#include "relpoly/polytope.hpp"
#include "relpoly/word.hpp"

namespace relpoly {

using Rng = std::mt19937_64;

// Uniformly random freely reduced word of exactly the given length (>= 1).
Word random_reduced_word(Rng& rng, size_t len);

// Random nonempty cyclically reduced word with both exponent sums zero and
// length at most maxlen, by rejection sampling.
Word random_nice_relator(Rng& rng, size_t maxlen);

// Random primitive direction with components drawn from [-bound, bound].
Direction random_primitive_direction(Rng& rng, Int bound);

// Marked hull of a small random lattice multiset with multiplicities in
// {1, 2, 3}, exercising points, segments, and polygons.
MarkedPolytope random_marked_polytope(Rng& rng);

}  // namespace relpoly
