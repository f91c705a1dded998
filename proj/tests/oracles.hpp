#pragma once

#include <cstddef>
#include <utility>

#include "relpoly/group_ring.hpp"
#include "relpoly/polytope.hpp"
#include "relpoly/word.hpp"

// Independent reference implementations used only by tests. Each one computes
// the same quantity as a production routine by a structurally different
// algorithm, so agreement on random inputs is meaningful evidence.
namespace relpoly::oracle {

// Free derivative computed by recursive application of the product rule
// d(uv) = d(u) + u d(v) on a head/tail split, with only the two one-letter
// base cases written out. No prefix scanning.
RingElement fox_recursive(const Word& w, Gen var);

// Minkowski sum as the hull of all pairwise vertex sums. A hull vertex of the
// sum decomposes uniquely as (vertex of a) + (vertex of b); its mark is the
// conjunction of the two parts' marks.
MarkedPolytope sum_bruteforce(const MarkedPolytope& a, const MarkedPolytope& b);

// Maximal proper-power decomposition via the classic border (failure)
// function over letters; returns {root, multiplicity}.
std::pair<Word, size_t> kmp_root(const Word& w);

// k-th of n primitive directions fanned counterclockwise around the circle
// (k in [0, n)). Dense enough to sample every cone of the small polytopes
// the tests build.
Direction fan_direction(size_t k, size_t n);

// Strict-maximizer membership computed from first principles: phi lies in the
// marked cone field of p when the maximum of dot(phi, .) over vertices is
// attained exactly once and that vertex is marked.
bool marked_strict_max(const MarkedPolytope& p, Direction phi);

}  // namespace relpoly::oracle
