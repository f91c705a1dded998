#include "relpoly/sampling.hpp"

#include <map>

namespace relpoly {

namespace {

// Letters are indexed 0..3 with the inverse at index ^ 1.
Letter letter_at(int idx) {
  return Letter{idx < 2 ? Gen::x : Gen::y, (idx & 1) ? -1 : +1};
}

}  // namespace

Word random_reduced_word(Rng& rng, size_t len) {
  std::uniform_int_distribution<int> first(0, 3);
  std::uniform_int_distribution<int> rest(0, 2);
  Word w;
  w.reserve(len);
  int prev = first(rng);
  w.push_back(letter_at(prev));
  for (size_t i = 1; i < len; ++i) {
    int c = rest(rng);
    if (c >= (prev ^ 1)) ++c;  // skip the letter that would cancel
    w.push_back(letter_at(c));
    prev = c;
  }
  return w;
}

Word random_nice_relator(Rng& rng, size_t maxlen) {
  const size_t half = maxlen < 2 ? 1 : maxlen / 2;
  std::uniform_int_distribution<size_t> half_len(1, half);
  for (;;) {
    // Zero exponent sums force even length.
    Word w = random_reduced_word(rng, 2 * half_len(rng));
    if (abelianize(w) != Vec2{0, 0}) continue;
    Word core = cyclic_reduce(w).core;
    if (core.empty()) continue;
    return core;
  }
}

Direction random_primitive_direction(Rng& rng, Int bound) {
  std::uniform_int_distribution<Int> comp(-bound, bound);
  for (;;) {
    const Vec2 v{comp(rng), comp(rng)};
    if (v == Vec2{0, 0}) continue;
    return Direction::reduced(v);
  }
}

MarkedPolytope random_marked_polytope(Rng& rng) {
  std::uniform_int_distribution<int> npts(1, 6);
  std::uniform_int_distribution<Int> coord(-4, 4);
  std::uniform_int_distribution<Int> mult(1, 3);
  std::map<Vec2, Int> counts;
  const int n = npts(rng);
  for (int i = 0; i < n; ++i) counts[{coord(rng), coord(rng)}] += mult(rng);
  return hull_of_multiset(counts);
}

}  // namespace relpoly
