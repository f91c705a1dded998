#pragma once

#include <map>

#include "relpoly/word.hpp"

namespace relpoly {

// Finite formal Z-linear combination of elements of the free group F(x, y).
// Keys are reduced words, values are nonzero integers.
struct RingElement {
  std::map<Word, Int> terms;

  bool operator==(const RingElement&) const = default;
};

RingElement ring_zero();
RingElement ring_one();
RingElement ring_from_word(const Word& w, Int coeff = 1);  // reduces w

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_negate(const RingElement& a);
RingElement ring_mul(const RingElement& a, const RingElement& b);

// Sum of coefficients (the ring map killing every group element).
Int augmentation(const RingElement& f);

// The unique derivation on the group ring with d(g)/d(g) = 1 for the chosen
// generator, 0 on the other, and d(uv) = d(u) + u d(v). Letter-by-letter: a
// positive occurrence of the generator contributes + (prefix before it), an
// inverse occurrence contributes - (prefix through it).
RingElement fox_derivative(const Word& w, Gen g);
RingElement fox_derivative(const RingElement& f, Gen g);

// Exact identity f - augmentation(f)*1 = sum_g fox_derivative(f, g) * (g - 1).
bool fundamental_formula_check(const RingElement& f);

// Image of a ring element in the exponent lattice Z^2: per-point term counts
// (weighted by |coefficient|) and signed coefficient sums. Points whose signed
// sum cancels to zero are kept out of `signed_sums` but still counted.
struct LatticeMultiset {
  std::map<Vec2, Int> counts;
  std::map<Vec2, Int> signed_sums;

  bool operator==(const LatticeMultiset&) const = default;
};

LatticeMultiset abelian_support(const RingElement& f);

}  // namespace relpoly
