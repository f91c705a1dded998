#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relpoly/error.hpp"
#include "relpoly/vec.hpp"

namespace relpoly {

// Generator slot in the fixed two-generator free group F = F(x, y). Display
// names are attached separately (GenNames); all math works on the slots.
enum class Gen : unsigned char { x = 0, y = 1 };

inline Gen other(Gen g) { return g == Gen::x ? Gen::y : Gen::x; }

struct Letter {
  Gen gen;
  int sign;  // +1 or -1

  Letter inverse() const { return Letter{gen, -sign}; }
  auto operator<=>(const Letter&) const = default;
};

// A word over {x, y, x^-1, y^-1}. Not automatically reduced; reduction is an
// explicit operation so callers control when it happens.
using Word = std::vector<Letter>;

// Display names used for parsing and rendering (two distinct lowercase ASCII
// letters; the corresponding uppercase letter denotes the inverse).
struct GenNames {
  char x = 'x';
  char y = 'y';

  static GenNames of(const std::string& two_letters);
};

// Grammar: word := (letter exponent?)* with letter one of the two generator
// names in either case and exponent := '^' '-'? [1-9][0-9]*. Whitespace is
// ignored everywhere. An exponent repeats (negative: inverts and repeats) the
// single preceding letter. Errors: "unknown-letter", "malformed-exponent".
Word parse_word(const std::string& text, GenNames names = {});

// Compact rendering: inverse runs as uppercase, run lengths >= 2 as '^k'.
std::string render_word(const Word& w, GenNames names = {});

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word repeat(const Word& w, Int m);  // m >= 0

// Exchange the roles of the two generators in every letter.
Word swap_generators(const Word& w);

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

Word free_reduce(Word w);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // input == conjugator . core . conjugator^-1 in F
};
CyclicReduction cyclic_reduce(const Word& w);

// Left rotation by k: letters k..l-1 followed by 0..k-1. Requires 0 <= k < l(w)
// ("index-out-of-range" otherwise).
Word cyclic_permute(const Word& w, size_t k);

// Exponent-sum vector (x-sum, y-sum) in Z^2.
Vec2 abelianize(const Word& w);

// Proper prefixes: the empty word, then the first 1..l(w)-1 letters — l(w)
// entries in total; the full word is omitted so that walking a cyclically
// closed word counts its basepoint exactly once.
std::vector<Word> prefixes(const Word& w);

// Alternating-syllable presentation of a cyclically reduced word using both
// generators: a rotation equal to x^{m_1} y^{n_1} ... x^{m_k} y^{n_k} with all
// exponents nonzero. Single-generator powers have no such form
// ("syllable-form-unavailable").
struct SyllableForm {
  Word rotated;                                 // == cyclic_permute(input, rotation)
  size_t rotation;
  std::vector<std::pair<Int, Int>> exponents;   // (m_i, n_i) pairs
};
SyllableForm syllables(const Word& w);

// Maximal-root decomposition w == root^multiplicity with multiplicity as large
// as possible (1 when w is not a proper power). Scans divisors of l(w).
struct PowerRoot {
  Word root;
  Int multiplicity;
};
PowerRoot proper_power_root(const Word& w);

}  // namespace relpoly
