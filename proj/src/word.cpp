#include "relpoly/word.hpp"

#include <cctype>

namespace relpoly {

namespace {

constexpr Int kMaxExponent = 1000000;  // keeps expanded words at sane lengths

bool is_lower_alpha(char c) { return c >= 'a' && c <= 'z'; }

}  // namespace

GenNames GenNames::of(const std::string& two_letters) {
  if (two_letters.size() != 2 || !is_lower_alpha(two_letters[0]) ||
      !is_lower_alpha(two_letters[1]) || two_letters[0] == two_letters[1]) {
    fail(ErrorKind::Parse, "invalid-generators",
         "generator names must be two distinct lowercase letters, got \"" +
             two_letters + "\"");
  }
  return GenNames{two_letters[0], two_letters[1]};
}

Word parse_word(const std::string& text, GenNames names) {
  Word out;
  size_t i = 0;
  const size_t n = text.size();
  auto skip_space = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_space();
  while (i < n) {
    char c = text[i];
    if (c == '^') {
      fail(ErrorKind::Parse, "malformed-exponent",
           "exponent at position " + std::to_string(i) +
               " has no preceding letter");
    }
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    Gen gen;
    if (lower == names.x) {
      gen = Gen::x;
    } else if (lower == names.y) {
      gen = Gen::y;
    } else {
      fail(ErrorKind::Parse, "unknown-letter",
           std::string("unknown letter '") + c + "' at position " +
               std::to_string(i) + " (generators are '" + names.x + "', '" +
               names.y + "')");
    }
    int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    ++i;
    skip_space();

    Int exponent = 1;
    if (i < n && text[i] == '^') {
      size_t at = i;
      ++i;
      skip_space();
      bool negative = false;
      if (i < n && text[i] == '-') {
        negative = true;
        ++i;
        skip_space();
      }
      if (i >= n || text[i] < '1' || text[i] > '9') {
        fail(ErrorKind::Parse, "malformed-exponent",
             "exponent at position " + std::to_string(at) +
                 " must be a nonzero integer without leading zeros");
      }
      Int magnitude = 0;
      while (i < n && text[i] >= '0' && text[i] <= '9') {
        magnitude = magnitude * 10 + (text[i] - '0');
        if (magnitude > kMaxExponent) {
          fail(ErrorKind::Parse, "malformed-exponent",
               "exponent at position " + std::to_string(at) + " exceeds " +
                   std::to_string(kMaxExponent));
        }
        ++i;
      }
      exponent = negative ? -magnitude : magnitude;
      skip_space();
    }

    int letter_sign = exponent < 0 ? -sign : sign;
    Int count = exponent < 0 ? -exponent : exponent;
    for (Int k = 0; k < count; ++k) out.push_back(Letter{gen, letter_sign});
  }
  return out;
}

std::string render_word(const Word& w, GenNames names) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    char base = w[i].gen == Gen::x ? names.x : names.y;
    if (w[i].sign < 0) base = static_cast<char>(std::toupper(base));
    out += base;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word repeat(const Word& w, Int m) {
  Word out;
  out.reserve(w.size() * static_cast<size_t>(m > 0 ? m : 0));
  for (Int k = 0; k < m; ++k) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word swap_generators(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back({other(l.gen), l.sign});
  return out;
}

bool is_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == w[i].inverse()) return false;
  }
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != w.back().inverse();
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word core = free_reduce(w);
  Word conjugator;
  while (core.size() >= 2 && core.front() == core.back().inverse()) {
    conjugator.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return CyclicReduction{std::move(core), std::move(conjugator)};
}

Word cyclic_permute(const Word& w, size_t k) {
  if (k >= w.size() && !(k == 0 && w.empty())) {
    fail(ErrorKind::Internal, "index-out-of-range",
         "rotation index " + std::to_string(k) + " out of range for length " +
             std::to_string(w.size()));
  }
  Word out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + static_cast<long>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
  return out;
}

Vec2 abelianize(const Word& w) {
  Vec2 v{0, 0};
  for (const Letter& l : w) {
    if (l.gen == Gen::x) {
      v.x += l.sign;
    } else {
      v.y += l.sign;
    }
  }
  return v;
}

std::vector<Word> prefixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  Word acc;
  out.push_back(acc);
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    acc.push_back(w[i]);
    out.push_back(acc);
  }
  if (w.empty()) out.clear();  // no closed walk to speak of
  return out;
}

SyllableForm syllables(const Word& w) {
  if (!is_cyclically_reduced(w)) {
    fail(ErrorKind::Internal, "syllable-form-unavailable",
         "syllable form requires a cyclically reduced word");
  }
  const size_t l = w.size();
  bool has_x = false;
  bool has_y = false;
  for (const Letter& letter : w) {
    (letter.gen == Gen::x ? has_x : has_y) = true;
  }
  if (!has_x || !has_y) {
    fail(ErrorKind::Classification, "syllable-form-unavailable",
         "word \"" + render_word(w) +
             "\" uses only one generator and has no alternating syllable form");
  }

  size_t start = 0;
  for (size_t i = 0; i < l; ++i) {
    if (w[i].gen == Gen::x && w[(i + l - 1) % l].gen == Gen::y) {
      start = i;
      break;
    }
  }
  Word rotated = cyclic_permute(w, start);

  std::vector<std::pair<Int, Int>> exponents;
  size_t i = 0;
  while (i < l) {
    Int m = 0;
    while (i < l && rotated[i].gen == Gen::x) m += rotated[i++].sign;
    Int n = 0;
    while (i < l && rotated[i].gen == Gen::y) n += rotated[i++].sign;
    exponents.emplace_back(m, n);
  }
  return SyllableForm{std::move(rotated), start, std::move(exponents)};
}

PowerRoot proper_power_root(const Word& w) {
  const size_t l = w.size();
  for (size_t p = 1; p * 2 <= l; ++p) {
    if (l % p != 0) continue;
    bool periodic = true;
    for (size_t i = p; i < l && periodic; ++i) {
      periodic = w[i] == w[i - p];
    }
    if (periodic) {
      return PowerRoot{Word(w.begin(), w.begin() + static_cast<long>(p)),
                       static_cast<Int>(l / p)};
    }
  }
  return PowerRoot{w, 1};
}

}  // namespace relpoly
