#include "relpoly/group_ring.hpp"

namespace relpoly {

namespace {

void accumulate(RingElement& into, const Word& w, Int coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = into.terms.emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) into.terms.erase(it);
  }
}

}  // namespace

RingElement ring_zero() { return RingElement{}; }

RingElement ring_one() { return ring_from_word(Word{}); }

RingElement ring_from_word(const Word& w, Int coeff) {
  RingElement out;
  accumulate(out, free_reduce(w), coeff);
  return out;
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
  RingElement out = a;
  for (const auto& [w, c] : b.terms) accumulate(out, w, c);
  return out;
}

RingElement ring_negate(const RingElement& a) {
  RingElement out;
  for (const auto& [w, c] : a.terms) out.terms.emplace(w, -c);
  return out;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  RingElement out;
  for (const auto& [u, cu] : a.terms) {
    for (const auto& [v, cv] : b.terms) {
      accumulate(out, free_reduce(concat(u, v)), cu * cv);
    }
  }
  return out;
}

Int augmentation(const RingElement& f) {
  Int sum = 0;
  for (const auto& [w, c] : f.terms) sum += c;
  return sum;
}

RingElement fox_derivative(const Word& w, Gen g) {
  RingElement out;
  Word prefix;
  prefix.reserve(w.size());
  for (const Letter& letter : free_reduce(w)) {
    if (letter.gen == g && letter.sign > 0) {
      accumulate(out, prefix, 1);
    }
    prefix.push_back(letter);
    if (letter.gen == g && letter.sign < 0) {
      accumulate(out, prefix, -1);
    }
  }
  return out;
}

RingElement fox_derivative(const RingElement& f, Gen g) {
  RingElement out;
  for (const auto& [w, c] : f.terms) {
    for (const auto& [u, cu] : fox_derivative(w, g).terms) {
      accumulate(out, u, c * cu);
    }
  }
  return out;
}

bool fundamental_formula_check(const RingElement& f) {
  RingElement lhs = ring_add(f, ring_from_word(Word{}, -augmentation(f)));
  RingElement rhs;
  for (Gen g : {Gen::x, Gen::y}) {
    RingElement gen_minus_one =
        ring_add(ring_from_word(Word{Letter{g, 1}}), ring_from_word(Word{}, -1));
    rhs = ring_add(rhs, ring_mul(fox_derivative(f, g), gen_minus_one));
  }
  return lhs == rhs;
}

LatticeMultiset abelian_support(const RingElement& f) {
  LatticeMultiset out;
  for (const auto& [w, c] : f.terms) {
    Vec2 v = abelianize(w);
    out.counts[v] += c < 0 ? -c : c;
    auto [it, inserted] = out.signed_sums.emplace(v, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.signed_sums.erase(it);
    }
  }
  return out;
}

}  // namespace relpoly
