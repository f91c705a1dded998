#include "relpoly/pipeline.hpp"

#include <algorithm>
#include <utility>

#include "relpoly/group_ring.hpp"

namespace relpoly {

namespace {

constexpr LinearMap kSwap{0, 1, 1, 0};
constexpr LinearMap kInvertSecond{1, 0, 0, -1};

// Resource caps for the conversion loop: the relator may grow each round, and
// the round count is governed by the character's coefficients, which the user
// controls. Both caps are far beyond anything the analyses need.
constexpr size_t kMaxConvertedLength = 1u << 20;
constexpr int kMaxConversionRounds = 200000;

Int iabs(Int v) { return v < 0 ? -v : v; }

bool uses_both_generators(const Word& w) {
  bool has_x = false, has_y = false;
  for (const Letter& l : w) (l.gen == Gen::x ? has_x : has_y) = true;
  return has_x && has_y;
}

bool is_identity(const LinearMap& t) {
  return t.a == 1 && t.b == 0 && t.c == 0 && t.d == 1;
}

Presentation presentation_of_core(Word core, GenNames names) {
  Presentation out;
  out.names = names;
  out.original = core;
  out.relator = std::move(core);
  return out;
}

}  // namespace

Presentation make_presentation(const Word& raw, GenNames names) {
  CyclicReduction cr = cyclic_reduce(free_reduce(raw));
  if (cr.core.empty()) {
    fail(ErrorKind::Classification, "empty-relator",
         "the relator reduces to the empty word; a nontrivial relator is "
         "required");
  }
  Presentation out;
  out.names = names;
  out.original = raw;
  out.relator = std::move(cr.core);
  out.conjugator = std::move(cr.conjugator);
  return out;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Nice:
      return "nice";
    case Classification::Simple:
      return "simple";
    case Classification::SimpleConvertible:
      return "simple-convertible";
    case Classification::PowerOfGenerator:
      return "power-of-generator";
  }
  fail(ErrorKind::Internal, "bad-classification",
       "unknown classification value");
}

Analysis analyze(const Presentation& pi) {
  Analysis out;
  out.eps = abelianize(pi.relator);
  out.b1 = (out.eps == Vec2{0, 0}) ? 2 : 1;
  if (!uses_both_generators(pi.relator)) {
    out.cls = Classification::PowerOfGenerator;
  } else if (out.b1 == 2) {
    out.cls = Classification::Nice;
  } else if (out.eps.x == 0) {
    out.cls = Classification::Simple;
  } else {
    out.cls = Classification::SimpleConvertible;
  }
  PowerRoot pr = proper_power_root(pi.relator);
  out.power_root = std::move(pr.root);
  out.power_multiplicity = pr.multiplicity;
  return out;
}

MarkedPolytope polytope_via_walk(const Presentation& pi) {
  // The walk visits the exponent images of the cyclic prefixes: the origin,
  // then the position after each letter except the last (which returns to a
  // point already counted at the origin by the exponent sums being zero).
  std::map<Vec2, Int> counts;
  Vec2 pos{0, 0};
  counts[pos] += 1;
  for (size_t i = 0; i + 1 < pi.relator.size(); ++i) {
    const Letter& l = pi.relator[i];
    pos = pos + (l.gen == Gen::x ? Vec2{l.sign, 0} : Vec2{0, l.sign});
    counts[pos] += 1;
  }
  return minkowski_diff(hull_of_multiset(counts), unit_square());
}

MarkedPolytope polytope_via_fox(const Presentation& pi, Gen var) {
  const RingElement d = fox_derivative(pi.relator, var);
  MarkedPolytope n = hull_of_multiset(abelian_support(d).counts);
  return minkowski_diff(
      n, unit_segment(var == Gen::y ? Axis::x : Axis::y));
}

SimpleFormResult simple_form(const Presentation& pi, Direction phi) {
  Word rel = pi.relator;
  Int a = phi.v.x, b = phi.v.y;
  LinearMap t{};
  int rounds = 0;

  const auto swap_roles = [&] {
    rel = swap_generators(rel);
    std::swap(a, b);
    t = compose(t, kSwap);
  };

  while (iabs(a) + iabs(b) > 1) {
    if (iabs(a) > iabs(b)) swap_roles();
    // gcd(a, b) == 1 and |a| + |b| >= 2 rule out zeros here.
    const Int e = ((a > 0) != (b > 0)) ? 1 : -1;
    // Replace the second generator by one with character value b + e*a: the
    // new second generator equals (old y) * x^{e}, so occurrences of y become
    // y x^{-e} and occurrences of y^{-1} become x^{e} y^{-1}.
    Word next;
    next.reserve(rel.size() * 2);
    for (const Letter& l : rel) {
      if (l.gen == Gen::x) {
        next.push_back(l);
      } else if (l.sign > 0) {
        next.push_back({Gen::y, +1});
        next.push_back({Gen::x, static_cast<int>(-e)});
      } else {
        next.push_back({Gen::x, static_cast<int>(e)});
        next.push_back({Gen::y, -1});
      }
    }
    rel = cyclic_reduce(free_reduce(std::move(next))).core;
    b += e * a;
    t = compose(t, LinearMap{1, e, 0, 1});
    ++rounds;
    if (rel.size() > kMaxConvertedLength || rounds > kMaxConversionRounds) {
      fail(ErrorKind::Parse, "conversion-too-large",
           "rewriting the relator for phi = " + to_string(phi) +
               " exceeded the resource caps (" +
               std::to_string(kMaxConvertedLength) + " letters / " +
               std::to_string(kMaxConversionRounds) +
               " rounds); use a character with smaller coefficients");
    }
  }

  // Now (|a|, |b|) is (1, 0) or (0, 1); steer to exactly (0, 1).
  if (b == 0) swap_roles();
  if (b < 0) {
    for (Letter& l : rel) {
      if (l.gen == Gen::y) l.sign = -l.sign;
    }
    b = -b;
    t = compose(t, kInvertSecond);
  }
  if (a != 0 || b != 1) {
    fail(ErrorKind::Internal, "conversion-off-target",
         "generator exchange ended at character values (" + std::to_string(a) +
             ", " + std::to_string(b) + ") instead of (0, 1)");
  }
  if (rel.empty()) {
    fail(ErrorKind::Internal, "conversion-killed-relator",
         "generator exchange produced an empty relator");
  }

  SimpleFormResult out;
  out.pres = presentation_of_core(
      std::move(rel), is_identity(t) ? pi.names : GenNames{});
  out.to_original = t;
  out.steps = rounds;
  return out;
}

MarkedPolytope b1_one_polytope(const Presentation& pi) {
  const SyllableForm syl = syllables(pi.relator);
  const size_t k = syl.exponents.size();

  // Running sums of the x-exponents; the relator's x-exponent sum is zero for
  // a Simple presentation, so the last entry returns to zero.
  std::vector<Int> level(k);
  Int run = 0;
  for (size_t j = 0; j < k; ++j) {
    run += syl.exponents[j].first;
    level[j] = run;
  }
  if (run != 0) {
    fail(ErrorKind::Internal, "x-sum-not-zero",
         "the interval construction needs x-exponent sum zero, got " +
             std::to_string(run));
  }
  const auto [lo_it, hi_it] = std::minmax_element(level.begin(), level.end());
  const Int lo = *lo_it, hi = *hi_it;
  const Int spread = hi - lo;
  if (spread < 1) {
    fail(ErrorKind::Internal, "degenerate-prefix-sums",
         "x-syllable prefix sums cannot all coincide");
  }

  // Column counts of the derivative with respect to y at the extreme levels:
  // the y-syllable at position j contributes |n_j| derivative terms, all with
  // x-exponent level[j], and distinct syllables never produce the same free
  // word (each term determines its x-syllable count), so the counts add.
  Int lo_count = 0, hi_count = 0;
  for (size_t j = 0; j < k; ++j) {
    if (level[j] == lo) lo_count += iabs(syl.exponents[j].second);
    if (level[j] == hi) hi_count += iabs(syl.exponents[j].second);
  }

  if (spread == 1) {
    const bool excluded =
        k == 2 && (iabs(syl.exponents[0].second) == 1 ||
                   iabs(syl.exponents[1].second) == 1);
    if (excluded) {
      fail(ErrorKind::Classification, "baumslag-solitar-excluded",
           "the relator has the shape x^s y^p x^-s y^q with s = +-1 and "
           "|p| = 1 or |q| = 1; no marked polytope is consistent for this "
           "family");
    }
    // With spread 1 the levels alternate between the two values, so a
    // non-excluded relator has at least two syllables on each level and both
    // extreme columns have count >= 2: the single point must be unmarked.
    if (lo_count < 2 || hi_count < 2) {
      fail(ErrorKind::Internal, "spread-one-marking",
           "extreme column with count 1 outside the excluded family");
    }
    return MarkedPolytope::from_vertices({{{0, 0}, false}});
  }

  // The derivative polytope is the column span [lo, hi]; peeling off the unit
  // segment of the x-axis leaves [lo, hi - 1], here translated to start at
  // the origin. The segment's endpoints are all marked, so the interval's
  // endpoint marks equal the extreme columns' marks: count exactly 1.
  return MarkedPolytope::from_vertices(
      {{{0, 0}, lo_count == 1}, {{spread - 1, 0}, hi_count == 1}});
}

PolytopeResult marked_polytope(const Presentation& pi) {
  const Analysis info = analyze(pi);
  switch (info.cls) {
    case Classification::PowerOfGenerator:
      fail(ErrorKind::Classification, "power-of-generator",
           "the relator is a power of a single generator; the construction "
           "needs a relator involving both");
    case Classification::Nice: {
      MarkedPolytope walk = polytope_via_walk(pi);
      MarkedPolytope via_ry = polytope_via_fox(pi, Gen::y);
      MarkedPolytope via_rx = polytope_via_fox(pi, Gen::x);
      const bool ry_ok = equal_up_to_translation(walk, via_ry);
      const bool rx_ok = equal_up_to_translation(walk, via_rx);
      if (!ry_ok || !rx_ok) {
        fail(ErrorKind::Internal, "route-mismatch",
             std::string("independent polytope routes disagree (walk vs ") +
                 (ry_ok ? "d/dx" : "d/dy") + ") for relator " +
                 render_word(pi.relator, pi.names));
      }
      return {pi, info, normalize_translation(walk), pi, LinearMap{}, 0};
    }
    case Classification::Simple:
      return {pi, info, normalize_translation(b1_one_polytope(pi)), pi,
              LinearMap{}, 0};
    case Classification::SimpleConvertible: {
      // Convert along the unique-up-to-sign character that kills the
      // exponent-sum vector; afterwards the second generator carries the
      // infinite quotient, so swap the roles to put it first.
      const Direction phi0 = positive_orthogonal(info.eps);
      SimpleFormResult sf = simple_form(pi, phi0);
      Presentation eff =
          presentation_of_core(swap_generators(sf.pres.relator), GenNames{});
      const LinearMap t = compose(sf.to_original, kSwap);
      const Analysis eff_info = analyze(eff);
      if (eff_info.cls == Classification::PowerOfGenerator) {
        fail(ErrorKind::Classification, "power-of-generator",
             "after the change of generators the relator becomes a power of "
             "a single generator (the group is infinite cyclic); no polytope "
             "is attached");
      }
      if (eff_info.cls != Classification::Simple) {
        fail(ErrorKind::Internal, "conversion-not-simple",
             "generator exchange did not reach the x-sum-zero form");
      }
      return {pi, info, normalize_translation(b1_one_polytope(eff)), eff, t,
              sf.steps};
    }
  }
  fail(ErrorKind::Internal, "bad-classification",
       "unknown classification value");
}

Direction effective_direction(const PolytopeResult& pr, Direction phi) {
  if (dot(phi.v, pr.info.eps) != 0) {
    fail(ErrorKind::Parse, "character-does-not-descend",
         "phi = " + to_string(phi) +
             " does not vanish on the relator's exponent-sum vector " +
             to_string(pr.info.eps) + ", so it defines no character of the "
                                      "group");
  }
  return pull_back(phi, pr.to_original);
}

}  // namespace relpoly
