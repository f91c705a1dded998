#include "relpoly/suites.hpp"

#include <algorithm>
#include <map>

#include "relpoly/group_ring.hpp"
#include "relpoly/pipeline.hpp"
#include "relpoly/sampling.hpp"
#include "relpoly/splitting.hpp"

namespace relpoly {

namespace {

// A per-relator predicate: empty string on success, otherwise a one-line
// description of what failed.
using RelatorCheck = std::function<std::string(const Word&)>;

std::string guarded(const RelatorCheck& check, const Word& r) {
  try {
    return check(r);
  } catch (const Error& e) {
    return "error " + e.code() + ": " + e.what();
  }
}

void record_failure(SuiteResult& res, const Word& r,
                    const RelatorCheck& check) {
  res.passed = false;
  const Word small = shrink_failing_relator(
      r, [&](const Word& w) { return !guarded(check, w).empty(); });
  res.counterexample = render_word(small);
  res.detail = guarded(check, small);
}

SuiteResult drive(const std::string& name, const SuiteOptions& o,
                  uint64_t salt, const RelatorCheck& check) {
  SuiteResult res;
  res.name = name;
  res.trials = o.count;
  Rng rng(o.seed ^ salt);
  for (size_t i = 0; i < o.count; ++i) {
    const Word r = random_nice_relator(rng, o.maxlen);
    if (!guarded(check, r).empty()) {
      record_failure(res, r, check);
      break;
    }
  }
  return res;
}

RingElement generator_minus_one(Gen g) {
  return ring_add(ring_from_word(Word{{g, +1}}), ring_negate(ring_one()));
}

}  // namespace

Word shrink_failing_relator(Word w,
                            const std::function<bool(const Word&)>& fails) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (size_t i = 0; i < w.size() && !improved; ++i) {
      for (size_t j = i + 1; j < w.size() && !improved; ++j) {
        if (w[i] != w[j].inverse()) continue;
        Word cand;
        cand.reserve(w.size() - 2);
        for (size_t t = 0; t < w.size(); ++t) {
          if (t != i && t != j) cand.push_back(w[t]);
        }
        cand = cyclic_reduce(free_reduce(std::move(cand))).core;
        if (cand.empty() || !fails(cand)) continue;
        w = std::move(cand);
        improved = true;
      }
    }
  }
  return w;
}

SuiteResult suite_route_agreement(const SuiteOptions& o) {
  const PolytopeMutator* mut = o.mutate_derivative_route;
  const RelatorCheck check = [mut](const Word& r) -> std::string {
    const Presentation pi = make_presentation(r);
    const MarkedPolytope walk = polytope_via_walk(pi);
    MarkedPolytope via_ry = polytope_via_fox(pi, Gen::y);
    const MarkedPolytope via_rx = polytope_via_fox(pi, Gen::x);
    if (mut) via_ry = (*mut)(via_ry);
    if (!equal_up_to_translation(walk, via_ry)) {
      return "walk and d/dy routes disagree";
    }
    if (!equal_up_to_translation(walk, via_rx)) {
      return "walk and d/dx routes disagree";
    }
    if (!equal_up_to_translation(via_ry, via_rx)) {
      return "d/dy and d/dx routes disagree";
    }
    return "";
  };
  return drive("route-agreement", o, 0x726f7574u, check);
}

SuiteResult suite_cyclic_invariance(const SuiteOptions& o) {
  const RelatorCheck check = [](const Word& r) -> std::string {
    const PolytopeResult base = marked_polytope(make_presentation(r));
    for (size_t k = 1; k < r.size(); ++k) {
      const Word rot = cyclic_permute(r, k);
      const MarkedPolytope m = polytope_via_walk(make_presentation(rot));
      if (!equal_up_to_translation(base.polytope, m)) {
        return "rotation by " + std::to_string(k) + " changes the polytope";
      }
    }
    return "";
  };
  return drive("cyclic-invariance", o, 0x6379636cu, check);
}

SuiteResult suite_fundamental_formula(const SuiteOptions& o) {
  const RelatorCheck check = [](const Word& r) -> std::string {
    if (!fundamental_formula_check(ring_from_word(r))) {
      return "derivatives do not reassemble the relator";
    }
    return "";
  };
  return drive("fundamental-formula", o, 0x66756e64u, check);
}

SuiteResult suite_abelianized_identity(const SuiteOptions& o) {
  const RelatorCheck check = [](const Word& r) -> std::string {
    const RingElement a =
        ring_mul(fox_derivative(r, Gen::x), generator_minus_one(Gen::x));
    const RingElement b =
        ring_mul(fox_derivative(r, Gen::y), generator_minus_one(Gen::y));
    // The two products sum to r - 1, whose exponent image vanishes when both
    // exponent sums are zero, so the signed images must cancel pointwise.
    std::map<Vec2, Int> total;
    for (const auto& [v, c] : abelian_support(a).signed_sums) total[v] += c;
    for (const auto& [v, c] : abelian_support(b).signed_sums) total[v] += c;
    for (const auto& [v, c] : total) {
      if (c != 0) {
        return "signed derivative supports do not cancel at " + to_string(v);
      }
    }
    return "";
  };
  return drive("abelianized-identity", o, 0x6162656cu, check);
}

SuiteResult suite_thickness_additivity(const SuiteOptions& o) {
  SuiteResult res;
  res.name = "thickness-additivity";
  res.trials = o.count;
  Rng rng(o.seed ^ 0x7468696bu);
  for (size_t i = 0; i < o.count; ++i) {
    const Word r = random_nice_relator(rng, o.maxlen);
    const Direction phi = random_primitive_direction(rng, 9);
    const Direction psi = random_primitive_direction(rng, 9);
    const RelatorCheck check = [phi, psi](const Word& w) -> std::string {
      const PolytopeResult pr = marked_polytope(make_presentation(w));
      if (phi.v + psi.v != Vec2{0, 0}) {
        const Int sum = width_along(pr.polytope, phi.v + psi.v);
        const Int parts = width_along(pr.polytope, phi.v) +
                          width_along(pr.polytope, psi.v);
        if (sum > parts) {
          return "width not subadditive for " + to_string(phi) + " and " +
                 to_string(psi);
        }
      }
      // hnn_splitting validates rank == thickness + 1 internally and throws
      // on mismatch; cross-check against the complexity report as well.
      const SplittingData s = hnn_splitting(pr, phi);
      const ComplexityReport c = splitting_complexity(pr, phi);
      if (s.rank != c.c) {
        return "splitting rank " + std::to_string(s.rank) +
               " disagrees with complexity " + std::to_string(c.c);
      }
      return "";
    };
    if (!guarded(check, r).empty()) {
      record_failure(res, r, check);
      break;
    }
  }
  return res;
}

SuiteResult suite_proper_power(const SuiteOptions& o) {
  SuiteResult res;
  res.name = "proper-power";
  res.trials = o.count;
  Rng rng(o.seed ^ 0x706f7772u);
  std::uniform_int_distribution<Int> mdist(2, 3);
  for (size_t i = 0; i < o.count; ++i) {
    const Int m = mdist(rng);
    const size_t root_len =
        std::max<size_t>(size_t{2}, o.maxlen / static_cast<size_t>(m));
    const Word root = random_nice_relator(rng, root_len);
    // The check receives the root so the minimizer shrinks the root while
    // keeping the power structure intact.
    const RelatorCheck check = [m](const Word& s) -> std::string {
      const Word r = repeat(s, m);
      const PolytopeResult pr = marked_polytope(make_presentation(r));
      if (pr.polytope.marked_count() != 0) {
        return "a power relator produced a marked vertex";
      }
      for (const auto& [v, c] :
           abelian_support(fox_derivative(r, Gen::y)).counts) {
        if (c < m) {
          return "derivative count " + std::to_string(c) + " at " +
                 to_string(v) + " is below the power " + std::to_string(m);
        }
      }
      return "";
    };
    if (!guarded(check, root).empty()) {
      record_failure(res, root, check);
      break;
    }
  }
  return res;
}

std::vector<SuiteResult> run_property_suites(const SuiteOptions& o) {
  return {suite_route_agreement(o),      suite_cyclic_invariance(o),
          suite_fundamental_formula(o),  suite_abelianized_identity(o),
          suite_thickness_additivity(o), suite_proper_power(o)};
}

bool all_passed(const std::vector<SuiteResult>& rs) {
  return std::all_of(rs.begin(), rs.end(),
                     [](const SuiteResult& r) { return r.passed; });
}

}  // namespace relpoly
