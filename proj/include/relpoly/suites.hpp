#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "relpoly/polytope.hpp"
#include "relpoly/word.hpp"

namespace relpoly {

struct SuiteResult {
  std::string name;
  size_t trials = 0;
  bool passed = true;
  std::string counterexample;  // minimized relator, when one applies
  std::string detail;          // one-line failure description
};

// Test hook: applied to one derivative route's polytope inside the
// route-agreement suite, to confirm the suite detects planted bugs.
using PolytopeMutator = std::function<MarkedPolytope(const MarkedPolytope&)>;

struct SuiteOptions {
  uint64_t seed = 1;
  size_t count = 200;
  size_t maxlen = 40;
  const PolytopeMutator* mutate_derivative_route = nullptr;
};

// The individual randomized property suites. Each draws its own seeded
// generator from the options, so results are reproducible per suite.
SuiteResult suite_route_agreement(const SuiteOptions& o);
SuiteResult suite_cyclic_invariance(const SuiteOptions& o);
SuiteResult suite_fundamental_formula(const SuiteOptions& o);
SuiteResult suite_abelianized_identity(const SuiteOptions& o);
SuiteResult suite_thickness_additivity(const SuiteOptions& o);
SuiteResult suite_proper_power(const SuiteOptions& o);

std::vector<SuiteResult> run_property_suites(const SuiteOptions& o);
bool all_passed(const std::vector<SuiteResult>& rs);

// Greedy counterexample minimizer: repeatedly deletes a pair of mutually
// inverse letters (which keeps both exponent sums at zero), re-reduces, and
// keeps the candidate whenever the failure persists.
Word shrink_failing_relator(Word w,
                            const std::function<bool(const Word&)>& fails);

}  // namespace relpoly
