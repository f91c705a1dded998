#include "relpoly/splitting.hpp"

#include <algorithm>

#include "relpoly/bns.hpp"

namespace relpoly {

ComplexityReport splitting_complexity(const PolytopeResult& pr,
                                      Direction phi) {
  ComplexityReport out;
  out.thickness = thickness(pr.polytope, effective_direction(pr, phi));
  out.c = out.thickness + 1;
  out.c_f = out.c;
  out.certified = fg_kernel_certificate(pr).has_value();
  return out;
}

SplittingData hnn_splitting(const PolytopeResult& pr, Direction phi) {
  const Direction eff = effective_direction(pr, phi);
  const SimpleFormResult sf = simple_form(pr.effective, eff);

  // After conversion the second generator is the stable letter (character
  // value 1); move it to the leading slot so the alternating syllable form
  // starts with a stable-letter syllable.
  const SyllableForm syl = syllables(swap_generators(sf.pres.relator));
  const size_t k = syl.exponents.size();

  SplittingData out;
  out.relator_indices.reserve(k);
  out.relator_exponents.reserve(k);
  Int run = 0;
  for (const auto& [m, n] : syl.exponents) {
    run += m;
    out.relator_indices.push_back(run);
    out.relator_exponents.push_back(n);
  }
  if (run != 0) {
    fail(ErrorKind::Internal, "stable-letter-sum-not-zero",
         "the converted relator's stable-letter exponent sum is " +
             std::to_string(run) + ", expected 0");
  }
  const auto [lo, hi] =
      std::minmax_element(out.relator_indices.begin(),
                          out.relator_indices.end());
  out.d = *lo;
  out.D = *hi;
  out.rank = out.D - out.d;
  out.converted_relator = swap_generators(syl.rotated);
  out.conversion_steps = sf.steps;

  const Int th = thickness(pr.polytope, eff);
  if (out.rank != th + 1) {
    fail(ErrorKind::Internal, "splitting-thickness-mismatch",
         "edge-group rank " + std::to_string(out.rank) +
             " disagrees with thickness + 1 = " + std::to_string(th + 1));
  }
  return out;
}

std::vector<std::pair<Direction, Int>> width_seminorm_table(
    const PolytopeResult& pr, const std::vector<Direction>& dirs) {
  std::vector<std::pair<Direction, Int>> out;
  out.reserve(dirs.size());
  for (const Direction& d : dirs) {
    out.emplace_back(d, thickness(pr.polytope, effective_direction(pr, d)));
  }
  return out;
}

}  // namespace relpoly
