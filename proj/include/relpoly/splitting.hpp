#pragma once

#include <utility>
#include <vector>

#include "relpoly/pipeline.hpp"

namespace relpoly {

// Minimal rank of a group along which (G, phi) splits as an HNN extension.
// The equality c = c_f = thickness + 1 is unconditional when a finitely
// generated kernel certificate exists for some character; otherwise the
// constructed splitting still proves thickness + 1 as an upper bound, and the
// reported values carry `certified = false`.
struct ComplexityReport {
  Int thickness = 0;
  Int c = 1;    // = thickness + 1
  Int c_f = 1;  // the same value; the witness's edge group is free
  bool certified = false;
};
ComplexityReport splitting_complexity(const PolytopeResult& pr, Direction phi);

// Explicit HNN splitting witness over a free edge group, built from the
// relator rewritten so the stable letter t has character value 1 and the
// other generator a has value 0. With the relator in the rotated form
// t^{m_1} a^{n_1} ... t^{m_k} a^{n_k} and running sums M_j = m_1 + ... + m_j:
//   vertex group  A = < x_d, ..., x_D | x_{M_1}^{n_1} ... x_{M_k}^{n_k} >
//   edge group    B = < x_d, ..., x_{D-1} >  (free of rank D - d)
//   monomorphism  mu(x_i) = x_{i+1}
//   in the group  x_i = t^i a t^{-i}
// where d and D are the least and greatest running sum.
struct SplittingData {
  Int d = 0;
  Int D = 0;
  Int rank = 0;                        // D - d == thickness + 1 (validated)
  std::vector<Int> relator_indices;    // M_1, ..., M_k
  std::vector<Int> relator_exponents;  // n_1, ..., n_k (all nonzero)
  Word converted_relator;  // the rotated relator, slots (x = a, y = t)
  int conversion_steps = 0;
};
SplittingData hnn_splitting(const PolytopeResult& pr, Direction phi);

// Thickness per direction; the map phi -> c(phi) - 1 obeys the triangle
// inequality, which the property suites sample.
std::vector<std::pair<Direction, Int>> width_seminorm_table(
    const PolytopeResult& pr, const std::vector<Direction>& dirs);

}  // namespace relpoly
