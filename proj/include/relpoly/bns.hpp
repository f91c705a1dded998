#pragma once

#include <optional>

#include "relpoly/arcs.hpp"
#include "relpoly/pipeline.hpp"

namespace relpoly {

// Whether the ray of phi (given in original coordinates) lies in the open
// invariant Sigma: phi must attain its maximum over the polytope at a unique
// vertex, and that vertex must be marked.
bool in_sigma(const PolytopeResult& pr, Direction phi);

// Sigma for a rank-two abelianization, where the character sphere is a
// circle: the union of the open normal cones of the marked vertices.
struct SigmaReport {
  ArcSet arcs;
  size_t marked_vertex_count = 0;
  bool full_sphere = false;  // true exactly for a single marked point
};
SigmaReport sigma_arcs(const PolytopeResult& pr);

// Sigma for a rank-one abelianization, where the character sphere is the two
// points +-phi0 with phi0 the lex-positive primitive direction killing the
// relator's exponent-sum vector.
struct TwoPointSigma {
  Direction phi;  // the positive point, original coordinates
  bool positive = false;
  bool negative = false;
};
TwoPointSigma two_point_sigma(const PolytopeResult& pr);

// Some phi with phi and -phi both in Sigma — the kernel of such a character
// is finitely generated — or nothing when no direction qualifies.
std::optional<Direction> fg_kernel_certificate(const PolytopeResult& pr);

// Rank-two abelianization only: either the group is Z^2 (single marked point,
// Sigma the full circle) or some integral character lies outside Sigma; the
// returned witness is an unmarked vertex's cone direction or an edge normal.
struct NonSigmaResult {
  bool is_z2 = false;
  std::optional<Direction> witness;
};
NonSigmaResult exists_non_sigma(const PolytopeResult& pr);

}  // namespace relpoly
