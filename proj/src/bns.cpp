#include "relpoly/bns.hpp"

namespace relpoly {

namespace {

void require_rank_two(const PolytopeResult& pr, const char* what) {
  if (pr.info.b1 != 2) {
    fail(ErrorKind::Internal, "requires-rank-two",
         std::string(what) +
             " is defined on the circle of characters, which needs "
             "exponent sums (0, 0)");
  }
}

// Open normal cone of vertex i as an arc, for a segment or polygon: the
// directions strictly between the outward normals of the adjacent edges.
Arc vertex_cone(const std::vector<Direction>& normals, size_t i) {
  const size_t k = normals.size();
  return Arc{normals[(i + k - 1) % k], normals[i]};
}

}  // namespace

bool in_sigma(const PolytopeResult& pr, Direction phi) {
  const Direction eff = effective_direction(pr, phi);
  const std::optional<size_t> idx = pairs_maximally(pr.polytope, eff);
  return idx.has_value() && pr.polytope.vertex(*idx).marked;
}

SigmaReport sigma_arcs(const PolytopeResult& pr) {
  require_rank_two(pr, "the arc report");
  SigmaReport out;
  out.arcs = marked_normal_arcs(pr.polytope);
  out.marked_vertex_count = pr.polytope.marked_count();
  out.full_sphere = out.arcs.is_full();
  return out;
}

TwoPointSigma two_point_sigma(const PolytopeResult& pr) {
  if (pr.info.b1 != 1) {
    fail(ErrorKind::Internal, "requires-rank-one",
         "the two-point report needs a nonzero exponent-sum vector");
  }
  TwoPointSigma out;
  out.phi = positive_orthogonal(pr.info.eps);
  out.positive = in_sigma(pr, out.phi);
  out.negative = in_sigma(pr, out.phi.negated());
  return out;
}

std::optional<Direction> fg_kernel_certificate(const PolytopeResult& pr) {
  if (pr.info.b1 == 1) {
    const TwoPointSigma two = two_point_sigma(pr);
    if (two.positive && two.negative) return two.phi;
    return std::nullopt;
  }
  const ArcSet sigma = marked_normal_arcs(pr.polytope);
  const ArcSet both = intersect(sigma, sigma.negated());
  if (both.is_empty()) return std::nullopt;
  if (both.is_full()) return Direction{{1, 0}};
  return arc_interior_sample(both.arcs().front());
}

NonSigmaResult exists_non_sigma(const PolytopeResult& pr) {
  require_rank_two(pr, "the complement witness");
  const MarkedPolytope& m = pr.polytope;
  NonSigmaResult out;
  if (m.is_point()) {
    if (m.vertex(0).marked) {
      out.is_z2 = true;  // Sigma is the whole circle; no witness exists
    } else {
      out.witness = Direction{{1, 0}};  // every direction fails
    }
    return out;
  }
  const std::vector<Direction> normals = outward_edge_normals(m);
  for (size_t i = 0; i < m.size(); ++i) {
    if (!m.vertex(i).marked) {
      out.witness = arc_interior_sample(vertex_cone(normals, i));
      return out;
    }
  }
  // All vertices marked: only the edge-normal rays themselves are missing
  // from Sigma (they maximize along a whole edge, never at a unique vertex).
  out.witness = normals.front();
  return out;
}

}  // namespace relpoly
