#pragma once

#include <vector>

#include "relpoly/polytope.hpp"
#include "relpoly/vec.hpp"

namespace relpoly {

// Open arc of directions: everything strictly between `from` and `to` walking
// counterclockwise. Endpoints are excluded and must be distinct, so a single
// arc covers less than the full circle.
struct Arc {
  Direction from;
  Direction to;

  auto operator<=>(const Arc&) const = default;
};

// Is d strictly inside the open arc?
bool arc_contains(const Arc& arc, Direction d);

// A primitive direction strictly inside the open arc, for sampling.
Direction arc_interior_sample(const Arc& arc);

// An open subset of the circle of directions: either the full circle or a
// finite union of pairwise disjoint open arcs, kept sorted counterclockwise
// from the positive x-axis.
class ArcSet {
 public:
  static ArcSet empty_set() { return ArcSet{}; }
  static ArcSet full_circle();
  // Sorts and validates pairwise disjointness ("arcs-overlap" on failure).
  static ArcSet of_arcs(std::vector<Arc> arcs);

  bool is_empty() const { return !full_ && arcs_.empty(); }
  bool is_full() const { return full_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool contains(Direction d) const;
  ArcSet negated() const;  // image under the antipodal map

  bool operator==(const ArcSet&) const = default;

 private:
  bool full_ = false;
  std::vector<Arc> arcs_;
};

ArcSet intersect(const ArcSet& a, const ArcSet& b);

// Union of the open normal cones of the marked vertices: exactly the
// directions whose strict maximizer on p exists and is marked. Cones of
// adjacent marked vertices stay separate arcs because the edge normal between
// them has no strict maximizer.
ArcSet marked_normal_arcs(const MarkedPolytope& p);

}  // namespace relpoly
