#pragma once

#include <map>
#include <optional>
#include <vector>

#include "relpoly/vec.hpp"

namespace relpoly {

struct MarkedVertex {
  Vec2 p;
  bool marked = false;

  auto operator<=>(const MarkedVertex&) const = default;
};

enum class Axis { x, y };

// Convex lattice polygon with a mark flag per vertex. Vertices are stored
// strictly convex (no three collinear) in counterclockwise order, starting at
// the lexicographically least vertex in (x, y) order. Degenerate shapes are
// allowed: a single point or a two-vertex segment. Never empty.
class MarkedPolytope {
 public:
  // Builds from explicit vertex data. Every given point must be a vertex of
  // the convex hull of the set and appear once ("vertex-set-not-convex").
  static MarkedPolytope from_vertices(std::vector<MarkedVertex> vs);

  size_t size() const { return verts_.size(); }
  const std::vector<MarkedVertex>& vertices() const { return verts_; }
  const MarkedVertex& vertex(size_t i) const { return verts_[i]; }

  bool is_point() const { return verts_.size() == 1; }
  bool is_segment() const { return verts_.size() == 2; }

  size_t marked_count() const;
  std::optional<size_t> find_vertex(Vec2 p) const;

  bool operator==(const MarkedPolytope&) const = default;

 private:
  friend MarkedPolytope hull_of_multiset(const std::map<Vec2, Int>& counts);
  friend MarkedPolytope hull_with_marks(const std::vector<Vec2>& points,
                                        const std::map<Vec2, bool>& marks);

  MarkedPolytope() = default;
  std::vector<MarkedVertex> verts_;
};

// Convex hull of the support of a nonempty lattice multiset; a hull vertex is
// marked exactly when its multiplicity is 1. Throws "empty-input" on an empty
// multiset.
MarkedPolytope hull_of_multiset(const std::map<Vec2, Int>& counts);

// Convex hull of explicit points with marks looked up per point (absent means
// unmarked). Points interior to the hull are dropped.
MarkedPolytope hull_with_marks(const std::vector<Vec2>& points,
                               const std::map<Vec2, bool>& marks);

// Axis-aligned unit segments and their sum, all vertices marked. These are the
// only shapes the pipeline ever subtracts.
MarkedPolytope unit_segment(Axis a);
MarkedPolytope unit_square();

// Minkowski sum by CCW edge merging. A sum vertex decomposes uniquely as
// summand vertex + summand vertex; it is marked exactly when both parts are.
MarkedPolytope minkowski_sum(const MarkedPolytope& a, const MarkedPolytope& b);

// Exact Minkowski difference: the unique m with m + q = n, when it exists.
// Computed as the lattice erosion of n by q (support-function constraints over
// n's edge normals), then validated by re-summation against n including marks.
// Throws "difference-does-not-exist" when no polytope works and
// "marking-inconsistent" when the shape works but no marking assignment does.
MarkedPolytope minkowski_diff(const MarkedPolytope& n, const MarkedPolytope& q);

// Diagnostic for subtracting a unit segment along `axis` from n: the slices
// of n at the two extreme values of the other coordinate must have extent
// >= 1 along `axis`, and a slice of extent exactly 1 must carry equal marks
// at its two endpoints.
struct SubtractionHypotheses {
  bool extent_ok = false;
  bool marks_ok = false;
};
SubtractionHypotheses subtraction_hypotheses(const MarkedPolytope& n, Axis axis);

// Width of p along an arbitrary nonzero integer vector: max dot - min dot
// over vertices. Scales linearly in the vector's length.
Int width_along(const MarkedPolytope& p, Vec2 v);

// Width of p in direction phi: max dot - min dot over vertices.
Int thickness(const MarkedPolytope& p, Direction phi);

// Central symmetrization, returned in doubled coordinates so half-integral
// vertices stay integral: the hull of all pairwise vertex differences p - q.
// Marks are dropped (all false). Widths double accordingly.
MarkedPolytope symmetrize_doubled(const MarkedPolytope& p);

// The unique vertex index at which phi is strictly maximal, if any (ties and
// directions normal to an edge give nullopt; a single point always wins).
std::optional<size_t> pairs_maximally(const MarkedPolytope& p, Direction phi);

// Outward primitive normals of all edges, CCW: none for a point, both
// perpendiculars for a segment. Exactly the directions with no unique argmax.
std::vector<Direction> outward_edge_normals(const MarkedPolytope& p);

bool contains_point(const MarkedPolytope& p, Vec2 q);

MarkedPolytope translate(const MarkedPolytope& p, Vec2 t);

// Translate so the componentwise minimum over vertices is (0, 0).
MarkedPolytope normalize_translation(const MarkedPolytope& p);

bool equal_up_to_translation(const MarkedPolytope& a, const MarkedPolytope& b,
                             bool with_marks = true);

// Apply an invertible integer change of coordinates (det +-1) to every vertex.
struct LinearMap {
  Int a = 1, b = 0, c = 0, d = 1;  // columns: images of the two basis vectors

  Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Int det() const { return a * d - b * c; }

  // Inverse of a determinant +-1 map (for det s in {1, -1}, 1/s == s).
  LinearMap inverse() const {
    const Int s = det();
    if (s != 1 && s != -1) {
      fail(ErrorKind::Internal, "basis-not-unimodular",
           "cannot invert an integer map of determinant " + std::to_string(s));
    }
    return {d * s, -b * s, -c * s, a * s};
  }
};
// Matrix product l * r: (compose(l, r)).apply(v) == l.apply(r.apply(v)).
inline LinearMap compose(const LinearMap& l, const LinearMap& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
          l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

// The character in the domain coordinates of m whose values agree with phi
// composed with m (the transpose action). Unimodular maps preserve
// primitivity, so the result is again a valid direction.
inline Direction pull_back(Direction phi, const LinearMap& m) {
  return Direction{Vec2{m.a * phi.v.x + m.c * phi.v.y,
                        m.b * phi.v.x + m.d * phi.v.y}};
}

MarkedPolytope apply_basis(const MarkedPolytope& p, const LinearMap& m);

}  // namespace relpoly
