// Convex lattice polygons with per-vertex marks: hulls of multisets, Minkowski
// sums and exact differences, widths, and outward normal directions.

#include "relpoly/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <tuple>

#include "relpoly/error.hpp"

namespace relpoly {

namespace {

// Strictly convex hull by monotone chains; collinear points are dropped.
// Returns CCW vertices starting at the lexicographically least point.
std::vector<Vec2> strict_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) {
    fail(ErrorKind::Internal, "empty-input", "convex hull of an empty point set");
  }
  if (pts.size() == 1) return pts;
  const size_t n = pts.size();
  std::vector<Vec2> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {  // lower chain, left to right
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 1]) <= 0) --k;
    h[k++] = pts[i];
  }
  const size_t lower_end = k + 1;
  for (size_t i = n - 1; i-- > 0;) {  // upper chain, right to left
    while (k >= lower_end && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 1]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // the walk ends back at the starting point
  return h;
}

// Index of the vertex minimizing (y, x); edge angles listed from here are
// strictly increasing in [0, 2*pi).
size_t bottom_start(const MarkedPolytope& p) {
  size_t best = 0;
  for (size_t i = 1; i < p.size(); ++i) {
    const Vec2 a = p.vertex(i).p, b = p.vertex(best).p;
    if (std::tie(a.y, a.x) < std::tie(b.y, b.x)) best = i;
  }
  return best;
}

// Cyclic edge vectors starting from vertex `start`; a segment contributes the
// two opposite directions, a point none.
std::vector<Vec2> edge_cycle(const MarkedPolytope& p, size_t start) {
  const size_t k = p.size();
  std::vector<Vec2> es;
  if (k == 1) return es;
  es.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    es.push_back(p.vertex((start + i + 1) % k).p - p.vertex((start + i) % k).p);
  }
  return es;
}

// One resting position of the merge walk over two edge fans: the sum vertex
// together with the indices of its (unique) summand-vertex decomposition.
struct SumStep {
  Vec2 p;
  size_t ia = 0, ib = 0;
};

// Merge the CCW edge fans of a and b in angular order. Each resting position
// of the walk is a vertex of the Minkowski sum, and the pair of summand
// vertices at rest is its unique vertex decomposition.
std::vector<SumStep> sum_walk(const MarkedPolytope& a, const MarkedPolytope& b) {
  const size_t sa = bottom_start(a), sb = bottom_start(b);
  const std::vector<Vec2> ea = edge_cycle(a, sa), eb = edge_cycle(b, sb);
  const size_t ka = ea.size(), kb = eb.size();
  std::vector<SumStep> steps;
  steps.reserve(ka + kb + 1);
  size_t i = 0, j = 0;
  while (true) {
    const size_t ia = (sa + i) % a.size(), ib = (sb + j) % b.size();
    steps.push_back({a.vertex(ia).p + b.vertex(ib).p, ia, ib});
    if (i < ka && j < kb) {
      if (angle_ccw_less(ea[i], eb[j])) {
        ++i;
      } else if (angle_ccw_less(eb[j], ea[i])) {
        ++j;
      } else {
        ++i;
        ++j;
      }
    } else if (i < ka) {
      ++i;
    } else if (j < kb) {
      ++j;
    } else {
      break;
    }
    if (i == ka && j == kb) break;
  }
  return steps;
}

Wide support(const MarkedPolytope& p, Vec2 u) {
  Wide best = dot(p.vertex(0).p, u);
  for (size_t i = 1; i < p.size(); ++i) best = std::max(best, dot(p.vertex(i).p, u));
  return best;
}

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Wide ceil_div(Wide a, Wide b) { return -floor_div(-a, b); }

std::vector<Vec2> sorted_points(const MarkedPolytope& p) {
  std::vector<Vec2> out;
  out.reserve(p.size());
  for (const MarkedVertex& v : p.vertices()) out.push_back(v.p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MarkedPolytope hull_with_marks(const std::vector<Vec2>& points,
                               const std::map<Vec2, bool>& marks) {
  MarkedPolytope p;
  for (Vec2 v : strict_hull(points)) {
    auto it = marks.find(v);
    p.verts_.push_back({v, it != marks.end() && it->second});
  }
  return p;
}

MarkedPolytope MarkedPolytope::from_vertices(std::vector<MarkedVertex> vs) {
  if (vs.empty()) {
    fail(ErrorKind::Internal, "empty-input", "polytope with no vertices");
  }
  std::vector<Vec2> pts;
  std::map<Vec2, bool> marks;
  pts.reserve(vs.size());
  for (const MarkedVertex& mv : vs) {
    if (!marks.emplace(mv.p, mv.marked).second) {
      fail(ErrorKind::Internal, "vertex-set-not-convex",
           "duplicate vertex " + to_string(mv.p));
    }
    pts.push_back(mv.p);
  }
  MarkedPolytope p = hull_with_marks(pts, marks);
  if (p.size() != vs.size()) {
    fail(ErrorKind::Internal, "vertex-set-not-convex",
         "a listed point is interior to the hull of the others");
  }
  return p;
}

size_t MarkedPolytope::marked_count() const {
  size_t n = 0;
  for (const MarkedVertex& v : verts_) n += v.marked ? 1 : 0;
  return n;
}

std::optional<size_t> MarkedPolytope::find_vertex(Vec2 p) const {
  for (size_t i = 0; i < verts_.size(); ++i) {
    if (verts_[i].p == p) return i;
  }
  return std::nullopt;
}

MarkedPolytope hull_of_multiset(const std::map<Vec2, Int>& counts) {
  std::vector<Vec2> pts;
  std::map<Vec2, bool> marks;
  for (const auto& [p, c] : counts) {
    if (c < 0) {
      fail(ErrorKind::Internal, "negative-multiplicity",
           "lattice multiset has negative count at " + to_string(p));
    }
    if (c == 0) continue;
    pts.push_back(p);
    marks[p] = (c == 1);
  }
  if (pts.empty()) {
    fail(ErrorKind::Internal, "empty-input", "polytope of an empty lattice multiset");
  }
  return hull_with_marks(pts, marks);
}

MarkedPolytope unit_segment(Axis a) {
  const Vec2 e = a == Axis::x ? Vec2{1, 0} : Vec2{0, 1};
  return MarkedPolytope::from_vertices({{{0, 0}, true}, {e, true}});
}

MarkedPolytope unit_square() {
  return MarkedPolytope::from_vertices(
      {{{0, 0}, true}, {{1, 0}, true}, {{1, 1}, true}, {{0, 1}, true}});
}

MarkedPolytope minkowski_sum(const MarkedPolytope& a, const MarkedPolytope& b) {
  std::vector<Vec2> points;
  std::map<Vec2, bool> marks;
  for (const SumStep& s : sum_walk(a, b)) {
    points.push_back(s.p);
    marks[s.p] = a.vertex(s.ia).marked && b.vertex(s.ib).marked;
  }
  return hull_with_marks(points, marks);
}

MarkedPolytope minkowski_diff(const MarkedPolytope& n, const MarkedPolytope& q) {
  // Constraint directions: the edge normals of n give its exact half-plane
  // description for polygons; the axis directions complete it for points and
  // segments and bound the search box.
  std::vector<Vec2> dirs = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const Direction& d : outward_edge_normals(n)) dirs.push_back(d.v);
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

  // Any m with m + q = n satisfies dot(p, u) <= h_n(u) - h_q(u) at every
  // vertex p and direction u, and those constraints cut out exactly
  // { p : p + q inside n }, whose hull is the only candidate shape.
  std::vector<Wide> bound(dirs.size());
  for (size_t i = 0; i < dirs.size(); ++i) bound[i] = support(n, dirs[i]) - support(q, dirs[i]);

  const Wide xlo_w = -(support(n, {-1, 0}) - support(q, {-1, 0}));
  const Wide xhi_w = support(n, {1, 0}) - support(q, {1, 0});
  if (xlo_w > xhi_w) {
    fail(ErrorKind::Internal, "difference-does-not-exist",
         "no translate of the subtrahend fits inside the polytope");
  }

  // Column scan: for each x the constraints cut a y-interval; its endpoints
  // are the only points that can be hull vertices of the erosion.
  std::vector<Vec2> pts;
  for (Int x = static_cast<Int>(xlo_w); x <= static_cast<Int>(xhi_w); ++x) {
    Wide ylo = 0, yhi = 0;
    bool has_lo = false, has_hi = false, empty = false;
    for (size_t i = 0; i < dirs.size() && !empty; ++i) {
      const Wide rhs = bound[i] - static_cast<Wide>(dirs[i].x) * x;
      if (dirs[i].y > 0) {
        const Wide cap = floor_div(rhs, dirs[i].y);
        if (!has_hi || cap < yhi) yhi = cap;
        has_hi = true;
      } else if (dirs[i].y < 0) {
        const Wide cap = ceil_div(rhs, dirs[i].y);
        if (!has_lo || cap > ylo) ylo = cap;
        has_lo = true;
      } else if (rhs < 0) {
        empty = true;
      }
    }
    if (empty || !has_lo || !has_hi || ylo > yhi) continue;
    pts.push_back({x, static_cast<Int>(ylo)});
    pts.push_back({x, static_cast<Int>(yhi)});
  }
  if (pts.empty()) {
    fail(ErrorKind::Internal, "difference-does-not-exist",
         "no translate of the subtrahend fits inside the polytope");
  }

  const MarkedPolytope shape = hull_with_marks(pts, {});
  const std::vector<SumStep> steps = sum_walk(shape, q);

  std::vector<Vec2> resum;
  resum.reserve(steps.size());
  for (const SumStep& s : steps) resum.push_back(s.p);
  std::sort(resum.begin(), resum.end());
  if (resum != sorted_points(n)) {
    fail(ErrorKind::Internal, "difference-does-not-exist",
         "eroding and re-adding the subtrahend does not reproduce the polytope");
  }

  // Transfer marks: a sum vertex is marked exactly when both parts of its
  // unique decomposition are, which pins every difference vertex paired with
  // a marked subtrahend vertex and forbids marks elsewhere.
  std::vector<std::optional<bool>> assigned(shape.size());
  for (const SumStep& s : steps) {
    const auto ni = n.find_vertex(s.p);
    const bool n_marked = n.vertex(*ni).marked;
    if (q.vertex(s.ib).marked) {
      if (assigned[s.ia] && *assigned[s.ia] != n_marked) {
        fail(ErrorKind::Internal, "marking-inconsistent",
             "vertex " + to_string(shape.vertex(s.ia).p) +
                 " would need two different marks");
      }
      assigned[s.ia] = n_marked;
    } else if (n_marked) {
      fail(ErrorKind::Internal, "marking-inconsistent",
           "marked vertex " + to_string(s.p) +
               " decomposes through an unmarked subtrahend vertex");
    }
  }

  std::vector<MarkedVertex> out;
  out.reserve(shape.size());
  for (size_t i = 0; i < shape.size(); ++i) {
    out.push_back({shape.vertex(i).p, assigned[i].value_or(false)});
  }
  const MarkedPolytope m = MarkedPolytope::from_vertices(out);
  if (minkowski_sum(m, q) != n) {
    fail(ErrorKind::Internal, "marking-inconsistent",
         "no marking of the difference reproduces the polytope's marks");
  }
  return m;
}

SubtractionHypotheses subtraction_hypotheses(const MarkedPolytope& n, Axis axis) {
  // Subtracting the unit segment along `axis` sweeps the difference one step
  // in that direction, so the slices of n at extreme cross-coordinate must be
  // at least as long as the segment, and a slice of exactly that length has
  // both endpoints decomposing through one difference vertex (equal marks).
  const bool horizontal = axis == Axis::x;
  auto cross_coord = [&](Vec2 p) { return horizontal ? p.y : p.x; };
  auto along_coord = [&](Vec2 p) { return horizontal ? p.x : p.y; };

  Int lo = cross_coord(n.vertex(0).p), hi = lo;
  for (const MarkedVertex& v : n.vertices()) {
    lo = std::min(lo, cross_coord(v.p));
    hi = std::max(hi, cross_coord(v.p));
  }

  SubtractionHypotheses out{true, true};
  for (Int level : {lo, hi}) {
    std::vector<const MarkedVertex*> slice;
    for (const MarkedVertex& v : n.vertices()) {
      if (cross_coord(v.p) == level) slice.push_back(&v);
    }
    Int extent = 0;
    if (slice.size() == 2) {
      extent = std::abs(along_coord(slice[0]->p) - along_coord(slice[1]->p));
    }
    if (extent < 1) out.extent_ok = false;
    if (extent == 1 && slice[0]->marked != slice[1]->marked) out.marks_ok = false;
    if (lo == hi) break;
  }
  return out;
}

Int width_along(const MarkedPolytope& p, Vec2 v) {
  Wide lo = dot(p.vertex(0).p, v), hi = lo;
  for (const MarkedVertex& mv : p.vertices()) {
    const Wide d = dot(mv.p, v);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return static_cast<Int>(hi - lo);
}

Int thickness(const MarkedPolytope& p, Direction phi) {
  return width_along(p, phi.v);
}

MarkedPolytope symmetrize_doubled(const MarkedPolytope& p) {
  std::vector<Vec2> pts;
  pts.reserve(p.size() * p.size());
  for (const MarkedVertex& v : p.vertices()) {
    for (const MarkedVertex& w : p.vertices()) pts.push_back(v.p - w.p);
  }
  return hull_with_marks(pts, {});
}

std::optional<size_t> pairs_maximally(const MarkedPolytope& p, Direction phi) {
  Wide best = dot(p.vertex(0).p, phi.v);
  size_t idx = 0, ties = 1;
  for (size_t i = 1; i < p.size(); ++i) {
    const Wide d = dot(p.vertex(i).p, phi.v);
    if (d > best) {
      best = d;
      idx = i;
      ties = 1;
    } else if (d == best) {
      ++ties;
    }
  }
  if (ties != 1) return std::nullopt;
  return idx;
}

std::vector<Direction> outward_edge_normals(const MarkedPolytope& p) {
  const size_t k = p.size();
  std::vector<Direction> out;
  if (k == 1) return out;
  out.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    const Vec2 e = p.vertex((i + 1) % k).p - p.vertex(i).p;
    out.push_back(Direction::reduced({e.y, -e.x}));
  }
  return out;
}

bool contains_point(const MarkedPolytope& p, Vec2 q) {
  const size_t k = p.size();
  if (k == 1) return p.vertex(0).p == q;
  if (k == 2) {
    const Vec2 a = p.vertex(0).p, b = p.vertex(1).p;
    if (cross(b - a, q - a) != 0) return false;
    return dot(q - a, b - a) >= 0 && dot(q - b, a - b) >= 0;
  }
  for (size_t i = 0; i < k; ++i) {
    const Vec2 a = p.vertex(i).p, b = p.vertex((i + 1) % k).p;
    if (cross(b - a, q - a) < 0) return false;
  }
  return true;
}

MarkedPolytope translate(const MarkedPolytope& p, Vec2 t) {
  std::vector<MarkedVertex> vs = p.vertices();
  for (MarkedVertex& v : vs) v.p = v.p + t;
  return MarkedPolytope::from_vertices(std::move(vs));
}

MarkedPolytope normalize_translation(const MarkedPolytope& p) {
  Vec2 lo = p.vertex(0).p;
  for (const MarkedVertex& v : p.vertices()) {
    lo.x = std::min(lo.x, v.p.x);
    lo.y = std::min(lo.y, v.p.y);
  }
  return translate(p, -lo);
}

bool equal_up_to_translation(const MarkedPolytope& a, const MarkedPolytope& b,
                             bool with_marks) {
  if (a.size() != b.size()) return false;
  const Vec2 t = b.vertex(0).p - a.vertex(0).p;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a.vertex(i).p + t != b.vertex(i).p) return false;
    if (with_marks && a.vertex(i).marked != b.vertex(i).marked) return false;
  }
  return true;
}

MarkedPolytope apply_basis(const MarkedPolytope& p, const LinearMap& m) {
  if (m.det() != 1 && m.det() != -1) {
    fail(ErrorKind::Internal, "basis-not-unimodular",
         "coordinate change must have determinant +-1");
  }
  std::vector<Vec2> pts;
  std::map<Vec2, bool> marks;
  pts.reserve(p.size());
  for (const MarkedVertex& v : p.vertices()) {
    const Vec2 w = m.apply(v.p);
    pts.push_back(w);
    marks[w] = v.marked;
  }
  return hull_with_marks(pts, marks);
}

}  // namespace relpoly
