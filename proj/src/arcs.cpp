// Open subsets of the circle of directions, represented as disjoint open
// arcs: membership, antipodal image, intersection, and the arcs cut out by
// the marked vertices of a polytope.

#include "relpoly/arcs.hpp"

#include <algorithm>

#include "relpoly/error.hpp"

namespace relpoly {

namespace {

// Coarse position of x on the circle as seen from anchor a (both primitive):
// 0 at a, 1 strictly within the first half turn, 2 at the antipode, 3 beyond.
int rank_from(Vec2 a, Vec2 x) {
  if (x == a) return 0;
  const Wide c = cross(a, x);
  if (c > 0) return 1;
  if (c == 0) return 2;  // primitive and collinear but not equal: antipodal
  return 3;
}

// Does x come strictly before y when sweeping counterclockwise from a?
bool ccw_before(Vec2 a, Vec2 x, Vec2 y) {
  const int rx = rank_from(a, x), ry = rank_from(a, y);
  if (rx != ry) return rx < ry;
  if (rx == 1 || rx == 3) return cross(x, y) > 0;
  return false;  // equal rank 0 or 2 means x == y
}

}  // namespace

bool arc_contains(const Arc& arc, Direction d) {
  return rank_from(arc.from.v, d.v) != 0 && ccw_before(arc.from.v, d.v, arc.to.v);
}

Direction arc_interior_sample(const Arc& arc) {
  switch (rank_from(arc.from.v, arc.to.v)) {
    case 1:  // spans less than a half turn: the mediant bisects it
      return Direction::reduced(arc.from.v + arc.to.v);
    case 2:  // exactly a half turn: rotate the start a quarter turn
      return Direction{{-arc.from.v.y, arc.from.v.x}};
    case 3:  // more than a half turn: the antipode of the mediant bisects it
      return Direction::reduced(-(arc.from.v + arc.to.v));
    default:
      fail(ErrorKind::Internal, "degenerate-arc", "arc with equal endpoints");
  }
}

ArcSet ArcSet::full_circle() {
  ArcSet s;
  s.full_ = true;
  return s;
}

ArcSet ArcSet::of_arcs(std::vector<Arc> arcs) {
  for (const Arc& a : arcs) {
    if (a.from == a.to) {
      fail(ErrorKind::Internal, "degenerate-arc", "arc with equal endpoints");
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return angle_ccw_less(a.from.v, b.from.v);
  });
  // Two open arcs meet exactly when they share a start or one contains the
  // other's start (walking clockwise from a common point, the later start is
  // reached while still inside the other arc).
  for (size_t i = 0; i < arcs.size(); ++i) {
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs[i].from == arcs[j].from || arc_contains(arcs[i], arcs[j].from) ||
          arc_contains(arcs[j], arcs[i].from)) {
        fail(ErrorKind::Internal, "arcs-overlap",
             "arcs " + to_string(arcs[i].from) + ".." + to_string(arcs[i].to) +
                 " and " + to_string(arcs[j].from) + ".." + to_string(arcs[j].to) +
                 " overlap");
      }
    }
  }
  ArcSet s;
  s.arcs_ = std::move(arcs);
  return s;
}

bool ArcSet::contains(Direction d) const {
  if (full_) return true;
  for (const Arc& a : arcs_) {
    if (arc_contains(a, d)) return true;
  }
  return false;
}

ArcSet ArcSet::negated() const {
  if (full_ || arcs_.empty()) return *this;
  std::vector<Arc> out;
  out.reserve(arcs_.size());
  for (const Arc& a : arcs_) out.push_back({a.from.negated(), a.to.negated()});
  return of_arcs(std::move(out));
}

ArcSet intersect(const ArcSet& a, const ArcSet& b) {
  if (a.is_empty() || b.is_empty()) return ArcSet::empty_set();
  if (a.is_full()) return b;
  if (b.is_full()) return a;

  // Subdivide the circle at every endpoint of either set. Each elementary
  // piece (an endpoint, or an open arc between circularly consecutive
  // endpoints) lies entirely inside or outside each set, so one membership
  // test per piece determines the intersection.
  std::vector<Vec2> cuts;
  for (const Arc& arc : a.arcs()) {
    cuts.push_back(arc.from.v);
    cuts.push_back(arc.to.v);
  }
  for (const Arc& arc : b.arcs()) {
    cuts.push_back(arc.from.v);
    cuts.push_back(arc.to.v);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::sort(cuts.begin(), cuts.end(), angle_ccw_less);
  const size_t m = cuts.size();

  // Piece 2*i is the endpoint cuts[i]; piece 2*i+1 is the open arc from
  // cuts[i] to cuts[(i+1) % m].
  std::vector<bool> included(2 * m);
  auto in_both = [&](Direction d) { return a.contains(d) && b.contains(d); };
  for (size_t i = 0; i < m; ++i) {
    included[2 * i] = in_both(Direction{cuts[i]});
    const Arc piece{Direction{cuts[i]}, Direction{cuts[(i + 1) % m]}};
    included[2 * i + 1] = in_both(arc_interior_sample(piece));
  }

  size_t anchor = 2 * m;
  for (size_t i = 0; i < 2 * m; ++i) {
    if (!included[i]) {
      anchor = i;
      break;
    }
  }
  if (anchor == 2 * m) return ArcSet::full_circle();

  // Walk once around from just past an excluded piece, stitching maximal runs
  // of included pieces. The intersection is open, so an included endpoint
  // always has both neighbouring arcs included; runs begin and end on arcs.
  std::vector<Arc> out;
  size_t run_start = 2 * m;  // index of first piece of the current run
  for (size_t step = 1; step <= 2 * m; ++step) {
    const size_t i = (anchor + step) % (2 * m);
    if (included[i]) {
      if (run_start == 2 * m) run_start = i;
    } else if (run_start != 2 * m) {
      const size_t last = (i + 2 * m - 1) % (2 * m);
      if (run_start % 2 == 0 || last % 2 == 0) {
        fail(ErrorKind::Internal, "isolated-direction",
             "open-set intersection produced a stray endpoint");
      }
      out.push_back({Direction{cuts[(run_start - 1) / 2]},
                     Direction{cuts[((last - 1) / 2 + 1) % m]}});
      run_start = 2 * m;
    }
  }
  // The walk's final step lands on the excluded anchor piece, so every run
  // has been closed by the time the loop exits.
  return ArcSet::of_arcs(std::move(out));
}

ArcSet marked_normal_arcs(const MarkedPolytope& p) {
  if (p.is_point()) {
    return p.vertex(0).marked ? ArcSet::full_circle() : ArcSet::empty_set();
  }
  const std::vector<Direction> normals = outward_edge_normals(p);
  const size_t k = p.size();
  std::vector<Arc> arcs;
  for (size_t i = 0; i < k; ++i) {
    if (!p.vertex(i).marked) continue;
    arcs.push_back({normals[(i + k - 1) % k], normals[i]});
  }
  return ArcSet::of_arcs(std::move(arcs));
}

}  // namespace relpoly
