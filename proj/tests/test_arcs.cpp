#include <doctest.h>

#include <functional>
#include <vector>

#include "oracles.hpp"
#include "relpoly/arcs.hpp"
#include "relpoly/sampling.hpp"

using namespace relpoly;

namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

Direction D(Int a, Int b) { return Direction::checked(a, b); }

}  // namespace

TEST_CASE("open arc membership") {
  const Arc a{D(1, 0), D(0, 1)};  // first quadrant, open
  CHECK(arc_contains(a, D(1, 1)));
  CHECK(arc_contains(a, D(3, 1)));
  CHECK(!arc_contains(a, D(1, 0)));   // endpoints excluded
  CHECK(!arc_contains(a, D(0, 1)));
  CHECK(!arc_contains(a, D(-1, 1)));
  CHECK(!arc_contains(a, D(-1, -1)));

  // Wraps past the positive x-axis.
  const Arc w{D(0, -1), D(0, 1)};
  CHECK(arc_contains(w, D(1, 0)));
  CHECK(arc_contains(w, D(1, -1)));
  CHECK(arc_contains(w, D(1, 1)));
  CHECK(!arc_contains(w, D(-1, 0)));

  // More than a half circle.
  const Arc big{D(1, 0), D(0, -1)};
  CHECK(arc_contains(big, D(0, 1)));
  CHECK(arc_contains(big, D(-1, 0)));
  CHECK(arc_contains(big, D(-1, -1)));
  CHECK(!arc_contains(big, D(1, -1)));
}

TEST_CASE("interior samples land inside") {
  Rng rng(37);
  int produced = 0;
  for (int i = 0; i < 500; ++i) {
    const Direction u = random_primitive_direction(rng, 9);
    const Direction v = random_primitive_direction(rng, 9);
    if (u == v) continue;
    const Arc a{u, v};
    const Direction s = arc_interior_sample(a);
    CHECK(arc_contains(a, s));
    ++produced;
  }
  CHECK(produced > 400);

  // Half circle (antipodal endpoints) and near-degenerate arcs.
  CHECK(arc_contains(Arc{D(1, 0), D(-1, 0)},
                     arc_interior_sample(Arc{D(1, 0), D(-1, 0)})));
  CHECK(arc_contains(Arc{D(-1, 0), D(1, 0)},
                     arc_interior_sample(Arc{D(-1, 0), D(1, 0)})));
}

TEST_CASE("arc set construction and membership") {
  CHECK(ArcSet::empty_set().is_empty());
  CHECK(ArcSet::full_circle().is_full());
  CHECK(ArcSet::full_circle().contains(D(-3, 7)));
  CHECK(!ArcSet::empty_set().contains(D(1, 0)));

  const ArcSet s =
      ArcSet::of_arcs({{D(0, 1), D(-1, 0)}, {D(1, 0), D(0, 1)}});
  REQUIRE(s.arcs().size() == 2);
  // Sorted counterclockwise from the positive x-axis.
  CHECK(s.arcs()[0].from == D(1, 0));
  CHECK(s.contains(D(1, 1)));
  CHECK(s.contains(D(-1, 2)));
  CHECK(!s.contains(D(0, 1)));   // the shared endpoint stays excluded
  CHECK(!s.contains(D(-1, -1)));

  CHECK(code_of([] {
          ArcSet::of_arcs({{D(1, 0), D(0, 1)}, {D(1, 1), D(-1, 0)}});
        }) == "arcs-overlap");
  CHECK(code_of([] {
          ArcSet::of_arcs({{D(1, 0), D(-1, 0)}, {D(1, 0), D(0, 1)}});
        }) == "arcs-overlap");
}

TEST_CASE("negation is the antipodal image") {
  const ArcSet s = ArcSet::of_arcs({{D(1, 0), D(0, 1)}});
  const ArcSet n = s.negated();
  CHECK(n.contains(D(-1, -1)));
  CHECK(!n.contains(D(1, 1)));
  CHECK(ArcSet::full_circle().negated().is_full());
  CHECK(ArcSet::empty_set().negated().is_empty());
  for (size_t k = 0; k < 64; ++k) {
    const Direction d = oracle::fan_direction(k, 64);
    CHECK(n.contains(d) == s.contains(d.negated()));
  }
}

TEST_CASE("intersection is exact pointwise") {
  Rng rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const MarkedPolytope p = random_marked_polytope(rng);
    const MarkedPolytope q = random_marked_polytope(rng);
    const ArcSet a = marked_normal_arcs(p);
    const ArcSet b = marked_normal_arcs(q);
    const ArcSet both = intersect(a, b);
    for (size_t k = 0; k < 90; ++k) {
      const Direction d = oracle::fan_direction(k, 90);
      CHECK(both.contains(d) == (a.contains(d) && b.contains(d)));
    }
    // Endpoints of the first input are outside it, hence outside the
    // intersection too.
    for (const Arc& arc : a.arcs()) {
      CHECK(!both.contains(arc.from));
      CHECK(!both.contains(arc.to));
    }
  }
  CHECK(intersect(ArcSet::full_circle(), ArcSet::empty_set()).is_empty());
  const ArcSet s = ArcSet::of_arcs({{D(1, 0), D(0, 1)}});
  CHECK(intersect(ArcSet::full_circle(), s) == s);
  CHECK(intersect(s, s) == s);
}

TEST_CASE("marked normal arcs match strict maximizers everywhere") {
  Rng rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const MarkedPolytope p = random_marked_polytope(rng);
    const ArcSet arcs = marked_normal_arcs(p);
    for (size_t k = 0; k < 120; ++k) {
      const Direction d = oracle::fan_direction(k, 120);
      CHECK(arcs.contains(d) == oracle::marked_strict_max(p, d));
    }
    // Edge normals are never members: no strict maximizer there.
    for (const Direction& n : outward_edge_normals(p)) {
      CHECK(!arcs.contains(n));
    }
  }

  // A fully marked point sees every direction; unmarked sees none.
  CHECK(marked_normal_arcs(hull_of_multiset({{{0, 0}, 1}})).is_full());
  CHECK(marked_normal_arcs(hull_of_multiset({{{0, 0}, 2}})).is_empty());
}
