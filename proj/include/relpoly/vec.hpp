#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "relpoly/error.hpp"

namespace relpoly {

// All quantities in the library are integers; coordinates and exponent sums are
// bounded by relator lengths, while user-supplied direction components may be
// large. Products are always taken in 128 bits so every comparison is exact.
using Int = long long;
using Wide = __int128;

struct Vec2 {
  Int x = 0;
  Int y = 0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  friend Vec2 operator*(Int k, Vec2 v) { return {k * v.x, k * v.y}; }
  auto operator<=>(const Vec2&) const = default;
};

inline Wide cross(Vec2 a, Vec2 b) {
  return static_cast<Wide>(a.x) * b.y - static_cast<Wide>(a.y) * b.x;
}

inline Wide dot(Vec2 a, Vec2 b) {
  return static_cast<Wide>(a.x) * b.x + static_cast<Wide>(a.y) * b.y;
}

inline Int igcd(Int a, Int b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

inline std::string to_string(Vec2 v) {
  return "(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ")";
}

// Half-turn bucket for a nonzero vector, anchored at the positive x-axis:
// 0 for polar angles in [0, pi), 1 for [pi, 2*pi).
inline int half_turn(Vec2 u) { return (u.y > 0 || (u.y == 0 && u.x > 0)) ? 0 : 1; }

// Strict angular order on nonzero vectors, counterclockwise from (1, 0).
// Parallel vectors of the same orientation compare equal (neither is less).
inline bool angle_ccw_less(Vec2 u, Vec2 v) {
  const int hu = half_turn(u), hv = half_turn(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

// A nonzero primitive lattice vector: gcd(|a|, |b|) == 1. Used both for
// directions on the circle of rays and for integer characters (a, b) read as
// the values on the two generators.
struct Direction {
  Vec2 v;

  // Validates user input: the pair must be nonzero and already primitive.
  static Direction checked(Int a, Int b) {
    if (a == 0 && b == 0) {
      fail(ErrorKind::Parse, "not-primitive", "direction (0, 0) is not allowed");
    }
    if (igcd(a, b) != 1) {
      fail(ErrorKind::Parse, "not-primitive",
           "direction " + to_string(Vec2{a, b}) +
               " is not primitive; divide by gcd " +
               std::to_string(igcd(a, b)));
    }
    return Direction{Vec2{a, b}};
  }

  // Reduces an arbitrary nonzero vector to the primitive vector on its ray.
  static Direction reduced(Vec2 w) {
    if (w.x == 0 && w.y == 0) {
      fail(ErrorKind::Internal, "zero-direction",
           "cannot reduce the zero vector to a direction");
    }
    Int g = igcd(w.x, w.y);
    return Direction{Vec2{w.x / g, w.y / g}};
  }

  Direction negated() const { return Direction{-v}; }

  auto operator<=>(const Direction&) const = default;
};

inline std::string to_string(Direction d) { return to_string(d.v); }

// The lex-positive primitive direction orthogonal to a nonzero vector: the
// unique primitive w with dot(w, v) == 0 and w.x > 0, or w == (0, 1) when
// v is horizontal.
inline Direction positive_orthogonal(Vec2 v) {
  Direction d = Direction::reduced({-v.y, v.x});
  if (d.v.x < 0 || (d.v.x == 0 && d.v.y < 0)) d = d.negated();
  return d;
}

}  // namespace relpoly
