#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "toriccap/rational.hpp"

namespace toriccap {

// Integer vector in Z^n, n >= 2. Most of the library works in the plane and
// uses x()/y(); the brute-force oracle also uses n = 3.
class LatticeVector {
 public:
  LatticeVector(Integer x, Integer y);
  LatticeVector(std::initializer_list<long> coords);
  explicit LatticeVector(std::vector<Integer> coords);

  std::size_t dim() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const Integer& x() const { return coords_[0]; }
  const Integer& y() const { return coords_[1]; }
  const std::vector<Integer>& coords() const { return coords_; }
  bool is_zero() const;

  LatticeVector operator-() const;
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator*(const Integer& m, const LatticeVector& v);
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  // Lexicographic; only used for deterministic containers.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

 private:
  std::vector<Integer> coords_;
};

// u.x * w.y - u.y * w.x for planar vectors.
Integer det(const LatticeVector& u, const LatticeVector& w);

// "(x,y)" or "(x,y,z)".
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
};

Rational cross(const Point2& o, const Point2& a, const Point2& b);

// Full-dimensional convex polygon with exact rational vertices. Construction
// canonicalizes the input: duplicates and non-extreme points are dropped and
// the vertices are stored counterclockwise starting from the lexicographically
// smallest one.
class RationalPolytope {
 public:
  static RationalPolytope from_vertices(std::vector<Point2> points);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t ambient_dim() const { return 2; }
  Rational area() const;

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  explicit RationalPolytope(std::vector<Point2> vertices)
      : vertices_(std::move(vertices)) {}

  std::vector<Point2> vertices_;
};

// Vertex cloud in R^n for the dimension-generic lattice oracle. Only support
// values are needed there, so no hull is computed.
struct VertexSet {
  std::size_t dim = 2;
  std::vector<std::vector<Rational>> points;

  static VertexSet from_polytope(const RationalPolytope& omega);
};

struct Widths {
  Rational a;
  Rational b;
};

// max over u in omega of <u, v>.
Rational support_value(const RationalPolytope& omega, const LatticeVector& v);
Rational support_value(const VertexSet& omega, const LatticeVector& v);

bool contains(const RationalPolytope& omega, const Point2& p);
// Every vertex of inner lies in outer.
bool contains(const RationalPolytope& outer, const RationalPolytope& inner);

// a = max{x : (x,0) in omega}, b = max{y : (0,y) in omega}.
Widths widths(const RationalPolytope& omega);

// Outward edge normals (one per edge, CCW edge order), scaled to primitive
// integer vectors.
std::vector<LatticeVector> edge_normals(const RationalPolytope& omega);

// Moment domain test: omega sits in the closed positive quadrant, contains the
// origin, and every outward normal is -e1, -e2 or has both coordinates >= 0.
bool is_strongly_convex(const RationalPolytope& omega);

RationalPolytope scale(const RationalPolytope& omega, const Rational& c);

}  // namespace toriccap
