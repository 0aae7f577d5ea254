#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toriccap/fan.hpp"

namespace toriccap {

// Curve class on the smooth toric surface of a fan, stored as ray
// multiplicities a with a >= 0 and sum_rho a_rho v_rho = 0.
class CurveClass {
 public:
  CurveClass(Fan2D fan, std::vector<Integer> multiplicities);

  const Fan2D& fan() const { return fan_; }
  const std::vector<Integer>& multiplicities() const { return mult_; }
  const Integer& operator[](std::size_t i) const { return mult_[i]; }
  bool is_zero() const;

  // Cross-fan arithmetic throws kInvalidArgument.
  friend CurveClass operator+(const CurveClass& a, const CurveClass& b);
  friend CurveClass operator*(const Integer& m, const CurveClass& c);
  friend bool operator==(const CurveClass& a, const CurveClass& b) {
    return a.fan_ == b.fan_ && a.mult_ == b.mult_;
  }

 private:
  Fan2D fan_;
  std::vector<Integer> mult_;
};

struct CocharacterRelation {
  Fan2D fan;
  LatticeVector u;
  std::vector<Integer> entries;

  CurveClass as_class() const { return CurveClass(fan, entries); }
};

// R_u: u and -u written in the cones containing them. Requires a smooth fan.
CocharacterRelation cocharacter_relation(const Fan2D& fan, const LatticeVector& u);

// sum_rho a_rho phi_D(v_rho).
Rational intersect_divisor(const CurveClass& c, const DivisorOnFan& d);
// phi_D(u) + phi_D(-u).
Rational intersect_divisor(const CocharacterRelation& r, const DivisorOnFan& d);

// -K . C = sum of multiplicities.
Integer anticanonical_degree(const CurveClass& c);

struct MovablePart {
  LatticeVector ray;
  Integer count;
};

// Writes c = sum_{rho in positive quadrant} b_rho R_rho. Requires a smooth,
// strongly convex fan; throws kNotMovable when the residual on -e1/-e2 does not
// vanish.
std::vector<MovablePart> movable_decompose(const CurveClass& c);

struct FiberMultiple {
  int axis;  // 1 or 2
  Integer multiplicity;
};

// (j, m) when c is supported exactly on {e_j, -e_j} with equal multiplicity m.
std::optional<FiberMultiple> fiber_multiple(const CurveClass& c);

struct ClassPolygon {
  // Counterclockwise lattice vertices, translated into the positive quadrant
  // touching both axes. A segment has two vertices.
  std::vector<LatticeVector> vertices;
  Integer affine_perimeter;
  Rational omega_length;
};

// Lattice polygon with one edge of lattice length a_rho orthogonal to each
// v_rho with a_rho > 0. Both boundary measures are recomputed from the edges
// and checked against -K.C and A_omega.C (kVerification on mismatch).
ClassPolygon polygon_of_class(const CurveClass& c, const RationalPolytope& omega);

}  // namespace toriccap
