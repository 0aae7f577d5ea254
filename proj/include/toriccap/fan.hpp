#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "toriccap/geometry.hpp"

namespace toriccap {

// Complete fan in R^2 given by its rays. The ray list is shared between
// copies, so Fan2D is cheap to pass by value.
//
// Invariants: every ray is primitive, rays are distinct, they are sorted
// counterclockwise starting from angle 0, and each pair of cyclically adjacent
// rays spans a strictly convex cone (det > 0). The last condition also forces
// completeness.
class Fan2D {
 public:
  explicit Fan2D(std::vector<LatticeVector> rays);

  const std::vector<LatticeVector>& rays() const { return *rays_; }
  std::size_t size() const { return rays_->size(); }
  const LatticeVector& ray(std::size_t i) const { return (*rays_)[i]; }
  // Ray following i counterclockwise.
  const LatticeVector& next(std::size_t i) const {
    return (*rays_)[(i + 1) % rays_->size()];
  }
  std::optional<std::size_t> index_of(const LatticeVector& v) const;

  friend bool operator==(const Fan2D& a, const Fan2D& b) {
    return a.rays_ == b.rays_ || *a.rays_ == *b.rays_;
  }

 private:
  std::shared_ptr<const std::vector<LatticeVector>> rays_;
};

// Piecewise-linear support function on a fan, given by its values on the ray
// generators.
struct DivisorOnFan {
  Fan2D fan;
  std::vector<Rational> coefficients;

  DivisorOnFan(Fan2D f, std::vector<Rational> c);
};

LatticeVector primitive(const LatticeVector& v);

Fan2D normal_fan(const RationalPolytope& omega);

bool is_smooth(const Fan2D& fan);

// Minimal smooth refinement: each singular cone is subdivided by the
// Hirzebruch-Jung rays, i.e. the lattice points on the compact part of the
// boundary of conv(cone ∩ Z^2 \ 0).
Fan2D refine_smooth(const Fan2D& fan);

// Inserts ray(i) + next(i). On a smooth cone this is the toric blowup of the
// corresponding fixed point and the result is again smooth.
Fan2D blow_up_cone(const Fan2D& fan, std::size_t i);

// Index i of the cone spanned by ray(i) and next(i) containing v. When v is
// parallel to a ray, that ray's index is returned.
std::size_t locate_cone(const Fan2D& fan, const LatticeVector& v);

Rational support_eval(const DivisorOnFan& d, const LatticeVector& v);

// The divisor A_omega whose support function is the omega-norm on a fan that
// refines the normal fan of omega.
DivisorOnFan support_divisor(const RationalPolytope& omega, const Fan2D& fan);

// Strong convexity at the fan level: every ray is -e1, -e2, or lies in the
// closed positive quadrant, and both -e1 and -e2 occur.
bool is_strongly_convex(const Fan2D& fan);

// Rays with both coordinates >= 0, in fan order.
std::vector<std::size_t> positive_rays(const Fan2D& fan);

}  // namespace toriccap
