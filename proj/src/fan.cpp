#include "toriccap/fan.hpp"

#include <algorithm>

#include "toriccap/error.hpp"

namespace toriccap {

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const LatticeVector& v) {
  return (v.y() > 0 || (v.y() == 0 && v.x() > 0)) ? 0 : 1;
}

bool angle_less(const LatticeVector& a, const LatticeVector& b) {
  int ha = half_plane(a);
  int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return det(a, b) > 0;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  return a.x() * b.x() + a.y() * b.y();
}

bool is_primitive(const LatticeVector& v) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), v.x().get_mpz_t(), v.y().get_mpz_t());
  return g == 1;
}

// Hirzebruch-Jung rays strictly inside cone(u, w), counterclockwise from u.
// Each step takes the lattice point p with det(u, p) = 1 that is closest to w,
// i.e. minimizes det(p, w) >= 0.
std::vector<LatticeVector> resolve_cone(LatticeVector u, const LatticeVector& w) {
  std::vector<LatticeVector> inserted;
  Integer d = det(u, w);
  while (d > 1) {
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), u.x().get_mpz_t(),
               u.y().get_mpz_t());
    LatticeVector p0(Integer(-t), s);
    Integer m = ceil_div(-det(p0, w), d);
    LatticeVector p = p0 + m * u;
    inserted.push_back(p);
    u = p;
    d = det(u, w);
  }
  return inserted;
}

}  // namespace

Fan2D::Fan2D(std::vector<LatticeVector> rays) {
  for (const auto& r : rays) {
    if (r.dim() != 2) throw Error(ErrorCode::kInvalidArgument, "fan rays must be planar");
    if (r.is_zero()) throw Error(ErrorCode::kInvalidArgument, "fan ray is zero");
    if (!is_primitive(r)) throw Error(ErrorCode::kInvalidArgument, "fan ray is not primitive");
  }
  std::sort(rays.begin(), rays.end(), angle_less);
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& u = rays[i];
    const auto& w = rays[(i + 1) % rays.size()];
    if (rays.size() < 3 || det(u, w) <= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "fan rays must be distinct and span strictly convex cones covering the plane");
    }
  }
  rays_ = std::make_shared<const std::vector<LatticeVector>>(std::move(rays));
}

std::optional<std::size_t> Fan2D::index_of(const LatticeVector& v) const {
  auto it = std::find(rays_->begin(), rays_->end(), v);
  if (it == rays_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - rays_->begin());
}

DivisorOnFan::DivisorOnFan(Fan2D f, std::vector<Rational> c)
    : fan(std::move(f)), coefficients(std::move(c)) {
  if (coefficients.size() != fan.size()) {
    throw Error(ErrorCode::kInvalidArgument, "divisor needs one coefficient per ray");
  }
}

LatticeVector primitive(const LatticeVector& v) {
  if (v.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero vector has no primitive");
  Integer g = 0;
  for (const auto& c : v.coords()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.dim());
  for (const auto& c : v.coords()) out.push_back(c / g);
  return LatticeVector(std::move(out));
}

Fan2D normal_fan(const RationalPolytope& omega) { return Fan2D(edge_normals(omega)); }

bool is_smooth(const Fan2D& fan) {
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (det(fan.ray(i), fan.next(i)) != 1) return false;
  }
  return true;
}

Fan2D refine_smooth(const Fan2D& fan) {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    rays.push_back(fan.ray(i));
    for (auto& p : resolve_cone(fan.ray(i), fan.next(i))) rays.push_back(std::move(p));
  }
  if (rays.size() == fan.size()) return fan;
  return Fan2D(std::move(rays));
}

Fan2D blow_up_cone(const Fan2D& fan, std::size_t i) {
  if (i >= fan.size()) throw Error(ErrorCode::kInvalidArgument, "cone index out of range");
  std::vector<LatticeVector> rays = fan.rays();
  rays.push_back(primitive(fan.ray(i) + fan.next(i)));
  return Fan2D(std::move(rays));
}

std::size_t locate_cone(const Fan2D& fan, const LatticeVector& v) {
  if (v.dim() != 2 || v.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "cone lookup needs a nonzero planar vector");
  }
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (det(fan.ray(i), v) == 0 && dot(fan.ray(i), v) > 0) return i;
  }
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (det(fan.ray(i), v) > 0 && det(v, fan.next(i)) > 0) return i;
  }
  throw Error(ErrorCode::kInvalidArgument, "vector not covered by fan");
}

Rational support_eval(const DivisorOnFan& d, const LatticeVector& v) {
  std::size_t i = locate_cone(d.fan, v);
  const auto& u = d.fan.ray(i);
  const auto& w = d.fan.next(i);
  if (det(u, v) == 0) {
    Integer scale = u.x() != 0 ? Integer(v.x() / u.x()) : Integer(v.y() / u.y());
    return scale * d.coefficients[i];
  }
  Integer den = det(u, w);
  Rational alpha = make_rational(det(v, w), den);
  Rational beta = make_rational(det(u, v), den);
  return alpha * d.coefficients[i] + beta * d.coefficients[(i + 1) % d.fan.size()];
}

DivisorOnFan support_divisor(const RationalPolytope& omega, const Fan2D& fan) {
  std::vector<Rational> coeffs;
  coeffs.reserve(fan.size());
  for (const auto& r : fan.rays()) coeffs.push_back(support_value(omega, r));
  return DivisorOnFan(fan, std::move(coeffs));
}

bool is_strongly_convex(const Fan2D& fan) {
  const LatticeVector minus_e1{-1, 0};
  const LatticeVector minus_e2{0, -1};
  bool has1 = false;
  bool has2 = false;
  for (const auto& r : fan.rays()) {
    if (r == minus_e1) {
      has1 = true;
    } else if (r == minus_e2) {
      has2 = true;
    } else if (r.x() < 0 || r.y() < 0) {
      return false;
    }
  }
  return has1 && has2;
}

std::vector<std::size_t> positive_rays(const Fan2D& fan) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (fan.ray(i).x() >= 0 && fan.ray(i).y() >= 0) out.push_back(i);
  }
  return out;
}

}  // namespace toriccap
