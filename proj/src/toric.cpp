#include "toriccap/toric.hpp"

#include <algorithm>

#include "toriccap/error.hpp"

namespace toriccap {

namespace {

void require_same_fan(const Fan2D& a, const Fan2D& b) {
  if (!(a == b)) throw Error(ErrorCode::kInvalidArgument, "curve class and divisor live on different fans");
}

// Adds the coordinates of v in the (smooth) cone containing it to entries.
void add_cone_coordinates(const Fan2D& fan, const LatticeVector& v, std::vector<Integer>& entries) {
  std::size_t i = locate_cone(fan, v);
  const auto& u = fan.ray(i);
  const auto& w = fan.next(i);
  if (det(u, v) == 0) {
    entries[i] += u.x() != 0 ? Integer(v.x() / u.x()) : Integer(v.y() / u.y());
    return;
  }
  // det(u, w) == 1 on a smooth fan.
  entries[i] += det(v, w);
  entries[(i + 1) % fan.size()] += det(u, v);
}

}  // namespace

CurveClass::CurveClass(Fan2D fan, std::vector<Integer> multiplicities)
    : fan_(std::move(fan)), mult_(std::move(multiplicities)) {
  if (mult_.size() != fan_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "curve class needs one multiplicity per ray");
  }
  Integer sx = 0;
  Integer sy = 0;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (mult_[i] < 0) throw Error(ErrorCode::kInvalidArgument, "negative multiplicity");
    sx += mult_[i] * fan_.ray(i).x();
    sy += mult_[i] * fan_.ray(i).y();
  }
  if (sx != 0 || sy != 0) {
    throw Error(ErrorCode::kInvalidArgument, "multiplicities do not satisfy sum a_rho v_rho = 0");
  }
}

bool CurveClass::is_zero() const {
  return std::all_of(mult_.begin(), mult_.end(), [](const Integer& a) { return a == 0; });
}

CurveClass operator+(const CurveClass& a, const CurveClass& b) {
  if (!(a.fan_ == b.fan_)) throw Error(ErrorCode::kInvalidArgument, "curve classes live on different fans");
  std::vector<Integer> out(a.mult_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.mult_[i] + b.mult_[i];
  return CurveClass(a.fan_, std::move(out));
}

CurveClass operator*(const Integer& m, const CurveClass& c) {
  if (m < 0) throw Error(ErrorCode::kInvalidArgument, "negative multiple of a curve class");
  std::vector<Integer> out(c.mult_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = m * c.mult_[i];
  return CurveClass(c.fan_, std::move(out));
}

CocharacterRelation cocharacter_relation(const Fan2D& fan, const LatticeVector& u) {
  if (!is_smooth(fan)) throw Error(ErrorCode::kUnsupportedFan, "cocharacter relations need a smooth fan");
  if (u.dim() != 2 || u.is_zero() || !(primitive(u) == u)) {
    throw Error(ErrorCode::kInvalidArgument, "cocharacter needs a primitive planar vector");
  }
  std::vector<Integer> entries(fan.size(), Integer(0));
  add_cone_coordinates(fan, u, entries);
  add_cone_coordinates(fan, -u, entries);
  return CocharacterRelation{fan, u, std::move(entries)};
}

Rational intersect_divisor(const CurveClass& c, const DivisorOnFan& d) {
  require_same_fan(c.fan(), d.fan);
  Rational total = 0;
  for (std::size_t i = 0; i < c.multiplicities().size(); ++i) {
    total += c[i] * d.coefficients[i];
  }
  return total;
}

Rational intersect_divisor(const CocharacterRelation& r, const DivisorOnFan& d) {
  require_same_fan(r.fan, d.fan);
  return support_eval(d, r.u) + support_eval(d, -r.u);
}

Integer anticanonical_degree(const CurveClass& c) {
  Integer total = 0;
  for (const auto& a : c.multiplicities()) total += a;
  return total;
}

std::vector<MovablePart> movable_decompose(const CurveClass& c) {
  const Fan2D& fan = c.fan();
  if (!is_smooth(fan) || !is_strongly_convex(fan)) {
    throw Error(ErrorCode::kUnsupportedFan, "movable decomposition needs a smooth strongly convex fan");
  }
  std::vector<MovablePart> parts;
  std::vector<Integer> residual = c.multiplicities();
  const std::size_t m1 = *fan.index_of(LatticeVector{-1, 0});
  const std::size_t m2 = *fan.index_of(LatticeVector{0, -1});
  for (std::size_t i : positive_rays(fan)) {
    const Integer& b = c[i];
    if (b == 0) continue;
    parts.push_back({fan.ray(i), b});
    residual[i] -= b;
    residual[m1] -= b * fan.ray(i).x();
    residual[m2] -= b * fan.ray(i).y();
  }
  for (const auto& r : residual) {
    if (r != 0) throw Error(ErrorCode::kNotMovable, "class is not a nonnegative sum of R_rho");
  }
  return parts;
}

std::optional<FiberMultiple> fiber_multiple(const CurveClass& c) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < c.multiplicities().size(); ++i) {
    if (c[i] > 0) support.push_back(i);
  }
  if (support.size() != 2 || c[support[0]] != c[support[1]]) return std::nullopt;
  const auto& u = c.fan().ray(support[0]);
  const auto& w = c.fan().ray(support[1]);
  if (!(u == -w)) return std::nullopt;
  if (u.y() == 0 && (u.x() == 1 || u.x() == -1)) return FiberMultiple{1, c[support[0]]};
  if (u.x() == 0 && (u.y() == 1 || u.y() == -1)) return FiberMultiple{2, c[support[0]]};
  return std::nullopt;
}

ClassPolygon polygon_of_class(const CurveClass& c, const RationalPolytope& omega) {
  if (c.is_zero()) throw Error(ErrorCode::kInvalidArgument, "zero class has no polygon");
  const Fan2D& fan = c.fan();

  // Edge for ray v with multiplicity a: a * (v rotated by +90 degrees).
  std::vector<LatticeVector> edges;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (c[i] == 0) continue;
    const auto& v = fan.ray(i);
    edges.emplace_back(Integer(-c[i] * v.y()), Integer(c[i] * v.x()));
  }

  std::vector<LatticeVector> vertices;
  LatticeVector cursor{0, 0};
  for (const auto& e : edges) {
    vertices.push_back(cursor);
    cursor = cursor + e;
  }
  if (!cursor.is_zero()) throw Error(ErrorCode::kVerification, "class polygon does not close");

  Integer min_x = vertices[0].x();
  Integer min_y = vertices[0].y();
  for (const auto& p : vertices) {
    if (p.x() < min_x) min_x = p.x();
    if (p.y() < min_y) min_y = p.y();
  }
  const LatticeVector shift(Integer(-min_x), Integer(-min_y));
  for (auto& p : vertices) p = p + shift;
  std::rotate(vertices.begin(), std::min_element(vertices.begin(), vertices.end()), vertices.end());

  ClassPolygon out{std::move(vertices), 0, 0};
  for (const auto& e : edges) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), e.x().get_mpz_t(), e.y().get_mpz_t());
    LatticeVector outward(Integer(e.y() / g), Integer(-e.x() / g));
    out.affine_perimeter += g;
    out.omega_length += g * support_value(omega, outward);
  }

  if (out.affine_perimeter != anticanonical_degree(c)) {
    throw Error(ErrorCode::kVerification, "affine perimeter differs from -K.C");
  }
  if (out.omega_length != intersect_divisor(c, support_divisor(omega, fan))) {
    throw Error(ErrorCode::kVerification, "omega-length differs from A.C");
  }
  return out;
}

}  // namespace toriccap
