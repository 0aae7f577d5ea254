#include "toriccap/geometry.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include "toriccap/error.hpp"

namespace toriccap {

LatticeVector::LatticeVector(Integer x, Integer y) : coords_{std::move(x), std::move(y)} {}

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  for (long c : coords) coords_.emplace_back(c);
  if (coords_.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "lattice vectors need at least 2 coordinates");
  }
}

LatticeVector::LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "lattice vectors need at least 2 coordinates");
  }
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

LatticeVector LatticeVector::operator-() const {
  std::vector<Integer> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = -coords_[i];
  return LatticeVector(std::move(out));
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kInvalidArgument, "dimension mismatch");
  std::vector<Integer> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return LatticeVector(std::move(out));
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) { return a + (-b); }

LatticeVector operator*(const Integer& m, const LatticeVector& v) {
  std::vector<Integer> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = m * v[i];
  return LatticeVector(std::move(out));
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

Integer det(const LatticeVector& u, const LatticeVector& w) {
  return u.x() * w.y() - u.y() * w.x();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

RationalPolytope RationalPolytope::from_vertices(std::vector<Point2> points) {
  if (points.empty()) throw Error(ErrorCode::kInvalidDomain, "polytope has no vertices");
  std::sort(points.begin(), points.end(), [](const Point2& p, const Point2& q) {
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Andrew's monotone chain; collinear points are dropped.
  std::vector<Point2> hull;
  if (points.size() >= 3) {
    hull.reserve(2 * points.size());
    for (const auto& p : points) {
      while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
      hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
      while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0) {
        hull.pop_back();
      }
      hull.push_back(*it);
    }
    hull.pop_back();
  }
  if (hull.size() < 3) {
    throw Error(ErrorCode::kDegenerateDomain, "polytope has zero area");
  }
  return RationalPolytope(std::move(hull));
}

Rational RationalPolytope::area() const {
  Rational twice = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % vertices_.size()];
    twice += p.x * q.y - p.y * q.x;
  }
  return twice / 2;
}

VertexSet VertexSet::from_polytope(const RationalPolytope& omega) {
  VertexSet out;
  out.dim = 2;
  for (const auto& p : omega.vertices()) out.points.push_back({p.x, p.y});
  return out;
}

Rational support_value(const RationalPolytope& omega, const LatticeVector& v) {
  if (v.dim() != 2) throw Error(ErrorCode::kInvalidArgument, "planar polytope needs a planar vector");
  const auto& verts = omega.vertices();
  Rational best = verts[0].x * v.x() + verts[0].y * v.y();
  for (std::size_t i = 1; i < verts.size(); ++i) {
    Rational value = verts[i].x * v.x() + verts[i].y * v.y();
    if (value > best) best = value;
  }
  return best;
}

Rational support_value(const VertexSet& omega, const LatticeVector& v) {
  if (omega.points.empty()) throw Error(ErrorCode::kInvalidDomain, "domain has no vertices");
  if (v.dim() != omega.dim) throw Error(ErrorCode::kInvalidArgument, "dimension mismatch");
  Rational best;
  bool first = true;
  for (const auto& p : omega.points) {
    Rational value = 0;
    for (std::size_t i = 0; i < omega.dim; ++i) value += p[i] * v[i];
    if (first || value > best) best = value;
    first = false;
  }
  return best;
}

bool contains(const RationalPolytope& omega, const Point2& p) {
  const auto& verts = omega.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (cross(verts[i], verts[(i + 1) % verts.size()], p) < 0) return false;
  }
  return true;
}

bool contains(const RationalPolytope& outer, const RationalPolytope& inner) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Point2& p) { return contains(outer, p); });
}

namespace {

// Largest t with t * axis in omega, where axis is e1 (first = true) or e2.
Rational axis_reach(const RationalPolytope& omega, bool first) {
  auto along = [first](const Point2& p) -> const Rational& { return first ? p.x : p.y; };
  auto across = [first](const Point2& p) -> const Rational& { return first ? p.y : p.x; };
  const auto& verts = omega.vertices();
  std::optional<Rational> best;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto& p = verts[i];
    const auto& q = verts[(i + 1) % verts.size()];
    std::optional<Rational> hit;
    if (across(p) == 0) {
      hit = Rational(along(p));
    } else if ((across(p) < 0 && across(q) > 0) || (across(p) > 0 && across(q) < 0)) {
      hit = Rational(along(p) + (along(q) - along(p)) * (-across(p)) / (across(q) - across(p)));
    }
    if (hit && (!best || *hit > *best)) best = hit;
  }
  return *best;
}

}  // namespace

Widths widths(const RationalPolytope& omega) {
  if (!contains(omega, Point2{0, 0})) {
    throw Error(ErrorCode::kInvalidDomain, "domain does not contain the origin");
  }
  return Widths{axis_reach(omega, true), axis_reach(omega, false)};
}

std::vector<LatticeVector> edge_normals(const RationalPolytope& omega) {
  const auto& verts = omega.vertices();
  std::vector<LatticeVector> normals;
  normals.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const auto& p = verts[i];
    const auto& q = verts[(i + 1) % verts.size()];
    Rational nx = q.y - p.y;
    Rational ny = -(q.x - p.x);
    Integer l;
    mpz_lcm(l.get_mpz_t(), nx.get_den_mpz_t(), ny.get_den_mpz_t());
    Integer ix = nx.get_num() * (l / nx.get_den());
    Integer iy = ny.get_num() * (l / ny.get_den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
    normals.emplace_back(Integer(ix / g), Integer(iy / g));
  }
  return normals;
}

bool is_strongly_convex(const RationalPolytope& omega) {
  for (const auto& p : omega.vertices()) {
    if (p.x < 0 || p.y < 0) return false;
  }
  if (!contains(omega, Point2{0, 0})) return false;
  for (const auto& n : edge_normals(omega)) {
    bool axis = (n.x() == -1 && n.y() == 0) || (n.x() == 0 && n.y() == -1);
    if (!axis && (n.x() < 0 || n.y() < 0)) return false;
  }
  return true;
}

RationalPolytope scale(const RationalPolytope& omega, const Rational& c) {
  if (c <= 0) throw Error(ErrorCode::kInvalidArgument, "scale factor must be positive");
  std::vector<Point2> pts;
  pts.reserve(omega.vertices().size());
  for (const auto& p : omega.vertices()) pts.push_back({c * p.x, c * p.y});
  return RationalPolytope::from_vertices(std::move(pts));
}

}  // namespace toriccap
