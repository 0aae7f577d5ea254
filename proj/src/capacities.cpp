#include "toriccap/capacities.hpp"

#include "toriccap/error.hpp"

namespace toriccap {

namespace {

void require_strongly_convex(const RationalPolytope& omega) {
  if (!is_strongly_convex(omega)) {
    throw Error(ErrorCode::kUnsupportedDomain, "domain is not strongly convex");
  }
}

// Minimizes ||v|| over compositions v of k into dim nonnegative parts.
void compositions_min(const VertexSet& omega, std::vector<Integer>& parts, std::size_t at,
                      long left, std::optional<Rational>& best) {
  if (at + 1 == parts.size()) {
    parts[at] = left;
    Rational value = support_value(omega, LatticeVector(parts));
    if (!best || value < *best) best = value;
    return;
  }
  for (long take = 0; take <= left; ++take) {
    parts[at] = take;
    compositions_min(omega, parts, at + 1, left - take, best);
  }
}

}  // namespace

Rational gh_capacity(const VertexSet& omega, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (omega.dim < 2 || omega.dim > 4) {
    throw Error(ErrorCode::kInvalidArgument, "Gutt-Hutchings enumeration supports dimensions 2..4");
  }
  std::vector<Integer> parts(omega.dim, Integer(0));
  std::optional<Rational> best;
  compositions_min(omega, parts, 0, k, best);
  return *best;
}

Rational gh_capacity(const RationalPolytope& omega, int k) {
  return gh_capacity(VertexSet::from_polytope(omega), k);
}

AsymptoticSlope asymptotic_slope(const RationalPolytope& omega) {
  require_strongly_convex(omega);
  Fan2D fan = normal_fan(omega);
  std::optional<AsymptoticSlope> best;
  for (std::size_t i : positive_rays(fan)) {
    const auto& v = fan.ray(i);
    Rational ratio = support_value(omega, v) / Rational(1 + v.x() + v.y());
    if (!best || ratio < best->slope) best = AsymptoticSlope{ratio, v};
  }
  return *best;
}

AsymptoticSlope asymptotic_slope_box(const RationalPolytope& omega, long bound) {
  require_strongly_convex(omega);
  if (bound < 1) throw Error(ErrorCode::kInvalidArgument, "box bound must be >= 1");
  std::optional<AsymptoticSlope> best;
  for (long x = 0; x <= bound; ++x) {
    for (long y = 0; y <= bound; ++y) {
      if (x == 0 && y == 0) continue;
      LatticeVector w{x, y};
      Rational ratio = support_value(omega, w) / Rational(1 + x + y);
      if (!best || ratio < best->slope) best = AsymptoticSlope{ratio, w};
    }
  }
  return *best;
}

Rational gromov_width(const RationalPolytope& omega) {
  require_strongly_convex(omega);
  Widths w = widths(omega);
  return w.a < w.b ? w.a : w.b;
}

RsftInterval rsft_interval(const RationalPolytope& omega, const TangencyConstraint& p) {
  if (p.dim() != 4) throw Error(ErrorCode::kInvalidArgument, "interval needs a constraint in dimension 4");
  long c = codim(p);
  if (c % 2 != 0) throw Error(ErrorCode::kInvalidArgument, "constraint codimension must be even");
  const int k = static_cast<int>(c / 2);
  const bool lax = is_lax(p);

  FanLatticeProgram program(omega, k);
  Widths w = widths(omega);
  RsftInterval out{k, program.lower(k).value, std::nullopt, lax && w.a == w.b, std::nullopt, !lax};
  if (lax) out.upper = program.upper(k).value;
  if (p.point_count() == 1 && p.points()[0].size() == 1) {
    const long k0 = p.points()[0][0];
    // In dimension 4, codim((k0)) = 2 + 2 k0, so k0 + 1 == k.
    out.stable_upper = program.upper(static_cast<int>(k0 + 1)).value;
  }
  return out;
}

std::vector<CapacityReport> capacity_reports(const RationalPolytope& omega, int k_max) {
  FanLatticeProgram program(omega, k_max);
  Widths w = widths(omega);
  std::vector<CapacityReport> rows;
  rows.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    CapacityValue lo = program.lower(k);
    CapacityValue up = program.upper(k);
    rows.push_back(CapacityReport{k, lo.value, up.value, gh_capacity(omega, k), lo.witness,
                                  up.witness, w.a == w.b});
  }
  return rows;
}

}  // namespace toriccap
