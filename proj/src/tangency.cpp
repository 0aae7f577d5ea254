#include "toriccap/tangency.hpp"

#include <algorithm>

#include "toriccap/error.hpp"

namespace toriccap {

TangencyConstraint::TangencyConstraint(std::vector<std::vector<long>> points, int dim)
    : points_(std::move(points)), dim_(dim) {
  if (dim_ < 2 || dim_ % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "tangency constraint dimension must be even and >= 2");
  }
  if (points_.empty()) throw Error(ErrorCode::kInvalidArgument, "tangency constraint has no points");
  for (const auto& list : points_) {
    if (list.empty()) throw Error(ErrorCode::kInvalidArgument, "empty tangency list at a point");
    if (!std::is_sorted(list.begin(), list.end()) || list.front() < 0) {
      throw Error(ErrorCode::kInvalidArgument, "tangency values must be nonnegative and nondecreasing");
    }
  }
}

long codim(const TangencyConstraint& p) {
  long total = 0;
  for (const auto& list : p.points()) {
    for (long value : list) total += p.dim() - 2 + 2 * value;
  }
  return total;
}

bool is_lax(const TangencyConstraint& p) {
  return std::all_of(p.points().begin(), p.points().end(),
                     [](const auto& list) { return list.size() == 1; });
}

TangencyConstraint unite(const TangencyConstraint& p, const TangencyConstraint& q) {
  if (p.dim() != q.dim()) throw Error(ErrorCode::kInvalidArgument, "union needs equal dimensions");
  auto points = p.points();
  points.insert(points.end(), q.points().begin(), q.points().end());
  return TangencyConstraint(std::move(points), p.dim());
}

TangencyConstraint catenate(const TangencyConstraint& p, const TangencyConstraint& q) {
  if (p.dim() != q.dim()) throw Error(ErrorCode::kInvalidArgument, "catenation needs equal dimensions");
  if (p.point_count() != q.point_count()) {
    throw Error(ErrorCode::kInvalidArgument, "catenation needs equal point counts");
  }
  auto points = p.points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i].insert(points[i].end(), q.points()[i].begin(), q.points()[i].end());
    std::sort(points[i].begin(), points[i].end());
  }
  return TangencyConstraint(std::move(points), p.dim());
}

}  // namespace toriccap
