#pragma once

#include <vector>

#include "toriccap/rational.hpp"

namespace toriccap {

// Tangency constraint at m points: for point i a nondecreasing list of
// tangency values P^i_j >= 0, plus the real dimension of the ambient manifold.
class TangencyConstraint {
 public:
  TangencyConstraint(std::vector<std::vector<long>> points, int dim);

  const std::vector<std::vector<long>>& points() const { return points_; }
  int dim() const { return dim_; }
  std::size_t point_count() const { return points_.size(); }

  friend bool operator==(const TangencyConstraint&, const TangencyConstraint&) = default;

 private:
  std::vector<std::vector<long>> points_;
  int dim_;
};

// sum over (i, j) of dim - 2 + 2 P^i_j.
long codim(const TangencyConstraint& p);

// One tangency value per point.
bool is_lax(const TangencyConstraint& p);

// Points of p followed by points of q.
TangencyConstraint unite(const TangencyConstraint& p, const TangencyConstraint& q);

// Pointwise merge of the lists of p and q, each merged list re-sorted.
TangencyConstraint catenate(const TangencyConstraint& p, const TangencyConstraint& q);

}  // namespace toriccap
