#include "toriccap/lattice_program.hpp"

#include <algorithm>
#include <string>

#include "toriccap/error.hpp"

namespace toriccap {

namespace {

struct Candidate {
  Rational cost;
  std::int64_t weight = 0;
  std::vector<std::int64_t> b;
};

// Strict order on (cost, total weight, b lexicographic).
bool better(const Candidate& x, const Candidate& y) {
  if (x.cost != y.cost) return x.cost < y.cost;
  if (x.weight != y.weight) return x.weight < y.weight;
  return x.b < y.b;
}

std::int64_t to_int64(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::kResourceExhausted, "ray weight exceeds 64 bits");
  return v.get_si();
}

void require_k(int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
}

}  // namespace

FanLatticeProgram::FanLatticeProgram(const RationalPolytope& omega, int k_max)
    : omega_(omega), fan_(normal_fan(omega)), k_max_(k_max) {
  require_k(k_max);
  if (!is_strongly_convex(omega)) {
    throw Error(ErrorCode::kUnsupportedDomain,
                "fan program needs a strongly convex domain; use the brute-force oracle instead");
  }
  fan_ = refine_smooth(fan_);
  build();
}

FanLatticeProgram::FanLatticeProgram(const RationalPolytope& omega, Fan2D smooth_fan, int k_max)
    : omega_(omega), fan_(std::move(smooth_fan)), k_max_(k_max) {
  require_k(k_max);
  if (!is_strongly_convex(omega)) {
    throw Error(ErrorCode::kUnsupportedDomain,
                "fan program needs a strongly convex domain; use the brute-force oracle instead");
  }
  if (!is_smooth(fan_) || !is_strongly_convex(fan_)) {
    throw Error(ErrorCode::kUnsupportedFan, "fan must be smooth and strongly convex");
  }
  for (const auto& n : edge_normals(omega)) {
    if (!fan_.index_of(n)) {
      throw Error(ErrorCode::kInvalidArgument, "fan does not refine the normal fan of the domain");
    }
  }
  build();
}

void FanLatticeProgram::build() {
  for (std::size_t i : toriccap::positive_rays(fan_)) {
    const auto& v = fan_.ray(i);
    rays_.push_back(RayCost{v, i, support_value(omega_, v), to_int64(1 + v.x() + v.y())});
    if (v == LatticeVector{1, 0}) e1_ = rays_.size() - 1;
    if (v == LatticeVector{0, 1}) e2_ = rays_.size() - 1;
  }
  const std::size_t n = rays_.size();
  const std::int64_t top = k_max_ + 1;

  auto extend = [&](const DpTable& table, std::int64_t target, std::initializer_list<std::size_t> add) {
    std::int64_t added = 0;
    for (std::size_t j : add) added += rays_[j].weight;
    std::size_t from = static_cast<std::size_t>(std::max<std::int64_t>(0, target - added));
    Candidate c{table.cost[from], table.weight[from], table.witness[from]};
    for (std::size_t j : add) {
      c.cost += rays_[j].cost;
      c.weight += rays_[j].weight;
      c.b[j] += 1;
    }
    return c;
  };
  auto store = [](DpTable& table, Candidate c) {
    table.cost.push_back(std::move(c.cost));
    table.weight.push_back(c.weight);
    table.witness.push_back(std::move(c.b));
  };

  store(lower_, Candidate{0, 0, std::vector<std::int64_t>(n, 0)});
  for (std::int64_t t = 1; t <= top; ++t) {
    std::optional<Candidate> best;
    for (std::size_t j = 0; j < n; ++j) {
      Candidate c = extend(lower_, t, {j});
      if (!best || better(c, *best)) best = std::move(c);
    }
    store(lower_, std::move(*best));
  }

  // A class avoids being a fiber multiple iff it uses a ray off the axes or
  // uses both e1 and e2. Any optimum of either kind is an optimal covering of
  // the remaining target plus that ray (or pair), so one layer over the
  // unrestricted table suffices.
  for (std::int64_t t = 0; t <= top; ++t) {
    std::optional<Candidate> best;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == e1_ || j == e2_) continue;
      Candidate c = extend(lower_, t, {j});
      if (!best || better(c, *best)) best = std::move(c);
    }
    if (e1_ && e2_) {
      Candidate c = extend(lower_, t, {*e1_, *e2_});
      if (!best || better(c, *best)) best = std::move(c);
    }
    if (!best) throw Error(ErrorCode::kUnsupportedFan, "no admissible non-fiber class");
    store(upper_, std::move(*best));
  }
}

void FanLatticeProgram::check_k(int k) const {
  require_k(k);
  if (k > k_max_) {
    throw Error(ErrorCode::kInvalidArgument,
                "k = " + std::to_string(k) + " exceeds the table built for k_max = " +
                    std::to_string(k_max_));
  }
}

CurveClass FanLatticeProgram::expand(const std::vector<std::int64_t>& b) const {
  std::vector<Integer> mult(fan_.size(), Integer(0));
  const std::size_t m1 = *fan_.index_of(LatticeVector{-1, 0});
  const std::size_t m2 = *fan_.index_of(LatticeVector{0, -1});
  for (std::size_t j = 0; j < rays_.size(); ++j) {
    if (b[j] == 0) continue;
    Integer count(static_cast<long>(b[j]));
    mult[rays_[j].fan_index] += count;
    mult[m1] += count * rays_[j].ray.x();
    mult[m2] += count * rays_[j].ray.y();
  }
  return CurveClass(fan_, std::move(mult));
}

CapacityValue FanLatticeProgram::lower(int k) const {
  check_k(k);
  const auto t = static_cast<std::size_t>(k + 1);
  return CapacityValue{lower_.cost[t], expand(lower_.witness[t])};
}

CapacityValue FanLatticeProgram::upper(int k) const {
  check_k(k);
  const auto t = static_cast<std::size_t>(k + 1);
  Candidate best{upper_.cost[t], upper_.weight[t], upper_.witness[t]};
  // The single fiber pair (e_j, -e_j) has weight 2 and is admissible on its own.
  if (k <= 1) {
    for (auto j : {e1_, e2_}) {
      if (!j) continue;
      Candidate c{rays_[*j].cost, rays_[*j].weight, std::vector<std::int64_t>(rays_.size(), 0)};
      c.b[*j] = 1;
      if (better(c, best)) best = std::move(c);
    }
  }
  return CapacityValue{best.cost, expand(best.b)};
}

CapacityValue l_k(const RationalPolytope& omega, int k) {
  return FanLatticeProgram(omega, k).lower(k);
}

CapacityValue u_k(const RationalPolytope& omega, int k) {
  return FanLatticeProgram(omega, k).upper(k);
}

}  // namespace toriccap
