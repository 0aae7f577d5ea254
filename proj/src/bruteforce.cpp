#include "toriccap/bruteforce.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <string>

#include "toriccap/error.hpp"

namespace toriccap {

namespace {

using Vec = std::array<std::int64_t, 3>;

constexpr std::int64_t kCoordLimit = std::int64_t{1} << 40;

std::int64_t to_small(const Integer& v) {
  if (!v.fits_slong_p() || v > kCoordLimit || v < -kCoordLimit) {
    throw Error(ErrorCode::kResourceExhausted, "domain coordinates too large for the lattice search");
  }
  return v.get_si();
}

class Search {
 public:
  Search(const VertexSet& omega, int k, const BruteForceOptions& options)
      : n_(omega.dim), k_(k), options_(options) {
    scale_domain(omega);
    seed();
    enumerate_candidates();
  }

  BruteForceResult run() {
    Vec zero{0, 0, 0};
    dfs(0, 0, zero, 0, zero, zero, false, false);
    BruteForceResult out;
    out.value = make_rational(Integer(static_cast<long>(best_)), scale_);
    for (const auto& v : best_sequence_) {
      std::vector<Integer> c;
      for (std::size_t i = 0; i < n_; ++i) c.emplace_back(static_cast<long>(v[i]));
      out.sequence.emplace_back(std::move(c));
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  void scale_domain(const VertexSet& omega) {
    if (omega.points.empty()) throw Error(ErrorCode::kInvalidDomain, "domain has no vertices");
    scale_ = 1;
    for (const auto& p : omega.points) {
      if (p.size() != n_) throw Error(ErrorCode::kInvalidDomain, "vertex has wrong dimension");
      for (const auto& c : p) {
        if (c < 0) throw Error(ErrorCode::kInvalidDomain, "domain leaves the positive orthant");
        mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), c.get_den_mpz_t());
      }
    }
    bool has_origin = false;
    widths_.assign(n_, 0);
    for (const auto& p : omega.points) {
      Vec q{0, 0, 0};
      std::size_t nonzero = 0;
      std::size_t axis = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        q[i] = to_small(Integer(p[i] * scale_));
        if (q[i] != 0) {
          ++nonzero;
          axis = i;
        }
      }
      if (nonzero == 0) has_origin = true;
      if (nonzero == 1) widths_[axis] = std::max(widths_[axis], q[axis]);
      points_.push_back(q);
    }
    if (!has_origin) throw Error(ErrorCode::kInvalidDomain, "domain does not contain the origin");
    for (std::size_t i = 0; i < n_; ++i) {
      if (widths_[i] <= 0) {
        throw Error(ErrorCode::kInvalidDomain, "domain does not reach every positive axis");
      }
    }
  }

  std::int64_t norm(const Vec& v) const {
    std::int64_t best = 0;  // the origin is a vertex
    for (const auto& p : points_) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n_; ++i) s += p[i] * v[i];
      best = std::max(best, s);
    }
    return best;
  }

  Vec unit(std::size_t axis, std::int64_t sign) const {
    Vec v{0, 0, 0};
    v[axis] = sign;
    return v;
  }

  void offer_seed(std::int64_t cost, std::vector<Vec> seq) {
    if (!has_best_ || cost < best_) {
      has_best_ = true;
      best_ = cost;
      best_sequence_ = std::move(seq);
    }
  }

  // Feasible sequences giving the initial bound.
  void seed() {
    const std::int64_t need = k_ + 1;
    if (!options_.restrict_to_u) {
      for (std::size_t i = 0; i < n_; ++i) {
        std::int64_t pairs = (need + 1) / 2;
        std::vector<Vec> seq;
        for (std::int64_t r = 0; r < pairs; ++r) {
          seq.push_back(unit(i, 1));
          seq.push_back(unit(i, -1));
        }
        offer_seed(pairs * widths_[i], std::move(seq));
      }
    } else {
      if (k_ <= 1) {
        for (std::size_t i = 0; i < 2; ++i) offer_seed(widths_[i], {unit(i, 1), unit(i, -1)});
      }
      std::int64_t pairs = std::max<std::int64_t>(2, (need + 1) / 2);
      for (std::int64_t p = 1; p < pairs; ++p) {
        std::vector<Vec> seq;
        for (std::int64_t r = 0; r < pairs; ++r) {
          std::size_t axis = r < p ? 0 : 1;
          seq.push_back(unit(axis, 1));
          seq.push_back(unit(axis, -1));
        }
        offer_seed(p * widths_[0] + (pairs - p) * widths_[1], std::move(seq));
      }
    }
    // t copies of a small positive vector v, closed up by unit negatives.
    const std::int64_t side = 3;
    Vec v{0, 0, 0};
    while (true) {
      std::size_t i = 0;
      while (i < n_ && v[i] == side) v[i++] = 0;
      if (i == n_) break;
      ++v[i];
      std::size_t support = 0;
      std::int64_t mass = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        support += v[j] != 0;
        mass += v[j];
      }
      if (options_.restrict_to_u && support < 2) continue;
      std::int64_t copies = (need + mass) / (1 + mass);  // ceil(need / (1 + mass))
      std::vector<Vec> seq(copies, v);
      for (std::size_t j = 0; j < n_; ++j) {
        for (std::int64_t r = 0; r < copies * v[j]; ++r) seq.push_back(unit(j, -1));
      }
      offer_seed(copies * norm(v), std::move(seq));
    }
  }

  void enumerate_candidates() {
    // Positive mass along axis i is at most best / a_i.
    for (std::size_t i = 0; i < n_; ++i) mass_cap_[i] = best_ / widths_[i];
    Vec v{0, 0, 0};
    for (std::size_t i = 0; i < n_; ++i) v[i] = -mass_cap_[i];
    while (true) {
      bool zero = true;
      for (std::size_t i = 0; i < n_; ++i) zero = zero && v[i] == 0;
      if (!zero) {
        std::int64_t c = norm(v);
        if (c < best_) candidates_.push_back({v, c});
      }
      std::size_t i = 0;
      while (i < n_ && v[i] == mass_cap_[i]) {
        v[i] = -mass_cap_[i];
        ++i;
      }
      if (i == n_) break;
      ++v[i];
    }
    std::sort(candidates_.begin(), candidates_.end(), [](const auto& a, const auto& b) {
      if (a.cost != b.cost) return a.cost > b.cost;
      return a.v < b.v;
    });
    suffix_max_.assign(candidates_.size() + 1, Vec{});
    suffix_min_.assign(candidates_.size() + 1, Vec{});
    for (std::size_t i = 0; i < n_; ++i) {
      suffix_max_.back()[i] = std::numeric_limits<std::int64_t>::min();
      suffix_min_.back()[i] = std::numeric_limits<std::int64_t>::max();
    }
    for (std::size_t idx = candidates_.size(); idx-- > 0;) {
      for (std::size_t i = 0; i < n_; ++i) {
        suffix_max_[idx][i] = std::max(suffix_max_[idx + 1][i], candidates_[idx].v[i]);
        suffix_min_[idx][i] = std::min(suffix_min_[idx + 1][i], candidates_[idx].v[i]);
      }
    }
  }

  bool in_axis_span(const Vec& v, std::size_t axis) const {
    for (std::size_t i = 0; i < n_; ++i) {
      if (i != axis && v[i] != 0) return false;
    }
    return true;
  }

  bool admissible(std::int64_t count, bool leaves1, bool leaves2) const {
    if (!options_.restrict_to_u) return true;
    if (leaves1 && leaves2) return true;
    if (count != 2) return false;
    // Two vectors summing to zero inside one axis span: (e_j, -e_j) exactly.
    const Vec& a = stack_[0];
    return std::abs(a[0]) + std::abs(a[1]) == 1;
  }

  void dfs(std::size_t start, std::int64_t count, const Vec& sum, std::int64_t cost,
           const Vec& pos, const Vec& neg, bool leaves1, bool leaves2) {
    if (++nodes_ > options_.node_budget) {
      throw Error(ErrorCode::kResourceExhausted,
                  "lattice search exceeded its node budget (bound " +
                      to_string(make_rational(Integer(static_cast<long>(best_)), scale_)) + ")");
    }
    Vec minus{0, 0, 0};
    bool at_zero = true;
    for (std::size_t i = 0; i < n_; ++i) {
      minus[i] = -sum[i];
      at_zero = at_zero && sum[i] == 0;
    }
    if (cost + norm(minus) >= best_) return;
    if (at_zero && count >= k_ + 1 && admissible(count, leaves1, leaves2)) {
      best_ = cost;
      best_sequence_ = stack_;
      return;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (sum[i] < 0 && suffix_max_[start][i] <= 0) return;
      if (sum[i] > 0 && suffix_min_[start][i] >= 0) return;
    }
    for (std::size_t idx = start; idx < candidates_.size(); ++idx) {
      const auto& cand = candidates_[idx];
      if (cost + cand.cost >= best_) continue;
      Vec next_sum = sum;
      Vec next_pos = pos;
      Vec next_neg = neg;
      bool ok = true;
      for (std::size_t i = 0; i < n_ && ok; ++i) {
        next_sum[i] += cand.v[i];
        if (cand.v[i] > 0) next_pos[i] += cand.v[i];
        if (cand.v[i] < 0) next_neg[i] -= cand.v[i];
        ok = next_pos[i] <= mass_cap_[i] && next_neg[i] <= mass_cap_[i];
      }
      if (!ok) continue;
      stack_.push_back(cand.v);
      dfs(idx, count + 1, next_sum, cost + cand.cost, next_pos, next_neg,
          leaves1 || !in_axis_span(cand.v, 0), leaves2 || !in_axis_span(cand.v, 1));
      stack_.pop_back();
    }
  }

  struct Candidate {
    Vec v;
    std::int64_t cost;
  };

  std::size_t n_;
  std::int64_t k_;
  BruteForceOptions options_;
  Integer scale_;
  std::vector<Vec> points_;
  std::vector<std::int64_t> widths_;
  Vec mass_cap_{0, 0, 0};
  std::vector<Candidate> candidates_;
  std::vector<Vec> suffix_max_;
  std::vector<Vec> suffix_min_;
  bool has_best_ = false;
  std::int64_t best_ = 0;
  std::vector<Vec> best_sequence_;
  std::vector<Vec> stack_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

BruteForceResult l_k_bruteforce(const VertexSet& omega, int k, const BruteForceOptions& options) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  if (omega.dim != 2 && omega.dim != 3) {
    throw Error(ErrorCode::kInvalidArgument, "lattice search supports ambient dimension 2 or 3");
  }
  if (options.restrict_to_u && omega.dim != 2) {
    throw Error(ErrorCode::kInvalidArgument, "U(k) restriction is defined in the plane only");
  }
  return Search(omega, k, options).run();
}

BruteForceResult l_k_bruteforce(const RationalPolytope& omega, int k, const BruteForceOptions& options) {
  return l_k_bruteforce(VertexSet::from_polytope(omega), k, options);
}

}  // namespace toriccap
