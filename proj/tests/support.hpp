#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "toriccap/capacities.hpp"

namespace toriccap::testing {

inline Rational random_rational(std::mt19937_64& rng, long max_num_per_den, int max_den) {
  std::uniform_int_distribution<int> den(1, max_den);
  int q = den(rng);
  std::uniform_int_distribution<long> num(1, max_num_per_den * q);
  return make_rational(Integer(num(rng)), Integer(q));
}

// Hull of the points, their axis projections and the origin. Such a polygon is
// closed under moving toward the axes, which is the strongly convex case.
inline RationalPolytope down_closure(const std::vector<Point2>& pts) {
  std::vector<Point2> all{{0, 0}};
  for (const auto& p : pts) {
    all.push_back(p);
    all.push_back({p.x, 0});
    all.push_back({0, p.y});
  }
  return RationalPolytope::from_vertices(all);
}

// Random strongly convex domain with vertex denominators <= max_den and
// coordinates in (0, max_coord].
inline RationalPolytope random_domain(std::mt19937_64& rng, int max_den = 6, long max_coord = 2) {
  std::uniform_int_distribution<int> count(2, 5);
  std::vector<Point2> pts;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    pts.push_back({random_rational(rng, max_coord, max_den), random_rational(rng, max_coord, max_den)});
  }
  return down_closure(pts);
}

// Strongly convex domain with a(omega) = b(omega) = c.
inline RationalPolytope random_balanced_domain(std::mt19937_64& rng, int max_den = 6) {
  Rational c = random_rational(rng, 2, max_den);
  std::vector<Point2> pts{{c, 0}, {0, c}};
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<long> frac(0, 12);
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    pts.push_back({Rational(c * make_rational(frac(rng), 12)), Rational(c * make_rational(frac(rng), 12))});
  }
  return down_closure(pts);
}

// A pair inner subset of outer, both strongly convex.
inline std::pair<RationalPolytope, RationalPolytope> random_nested_pair(std::mt19937_64& rng) {
  RationalPolytope outer = random_domain(rng);
  const auto& v = outer.vertices();
  std::uniform_int_distribution<long> weight(0, 6);
  std::vector<Point2> inner_pts;
  for (int i = 0; i < 3; ++i) {
    std::vector<long> w(v.size());
    long total = 0;
    for (auto& x : w) total += (x = weight(rng));
    if (total == 0) continue;
    Point2 p{0, 0};
    for (std::size_t j = 0; j < v.size(); ++j) {
      p.x += v[j].x * make_rational(w[j], total);
      p.y += v[j].y * make_rational(w[j], total);
    }
    inner_pts.push_back(p);
  }
  // Keep both axes reached so the inner domain is two dimensional.
  inner_pts.push_back({Rational(widths(outer).a / 2), 0});
  inner_pts.push_back({0, Rational(widths(outer).b / 3)});
  return {down_closure(inner_pts), outer};
}

// Straight from the definition: max of <p, v> over vertices, 0 included.
inline Rational naive_norm(const RationalPolytope& omega, long x, long y) {
  Rational best = 0;
  for (const auto& p : omega.vertices()) {
    Rational s = p.x * x + p.y * y;
    if (s > best) best = s;
  }
  return best;
}

// min over i + j = k of ||(i, j)||.
inline Rational naive_gh(const RationalPolytope& omega, int k) {
  std::optional<Rational> best;
  for (int i = 0; i <= k; ++i) {
    Rational v = naive_norm(omega, i, k - i);
    if (!best || v < *best) best = v;
  }
  return *best;
}

// Unpruned search for l_k over vectors in the box [-r, r]^2: every multiset of
// at least k + 1 nonzero vectors summing to zero, explored up to `max_len`
// vectors. Exact when the optimum uses vectors inside the box and no more than
// max_len of them; meant for tiny domains and k <= 3.
class NaiveLatticeOracle {
 public:
  NaiveLatticeOracle(const RationalPolytope& omega, int radius, int max_len)
      : max_len_(max_len) {
    for (int x = -radius; x <= radius; ++x) {
      for (int y = -radius; y <= radius; ++y) {
        if (x == 0 && y == 0) continue;
        vecs_.push_back({x, y, naive_norm(omega, x, y)});
      }
    }
  }

  Rational lk(int k) {
    best_.reset();
    k_ = k;
    walk(0, 0, 0, 0, Rational(0));
    return *best_;
  }

 private:
  struct V {
    int x;
    int y;
    Rational cost;
  };

  void walk(std::size_t start, int len, int sx, int sy, const Rational& cost) {
    if (best_ && cost >= *best_) return;
    if (len >= k_ + 1 && sx == 0 && sy == 0) {
      best_ = cost;
      return;
    }
    if (len == max_len_) return;
    for (std::size_t i = start; i < vecs_.size(); ++i) {
      walk(i, len + 1, sx + vecs_[i].x, sy + vecs_[i].y, cost + vecs_[i].cost);
    }
  }

  int max_len_;
  int k_ = 0;
  std::vector<V> vecs_;
  std::optional<Rational> best_;
};

// Minimal smooth refinement of the cone (u, w) computed as the lattice points
// on the compact boundary of conv((cone ∩ Z^2) \ 0), found by gift wrapping
// over the parallelogram spanned by u and w.
inline std::vector<LatticeVector> hull_resolution(const LatticeVector& u, const LatticeVector& w) {
  auto d = [](long ax, long ay, long bx, long by) { return ax * by - ay * bx; };
  const long ux = u.x().get_si(), uy = u.y().get_si(), wx = w.x().get_si(), wy = w.y().get_si();
  const long box = std::abs(ux) + std::abs(uy) + std::abs(wx) + std::abs(wy);
  std::vector<std::pair<long, long>> pts;
  for (long x = -box; x <= box; ++x) {
    for (long y = -box; y <= box; ++y) {
      if (x == 0 && y == 0) continue;
      // Inside the closed parallelogram {s u + t w : 0 <= s, t <= 1}.
      long det_uw = d(ux, uy, wx, wy);
      long s = d(x, y, wx, wy);
      long t = d(ux, uy, x, y);
      if (s >= 0 && t >= 0 && s <= det_uw && t <= det_uw) pts.emplace_back(x, y);
    }
  }
  std::vector<LatticeVector> chain{u};
  std::pair<long, long> cur{ux, uy};
  while (cur != std::pair<long, long>{wx, wy}) {
    std::optional<std::pair<long, long>> next;
    for (const auto& p : pts) {
      if (p == cur) continue;
      // Points must advance counterclockwise.
      if (d(cur.first, cur.second, p.first, p.second) <= 0) continue;
      if (!next) {
        next = p;
        continue;
      }
      long turn = d(next->first - cur.first, next->second - cur.second, p.first - cur.first,
                    p.second - cur.second);
      long dist_p = std::abs(p.first - cur.first) + std::abs(p.second - cur.second);
      long dist_n = std::abs(next->first - cur.first) + std::abs(next->second - cur.second);
      // Keep everything on the far side from the origin; the nearest on ties.
      if (turn > 0 || (turn == 0 && dist_p < dist_n)) next = p;
    }
    cur = *next;
    chain.emplace_back(cur.first, cur.second);
  }
  return chain;
}

}  // namespace toriccap::testing
