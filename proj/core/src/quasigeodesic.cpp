#include "cubulate/quasigeodesic.hpp"

#include <algorithm>
#include <numeric>

#include "cubulate/error.hpp"

namespace cubulate {

ReparametrisationVerdict unparametrised_quasigeodesic_check(int points, const PathDistance& distance, const Rational& d) {
  if (points <= 0) throw Error(ErrorCode::precondition, "quasigeodesic check: empty path");
  if (!(d > 0)) throw Error(ErrorCode::precondition, "quasigeodesic check: D must be positive");
  const int n = points;
  ReparametrisationVerdict verdict;
  if (n == 1) {
    verdict.holds = true;
    verdict.times = {0};
    return verdict;
  }

  std::vector<Rational> dist(static_cast<std::size_t>(n) * n);
  std::int64_t r = 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      const Rational x = distance(s, t);
      dist[static_cast<std::size_t>(s) * n + t] = x;
      r = std::lcm(r, x.den());
    }
  }
  const std::int64_t p = d.num();
  const std::int64_t q = d.den();
  verdict.time_scale = p * q * q * r;

  // w[u][v] bounds x_v − x_u.
  std::vector<std::int64_t> w(static_cast<std::size_t>(n) * n, 0);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      const Rational& x = dist[static_cast<std::size_t>(s) * n + t];
      const std::int64_t a = x.num() * (r / x.den());
      const std::int64_t upper = p * p * (a * q + p * r);
      const std::int64_t lower = q * q * (a * q - p * r);
      w[static_cast<std::size_t>(s) * n + t] = upper;
      w[static_cast<std::size_t>(t) * n + s] = std::min<std::int64_t>(0, -lower);
    }
  }

  // Bellman–Ford from a virtual source joined to every point by weight 0.
  std::vector<std::int64_t> x(n, 0);
  std::vector<int> parent(n, -1);
  int last = -1;
  for (int round = 0; round < n; ++round) {
    last = -1;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const std::int64_t cand = x[u] + w[static_cast<std::size_t>(u) * n + v];
        if (cand < x[v]) {
          x[v] = cand;
          parent[v] = u;
          last = v;
        }
      }
    }
    if (last < 0) break;
  }
  if (last < 0) {
    const std::int64_t lo = *std::min_element(x.begin(), x.end());
    verdict.holds = true;
    for (std::int64_t v : x) verdict.times.push_back(v - lo);
    return verdict;
  }

  int v = last;
  for (int i = 0; i < n; ++i) v = parent[v];
  std::vector<int> cycle{v};
  for (int u = parent[v]; u != v; u = parent[u]) cycle.push_back(u);
  std::reverse(cycle.begin(), cycle.end());
  verdict.cycle = std::move(cycle);
  return verdict;
}

ReparametrisationVerdict unparametrised_quasigeodesic_check(const DistanceMatrix& dist, const std::vector<Vertex>& path,
                                                            const Rational& d) {
  return unparametrised_quasigeodesic_check(static_cast<int>(path.size()),
                                            [&](int s, int t) { return Rational(dist(path[s], path[t])); }, d);
}

bool is_unparametrised_quasigeodesic(const DistanceMatrix& dist, const std::vector<Vertex>& path, const Rational& d) {
  return unparametrised_quasigeodesic_check(dist, path, d).holds;
}

int least_quasigeodesic_constant(int points, const PathDistance& distance) {
  if (points <= 0) throw Error(ErrorCode::precondition, "quasigeodesic constant: empty path");
  // Cache, since the search calls the check repeatedly.
  std::vector<Rational> cache(static_cast<std::size_t>(points) * points);
  Rational diameter = 0;
  for (int s = 0; s < points; ++s) {
    for (int t = s + 1; t < points; ++t) {
      cache[static_cast<std::size_t>(s) * points + t] = distance(s, t);
      diameter = max(diameter, cache[static_cast<std::size_t>(s) * points + t]);
    }
  }
  const PathDistance cached = [&](int s, int t) { return cache[static_cast<std::size_t>(std::min(s, t)) * points + std::max(s, t)]; };
  int lo = 1;
  int hi = static_cast<int>(std::max<std::int64_t>(1, diameter.ceil()));
  if (!unparametrised_quasigeodesic_check(points, cached, hi).holds) {
    throw Error(ErrorCode::invariant, "quasigeodesic constant: diameter bound infeasible");
  }
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (unparametrised_quasigeodesic_check(points, cached, mid).holds) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

bool is_parametrised_quasigeodesic(const DistanceMatrix& dist, const std::vector<Vertex>& path, const Rational& d) {
  if (path.empty()) throw Error(ErrorCode::precondition, "quasigeodesic check: empty path");
  const int n = static_cast<int>(path.size());
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      const Rational gap = t - s;
      const Rational x = dist(path[s], path[t]);
      if (gap / d - d > x || x > d * gap + d) return false;
    }
  }
  return true;
}

}  // namespace cubulate
