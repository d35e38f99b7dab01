#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cubulate/graph.hpp"
#include "cubulate/rational.hpp"

namespace cubulate {

// Pairwise distances between the points of a path, as exact rationals.
using PathDistance = std::function<Rational(int, int)>;

// Outcome of searching for a monotone reparametrisation. Points get times
// τ_0 ≤ τ_1 ≤ … ≤ τ_T with, for every s < t and d = d(p_s, p_t),
//   (d − D)/D ≤ τ_t − τ_s ≤ D·(d + D),
// i.e. the reparametrised path is a (D,D)-quasiisometric embedding. This is
// a system of difference constraints, decided exactly.
struct ReparametrisationVerdict {
  bool holds = false;
  // When holds: times[t] / time_scale is a witness reparametrisation.
  std::vector<std::int64_t> times;
  std::int64_t time_scale = 1;
  // When not: a closed walk of point indices whose constraints sum to a
  // negative bound (a contradiction certificate).
  std::vector<int> cycle;
};

ReparametrisationVerdict unparametrised_quasigeodesic_check(int points, const PathDistance& distance, const Rational& d);

// Same, on a vertex path in a unit graph.
ReparametrisationVerdict unparametrised_quasigeodesic_check(const DistanceMatrix& dist, const std::vector<Vertex>& path,
                                                            const Rational& d);
bool is_unparametrised_quasigeodesic(const DistanceMatrix& dist, const std::vector<Vertex>& path, const Rational& d);

// Least integer μ ≥ 1 for which the path is an unparametrised
// μ-quasigeodesic. Always ≤ max(1, ⌈diameter⌉).
int least_quasigeodesic_constant(int points, const PathDistance& distance);

// (D,D)-quasigeodesic with the identity parametrisation.
bool is_parametrised_quasigeodesic(const DistanceMatrix& dist, const std::vector<Vertex>& path, const Rational& d);

}  // namespace cubulate
