// Copyright 2026 The diamsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIAMSIEVE_SIEVE_H_
#define DIAMSIEVE_SIEVE_H_

#include <cstddef>
#include <vector>

#include "diamsieve/bounds.h"
#include "diamsieve/graph.h"
#include "diamsieve/rational.h"

namespace diamsieve {

// An element of B: a vertex pair whose distance must be witnessed.
// Unordered (u < v) for undirected families, ordered for directed ones.
// Bipartite families only admit same-part pairs.
struct WitnessPair {
  int u = 0;
  int v = 0;
  int part_u = 0;
  int part_v = 0;

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

WitnessPair MakeWitnessPair(const GraphFamily& family, int u, int v);
bool IsAdmissible(const GraphFamily& family, const WitnessPair& b);
std::vector<WitnessPair> WitnessPairs(const GraphFamily& family);
std::size_t WitnessPairCount(const GraphFamily& family);

// Normalised incidence sums of the (graphs, pairs) system:
//   sum_deg   = sum_b P(b unwitnessed)
//   sum_joint = sum_{b1,b2} P(b1 and b2 unwitnessed), ordered, diagonal included
struct IncidenceStats {
  Rational sum_deg;
  Rational sum_joint;
  std::size_t b_count = 0;

  friend bool operator==(const IncidenceStats&, const IncidenceStats&) = default;
};

// 1 - sum_deg. May be negative.
Rational SimpleSieveLower(const IncidenceStats& stats);
// sum_joint / sum_deg^2 - 1. May exceed 1. Throws DomainError when
// sum_deg == 0 (the sieve does not apply).
Rational TuranSieveUpper(const IncidenceStats& stats);

// Probability that b is unwitnessed: no edge u->v and no u->w->v. Closed
// form (1-p)^[uv is a candidate edge] * (1-p^2)^(#possible middle vertices).
Rational PairSurvivalProb(const GraphFamily& family, const Rational& p, const WitnessPair& b);

// Probability that b1 and b2 are both unwitnessed.
Rational JointSurvivalProb(const GraphFamily& family, const Rational& p, const WitnessPair& b1,
                           const WitnessPair& b2);

// Exact local enumeration behind JointSurvivalProb: the edges among the
// (at most four) vertices of b1 and b2 are enumerated jointly, and every
// outside vertex contributes an independent factor that depends only on its
// part. Also valid for b1 == b2.
Rational LocalEnumerationProb(const GraphFamily& family, const Rational& p,
                              const WitnessPair& b1, const WitnessPair& b2);

inline constexpr std::size_t kMaxWitnessPairs = 10000;

// Orbit-counted sums: pairs of pairs are grouped by part membership and
// overlap pattern, so each distinct joint probability is computed once.
// Throws ResourceError when |B| exceeds max_pairs.
IncidenceStats ComputeIncidenceStats(const GraphFamily& family, const Rational& p,
                                     std::size_t max_pairs = kMaxWitnessPairs);
// O(|B|^2) reference summation.
IncidenceStats ComputeIncidenceStatsNaive(const GraphFamily& family, const Rational& p);

struct SieveResult {
  IncidenceStats stats;
  Rational lower_raw;  // SimpleSieveLower
  Rational upper_raw;  // TuranSieveUpper
  Rational lower;      // clamped to [0,1]
  Rational upper;      // clamped to [0,1]
  BoundPair bounds;    // the same values in floating point
};

SieveResult SieveBounds(const GraphFamily& family, const Rational& p);

}  // namespace diamsieve

#endif  // DIAMSIEVE_SIEVE_H_
