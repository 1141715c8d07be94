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

#ifndef DIAMSIEVE_ORACLE_H_
#define DIAMSIEVE_ORACLE_H_

#include <cstdint>
#include <vector>

#include "diamsieve/graph.h"
#include "diamsieve/rational.h"
#include "diamsieve/sieve.h"

namespace diamsieve {

struct EnumerationBudget {
  // 2^max_edges labelled graphs are enumerated at most.
  int max_edges = 22;
  // Pair tables are |B|^2 histograms.
  std::size_t max_pairs = 64;
};

// hist[k] = number of labelled graphs with k edges having some property.
using EdgeHistogram = std::vector<std::uint64_t>;

// sum_k hist[k] p^k (1-p)^(m-k), m = hist.size() - 1.
Rational WeighEdgeHistogram(const EdgeHistogram& hist, const Rational& p);

// All 2^m graphs of the family, by edge count. Exercises the enumeration
// itself; weighs to exactly 1.
EdgeHistogram EdgeCountHistogram(const GraphFamily& family, EnumerationBudget budget = {},
                                 int workers = 0);

// Graphs whose BFS diameter is at most the family's target, by edge count.
// `workers` <= 0 means hardware concurrency; the result does not depend on it.
EdgeHistogram DiameterHistogram(const GraphFamily& family, EnumerationBudget budget = {},
                                int workers = 0);

// Exact P(diameter <= d). `d` must equal family.target_diameter().
// Throws ResourceError when the family has more than budget.max_edges
// candidate edges.
Rational ExactDiameterProb(const GraphFamily& family, const Rational& p, int d,
                           EnumerationBudget budget = {}, int workers = 0);

// Per-pair and pair-of-pairs incidence probabilities by brute force, with
// pairs indexed as in WitnessPairs(family).
struct IncidenceTable {
  std::vector<WitnessPair> pairs;
  std::vector<Rational> deg;                 // P(b unwitnessed)
  std::vector<std::vector<Rational>> joint;  // P(b1 and b2 unwitnessed)
};

IncidenceTable BruteIncidenceTable(const GraphFamily& family, const Rational& p,
                                   EnumerationBudget budget = {}, int workers = 0);
IncidenceStats BruteIncidenceStats(const GraphFamily& family, const Rational& p,
                                   EnumerationBudget budget = {}, int workers = 0);

}  // namespace diamsieve

#endif  // DIAMSIEVE_ORACLE_H_
