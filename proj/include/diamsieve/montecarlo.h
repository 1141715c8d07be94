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

#ifndef DIAMSIEVE_MONTECARLO_H_
#define DIAMSIEVE_MONTECARLO_H_

#include <cstddef>
#include <cstdint>
#include <utility>

#include "diamsieve/graph.h"

namespace diamsieve {

struct WilsonBounds {
  double lo = 0.0;
  double hi = 1.0;
};

// Wilson score interval at two-sided level `confidence`:
//   z = Phi^{-1}((1 + confidence) / 2),  q = successes / trials,
//   centre = (q + z^2 / 2t) / (1 + z^2 / t)
//   half   = z / (1 + z^2 / t) * sqrt(q (1 - q) / t + z^2 / 4t^2)
// Throws DomainError unless successes <= trials, trials >= 1 and
// 0 < confidence < 1.
WilsonBounds WilsonInterval(std::uint64_t successes, std::uint64_t trials, double confidence);

struct EstimateOptions {
  // <= 0: hardware concurrency. Results never depend on this.
  int workers = 0;
  // Re-check every trial with index % 100 == 0 against the BFS diameter.
  bool verify = false;
  // Upper limit on simultaneously live adjacency matrices, in bytes.
  std::size_t memory_cap_bytes = std::size_t{1} << 30;
};

struct TrialEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double p_hat = 0.0;
  double wilson_lo = 0.0;
  double wilson_hi = 1.0;
  double confidence = 0.95;
  std::uint64_t seed = 0;
  FamilyKind family = FamilyKind::kSimple;
  PartitionShape shape = PartitionShape::Make({1});
  double p = 0.0;
  double elapsed_seconds = 0.0;
  std::uint64_t verified = 0;
  std::uint64_t verify_mismatches = 0;

  // Binomial standard error sqrt(p_hat (1 - p_hat) / trials).
  double StandardError() const;
};

// Samples trials 0..trials-1 of the family at edge probability p and counts
// graphs meeting the family's target diameter.
// Throws DomainError for p outside (0,1), trials == 0 or a bad confidence,
// ResourceError when the per-worker matrices exceed the memory cap.
TrialEstimate Estimate(const GraphFamily& family, double p, std::uint64_t trials,
                       std::uint64_t seed, double confidence = 0.95,
                       const EstimateOptions& options = {});

// Bytes held by one sampled adjacency matrix of the family.
std::size_t AdjacencyBytes(const GraphFamily& family);

}  // namespace diamsieve

#endif  // DIAMSIEVE_MONTECARLO_H_
