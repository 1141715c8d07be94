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

#include "diamsieve/montecarlo.h"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "diamsieve/errors.h"

namespace diamsieve {
namespace {

constexpr std::uint64_t kChunk = 16;
constexpr std::uint64_t kVerifyStride = 100;

struct WorkerTally {
  std::uint64_t successes = 0;
  std::uint64_t verified = 0;
  std::uint64_t mismatches = 0;
};

}  // namespace

WilsonBounds WilsonInterval(std::uint64_t successes, std::uint64_t trials, double confidence) {
  if (trials == 0) throw DomainError("Wilson interval needs at least one trial");
  if (successes > trials) {
    throw DomainError("successes " + std::to_string(successes) + " exceed trials " +
                      std::to_string(trials));
  }
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw DomainError("confidence must lie in (0,1), got " + std::to_string(confidence));
  }
  const double z =
      boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + confidence / 2);
  const auto t = static_cast<double>(trials);
  const double q = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double centre = (q + z2 / (2 * t)) / denom;
  const double half = z / denom * std::sqrt(q * (1 - q) / t + z2 / (4 * t * t));
  WilsonBounds out{std::clamp(centre - half, 0.0, 1.0), std::clamp(centre + half, 0.0, 1.0)};
  out.lo = std::min(out.lo, q);
  out.hi = std::max(out.hi, q);
  return out;
}

double TrialEstimate::StandardError() const {
  return std::sqrt(p_hat * (1 - p_hat) / static_cast<double>(trials));
}

std::size_t AdjacencyBytes(const GraphFamily& family) {
  const auto n = static_cast<std::size_t>(family.vertex_count());
  const std::size_t words = (n + 63) / 64;
  return n * words * sizeof(std::uint64_t) * (family.directed() ? 2 : 1);
}

TrialEstimate Estimate(const GraphFamily& family, double p, std::uint64_t trials,
                       std::uint64_t seed, double confidence, const EstimateOptions& options) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("edge probability must lie in (0,1), got " + std::to_string(p));
  }
  if (trials == 0) throw DomainError("trials must be at least 1");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw DomainError("confidence must lie in (0,1), got " + std::to_string(confidence));
  }
  int workers = options.workers > 0
                    ? options.workers
                    : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), chunks));
  const std::size_t per_graph = AdjacencyBytes(family);
  if (per_graph * static_cast<std::size_t>(workers) > options.memory_cap_bytes) {
    throw ResourceError(std::to_string(workers) + " adjacency matrices of " +
                        std::to_string(per_graph) + " bytes exceed the memory cap of " +
                        std::to_string(options.memory_cap_bytes));
  }

  const auto start = std::chrono::steady_clock::now();
  const int target = family.target_diameter();
  std::vector<WorkerTally> tallies(static_cast<std::size_t>(workers));
  auto run = [&](int worker) {
    WorkerTally& tally = tallies[static_cast<std::size_t>(worker)];
    for (std::uint64_t chunk = static_cast<std::uint64_t>(worker); chunk < chunks;
         chunk += static_cast<std::uint64_t>(workers)) {
      const std::uint64_t end = std::min(trials, (chunk + 1) * kChunk);
      for (std::uint64_t trial = chunk * kChunk; trial < end; ++trial) {
        const AdjacencyMatrix g = SampleGraph(family, p, seed, trial);
        const bool ok = MeetsTargetDiameter(g, family);
        if (ok) ++tally.successes;
        if (options.verify && trial % kVerifyStride == 0) {
          ++tally.verified;
          if (GraphDiameter(g).AtMost(target) != ok) ++tally.mismatches;
        }
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }

  TrialEstimate est;
  for (const auto& t : tallies) {
    est.successes += t.successes;
    est.verified += t.verified;
    est.verify_mismatches += t.mismatches;
  }
  est.trials = trials;
  est.p_hat = static_cast<double>(est.successes) / static_cast<double>(trials);
  const WilsonBounds w = WilsonInterval(est.successes, trials, confidence);
  est.wilson_lo = w.lo;
  est.wilson_hi = w.hi;
  est.confidence = confidence;
  est.seed = seed;
  est.family = family.kind();
  est.shape = family.shape();
  est.p = p;
  est.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return est;
}

}  // namespace diamsieve
