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

#include <gtest/gtest.h>

#include <cmath>

#include "diamsieve/bounds.h"
#include "diamsieve/errors.h"
#include "diamsieve/montecarlo.h"

namespace diamsieve {
namespace {

EstimateOptions Workers(int w) {
  EstimateOptions o;
  o.workers = w;
  return o;
}

TEST(WilsonInterval, Examples) {
  const WilsonBounds mid = WilsonInterval(50, 100, 0.95);
  EXPECT_NEAR(mid.lo, 0.4038, 1e-3);
  EXPECT_NEAR(mid.hi, 0.5962, 1e-3);

  const WilsonBounds none = WilsonInterval(0, 40, 0.95);
  EXPECT_EQ(none.lo, 0.0);
  EXPECT_GT(none.hi, 0.0);

  const WilsonBounds all = WilsonInterval(40, 40, 0.95);
  EXPECT_EQ(all.hi, 1.0);
  EXPECT_LT(all.lo, 1.0);
}

TEST(WilsonInterval, WidensWithConfidence) {
  const WilsonBounds a = WilsonInterval(30, 100, 0.8);
  const WilsonBounds b = WilsonInterval(30, 100, 0.99);
  EXPECT_LT(b.lo, a.lo);
  EXPECT_GT(b.hi, a.hi);
}

TEST(WilsonInterval, DomainErrors) {
  EXPECT_THROW(WilsonInterval(0, 0, 0.95), DomainError);
  EXPECT_THROW(WilsonInterval(5, 4, 0.95), DomainError);
  EXPECT_THROW(WilsonInterval(1, 4, 1.0), DomainError);
  EXPECT_THROW(WilsonInterval(1, 4, 0.0), DomainError);
}

TEST(Estimate, TriangleFamilyConvergesToOneHalf) {
  const TrialEstimate e = Estimate(GraphFamily::Simple(3), 0.5, 1000000, 7);
  EXPECT_NEAR(e.p_hat, 0.5, 0.002);
  EXPECT_LE(e.wilson_lo, e.p_hat);
  EXPECT_GE(e.wilson_hi, e.p_hat);
  EXPECT_EQ(e.seed, 7U);
  EXPECT_EQ(e.family, FamilyKind::kSimple);
}

TEST(Estimate, SingleTrialIsWellFormed) {
  const TrialEstimate e = Estimate(GraphFamily::Simple(10), 0.5, 1, 3);
  EXPECT_TRUE(e.p_hat == 0.0 || e.p_hat == 1.0);
  EXPECT_GE(e.wilson_lo, 0.0);
  EXPECT_LE(e.wilson_hi, 1.0);
  EXPECT_LE(e.wilson_lo, e.p_hat);
  EXPECT_GE(e.wilson_hi, e.p_hat);
}

TEST(Estimate, IndependentOfWorkerCount) {
  for (const auto& fam : {GraphFamily::Simple(25), GraphFamily::DirectedBipartite(MakeShape({4, 9})),
                          GraphFamily::KPartite(MakeShape({3, 5, 8}))}) {
    const auto base = Estimate(fam, 0.45, 777, 11, 0.95, Workers(1)).successes;
    for (int w : {2, 4, 8}) {
      EXPECT_EQ(Estimate(fam, 0.45, 777, 11, 0.95, Workers(w)).successes, base) << fam.name();
    }
  }
}

TEST(Estimate, WilsonCoverageOnTriangleFamily) {
  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const TrialEstimate e = Estimate(GraphFamily::Simple(3), 0.5, 200, seed, 0.95, Workers(1));
    if (e.wilson_lo <= 0.5 && 0.5 <= e.wilson_hi) ++covered;
  }
  EXPECT_GE(covered, 180);
}

TEST(Estimate, AgreesWithBoundsWithinThreeSigma) {
  struct Case {
    GraphFamily family;
    double p;
    BoundPair bounds;
  };
  const auto bip = MakeShape({8, 5000});
  const std::vector<Case> cases = {
      {GraphFamily::Simple(20), 0.5, GnpBounds(20, 0.5)},
      {GraphFamily::Simple(40), 0.5, GnpBounds(40, 0.5)},
      {GraphFamily::Bipartite(MakeShape({30, 40})), 0.5, BipartiteBounds(MakeShape({30, 40}), 0.5)},
      {GraphFamily::Bipartite(bip), 0.5, BipartiteBounds(bip, 0.5)},
      {GraphFamily::Directed(40), 0.5, DirectedAdjust(GnpBounds(40, 0.5), FamilyKind::kDirected)},
  };
  for (const Case& c : cases) {
    const TrialEstimate e = Estimate(c.family, c.p, 400, 99);
    const double sigma = e.StandardError();
    EXPECT_GE(e.p_hat, c.bounds.lower - 3 * sigma) << c.family.name();
    EXPECT_LE(e.p_hat, c.bounds.upper + 3 * sigma) << c.family.name();
  }
}

TEST(Estimate, VerifyModeChecksOnePercent) {
  EstimateOptions o;
  o.verify = true;
  const TrialEstimate e = Estimate(GraphFamily::Directed(12), 0.5, 1001, 5, 0.95, o);
  EXPECT_EQ(e.verified, 11U);
  EXPECT_EQ(e.verify_mismatches, 0U);
}

TEST(Estimate, Errors) {
  const auto fam = GraphFamily::Simple(10);
  EXPECT_THROW(Estimate(fam, 0.0, 10, 1), DomainError);
  EXPECT_THROW(Estimate(fam, 0.5, 0, 1), DomainError);
  EXPECT_THROW(Estimate(fam, 0.5, 10, 1, 1.5), DomainError);
  EstimateOptions cap;
  cap.memory_cap_bytes = 100;
  EXPECT_THROW(Estimate(GraphFamily::Simple(100), 0.5, 10, 1, 0.95, cap), ResourceError);
}

}  // namespace
}  // namespace diamsieve
