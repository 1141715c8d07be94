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

#include "diamsieve/errors.h"
#include "diamsieve/oracle.h"
#include "diamsieve/sieve.h"

namespace diamsieve {
namespace {

Rational R(long num, long den) { return Rational(num, den); }

std::vector<GraphFamily> SmallFamilies() {
  return {GraphFamily::Simple(3),
          GraphFamily::Simple(4),
          GraphFamily::Simple(6),
          GraphFamily::Directed(3),
          GraphFamily::Directed(4),
          GraphFamily::KPartite(MakeShape({1, 2, 2})),
          GraphFamily::KPartite(MakeShape({2, 2, 2})),
          GraphFamily::DirectedKPartite(MakeShape({1, 2, 2})),
          GraphFamily::Bipartite(MakeShape({2, 2})),
          GraphFamily::Bipartite(MakeShape({2, 4})),
          GraphFamily::Bipartite(MakeShape({3, 3})),
          GraphFamily::DirectedBipartite(MakeShape({2, 2})),
          GraphFamily::DirectedBipartite(MakeShape({2, 3}))};
}

TEST(SimpleSieve, Examples) {
  EXPECT_EQ(SimpleSieveLower({R(0, 1), R(0, 1), 0}), R(1, 1));
  const auto s3 = ComputeIncidenceStats(GraphFamily::Simple(3), R(1, 2));
  EXPECT_EQ(s3.sum_deg, R(9, 8));
  EXPECT_EQ(SimpleSieveLower(s3), R(-1, 8));
  const auto s4 = ComputeIncidenceStats(GraphFamily::Simple(4), R(1, 2));
  EXPECT_EQ(s4.sum_deg, R(27, 16));
  EXPECT_EQ(SimpleSieveLower(s4), R(-11, 16));
}

TEST(TuranSieve, SinglePairAlgebra) {
  const Rational q = R(3, 7);
  EXPECT_EQ(TuranSieveUpper({q, q, 1}), 1 / q - 1);
  EXPECT_THROW(TuranSieveUpper({R(0, 1), R(0, 1), 0}), DomainError);
}

TEST(TuranSieve, MatchesBruteForceStats) {
  const auto fam = GraphFamily::Simple(4);
  EXPECT_EQ(TuranSieveUpper(ComputeIncidenceStats(fam, R(1, 2))),
            TuranSieveUpper(BruteIncidenceStats(fam, R(1, 2))));
}

TEST(PairSurvival, Examples) {
  const auto simple4 = GraphFamily::Simple(4);
  for (const auto& b : WitnessPairs(simple4)) EXPECT_EQ(PairSurvivalProb(simple4, R(1, 2), b), R(9, 32));

  const auto kp = GraphFamily::KPartite(MakeShape({2, 2, 2}));
  // Vertices 0 and 1 share the first part.
  EXPECT_EQ(PairSurvivalProb(kp, R(1, 2), MakeWitnessPair(kp, 0, 1)), R(81, 256));

  const auto bp = GraphFamily::Bipartite(MakeShape({2, 3}));
  EXPECT_EQ(PairSurvivalProb(bp, R(1, 3), MakeWitnessPair(bp, 0, 1)), R(512, 729));
}

TEST(PairSurvival, RejectsInadmissiblePairs) {
  const auto bp = GraphFamily::Bipartite(MakeShape({2, 3}));
  const auto cross = MakeWitnessPair(bp, 0, 2);
  EXPECT_FALSE(IsAdmissible(bp, cross));
  EXPECT_THROW(PairSurvivalProb(bp, R(1, 2), cross), InvalidArgument);
  EXPECT_THROW(JointSurvivalProb(bp, R(1, 2), cross, MakeWitnessPair(bp, 0, 1)), InvalidArgument);
  const auto simple = GraphFamily::Simple(4);
  EXPECT_THROW(PairSurvivalProb(simple, R(1, 2), MakeWitnessPair(simple, 1, 1)), InvalidArgument);
  EXPECT_THROW(MakeWitnessPair(simple, 0, 9), InvalidArgument);
}

TEST(PairSurvival, ClosedFormAgreesWithLocalEnumeration) {
  for (const auto& fam : SmallFamilies()) {
    for (const Rational& p : {R(1, 3), R(1, 2), R(3, 4)}) {
      for (const auto& b : WitnessPairs(fam)) {
        EXPECT_EQ(PairSurvivalProb(fam, p, b), LocalEnumerationProb(fam, p, b, b))
            << fam.name() << " " << b.u << "," << b.v;
      }
    }
  }
}

TEST(JointSurvival, DisjointPairsOnFourVertices) {
  const auto fam = GraphFamily::Simple(4);
  const Rational p = R(1, 2);
  const Rational q = R(9, 32);
  const Rational one_minus = 1 - p;
  const Rational expected = q * q *
                            (Pow(one_minus, 4) + 4 * p * Pow(one_minus, 3) + 2 * p * p * Pow(one_minus, 2)) /
                            Pow(1 - p * p, 4);
  EXPECT_EQ(JointSurvivalProb(fam, p, MakeWitnessPair(fam, 0, 1), MakeWitnessPair(fam, 2, 3)), expected);
  const IncidenceTable table = BruteIncidenceTable(fam, p);
  for (std::size_t i = 0; i < table.pairs.size(); ++i) {
    for (std::size_t j = 0; j < table.pairs.size(); ++j) {
      EXPECT_EQ(JointSurvivalProb(fam, p, table.pairs[i], table.pairs[j]), table.joint[i][j]);
    }
  }
}

TEST(JointSurvival, SharedVertexFactorPerOutsideVertex) {
  const Rational p = R(1, 2);
  const Rational factor = 1 - 2 * p * p + p * p * p;
  EXPECT_EQ(factor, R(5, 8));
  for (int n = 4; n <= 7; ++n) {
    const auto small = GraphFamily::Simple(n);
    const auto big = GraphFamily::Simple(n + 1);
    const auto q_small = JointSurvivalProb(small, p, MakeWitnessPair(small, 0, 1), MakeWitnessPair(small, 0, 2));
    const auto q_big = JointSurvivalProb(big, p, MakeWitnessPair(big, 0, 1), MakeWitnessPair(big, 0, 2));
    EXPECT_EQ(q_big, q_small * factor) << n;
  }
}

TEST(JointSurvival, DiagonalAndSymmetry) {
  for (const auto& fam : SmallFamilies()) {
    const Rational p = R(2, 5);
    const auto pairs = WitnessPairs(fam);
    for (const auto& b1 : pairs) {
      EXPECT_EQ(JointSurvivalProb(fam, p, b1, b1), PairSurvivalProb(fam, p, b1));
      for (const auto& b2 : pairs) {
        EXPECT_EQ(JointSurvivalProb(fam, p, b1, b2), JointSurvivalProb(fam, p, b2, b1));
      }
    }
  }
}

TEST(JointSurvival, DisjointPairsFactorizationBound) {
  for (int n = 4; n <= 8; ++n) {
    const auto fam = GraphFamily::Simple(n);
    for (const Rational& p : {R(1, 5), R(1, 2), R(4, 5)}) {
      const Rational slack = 1 + 4 * p * p * p / ((1 - p) * (1 - p));
      const auto b1 = MakeWitnessPair(fam, 0, 1);
      const auto b2 = MakeWitnessPair(fam, 2, 3);
      EXPECT_LE(JointSurvivalProb(fam, p, b1, b2),
                PairSurvivalProb(fam, p, b1) * PairSurvivalProb(fam, p, b2) * slack)
          << n;
    }
  }
}

TEST(IncidenceStats, OrbitCountingMatchesNaiveSum) {
  for (const auto& fam : SmallFamilies()) {
    for (const Rational& p : {R(1, 3), R(1, 2)}) {
      EXPECT_EQ(ComputeIncidenceStats(fam, p), ComputeIncidenceStatsNaive(fam, p))
          << fam.name() << " " << fam.shape().ToString();
    }
  }
}

TEST(IncidenceStats, MatchesBruteForceWhereFeasible) {
  for (const auto& fam : SmallFamilies()) {
    if (fam.CandidateEdgeCount() > 16) continue;
    for (const Rational& p : {R(1, 3), R(1, 2)}) {
      EXPECT_EQ(ComputeIncidenceStats(fam, p), BruteIncidenceStats(fam, p))
          << fam.name() << " " << fam.shape().ToString();
    }
  }
}

TEST(IncidenceStats, BipartitePairCount) {
  const auto stats = ComputeIncidenceStats(GraphFamily::Bipartite(MakeShape({2, 2})), R(1, 2));
  EXPECT_EQ(stats.b_count, 2U);
}

TEST(IncidenceStats, Invariants) {
  for (const auto& fam : SmallFamilies()) {
    const auto s = ComputeIncidenceStats(fam, R(3, 5));
    const Rational b = static_cast<long>(s.b_count);
    EXPECT_GT(s.sum_deg, 0);
    EXPECT_LE(s.sum_deg, b);
    EXPECT_GE(s.sum_joint, s.sum_deg);
    EXPECT_LE(s.sum_joint, b * b);
  }
}

TEST(IncidenceStats, ReproducibleAndGuarded) {
  const auto fam = GraphFamily::KPartite(MakeShape({3, 4, 6}));
  EXPECT_EQ(ComputeIncidenceStats(fam, R(2, 7)), ComputeIncidenceStats(fam, R(2, 7)));
  EXPECT_THROW(ComputeIncidenceStats(GraphFamily::Simple(200), R(1, 2), 100), ResourceError);
}

TEST(IncidenceStats, ScalesPastBruteForce) {
  const auto s = ComputeIncidenceStats(GraphFamily::Simple(60), R(1, 2));
  EXPECT_EQ(s.b_count, 1770U);
  EXPECT_EQ(s.sum_deg, Rational(1770) * Pow(R(1, 2), 1) * Pow(R(3, 4), 58));
}

TEST(SieveBounds, ClampsExactValues) {
  const SieveResult r = SieveBounds(GraphFamily::Simple(3), R(1, 2));
  EXPECT_EQ(r.lower_raw, R(-1, 8));
  EXPECT_EQ(r.lower, 0);
  EXPECT_EQ(r.upper_raw, R(29, 27));
  EXPECT_EQ(r.upper, 1);
  EXPECT_EQ(r.bounds.source, BoundSource::kExactSieve);
  EXPECT_DOUBLE_EQ(r.bounds.lower_raw, -0.125);
}

TEST(SieveBounds, DominatesClosedFormAtFiveVertices) {
  const SieveResult r = SieveBounds(GraphFamily::Simple(5), R(1, 4));
  const BoundPair g = GnpBounds(5, 0.25);
  EXPECT_LE(g.lower, ToDouble(r.lower) + 1e-12);
  EXPECT_LE(ToDouble(r.upper), g.upper + 1e-12);
}

}  // namespace
}  // namespace diamsieve
