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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diamsieve/bounds.h"
#include "diamsieve/cli.h"
#include "diamsieve/graph.h"
#include "diamsieve/montecarlo.h"
#include "diamsieve/oracle.h"
#include "diamsieve/rational.h"
#include "diamsieve/sieve.h"

namespace diamsieve {
namespace {

constexpr double kSlack = 1e-12;

struct Outcome {
  bool pass = true;
  std::string detail;
  int checks = 0;

  // Records a check; keeps the first failure's message.
  void Check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<Rational> GridProbabilities() {
  return {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4)};
}

std::string Describe(const GraphFamily& family, const Rational& p) {
  return std::string(family.name()) + "(" + family.shape().ToString() + ") p=" + ToString(p);
}

// clamp(sieve lower) <= exact <= clamp(sieve upper), exactly.
void CheckSandwich(Outcome& out, const GraphFamily& family, const EdgeHistogram& hist,
                   const Rational& p) {
  const Rational exact = WeighEdgeHistogram(hist, p);
  const SieveResult sieve = SieveBounds(family, p);
  out.Check(sieve.lower <= exact && exact <= sieve.upper,
            Describe(family, p) + ": exact " + ToString(exact) + " outside [" +
                ToString(sieve.lower) + ", " + ToString(sieve.upper) + "]");
}

// Closed-form bounds are no tighter than the sieve they weaken.
void CheckDominance(Outcome& out, const GraphFamily& family, const BoundPair& closed,
                    const Rational& p) {
  const SieveResult sieve = SieveBounds(family, p);
  const double lo = ToDouble(sieve.lower);
  const double hi = ToDouble(sieve.upper);
  out.Check(closed.lower <= lo + kSlack && hi <= closed.upper + kSlack,
            Describe(family, p) + ": closed [" + std::to_string(closed.lower) + ", " +
                std::to_string(closed.upper) + "] vs sieve [" + std::to_string(lo) + ", " +
                std::to_string(hi) + "]");
}

std::vector<GraphFamily> PartiteFamilies() {
  std::vector<GraphFamily> out;
  for (const auto& s : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
    out.push_back(GraphFamily::Bipartite(MakeShape(s)));
  }
  for (const auto& s : std::vector<std::vector<int>>{{1, 2, 2}, {2, 2, 2}}) {
    out.push_back(GraphFamily::KPartite(MakeShape(s)));
  }
  return out;
}

Outcome SimpleSandwich() {
  Outcome out;
  for (int n = 3; n <= 7; ++n) {
    const GraphFamily family = GraphFamily::Simple(n);
    const EdgeHistogram hist = DiameterHistogram(family);
    for (const Rational& p : GridProbabilities()) CheckSandwich(out, family, hist, p);
  }
  return out;
}

Outcome SimpleDominance() {
  Outcome out;
  for (int n = 3; n <= 7; ++n) {
    for (const Rational& p : GridProbabilities()) {
      CheckDominance(out, GraphFamily::Simple(n), GnpBounds(n, ToDouble(p)), p);
    }
  }
  return out;
}

Outcome PartiteSandwich() {
  Outcome out;
  for (const GraphFamily& family : PartiteFamilies()) {
    const EdgeHistogram hist = DiameterHistogram(family);
    for (const Rational& p : {Rational(1, 3), Rational(1, 2)}) {
      CheckSandwich(out, family, hist, p);
      const double pd = ToDouble(p);
      const BoundPair closed = family.bipartite() ? BipartiteBounds(family.shape(), pd)
                                                  : KPartiteBounds(family.shape(), pd);
      CheckDominance(out, family, closed, p);
    }
  }
  return out;
}

Outcome IncidenceEquality() {
  Outcome out;
  std::vector<GraphFamily> families;
  for (int n = 3; n <= 7; ++n) families.push_back(GraphFamily::Simple(n));
  for (const GraphFamily& f : PartiteFamilies()) families.push_back(f);
  for (const GraphFamily& family : families) {
    if (family.CandidateEdgeCount() > 16) continue;
    const bool simple = family.kind() == FamilyKind::kSimple;
    const std::vector<Rational> ps =
        simple ? GridProbabilities() : std::vector<Rational>{Rational(1, 3), Rational(1, 2)};
    for (const Rational& p : ps) {
      const IncidenceStats brute = BruteIncidenceStats(family, p);
      const IncidenceStats orbit = ComputeIncidenceStats(family, p);
      out.Check(brute == orbit, Describe(family, p) + ": brute sum_deg " +
                                    ToString(brute.sum_deg) + " sum_joint " +
                                    ToString(brute.sum_joint) + " vs " + ToString(orbit.sum_deg) +
                                    " / " + ToString(orbit.sum_joint));
    }
  }
  return out;
}

Outcome CorollaryRegression() {
  Outcome out;
  const TrialEstimate est = Estimate(GraphFamily::Simple(60), 0.5, 10000, 2026);
  const std::uint64_t failures = est.trials - est.successes;
  out.Check(failures <= 5, std::to_string(failures) + " failures in 10000 trials");
  out.detail = std::to_string(failures) + " failures in 10000 trials; corollary lower " +
               std::to_string(GnpHalfLower(60));
  return out;
}

Outcome ThresholdComplementarity() {
  Outcome out;
  const GraphFamily family = GraphFamily::Simple(2000);
  std::ostringstream note;
  for (double c : {-2.0, 2.0}) {
    const ThresholdSpec spec = SolveThresholdP(family, c);
    const TrialEstimate est = Estimate(family, spec.p, 1000, 7);
    const bool ok = c < 0 ? est.p_hat >= 0.75 : est.p_hat <= 0.25;
    note << (c < 0 ? "" : "; ") << "c=" << c << " p=" << spec.p << " p_hat=" << est.p_hat;
    out.Check(ok, "c=" + std::to_string(c) + " p_hat=" + std::to_string(est.p_hat));
  }
  if (out.pass) out.detail = note.str();
  return out;
}

Outcome DirectedIdentities() {
  Outcome out;
  const double log2 = std::log(2.0);
  for (int n : {5, 10, 40, 200, 1000}) {
    for (double p : {0.05, 0.1, 0.25, 0.5, 0.75}) {
      const std::string at = "n=" + std::to_string(n) + " p=" + std::to_string(p);
      std::vector<std::pair<BoundPair, FamilyKind>> cases = {
          {GnpBounds(n, p), FamilyKind::kDirected},
          {BipartiteTuranBounds(n, p), FamilyKind::kDirectedBipartite},
          {KPartiteTuranBounds(std::max(n, 7), 3, p), FamilyKind::kDirectedKPartite},
      };
      for (const auto& [und, kind] : cases) {
        const BoundPair dir = DirectedAdjust(und, kind);
        out.Check(dir.lower_raw == 1 - 2 * und.second_term,
                  at + ": directed lower is not 1 - 2 * second term");
        out.Check(std::abs(dir.lower_raw - (1 - 2 * (1 - und.lower_raw))) <=
                      4 * std::numeric_limits<double>::epsilon() *
                          std::max(1.0, std::abs(dir.lower_raw)),
                  at + ": directed lower differs from 1 - 2(1 - lower_raw)");
        out.Check(dir.upper_raw == und.upper_raw / 2, at + ": directed upper is not upper / 2");
      }
      const double cu = ThresholdC(GraphFamily::Simple(n), p).c;
      const double cd = ThresholdC(GraphFamily::Directed(n), p).c;
      out.Check(cd == cu + log2, at + ": directed c is not c + log 2");
      const GraphFamily bu = GraphFamily::Bipartite(TuranShape(std::max(n, 4), 2));
      const GraphFamily bd = GraphFamily::DirectedBipartite(TuranShape(std::max(n, 4), 2));
      out.Check(ThresholdC(bd, p).c == ThresholdC(bu, p).c + log2,
                at + ": directed bipartite c is not c + log 2");
    }
  }
  return out;
}

GraphFamily RandomFamily(std::mt19937_64& rng) {
  const auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  switch (pick(0, 5)) {
    case 0:
      return GraphFamily::Simple(pick(2, 32));
    case 1:
      return GraphFamily::Directed(pick(2, 32));
    case 2:
    case 3: {
      const int k = pick(3, 6);
      std::vector<int> sizes(static_cast<std::size_t>(k));
      for (int& s : sizes) s = pick(1, 32 / k);
      sizes.back() = std::max(sizes.back(), 2);
      sizes[sizes.size() - 2] = std::max(sizes[sizes.size() - 2], 2);
      const PartitionShape shape = MakeShape(sizes);
      return pick(0, 1) ? GraphFamily::KPartite(shape)
                                  : GraphFamily::DirectedKPartite(shape);
    }
    default: {
      const PartitionShape shape = MakeShape({pick(2, 16), pick(2, 16)});
      return pick(0, 1) ? GraphFamily::Bipartite(shape)
                                  : GraphFamily::DirectedBipartite(shape);
    }
  }
}

Outcome PredicateEquivalence() {
  Outcome out;
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  for (std::uint64_t trial = 0; trial < 10000; ++trial) {
    const GraphFamily family = RandomFamily(rng);
    const double p = unit(rng);
    const AdjacencyMatrix g = SampleGraph(family, p, 99, trial);
    const bool fast = MeetsTargetDiameter(g, family);
    const bool bfs = GraphDiameter(g).AtMost(family.target_diameter());
    out.Check(fast == bfs, "random graph " + std::to_string(trial) + " " +
                               Describe(family, Rational(0)) + " disagrees");
  }
  for (bool directed : {false, true}) {
    for (const auto& sizes : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}}) {
      const PartitionShape shape = MakeShape(sizes);
      const GraphFamily family =
          directed ? GraphFamily::DirectedBipartite(shape) : GraphFamily::Bipartite(shape);
      const auto edges = family.CandidateEdges();
      const std::uint64_t total = std::uint64_t{1} << edges.size();
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        AdjacencyBuilder builder(family.vertex_count(), directed);
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if ((mask >> e) & 1U) builder.Add(edges[e].first, edges[e].second);
        }
        const AdjacencyMatrix g = std::move(builder).Build();
        out.Check(BipartiteHasDiameterLe3(g, shape) == GraphDiameter(g).AtMost(3),
                  std::string(family.name()) + "(" + shape.ToString() + ") mask " +
                      std::to_string(mask) + " disagrees");
      }
    }
  }
  return out;
}

std::string SuccessesColumn(const std::vector<std::string>& args) {
  std::ostringstream sink, err;
  if (cli::Run(args, sink, err) != cli::kOk) return "error: " + err.str();
  const std::string text = sink.str();
  const std::vector<std::string> header = cli::Columns("simulate");
  std::size_t col = 0;
  while (header[col] != "successes") ++col;
  // Second line, field `col`; simulate rows contain no quoted commas
  // except the shape column, which is quoted as a single field.
  std::string row = text.substr(text.find('\n') + 1);
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (char ch : row) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      fields.push_back(field);
      field.clear();
    } else if (ch == '\r' || ch == '\n') {
      break;
    } else {
      field += ch;
    }
  }
  fields.push_back(field);
  return col < fields.size() ? fields[col] : "missing";
}

Outcome WorkerDeterminism() {
  Outcome out;
  const std::vector<std::vector<std::string>> runs = {
      {"simulate", "--family", "simple", "-n", "40", "-p", "0.3", "--trials", "3000"},
      {"simulate", "--family", "directed", "-n", "25", "-p", "0.45", "--trials", "2000",
       "--seed", "5"},
      {"simulate", "--family", "kpartite", "--shape", "3,4,5", "-p", "1/2", "--trials", "2000"},
      {"simulate", "--family", "bipartite", "--shape", "6,9", "-p", "0.4", "--trials", "2000",
       "--verify"},
      {"simulate", "--family", "simple", "-n", "200", "-p", "c=0", "--trials", "500"},
  };
  for (const auto& base : runs) {
    std::string reference;
    for (const char* workers : {"1", "4", "8"}) {
      std::vector<std::string> args = base;
      args.push_back("--workers");
      args.push_back(workers);
      const std::string got = SuccessesColumn(args);
      if (reference.empty()) reference = got;
      out.Check(got == reference && got.find("error") == std::string::npos,
                base[2] + " --workers " + workers + ": " + got + " vs " + reference);
    }
  }
  return out;
}

Outcome ExplicitWindow() {
  Outcome out;
  for (int n : {200, 500, 1000}) {
    for (double p : {0.05, 0.1}) {
      const std::string at = "n=" + std::to_string(n) + " p=" + std::to_string(p);
      const BoundPair asym = GnpAsymptoticBounds(n, p);
      const BoundPair theorem = GnpBounds(n, p);
      out.Check(asym.lower_raw <= theorem.lower_raw + kSlack,
                at + ": asymptotic lower " + std::to_string(asym.lower_raw) +
                    " above theorem lower " + std::to_string(theorem.lower_raw));
      const TrialEstimate est = Estimate(GraphFamily::Simple(n), p, 300, 11);
      const double envelope = est.p_hat + 3 * est.StandardError();
      out.Check(asym.lower <= envelope,
                at + ": asymptotic lower " + std::to_string(asym.lower) +
                    " above p_hat + 3 se " + std::to_string(envelope));
    }
  }
  return out;
}

}  // namespace
}  // namespace diamsieve

int main() {
  using namespace diamsieve;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"exact sandwich, simple graphs n=3..7", SimpleSandwich},
      {"closed-form dominance over the sieve", SimpleDominance},
      {"partite sandwiches and dominance", PartiteSandwich},
      {"brute-force incidence sums equal orbit sums", IncidenceEquality},
      {"corollary regression at n=60, p=1/2", CorollaryRegression},
      {"threshold complementarity at n=2000", ThresholdComplementarity},
      {"directed adjustment identities", DirectedIdentities},
      {"fast predicates agree with BFS", PredicateEquivalence},
      {"simulate is independent of worker count", WorkerDeterminism},
      {"explicit asymptotic window consistency", ExplicitWindow},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.pass) ++failed;
    std::printf("%s %zu %s (%d checks, %.1fs)%s%s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, outcome.checks, secs, outcome.detail.empty() ? "" : ": ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
