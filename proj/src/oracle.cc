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

#include "diamsieve/oracle.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>
#include <thread>

#include "diamsieve/errors.h"

namespace diamsieve {
namespace {

void RequireProbability(const Rational& p) {
  if (!IsOpenUnitProbability(p)) {
    throw DomainError("edge probability must lie in (0,1), got " + ToString(p));
  }
}

int ResolveWorkers(int workers) {
  if (workers > 0) return workers;
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

std::vector<std::pair<int, int>> BudgetedEdges(const GraphFamily& family,
                                               const EnumerationBudget& budget) {
  auto edges = family.CandidateEdges();
  if (static_cast<int>(edges.size()) > budget.max_edges || edges.size() >= 63) {
    throw ResourceError("exhaustive enumeration over " + std::to_string(edges.size()) +
                        " candidate edges exceeds the budget of " +
                        std::to_string(budget.max_edges));
  }
  return edges;
}

// Visits every subset of `edges` in Gray-code order. The index range is cut
// into blocks that workers claim in a fixed interleaving; each worker gets
// its own accumulator (built by make_state) so results are merged exactly.
//   visit(state, graph, edge_count)
template <typename State, typename MakeState, typename Visit>
std::vector<State> EnumerateGraphs(int n, bool directed,
                                   const std::vector<std::pair<int, int>>& edges, int workers,
                                   MakeState make_state, Visit visit) {
  const int m = static_cast<int>(edges.size());
  const std::uint64_t total = std::uint64_t{1} << m;
  const int block_bits = std::min(m, 12);
  const std::uint64_t block_size = std::uint64_t{1} << block_bits;
  const std::uint64_t blocks = total / block_size;
  workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), blocks));

  std::vector<State> states;
  states.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) states.push_back(make_state());

  auto run = [&](int worker) {
    State& state = states[static_cast<std::size_t>(worker)];
    for (std::uint64_t block = static_cast<std::uint64_t>(worker); block < blocks;
         block += static_cast<std::uint64_t>(workers)) {
      const std::uint64_t first = block * block_size;
      const std::uint64_t gray = first ^ (first >> 1);
      AdjacencyBuilder builder(n, directed);
      int edge_count = 0;
      for (int e = 0; e < m; ++e) {
        if ((gray >> e) & 1U) {
          builder.Add(edges[static_cast<std::size_t>(e)].first,
                      edges[static_cast<std::size_t>(e)].second);
          ++edge_count;
        }
      }
      visit(state, builder.view(), edge_count);
      std::uint64_t code = gray;
      for (std::uint64_t i = first + 1; i < first + block_size; ++i) {
        const int flip = std::countr_zero(i);
        code ^= std::uint64_t{1} << flip;
        const auto& [u, v] = edges[static_cast<std::size_t>(flip)];
        builder.Toggle(u, v);
        edge_count += ((code >> flip) & 1U) ? 1 : -1;
        visit(state, builder.view(), edge_count);
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  return states;
}

EdgeHistogram MergeHistograms(const std::vector<EdgeHistogram>& parts) {
  EdgeHistogram out(parts.front().size(), 0);
  for (const auto& h : parts) {
    for (std::size_t k = 0; k < h.size(); ++k) out[k] += h[k];
  }
  return out;
}

}  // namespace

Rational WeighEdgeHistogram(const EdgeHistogram& hist, const Rational& p) {
  RequireProbability(p);
  const BigInt r = boost::multiprecision::numerator(p);
  const BigInt s = boost::multiprecision::denominator(p);
  const auto m = static_cast<unsigned>(hist.size() - 1);
  BigInt total = 0;
  for (unsigned k = 0; k <= m; ++k) {
    if (hist[k] == 0) continue;
    total += BigInt(hist[k]) * boost::multiprecision::pow(r, k) *
             boost::multiprecision::pow(BigInt(s - r), m - k);
  }
  return Rational(total, boost::multiprecision::pow(s, m));
}

EdgeHistogram EdgeCountHistogram(const GraphFamily& family, EnumerationBudget budget,
                                 int workers) {
  const auto edges = BudgetedEdges(family, budget);
  auto states = EnumerateGraphs<EdgeHistogram>(
      family.vertex_count(), family.directed(), edges, ResolveWorkers(workers),
      [&] { return EdgeHistogram(edges.size() + 1, 0); },
      [](EdgeHistogram& h, const AdjacencyMatrix&, int k) { ++h[static_cast<std::size_t>(k)]; });
  return MergeHistograms(states);
}

EdgeHistogram DiameterHistogram(const GraphFamily& family, EnumerationBudget budget,
                                int workers) {
  const auto edges = BudgetedEdges(family, budget);
  const int target = family.target_diameter();
  auto states = EnumerateGraphs<EdgeHistogram>(
      family.vertex_count(), family.directed(), edges, ResolveWorkers(workers),
      [&] { return EdgeHistogram(edges.size() + 1, 0); },
      [target](EdgeHistogram& h, const AdjacencyMatrix& g, int k) {
        if (GraphDiameter(g).AtMost(target)) ++h[static_cast<std::size_t>(k)];
      });
  return MergeHistograms(states);
}

Rational ExactDiameterProb(const GraphFamily& family, const Rational& p, int d,
                           EnumerationBudget budget, int workers) {
  RequireProbability(p);
  if (d != family.target_diameter()) {
    throw InvalidArgument("family " + std::string(family.name()) + " targets diameter " +
                          std::to_string(family.target_diameter()) + ", not " +
                          std::to_string(d));
  }
  return WeighEdgeHistogram(DiameterHistogram(family, budget, workers), p);
}

IncidenceTable BruteIncidenceTable(const GraphFamily& family, const Rational& p,
                                   EnumerationBudget budget, int workers) {
  RequireProbability(p);
  const auto edges = BudgetedEdges(family, budget);
  IncidenceTable table;
  table.pairs = WitnessPairs(family);
  const std::size_t nb = table.pairs.size();
  if (nb > budget.max_pairs || nb > 64) {
    throw ResourceError("brute incidence table over |B|=" + std::to_string(nb) +
                        " pairs exceeds the budget of " + std::to_string(budget.max_pairs));
  }
  const std::size_t slots = edges.size() + 1;
  const int n = family.vertex_count();

  // Layout: [b1][b2][k], diagonal doubling as the degree histogram.
  struct Counts {
    std::vector<std::uint64_t> joint;
  };
  const auto& pairs = table.pairs;
  auto states = EnumerateGraphs<Counts>(
      n, family.directed(), edges, ResolveWorkers(workers),
      [&] { return Counts{std::vector<std::uint64_t>(nb * nb * slots, 0)}; },
      [&](Counts& c, const AdjacencyMatrix& g, int k) {
        std::vector<std::vector<int>> dist(static_cast<std::size_t>(n));
        std::uint64_t unwitnessed = 0;
        for (std::size_t i = 0; i < nb; ++i) {
          const auto& b = pairs[i];
          auto& row = dist[static_cast<std::size_t>(b.u)];
          if (row.empty()) row = BfsDistances(g, b.u);
          const int d = row[static_cast<std::size_t>(b.v)];
          if (d < 0 || d > 2) unwitnessed |= std::uint64_t{1} << i;
        }
        for (std::uint64_t a = unwitnessed; a; a &= a - 1) {
          const auto i = static_cast<std::size_t>(std::countr_zero(a));
          for (std::uint64_t bmask = unwitnessed; bmask; bmask &= bmask - 1) {
            const auto j = static_cast<std::size_t>(std::countr_zero(bmask));
            ++c.joint[(i * nb + j) * slots + static_cast<std::size_t>(k)];
          }
        }
      });

  table.deg.assign(nb, Rational(0));
  table.joint.assign(nb, std::vector<Rational>(nb, Rational(0)));
  EdgeHistogram hist(slots);
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      std::fill(hist.begin(), hist.end(), 0);
      for (const Counts& c : states) {
        for (std::size_t k = 0; k < slots; ++k) hist[k] += c.joint[(i * nb + j) * slots + k];
      }
      table.joint[i][j] = WeighEdgeHistogram(hist, p);
    }
    table.deg[i] = table.joint[i][i];
  }
  return table;
}

IncidenceStats BruteIncidenceStats(const GraphFamily& family, const Rational& p,
                                   EnumerationBudget budget, int workers) {
  const IncidenceTable table = BruteIncidenceTable(family, p, budget, workers);
  IncidenceStats stats;
  stats.b_count = table.pairs.size();
  for (std::size_t i = 0; i < table.pairs.size(); ++i) {
    stats.sum_deg += table.deg[i];
    for (const Rational& q : table.joint[i]) stats.sum_joint += q;
  }
  return stats;
}

}  // namespace diamsieve
