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

#include "diamsieve/sieve.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "diamsieve/errors.h"

namespace diamsieve {
namespace {

void RequireProbability(const Rational& p) {
  if (!IsOpenUnitProbability(p)) {
    throw DomainError("edge probability must lie in (0,1), got " + ToString(p));
  }
}

bool PartsMayConnect(const GraphFamily& family, int part_a, int part_b) {
  return !family.partite() || part_a != part_b;
}

// sum_j hist[j] r^j (s-r)^(m-j) / s^m for p = r/s.
Rational WeighHistogram(const std::vector<std::uint64_t>& hist, const Rational& p) {
  const BigInt r = boost::multiprecision::numerator(p);
  const BigInt s = boost::multiprecision::denominator(p);
  const BigInt t = s - r;
  const auto m = static_cast<unsigned>(hist.size() - 1);
  BigInt total = 0;
  for (unsigned j = 0; j <= m; ++j) {
    if (hist[j] == 0) continue;
    total += BigInt(hist[j]) * boost::multiprecision::pow(r, j) *
             boost::multiprecision::pow(t, m - j);
  }
  return Rational(total, boost::multiprecision::pow(s, m));
}

// Candidate arcs among at most five local vertices (the members of b1 u b2,
// optionally followed by one representative outside vertex).
class LocalPicture {
 public:
  // With `outsider_only`, keeps just the arcs touching the last vertex.
  LocalPicture(const GraphFamily& family, const std::vector<int>& parts, bool outsider_only)
      : directed_(family.directed()) {
    const int count = static_cast<int>(parts.size());
    const int last = count - 1;
    for (int x = 0; x < count; ++x) {
      for (int y = directed_ ? 0 : x + 1; y < count; ++y) {
        if (x == y) continue;
        if (outsider_only && x != last && y != last) continue;
        if (!PartsMayConnect(family, parts[static_cast<std::size_t>(x)],
                             parts[static_cast<std::size_t>(y)])) {
          continue;
        }
        arcs_.emplace_back(x, y);
      }
    }
  }

  std::size_t arc_count() const { return arcs_.size(); }

  // Configuration `mask` as per-vertex out-neighbour bit rows.
  std::array<std::uint8_t, 5> Rows(std::uint32_t mask) const {
    std::array<std::uint8_t, 5> rows{};
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      if (!((mask >> i) & 1U)) continue;
      auto [x, y] = arcs_[i];
      rows[static_cast<std::size_t>(x)] |= static_cast<std::uint8_t>(1U << y);
      if (!directed_) rows[static_cast<std::size_t>(y)] |= static_cast<std::uint8_t>(1U << x);
    }
    return rows;
  }

 private:
  std::vector<std::pair<int, int>> arcs_;
  bool directed_;
};

bool Adjacent(const std::array<std::uint8_t, 5>& rows, int x, int y) {
  return (rows[static_cast<std::size_t>(x)] >> y) & 1U;
}

// No arc x->y and no local middle vertex w with x->w->y.
bool LocallyUnwitnessed(const std::array<std::uint8_t, 5>& rows, int x, int y,
                        int vertex_count) {
  if (Adjacent(rows, x, y)) return false;
  for (int w = 0; w < vertex_count; ++w) {
    if (w == x || w == y) continue;
    if (Adjacent(rows, x, w) && Adjacent(rows, w, y)) return false;
  }
  return true;
}

}  // namespace

// --- witness pairs -------------------------------------------------------------

WitnessPair MakeWitnessPair(const GraphFamily& family, int u, int v) {
  const int n = family.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("witness pair out of range");
  return WitnessPair{u, v, family.part_of(u), family.part_of(v)};
}

bool IsAdmissible(const GraphFamily& family, const WitnessPair& b) {
  const int n = family.vertex_count();
  if (b.u < 0 || b.v < 0 || b.u >= n || b.v >= n || b.u == b.v) return false;
  if (!family.directed() && b.u > b.v) return false;
  if (b.part_u != family.part_of(b.u) || b.part_v != family.part_of(b.v)) return false;
  if (family.bipartite() && b.part_u != b.part_v) return false;
  return true;
}

std::vector<WitnessPair> WitnessPairs(const GraphFamily& family) {
  std::vector<WitnessPair> pairs;
  const int n = family.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = family.directed() ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      WitnessPair b = MakeWitnessPair(family, u, v);
      if (IsAdmissible(family, b)) pairs.push_back(b);
    }
  }
  return pairs;
}

std::size_t WitnessPairCount(const GraphFamily& family) {
  std::size_t count = 0;
  const auto n = static_cast<std::size_t>(family.vertex_count());
  if (family.bipartite()) {
    for (int s : family.shape().sizes()) {
      count += static_cast<std::size_t>(s) * static_cast<std::size_t>(s - 1);
    }
  } else {
    count = n * (n - 1);
  }
  return family.directed() ? count : count / 2;
}

// --- sieves ----------------------------------------------------------------------

Rational SimpleSieveLower(const IncidenceStats& stats) { return Rational(1) - stats.sum_deg; }

Rational TuranSieveUpper(const IncidenceStats& stats) {
  if (stats.sum_deg == 0) {
    throw DomainError("Turan sieve needs a positive degree sum");
  }
  return stats.sum_joint / (stats.sum_deg * stats.sum_deg) - 1;
}

// --- survival probabilities --------------------------------------------------------

Rational PairSurvivalProb(const GraphFamily& family, const Rational& p, const WitnessPair& b) {
  RequireProbability(p);
  if (!IsAdmissible(family, b)) {
    throw InvalidArgument("pair (" + std::to_string(b.u) + "," + std::to_string(b.v) +
                          ") is not admissible for family " + std::string(family.name()));
  }
  std::uint64_t middles = 0;
  const PartitionShape& shape = family.shape();
  for (int part = 0; part < shape.parts(); ++part) {
    if (!PartsMayConnect(family, part, b.part_u) || !PartsMayConnect(family, part, b.part_v)) {
      continue;
    }
    std::uint64_t available = static_cast<std::uint64_t>(shape.size(part));
    if (part == b.part_u) --available;
    if (part == b.part_v) --available;
    middles += available;
  }
  Rational result = Pow(Rational(1) - p * p, middles);
  if (PartsMayConnect(family, b.part_u, b.part_v)) result *= Rational(1) - p;
  return result;
}

Rational LocalEnumerationProb(const GraphFamily& family, const Rational& p,
                              const WitnessPair& b1, const WitnessPair& b2) {
  RequireProbability(p);
  for (const WitnessPair* b : {&b1, &b2}) {
    if (!IsAdmissible(family, *b)) {
      throw InvalidArgument("pair (" + std::to_string(b->u) + "," + std::to_string(b->v) +
                            ") is not admissible for family " + std::string(family.name()));
    }
  }

  // Local labels for the distinct vertices of b1 u b2.
  std::vector<int> members;
  for (int v : {b1.u, b1.v, b2.u, b2.v}) {
    if (std::find(members.begin(), members.end(), v) == members.end()) members.push_back(v);
  }
  auto local = [&](int v) {
    return static_cast<int>(std::find(members.begin(), members.end(), v) - members.begin());
  };
  const int m = static_cast<int>(members.size());
  const std::array<std::pair<int, int>, 2> targets{
      {{local(b1.u), local(b1.v)}, {local(b2.u), local(b2.v)}}};

  std::vector<int> inside;
  for (int v : members) inside.push_back(family.part_of(v));

  // Edges among b1 u b2.
  Rational result;
  {
    LocalPicture picture(family, inside, false);
    const std::size_t arcs = picture.arc_count();
    std::vector<std::uint64_t> hist(arcs + 1, 0);
    for (std::uint32_t mask = 0; mask < (1U << arcs); ++mask) {
      const auto rows = picture.Rows(mask);
      bool both = true;
      for (auto [x, y] : targets) both = both && LocallyUnwitnessed(rows, x, y, m);
      if (both) ++hist[static_cast<std::size_t>(std::popcount(mask))];
    }
    result = WeighHistogram(hist, p);
  }

  // One factor per outside vertex, grouped by part.
  const PartitionShape& shape = family.shape();
  for (int part = 0; part < shape.parts(); ++part) {
    std::uint64_t outside = static_cast<std::uint64_t>(shape.size(part));
    for (int v : members) {
      if (family.part_of(v) == part) --outside;
    }
    if (outside == 0) continue;
    std::vector<int> with_outsider = inside;
    with_outsider.push_back(part);
    LocalPicture picture(family, with_outsider, true);
    const std::size_t arcs = picture.arc_count();
    std::vector<std::uint64_t> hist(arcs + 1, 0);
    for (std::uint32_t mask = 0; mask < (1U << arcs); ++mask) {
      const auto rows = picture.Rows(mask);
      bool witnesses_any = false;
      for (auto [x, y] : targets) {
        witnesses_any = witnesses_any || (Adjacent(rows, x, m) && Adjacent(rows, m, y));
      }
      if (!witnesses_any) ++hist[static_cast<std::size_t>(std::popcount(mask))];
    }
    result *= Pow(WeighHistogram(hist, p), outside);
  }
  return result;
}

Rational JointSurvivalProb(const GraphFamily& family, const Rational& p, const WitnessPair& b1,
                           const WitnessPair& b2) {
  if (b1 == b2) return PairSurvivalProb(family, p, b1);
  return LocalEnumerationProb(family, p, b1, b2);
}

// --- incidence sums -----------------------------------------------------------------

IncidenceStats ComputeIncidenceStats(const GraphFamily& family, const Rational& p,
                                     std::size_t max_pairs) {
  RequireProbability(p);
  const std::size_t b_count = WitnessPairCount(family);
  if (b_count > max_pairs) {
    throw ResourceError("incidence sums over |B|=" + std::to_string(b_count) +
                        " pairs exceed the budget of " + std::to_string(max_pairs));
  }
  const std::vector<WitnessPair> pairs = WitnessPairs(family);

  // Pairs with the same part memberships are interchangeable.
  std::map<std::pair<int, int>, std::pair<std::uint64_t, WitnessPair>> first_types;
  for (const WitnessPair& b : pairs) {
    auto [it, inserted] = first_types.try_emplace({b.part_u, b.part_v}, 0, b);
    ++it->second.first;
  }

  IncidenceStats stats;
  stats.b_count = pairs.size();
  for (const auto& [type, entry] : first_types) {
    const auto& [type_count, rep] = entry;
    stats.sum_deg += Rational(type_count) * PairSurvivalProb(family, p, rep);

    // Relative to a fixed first pair, a second pair is determined up to
    // symmetry by its parts and which endpoints it shares with the first.
    using OverlapKey = std::tuple<int, int, int, int>;
    std::map<OverlapKey, std::pair<std::uint64_t, WitnessPair>> orbits;
    auto overlap = [&](int v) { return v == rep.u ? 1 : (v == rep.v ? 2 : 0); };
    for (const WitnessPair& b2 : pairs) {
      OverlapKey key{b2.part_u, b2.part_v, overlap(b2.u), overlap(b2.v)};
      auto [it, inserted] = orbits.try_emplace(key, 0, b2);
      ++it->second.first;
    }
    Rational row_sum;
    for (const auto& [key, orbit] : orbits) {
      row_sum += Rational(orbit.first) * JointSurvivalProb(family, p, rep, orbit.second);
    }
    stats.sum_joint += Rational(type_count) * row_sum;
  }
  return stats;
}

IncidenceStats ComputeIncidenceStatsNaive(const GraphFamily& family, const Rational& p) {
  RequireProbability(p);
  const std::vector<WitnessPair> pairs = WitnessPairs(family);
  IncidenceStats stats;
  stats.b_count = pairs.size();
  for (const WitnessPair& b1 : pairs) {
    stats.sum_deg += PairSurvivalProb(family, p, b1);
    for (const WitnessPair& b2 : pairs) stats.sum_joint += JointSurvivalProb(family, p, b1, b2);
  }
  return stats;
}

SieveResult SieveBounds(const GraphFamily& family, const Rational& p) {
  SieveResult out;
  out.stats = ComputeIncidenceStats(family, p);
  if (out.stats.sum_deg <= 0) {
    throw DomainError("degree sum is not positive; cannot happen for p in (0,1)");
  }
  out.lower_raw = SimpleSieveLower(out.stats);
  out.upper_raw = TuranSieveUpper(out.stats);
  out.lower = std::clamp(out.lower_raw, Rational(0), Rational(1));
  out.upper = std::clamp(out.upper_raw, Rational(0), Rational(1));
  out.bounds = MakeBoundPair(ToDouble(out.stats.sum_deg), ToDouble(out.upper_raw),
                             BoundSource::kExactSieve);
  out.bounds.directed = family.directed();
  return out;
}

}  // namespace diamsieve
