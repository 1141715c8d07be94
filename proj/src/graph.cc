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

#include "diamsieve/graph.h"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "diamsieve/errors.h"
#include "diamsieve/philox.h"

namespace diamsieve {
namespace {

using Word = AdjacencyMatrix::Word;

bool Intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

#ifndef NDEBUG
bool TrailingBitsClear(const AdjacencyMatrix& g) {
  const int used = g.n() % AdjacencyMatrix::kWordBits;
  if (used == 0) return true;
  const Word mask = ~((Word{1} << used) - 1);
  for (int u = 0; u < g.n(); ++u) {
    if (g.OutRow(u).back() & mask) return false;
    if (g.InRow(u).back() & mask) return false;
  }
  return true;
}
#endif

}  // namespace

// --- PartitionShape ---------------------------------------------------------

PartitionShape::PartitionShape(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  total_ = std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

PartitionShape PartitionShape::Make(std::vector<int> sizes) {
  if (sizes.empty()) throw InvalidArgument("invalid shape: no parts");
  for (int s : sizes) {
    if (s < 1) throw InvalidArgument("invalid shape: part size " + std::to_string(s) + " < 1");
  }
  std::sort(sizes.begin(), sizes.end());
  return PartitionShape(std::move(sizes));
}

bool PartitionShape::IsKPartiteValid() const {
  const int k = parts();
  return k >= 3 && size(k - 2) >= 2 && total_ >= k + 2;
}

bool PartitionShape::IsBipartiteValid() const { return parts() == 2 && size(0) >= 2; }

std::string PartitionShape::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

PartitionShape MakeShape(std::vector<int> sizes) { return PartitionShape::Make(std::move(sizes)); }

PartitionShape TuranShape(int n, int k) {
  if (k < 1 || k > n) {
    throw InvalidArgument("turan shape needs 1 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
  }
  std::vector<int> sizes(static_cast<std::size_t>(k), n / k);
  const int larger = n % k;
  for (int i = 0; i < larger; ++i) ++sizes[static_cast<std::size_t>(k - 1 - i)];
  return PartitionShape::Make(std::move(sizes));
}

// --- FamilyKind -------------------------------------------------------------

std::string_view FamilyKindName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kSimple: return "simple";
    case FamilyKind::kDirected: return "directed";
    case FamilyKind::kKPartite: return "kpartite";
    case FamilyKind::kDirectedKPartite: return "directed-kpartite";
    case FamilyKind::kBipartite: return "bipartite";
    case FamilyKind::kDirectedBipartite: return "directed-bipartite";
  }
  return "unknown";
}

FamilyKind ParseFamilyKind(std::string_view name) {
  for (FamilyKind kind : {FamilyKind::kSimple, FamilyKind::kDirected, FamilyKind::kKPartite,
                          FamilyKind::kDirectedKPartite, FamilyKind::kBipartite,
                          FamilyKind::kDirectedBipartite}) {
    if (FamilyKindName(kind) == name) return kind;
  }
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

bool IsDirectedKind(FamilyKind kind) {
  return kind == FamilyKind::kDirected || kind == FamilyKind::kDirectedKPartite ||
         kind == FamilyKind::kDirectedBipartite;
}

FamilyKind UndirectedCounterpart(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kDirected: return FamilyKind::kSimple;
    case FamilyKind::kDirectedKPartite: return FamilyKind::kKPartite;
    case FamilyKind::kDirectedBipartite: return FamilyKind::kBipartite;
    default: return kind;
  }
}

// --- GraphFamily ------------------------------------------------------------

GraphFamily::GraphFamily(FamilyKind kind, PartitionShape shape)
    : kind_(kind), shape_(std::move(shape)), target_diameter_(bipartite() ? 3 : 2) {
  part_of_.reserve(static_cast<std::size_t>(shape_.total()));
  int begin = 0;
  for (int part = 0; part < shape_.parts(); ++part) {
    part_begin_.push_back(begin);
    for (int i = 0; i < shape_.size(part); ++i) part_of_.push_back(part);
    begin += shape_.size(part);
  }
}

GraphFamily GraphFamily::Make(FamilyKind kind, PartitionShape shape) {
  switch (kind) {
    case FamilyKind::kSimple:
    case FamilyKind::kDirected:
      if (shape.parts() != 1) {
        throw InvalidArgument("simple families take a single-part shape, got (" +
                              shape.ToString() + ")");
      }
      break;
    case FamilyKind::kKPartite:
    case FamilyKind::kDirectedKPartite:
      if (!shape.IsKPartiteValid()) {
        throw InvalidArgument("invalid k-partite shape (" + shape.ToString() +
                              "): need k >= 3, n_{k-1} >= 2, n >= k + 2");
      }
      break;
    case FamilyKind::kBipartite:
    case FamilyKind::kDirectedBipartite:
      if (!shape.IsBipartiteValid()) {
        throw InvalidArgument("invalid bipartite shape (" + shape.ToString() +
                              "): need two parts of size >= 2");
      }
      break;
  }
  return GraphFamily(kind, std::move(shape));
}

GraphFamily GraphFamily::Simple(int n) {
  return Make(FamilyKind::kSimple, PartitionShape::Make({n}));
}
GraphFamily GraphFamily::Directed(int n) {
  return Make(FamilyKind::kDirected, PartitionShape::Make({n}));
}
GraphFamily GraphFamily::KPartite(PartitionShape shape) {
  return Make(FamilyKind::kKPartite, std::move(shape));
}
GraphFamily GraphFamily::DirectedKPartite(PartitionShape shape) {
  return Make(FamilyKind::kDirectedKPartite, std::move(shape));
}
GraphFamily GraphFamily::Bipartite(PartitionShape shape) {
  return Make(FamilyKind::kBipartite, std::move(shape));
}
GraphFamily GraphFamily::DirectedBipartite(PartitionShape shape) {
  return Make(FamilyKind::kDirectedBipartite, std::move(shape));
}

std::vector<std::pair<int, int>> GraphFamily::CandidateEdges() const {
  std::vector<std::pair<int, int>> edges;
  const int n = vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = directed() ? 0 : u + 1; v < n; ++v) {
      if (IsCandidate(u, v)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::size_t GraphFamily::CandidateEdgeCount() const {
  std::size_t n = static_cast<std::size_t>(vertex_count());
  std::size_t ordered = n * (n - 1);
  if (partite()) {
    for (int s : shape_.sizes()) {
      ordered -= static_cast<std::size_t>(s) * static_cast<std::size_t>(s - 1);
    }
  }
  return directed() ? ordered : ordered / 2;
}

// --- AdjacencyMatrix --------------------------------------------------------

AdjacencyMatrix::AdjacencyMatrix(int n, bool directed)
    : n_(n),
      directed_(directed),
      words_((static_cast<std::size_t>(std::max(n, 0)) + kWordBits - 1) / kWordBits) {
  if (n < 1) throw InvalidArgument("adjacency matrix needs n >= 1");
  out_.assign(static_cast<std::size_t>(n) * words_, 0);
  if (directed_) in_.assign(out_.size(), 0);
}

AdjacencyMatrix AdjacencyMatrix::FromEdges(int n, bool directed,
                                           std::span<const std::pair<int, int>> edges) {
  AdjacencyBuilder builder(n, directed);
  for (auto [u, v] : edges) builder.Add(u, v);
  return std::move(builder).Build();
}

std::size_t AdjacencyMatrix::EdgeCount() const {
  std::size_t bits = 0;
  for (Word w : out_) bits += static_cast<std::size_t>(std::popcount(w));
  return directed_ ? bits : bits / 2;
}

std::vector<std::pair<int, int>> AdjacencyMatrix::Edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n_; ++u) {
    for (int v = directed_ ? 0 : u + 1; v < n_; ++v) {
      if (HasEdge(u, v)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

void AdjacencyBuilder::Add(int u, int v) {
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= graph_.n_ || v >= graph_.n_) {
    throw InvalidArgument("edge endpoint out of range");
  }
  graph_.Set(graph_.out_, u, v);
  if (graph_.directed_) {
    graph_.Set(graph_.in_, v, u);
  } else {
    graph_.Set(graph_.out_, v, u);
  }
}

void AdjacencyBuilder::Toggle(int u, int v) {
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  graph_.Flip(graph_.out_, u, v);
  if (graph_.directed_) {
    graph_.Flip(graph_.in_, v, u);
  } else {
    graph_.Flip(graph_.out_, v, u);
  }
}

// --- Diameter ---------------------------------------------------------------

Diameter Diameter::Finite(int value) {
  if (value < 0) throw InvalidArgument("finite diameter must be >= 0");
  return Diameter(value);
}

int Diameter::value() const {
  if (is_infinite()) throw std::logic_error("diameter is infinite");
  return value_;
}

std::string Diameter::ToString() const { return is_infinite() ? "inf" : std::to_string(value_); }

// --- Sampling ---------------------------------------------------------------

AdjacencyMatrix SampleGraph(const GraphFamily& family, double p, std::uint64_t seed,
                            std::uint64_t trial_index) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("edge probability must lie in (0,1), got " + std::to_string(p));
  }
  // P(draw < threshold) = threshold / 2^64.
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
  const int n = family.vertex_count();
  const auto un = static_cast<std::uint64_t>(n);
  CounterStream stream(seed, trial_index);
  AdjacencyBuilder builder(n, family.directed());
  for (int u = 0; u < n; ++u) {
    for (int v = family.directed() ? 0 : u + 1; v < n; ++v) {
      if (!family.IsCandidate(u, v)) continue;
      const std::uint64_t position = static_cast<std::uint64_t>(u) * un + static_cast<std::uint64_t>(v);
      if (stream.Draw(position) < threshold) builder.Add(u, v);
    }
  }
  return std::move(builder).Build();
}

// --- Predicates -------------------------------------------------------------

bool HasDiameterLe2(const AdjacencyMatrix& g) {
  if (g.directed()) throw InvalidArgument("HasDiameterLe2 expects an undirected graph");
  assert(TrailingBitsClear(g));
  const int n = g.n();
  for (int u = 0; u < n; ++u) {
    const auto row_u = g.OutRow(u);
    for (int v = u + 1; v < n; ++v) {
      if (g.HasEdge(u, v)) continue;
      if (!Intersects(row_u, g.OutRow(v))) return false;
    }
  }
  return true;
}

bool DirectedHasDiameterLe2(const AdjacencyMatrix& g) {
  if (!g.directed()) throw InvalidArgument("DirectedHasDiameterLe2 expects a directed graph");
  assert(TrailingBitsClear(g));
  const int n = g.n();
  for (int u = 0; u < n; ++u) {
    const auto out_u = g.OutRow(u);
    for (int v = 0; v < n; ++v) {
      if (u == v || g.HasEdge(u, v)) continue;
      if (!Intersects(out_u, g.InRow(v))) return false;
    }
  }
  return true;
}

bool BipartiteHasDiameterLe3(const AdjacencyMatrix& g, const PartitionShape& shape) {
  if (shape.parts() != 2 || shape.total() != g.n()) {
    throw InvalidArgument("bipartite check: shape (" + shape.ToString() +
                          ") does not partition a graph on " + std::to_string(g.n()) +
                          " vertices into two parts");
  }
  assert(TrailingBitsClear(g));
  const int split = shape.size(0);
  auto check_part = [&](int begin, int end) {
    for (int u = begin; u < end; ++u) {
      for (int v = g.directed() ? begin : u + 1; v < end; ++v) {
        if (u == v) continue;
        if (!Intersects(g.OutRow(u), g.InRow(v))) return false;
      }
    }
    return true;
  };
  return check_part(0, split) && check_part(split, g.n());
}

bool MeetsTargetDiameter(const AdjacencyMatrix& g, const GraphFamily& family) {
  if (family.bipartite()) return BipartiteHasDiameterLe3(g, family.shape());
  return family.directed() ? DirectedHasDiameterLe2(g) : HasDiameterLe2(g);
}

// --- BFS reference ----------------------------------------------------------

std::vector<int> BfsDistances(const AdjacencyMatrix& g, int source) {
  const int n = g.n();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < n; ++v) {
      if (dist[static_cast<std::size_t>(v)] < 0 && g.HasEdge(u, v)) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

Diameter GraphDiameter(const AdjacencyMatrix& g) {
  int diameter = 0;
  for (int s = 0; s < g.n(); ++s) {
    for (int d : BfsDistances(g, s)) {
      if (d < 0) return Diameter::Infinite();
      diameter = std::max(diameter, d);
    }
  }
  return Diameter::Finite(diameter);
}

}  // namespace diamsieve
