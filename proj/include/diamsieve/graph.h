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

#ifndef DIAMSIEVE_GRAPH_H_
#define DIAMSIEVE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace diamsieve {

// Ordered part sizes n_1 <= n_2 <= ... <= n_k of a vertex partition.
class PartitionShape {
 public:
  // Sorts `sizes` non-decreasingly. Throws InvalidArgument when empty or
  // when any size is < 1.
  static PartitionShape Make(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int parts() const { return static_cast<int>(sizes_.size()); }
  int size(int i) const { return sizes_[static_cast<std::size_t>(i)]; }
  int largest() const { return sizes_.back(); }
  int total() const { return total_; }

  // k >= 3, n_{k-1} >= 2 and n >= k + 2.
  bool IsKPartiteValid() const;
  // k == 2 and n_1 >= 2.
  bool IsBipartiteValid() const;

  // "2,2,3"
  std::string ToString() const;

  friend bool operator==(const PartitionShape&, const PartitionShape&) = default;

 private:
  explicit PartitionShape(std::vector<int> sizes);
  std::vector<int> sizes_;
  int total_ = 0;
};

PartitionShape MakeShape(std::vector<int> sizes);

// k parts of size floor(n/k) or ceil(n/k), larger parts last.
PartitionShape TuranShape(int n, int k);

enum class FamilyKind {
  kSimple,
  kDirected,
  kKPartite,
  kDirectedKPartite,
  kBipartite,
  kDirectedBipartite,
};

std::string_view FamilyKindName(FamilyKind kind);
// Accepts the names produced by FamilyKindName. Throws InvalidArgument.
FamilyKind ParseFamilyKind(std::string_view name);
bool IsDirectedKind(FamilyKind kind);
FamilyKind UndirectedCounterpart(FamilyKind kind);

// A random graph family: vertex partition, edge orientation and the
// diameter target that defines "success". Vertices are numbered part by
// part, so part i occupies a contiguous index range.
class GraphFamily {
 public:
  static GraphFamily Simple(int n);
  static GraphFamily Directed(int n);
  static GraphFamily KPartite(PartitionShape shape);
  static GraphFamily DirectedKPartite(PartitionShape shape);
  static GraphFamily Bipartite(PartitionShape shape);
  static GraphFamily DirectedBipartite(PartitionShape shape);
  // For the simple kinds `shape` must have a single part.
  static GraphFamily Make(FamilyKind kind, PartitionShape shape);

  FamilyKind kind() const { return kind_; }
  const PartitionShape& shape() const { return shape_; }
  int vertex_count() const { return shape_.total(); }
  int target_diameter() const { return target_diameter_; }
  bool directed() const { return IsDirectedKind(kind_); }
  bool partite() const { return kind_ != FamilyKind::kSimple && kind_ != FamilyKind::kDirected; }
  bool bipartite() const {
    return kind_ == FamilyKind::kBipartite || kind_ == FamilyKind::kDirectedBipartite;
  }
  std::string_view name() const { return FamilyKindName(kind_); }

  int part_of(int v) const { return part_of_[static_cast<std::size_t>(v)]; }
  int part_begin(int part) const { return part_begin_[static_cast<std::size_t>(part)]; }

  // Whether the (ordered, if directed) vertex pair may carry an edge.
  bool IsCandidate(int u, int v) const {
    return u != v && (!partite() || part_of(u) != part_of(v));
  }
  // u < v for undirected families, all ordered pairs for directed ones.
  std::vector<std::pair<int, int>> CandidateEdges() const;
  std::size_t CandidateEdgeCount() const;

  friend bool operator==(const GraphFamily& a, const GraphFamily& b) {
    return a.kind_ == b.kind_ && a.shape_ == b.shape_;
  }

 private:
  GraphFamily(FamilyKind kind, PartitionShape shape);

  FamilyKind kind_;
  PartitionShape shape_;
  int target_diameter_;
  std::vector<int> part_of_;
  std::vector<int> part_begin_;
};

// Bitset adjacency. Row u bit v is set iff the edge u->v is present; for
// undirected graphs the matrix is symmetric. Directed graphs also keep the
// transposed rows so that 2-hop tests are a single row AND. Trailing bits
// past n are always zero.
class AdjacencyMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  AdjacencyMatrix(int n, bool directed);

  static AdjacencyMatrix FromEdges(int n, bool directed,
                                   std::span<const std::pair<int, int>> edges);

  int n() const { return n_; }
  bool directed() const { return directed_; }
  std::size_t words_per_row() const { return words_; }

  bool HasEdge(int u, int v) const {
    return (out_[Index(u) + WordOf(v)] >> BitOf(v)) & 1U;
  }
  std::span<const Word> OutRow(int u) const { return {out_.data() + Index(u), words_}; }
  std::span<const Word> InRow(int v) const {
    const auto& rows = directed_ ? in_ : out_;
    return {rows.data() + Index(v), words_};
  }
  // Number of edges (arcs, if directed).
  std::size_t EdgeCount() const;
  std::vector<std::pair<int, int>> Edges() const;

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  friend class AdjacencyBuilder;

  std::size_t Index(int u) const { return static_cast<std::size_t>(u) * words_; }
  static std::size_t WordOf(int v) { return static_cast<std::size_t>(v) / kWordBits; }
  static unsigned BitOf(int v) { return static_cast<unsigned>(v) % kWordBits; }

  void Flip(std::vector<Word>& rows, int u, int v) {
    rows[Index(u) + WordOf(v)] ^= Word{1} << BitOf(v);
  }
  void Set(std::vector<Word>& rows, int u, int v) {
    rows[Index(u) + WordOf(v)] |= Word{1} << BitOf(v);
  }

  int n_;
  bool directed_;
  std::size_t words_;
  std::vector<Word> out_;
  std::vector<Word> in_;  // empty unless directed
};

// The only way to change an AdjacencyMatrix after construction. Used by the
// sampler and by exhaustive enumeration.
class AdjacencyBuilder {
 public:
  AdjacencyBuilder(int n, bool directed) : graph_(n, directed) {}

  // Adds the edge (both orientations when undirected). Self-loops rejected.
  void Add(int u, int v);
  // Toggles the edge (both orientations when undirected).
  void Toggle(int u, int v);

  const AdjacencyMatrix& view() const { return graph_; }
  AdjacencyMatrix Build() && { return std::move(graph_); }

 private:
  AdjacencyMatrix graph_;
};

class Diameter {
 public:
  static Diameter Finite(int value);
  static Diameter Infinite() { return Diameter(-1); }

  bool is_infinite() const { return value_ < 0; }
  // Throws std::logic_error when infinite.
  int value() const;
  bool AtMost(int d) const { return !is_infinite() && value_ <= d; }
  std::string ToString() const;

  friend bool operator==(const Diameter&, const Diameter&) = default;

 private:
  explicit Diameter(int value) : value_(value) {}
  int value_;
};

// Each candidate edge of `family` is present independently with probability
// p. Edge (u,v) consumes draw number u*n + v of the stream keyed by
// (seed, trial_index), so the result does not depend on evaluation order.
// Throws DomainError unless 0 < p < 1.
AdjacencyMatrix SampleGraph(const GraphFamily& family, double p, std::uint64_t seed,
                            std::uint64_t trial_index);

// Undirected: every pair is adjacent or shares a neighbour.
bool HasDiameterLe2(const AdjacencyMatrix& g);
// Directed: every ordered pair (u,v) has u->v or u->w->v.
bool DirectedHasDiameterLe2(const AdjacencyMatrix& g);
// Every same-part pair has a common neighbour (u->w->v when directed).
// For parts of size >= 2 this is equivalent to diameter <= 3.
bool BipartiteHasDiameterLe3(const AdjacencyMatrix& g, const PartitionShape& shape);
// Dispatches to the fast predicate for the family's target diameter.
bool MeetsTargetDiameter(const AdjacencyMatrix& g, const GraphFamily& family);

// Reference all-sources BFS; Infinite unless (strongly) connected.
Diameter GraphDiameter(const AdjacencyMatrix& g);
// Single-source BFS distances; -1 marks unreachable vertices.
std::vector<int> BfsDistances(const AdjacencyMatrix& g, int source);

}  // namespace diamsieve

#endif  // DIAMSIEVE_GRAPH_H_
