#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nbwalk {

using VertexId = std::int32_t;

class GraphError : public std::runtime_error {
 public:
  enum class Kind {
    NonRegular,
    Asymmetric,
    SelfLoop,
    DuplicateEdge,
    InfeasibleDegree,
    GenerationTimeout,
    OverlapTimeout,
    BadArgument,
  };

  GraphError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Simple undirected d-regular graph on vertices 0..n-1, d >= 2. Neighbor
// lists are kept sorted so that slot lookups can binary-search and the
// directed-edge numbering below is reproducible.
//
// Directed edges get ids tail * d + slot, where slot is the position of the
// head in the tail's sorted neighbor list. reverse_edge() maps (u, v) to
// (v, u); it is an involution without fixed points.
class RegularGraph {
 public:
  // Validates regularity, symmetry, simplicity and vertex ids, then sorts
  // the neighbor lists. Throws GraphError on any violation.
  static RegularGraph from_adjacency(std::vector<std::vector<VertexId>> adj);

  int n() const { return static_cast<int>(offsets_.size()) - 1; }
  int degree() const { return degree_; }
  int num_directed_edges() const { return n() * degree_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {flat_.data() + offsets_[v], static_cast<std::size_t>(degree_)};
  }

  // Position of head in tail's neighbor list; nullopt when not adjacent.
  std::optional<int> slot_of(VertexId tail, VertexId head) const;

  int edge_id(VertexId tail, int slot) const { return tail * degree_ + slot; }
  VertexId edge_tail(int edge) const { return edge / degree_; }
  VertexId edge_head(int edge) const {
    return flat_[offsets_[edge / degree_] + edge % degree_];
  }
  int reverse_edge(int edge) const;

 private:
  RegularGraph() = default;
  int degree_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> flat_;
};

// K_n, n >= 3.
RegularGraph complete_graph(int n);

// Uniform-ish d-regular graph via the pairing (configuration) model: pair up
// n*d stubs uniformly, restart from scratch whenever the pairing produces a
// self-loop or parallel edge. d >= 3, n*d even, d < n.
RegularGraph random_regular(int n, int d, std::uint64_t seed,
                            int max_restarts = 2000);

// m disjoint cycles of length g plus an independent (d-2)-regular pairing
// layer on all m*g vertices, resampled until it is simple and shares no edge
// with the cycles. The cycles occupy contiguous vertex blocks: cycle c is
// c*g .. c*g+g-1 in ring order.
struct DecoratedExpander {
  RegularGraph graph;
  int num_cycles = 0;
  int cycle_length = 0;

  int cycle_of(VertexId v) const { return v / cycle_length; }
  VertexId cycle_next(VertexId v) const {
    return v - v % cycle_length + (v % cycle_length + 1) % cycle_length;
  }
  VertexId cycle_prev(VertexId v) const {
    return v - v % cycle_length +
           (v % cycle_length + cycle_length - 1) % cycle_length;
  }
};

DecoratedExpander cycle_decorated_expander(int num_cycles, int cycle_length,
                                           int d, std::uint64_t seed,
                                           int max_restarts = 2000);

// Length of a shortest cycle; nullopt only for forests, which cannot occur
// at d >= 2. Per-root truncated BFS over the first non-tree edge.
std::optional<int> girth(const RegularGraph& g);

bool is_connected(const RegularGraph& g);
bool is_bipartite(const RegularGraph& g);

// BFS distances from source; unreachable vertices get -1.
std::vector<int> bfs_distances(const RegularGraph& g, VertexId source);

// Greedily picks vertices in ascending id order so that selected vertices
// are pairwise at distance >= min_distance.
struct SpacedSet {
  std::vector<VertexId> vertices;
  int min_distance = 0;
};
SpacedSet spaced_set(const RegularGraph& g, int min_distance);

}  // namespace nbwalk
