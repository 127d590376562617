#include "nbwalk/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "nbwalk/rng.hpp"

namespace nbwalk {

RegularGraph RegularGraph::from_adjacency(std::vector<std::vector<VertexId>> adj) {
  const int n = static_cast<int>(adj.size());
  if (n < 3) {
    throw GraphError(GraphError::Kind::BadArgument,
                     "graph needs at least 3 vertices, got " + std::to_string(n));
  }
  const int d = static_cast<int>(adj[0].size());
  if (d < 2) {
    throw GraphError(GraphError::Kind::NonRegular,
                     "degree must be at least 2, got " + std::to_string(d));
  }
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(adj[v].size()) != d) {
      throw GraphError(GraphError::Kind::NonRegular,
                       "vertex " + std::to_string(v) + " has degree " +
                           std::to_string(adj[v].size()) + ", expected " +
                           std::to_string(d));
    }
    std::sort(adj[v].begin(), adj[v].end());
    for (int i = 0; i < d; ++i) {
      const VertexId w = adj[v][i];
      if (w < 0 || w >= n) {
        throw GraphError(GraphError::Kind::BadArgument,
                         "vertex " + std::to_string(v) + " lists neighbor " +
                             std::to_string(w) + " outside 0.." +
                             std::to_string(n - 1));
      }
      if (w == v) {
        throw GraphError(GraphError::Kind::SelfLoop,
                         "self-loop at vertex " + std::to_string(v));
      }
      if (i > 0 && adj[v][i - 1] == w) {
        throw GraphError(GraphError::Kind::DuplicateEdge,
                         "duplicate edge " + std::to_string(v) + "-" +
                             std::to_string(w));
      }
    }
  }

  RegularGraph g;
  g.degree_ = d;
  g.offsets_.resize(n + 1);
  g.flat_.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v) {
    g.offsets_[v] = g.flat_.size();
    g.flat_.insert(g.flat_.end(), adj[v].begin(), adj[v].end());
  }
  g.offsets_[n] = g.flat_.size();

  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (!g.slot_of(w, v)) {
        throw GraphError(GraphError::Kind::Asymmetric,
                         "edge " + std::to_string(v) + "-" + std::to_string(w) +
                             " has no mirror");
      }
    }
  }
  return g;
}

std::optional<int> RegularGraph::slot_of(VertexId tail, VertexId head) const {
  const auto nb = neighbors(tail);
  const auto it = std::lower_bound(nb.begin(), nb.end(), head);
  if (it == nb.end() || *it != head) return std::nullopt;
  return static_cast<int>(it - nb.begin());
}

int RegularGraph::reverse_edge(int edge) const {
  const VertexId tail = edge_tail(edge);
  const VertexId head = edge_head(edge);
  return head * degree_ + *slot_of(head, tail);
}

RegularGraph complete_graph(int n) {
  if (n < 3) {
    throw GraphError(GraphError::Kind::BadArgument,
                     "complete graph needs n >= 3, got " + std::to_string(n));
  }
  std::vector<std::vector<VertexId>> adj(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w = 0; w < n; ++w) {
      if (w != v) adj[v].push_back(w);
    }
  }
  return RegularGraph::from_adjacency(std::move(adj));
}

namespace {

// One pairing-model attempt: shuffle the n*d stubs, join them two by two,
// and give up (nullopt) on any self-loop or repeated edge. Stub s belongs
// to vertex s / d.
std::optional<std::vector<std::vector<VertexId>>> pairing_attempt(
    int n, int d, CounterRng& rng) {
  std::vector<int> stubs(static_cast<std::size_t>(n) * d);
  std::iota(stubs.begin(), stubs.end(), 0);
  for (std::size_t i = stubs.size() - 1; i > 0; --i) {
    std::swap(stubs[i], stubs[rng.below(i + 1)]);
  }

  std::vector<std::vector<VertexId>> adj(n);
  for (int v = 0; v < n; ++v) adj[v].reserve(d);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    const VertexId u = stubs[i] / d;
    const VertexId v = stubs[i + 1] / d;
    if (u == v) return std::nullopt;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      return std::nullopt;
    }
  }
  return adj;
}

void check_pairing_feasible(int n, int d) {
  if (static_cast<long long>(n) * d % 2 != 0) {
    throw GraphError(GraphError::Kind::InfeasibleDegree,
                     "n*d must be even (n=" + std::to_string(n) +
                         ", d=" + std::to_string(d) + ")");
  }
  if (d >= n) {
    throw GraphError(GraphError::Kind::InfeasibleDegree,
                     "need d < n (n=" + std::to_string(n) +
                         ", d=" + std::to_string(d) + ")");
  }
}

}  // namespace

RegularGraph random_regular(int n, int d, std::uint64_t seed, int max_restarts) {
  if (d < 3) {
    throw GraphError(GraphError::Kind::BadArgument,
                     "random_regular needs d >= 3, got " + std::to_string(d));
  }
  check_pairing_feasible(n, d);
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    CounterRng rng(seed, attempt);
    if (auto adj = pairing_attempt(n, d, rng)) {
      return RegularGraph::from_adjacency(std::move(*adj));
    }
  }
  throw GraphError(GraphError::Kind::GenerationTimeout,
                   "no simple pairing after " + std::to_string(max_restarts) +
                       " restarts (n=" + std::to_string(n) +
                       ", d=" + std::to_string(d) + ")");
}

DecoratedExpander cycle_decorated_expander(int num_cycles, int cycle_length,
                                           int d, std::uint64_t seed,
                                           int max_restarts) {
  if (num_cycles < 1 || cycle_length < 3) {
    throw GraphError(GraphError::Kind::BadArgument,
                     "need at least one cycle of length >= 3");
  }
  if (d < 4) {
    throw GraphError(GraphError::Kind::BadArgument,
                     "decorated graph needs d >= 4, got " + std::to_string(d));
  }
  const int n = num_cycles * cycle_length;
  const int layer_degree = d - 2;
  check_pairing_feasible(n, layer_degree);

  const int g = cycle_length;
  auto on_same_ring = [g](VertexId u, VertexId v) {
    if (u / g != v / g) return false;
    const int du = (u - v + g) % g;
    return du == 1 || du == g - 1;
  };

  int pairing_failures = 0;
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    CounterRng rng(seed, attempt);
    auto layer = pairing_attempt(n, layer_degree, rng);
    if (!layer) {
      ++pairing_failures;
      continue;
    }
    bool overlap = false;
    for (VertexId v = 0; v < n && !overlap; ++v) {
      for (VertexId w : (*layer)[v]) {
        if (on_same_ring(v, w)) {
          overlap = true;
          break;
        }
      }
    }
    if (overlap) continue;

    std::vector<std::vector<VertexId>> adj = std::move(*layer);
    for (VertexId v = 0; v < n; ++v) {
      const VertexId base = v - v % g;
      adj[v].push_back(base + (v % g + 1) % g);
      adj[v].push_back(base + (v % g + g - 1) % g);
    }
    return DecoratedExpander{RegularGraph::from_adjacency(std::move(adj)),
                             num_cycles, cycle_length};
  }
  if (pairing_failures == max_restarts) {
    throw GraphError(GraphError::Kind::GenerationTimeout,
                     "no simple layer pairing after " +
                         std::to_string(max_restarts) + " restarts");
  }
  throw GraphError(GraphError::Kind::OverlapTimeout,
                   "could not make the random layer edge-disjoint from the "
                   "cycles within " +
                       std::to_string(max_restarts) + " restarts");
}

std::optional<int> girth(const RegularGraph& g) {
  const int n = g.n();
  int best = -1;  // -1: no cycle found yet

  std::vector<int> depth(n);
  std::vector<VertexId> parent(n);
  std::deque<VertexId> queue;

  for (VertexId root = 0; root < n; ++root) {
    if (best == 3) break;  // cannot do better in a simple graph
    std::fill(depth.begin(), depth.end(), -1);
    depth[root] = 0;
    parent[root] = -1;
    queue.clear();
    queue.push_back(root);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      // any candidate from u has length >= 2 * depth[u], so stop once that
      // can no longer beat the best cycle seen so far
      if (best != -1 && 2 * depth[u] >= best) break;
      for (VertexId w : g.neighbors(u)) {
        if (depth[w] == -1) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          // non-tree edge: closes a cycle through the BFS tree
          const int len = depth[u] + depth[w] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

std::vector<int> bfs_distances(const RegularGraph& g, VertexId source) {
  std::vector<int> dist(g.n(), -1);
  std::deque<VertexId> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const RegularGraph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_bipartite(const RegularGraph& g) {
  const int n = g.n();
  std::vector<int> color(n, -1);
  std::deque<VertexId> queue;
  for (VertexId root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

SpacedSet spaced_set(const RegularGraph& g, int min_distance) {
  if (min_distance < 1) {
    throw GraphError(GraphError::Kind::BadArgument,
                     "spacing must be >= 1, got " + std::to_string(min_distance));
  }
  const int n = g.n();
  SpacedSet out;
  out.min_distance = min_distance;
  if (min_distance == 1) {
    out.vertices.resize(n);
    std::iota(out.vertices.begin(), out.vertices.end(), 0);
    return out;
  }

  // blocked[v]: v is within min_distance - 1 of an already selected vertex
  std::vector<char> blocked(n, 0);
  std::vector<int> depth(n);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (blocked[v]) continue;
    out.vertices.push_back(v);
    std::fill(depth.begin(), depth.end(), -1);
    depth[v] = 0;
    blocked[v] = 1;
    queue.clear();
    queue.push_back(v);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      if (depth[u] == min_distance - 1) continue;
      for (VertexId w : g.neighbors(u)) {
        if (depth[w] == -1) {
          depth[w] = depth[u] + 1;
          blocked[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return out;
}

}  // namespace nbwalk
