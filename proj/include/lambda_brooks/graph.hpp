#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lambda_brooks/errors.hpp"

namespace lambda_brooks {

using Vertex = int;

/// Undirected edge, stored with the smaller endpoint first.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency sets.
/// Immutable once built; use GraphBuilder or Graph::from_edges to create one.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(check_order(n)) {}

  /// Builds a graph from an edge list. Repeated edges collapse; loops and
  /// out-of-range ids are rejected.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return m_; }
  bool empty() const { return adj_.empty(); }

  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    require_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(Vertex a, Vertex b) const {
    require_vertex(a);
    require_vertex(b);
    const auto& row = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
  }

  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  /// All edges in canonical (lexicographic) order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex a = 0; a < order(); ++a)
      for (Vertex b : adj_[static_cast<std::size_t>(a)])
        if (a < b) out.emplace_back(a, b);
    return out;
  }

  void require_vertex(Vertex v) const {
    if (!contains(v))
      throw UsageError("vertex id " + std::to_string(v) + " out of range for graph of order " +
                       std::to_string(order()));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;

  static std::size_t check_order(int n) {
    if (n < 0) throw UsageError("negative vertex count");
    return static_cast<std::size_t>(n);
  }

  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
};

/// Accumulates edges, then produces an immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : n_(n) {
    if (n < 0) throw UsageError("negative vertex count");
  }

  /// Starts from an existing graph's edge set.
  explicit GraphBuilder(const Graph& g) : n_(g.order()), edges_(g.edges()) {}

  int order() const { return n_; }

  GraphBuilder& add_edge(Vertex a, Vertex b) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
      throw UsageError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") out of range for order " + std::to_string(n_));
    if (a == b) throw UsageError("loop at vertex " + std::to_string(a));
    edges_.emplace_back(a, b);
    return *this;
  }

  GraphBuilder& add_edge(const Edge& e) { return add_edge(e.u, e.v); }

  Graph build() const {
    Graph g(n_);
    std::vector<Edge> es = edges_;
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (const Edge& e : es) {
      g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
      g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    g.m_ = static_cast<int>(es.size());
    return g;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
};

inline Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

/// An induced (or derived) graph together with the id of each of its
/// vertices in the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  std::vector<Vertex> lift(std::span<const Vertex> local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex x : local) out.push_back(to_parent[static_cast<std::size_t>(x)]);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Elementary queries

inline int degree(const Graph& g, Vertex v) { return g.degree(v); }

struct DegreeExtremes {
  int min_degree = 0;
  int max_degree = 0;
  friend bool operator==(const DegreeExtremes&, const DegreeExtremes&) = default;
};

/// (δ, Δ); the empty graph yields (0, 0).
inline DegreeExtremes degree_extremes(const Graph& g) {
  if (g.empty()) return {};
  DegreeExtremes d{g.degree(0), g.degree(0)};
  for (Vertex v = 1; v < g.order(); ++v) {
    d.min_degree = std::min(d.min_degree, g.degree(v));
    d.max_degree = std::max(d.max_degree, g.degree(v));
  }
  return d;
}

struct ColoringNumber {
  int value = 1;
  /// Vertices in the order they were removed (always a current minimum
  /// degree vertex, smallest id first). Greedy coloring in reverse order
  /// uses at most `value` colors.
  std::vector<Vertex> elimination_order;
};

/// col(G) = 1 + max over subgraphs of the minimum degree.
inline ColoringNumber coloring_number(const Graph& g) {
  const int n = g.order();
  ColoringNumber out;
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  int degeneracy = 0;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[static_cast<std::size_t>(v)] &&
          (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
        best = v;
    degeneracy = std::max(degeneracy, deg[static_cast<std::size_t>(best)]);
    removed[static_cast<std::size_t>(best)] = true;
    out.elimination_order.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!removed[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
  }
  out.value = degeneracy + 1;
  return out;
}

/// G[S]. Vertex i of the result is the i-th smallest member of S.
inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw UsageError("induced_subgraph: repeated vertex id");
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    g.require_vertex(sorted[i]);
    local[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  }
  GraphBuilder b(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (Vertex w : g.neighbors(sorted[i])) {
      const int j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) b.add_edge(static_cast<Vertex>(i), j);
    }
  return {b.build(), std::move(sorted)};
}

/// G plus the given edges (already-present edges are ignored).
inline Graph with_edges(const Graph& g, std::span<const Edge> extra) {
  GraphBuilder b(g);
  for (const Edge& e : extra) b.add_edge(e);
  return b.build();
}

/// G with every pair inside S made adjacent.
inline Graph add_clique(const Graph& g, std::span<const Vertex> s) {
  GraphBuilder b(g);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] != s[j]) b.add_edge(s[i], s[j]);
  return b.build();
}

/// Renames vertex v to perm[v]; perm must be a permutation of 0..n-1.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw UsageError("relabel: size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || seen[static_cast<std::size_t>(p)])
      throw UsageError("relabel: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges())
    b.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return b.build();
}

/// Vertex-disjoint union; the second graph's ids are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
  return out.build();
}

// ---------------------------------------------------------------------------
// Structural predicates

inline bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x))
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == g.order();
}

inline bool is_odd_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3 || n % 2 == 0 || g.size() != n) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

inline bool is_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3 || g.size() != n) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

/// Returns a hub h (smallest id that works) when G - h is an odd cycle and
/// h is adjacent to every other vertex. K_4 is the wheel with rim 3.
inline std::optional<Vertex> is_odd_wheel(const Graph& g) {
  const int n = g.order();
  if (n < 4 || n % 2 != 0) return std::nullopt;
  for (Vertex h = 0; h < n; ++h) {
    if (g.degree(h) != n - 1) continue;
    std::vector<Vertex> rim;
    for (Vertex v = 0; v < n; ++v)
      if (v != h) rim.push_back(v);
    if (is_odd_cycle(induced_subgraph(g, rim).graph)) return h;
  }
  return std::nullopt;
}

/// Checks the representation invariants (symmetry, no loops, sorted sets,
/// edge count). Graphs produced by this library always pass.
inline bool validate(const Graph& g) {
  long long degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    degree_sum += static_cast<long long>(nb.size());
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (!g.contains(nb[i]) || nb[i] == v) return false;
      if (i > 0 && nb[i - 1] >= nb[i]) return false;
      const auto back = g.neighbors(nb[i]);
      if (!std::binary_search(back.begin(), back.end(), v)) return false;
    }
  }
  return degree_sum == 2LL * g.size();
}

// ---------------------------------------------------------------------------
// Named graphs

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw UsageError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

/// Hub 0 joined to the rim cycle 1..rim.
inline Graph wheel_graph(int rim) {
  if (rim < 3) throw UsageError("wheel rim needs at least 3 vertices");
  GraphBuilder b(rim + 1);
  for (Vertex i = 1; i <= rim; ++i) {
    b.add_edge(0, i);
    b.add_edge(i, i % rim + 1);
  }
  return b.build();
}

/// Star K_{1,leaves} with center 0.
inline Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return b.build();
}

inline Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

}  // namespace lambda_brooks
