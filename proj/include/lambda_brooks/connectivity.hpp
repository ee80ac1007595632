#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lambda_brooks/errors.hpp"
#include "lambda_brooks/graph.hpp"

namespace lambda_brooks {

/// Edge cut (X, Y, F): X and Y partition V(G), F is every edge crossing
/// between them, and X_F / Y_F are the endpoints of F on each side.
struct EdgeCut {
  std::vector<Vertex> x;
  std::vector<Vertex> y;
  std::vector<Edge> f;
  std::vector<Vertex> x_boundary;
  std::vector<Vertex> y_boundary;

  EdgeCut swapped() const { return {y, x, f, y_boundary, x_boundary}; }
};

/// Builds the cut with the given X (any order, no repeats).
inline EdgeCut make_edge_cut(const Graph& g, std::span<const Vertex> x_side) {
  std::vector<char> in_x(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : x_side) {
    g.require_vertex(v);
    if (in_x[static_cast<std::size_t>(v)]) throw UsageError("make_edge_cut: repeated vertex");
    in_x[static_cast<std::size_t>(v)] = 1;
  }
  EdgeCut cut;
  std::vector<char> xb(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> yb(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) (in_x[static_cast<std::size_t>(v)] ? cut.x : cut.y).push_back(v);
  for (const Edge& e : g.edges()) {
    if (in_x[static_cast<std::size_t>(e.u)] == in_x[static_cast<std::size_t>(e.v)]) continue;
    cut.f.push_back(e);
    const Vertex xs = in_x[static_cast<std::size_t>(e.u)] ? e.u : e.v;
    xb[static_cast<std::size_t>(xs)] = 1;
    yb[static_cast<std::size_t>(e.other(xs))] = 1;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (xb[static_cast<std::size_t>(v)]) cut.x_boundary.push_back(v);
    if (yb[static_cast<std::size_t>(v)]) cut.y_boundary.push_back(v);
  }
  return cut;
}

/// True when `cut` satisfies every EdgeCut invariant with respect to g.
inline bool is_valid_edge_cut(const Graph& g, const EdgeCut& cut) {
  if (cut.x.empty() || cut.y.empty()) return false;
  if (static_cast<int>(cut.x.size() + cut.y.size()) != g.order()) return false;
  for (Vertex v : cut.x)
    if (!g.contains(v)) return false;
  for (Vertex v : cut.y)
    if (!g.contains(v)) return false;
  EdgeCut rebuilt;
  try {
    rebuilt = make_edge_cut(g, cut.x);
  } catch (const UsageError&) {
    return false;
  }
  auto sorted = [](std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return sorted(cut.y) == rebuilt.y && cut.f == rebuilt.f && sorted(cut.x_boundary) == rebuilt.x_boundary &&
         sorted(cut.y_boundary) == rebuilt.y_boundary;
}

// ---------------------------------------------------------------------------
// Components and blocks

namespace detail {

/// Components of G minus the vertices flagged in `removed` and minus the
/// optional edge `skip`. Each component is sorted; components are ordered
/// by smallest member.
inline std::vector<std::vector<Vertex>> components_excluding(const Graph& g, const std::vector<char>& removed,
                                                             std::optional<Edge> skip = std::nullopt) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex r = 0; r < g.order(); ++r) {
    if (seen[static_cast<std::size_t>(r)] || removed[static_cast<std::size_t>(r)]) continue;
    std::vector<Vertex> comp{r};
    seen[static_cast<std::size_t>(r)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Vertex x = comp[i];
      for (Vertex y : g.neighbors(x)) {
        if (seen[static_cast<std::size_t>(y)] || removed[static_cast<std::size_t>(y)]) continue;
        if (skip && Edge(x, y) == *skip) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        comp.push_back(y);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Bridges of G minus the vertex `removed` (-1 for none), canonical order.
inline std::vector<Edge> bridges_excluding(const Graph& g, Vertex removed) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> out;
  int timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex r = 0; r < n; ++r) {
    if (r == removed || disc[static_cast<std::size_t>(r)] >= 0) continue;
    std::vector<Frame> stack{{r, -1, 0}};
    disc[static_cast<std::size_t>(r)] = low[static_cast<std::size_t>(r)] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const auto nb = g.neighbors(fr.v);
      if (fr.next < nb.size()) {
        const Vertex w = nb[fr.next++];
        if (w == removed || w == fr.parent) continue;
        if (disc[static_cast<std::size_t>(w)] < 0) {
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, fr.v, 0});
        } else {
          low[static_cast<std::size_t>(fr.v)] =
              std::min(low[static_cast<std::size_t>(fr.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        const Vertex v = fr.v;
        const Vertex p = fr.parent;
        stack.pop_back();
        if (p >= 0) {
          low[static_cast<std::size_t>(p)] =
              std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
          if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)]) out.emplace_back(p, v);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  return detail::components_excluding(g, std::vector<char>(static_cast<std::size_t>(g.order()), 0));
}

struct BlockDecomposition {
  /// Sorted vertex sets, ordered lexicographically. Isolated vertices and
  /// bridges form their own blocks.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;
  /// Block-cut tree incidences (block index, cut vertex), sorted.
  std::vector<std::pair<int, Vertex>> tree;
};

/// Biconnected components by DFS low-points.
inline BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  int timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  auto pop_block = [&](Vertex u, Vertex w) {
    std::vector<Vertex> block;
    while (true) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.u);
      block.push_back(e.v);
      if (e == Edge(u, w)) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    out.blocks.push_back(std::move(block));
  };
  for (Vertex r = 0; r < n; ++r) {
    if (disc[static_cast<std::size_t>(r)] >= 0) continue;
    if (g.degree(r) == 0) {
      disc[static_cast<std::size_t>(r)] = timer++;
      out.blocks.push_back({r});
      continue;
    }
    std::vector<Frame> stack{{r, -1, 0}};
    disc[static_cast<std::size_t>(r)] = low[static_cast<std::size_t>(r)] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const auto nb = g.neighbors(fr.v);
      if (fr.next < nb.size()) {
        const Vertex w = nb[fr.next++];
        if (w == fr.parent) continue;
        if (disc[static_cast<std::size_t>(w)] < 0) {
          edge_stack.emplace_back(fr.v, w);
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, fr.v, 0});
        } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(fr.v)]) {
          edge_stack.emplace_back(fr.v, w);
          low[static_cast<std::size_t>(fr.v)] =
              std::min(low[static_cast<std::size_t>(fr.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        const Vertex v = fr.v;
        const Vertex p = fr.parent;
        stack.pop_back();
        if (p >= 0) {
          low[static_cast<std::size_t>(p)] =
              std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
          if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) pop_block(p, v);
        }
      }
    }
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  std::vector<int> membership(static_cast<std::size_t>(n), 0);
  for (const auto& b : out.blocks)
    for (Vertex v : b) ++membership[static_cast<std::size_t>(v)];
  for (Vertex v = 0; v < n; ++v)
    if (membership[static_cast<std::size_t>(v)] > 1) out.cut_vertices.push_back(v);
  for (std::size_t i = 0; i < out.blocks.size(); ++i)
    for (Vertex v : out.blocks[i])
      if (membership[static_cast<std::size_t>(v)] > 1) out.tree.emplace_back(static_cast<int>(i), v);
  std::sort(out.tree.begin(), out.tree.end());
  return out;
}

/// Connected, at least two vertices, and no cut vertex.
inline bool is_biconnected(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return false;
  return block_decomposition(g).cut_vertices.empty();
}

// ---------------------------------------------------------------------------
// Local edge connectivity

struct LocalCut {
  int value = 0;
  EdgeCut cut;
};

/// λ_G(u, v) by unit-capacity augmenting paths. Each undirected edge carries
/// a net flow in {-1, 0, +1}; the returned cut has X = vertices reachable
/// from u in the final residual network, so |F| == value.
inline LocalCut local_edge_connectivity(const Graph& g, Vertex u, Vertex v) {
  g.require_vertex(u);
  g.require_vertex(v);
  if (u == v) throw UsageError("local_edge_connectivity: u == v");
  const int n = g.order();
  const std::vector<Edge> edges = g.edges();
  // incidence[x] = (neighbor, edge index)
  std::vector<std::vector<std::pair<Vertex, int>>> incidence(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incidence[static_cast<std::size_t>(edges[i].u)].emplace_back(edges[i].v, static_cast<int>(i));
    incidence[static_cast<std::size_t>(edges[i].v)].emplace_back(edges[i].u, static_cast<int>(i));
  }
  std::vector<int> flow(edges.size(), 0);  // + means from edges[i].u to edges[i].v
  auto residual = [&](Vertex from, int ei) {
    return from == edges[static_cast<std::size_t>(ei)].u ? 1 - flow[static_cast<std::size_t>(ei)]
                                                         : 1 + flow[static_cast<std::size_t>(ei)];
  };
  std::vector<int> via(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n));
  auto search = [&]() {
    std::fill(seen.begin(), seen.end(), 0);
    std::deque<Vertex> queue{u};
    seen[static_cast<std::size_t>(u)] = 1;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const auto& [y, ei] : incidence[static_cast<std::size_t>(x)]) {
        if (seen[static_cast<std::size_t>(y)] || residual(x, ei) <= 0) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        via[static_cast<std::size_t>(y)] = ei;
        if (y == v) return true;
        queue.push_back(y);
      }
    }
    return false;
  };
  int value = 0;
  while (search()) {
    for (Vertex y = v; y != u;) {
      const int ei = via[static_cast<std::size_t>(y)];
      const Edge& e = edges[static_cast<std::size_t>(ei)];
      const Vertex x = e.other(y);
      flow[static_cast<std::size_t>(ei)] += (x == e.u) ? 1 : -1;
      y = x;
    }
    ++value;
  }
  std::vector<Vertex> reachable;
  for (Vertex x = 0; x < n; ++x)
    if (seen[static_cast<std::size_t>(x)]) reachable.push_back(x);
  return {value, make_edge_cut(g, reachable)};
}

struct LambdaMax {
  int value = 0;
  std::optional<std::pair<Vertex, Vertex>> pair;
};

/// λ(G) = max over vertex pairs of λ_G(u, v); 0 when n <= 1. Ties go to
/// the lexicographically smallest pair.
inline LambdaMax lambda_max(const Graph& g) {
  LambdaMax best;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b) {
      // λ_G(a,b) <= min degree, so pairs that cannot beat the incumbent are skipped.
      if (best.pair && std::min(g.degree(a), g.degree(b)) <= best.value) continue;
      const int value = local_edge_connectivity(g, a, b).value;
      if (!best.pair || value > best.value) best = {value, std::pair{a, b}};
    }
  return best;
}

// ---------------------------------------------------------------------------
// Separators

/// A vertex v and an edge e = w1w2 (v not on e) whose joint removal splits a
/// connected graph into two parts. `part1` contains w1, `part2` contains
/// w2, and both contain v.
struct VertexEdgeSeparator {
  Vertex v = 0;
  Edge e;
  Vertex w1 = 0;
  Vertex w2 = 0;
  std::vector<Vertex> part1;
  std::vector<Vertex> part2;
};

/// Scans v in id order and returns the first (v, e) where G - v is
/// connected and e is a bridge of G - v (smallest such bridge). Cut
/// vertices of G are skipped: removing them already splits G and no
/// two-part split exists.
inline std::optional<VertexEdgeSeparator> find_vertex_edge_separator(const Graph& g) {
  if (!is_connected(g)) throw UsageError("find_vertex_edge_separator: graph is disconnected");
  if (g.order() < 3) return std::nullopt;
  std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    removed[static_cast<std::size_t>(v)] = 1;
    if (detail::components_excluding(g, removed).size() == 1) {
      const auto bridges = detail::bridges_excluding(g, v);
      if (!bridges.empty()) {
        const Edge e = bridges.front();
        const auto comps = detail::components_excluding(g, removed, e);
        VertexEdgeSeparator sep;
        sep.v = v;
        sep.e = e;
        sep.w1 = e.u;
        sep.w2 = e.v;
        const auto& side1 = std::binary_search(comps[0].begin(), comps[0].end(), e.u) ? comps[0] : comps[1];
        std::vector<char> in1(static_cast<std::size_t>(g.order()), 0);
        for (Vertex x : side1) in1[static_cast<std::size_t>(x)] = 1;
        for (Vertex x = 0; x < g.order(); ++x) {
          if (x == v) {
            sep.part1.push_back(x);
            sep.part2.push_back(x);
          } else {
            (in1[static_cast<std::size_t>(x)] ? sep.part1 : sep.part2).push_back(x);
          }
        }
        return sep;
      }
    }
    removed[static_cast<std::size_t>(v)] = 0;
  }
  return std::nullopt;
}

struct TwoCutSplit {
  Subgraph first;   // G[V(H_1) ∪ S]
  Subgraph second;  // G[V(H_2) ∪ S]; all remaining components when flagged
  bool extra_components = false;
};

/// Splits G along a separating pair S = {a, b}. H_1 is the component of
/// G - S with the smallest vertex; everything else goes to the second side
/// and `extra_components` is set when G - S has more than two components.
inline TwoCutSplit decompose_at_2cut(const Graph& g, Vertex a, Vertex b) {
  g.require_vertex(a);
  g.require_vertex(b);
  if (a == b) throw UsageError("decompose_at_2cut: S needs two distinct vertices");
  std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
  removed[static_cast<std::size_t>(a)] = removed[static_cast<std::size_t>(b)] = 1;
  const auto comps = detail::components_excluding(g, removed);
  if (comps.size() < 2) throw DomainError("decompose_at_2cut: S does not separate the graph");
  std::vector<Vertex> first = comps[0];
  std::vector<Vertex> second;
  for (std::size_t i = 1; i < comps.size(); ++i) second.insert(second.end(), comps[i].begin(), comps[i].end());
  for (Vertex s : {a, b}) {
    first.push_back(s);
    second.push_back(s);
  }
  return {induced_subgraph(g, first), induced_subgraph(g, second), comps.size() > 2};
}

struct HighVertexCut {
  Vertex u = 0;        // in cut.x
  Vertex u_prime = 0;  // in cut.y
  EdgeCut cut;
};

/// Minimum u-u' cut between the two smallest-id vertices of degree > k,
/// oriented so that |X_F| <= |Y_F|. Absent when fewer than two vertices
/// have degree > k.
inline std::optional<HighVertexCut> min_cut_between_high_vertices(const Graph& g, int k) {
  std::vector<Vertex> high;
  for (Vertex v = 0; v < g.order() && high.size() < 2; ++v)
    if (g.degree(v) > k) high.push_back(v);
  if (high.size() < 2) return std::nullopt;
  LocalCut lc = local_edge_connectivity(g, high[0], high[1]);
  if (lc.cut.x_boundary.size() > lc.cut.y_boundary.size()) return HighVertexCut{high[1], high[0], lc.cut.swapped()};
  return HighVertexCut{high[0], high[1], std::move(lc.cut)};
}

}  // namespace lambda_brooks
