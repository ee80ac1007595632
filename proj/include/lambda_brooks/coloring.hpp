#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lambda_brooks/connectivity.hpp"
#include "lambda_brooks/errors.hpp"
#include "lambda_brooks/graph.hpp"
#include "lambda_brooks/matching.hpp"

namespace lambda_brooks {

/// Vertex coloring with palette {1..k}; colors[v] is the color of v.
struct Coloring {
  int k = 0;
  std::vector<int> colors;

  int operator[](Vertex v) const { return colors[static_cast<std::size_t>(v)]; }

  /// Number of distinct colors actually used.
  int used() const {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// True iff no edge is monochromatic and every color lies in {1..k}.
/// Throws UsageError when the assignment is partial (size mismatch or a
/// color <= 0).
inline bool is_proper(const Graph& g, const Coloring& f) {
  if (static_cast<int>(f.colors.size()) != g.order()) throw UsageError("is_proper: coloring size != graph order");
  for (int c : f.colors)
    if (c <= 0) throw UsageError("is_proper: partial assignment");
  for (int c : f.colors)
    if (c > f.k) return false;
  for (const Edge& e : g.edges())
    if (f[e.u] == f[e.v]) return false;
  return true;
}

/// Smallest-available-color greedy along `order`.
inline Coloring greedy_coloring(const Graph& g, std::span<const Vertex> order) {
  Coloring f{0, std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
  std::vector<char> taken;
  for (Vertex v : order) {
    taken.assign(static_cast<std::size_t>(g.degree(v)) + 2, 0);
    for (Vertex w : g.neighbors(v))
      if (int c = f[w]; c > 0 && c < static_cast<int>(taken.size())) taken[static_cast<std::size_t>(c)] = 1;
    int c = 1;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    f.colors[static_cast<std::size_t>(v)] = c;
    f.k = std::max(f.k, c);
  }
  return f;
}

/// Applies the bijection pi (pi[c-1] is the new color of c) to f.
inline Coloring permute_colors(const Coloring& f, std::span<const int> pi) {
  if (static_cast<int>(pi.size()) != f.k) throw UsageError("permute_colors: permutation size != palette");
  std::vector<char> seen(pi.size() + 1, 0);
  for (int c : pi) {
    if (c < 1 || c > f.k || seen[static_cast<std::size_t>(c)]) throw UsageError("permute_colors: not a bijection");
    seen[static_cast<std::size_t>(c)] = 1;
  }
  Coloring out = f;
  for (int& c : out.colors) {
    if (c < 1 || c > f.k) throw UsageError("permute_colors: color outside palette");
    c = pi[static_cast<std::size_t>(c - 1)];
  }
  return out;
}

/// Exchanges colors a and b everywhere.
inline void swap_colors(Coloring& f, int a, int b) {
  if (a == b) return;
  for (int& c : f.colors) {
    if (c == a)
      c = b;
    else if (c == b)
      c = a;
  }
}

// ---------------------------------------------------------------------------
// Exact oracle

struct OracleLimits {
  int max_vertices = 26;
};

namespace detail {

// DSATUR backtracking: branch on the uncolored vertex of largest
// saturation (ties: larger degree, then smaller id); a fresh color is only
// tried once per node since all unused colors are interchangeable.
class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, int k)
      : g_(g),
        k_(k),
        n_(g.order()),
        color_(static_cast<std::size_t>(n_), 0),
        sat_(static_cast<std::size_t>(n_), 0),
        count_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k + 1), 0) {}

  bool run() { return n_ == 0 || (k_ > 0 && extend(0, 0)); }

  const std::vector<int>& colors() const { return color_; }

 private:
  int& count(Vertex v, int c) {
    return count_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_ + 1) + static_cast<std::size_t>(c)];
  }

  Vertex pick() const {
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[static_cast<std::size_t>(v)]) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      const int sv = sat_[static_cast<std::size_t>(v)];
      const int sb = sat_[static_cast<std::size_t>(best)];
      if (sv > sb || (sv == sb && g_.degree(v) > g_.degree(best))) best = v;
    }
    return best;
  }

  void assign(Vertex v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    for (Vertex w : g_.neighbors(v))
      if (count(w, c)++ == 0) ++sat_[static_cast<std::size_t>(w)];
  }

  void unassign(Vertex v, int c) {
    color_[static_cast<std::size_t>(v)] = 0;
    for (Vertex w : g_.neighbors(v))
      if (--count(w, c) == 0) --sat_[static_cast<std::size_t>(w)];
  }

  bool extend(int colored, int used) {
    if (colored == n_) return true;
    const Vertex v = pick();
    if (sat_[static_cast<std::size_t>(v)] >= k_) return false;
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      if (count(v, c)) continue;
      assign(v, c);
      if (extend(colored + 1, std::max(used, c))) return true;
      unassign(v, c);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  int n_;
  std::vector<int> color_;
  std::vector<int> sat_;
  std::vector<int> count_;
};

inline void check_limit(const Graph& g, const OracleLimits& limits) {
  if (g.order() > limits.max_vertices)
    throw ResourceError("exact oracle limited to " + std::to_string(limits.max_vertices) + " vertices (graph has " +
                        std::to_string(g.order()) + ")");
}

inline int greedy_clique_size(const Graph& g) {
  int best = g.empty() ? 0 : 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> cand(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    std::vector<Vertex> clique{v};
    for (Vertex w : cand)
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return g.adjacent(x, w); })) clique.push_back(w);
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

}  // namespace detail

/// A proper coloring with at most k colors, or nothing if none exists.
/// Components are searched independently.
inline std::optional<Coloring> exact_k_colorable(const Graph& g, int k, const OracleLimits& limits = {}) {
  detail::check_limit(g, limits);
  if (k < 0) throw UsageError("exact_k_colorable: negative k");
  Coloring f{k, std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
  for (const auto& comp : connected_components(g)) {
    const Subgraph sub = induced_subgraph(g, comp);
    detail::DsaturSearch search(sub.graph, k);
    if (!search.run()) return std::nullopt;
    for (std::size_t i = 0; i < comp.size(); ++i)
      f.colors[static_cast<std::size_t>(sub.to_parent[i])] = search.colors()[i];
  }
  return f;
}

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

/// χ(G) with a witness coloring using exactly χ colors.
inline ChromaticResult exact_chromatic(const Graph& g, const OracleLimits& limits = {}) {
  detail::check_limit(g, limits);
  ChromaticResult out{0, Coloring{0, std::vector<int>(static_cast<std::size_t>(g.order()), 0)}};
  for (const auto& comp : connected_components(g)) {
    const Subgraph sub = induced_subgraph(g, comp);
    int k = std::max(out.chi, detail::greedy_clique_size(sub.graph));
    while (true) {
      detail::DsaturSearch search(sub.graph, k);
      if (search.run()) {
        for (std::size_t i = 0; i < comp.size(); ++i)
          out.coloring.colors[static_cast<std::size_t>(sub.to_parent[i])] = search.colors()[i];
        break;
      }
      ++k;
    }
    out.chi = k;
  }
  out.coloring.k = out.chi;
  return out;
}

/// Every proper subgraph has smaller chromatic number. Checked edge by edge:
/// with no isolated vertices, deleting a vertex is dominated by deleting
/// one of its edges.
inline bool is_critical(const Graph& g, const OracleLimits& limits = {}) {
  detail::check_limit(g, limits);
  if (g.empty()) return true;
  if (g.size() == 0) return g.order() == 1;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return false;
  const int chi = exact_chromatic(g, limits).chi;
  for (const Edge& e : g.edges()) {
    std::vector<Edge> rest;
    for (const Edge& x : g.edges())
      if (x != e) rest.push_back(x);
    if (!exact_k_colorable(Graph::from_edges(g.order(), rest), chi - 1, limits)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Structure used by the Brooks/Gallai arguments

struct LowHighSplit {
  Subgraph low;                 // induced by vertices of degree exactly k
  Subgraph high;                // induced by vertices of degree > k
  std::vector<Vertex> below_k;  // vertices of degree < k, if any
};

inline LowHighSplit low_high_split(const Graph& g, int k) {
  std::vector<Vertex> low;
  std::vector<Vertex> high;
  LowHighSplit out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == k)
      low.push_back(v);
    else if (g.degree(v) > k)
      high.push_back(v);
    else
      out.below_k.push_back(v);
  }
  out.low = induced_subgraph(g, low);
  out.high = induced_subgraph(g, high);
  return out;
}

enum class BlockShape { complete, odd_cycle, other };

inline std::string_view to_string(BlockShape s) {
  switch (s) {
    case BlockShape::complete: return "complete";
    case BlockShape::odd_cycle: return "odd_cycle";
    case BlockShape::other: return "other";
  }
  return "?";
}

struct BlockClass {
  std::vector<Vertex> vertices;
  BlockShape shape = BlockShape::other;
};

inline std::vector<BlockClass> classify_blocks(const Graph& g) {
  std::vector<BlockClass> out;
  for (const auto& b : block_decomposition(g).blocks) {
    const Graph sub = induced_subgraph(g, b).graph;
    BlockShape shape = BlockShape::other;
    if (is_complete(sub))
      shape = BlockShape::complete;
    else if (is_odd_cycle(sub))
      shape = BlockShape::odd_cycle;
    out.push_back({b, shape});
  }
  return out;
}

struct GallaiForestReport {
  bool is_gallai_forest = true;
  std::vector<BlockClass> blocks;
};

/// Every block complete or an odd cycle.
inline GallaiForestReport gallai_forest_report(const Graph& g) {
  GallaiForestReport r;
  r.blocks = classify_blocks(g);
  r.is_gallai_forest = std::none_of(r.blocks.begin(), r.blocks.end(),
                                    [](const BlockClass& b) { return b.shape == BlockShape::other; });
  return r;
}

inline bool is_gallai_forest(const Graph& g) { return gallai_forest_report(g).is_gallai_forest; }

// ---------------------------------------------------------------------------
// Degree list coloring

struct ListAssignment {
  std::vector<std::vector<int>> lists;  // lists[v], sorted, colors >= 1
};

/// Emitted when no coloring was produced: all lists are tight
/// (|L(u)| = d(u)) and every block is complete or an odd cycle.
struct GallaiTreeReport {
  std::vector<BlockClass> blocks;
  bool tight = true;
};

namespace detail {

inline bool list_contains(const std::vector<int>& list, int c) { return std::binary_search(list.begin(), list.end(), c); }

// Colors every uncolored vertex of `allowed` reachable from `root` in
// reverse BFS order (farthest first); the root is colored last and only if
// `color_root`. Each vertex takes the smallest list color unused by its
// colored neighbors. Returns false if some vertex had no free color.
inline bool greedy_toward(const Graph& h, const std::vector<std::vector<int>>& lists, std::vector<int>& color,
                          Vertex root, const std::vector<char>& allowed, bool color_root = true) {
  std::vector<Vertex> order{root};
  std::vector<char> seen(static_cast<std::size_t>(h.order()), 0);
  seen[static_cast<std::size_t>(root)] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : h.neighbors(order[i]))
      if (!seen[static_cast<std::size_t>(w)] && allowed[static_cast<std::size_t>(w)] &&
          color[static_cast<std::size_t>(w)] == 0) {
        seen[static_cast<std::size_t>(w)] = 1;
        order.push_back(w);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex x = *it;
    if (x == root && !color_root) continue;
    int chosen = 0;
    for (int c : lists[static_cast<std::size_t>(x)]) {
      bool clash = false;
      for (Vertex w : h.neighbors(x))
        if (color[static_cast<std::size_t>(w)] == c) {
          clash = true;
          break;
        }
      if (!clash) {
        chosen = c;
        break;
      }
    }
    if (chosen == 0) return false;
    color[static_cast<std::size_t>(x)] = chosen;
  }
  return true;
}

// 2-connected B (at least 4 vertices, not complete, not an odd cycle) with
// |L(u)| >= d_B(u). Always colorable; returns false only on a logic error.
inline bool color_two_connected(const Graph& b, std::vector<std::vector<int>> lists, std::vector<int>& color) {
  const int n = b.order();
  std::vector<char> all(static_cast<std::size_t>(n), 1);
  for (Vertex x = 0; x < n; ++x)
    if (static_cast<int>(lists[static_cast<std::size_t>(x)].size()) > b.degree(x))
      return greedy_toward(b, lists, color, x, all);

  // Two adjacent vertices with different lists: give y a color outside
  // L(x); x then has slack in B - y.
  for (const Edge& e : b.edges()) {
    const auto& lu = lists[static_cast<std::size_t>(e.u)];
    const auto& lv = lists[static_cast<std::size_t>(e.v)];
    if (lu == lv) continue;
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const auto& lx = lists[static_cast<std::size_t>(x)];
      for (int c : lists[static_cast<std::size_t>(y)])
        if (!list_contains(lx, c)) {
          color[static_cast<std::size_t>(y)] = c;
          std::vector<char> rest = all;
          rest[static_cast<std::size_t>(y)] = 0;
          return greedy_toward(b, lists, color, x, rest);
        }
    }
  }

  // Identical tight lists, so B is regular of degree r = |L|.
  const std::vector<int>& palette = lists[0];
  if (palette.size() == 2) {  // even cycle
    Vertex prev = -1;
    Vertex cur = 0;
    for (int i = 0; i < n; ++i) {
      color[static_cast<std::size_t>(cur)] = palette[static_cast<std::size_t>(i % 2)];
      const auto nb = b.neighbors(cur);
      const Vertex next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    }
    return true;
  }
  // Brooks configuration: v with non-adjacent neighbors a, b such that
  // B - a - b stays connected; a and b share a color, v is colored last.
  for (Vertex v = 0; v < n; ++v) {
    const auto nb = b.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex a = nb[i];
        const Vertex c = nb[j];
        if (b.adjacent(a, c)) continue;
        std::vector<char> removed(static_cast<std::size_t>(n), 0);
        removed[static_cast<std::size_t>(a)] = removed[static_cast<std::size_t>(c)] = 1;
        if (components_excluding(b, removed).size() != 1) continue;
        color[static_cast<std::size_t>(a)] = color[static_cast<std::size_t>(c)] = palette[0];
        std::vector<char> rest = all;
        rest[static_cast<std::size_t>(a)] = rest[static_cast<std::size_t>(c)] = 0;
        return greedy_toward(b, lists, color, v, rest);
      }
  }
  return false;
}

}  // namespace detail

/// Colors a connected graph H from lists with |L(u)| >= d_H(u).
///
/// A coloring is always returned unless every list is tight and every block
/// is complete or an odd cycle; in that case the Gallai-tree report comes
/// back instead (the instance may or may not be colorable then).
///
///  - a vertex with slack: greedy in reverse BFS order ending at it;
///  - otherwise pick a block B that is neither complete nor an odd cycle,
///    color the parts hanging off B toward their attachment vertex, and
///    finish B with the residual lists (slack vertex, two adjacent vertices
///    with different lists, or the Brooks triple for identical lists).
inline std::variant<Coloring, GallaiTreeReport> degree_list_color(const Graph& h, const ListAssignment& assignment) {
  const int n = h.order();
  if (static_cast<int>(assignment.lists.size()) != n) throw UsageError("degree_list_color: one list per vertex");
  if (!is_connected(h)) throw UsageError("degree_list_color: graph must be connected");
  std::vector<std::vector<int>> lists = assignment.lists;
  int palette = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto& l = lists[static_cast<std::size_t>(v)];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (l.empty() || l.front() < 1) throw UsageError("degree_list_color: lists must be non-empty, colors >= 1");
    if (static_cast<int>(l.size()) < h.degree(v))
      throw UsageError("degree_list_color: |L(" + std::to_string(v) + ")| < degree");
    palette = std::max(palette, l.back());
  }
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  auto finish = [&]() -> std::variant<Coloring, GallaiTreeReport> {
    Coloring f{palette, color};
    for (Vertex v = 0; v < n; ++v)
      if (!detail::list_contains(lists[static_cast<std::size_t>(v)], f[v]))
        throw InternalInconsistency("degree_list_color: color outside list", "{}");
    if (!is_proper(h, f)) throw InternalInconsistency("degree_list_color: improper result", "{}");
    return f;
  };
  if (n == 0) return Coloring{palette, {}};

  std::vector<char> all(static_cast<std::size_t>(n), 1);
  for (Vertex v = 0; v < n; ++v)
    if (static_cast<int>(lists[static_cast<std::size_t>(v)].size()) > h.degree(v)) {
      if (!detail::greedy_toward(h, lists, color, v, all))
        throw InternalInconsistency("degree_list_color: greedy from a slack vertex failed", "{}");
      return finish();
    }

  std::vector<BlockClass> blocks = classify_blocks(h);
  const auto target = std::find_if(blocks.begin(), blocks.end(),
                                   [](const BlockClass& b) { return b.shape == BlockShape::other; });
  if (target == blocks.end()) return GallaiTreeReport{std::move(blocks), true};

  const std::vector<Vertex>& core = target->vertices;
  std::vector<char> in_core(static_cast<std::size_t>(n), 0);
  for (Vertex v : core) in_core[static_cast<std::size_t>(v)] = 1;
  // Each component of H - B hangs off exactly one vertex of B.
  for (const auto& comp : detail::components_excluding(h, in_core)) {
    Vertex anchor = -1;
    for (Vertex x : comp)
      for (Vertex w : h.neighbors(x))
        if (in_core[static_cast<std::size_t>(w)]) anchor = w;
    std::vector<char> allowed(static_cast<std::size_t>(n), 0);
    for (Vertex x : comp) allowed[static_cast<std::size_t>(x)] = 1;
    allowed[static_cast<std::size_t>(anchor)] = 1;
    if (!detail::greedy_toward(h, lists, color, anchor, allowed, false))
      throw InternalInconsistency("degree_list_color: hanging part not colorable", "{}");
  }
  const Subgraph b = induced_subgraph(h, core);
  std::vector<std::vector<int>> residual;
  for (Vertex x : b.to_parent) {
    std::vector<int> l;
    for (int c : lists[static_cast<std::size_t>(x)]) {
      const auto nb = h.neighbors(x);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return color[static_cast<std::size_t>(w)] == c; }))
        l.push_back(c);
    }
    residual.push_back(std::move(l));
  }
  std::vector<int> local(static_cast<std::size_t>(b.graph.order()), 0);
  if (!detail::color_two_connected(b.graph, std::move(residual), local))
    throw InternalInconsistency("degree_list_color: 2-connected block not colorable", "{}");
  for (std::size_t i = 0; i < local.size(); ++i) color[static_cast<std::size_t>(b.to_parent[i])] = local[i];
  return finish();
}

// ---------------------------------------------------------------------------
// Merging colorings across an edge cut

/// Bijection pi on {1..k} (pi[j-1] = new color of Y-color j) such that no
/// conflict pair (x_color, y_color) has pi(y_color) == x_color. Found as a
/// perfect matching of Y-colors to X-colors in the complement of the
/// conflict relation; identity is preferred where allowed.
inline std::optional<std::vector<int>> find_merge_permutation(int k,
                                                              std::span<const std::pair<int, int>> conflicts) {
  std::vector<std::vector<char>> bad(static_cast<std::size_t>(k) + 1, std::vector<char>(static_cast<std::size_t>(k) + 1, 0));
  for (const auto& [cx, cy] : conflicts) {
    if (cx < 1 || cx > k || cy < 1 || cy > k) throw UsageError("find_merge_permutation: color outside palette");
    bad[static_cast<std::size_t>(cx)][static_cast<std::size_t>(cy)] = 1;
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    auto& row = adj[static_cast<std::size_t>(j - 1)];
    if (!bad[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]) row.push_back(j - 1);
    for (int i = 1; i <= k; ++i)
      if (i != j && !bad[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) row.push_back(i - 1);
  }
  const std::vector<int> match = max_bipartite_matching(adj, k);
  std::vector<int> pi;
  for (int m : match) {
    if (m < 0) return std::nullopt;
    pi.push_back(m + 1);
  }
  return pi;
}

/// Combines f_X (a coloring of G[X], indexed like the sorted cut.x) and f_Y
/// (of G[Y], indexed like cut.y) into a coloring of G by renaming the
/// colors of f_Y. Absent iff no renaming avoids every conflict on F.
inline std::optional<Coloring> merge_cut_colorings(const Graph& g, const EdgeCut& cut, const Coloring& fx,
                                                   const Coloring& fy) {
  if (!is_valid_edge_cut(g, cut)) throw UsageError("merge_cut_colorings: not an edge cut of the graph");
  if (fx.colors.size() != cut.x.size() || fy.colors.size() != cut.y.size())
    throw UsageError("merge_cut_colorings: coloring does not match its side");
  if (fx.k != fy.k) throw UsageError("merge_cut_colorings: palettes differ");
  const Subgraph gx = induced_subgraph(g, cut.x);
  const Subgraph gy = induced_subgraph(g, cut.y);
  if (!is_proper(gx.graph, fx) || !is_proper(gy.graph, fy))
    throw UsageError("merge_cut_colorings: side coloring is not proper");
  const int k = fx.k;
  std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> in_x(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < gx.to_parent.size(); ++i) {
    color[static_cast<std::size_t>(gx.to_parent[i])] = fx.colors[i];
    in_x[static_cast<std::size_t>(gx.to_parent[i])] = 1;
  }
  for (std::size_t i = 0; i < gy.to_parent.size(); ++i) color[static_cast<std::size_t>(gy.to_parent[i])] = fy.colors[i];
  std::vector<std::pair<int, int>> conflicts;
  for (const Edge& e : cut.f) {
    const Vertex x = in_x[static_cast<std::size_t>(e.u)] ? e.u : e.v;
    conflicts.emplace_back(color[static_cast<std::size_t>(x)], color[static_cast<std::size_t>(e.other(x))]);
  }
  const auto pi = find_merge_permutation(k, conflicts);
  if (!pi) return std::nullopt;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in_x[static_cast<std::size_t>(v)])
      color[static_cast<std::size_t>(v)] = (*pi)[static_cast<std::size_t>(color[static_cast<std::size_t>(v)] - 1)];
  return Coloring{k, std::move(color)};
}

}  // namespace lambda_brooks
