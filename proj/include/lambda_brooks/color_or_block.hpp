#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lambda_brooks/coloring.hpp"
#include "lambda_brooks/connectivity.hpp"
#include "lambda_brooks/errors.hpp"
#include "lambda_brooks/graph.hpp"
#include "lambda_brooks/hajos.hpp"
#include "lambda_brooks/io.hpp"

namespace lambda_brooks {

/// A block of G (ids in G) together with its H_k certificate (ids in G).
struct BlockWitness {
  std::vector<Vertex> block;
  HajosCertificate certificate;
};

/// Either a proper coloring with palette k or a block proving χ = k+1.
using ChiWitness = std::variant<Coloring, BlockWitness>;

inline bool is_coloring(const ChiWitness& w) { return std::holds_alternative<Coloring>(w); }

/// How often each branch of the procedure ran.
struct SolveTrace {
  int blocks = 0;
  int small_blocks = 0;
  int separator_joins = 0;
  int separator_colorings = 0;
  int list_colorings = 0;
  int complete_leaves = 0;
  int cut_both_small = 0;     // b <= k-1
  int cut_one_clique = 0;     // a < b = k
  int cut_two_cliques = 0;    // a = b = k
  int monochrome_restrictions = 0;  // restricted side used a single color
  int oracle_blocks = 0;
};

struct SolveOptions {
  OracleLimits limits;
  bool check_lambda = true;
  SolveTrace* trace = nullptr;
};

namespace detail {

class ColorOrBlockSolver {
 public:
  ColorOrBlockSolver(const Graph& root, int k, const SolveOptions& options)
      : root_(root), k_(k), options_(options) {}

  ChiWitness solve(const Graph& g) {
    return by_blocks(g, [&](const Graph& b) { return k_ >= 4 ? solve_block(b) : small_k_block(b); });
  }

 private:
  using BlockResult = std::variant<Coloring, HajosCertificate>;

  template <class F>
  void bump(F member) {
    if (options_.trace) ++(options_.trace->*member);
  }

  [[noreturn]] void fail(const std::string& stage, const Graph& sub) const {
    nlohmann::json repro = {{"graph", graph_to_json(root_)}, {"subgraph", graph_to_json(sub)}, {"k", k_},
                            {"stage", stage}};
    throw InternalInconsistency("color_or_find_hk_block: " + stage, repro.dump());
  }

  Coloring distinct_colors(const Graph& g) const {
    Coloring f{k_, {}};
    for (Vertex v = 0; v < g.order(); ++v) f.colors.push_back(v + 1);
    return f;
  }

  // Solves every block and aligns the block colorings at cut vertices by
  // walking the block-cut tree; the first certified block is returned.
  template <class BlockFn>
  ChiWitness by_blocks(const Graph& g, BlockFn&& block_fn) {
    const BlockDecomposition bd = block_decomposition(g);
    std::vector<Coloring> local;
    std::vector<Subgraph> subs;
    for (const auto& b : bd.blocks) {
      bump(&SolveTrace::blocks);
      Subgraph sub = induced_subgraph(g, b);
      BlockResult r = block_fn(sub.graph);
      if (auto* cert = std::get_if<HajosCertificate>(&r)) return BlockWitness{b, cert->mapped(sub.to_parent)};
      local.push_back(std::get<Coloring>(std::move(r)));
      subs.push_back(std::move(sub));
    }
    std::vector<std::vector<int>> blocks_at(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < bd.blocks.size(); ++i)
      for (Vertex x : bd.blocks[i]) blocks_at[static_cast<std::size_t>(x)].push_back(static_cast<int>(i));
    Coloring f{k_, std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
    std::vector<char> done(bd.blocks.size(), 0);
    auto place = [&](std::size_t i) {
      const Subgraph& sub = subs[i];
      Coloring& fb = local[i];
      for (std::size_t j = 0; j < sub.to_parent.size(); ++j)
        if (const int c = f.colors[static_cast<std::size_t>(sub.to_parent[j])]; c != 0) swap_colors(fb, fb.colors[j], c);
      for (std::size_t j = 0; j < sub.to_parent.size(); ++j)
        f.colors[static_cast<std::size_t>(sub.to_parent[j])] = fb.colors[j];
    };
    for (std::size_t start = 0; start < bd.blocks.size(); ++start) {
      if (done[start]) continue;
      std::deque<std::size_t> queue{start};
      done[start] = 1;
      place(start);
      while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (Vertex x : bd.blocks[i])
          for (int j : blocks_at[static_cast<std::size_t>(x)])
            if (!done[static_cast<std::size_t>(j)]) {
              done[static_cast<std::size_t>(j)] = 1;
              place(static_cast<std::size_t>(j));
              queue.push_back(static_cast<std::size_t>(j));
            }
      }
    }
    if (!is_proper(g, f)) fail("block alignment produced an improper coloring", g);
    return f;
  }

  // k <= 3: membership by the recognizer, colorings from 2-coloring or the
  // exact oracle.
  BlockResult small_k_block(const Graph& b) {
    if (auto cert = recognize_hk(b, k_)) return *cert;
    if (k_ == 1) {
      if (b.size() != 0) fail("non-member block with an edge for k = 1", b);
      return Coloring{k_, std::vector<int>(static_cast<std::size_t>(b.order()), 1)};
    }
    if (k_ == 2) {
      Coloring f{k_, std::vector<int>(static_cast<std::size_t>(b.order()), 0)};
      std::deque<Vertex> queue{0};
      f.colors[0] = 1;
      while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (Vertex w : b.neighbors(x))
          if (f[w] == 0) {
            f.colors[static_cast<std::size_t>(w)] = 3 - f[x];
            queue.push_back(w);
          }
      }
      if (!is_proper(b, f)) fail("non-member block is not bipartite for k = 2", b);
      return f;
    }
    bump(&SolveTrace::oracle_blocks);
    auto f = exact_k_colorable(b, k_, options_.limits);
    if (!f) fail("non-member block is not 3-colorable", b);
    return *f;
  }

  Coloring must_color(const Graph& g, const std::string& stage) {
    ChiWitness w = solve(g);
    if (auto* f = std::get_if<Coloring>(&w)) return std::move(*f);
    fail(stage + ": subproblem contains a member block", g);
  }

  BlockResult solve_block(const Graph& b) {
    if (b.order() <= k_) {
      bump(&SolveTrace::small_blocks);
      return distinct_colors(b);
    }
    if (auto sep = find_vertex_edge_separator(b)) return split_at_separator(b, *sep);
    int high = 0;
    for (Vertex v = 0; v < b.order(); ++v)
      if (b.degree(v) > k_) ++high;
    if (high <= 1) return list_color_around_max(b);
    return split_at_cut(b);
  }

  BlockResult split_at_separator(const Graph& b, const VertexEdgeSeparator& sep) {
    struct Side {
      Subgraph plain;
      Graph augmented;
      bool edge_present = false;
      std::optional<HajosCertificate> cert;
      Vertex v = 0;
      Vertex w = 0;
    };
    auto make = [&](const std::vector<Vertex>& part, Vertex w) {
      Side s;
      s.plain = induced_subgraph(b, part);
      auto local = [&](Vertex x) {
        return static_cast<Vertex>(std::lower_bound(part.begin(), part.end(), x) - part.begin());
      };
      s.v = local(sep.v);
      s.w = local(w);
      const Edge e(s.v, s.w);
      s.edge_present = s.plain.graph.has_edge(e);
      s.augmented = with_edges(s.plain.graph, std::span<const Edge>(&e, 1));
      s.cert = recognize_hk(s.augmented, k_);
      return s;
    };
    Side s1 = make(sep.part1, sep.w1);
    Side s2 = make(sep.part2, sep.w2);
    if (s1.cert && s2.cert) {
      if (s1.edge_present || s2.edge_present) fail("member side already contains the virtual edge", b);
      bump(&SolveTrace::separator_joins);
      return HajosCertificate::join(sep.v, sep.w1, sep.w2, s1.cert->mapped(s1.plain.to_parent),
                                    s2.cert->mapped(s2.plain.to_parent));
    }
    bump(&SolveTrace::separator_colorings);
    // `a` is a non-member side colored with its virtual edge, `o` the other
    // side colored as is.
    const bool first = !s1.cert;
    const Side& a = first ? s1 : s2;
    const Side& o = first ? s2 : s1;
    const Coloring fa = must_color(a.augmented, "separator side with virtual edge");
    Coloring fo = must_color(o.plain.graph, "separator side without virtual edge");
    // Align the shared vertex, then move o's w off a's w with a third color.
    // A third color exists for every k >= 3.
    const int cv = fa[a.v];
    const int cw = fa[a.w];
    swap_colors(fo, fo[o.v], cv);
    if (fo[o.w] == cw) {
      int third = 1;
      while (third == cv || third == cw) ++third;
      swap_colors(fo, cw, third);
    }
    Coloring f{k_, std::vector<int>(static_cast<std::size_t>(b.order()), 0)};
    for (std::size_t i = 0; i < a.plain.to_parent.size(); ++i)
      f.colors[static_cast<std::size_t>(a.plain.to_parent[i])] = fa.colors[i];
    for (std::size_t i = 0; i < o.plain.to_parent.size(); ++i)
      f.colors[static_cast<std::size_t>(o.plain.to_parent[i])] = fo.colors[i];
    if (!is_proper(b, f)) fail("separator recombination is improper", b);
    return f;
  }

  BlockResult list_color_around_max(const Graph& b) {
    Vertex v = 0;
    for (Vertex x = 1; x < b.order(); ++x)
      if (b.degree(x) > b.degree(v)) v = x;
    std::vector<Vertex> rest;
    for (Vertex x = 0; x < b.order(); ++x)
      if (x != v) rest.push_back(x);
    const Subgraph h = induced_subgraph(b, rest);
    ListAssignment lists;
    for (Vertex x : h.to_parent) {
      std::vector<int> l;
      for (int c = b.adjacent(v, x) ? 2 : 1; c <= k_; ++c) l.push_back(c);
      lists.lists.push_back(std::move(l));
    }
    auto r = degree_list_color(h.graph, lists);
    if (std::holds_alternative<GallaiTreeReport>(r)) {
      if (b.order() != k_ + 1 || !is_complete(b)) fail("list coloring failed on a block other than K_{k+1}", b);
      bump(&SolveTrace::complete_leaves);
      std::vector<Vertex> all(static_cast<std::size_t>(b.order()));
      for (Vertex x = 0; x < b.order(); ++x) all[static_cast<std::size_t>(x)] = x;
      return HajosCertificate::leaf(BaseKind::complete, std::move(all));
    }
    bump(&SolveTrace::list_colorings);
    const Coloring& fh = std::get<Coloring>(r);
    Coloring f{k_, std::vector<int>(static_cast<std::size_t>(b.order()), 0)};
    f.colors[static_cast<std::size_t>(v)] = 1;
    for (std::size_t i = 0; i < h.to_parent.size(); ++i) f.colors[static_cast<std::size_t>(h.to_parent[i])] = fh.colors[i];
    if (!is_proper(b, f)) fail("list coloring does not extend to the block", b);
    return f;
  }

  // Colors G[side ∪ far_boundary] with far_boundary made a clique and
  // returns the restriction to `side` (indexed like the sorted side).
  Coloring color_with_clique(const Graph& b, const std::vector<Vertex>& side, const std::vector<Vertex>& far_boundary) {
    std::vector<Vertex> vs = side;
    vs.insert(vs.end(), far_boundary.begin(), far_boundary.end());
    const Subgraph sub = induced_subgraph(b, vs);
    std::vector<Vertex> clique;
    for (Vertex y : far_boundary)
      clique.push_back(static_cast<Vertex>(std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), y) -
                                           sub.to_parent.begin()));
    const Graph g1 = add_clique(sub.graph, clique);
    const Coloring f1 = must_color(g1, "clique-augmented side");
    Coloring out{k_, {}};
    for (Vertex x : side) {
      const auto i = std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), x) - sub.to_parent.begin();
      out.colors.push_back(f1.colors[static_cast<std::size_t>(i)]);
    }
    if (out.used() < 2) bump(&SolveTrace::monochrome_restrictions);
    return out;
  }

  BlockResult split_at_cut(const Graph& b) {
    const auto hv = min_cut_between_high_vertices(b, k_);
    if (!hv) fail("fewer than two high vertices", b);
    const EdgeCut& cut = hv->cut;
    const int a = static_cast<int>(cut.x_boundary.size());
    const int bb = static_cast<int>(cut.y_boundary.size());
    if (static_cast<int>(cut.f.size()) > k_) fail("cut between high vertices exceeds k", b);
    Coloring fx;
    Coloring fy;
    if (bb <= k_ - 1) {
      bump(&SolveTrace::cut_both_small);
      fx = must_color(induced_subgraph(b, cut.x).graph, "X side");
      fy = must_color(induced_subgraph(b, cut.y).graph, "Y side");
    } else {
      // b = k = |F|: every Y_F vertex meets exactly one cut edge.
      if (static_cast<int>(cut.f.size()) != k_) fail("boundary of size k with fewer than k cut edges", b);
      fx = color_with_clique(b, cut.x, cut.y_boundary);
      if (a < k_) {
        bump(&SolveTrace::cut_one_clique);
        fy = must_color(induced_subgraph(b, cut.y).graph, "Y side");
      } else {
        bump(&SolveTrace::cut_two_cliques);
        fy = color_with_clique(b, cut.y, cut.x_boundary);
      }
    }
    auto merged = merge_cut_colorings(b, cut, fx, fy);
    if (!merged) fail("merge across the cut failed", b);
    return *merged;
  }

  const Graph& root_;
  int k_;
  SolveOptions options_;
};

}  // namespace detail

/// For G with λ(G) <= k, returns a proper coloring with colors {1..k} or a
/// block of G in H_k (so χ(G) = k+1).
///
/// k >= 4 follows the constructive proof: blocks are solved separately; a
/// block with a vertex+edge separator is split into its two sides (a join
/// certificate when both are members); otherwise degree-list coloring
/// around a max-degree vertex handles blocks with at most one vertex of
/// degree > k, and a minimum cut between two such vertices splits the rest.
/// For k <= 3 membership comes from the recognizer and the coloring half
/// uses bipartite coloring (k <= 2) or the exact oracle per block (k = 3).
inline ChiWitness color_or_find_hk_block(const Graph& g, int k, const SolveOptions& options = {}) {
  if (k < 1) throw UsageError("color_or_find_hk_block: k must be at least 1");
  if (options.check_lambda) {
    const LambdaMax lm = lambda_max(g);
    if (lm.value > k)
      throw UsageError("color_or_find_hk_block: λ(G) = " + std::to_string(lm.value) + " exceeds k = " +
                       std::to_string(k));
  }
  return detail::ColorOrBlockSolver(g, k, options).solve(g);
}

}  // namespace lambda_brooks
