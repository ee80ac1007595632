#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lambda_brooks/connectivity.hpp"
#include "lambda_brooks/errors.hpp"
#include "lambda_brooks/graph.hpp"
#include "lambda_brooks/prng.hpp"

namespace lambda_brooks {

enum class BaseKind { complete, odd_wheel, odd_cycle, single_edge, single_vertex };

inline std::string_view to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::complete: return "complete";
    case BaseKind::odd_wheel: return "odd_wheel";
    case BaseKind::odd_cycle: return "odd_cycle";
    case BaseKind::single_edge: return "single_edge";
    case BaseKind::single_vertex: return "single_vertex";
  }
  return "?";
}

inline std::optional<BaseKind> base_kind_from_string(std::string_view s) {
  for (BaseKind k : {BaseKind::complete, BaseKind::odd_wheel, BaseKind::odd_cycle, BaseKind::single_edge,
                     BaseKind::single_vertex})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

/// Construction tree proving membership in H_k. Leaves name a base graph by
/// its vertex ids; a join node records the identified vertex v and the new
/// edge w1w2, with `left` covering the side that contains w1. All ids refer
/// to the target graph.
class HajosCertificate {
 public:
  struct Leaf {
    BaseKind base;
    std::vector<Vertex> vertices;
  };
  struct Join {
    Vertex v;
    Vertex w1;
    Vertex w2;
    std::shared_ptr<const HajosCertificate> left;
    std::shared_ptr<const HajosCertificate> right;
  };

  static HajosCertificate leaf(BaseKind base, std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return HajosCertificate(Leaf{base, std::move(vertices)});
  }

  static HajosCertificate join(Vertex v, Vertex w1, Vertex w2, HajosCertificate left, HajosCertificate right) {
    return HajosCertificate(Join{v, w1, w2, std::make_shared<const HajosCertificate>(std::move(left)),
                                 std::make_shared<const HajosCertificate>(std::move(right))});
  }

  bool is_leaf() const { return std::holds_alternative<Leaf>(node_); }
  const Leaf& as_leaf() const { return std::get<Leaf>(node_); }
  const Join& as_join() const { return std::get<Join>(node_); }

  /// Sorted union of all leaf vertex lists (duplicates kept out).
  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    collect(out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  int leaf_count() const { return is_leaf() ? 1 : as_join().left->leaf_count() + as_join().right->leaf_count(); }

  /// Same tree with every id x replaced by map[x].
  HajosCertificate mapped(std::span<const Vertex> map) const {
    auto at = [&](Vertex x) {
      if (x < 0 || static_cast<std::size_t>(x) >= map.size()) throw UsageError("certificate id outside map");
      return map[static_cast<std::size_t>(x)];
    };
    if (is_leaf()) {
      std::vector<Vertex> vs;
      for (Vertex x : as_leaf().vertices) vs.push_back(at(x));
      return leaf(as_leaf().base, std::move(vs));
    }
    const Join& j = as_join();
    return join(at(j.v), at(j.w1), at(j.w2), j.left->mapped(map), j.right->mapped(map));
  }

  friend bool operator==(const HajosCertificate& a, const HajosCertificate& b) {
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.as_leaf().base == b.as_leaf().base && a.as_leaf().vertices == b.as_leaf().vertices;
    const Join& x = a.as_join();
    const Join& y = b.as_join();
    return x.v == y.v && x.w1 == y.w1 && x.w2 == y.w2 && *x.left == *y.left && *x.right == *y.right;
  }

 private:
  explicit HajosCertificate(std::variant<Leaf, Join> node) : node_(std::move(node)) {}

  void collect(std::vector<Vertex>& out) const {
    if (is_leaf()) {
      out.insert(out.end(), as_leaf().vertices.begin(), as_leaf().vertices.end());
    } else {
      as_join().left->collect(out);
      as_join().right->collect(out);
    }
  }

  std::variant<Leaf, Join> node_;
};

struct CertifiedGraph {
  Graph graph;
  HajosCertificate certificate;
};

// ---------------------------------------------------------------------------
// Hajós join

/// Operands of (left, v1, w1) △ (right, v2, w2).
struct JoinSpec {
  Graph left;
  Vertex v1 = 0;
  Vertex w1 = 0;
  Graph right;
  Vertex v2 = 0;
  Vertex w2 = 0;
};

struct JoinResult {
  Graph graph;
  Vertex v = 0;   // identified vertex
  Vertex w1 = 0;  // left endpoint of the new edge
  Vertex w2 = 0;  // right endpoint of the new edge
  std::vector<Vertex> left_map;   // left id -> result id (identity)
  std::vector<Vertex> right_map;  // right id -> result id
};

/// Left ids are kept; right vertices other than v2 are renumbered from
/// |left| upward in id order, and v2 becomes v1.
inline JoinResult hajos_join(const JoinSpec& spec) {
  if (!spec.left.contains(spec.v1) || !spec.left.contains(spec.w1) || !spec.left.adjacent(spec.v1, spec.w1))
    throw UsageError("hajos_join: v1w1 is not an edge of the left graph");
  if (!spec.right.contains(spec.v2) || !spec.right.contains(spec.w2) || !spec.right.adjacent(spec.v2, spec.w2))
    throw UsageError("hajos_join: v2w2 is not an edge of the right graph");
  const int n1 = spec.left.order();
  JoinResult r;
  r.left_map.resize(static_cast<std::size_t>(n1));
  for (Vertex x = 0; x < n1; ++x) r.left_map[static_cast<std::size_t>(x)] = x;
  r.right_map.resize(static_cast<std::size_t>(spec.right.order()));
  for (Vertex x = 0; x < spec.right.order(); ++x)
    r.right_map[static_cast<std::size_t>(x)] = x == spec.v2 ? spec.v1 : n1 + x - (x > spec.v2 ? 1 : 0);
  GraphBuilder b(n1 + spec.right.order() - 1);
  const Edge e1(spec.v1, spec.w1);
  const Edge e2(spec.v2, spec.w2);
  for (const Edge& e : spec.left.edges())
    if (e != e1) b.add_edge(e);
  for (const Edge& e : spec.right.edges())
    if (e != e2) b.add_edge(r.right_map[static_cast<std::size_t>(e.u)], r.right_map[static_cast<std::size_t>(e.v)]);
  r.v = spec.v1;
  r.w1 = spec.w1;
  r.w2 = r.right_map[static_cast<std::size_t>(spec.w2)];
  b.add_edge(r.w1, r.w2);
  r.graph = b.build();
  return r;
}

/// Certificate of a join from certificates of its operands (in operand ids).
inline HajosCertificate join_certificates(const JoinResult& r, const HajosCertificate& left,
                                          const HajosCertificate& right) {
  return HajosCertificate::join(r.v, r.w1, r.w2, left.mapped(r.left_map), right.mapped(r.right_map));
}

// ---------------------------------------------------------------------------
// Recognition

inline bool base_legal_for(BaseKind kind, int order, int k) {
  switch (kind) {
    case BaseKind::complete: return (k >= 4 || k <= 1) && k >= 0 && order == k + 1;
    case BaseKind::odd_wheel: return k == 3;
    case BaseKind::odd_cycle: return k == 2;
    case BaseKind::single_edge: return k == 1;
    case BaseKind::single_vertex: return k == 0;
  }
  return false;
}

namespace detail {

inline std::optional<HajosCertificate> recognize_rec(const Graph& g, int k, std::span<const Vertex> to_target) {
  const int n = g.order();
  std::vector<Vertex> all(to_target.begin(), to_target.end());
  if (k == 3 && is_odd_wheel(g)) return HajosCertificate::leaf(BaseKind::odd_wheel, std::move(all));
  if (k >= 4 && n == k + 1 && is_complete(g)) return HajosCertificate::leaf(BaseKind::complete, std::move(all));
  // Members are critical with χ = k+1, so they have more than k+1 vertices
  // here and minimum degree at least k.
  if (n <= k + 1 || degree_extremes(g).min_degree < k) return std::nullopt;
  const auto sep = find_vertex_edge_separator(g);
  if (!sep) return std::nullopt;

  auto side = [&](const std::vector<Vertex>& part, Vertex w) -> std::optional<HajosCertificate> {
    Subgraph sub = induced_subgraph(g, part);
    const auto local = [&](Vertex x) {
      return static_cast<Vertex>(std::lower_bound(part.begin(), part.end(), x) - part.begin());
    };
    const Edge virtual_edge(local(sep->v), local(w));
    // A member is the join at this separator, so v and w are not yet adjacent.
    if (sub.graph.has_edge(virtual_edge)) return std::nullopt;
    const Graph augmented = with_edges(sub.graph, std::span<const Edge>(&virtual_edge, 1));
    std::vector<Vertex> ids;
    for (Vertex x : sub.to_parent) ids.push_back(to_target[static_cast<std::size_t>(x)]);
    return recognize_rec(augmented, k, ids);
  };
  auto left = side(sep->part1, sep->w1);
  if (!left) return std::nullopt;
  auto right = side(sep->part2, sep->w2);
  if (!right) return std::nullopt;
  return HajosCertificate::join(to_target[static_cast<std::size_t>(sep->v)],
                                to_target[static_cast<std::size_t>(sep->w1)],
                                to_target[static_cast<std::size_t>(sep->w2)], std::move(*left), std::move(*right));
}

}  // namespace detail

/// Decides G ∈ H_k and returns a certificate in G's ids.
///
/// For k <= 2 this is a direct shape test (K_1, K_2, odd cycle). For k >= 3
/// the graph is matched against the base (odd wheel for k = 3, K_{k+1}
/// otherwise); failing that, it is split at the first vertex+edge separator
/// and both augmented sides are recognized recursively. The first separator
/// is final: every separator of a member splits it into two members.
inline std::optional<HajosCertificate> recognize_hk(const Graph& g, int k) {
  if (k < 0) throw UsageError("recognize_hk: k must be non-negative");
  if (g.empty()) return std::nullopt;
  if (!is_connected(g)) throw UsageError("recognize_hk: graph is disconnected");
  std::vector<Vertex> ids(static_cast<std::size_t>(g.order()));
  for (Vertex x = 0; x < g.order(); ++x) ids[static_cast<std::size_t>(x)] = x;
  switch (k) {
    case 0:
      if (g.order() == 1) return HajosCertificate::leaf(BaseKind::single_vertex, ids);
      return std::nullopt;
    case 1:
      if (g.order() == 2 && g.size() == 1) return HajosCertificate::leaf(BaseKind::single_edge, ids);
      return std::nullopt;
    case 2:
      if (is_odd_cycle(g)) return HajosCertificate::leaf(BaseKind::odd_cycle, ids);
      return std::nullopt;
    default:
      return detail::recognize_rec(g, k, ids);
  }
}

// ---------------------------------------------------------------------------
// Verification

enum class CertFailure {
  none,
  vertex_out_of_range,
  vertex_set_mismatch,
  duplicate_vertex,
  illegal_base_for_k,
  leaf_shape_mismatch,
  join_not_allowed_for_k,
  parts_overlap,
  endpoint_misplaced,
  join_edge_missing,
  virtual_edge_present,
  stray_crossing_edge,
};

inline std::string_view to_string(CertFailure f) {
  switch (f) {
    case CertFailure::none: return "none";
    case CertFailure::vertex_out_of_range: return "vertex_out_of_range";
    case CertFailure::vertex_set_mismatch: return "vertex_set_mismatch";
    case CertFailure::duplicate_vertex: return "duplicate_vertex";
    case CertFailure::illegal_base_for_k: return "illegal_base_for_k";
    case CertFailure::leaf_shape_mismatch: return "leaf_shape_mismatch";
    case CertFailure::join_not_allowed_for_k: return "join_not_allowed_for_k";
    case CertFailure::parts_overlap: return "parts_overlap";
    case CertFailure::endpoint_misplaced: return "endpoint_misplaced";
    case CertFailure::join_edge_missing: return "join_edge_missing";
    case CertFailure::virtual_edge_present: return "virtual_edge_present";
    case CertFailure::stray_crossing_edge: return "stray_crossing_edge";
  }
  return "?";
}

struct CertificateCheck {
  CertFailure failure = CertFailure::none;
  std::string detail;

  bool valid() const { return failure == CertFailure::none; }
  explicit operator bool() const { return valid(); }
};

namespace detail {

inline std::string id_list(std::span<const Vertex> vs) {
  std::string s = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "]";
}

// Replays the construction top-down. `vertices` is the (sorted) vertex set
// of the graph this subtree must build and `edges` its edge set, both in
// target ids; each join splits them into the two operands, re-adding the
// edges v·w1 and v·w2 that the join deleted.
inline CertificateCheck verify_rec(const HajosCertificate& c, int k, const std::vector<Vertex>& vertices,
                                   const std::vector<Edge>& edges) {
  if (c.is_leaf()) {
    const auto& leaf = c.as_leaf();
    if (std::adjacent_find(leaf.vertices.begin(), leaf.vertices.end()) != leaf.vertices.end())
      return {CertFailure::duplicate_vertex, "leaf " + id_list(leaf.vertices)};
    if (leaf.vertices != vertices)
      return {CertFailure::vertex_set_mismatch, "leaf " + id_list(leaf.vertices) + " vs " + id_list(vertices)};
    const int order = static_cast<int>(vertices.size());
    if (!base_legal_for(leaf.base, order, k))
      return {CertFailure::illegal_base_for_k,
              std::string(to_string(leaf.base)) + " of order " + std::to_string(order) + " for k=" + std::to_string(k)};
    GraphBuilder b(order);
    auto local = [&](Vertex x) {
      return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), x) - vertices.begin());
    };
    for (const Edge& e : edges) b.add_edge(local(e.u), local(e.v));
    const Graph g = b.build();
    bool ok = false;
    switch (leaf.base) {
      case BaseKind::complete: ok = is_complete(g); break;
      case BaseKind::odd_wheel: ok = is_odd_wheel(g).has_value(); break;
      case BaseKind::odd_cycle: ok = is_odd_cycle(g); break;
      case BaseKind::single_edge: ok = order == 2 && g.size() == 1; break;
      case BaseKind::single_vertex: ok = order == 1; break;
    }
    if (!ok) return {CertFailure::leaf_shape_mismatch, std::string(to_string(leaf.base)) + " " + id_list(vertices)};
    return {};
  }
  const auto& j = c.as_join();
  if (k < 3) return {CertFailure::join_not_allowed_for_k, "k=" + std::to_string(k)};
  const std::vector<Vertex> left = j.left->vertices();
  const std::vector<Vertex> right = j.right->vertices();
  std::vector<Vertex> common;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(common));
  if (common != std::vector<Vertex>{j.v})
    return {CertFailure::parts_overlap, "shared " + id_list(common) + ", expected [" + std::to_string(j.v) + "]"};
  std::vector<Vertex> all;
  std::set_union(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(all));
  if (all != vertices) return {CertFailure::vertex_set_mismatch, "join at " + std::to_string(j.v)};
  auto in = [](const std::vector<Vertex>& s, Vertex x) { return std::binary_search(s.begin(), s.end(), x); };
  if (!in(left, j.w1) || j.w1 == j.v || !in(right, j.w2) || j.w2 == j.v)
    return {CertFailure::endpoint_misplaced, "w1=" + std::to_string(j.w1) + " w2=" + std::to_string(j.w2)};
  const Edge join_edge(j.w1, j.w2);
  if (!std::binary_search(edges.begin(), edges.end(), join_edge))
    return {CertFailure::join_edge_missing, "w1w2=" + std::to_string(j.w1) + "," + std::to_string(j.w2)};
  const Edge e1(j.v, j.w1);
  const Edge e2(j.v, j.w2);
  if (std::binary_search(edges.begin(), edges.end(), e1) || std::binary_search(edges.begin(), edges.end(), e2))
    return {CertFailure::virtual_edge_present, "v=" + std::to_string(j.v) + " already adjacent to w1 or w2"};
  std::vector<Edge> left_edges{e1};
  std::vector<Edge> right_edges{e2};
  for (const Edge& e : edges) {
    if (e == join_edge) continue;
    if (in(left, e.u) && in(left, e.v))
      left_edges.push_back(e);
    else if (in(right, e.u) && in(right, e.v))
      right_edges.push_back(e);
    else
      return {CertFailure::stray_crossing_edge, std::to_string(e.u) + "-" + std::to_string(e.v)};
  }
  std::sort(left_edges.begin(), left_edges.end());
  std::sort(right_edges.begin(), right_edges.end());
  if (auto r = verify_rec(*j.left, k, left, left_edges); !r) return r;
  return verify_rec(*j.right, k, right, right_edges);
}

}  // namespace detail

/// Replays `cert` against G with explicit ids: leaf shapes and legality for
/// k, operand sides meeting exactly in v, the edge w1w2 present, v·w1 and
/// v·w2 absent, and the rebuilt edge set equal to E(G). Returns the first
/// failure found.
inline CertificateCheck verify_certificate(const Graph& g, int k, const HajosCertificate& cert) {
  const std::vector<Vertex> cv = cert.vertices();
  for (Vertex x : cv)
    if (!g.contains(x)) return {CertFailure::vertex_out_of_range, std::to_string(x)};
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex x = 0; x < g.order(); ++x) all[static_cast<std::size_t>(x)] = x;
  if (cv != all) return {CertFailure::vertex_set_mismatch, "certificate does not cover the graph"};
  return detail::verify_rec(cert, k, all, g.edges());
}

// ---------------------------------------------------------------------------
// Generators

/// Folds joins+1 base graphs (random odd wheels with rim 3, 5 or 7 for
/// k = 3; K_{k+1} for k >= 4) by Hajós joins at random edges.
inline CertifiedGraph gen_hk_random(int k, int joins, std::uint64_t seed) {
  if (k < 3) throw UsageError("gen_hk_random: k must be at least 3");
  if (joins < 0) throw UsageError("gen_hk_random: joins must be non-negative");
  Rng rng(seed);
  auto base = [&]() -> CertifiedGraph {
    Graph g = k == 3 ? wheel_graph(3 + 2 * rng.below(3)) : complete_graph(k + 1);
    std::vector<Vertex> ids(static_cast<std::size_t>(g.order()));
    for (Vertex x = 0; x < g.order(); ++x) ids[static_cast<std::size_t>(x)] = x;
    return {std::move(g), HajosCertificate::leaf(k == 3 ? BaseKind::odd_wheel : BaseKind::complete, ids)};
  };
  auto pick = [&](const Graph& g) {
    const auto es = g.edges();
    const Edge e = es[static_cast<std::size_t>(rng.below(static_cast<int>(es.size())))];
    return rng.coin() ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
  };
  CertifiedGraph current = base();
  for (int i = 0; i < joins; ++i) {
    CertifiedGraph next = base();
    const bool flip = rng.coin();
    const CertifiedGraph& left = flip ? next : current;
    const CertifiedGraph& right = flip ? current : next;
    const auto [v1, w1] = pick(left.graph);
    const auto [v2, w2] = pick(right.graph);
    const JoinResult r = hajos_join({left.graph, v1, w1, right.graph, v2, w2});
    HajosCertificate cert = join_certificates(r, left.certificate, right.certificate);
    current = {r.graph, std::move(cert)};
  }
  return current;
}

/// Hangs `pendant_budget` small blocks off the core: pendant triangles and
/// pendant edges at random existing vertices (the first is always a
/// triangle). Core ids are kept as 0..|core|-1 and no edge joins two core
/// vertices, so the core stays a block. For budget >= 1 the result has
/// λ = max(λ(core), 2).
inline Graph embed_in_host(const Graph& core, int pendant_budget, std::uint64_t seed) {
  if (core.empty() || !is_connected(core)) throw UsageError("embed_in_host: core must be non-empty and connected");
  if (pendant_budget < 0) throw UsageError("embed_in_host: negative budget");
  Rng rng(seed);
  std::vector<Edge> edges = core.edges();
  int n = core.order();
  for (int i = 0; i < pendant_budget; ++i) {
    const Vertex anchor = rng.below(n);
    if (i == 0 || rng.coin()) {
      edges.emplace_back(anchor, n);
      edges.emplace_back(anchor, n + 1);
      edges.emplace_back(n, n + 1);
      n += 2;
    } else {
      edges.emplace_back(anchor, n);
      n += 1;
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace lambda_brooks
