#pragma once

#include <vector>

#include "lambda_brooks/graph.hpp"
#include "lambda_brooks/generate.hpp"
#include "lambda_brooks/hajos.hpp"
#include "lambda_brooks/prng.hpp"

namespace support {

using namespace lambda_brooks;

inline std::vector<Vertex> iota(int n) {
  std::vector<Vertex> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

inline Graph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

/// K_4 at (0,1) joined with K_4 at (0,1): 7 vertices, identified vertex 0.
inline JoinResult two_k4_join() { return hajos_join({complete_graph(4), 0, 1, complete_graph(4), 0, 1}); }

inline JoinResult two_k5_join() { return hajos_join({complete_graph(5), 0, 1, complete_graph(5), 0, 1}); }

/// Two triangles {0,1,2} and {2,3,4} sharing vertex 2.
inline Graph bowtie() { return graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

/// Two random dense pieces (k+1..k+4 vertices each) joined by
/// max(a, b) edges between a vertices of the first and b of the second,
/// with k in {4, 5}. Often 2-connected with a small cut between
/// high-degree vertices.
struct TwoPieces {
  Graph graph;
  int k = 4;
};

inline TwoPieces two_pieces(std::uint64_t seed) {
  Rng rng(seed);
  const int k = 4 + rng.below(2);
  const int na = k + 1 + rng.below(4);
  const int nb = k + 1 + rng.below(4);
  const Graph a_side = gnp_graph(na, 0.5 + 0.4 * rng.unit(), seed * 3 + 1);
  const Graph b_side = gnp_graph(nb, 0.5 + 0.4 * rng.unit(), seed * 3 + 2);
  GraphBuilder b(disjoint_union(a_side, b_side));
  const int a = 1 + rng.below(k);
  const int bb = rng.coin() ? k : a + rng.below(k - a + 1);
  std::vector<int> xs = iota(na);
  std::vector<int> ys;
  for (int i = 0; i < nb; ++i) ys.push_back(na + i);
  for (int i = na; i > 1; --i) std::swap(xs[static_cast<std::size_t>(i - 1)], xs[static_cast<std::size_t>(rng.below(i))]);
  for (int i = nb; i > 1; --i) std::swap(ys[static_cast<std::size_t>(i - 1)], ys[static_cast<std::size_t>(rng.below(i))]);
  for (int i = 0; i < std::max(a, bb); ++i)
    b.add_edge(xs[static_cast<std::size_t>(i % a)], ys[static_cast<std::size_t>(i % bb)]);
  return {b.build(), k};
}

}  // namespace support
