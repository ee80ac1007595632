#include <catch_amalgamated.hpp>

#include "lambda_brooks/coloring.hpp"
#include "lambda_brooks/generate.hpp"
#include "lambda_brooks/graph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lambda_brooks;
using support::graph;

TEST_CASE("edges are normalized and deduplicated") {
  const Edge e(5, 2);
  CHECK(e.u == 2);
  CHECK(e.v == 5);
  const std::vector<Edge> es{{0, 1}, {1, 0}, {2, 1}};
  const Graph g = Graph::from_edges(3, es);
  CHECK(g.size() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(validate(g));
}

TEST_CASE("loops and out-of-range ids are rejected") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), UsageError);
  const std::vector<Edge> far{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, far), UsageError);
  CHECK_THROWS_AS(Graph(-1), UsageError);
}

TEST_CASE("degree") {
  CHECK(degree(complete_graph(5), 2) == 4);
  CHECK(degree(cycle_graph(5), 0) == 2);
  CHECK(degree(wheel_graph(5), 0) == 5);
  CHECK_THROWS_AS(degree(cycle_graph(5), 5), UsageError);
}

TEST_CASE("degree extremes") {
  CHECK(degree_extremes(complete_graph(4)) == DegreeExtremes{3, 3});
  CHECK(degree_extremes(wheel_graph(5)) == DegreeExtremes{3, 5});
  CHECK(degree_extremes(Graph(0)) == DegreeExtremes{0, 0});
}

TEST_CASE("coloring number") {
  CHECK(coloring_number(cycle_graph(5)).value == 3);
  CHECK(coloring_number(complete_graph(5)).value == 5);
  CHECK(coloring_number(Graph(0)).value == 1);
  CHECK(coloring_number(path_graph(6)).value == 2);
  CHECK(coloring_number(petersen_graph()).value == 4);
}

TEST_CASE("greedy along the reversed elimination order stays within the coloring number") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gnp_graph(12, 0.1 + 0.004 * static_cast<double>(seed), seed);
    const ColoringNumber cn = coloring_number(g);
    std::vector<Vertex> order(cn.elimination_order.rbegin(), cn.elimination_order.rend());
    const Coloring f = greedy_coloring(g, order);
    CHECK(is_proper(g, f));
    CHECK(f.k <= cn.value);
    CHECK(cn.value <= degree_extremes(g).max_degree + 1);
    if (g.order() <= 12) CHECK(oracle::chromatic(g) <= cn.value);
  }
}

TEST_CASE("induced subgraphs") {
  const std::vector<Vertex> three{4, 0, 2};
  const Subgraph s = induced_subgraph(complete_graph(5), three);
  CHECK(is_complete(s.graph));
  CHECK(s.graph.order() == 3);
  CHECK(s.to_parent == std::vector<Vertex>{0, 2, 4});

  const std::vector<Vertex> adj{1, 2};
  CHECK(induced_subgraph(cycle_graph(5), adj).graph.size() == 1);

  const Graph p = petersen_graph();
  const auto all = support::iota(p.order());
  const Subgraph whole = induced_subgraph(p, all);
  CHECK(whole.graph == p);
  CHECK(whole.to_parent == all);

  const std::vector<Vertex> dup{1, 1};
  CHECK_THROWS_AS(induced_subgraph(p, dup), UsageError);
  const std::vector<Vertex> bad{10};
  CHECK_THROWS_AS(induced_subgraph(p, bad), UsageError);
}

TEST_CASE("add_clique") {
  const auto all3 = support::iota(3);
  CHECK(add_clique(Graph(3), all3) == complete_graph(3));
  CHECK(add_clique(complete_graph(3), all3) == complete_graph(3));
  const std::vector<Vertex> ends{0, 2};
  CHECK(add_clique(path_graph(3), ends) == complete_graph(3));
}

TEST_CASE("shape predicates") {
  CHECK(is_odd_wheel(complete_graph(4)).has_value());
  CHECK(is_odd_cycle(cycle_graph(7)));
  const Graph c6 = cycle_graph(6);
  CHECK_FALSE(is_complete(c6));
  CHECK_FALSE(is_odd_cycle(c6));
  CHECK_FALSE(is_odd_wheel(c6).has_value());
  CHECK(is_odd_wheel(wheel_graph(5)) == 0);
  CHECK_FALSE(is_odd_wheel(wheel_graph(4)).has_value());
  CHECK(is_cycle(c6));
  CHECK(is_connected(Graph(1)));
  CHECK_FALSE(is_connected(Graph(2)));
}

TEST_CASE("relabel and disjoint union") {
  const std::vector<Vertex> perm{2, 0, 1};
  const Graph g = relabel(path_graph(3), perm);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  const Graph u = disjoint_union(complete_graph(3), path_graph(2));
  CHECK(u.order() == 5);
  CHECK(u.size() == 4);
  CHECK(u.adjacent(3, 4));
}

TEST_CASE("generators are deterministic and validated") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::gnp;
  spec.n = 10;
  spec.p = 0.5;
  spec.seed = 1;
  CHECK(generate(spec) == generate(spec));
  spec.seed = 2;
  CHECK(validate(generate(spec)));

  GeneratorSpec k5;
  k5.kind = GeneratorKind::complete;
  k5.n = 5;
  CHECK(generate(k5) == complete_graph(5));

  GeneratorSpec wheel;
  wheel.kind = GeneratorKind::wheel;
  wheel.rim = 5;
  CHECK(generate(wheel).order() == 6);
  wheel.rim = 4;
  CHECK_THROWS_AS(generate(wheel), UsageError);

  GeneratorSpec bad_p;
  bad_p.kind = GeneratorKind::gnp;
  bad_p.p = 1.5;
  CHECK_THROWS_AS(generate(bad_p), UsageError);

  GeneratorSpec hosted;
  hosted.kind = GeneratorKind::hosted;
  hosted.budget = 3;
  hosted.seed = 4;
  hosted.core = std::make_shared<const GeneratorSpec>(k5);
  const Graph h = generate(hosted);
  CHECK(h.order() > 5);
  CHECK(induced_subgraph(h, support::iota(5)).graph == complete_graph(5));
}

TEST_CASE("gnp edge density is plausible") {
  long long edges = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) edges += gnp_graph(20, 0.3, seed).size();
  const double mean = static_cast<double>(edges) / 100.0;
  CHECK(mean == Catch::Approx(190 * 0.3).margin(3.0));
}
