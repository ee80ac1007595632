#include <catch_amalgamated.hpp>

#include "lambda_brooks/coloring.hpp"
#include "lambda_brooks/generate.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lambda_brooks;
using support::graph;

TEST_CASE("properness") {
  CHECK(is_proper(complete_graph(3), {3, {1, 2, 3}}));
  CHECK_FALSE(is_proper(complete_graph(3), {3, {1, 1, 2}}));
  CHECK(is_proper(Graph(4), {1, {1, 1, 1, 1}}));
  CHECK_FALSE(is_proper(complete_graph(3), {2, {1, 2, 3}}));
  CHECK_THROWS_AS(is_proper(complete_graph(3), {3, {1, 2}}), UsageError);
  CHECK_THROWS_AS(is_proper(complete_graph(3), {3, {1, 0, 2}}), UsageError);
}

TEST_CASE("exact chromatic number") {
  CHECK(exact_chromatic(cycle_graph(5)).chi == 3);
  CHECK(exact_chromatic(support::two_k4_join().graph).chi == 4);
  CHECK(exact_chromatic(complete_graph(6)).chi == 6);
  CHECK(exact_chromatic(Graph(0)).chi == 0);
  CHECK(exact_chromatic(Graph(3)).chi == 1);
  CHECK(exact_chromatic(petersen_graph()).chi == 3);
  const ChromaticResult w = exact_chromatic(wheel_graph(7));
  CHECK(w.chi == 4);
  CHECK(is_proper(wheel_graph(7), w.coloring));
  CHECK(w.coloring.k == 4);
  CHECK_THROWS_AS(exact_chromatic(complete_graph(27)), ResourceError);
  CHECK(exact_chromatic(complete_graph(27), OracleLimits{30}).chi == 27);
}

TEST_CASE("exact chromatic number agrees with plain backtracking") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = gnp_graph(9, 0.2 + 0.6 * static_cast<double>(seed % 10) / 9.0, seed);
    const ChromaticResult r = exact_chromatic(g);
    CHECK(r.chi == oracle::chromatic(g));
    CHECK(is_proper(g, r.coloring));
    CHECK(r.coloring.used() == r.chi);
  }
}

TEST_CASE("decision form") {
  CHECK_FALSE(exact_k_colorable(cycle_graph(5), 2));
  const auto c5 = exact_k_colorable(cycle_graph(5), 3);
  REQUIRE(c5);
  CHECK(is_proper(cycle_graph(5), *c5));
  CHECK_FALSE(exact_k_colorable(wheel_graph(5), 3));
  CHECK(exact_k_colorable(Graph(0), 0));
  CHECK_FALSE(exact_k_colorable(Graph(1), 0));
}

TEST_CASE("criticality") {
  CHECK(is_critical(cycle_graph(5)));
  CHECK_FALSE(is_critical(cycle_graph(6)));
  CHECK(is_critical(complete_graph(4)));
  CHECK(is_critical(wheel_graph(5)));
  CHECK_FALSE(is_critical(wheel_graph(4)));
  CHECK(is_critical(Graph(1)));
  CHECK_FALSE(is_critical(Graph(2)));
  CHECK_FALSE(is_critical(disjoint_union(complete_graph(3), complete_graph(1))));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = gnp_graph(7, 0.5, seed);
    CHECK(is_critical(g) == oracle::critical(g));
  }
}

TEST_CASE("low/high split") {
  const LowHighSplit k5 = low_high_split(complete_graph(5), 4);
  CHECK(k5.low.graph == complete_graph(5));
  CHECK(k5.high.graph.empty());

  const LowHighSplit w = low_high_split(wheel_graph(5), 3);
  CHECK(w.low.graph == cycle_graph(5));
  CHECK(w.high.to_parent == std::vector<Vertex>{0});

  const JoinResult j = support::two_k4_join();
  const LowHighSplit js = low_high_split(j.graph, 3);
  CHECK(js.high.to_parent == std::vector<Vertex>{j.v});
  CHECK(j.graph.degree(j.v) == 4);
  CHECK(js.below_k.empty());

  CHECK(low_high_split(path_graph(3), 2).below_k == std::vector<Vertex>{0, 2});
}

TEST_CASE("Gallai forests") {
  CHECK(is_gallai_forest(star_graph(4)));
  CHECK(is_gallai_forest(path_graph(6)));
  CHECK_FALSE(is_gallai_forest(cycle_graph(4)));
  const Graph two_k4 = graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                 {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
  CHECK(is_gallai_forest(two_k4));
  const GallaiForestReport r = gallai_forest_report(support::bowtie());
  CHECK(r.is_gallai_forest);
  CHECK(r.blocks.size() == 2);
  CHECK(r.blocks[0].shape == BlockShape::complete);
  CHECK(gallai_forest_report(cycle_graph(5)).blocks[0].shape == BlockShape::odd_cycle);
}

namespace {

ListAssignment uniform(int n, std::vector<int> palette) {
  return {std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::move(palette))};
}

bool respects(const Coloring& f, const ListAssignment& l) {
  for (std::size_t v = 0; v < f.colors.size(); ++v)
    if (!std::binary_search(l.lists[v].begin(), l.lists[v].end(), f.colors[v])) return false;
  return true;
}

}  // namespace

TEST_CASE("degree list coloring") {
  const auto even = degree_list_color(cycle_graph(6), uniform(6, {1, 2}));
  REQUIRE(std::holds_alternative<Coloring>(even));
  CHECK(is_proper(cycle_graph(6), std::get<Coloring>(even)));

  const auto k2 = degree_list_color(complete_graph(2), uniform(2, {1}));
  REQUIRE(std::holds_alternative<GallaiTreeReport>(k2));
  CHECK(std::get<GallaiTreeReport>(k2).tight);
  CHECK(std::get<GallaiTreeReport>(k2).blocks[0].shape == BlockShape::complete);

  const auto c5 = degree_list_color(cycle_graph(5), uniform(5, {1, 2}));
  REQUIRE(std::holds_alternative<GallaiTreeReport>(c5));
  CHECK(std::get<GallaiTreeReport>(c5).blocks[0].shape == BlockShape::odd_cycle);

  const auto slack = degree_list_color(cycle_graph(5), {{{1, 2, 3}, {1, 2}, {1, 2}, {1, 2}, {1, 2}}});
  REQUIRE(std::holds_alternative<Coloring>(slack));

  // K_{3,3}: 3-regular, identical tight lists of size 3.
  const Graph k33 = graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  const auto bip = degree_list_color(k33, uniform(6, {4, 5, 6}));
  REQUIRE(std::holds_alternative<Coloring>(bip));
  CHECK(is_proper(k33, std::get<Coloring>(bip)));

  CHECK_THROWS_AS(degree_list_color(cycle_graph(5), uniform(5, {1})), UsageError);
  CHECK_THROWS_AS(degree_list_color(Graph(2), uniform(2, {1})), UsageError);
  CHECK_THROWS_AS(degree_list_color(cycle_graph(5), uniform(4, {1, 2})), UsageError);
}

TEST_CASE("degree list coloring agrees with exhaustive search") {
  int reports = 0;
  int colorings = 0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    Rng rng(seed);
    const int n = 3 + rng.below(6);
    const Graph g = gnp_graph(n, 0.3 + 0.5 * rng.unit(), seed + 7);
    if (!is_connected(g) || degree_extremes(g).max_degree > 4) continue;
    ListAssignment l;
    const bool identical = rng.below(3) == 0;
    const int palette = 4;
    std::vector<int> shared;
    for (int c = 1; c <= palette; ++c) shared.push_back(c);
    for (Vertex v = 0; v < n; ++v) {
      const int size = std::max(1, g.degree(v) + (rng.below(5) == 0 ? 1 : 0));
      std::vector<int> pool = shared;
      for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[static_cast<std::size_t>(rng.below(static_cast<int>(i)))]);
      std::vector<int> list(identical ? shared.begin() : pool.begin(),
                            (identical ? shared.begin() : pool.begin()) + std::min(size, palette));
      std::sort(list.begin(), list.end());
      l.lists.push_back(list);
    }
    bool valid = true;
    for (Vertex v = 0; v < n; ++v)
      if (static_cast<int>(l.lists[static_cast<std::size_t>(v)].size()) < g.degree(v)) valid = false;
    if (!valid) continue;
    const auto r = degree_list_color(g, l);
    if (const auto* f = std::get_if<Coloring>(&r)) {
      ++colorings;
      CHECK(is_proper(g, *f));
      CHECK(respects(*f, l));
    } else {
      ++reports;
      const auto& rep = std::get<GallaiTreeReport>(r);
      CHECK(rep.tight);
      for (Vertex v = 0; v < n; ++v) CHECK(static_cast<int>(l.lists[static_cast<std::size_t>(v)].size()) == g.degree(v));
      for (const auto& b : rep.blocks) CHECK(b.shape != BlockShape::other);
      // 2-connected with identical tight lists: certainly not colorable.
      const bool same = std::all_of(l.lists.begin(), l.lists.end(), [&](const auto& x) { return x == l.lists[0]; });
      if (same && rep.blocks.size() == 1) CHECK_FALSE(oracle::list_colorable(g, l.lists));
    }
  }
  CHECK(reports > 20);
  CHECK(colorings > 200);
}

TEST_CASE("color permutations") {
  const Coloring f{3, {1, 2, 3}};
  const std::vector<int> id{1, 2, 3};
  CHECK(permute_colors(f, id) == f);
  const std::vector<int> swap12{2, 1, 3};
  const Coloring g = permute_colors(f, swap12);
  CHECK(g.colors == std::vector<int>{2, 1, 3});
  CHECK(is_proper(complete_graph(3), g));
  const std::vector<int> rot{2, 3, 1};
  const std::vector<int> inv{3, 1, 2};
  CHECK(permute_colors(permute_colors(f, rot), inv) == f);
  // permute(permute(f, pi), sigma) == permute(f, sigma o pi)
  std::vector<int> composed;
  for (int c : rot) composed.push_back(swap12[static_cast<std::size_t>(c - 1)]);
  CHECK(permute_colors(permute_colors(f, rot), swap12) == permute_colors(f, composed));
  const std::vector<int> bad{1, 1, 3};
  CHECK_THROWS_AS(permute_colors(f, bad), UsageError);
  const std::vector<int> short_pi{1, 2};
  CHECK_THROWS_AS(permute_colors(f, short_pi), UsageError);
}

TEST_CASE("merge permutations") {
  const std::vector<std::pair<int, int>> one{{2, 2}};
  const auto p = find_merge_permutation(4, one);
  REQUIRE(p);
  CHECK((*p)[1] != 2);

  const std::vector<std::pair<int, int>> none{{1, 2}, {3, 4}};
  CHECK(find_merge_permutation(4, none) == std::vector<int>{1, 2, 3, 4});

  const std::vector<std::pair<int, int>> star{{1, 1}, {1, 2}, {1, 3}, {1, 4}};
  CHECK_FALSE(find_merge_permutation(4, star));
  CHECK_FALSE(oracle::merge_exists(4, star));
}

TEST_CASE("merging colorings across a cut") {
  // X = {0}, Y = {1,2,3,4}, star from 0 to every Y vertex.
  const Graph g = graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const std::vector<Vertex> x{0};
  const EdgeCut cut = make_edge_cut(g, x);
  CHECK_FALSE(merge_cut_colorings(g, cut, {4, {1}}, {4, {1, 2, 3, 4}}));

  const auto ok = merge_cut_colorings(g, cut, {4, {1}}, {4, {2, 2, 3, 4}});
  REQUIRE(ok);
  CHECK(is_proper(g, *ok));

  // Already conflict-free: the Y coloring is kept as is.
  const Graph p = path_graph(4);
  const std::vector<Vertex> left{0, 1};
  const EdgeCut pc = make_edge_cut(p, left);
  const auto same = merge_cut_colorings(p, pc, {2, {1, 2}}, {2, {1, 2}});
  REQUIRE(same);
  CHECK(same->colors == std::vector<int>{1, 2, 1, 2});

  const auto fixed = merge_cut_colorings(p, pc, {2, {1, 2}}, {2, {2, 1}});
  REQUIRE(fixed);
  CHECK(is_proper(p, *fixed));

  CHECK_THROWS_AS(merge_cut_colorings(p, pc, {2, {1, 1}}, {2, {1, 2}}), UsageError);
  CHECK_THROWS_AS(merge_cut_colorings(p, pc, {2, {1, 2}}, {3, {1, 2}}), UsageError);
  CHECK_THROWS_AS(merge_cut_colorings(p, pc, {2, {1, 2, 1}}, {2, {1, 2}}), UsageError);
}

TEST_CASE("random merges are proper and agree with permutation search") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(seed);
    const int k = 2 + rng.below(4);
    const Graph g = gnp_graph(9, 0.3, seed);
    std::vector<Vertex> x;
    for (Vertex v = 0; v < 9; ++v)
      if (rng.coin()) x.push_back(v);
    if (x.empty() || x.size() == 9) continue;
    const EdgeCut cut = make_edge_cut(g, x);
    const Subgraph gx = induced_subgraph(g, cut.x);
    const Subgraph gy = induced_subgraph(g, cut.y);
    auto fx = exact_k_colorable(gx.graph, k);
    auto fy = exact_k_colorable(gy.graph, k);
    if (!fx || !fy) continue;
    std::vector<std::pair<int, int>> conflicts;
    for (const Edge& e : cut.f) {
      const bool ux = std::binary_search(cut.x.begin(), cut.x.end(), e.u);
      const Vertex a = ux ? e.u : e.v;
      const Vertex b = ux ? e.v : e.u;
      const auto ia = std::lower_bound(cut.x.begin(), cut.x.end(), a) - cut.x.begin();
      const auto ib = std::lower_bound(cut.y.begin(), cut.y.end(), b) - cut.y.begin();
      conflicts.emplace_back(fx->colors[static_cast<std::size_t>(ia)], fy->colors[static_cast<std::size_t>(ib)]);
    }
    const auto merged = merge_cut_colorings(g, cut, *fx, *fy);
    CHECK(merged.has_value() == oracle::merge_exists(k, conflicts));
    if (merged) CHECK(is_proper(g, *merged));
  }
}
