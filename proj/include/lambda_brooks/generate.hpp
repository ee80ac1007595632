#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "lambda_brooks/color_or_block.hpp"
#include "lambda_brooks/errors.hpp"
#include "lambda_brooks/graph.hpp"
#include "lambda_brooks/hajos.hpp"
#include "lambda_brooks/prng.hpp"

namespace lambda_brooks {

enum class GeneratorKind { complete, cycle, wheel, gnp, hajos_tower, hosted };

inline std::optional<GeneratorKind> generator_kind_from_string(std::string_view s) {
  if (s == "complete") return GeneratorKind::complete;
  if (s == "cycle") return GeneratorKind::cycle;
  if (s == "wheel") return GeneratorKind::wheel;
  if (s == "gnp") return GeneratorKind::gnp;
  if (s == "hajos-tower") return GeneratorKind::hajos_tower;
  if (s == "hosted") return GeneratorKind::hosted;
  return std::nullopt;
}

/// Parameters per kind:
///   complete: n        cycle: n (>= 3)       wheel: rim (odd, >= 3)
///   gnp: n, p          hajos-tower: k (>= 3), joins
///   hosted: core, budget
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::complete;
  int n = 0;
  int rim = 3;
  double p = 0.5;
  int k = 4;
  int joins = 0;
  int budget = 0;
  std::uint64_t seed = 0;
  std::shared_ptr<const GeneratorSpec> core;
};

/// A generated graph and, when the construction certifies one, a block of
/// it in H_k.
struct GeneratedGraph {
  Graph graph;
  std::optional<BlockWitness> witness;
};

inline Graph gnp_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw UsageError("gnp: n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw UsageError("gnp: p must lie in [0, 1]");
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) b.add_edge(u, v);
  return b.build();
}

inline GeneratedGraph generate_with_certificate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::complete:
      if (spec.n < 0) throw UsageError("complete: n must be non-negative");
      return {complete_graph(spec.n), std::nullopt};
    case GeneratorKind::cycle:
      if (spec.n < 3) throw UsageError("cycle: n must be at least 3");
      return {cycle_graph(spec.n), std::nullopt};
    case GeneratorKind::wheel:
      if (spec.rim < 3 || spec.rim % 2 == 0) throw UsageError("wheel: rim must be odd and at least 3");
      return {wheel_graph(spec.rim), std::nullopt};
    case GeneratorKind::gnp:
      return {gnp_graph(spec.n, spec.p, spec.seed), std::nullopt};
    case GeneratorKind::hajos_tower: {
      CertifiedGraph cg = gen_hk_random(spec.k, spec.joins, spec.seed);
      std::vector<Vertex> all(static_cast<std::size_t>(cg.graph.order()));
      for (Vertex x = 0; x < cg.graph.order(); ++x) all[static_cast<std::size_t>(x)] = x;
      return {std::move(cg.graph), BlockWitness{std::move(all), std::move(cg.certificate)}};
    }
    case GeneratorKind::hosted: {
      if (!spec.core) throw UsageError("hosted: core spec required");
      GeneratedGraph core = generate_with_certificate(*spec.core);
      // Core ids are preserved by the embedding, so the core witness carries over.
      return {embed_in_host(core.graph, spec.budget, spec.seed), std::move(core.witness)};
    }
  }
  throw UsageError("unknown generator kind");
}

inline Graph generate(const GeneratorSpec& spec) { return generate_with_certificate(spec).graph; }

}  // namespace lambda_brooks
