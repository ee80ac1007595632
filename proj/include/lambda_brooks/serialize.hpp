#pragma once

#include <string>

#include <json.hpp>

#include "lambda_brooks/color_or_block.hpp"
#include "lambda_brooks/coloring.hpp"
#include "lambda_brooks/connectivity.hpp"
#include "lambda_brooks/errors.hpp"
#include "lambda_brooks/hajos.hpp"

// JSON encodings. nlohmann::json keeps object keys sorted, so dump() is
// canonical and byte-stable.

namespace lambda_brooks {

inline nlohmann::json to_json(const EdgeCut& cut) {
  nlohmann::json f = nlohmann::json::array();
  for (const Edge& e : cut.f) f.push_back({e.u, e.v});
  return {{"X", cut.x}, {"Y", cut.y}, {"F", std::move(f)}, {"X_F", cut.x_boundary}, {"Y_F", cut.y_boundary}};
}

inline nlohmann::json to_json(const BlockDecomposition& bd) {
  return {{"blocks", bd.blocks}, {"cut_vertices", bd.cut_vertices}};
}

inline nlohmann::json to_json(const HajosCertificate& c) {
  if (c.is_leaf()) return {{"base", std::string(to_string(c.as_leaf().base))}, {"vertices", c.as_leaf().vertices}};
  const auto& j = c.as_join();
  return {{"v", j.v}, {"w1", j.w1}, {"w2", j.w2}, {"left", to_json(*j.left)}, {"right", to_json(*j.right)}};
}

inline HajosCertificate certificate_from_json(const nlohmann::json& j) {
  auto id = [](const nlohmann::json& x) {
    if (!x.is_number_integer()) throw ParseError("certificate vertex ids must be integers", 0);
    return x.get<Vertex>();
  };
  if (!j.is_object()) throw ParseError("certificate node must be an object", 0);
  if (j.contains("base")) {
    if (!j["base"].is_string() || !j.contains("vertices") || !j["vertices"].is_array())
      throw ParseError("leaf needs \"base\" and \"vertices\"", 0);
    const auto kind = base_kind_from_string(j["base"].get<std::string>());
    if (!kind) throw ParseError("unknown base kind '" + j["base"].get<std::string>() + "'", 0);
    std::vector<Vertex> vs;
    for (const auto& x : j["vertices"]) vs.push_back(id(x));
    return HajosCertificate::leaf(*kind, std::move(vs));
  }
  for (const char* key : {"v", "w1", "w2", "left", "right"})
    if (!j.contains(key)) throw ParseError(std::string("join node lacks \"") + key + "\"", 0);
  return HajosCertificate::join(id(j["v"]), id(j["w1"]), id(j["w2"]), certificate_from_json(j["left"]),
                                certificate_from_json(j["right"]));
}

inline nlohmann::json to_json(const Coloring& f) { return {{"k", f.k}, {"colors", f.colors}}; }

inline Coloring coloring_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("colors") || !j["k"].is_number_integer() ||
      !j["colors"].is_array())
    throw ParseError("coloring needs \"k\" and \"colors\"", 0);
  Coloring f{j["k"].get<int>(), {}};
  for (const auto& c : j["colors"]) {
    if (!c.is_number_integer()) throw ParseError("colors must be integers", 0);
    f.colors.push_back(c.get<int>());
  }
  return f;
}

inline nlohmann::json to_json(const ChiWitness& w) {
  if (const auto* f = std::get_if<Coloring>(&w)) return {{"coloring", to_json(*f)}};
  const auto& b = std::get<BlockWitness>(w);
  return {{"block", b.block}, {"certificate", to_json(b.certificate)}};
}

inline ChiWitness witness_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("coloring")) return coloring_from_json(j["coloring"]);
  if (j.is_object() && j.contains("block") && j.contains("certificate")) {
    std::vector<Vertex> block;
    for (const auto& x : j["block"]) {
      if (!x.is_number_integer()) throw ParseError("block ids must be integers", 0);
      block.push_back(x.get<Vertex>());
    }
    return BlockWitness{std::move(block), certificate_from_json(j["certificate"])};
  }
  throw ParseError("witness needs \"coloring\" or \"block\" and \"certificate\"", 0);
}

}  // namespace lambda_brooks
