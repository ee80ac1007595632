#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lambda_brooks/color_or_block.hpp"
#include "lambda_brooks/coloring.hpp"
#include "lambda_brooks/connectivity.hpp"
#include "lambda_brooks/errors.hpp"
#include "lambda_brooks/generate.hpp"
#include "lambda_brooks/graph.hpp"
#include "lambda_brooks/hajos.hpp"
#include "lambda_brooks/io.hpp"
#include "lambda_brooks/serialize.hpp"

namespace lambda_brooks::cli {

/// Process exit codes.
enum Exit : int {
  ok = 0,           // success; coloring found; valid; not a member
  usage = 1,        // bad arguments or malformed input
  certified = 3,    // χ = k+1 certificate; member; invalid certificate
  inconsistent = 4, // internal inconsistency; audit failures
  resource = 5,     // exact oracle size limit exceeded
};

inline constexpr const char* kExitHelp =
    "Exit codes: 0 success / k-coloring / valid / not a member, 1 usage or parse error,\n"
    "3 certificate (chi = k+1) / member / invalid certificate, 4 internal inconsistency\n"
    "or audit failure, 5 exact-oracle size limit exceeded.\n"
    "LAMBDA_BROOKS_ORACLE_LIMIT sets the oracle vertex limit (default 26).";

namespace detail {

struct Input {
  std::string path;
  std::string format = "auto";
};

inline Graph load_graph(const Input& input, std::istream& in) {
  std::string text;
  if (input.path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    text = read_file(input.path);
  }
  GraphFormat format;
  if (input.format == "dimacs")
    format = GraphFormat::dimacs;
  else if (input.format == "json")
    format = GraphFormat::json;
  else
    format = detect_format(input.path == "-" ? std::string_view{} : std::string_view{input.path}, text);
  return parse_graph(text, format);
}

inline OracleLimits oracle_limits(int flag) {
  OracleLimits limits;
  if (const char* env = std::getenv("LAMBDA_BROOKS_ORACLE_LIMIT"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw UsageError("LAMBDA_BROOKS_ORACLE_LIMIT must be a non-negative integer");
    limits.max_vertices = static_cast<int>(v);
  }
  if (flag >= 0) limits.max_vertices = flag;
  return limits;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

// ---------------------------------------------------------------------------
// audit

struct AuditOutcome {
  std::string report;  // one line per file
  int failures = 0;
  bool checked_chi = false;
};

/// Runs the invariant suite on one graph; every violated check is listed.
inline std::vector<std::string> audit_graph(const Graph& g, const OracleLimits& limits, bool& checked_chi) {
  std::vector<std::string> bad;
  const auto [dmin, dmax] = degree_extremes(g);
  const int col = coloring_number(g).value;
  const int lambda = lambda_max(g).value;
  if (!validate(g)) bad.push_back("graph invariants");
  if (col > lambda + 1) bad.push_back("col <= lambda+1");
  if (lambda > dmax) bad.push_back("lambda <= Delta");
  checked_chi = !g.empty() && g.order() <= limits.max_vertices;
  if (checked_chi) {
    const int chi = exact_chromatic(g, limits).chi;
    if (chi > col) bad.push_back("chi <= col");
    bool member_block = false;
    for (const auto& b : block_decomposition(g).blocks)
      if (recognize_hk(induced_subgraph(g, b).graph, lambda)) member_block = true;
    if ((chi == lambda + 1) != member_block) bad.push_back("chi = lambda+1 iff a block is in H_lambda");
  }
  // Structure of members (critical with chi = k+1, lambda = k).
  if (lambda >= 3 && is_connected(g) && recognize_hk(g, lambda)) {
    if (dmin < lambda) bad.push_back("member: delta >= k");
    if (!block_decomposition(g).cut_vertices.empty()) bad.push_back("member: no cut vertex");
    bool connected_enough = true;
    for (Vertex u = 0; u < g.order() && connected_enough; ++u)
      for (Vertex v = u + 1; v < g.order(); ++v)
        if (local_edge_connectivity(g, u, v).value < lambda) {
          connected_enough = false;
          break;
        }
    if (!connected_enough) bad.push_back("member: k-edge-connected");
    if (!is_gallai_forest(low_high_split(g, lambda).low.graph)) bad.push_back("member: low-vertex subgraph");
  }
  return bad;
}

inline AuditOutcome audit_file(const std::filesystem::path& path, const OracleLimits& limits) {
  AuditOutcome out;
  const std::string name = path.filename().string();
  try {
    const Graph g = parse_graph(read_file(path.string()), detect_format(path.string(), ""));
    const auto bad = audit_graph(g, limits, out.checked_chi);
    out.failures = static_cast<int>(bad.size());
    out.report = (bad.empty() ? "ok   " : "FAIL ") + name + " n=" + std::to_string(g.order()) +
                 " m=" + std::to_string(g.size()) + (out.checked_chi ? "" : " (chi skipped)");
    for (const auto& b : bad) out.report += "\n     violated: " + b;
  } catch (const std::exception& e) {
    out.failures = 1;
    out.report = "FAIL " + name + " error: " + e.what();
  }
  out.report += "\n";
  return out;
}

}  // namespace detail

/// Parses `args` (without the program name), runs one subcommand and
/// returns the exit code. Output goes to `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum local edge connectivity, H_k recognition and k-coloring"};
  app.require_subcommand(1);
  app.footer(kExitHelp);

  detail::Input input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input.path, "Graph file (DIMACS .col or JSON), '-' for stdin")->required();
    sub->add_option("--format", input.format, "Input format")->check(CLI::IsMember({"auto", "dimacs", "json"}));
  };
  int k = 0;
  int limit = -1;
  bool text = false;
  std::vector<int> pair;
  std::string cert_path;

  auto* stats = app.add_subcommand("stats", "n, m, degrees, coloring number, lambda, block count");
  add_input(stats);
  stats->add_flag("--text", text, "Aligned text instead of JSON");

  auto* lambda = app.add_subcommand("lambda", "Maximum local edge connectivity and a witness pair");
  add_input(lambda);
  lambda->add_option("--pair", pair, "Local connectivity between two vertices, with a minimum cut")->expected(2);

  auto* blocks = app.add_subcommand("blocks", "Block decomposition");
  add_input(blocks);

  auto* chi = app.add_subcommand("chi", "Exact chromatic number");
  add_input(chi);
  chi->add_option("--limit", limit, "Exact-oracle vertex limit");

  auto* color = app.add_subcommand("color", "k-coloring or a block in H_k");
  add_input(color);
  color->add_option("-k", k, "Palette size")->required();
  color->add_option("--limit", limit, "Exact-oracle vertex limit (k = 3)");

  auto* recognize = app.add_subcommand("recognize", "H_k membership with certificate");
  add_input(recognize);
  recognize->add_option("-k", k, "Class index")->required();

  auto* verify = app.add_subcommand("verify", "Replay a certificate or check a witness");
  add_input(verify);
  verify->add_option("-k", k, "Class index")->required();
  verify->add_option("--cert", cert_path, "Certificate or witness JSON")->required();

  GeneratorSpec spec;
  GeneratorSpec core_spec;
  std::string kind = "complete";
  std::string core_kind;
  std::string out_path;
  std::string cert_out;
  std::string out_format = "json";
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--kind", kind, "complete|cycle|wheel|gnp|hajos-tower|hosted")
      ->check(CLI::IsMember({"complete", "cycle", "wheel", "gnp", "hajos-tower", "hosted"}));
  gen->add_option("-n", spec.n, "Vertex count");
  gen->add_option("--rim", spec.rim, "Wheel rim length (odd)");
  gen->add_option("-p", spec.p, "Edge probability");
  gen->add_option("-k", spec.k, "Class index for hajos-tower");
  gen->add_option("--joins", spec.joins, "Number of joins for hajos-tower");
  gen->add_option("--budget", spec.budget, "Pendant attachments for hosted");
  gen->add_option("--seed", spec.seed, "Seed");
  gen->add_option("--core", core_kind, "Core kind for hosted (uses the same parameters)")
      ->check(CLI::IsMember({"complete", "cycle", "wheel", "gnp", "hajos-tower"}));
  gen->add_option("--out", out_path, "Output file (default stdout)");
  gen->add_option("--cert-out", cert_out, "Write the certified block witness here");
  gen->add_option("--format", out_format, "Output format")->check(CLI::IsMember({"dimacs", "json"}));

  std::string audit_dir;
  int jobs = 1;
  auto* audit = app.add_subcommand("audit", "Check invariants over every .col/.json file in a directory");
  audit->add_option("dir", audit_dir, "Directory")->required();
  audit->add_option("--limit", limit, "Exact-oracle vertex limit");
  audit->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);

  std::vector<const char*> argv{"lambda-brooks"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return Exit::usage;
  }

  try {
    if (stats->parsed()) {
      const Graph g = detail::load_graph(input, in);
      const auto [dmin, dmax] = degree_extremes(g);
      const int col = coloring_number(g).value;
      const int lam = lambda_max(g).value;
      const auto nblocks = block_decomposition(g).blocks.size();
      if (text) {
        auto row = [&](const char* key, long long v) {
          std::ostringstream line;
          line << std::left << std::setw(16) << key << v << "\n";
          out << line.str();
        };
        row("n", g.order());
        row("m", g.size());
        row("min_degree", dmin);
        row("max_degree", dmax);
        row("coloring_number", col);
        row("lambda", lam);
        row("blocks", static_cast<long long>(nblocks));
      } else {
        nlohmann::json j = {{"n", g.order()},       {"m", g.size()},  {"min_degree", dmin}, {"max_degree", dmax},
                            {"coloring_number", col}, {"lambda", lam}, {"blocks", nblocks}};
        out << j.dump() << "\n";
      }
      return Exit::ok;
    }
    if (lambda->parsed()) {
      const Graph g = detail::load_graph(input, in);
      if (!pair.empty()) {
        g.require_vertex(pair[0]);
        g.require_vertex(pair[1]);
        const LocalCut lc = local_edge_connectivity(g, pair[0], pair[1]);
        out << nlohmann::json{{"u", pair[0]}, {"v", pair[1]}, {"value", lc.value}, {"cut", to_json(lc.cut)}}.dump()
            << "\n";
        return Exit::ok;
      }
      const LambdaMax lm = lambda_max(g);
      nlohmann::json j = {{"lambda", lm.value}, {"pair", nullptr}};
      if (lm.pair) j["pair"] = {lm.pair->first, lm.pair->second};
      out << j.dump() << "\n";
      return Exit::ok;
    }
    if (blocks->parsed()) {
      out << to_json(block_decomposition(detail::load_graph(input, in))).dump() << "\n";
      return Exit::ok;
    }
    if (chi->parsed()) {
      const Graph g = detail::load_graph(input, in);
      const ChromaticResult r = exact_chromatic(g, detail::oracle_limits(limit));
      out << nlohmann::json{{"chi", r.chi}, {"coloring", to_json(r.coloring)}}.dump() << "\n";
      return Exit::ok;
    }
    if (color->parsed()) {
      const Graph g = detail::load_graph(input, in);
      SolveOptions options;
      options.limits = detail::oracle_limits(limit);
      const ChiWitness w = color_or_find_hk_block(g, k, options);
      out << to_json(w).dump() << "\n";
      return is_coloring(w) ? Exit::ok : Exit::certified;
    }
    if (recognize->parsed()) {
      const Graph g = detail::load_graph(input, in);
      const auto cert = recognize_hk(g, k);
      if (!cert) {
        out << nlohmann::json{{"member", false}}.dump() << "\n";
        return Exit::ok;
      }
      out << nlohmann::json{{"member", true}, {"certificate", to_json(*cert)}}.dump() << "\n";
      return Exit::certified;
    }
    if (verify->parsed()) {
      const Graph g = detail::load_graph(input, in);
      const nlohmann::json doc = parse_json_text(read_file(cert_path));
      auto report = [&](bool valid, std::string_view failure, const std::string& detail) {
        nlohmann::json j = {{"valid", valid}};
        if (!valid) j["failure"] = {{"reason", failure}, {"detail", detail}};
        out << j.dump() << "\n";
        return valid ? Exit::ok : Exit::certified;
      };
      if (doc.is_object() && doc.contains("coloring")) {
        const Coloring f = coloring_from_json(doc["coloring"]);
        if (static_cast<int>(f.colors.size()) != g.order()) return report(false, "coloring_size", "size != n");
        if (f.k > k) return report(false, "palette_too_large", "k = " + std::to_string(f.k));
        for (int c : f.colors)
          if (c < 1) return report(false, "partial_coloring", "color " + std::to_string(c));
        return is_proper(g, f) ? report(true, "", "") : report(false, "improper_coloring", "");
      }
      if (doc.is_object() && doc.contains("block")) {
        const BlockWitness bw = std::get<BlockWitness>(witness_from_json(doc));
        std::vector<Vertex> block = bw.block;
        std::sort(block.begin(), block.end());
        const auto bd = block_decomposition(g);
        if (std::find(bd.blocks.begin(), bd.blocks.end(), block) == bd.blocks.end())
          return report(false, "not_a_block", "witness vertex set is not a block of the graph");
        const Subgraph sub = induced_subgraph(g, block);
        std::vector<Vertex> to_local(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t i = 0; i < block.size(); ++i) to_local[static_cast<std::size_t>(block[i])] = static_cast<Vertex>(i);
        for (Vertex x : bw.certificate.vertices())
          if (x < 0 || x >= g.order() || to_local[static_cast<std::size_t>(x)] < 0)
            return report(false, to_string(CertFailure::vertex_set_mismatch), "id " + std::to_string(x) + " outside block");
        const CertificateCheck check = verify_certificate(sub.graph, k, bw.certificate.mapped(to_local));
        return report(check.valid(), to_string(check.failure), check.detail);
      }
      const HajosCertificate cert = certificate_from_json(doc);
      const CertificateCheck check = verify_certificate(g, k, cert);
      return report(check.valid(), to_string(check.failure), check.detail);
    }
    if (gen->parsed()) {
      spec.kind = *generator_kind_from_string(kind);
      if (spec.kind == GeneratorKind::hosted) {
        if (core_kind.empty()) throw UsageError("gen --kind hosted needs --core");
        core_spec = spec;
        core_spec.kind = *generator_kind_from_string(core_kind);
        spec.core = std::make_shared<const GeneratorSpec>(core_spec);
      }
      const GeneratedGraph gg = generate_with_certificate(spec);
      const std::string body = write_graph(gg.graph, out_format == "dimacs" ? GraphFormat::dimacs : GraphFormat::json);
      if (out_path.empty())
        out << body;
      else
        detail::write_text_file(out_path, body);
      if (!cert_out.empty()) {
        if (!gg.witness) throw UsageError("--cert-out: this generator kind produces no certificate");
        detail::write_text_file(cert_out, to_json(ChiWitness{*gg.witness}).dump() + "\n");
      }
      return Exit::ok;
    }
    if (audit->parsed()) {
      namespace fs = std::filesystem;
      if (!fs::is_directory(audit_dir)) throw UsageError("not a directory: " + audit_dir);
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(audit_dir)) {
        const auto ext = entry.path().extension().string();
        if (entry.is_regular_file() && (ext == ".col" || ext == ".json" || ext == ".dimacs"))
          files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      const OracleLimits limits = detail::oracle_limits(limit);
      std::vector<detail::AuditOutcome> results(files.size());
      {
        std::vector<std::jthread> workers;
        const std::size_t nworkers = std::min<std::size_t>(static_cast<std::size_t>(jobs), std::max<std::size_t>(files.size(), 1));
        for (std::size_t w = 0; w < nworkers; ++w)
          workers.emplace_back([&, w] {
            for (std::size_t i = w; i < files.size(); i += nworkers) results[i] = detail::audit_file(files[i], limits);
          });
      }
      int failed_files = 0;
      for (const auto& r : results) {
        out << r.report;
        if (r.failures) ++failed_files;
      }
      out << nlohmann::json{{"files", files.size()}, {"failed", failed_files}}.dump() << "\n";
      return failed_files ? Exit::inconsistent : Exit::ok;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return Exit::resource;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\nrepro: " << e.repro() << "\n";
    return Exit::inconsistent;
  }
  return Exit::usage;
}

}  // namespace lambda_brooks::cli
