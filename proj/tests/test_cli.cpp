#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch_amalgamated.hpp>

#include "lambda_brooks/cli.hpp"
#include "lambda_brooks/serialize.hpp"

using namespace lambda_brooks;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "lambda_brooks_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("stats") {
  const Result r = run({"stats", fixture("wheel5.col")});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"blocks\":1,\"coloring_number\":4,\"lambda\":3,\"m\":10,\"max_degree\":5,\"min_degree\":3,\"n\":6}\n");
  const Result t = run({"stats", "--text", fixture("wheel5.col")});
  CHECK(t.out.find("lambda          3\n") != std::string::npos);
}

TEST_CASE("lambda on the two-K4 join") {
  const Result r = run({"lambda", fixture("two_k4_join.json")});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["lambda"] == 3);
  const Result p = run({"lambda", "--pair", "2", "5", fixture("two_k4_join.json")});
  CHECK(p.code == 0);
  const auto j = nlohmann::json::parse(p.out);
  CHECK(j["value"] == 3);
  CHECK(j["cut"]["F"].size() == 3);
  CHECK(run({"lambda", "--pair", "2", "9", fixture("two_k4_join.json")}).code == 1);
}

TEST_CASE("blocks") {
  const Result r = run({"blocks", fixture("two_k4_join.json")});
  CHECK(r.out == "{\"blocks\":[[0,1,2,3,4,5,6]],\"cut_vertices\":[]}\n");
}

TEST_CASE("chi") {
  const Result r = run({"chi", fixture("wheel5.col")});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["chi"] == 4);
  const Result limited = run({"chi", "--limit", "5", fixture("wheel5.col")});
  CHECK(limited.code == 5);
  CHECK(limited.err.find("resource limit") != std::string::npos);
}

TEST_CASE("the oracle limit can come from the environment") {
  ::setenv("LAMBDA_BROOKS_ORACLE_LIMIT", "4", 1);
  CHECK(run({"chi", fixture("wheel5.col")}).code == 5);
  CHECK(run({"chi", "--limit", "6", fixture("wheel5.col")}).code == 0);
  ::setenv("LAMBDA_BROOKS_ORACLE_LIMIT", "many", 1);
  CHECK(run({"chi", fixture("wheel5.col")}).code == 1);
  ::unsetenv("LAMBDA_BROOKS_ORACLE_LIMIT");
}

TEST_CASE("color exit codes follow the witness") {
  const Result cert = run({"color", "-k", "3", fixture("two_k4_join.json")});
  CHECK(cert.code == 3);
  CHECK(nlohmann::json::parse(cert.out).contains("certificate"));
  const Result col = run({"color", "-k", "4", fixture("two_k4_join.json")});
  CHECK(col.code == 0);
  CHECK(nlohmann::json::parse(col.out).contains("coloring"));
  const Result too_small = run({"color", "-k", "2", fixture("two_k4_join.json")});
  CHECK(too_small.code == 1);
  CHECK(run({"color", fixture("two_k4_join.json")}).code == 1);
}

TEST_CASE("recognize") {
  const Result yes = run({"recognize", "-k", "3", fixture("wheel5.col")});
  CHECK(yes.code == 3);
  CHECK(yes.out == "{\"certificate\":{\"base\":\"odd_wheel\",\"vertices\":[0,1,2,3,4,5]},\"member\":true}\n");
  const Result no = run({"recognize", "-k", "4", fixture("wheel5.col")});
  CHECK(no.code == 0);
  CHECK(no.out == "{\"member\":false}\n");
}

TEST_CASE("parse errors report the line") {
  const Result r = run({"stats", fixture("loop.col")});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 4") != std::string::npos);
  CHECK(run({"stats", fixture("missing.col")}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({}).code == 1);
}

TEST_CASE("help documents exit codes") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Exit codes") != std::string::npos);
}

TEST_CASE("stdin input with sniffed format") {
  const Result r = run({"stats", "-"}, "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["lambda"] == 2);
  const Result j = run({"blocks", "-"}, R"({"n":3,"edges":[[0,1]]})");
  CHECK(j.out == "{\"blocks\":[[0,1],[2]],\"cut_vertices\":[]}\n");
  CHECK(run({"stats", "--format", "json", "-"}, "p edge 1 0\n").code == 1);
}

TEST_CASE("gen, color and verify round-trip") {
  for (int k = 3; k <= 6; ++k)
    for (int seed = 0; seed < 5; ++seed) {
      const auto graph_path = scratch("g.json");
      const auto cert_path = scratch("c.json");
      const auto witness_path = scratch("w.json");
      const Result g = run({"gen", "--kind", "hosted", "--core", "hajos-tower", "-k", std::to_string(k), "--joins", "2",
                            "--budget", "3", "--seed", std::to_string(seed), "--out", graph_path.string(),
                            "--cert-out", cert_path.string()});
      REQUIRE(g.code == 0);
      CHECK(run({"verify", "-k", std::to_string(k), "--cert", cert_path.string(), graph_path.string()}).code == 0);
      const Result c = run({"color", "-k", std::to_string(k), graph_path.string()});
      CHECK(c.code == 3);
      write(witness_path, c.out);
      const Result v = run({"verify", "-k", std::to_string(k), "--cert", witness_path.string(), graph_path.string()});
      CHECK(v.code == 0);
      CHECK(v.out == "{\"valid\":true}\n");
      CHECK(run({"verify", "-k", std::to_string(k + 1), "--cert", witness_path.string(), graph_path.string()}).code ==
            3);
    }
}

TEST_CASE("verify rejects bad witnesses") {
  const auto w = scratch("bad.json");
  write(w, R"({"coloring":{"k":4,"colors":[1,2,1,3,4,2,3]}})");
  CHECK(run({"verify", "-k", "4", "--cert", w.string(), fixture("two_k4_join.json")}).code == 3);
  write(w, R"({"block":[0,1,2,3],"certificate":{"base":"odd_wheel","vertices":[0,1,2,3]}})");
  const Result nb = run({"verify", "-k", "3", "--cert", w.string(), fixture("two_k4_join.json")});
  CHECK(nb.code == 3);
  CHECK(nb.out.find("not_a_block") != std::string::npos);
  write(w, R"({"base":"odd_wheel","vertices":[0,1,2,3,4,5]})");
  CHECK(run({"verify", "-k", "3", "--cert", w.string(), fixture("wheel5.col")}).code == 0);
  CHECK(run({"verify", "-k", "4", "--cert", w.string(), fixture("wheel5.col")}).code == 3);
  write(w, "{\"base\": ");
  CHECK(run({"verify", "-k", "3", "--cert", w.string(), fixture("wheel5.col")}).code == 1);
}

TEST_CASE("gen is deterministic and validates parameters") {
  const Result a = run({"gen", "--kind", "gnp", "-n", "10", "-p", "0.5", "--seed", "1"});
  const Result b = run({"gen", "--kind", "gnp", "-n", "10", "-p", "0.5", "--seed", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"gen", "--kind", "wheel", "--rim", "4"}).code == 1);
  CHECK(run({"gen", "--kind", "hosted"}).code == 1);
  CHECK(run({"gen", "--kind", "cycle", "-n", "5", "--cert-out", scratch("x.json").string()}).code == 1);
  const Result d = run({"gen", "--kind", "complete", "-n", "3", "--format", "dimacs"});
  CHECK(d.out == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("audit") {
  const Result ok = run({"audit", fixture("audit")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("{\"failed\":0,\"files\":4}") != std::string::npos);
  const Result parallel = run({"audit", "--jobs", "3", fixture("audit")});
  CHECK(parallel.out == ok.out);

  const auto dir = scratch("audit_bad");
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(fixture("loop.col"), dir / "loop.col", std::filesystem::copy_options::overwrite_existing);
  std::filesystem::copy_file(fixture("wheel5.col"), dir / "wheel5.col", std::filesystem::copy_options::overwrite_existing);
  const Result bad = run({"audit", dir.string()});
  CHECK(bad.code == 4);
  CHECK(bad.out.find("FAIL loop.col") != std::string::npos);
  CHECK(bad.out.find("ok   wheel5.col") != std::string::npos);
  CHECK(run({"audit", fixture("nowhere")}).code == 1);
}

TEST_CASE("shell pipeline through the binary") {
  const auto cert = scratch("pipe.json");
  const std::string cmd = std::string(CLI_BINARY) + " gen --kind hajos-tower -k 4 --joins 2 --seed 7 | " + CLI_BINARY +
                          " color -k 4 - > " + cert.string() + "; test $? -eq 3 && " + CLI_BINARY +
                          " gen --kind hajos-tower -k 4 --joins 2 --seed 7 | " + CLI_BINARY + " verify -k 4 --cert " +
                          cert.string() + " - > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
}
