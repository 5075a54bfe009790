#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "betti/betti_table.hpp"
#include "betti/complex_io.hpp"
#include "betti/constructions.hpp"
#include "betti/ideal_io.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with `args`, capturing stdout; stderr is discarded.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + BETTI_BIN + std::string(" ") + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(BETTI_DATA) + "/" + name; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("betti_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

const char* kReisnerChar2 =
    "      0  1  2 3 4\n"
    "total 1 10 15 7 1\n"
    "    0 1  .  . . .\n"
    "    1 .  .  . . .\n"
    "    2 . 10 15 6 1\n"
    "    3 .  .  . 1 .\n";

const char* kReisnerChar0 =
    "      0  1  2 3\n"
    "total 1 10 15 6\n"
    "    0 1  .  . .\n"
    "    1 .  .  . .\n"
    "    2 . 10 15 6\n";

}  // namespace

TEST_CASE("golden tables match byte for byte") {
  CHECK(run("table --builtin reisner -c 2").out == kReisnerChar2);
  CHECK(run("table --builtin reisner -c 0").out == kReisnerChar0);
  CHECK(run("table " + data("reisner.ideal") + " --char 2").out == kReisnerChar2);
  CHECK(run("table " + data("reisner.ideal")).out == kReisnerChar0);
  const auto ideal_conv = run("table --builtin reisner -c 2 -m ideal");
  CHECK(ideal_conv.code == 0);
  CHECK(ideal_conv.out.find("    4  .  . 1 .") != std::string::npos);
}

TEST_CASE("json tables round-trip to the library tables") {
  const auto r = run("table --builtin reisner -c 2 -f json");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["characteristic"] == 2);
  CHECK(betti::BettiTable::from_json(j) == betti::reisner_instance().table_char2);

  const auto zero = json::parse(run("table " + data("zero.ideal") + " -f json").out);
  CHECK(zero["entries"] == json::parse("[[0, 0, 1]]"));
}

TEST_CASE("bad input exits 2") {
  CHECK(run("table /no/such/file").code == 2);
  CHECK(run("table --builtin reisner -c 4").code == 2);
  CHECK(run("check").code == 2);
  CHECK(run("frobnicate").code == 2);
  TempDir t;
  write(t.file("bad.ideal"), "ring x1\nx2\n");
  CHECK(run("table " + t.file("bad.ideal")).code == 2);
}

TEST_CASE("scan") {
  const auto r = run("scan " + data("reisner.ideal"));
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["depends"] == true);
  CHECK(j["primes"] == json::parse("[2]"));
  CHECK(j["subsets_scanned"] == 64);

  const auto path = json::parse(run("scan " + data("path.ideal")).out);
  CHECK(path["depends"] == false);
  CHECK(path["witnesses"].empty());

  CHECK(run("scan " + data("path25.ideal")).code == 3);
  CHECK(run("scan " + data("path25.ideal") + " --scan-bound 10").code == 3);
  CHECK(run("--scan-bound 4 scan " + data("reisner.ideal")).code == 3);

  TempDir t;
  const auto early = run("scan " + data("reisner.ideal") + " --early-exit -o " + t.file("r.json"));
  CHECK(early.code == 0);
  std::ifstream in(t.file("r.json"));
  CHECK(json::parse(in) == json::parse(early.out));
}

TEST_CASE("scan output does not depend on the job count") {
  TempDir t;
  const auto w = betti::whisker_all(betti::reisner_instance().ideal).ideal;
  betti::write_ideal_file(t.file("j.ideal"), w);
  const auto one = run("-j 1 scan " + t.file("j.ideal"));
  const auto four = run("-j 4 scan " + t.file("j.ideal"));
  const auto env = run("scan " + t.file("j.ideal"), "BETTI_JOBS=3");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(one.out == env.out);
  CHECK(json::parse(one.out)["depends"] == true);
}

TEST_CASE("check --vertex-decomposable") {
  const auto rp2 = run("check --vertex-decomposable " + data("rp2.complex"));
  CHECK(rp2.code == 1);
  CHECK(json::parse(rp2.out)["holds"] == false);

  TempDir t;
  write(t.file("simplex.complex"), "vertices a b c\na b c\n");
  const auto s = run("check --vertex-decomposable " + t.file("simplex.complex"));
  CHECK(s.code == 0);
  const auto j = json::parse(s.out);
  CHECK(j["holds"] == true);
  CHECK(j.contains("witness"));

  betti::write_ideal_file(t.file("j.ideal"), betti::whisker_all(betti::reisner_instance().ideal).ideal);
  const auto w = run("check --vertex-decomposable " + t.file("j.ideal"));
  CHECK(w.code == 0);
  CHECK(json::parse(w.out)["witness"].contains("vertex"));
}

TEST_CASE("check --componentwise-linear") {
  TempDir t;
  write(t.file("lin.ideal"), "ring x1 x2 x3\nx1*x2\nx1*x3\nx2*x3\n");
  const auto lin = run("check --componentwise-linear " + t.file("lin.ideal"));
  CHECK(lin.code == 0);
  CHECK(json::parse(lin.out)["fields"].size() == 5);

  const auto path = run("check --componentwise-linear " + data("path.ideal") + " -c 2");
  CHECK(path.code == 1);
  const auto j = json::parse(path.out);
  REQUIRE(j["fields"].size() == 1);
  CHECK(j["fields"][0]["characteristic"] == 2);
  CHECK(j["fields"][0]["holds"] == false);

  CHECK(run("check --componentwise-linear " + data("zero.ideal")).code == 4);
}

TEST_CASE("check --cancellation") {
  const auto ok = run("check --cancellation " + data("reisner_char2.json") + " " + data("reisner_char0.json"));
  CHECK(ok.code == 0);
  const auto j = json::parse(ok.out);
  CHECK(j["feasible"] == true);
  CHECK(j["steps"] == json::parse(R"([{"i": 3, "j": 6, "count": 1}])"));

  CHECK(run("check --cancellation " + data("reisner_char0.json") + " " + data("reisner_char2.json")).code == 1);

  TempDir t;
  write(t.file("ideal.json"), R"({"convention": "ideal", "entries": [[0, 3, 10]]})");
  CHECK(run("check --cancellation " + data("reisner_char2.json") + " " + t.file("ideal.json")).code == 4);
}

TEST_CASE("check --homology") {
  const auto r = run("check --homology " + data("rp2.complex"));
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["torsion_primes"] == json::parse("[2]"));
  bool found = false;
  for (const auto& g : j["homology"])
    if (g["degree"] == 1) found = g["group"] == "Z/2";
  CHECK(found);
  CHECK(j["field_betti_numbers"]["2"] == json::parse("[0, 0, 1, 1]"));
  CHECK(j["field_betti_numbers"].size() == 5);

  const auto ideal = json::parse(run("check --homology " + data("reisner.ideal")).out);
  CHECK(ideal["torsion_primes"] == json::parse("[2]"));
}

TEST_CASE("primes come from flags, environment and config") {
  auto keys = [](const Run& r) {
    const auto j = json::parse(r.out);
    std::vector<std::string> out;
    for (const auto& [k, v] : j["field_betti_numbers"].items()) out.push_back(k);
    return out;
  };
  const std::string cmd = "check --homology " + data("rp2.complex");
  CHECK(keys(run("--primes 3 5 " + cmd)) == std::vector<std::string>{"0", "3", "5"});
  CHECK(keys(run(cmd, "BETTI_PRIMES=11")) == std::vector<std::string>{"0", "11"});
  TempDir t;
  write(t.file("c.toml"), "primes = [3]\njobs = 2\n");
  CHECK(keys(run("--config " + t.file("c.toml") + " " + cmd)) == std::vector<std::string>{"0", "3"});
  CHECK(run("--primes 4 " + cmd).code == 2);
}

TEST_CASE("construct --whisker-all") {
  TempDir t;
  const auto r = run("construct --whisker-all " + data("reisner.ideal") + " --out-dir " + t.path.string() +
                     " --name j");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["files"].size() == 2);
  CHECK(betti::read_ideal_file(t.file("j.ideal")) == betti::whisker_all(betti::reisner_instance().ideal).ideal);
  std::ifstream in(t.file("j.provenance.json"));
  CHECK(json::parse(in)["new_variables"].size() == 6);
}

TEST_CASE("construct --bipartite") {
  TempDir t;
  const std::string out = " --out-dir " + t.path.string();
  const auto r = run("construct --bipartite --complex " + data("hollow_triangle.complex") + " --covers " +
                     data("hollow_triangle.sets") + out + " --name tri");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["files"].size() == 5);
  const auto tri = betti::read_complex_file(data("hollow_triangle.complex"));
  const auto b = betti::bipartite_from_complex(tri, betti::parse_vertex_sets("x3\nx2\nx1\n", tri.universe()));
  CHECK(betti::read_ideal_file(t.file("tri.ideal")) == b.ideal);
  CHECK(betti::read_ideal_file(t.file("tri.gamma.ideal")) == b.ideal_gamma);
  CHECK(betti::read_complex_file(t.file("tri.delta.complex")) == b.delta);
  CHECK(betti::read_complex_file(t.file("tri.delta_prime.complex")) == b.delta_prime);

  const auto rp2 = run("construct --bipartite --complex " + data("rp2.complex") + out + " --name rp2");
  REQUIRE(rp2.code == 0);
  CHECK(betti::read_ideal_file(t.file("rp2.ideal")).ring().size() == 16);

  // A G_j whose complement is no face.
  write(t.file("bad.sets"), "x3\n{}\n");
  CHECK(run("construct --bipartite --complex " + data("hollow_triangle.complex") + " --covers " +
            t.file("bad.sets") + out)
            .code == 4);
}

TEST_CASE("construct --cone-tilde") {
  TempDir t;
  const std::string out = " --out-dir " + t.path.string();
  const auto r = run("construct --cone-tilde --complex " + data("hollow_triangle.complex") + " --covers " +
                     data("hollow_triangle.covers") + out + " --name cone");
  REQUIRE(r.code == 0);
  const auto coned = betti::read_complex_file(t.file("cone.complex"));
  CHECK(coned.universe().size() == 6);
  CHECK(coned.num_facets() == 7);

  const auto p = run("construct --cone-tilde --complex " + data("point.complex") + " --covers " +
                     data("point.covers") + out + " --name point");
  REQUIRE(p.code == 0);
  CHECK(betti::read_complex_file(t.file("point.complex")).num_facets() == 1);

  CHECK(run("construct --cone-tilde --complex " + data("hollow_triangle.complex") + out).code == 2);
  write(t.file("short.covers"), "x1 x2\n");
  CHECK(run("construct --cone-tilde --complex " + data("hollow_triangle.complex") + " --covers " +
            t.file("short.covers") + out)
            .code == 4);
}
