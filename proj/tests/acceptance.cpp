// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Budgets are wall-clock seconds.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "betti/cancellation.hpp"
#include "betti/char_scan.hpp"
#include "betti/constructions.hpp"
#include "betti/homology.hpp"
#include "betti/vertex_decomposable.hpp"
#include "suites.hpp"

using namespace betti;

namespace {

constexpr double kGoldenBudget = 1.0;
constexpr double kTorsionBudget = 0.1;
constexpr double kScanBudget = 60.0;
constexpr double kVertexDecompositionBudget = 120.0;
constexpr double kBipartiteHomologyBudget = 10.0;

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

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return seconds_since(start);
}

std::string cli_stdout(const std::string& args, int& code) {
  const std::string cmd = std::string(BETTI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  if (!pipe) {
    code = -1;
    return out;
  }
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
  void note(const std::string& what) { detail << " " << what; }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  if (!v.pass) ++failures;
  std::cout << (v.pass ? "PASS" : "FAIL") << " " << id << " " << title << ":" << v.detail.str() << std::endl;
}

std::string fmt(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << "s";
  return out.str();
}

void suite_into(Verdict& v, const suites::Result& r, std::size_t min_cases) {
  v.note(r.name + "=" + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases));
  v.require(r.cases >= min_cases, r.name + " ran too few cases");
  v.require(r.ok(), r.name + ": " + r.first_failure);
}

}  // namespace

int main() {
  report(1, "golden Reisner tables", [](Verdict& v) {
    int c2 = 0, c0 = 0;
    std::string out2, out0;
    const double t2 = timed([&] { out2 = cli_stdout("table --builtin reisner --char 2", c2); });
    const double t0 = timed([&] { out0 = cli_stdout("table --builtin reisner --char 0", c0); });
    v.require(c2 == 0 && out2 == kReisnerChar2, "char 2 table differs");
    v.require(c0 == 0 && out0 == kReisnerChar0, "char 0 table differs");
    v.require(t2 < kGoldenBudget && t0 < kGoldenBudget, "over budget");
    v.note("char2 " + fmt(t2) + ", char0 " + fmt(t0));
  });

  report(2, "RP2 torsion witness", [](Verdict& v) {
    const auto rp2 = reisner_instance().complex;
    std::vector<HomologyGroup> h;
    std::vector<std::uint64_t> primes;
    const double t = timed([&] {
      h = reduced_homology_Z(rp2);
      primes = torsion_primes(h);
    });
    v.require(h.size() >= 4, "too few degrees");
    if (h.size() >= 4) {
      v.require(h[1].is_zero(), "H0 nonzero");
      v.require(h[2].to_string() == "Z/2", "H1 = " + h[2].to_string());
      v.require(h[3].is_zero(), "H2 nonzero");
    }
    v.require(primes == std::vector<std::uint64_t>{2}, "torsion primes");
    v.require(t < kTorsionBudget, "over budget");
    v.note(fmt(t));
  });

  report(3, "cancellation char 2 to char 0", [](Verdict& v) {
    const auto r = reisner_instance();
    const auto steps = cancellation_feasible(r.table_char2, r.table_char0);
    v.require(steps.has_value(), "infeasible");
    if (steps) {
      v.require(steps->size() == 1, "step count " + std::to_string(steps->size()));
      v.require(steps->size() == 1 && (*steps)[0] == CancellationStep{3, 6, 1}, "wrong step");
    }
  });

  report(4, "whiskered Reisner ideal", [](Verdict& v) {
    const auto j = whisker_all(reisner_instance().ideal).ideal;
    VertexDecomposition vd;
    const double t_vd = timed([&] { vd = is_vertex_decomposable(sr_complex(j)); });
    CharScanOptions opts;
    opts.jobs = 1;
    CharDependenceReport scan;
    const double t_scan = timed([&] { scan = char_dependence_scan(j, opts); });
    v.require(vd.decomposable && vd.witness.has_value(), "not vertex-decomposable");
    v.require(scan.depends, "no characteristic dependence");
    v.require(scan.primes == std::vector<std::uint64_t>{2}, "primes");
    v.require(scan.subsets_scanned == 4096, "scanned " + std::to_string(scan.subsets_scanned));
    v.require(t_vd < kVertexDecompositionBudget, "decomposition over budget");
    v.require(t_scan < kScanBudget, "scan over budget");
    v.note("vd " + fmt(t_vd) + ", scan " + fmt(t_scan));
  });

  report(5, "homology shift on the 16-vertex bipartite complex", [](Verdict& v) {
    const auto b = bipartite_from_complex(reisner_instance().complex);
    v.require(b.ring().size() == 16, "vertex count");
    std::vector<HomologyGroup> delta;
    const double t = timed([&] { delta = reduced_homology_Z(b.delta); });
    const auto gamma = reduced_homology_Z(b.gamma);
    for (int i = 0; i <= 1; ++i) {
      const auto& dg = delta.at(static_cast<std::size_t>(i + 2));
      const auto& gg = gamma.at(static_cast<std::size_t>(i + 1));
      v.require(dg == gg, "H" + std::to_string(i + 1) + "(delta) = " + dg.to_string() + " vs H" +
                              std::to_string(i) + "(gamma) = " + gg.to_string());
    }
    v.require(delta.at(3).to_string() == "Z/2", "H2(delta) = " + delta.at(3).to_string());
    v.require(homology_shift_check(b.gamma, b.delta).holds, "shift check");
    v.require(t < kBipartiteHomologyBudget, "over budget");
    v.note(fmt(t));
  });

  report(6, "Hochster against the Koszul oracle", [](Verdict& v) {
    suite_into(v, suites::oracle_reisner(), 3);
    suite_into(v, suites::oracle_equivalence(200), 200);
  });

  report(7, "property suites", [](Verdict& v) {
    suite_into(v, suites::uct(), 100);
    suite_into(v, suites::restriction(), 100);
    suite_into(v, suites::polarization(), 100);
    suite_into(v, suites::truncation(), 100);
    suite_into(v, suites::linear_strand(), 100);
    suite_into(v, suites::flatness(), 100);
    suite_into(v, suites::powers(), 100);
    suite_into(v, suites::primary_decomposition(), 100);
    suite_into(v, suites::coning(), 100);
  });

  report(8, "negative controls", [](Verdict& v) {
    const SimplicialComplex triangle(Ring::standard(3), std::vector<Face>{0b011, 0b101, 0b110});
    v.require(!is_cone(triangle).has_value(), "hollow triangle is a cone");
    v.require(!is_vertex_decomposable(reisner_instance().complex).decomposable, "RP2 is vertex-decomposable");
    const auto from = reisner_instance().table_char0;
    auto to = from;
    to.add(2, 5, 1);
    v.require(!cancellation_feasible(from, to).has_value(), "unpaired entry is feasible");
    v.require(!cancellation_feasible(to, from).has_value(), "unpaired entry is feasible in reverse");
  });

  return failures == 0 ? 0 : 1;
}
