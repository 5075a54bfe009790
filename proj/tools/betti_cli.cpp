// betti: command-line front end for the Betti table library.
//
// Exit codes
//   0  success; for `check`, the property holds or the cancellation exists
//   1  `check` ran and the property fails
//   2  bad usage, unreadable file or malformed input
//   3  a capacity bound was exceeded (raise it or pass --allow-large)
//   4  a documented precondition of the operation does not hold

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "betti/cancellation.hpp"
#include "betti/char_scan.hpp"
#include "betti/complex_io.hpp"
#include "betti/constructions.hpp"
#include "betti/error.hpp"
#include "betti/hochster.hpp"
#include "betti/ideal_io.hpp"
#include "betti/linearity.hpp"
#include "betti/morse.hpp"
#include "betti/vertex_decomposable.hpp"

namespace {

using namespace betti;
using nlohmann::json;

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kCapacity = 3, kPrecondition = 4 };

struct Settings {
  std::size_t scan_bound = 20;
  bool allow_large = false;
  unsigned jobs = 1;
  std::vector<std::uint64_t> primes{2, 3, 5, 7};

  ScanOptions scan() const { return {scan_bound, allow_large, std::max(1u, jobs)}; }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

json with_schema(json j) {
  j["schema_version"] = kSchemaVersion;
  return j;
}

// Complex files start with `vertices`, ideal files with `ring`; JSON is told
// apart by its keys.
bool is_ideal_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string first;
    if (!(words >> first)) continue;
    if (first.front() == '{') return json::parse(text, nullptr, false).contains("gens");
    return first == "ring";
  }
  return false;
}

SimplicialComplex complex_from_any(const std::string& path) {
  const std::string text = slurp(path);
  if (is_ideal_text(text)) return sr_complex(read_ideal_file(path));
  return read_complex_file(path);
}

json homology_json(const std::vector<HomologyGroup>& h) {
  json out = json::array();
  for (std::size_t k = 0; k < h.size(); ++k)
    out.push_back({{"degree", static_cast<int>(k) - 1}, {"group", h[k].to_string()}});
  return out;
}

json tree_json(const SheddingTree& t) {
  if (t.children.empty()) return {{"simplex", true}};
  return {{"vertex", t.vertex}, {"link", tree_json(t.children[0])}, {"deletion", tree_json(t.children[1])}};
}

json faces_json(const SimplicialComplex& c, const std::vector<Face>& faces) {
  json out = json::array();
  for (Face f : faces) {
    json names = json::array();
    for (std::size_t v : face_vertices(f)) names.push_back(c.universe().name(v));
    out.push_back(names);
  }
  return out;
}

// --- table -----------------------------------------------------------------

struct TableArgs {
  std::string file;
  std::string builtin;
  std::uint64_t characteristic = 0;
  std::string module = "quotient";
  std::string format = "ascii";
};

int run_table(const TableArgs& a, const Settings& s) {
  if (a.file.empty() == a.builtin.empty()) throw CLI::ValidationError("table", "give an ideal file or --builtin");
  const MonomialIdeal ideal = a.builtin.empty() ? read_ideal_file(a.file) : reisner_instance().ideal;
  const FieldSpec field = FieldSpec::of_characteristic(a.characteristic);
  const BettiTable table = betti_table(ideal, field, parse_convention(a.module), s.scan());
  if (a.format == "json") {
    json j = table.to_json();
    j["characteristic"] = field.characteristic();
    std::cout << with_schema(j).dump(2) << "\n";
  } else {
    std::cout << table.render();
  }
  return kOk;
}

// --- scan ------------------------------------------------------------------

struct ScanArgs {
  std::string file;
  bool early_exit = false;
  std::string out;
};

int run_scan(const ScanArgs& a, const Settings& s) {
  CharScanOptions options;
  static_cast<ScanOptions&>(options) = s.scan();
  options.early_exit = a.early_exit;
  const CharDependenceReport report = char_dependence_scan(read_ideal_file(a.file), options);
  const std::string text = report.to_json().dump(2) + "\n";
  if (!a.out.empty()) emit(a.out, text);
  std::cout << text;
  return kOk;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
  std::string vertex_decomposable;
  std::string componentwise_linear;
  std::optional<std::uint64_t> characteristic;
  std::vector<std::string> cancellation;
  std::string homology;
};

int check_vd(const std::string& path) {
  const SimplicialComplex c = complex_from_any(path);
  const VertexDecomposition vd = is_vertex_decomposable(c);
  json j{{"check", "vertex-decomposable"}, {"holds", vd.decomposable}};
  if (vd.witness) j["witness"] = tree_json(*vd.witness);
  std::cout << with_schema(j).dump(2) << "\n";
  return vd.decomposable ? kOk : kFails;
}

int check_cl(const CheckArgs& a, const Settings& s) {
  const MonomialIdeal ideal = read_ideal_file(a.componentwise_linear);
  std::vector<std::uint64_t> chars;
  if (a.characteristic) chars.push_back(*a.characteristic);
  else {
    chars.push_back(0);
    chars.insert(chars.end(), s.primes.begin(), s.primes.end());
  }
  bool all = true;
  json fields = json::array();
  for (auto c : chars) {
    const ComponentwiseReport r = is_componentwise_linear(ideal, FieldSpec::of_characteristic(c), s.scan());
    json degrees = json::array();
    for (const auto& d : r.degrees) degrees.push_back({{"t", d.t}, {"linear", d.linear}});
    json f{{"characteristic", c},
           {"holds", r.componentwise_linear},
           {"checked_degrees", {r.first_degree, r.last_degree}},
           {"degrees", degrees}};
    if (r.first_failure) f["first_failure"] = *r.first_failure;
    fields.push_back(f);
    all = all && r.componentwise_linear;
  }
  std::cout << with_schema({{"check", "componentwise-linear"}, {"holds", all}, {"fields", fields}}).dump(2) << "\n";
  return all ? kOk : kFails;
}

int check_cancellation(const std::vector<std::string>& paths) {
  auto load = [](const std::string& p) {
    json j = json::parse(slurp(p), nullptr, false);
    if (j.is_discarded()) throw InputError(p + ": not valid JSON");
    return BettiTable::from_json(j);
  };
  const auto steps = cancellation_feasible(load(paths[0]), load(paths[1]));
  json j{{"check", "cancellation"}, {"feasible", steps.has_value()}};
  if (steps) {
    j["steps"] = json::array();
    for (const auto& st : *steps) j["steps"].push_back({{"i", st.i}, {"j", st.j}, {"count", st.count}});
  }
  std::cout << with_schema(j).dump(2) << "\n";
  return steps ? kOk : kFails;
}

int check_homology(const std::string& path, const Settings& s) {
  const SimplicialComplex c = complex_from_any(path);
  const ChainBoundary chain = boundary(c);
  const auto h = reduced_homology_Z(chain);
  json dims = json::object();
  dims["0"] = reduced_betti_numbers(chain, FieldSpec::rationals());
  for (auto p : s.primes) dims[std::to_string(p)] = reduced_betti_numbers(chain, FieldSpec::prime(p));
  json j{{"check", "homology"},
         {"homology", homology_json(h)},
         {"torsion_primes", torsion_primes(h)},
         {"field_betti_numbers", dims}};
  std::cout << with_schema(j).dump(2) << "\n";
  return kOk;
}

int run_check(const CheckArgs& a, const Settings& s) {
  const int chosen = !a.vertex_decomposable.empty() + !a.componentwise_linear.empty() + !a.cancellation.empty() +
                     !a.homology.empty();
  if (chosen != 1) throw CLI::ValidationError("check", "choose exactly one check");
  if (!a.vertex_decomposable.empty()) return check_vd(a.vertex_decomposable);
  if (!a.componentwise_linear.empty()) return check_cl(a, s);
  if (!a.cancellation.empty()) return check_cancellation(a.cancellation);
  return check_homology(a.homology, s);
}

// --- construct ---------------------------------------------------------------

struct ConstructArgs {
  std::string whisker_all;
  bool bipartite = false;
  bool cone = false;
  std::string complex;
  std::string covers;
  std::string out_dir = ".";
  std::string name = "out";
};

int run_construct(const ConstructArgs& a) {
  if (int(!a.whisker_all.empty()) + a.bipartite + a.cone != 1)
    throw CLI::ValidationError("construct", "choose exactly one of --whisker-all, --bipartite, --cone-tilde");
  std::filesystem::create_directories(a.out_dir);
  auto path = [&](const std::string& suffix) { return (std::filesystem::path(a.out_dir) / (a.name + suffix)).string(); };
  json written = json::array();
  auto save_ideal = [&](const std::string& suffix, const MonomialIdeal& i) {
    write_ideal_file(path(suffix), i);
    written.push_back(path(suffix));
  };
  auto save_complex = [&](const std::string& suffix, const SimplicialComplex& c) {
    write_complex_file(path(suffix), c);
    written.push_back(path(suffix));
  };
  json provenance;

  if (!a.whisker_all.empty()) {
    const Whiskering w = whisker_all(read_ideal_file(a.whisker_all));
    save_ideal(".ideal", w.ideal);
    json ys = json::array();
    for (const auto& [y, x] : w.provenance) ys.push_back({{"variable", y}, {"whiskers", x}});
    provenance = {{"construction", "whisker-all"}, {"new_variables", ys}};
  } else {
    if (a.complex.empty()) throw CLI::ValidationError("construct", "--complex is required");
    const SimplicialComplex gamma = read_complex_file(a.complex);
    if (a.bipartite) {
      const BipartiteInstance inst = a.covers.empty()
                                         ? bipartite_from_complex(gamma)
                                         : bipartite_from_complex(gamma, parse_vertex_sets(slurp(a.covers), gamma.universe()));
      save_ideal(".ideal", inst.ideal);
      save_ideal(".gamma.ideal", inst.ideal_gamma);
      save_complex(".delta.complex", inst.delta);
      save_complex(".delta_prime.complex", inst.delta_prime);
      json ys = json::array();
      const std::size_t n = inst.num_base();
      for (std::size_t j = 0; j < inst.incidence.size(); ++j)
        ys.push_back({{"variable", inst.ring().name(n + j)},
                      {"G", faces_json(inst.gamma, {inst.incidence[j]}).front()}});
      provenance = {{"construction", "bipartite"}, {"new_variables", ys}};
    } else {
      if (a.covers.empty()) throw CLI::ValidationError("construct", "--cone-tilde needs --covers");
      const auto covers = parse_covers(slurp(a.covers), gamma);
      const ConingMatching cm = coning_matching(gamma, covers);
      save_complex(".complex", cm.cone);
      json ys = json::array();
      const std::size_t n = static_cast<std::size_t>(face_size(gamma.vertex_set()));
      for (std::size_t j = 0; j < covers.size(); ++j)
        ys.push_back({{"variable", cm.cone.universe().name(n + j)}, {"cover", faces_json(covers[j], covers[j].facets())}});
      provenance = {{"construction", "cone-tilde"},
                    {"new_variables", ys},
                    {"matching", {{"complete", cm.verdict.complete}, {"acyclic", cm.verdict.acyclic}}}};
    }
  }
  emit(path(".provenance.json"), with_schema(provenance).dump(2) + "\n");
  written.push_back(path(".provenance.json"));
  std::cout << with_schema({{"construction", provenance["construction"]}, {"files", written}}).dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti tables of monomial ideals and the homology behind them"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with scan-bound, jobs, primes, allow-large");

  Settings s;
  app.add_option("--scan-bound", s.scan_bound, "largest vertex count a scan accepts")->envname("BETTI_SCAN_BOUND");
  app.add_flag("--allow-large", s.allow_large, "lift the scan bound (up to 40 vertices)");
  app.add_option("-j,--jobs", s.jobs, "worker threads for subset scans")->envname("BETTI_JOBS");
  app.add_option("--primes", s.primes, "primes used by homology and linearity checks")
      ->envname("BETTI_PRIMES")
      ->delimiter(',');

  TableArgs ta;
  auto* table = app.add_subcommand("table", "print the Betti table of an ideal");
  table->add_option("file", ta.file, "ideal file")->check(CLI::ExistingFile);
  table->add_option("--builtin", ta.builtin, "built-in instance")->check(CLI::IsMember({"reisner"}));
  table->add_option("-c,--char", ta.characteristic, "field characteristic, 0 or a prime");
  table->add_option("-m,--module", ta.module, "ideal or quotient")->check(CLI::IsMember({"ideal", "quotient"}));
  table->add_option("-f,--format", ta.format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "search restrictions for integral torsion");
  scan->add_option("file", sa.file, "ideal file")->required()->check(CLI::ExistingFile);
  scan->add_flag("--early-exit", sa.early_exit, "stop at the first witness");
  scan->add_option("-o,--out", sa.out, "also write the report here");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "test one property; exit 0 if it holds, 1 if not");
  check->add_option("--vertex-decomposable", ca.vertex_decomposable, "complex or ideal file")->check(CLI::ExistingFile);
  check->add_option("--componentwise-linear", ca.componentwise_linear, "ideal file")->check(CLI::ExistingFile);
  check->add_option("-c,--char", ca.characteristic, "characteristic (default: 0 and every configured prime)");
  check->add_option("--cancellation", ca.cancellation, "FROM.json TO.json")->expected(2)->check(CLI::ExistingFile);
  check->add_option("--homology", ca.homology, "complex or ideal file")->check(CLI::ExistingFile);

  ConstructArgs xa;
  auto* construct = app.add_subcommand("construct", "build whiskered, bipartite or coned instances");
  construct->add_option("--whisker-all", xa.whisker_all, "ideal file")->check(CLI::ExistingFile);
  construct->add_flag("--bipartite", xa.bipartite, "bipartite pair from --complex");
  construct->add_flag("--cone-tilde", xa.cone, "coned complex from --complex and --covers");
  construct->add_option("--complex", xa.complex, "complex file")->check(CLI::ExistingFile);
  construct->add_option("--covers", xa.covers, "vertex sets G_j (bipartite) or cover complexes (cone)")
      ->check(CLI::ExistingFile);
  construct->add_option("--out-dir", xa.out_dir, "directory for emitted files");
  construct->add_option("--name", xa.name, "file name stem");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    for (auto p : s.primes)
      if (!is_prime(p)) throw InputError(std::to_string(p) + " in the prime list is not prime");
    if (*table) return run_table(ta, s);
    if (*scan) return run_scan(sa, s);
    if (*check) return run_check(ca, s);
    return run_construct(xa);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "betti: " << e.what() << "; raise --scan-bound or pass --allow-large\n";
    return kCapacity;
  } catch (const PreconditionError& e) {
    std::cerr << "betti: " << e.what() << "\n";
    return kPrecondition;
  } catch (const Error& e) {
    std::cerr << "betti: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "betti: " << e.what() << "\n";
    return kUsage;
  }
}
