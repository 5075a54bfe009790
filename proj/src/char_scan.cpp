#include "betti/char_scan.hpp"

#include <atomic>
#include <set>

#include "betti/complex.hpp"
#include "parallel.hpp"

namespace betti {

nlohmann::json CharDependenceReport::to_json() const {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& t : witnesses) {
    nlohmann::json groups = nlohmann::json::array();
    for (std::size_t k = 0; k < t.homology.size(); ++k)
      if (!t.homology[k].is_zero())
        groups.push_back({{"degree", static_cast<int>(k) - 1}, {"group", t.homology[k].to_string()}});
    w.push_back({{"sigma", t.vertices}, {"primes", t.primes}, {"homology", groups}});
  }
  return {{"schema_version", 1},
          {"depends", depends},
          {"primes", primes},
          {"polarized", polarized},
          {"early_exit", early_exit},
          {"subsets_scanned", subsets_scanned},
          {"vertices", ring.names()},
          {"witnesses", w}};
}

CharDependenceReport char_dependence_scan(const MonomialIdeal& input, const CharScanOptions& options) {
  CharDependenceReport report;
  report.early_exit = options.early_exit;
  report.ring = input.ring();
  if (input.is_zero() || input.is_unit()) return report;

  MonomialIdeal ideal = input;
  if (!input.is_squarefree()) {
    ideal = polarize(input).ideal;
    report.polarized = true;
    report.ring = ideal.ring();
  }
  const Face used = active_vertices(ideal);
  const std::size_t k = static_cast<std::size_t>(face_size(used));
  detail::check_scan_capacity(k, options);

  const auto faces = restriction(sr_complex(ideal), used).faces();
  const std::uint64_t total = std::uint64_t{1} << k;
  const std::uint64_t chunk = 64;
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<std::vector<TorsionWitness>> found(chunks);
  std::vector<std::uint64_t> scanned(chunks, 0);
  std::atomic<std::uint64_t> first_hit{chunks};

  detail::parallel_chunks(total, options.jobs, chunk, [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
    std::vector<Face> sub;
    for (std::uint64_t t = begin; t < end; ++t) {
      if (options.early_exit && first_hit.load() < c) return;
      ++scanned[c];
      const Face sigma = detail::deposit_bits(t, used);
      // Restrictions of at most two vertices are torsion-free.
      if (face_size(sigma) < 3) continue;
      sub.clear();
      for (Face f : faces)
        if (is_subset(f, sigma)) sub.push_back(f);
      auto h = reduced_homology_Z(ChainBoundary(sub));
      auto primes = torsion_primes(h);
      if (primes.empty()) continue;
      TorsionWitness w;
      w.sigma = sigma;
      for (std::size_t v : face_vertices(sigma)) w.vertices.push_back(report.ring.name(v));
      w.primes = std::move(primes);
      w.homology = std::move(h);
      found[c].push_back(std::move(w));
      if (options.early_exit) {
        for (auto cur = first_hit.load(); c < cur && !first_hit.compare_exchange_weak(cur, c);) {
        }
        return;
      }
    }
  });

  std::set<std::uint64_t> primes;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    for (auto& w : found[c]) {
      primes.insert(w.primes.begin(), w.primes.end());
      report.witnesses.push_back(std::move(w));
    }
    if (options.early_exit && !report.witnesses.empty()) break;
  }
  // Scanned counts depend on timing in early-exit mode; report the prefix
  // that a sequential run would have covered.
  if (options.early_exit && !report.witnesses.empty()) {
    const std::uint64_t c = first_hit.load();
    report.subsets_scanned = c * chunk + scanned[c];
  } else {
    for (auto s : scanned) report.subsets_scanned += s;
  }
  report.primes.assign(primes.begin(), primes.end());
  report.depends = !report.witnesses.empty();
  return report;
}

}  // namespace betti
