#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "betti/hochster.hpp"
#include "betti/homology.hpp"
#include "betti/ideal.hpp"

namespace betti {

// A subset σ whose restriction Δ|σ has torsion in integral homology.
struct TorsionWitness {
  Face sigma = 0;
  std::vector<std::string> vertices;
  std::vector<std::uint64_t> primes;
  std::vector<HomologyGroup> homology;  // reduced, index k + 1
};

struct CharDependenceReport {
  bool depends = false;
  std::vector<TorsionWitness> witnesses;
  std::vector<std::uint64_t> primes;
  bool polarized = false;
  bool early_exit = false;
  std::uint64_t subsets_scanned = 0;
  Ring ring;  // ring the witnesses refer to

  nlohmann::json to_json() const;
};

struct CharScanOptions : ScanOptions {
  bool early_exit = false;
};

// β(R/I) depends on the characteristic iff some Δ|σ has torsion. Ideals that
// are not squarefree are polarized first. The zero and unit ideals never
// depend. Output is identical for every worker count; in early-exit mode the
// reported witness is the first one in scan order.
CharDependenceReport char_dependence_scan(const MonomialIdeal& ideal, const CharScanOptions& options = {});

}  // namespace betti
