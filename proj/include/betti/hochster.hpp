#pragma once

#include "betti/betti_table.hpp"
#include "betti/field.hpp"
#include "betti/ideal.hpp"

namespace betti {

struct ScanOptions {
  // Largest number of scanned vertices before a CapacityError.
  std::size_t max_vertices = 20;
  bool allow_large = false;
  unsigned jobs = 1;
};

// Variables that occur in some generator. Vertices outside this set are cone
// points of every restriction containing them, so scans may skip them.
Face active_vertices(const MonomialIdeal& ideal);

// β_{i,σ}(R/I) = dim H̃_{|σ|-i-1}(Δ|σ) for every squarefree σ, quotient
// convention. Requires a squarefree ideal other than (1).
MultigradedBetti hochster_multigraded(const MonomialIdeal& ideal, const FieldSpec& field,
                                      const ScanOptions& options = {});

// Graded table in the requested convention; other ideals are polarized first.
BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field,
                       ModuleConvention convention = ModuleConvention::kQuotient,
                       const ScanOptions& options = {});

namespace detail {
void check_scan_capacity(std::size_t vertices, const ScanOptions& options);
}

}  // namespace betti
