#pragma once

#include <optional>
#include <vector>

#include "betti/betti_table.hpp"

namespace betti {

// `count` simultaneous decrements of β_{i,j} and β_{i+1,j}.
struct CancellationStep {
  int i = 0;
  int j = 0;
  std::size_t count = 0;
  friend bool operator==(const CancellationStep&, const CancellationStep&) = default;
};

// The unique multiset of consecutive cancellations turning `from` into `to`,
// or nullopt if none exists. Each internal degree j is solved on its own:
// with d_i = from_{i,j} - to_{i,j} the counts satisfy d_i = c_i + c_{i-1}.
// Steps come out sorted by (j, i). Throws PreconditionError when the
// conventions differ.
std::optional<std::vector<CancellationStep>> cancellation_feasible(const BettiTable& from, const BettiTable& to);

// Applies steps to a table; throws PreconditionError if an entry would go
// negative.
BettiTable apply_cancellations(const BettiTable& table, const std::vector<CancellationStep>& steps);

}  // namespace betti
