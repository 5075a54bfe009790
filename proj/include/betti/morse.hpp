#pragma once

#include <string>
#include <utility>
#include <vector>

#include "betti/complex.hpp"

namespace betti {

// Pairs (lower, upper) of faces with upper = lower ∪ {v}.
struct MorseMatching {
  std::vector<std::pair<Face, Face>> pairs;
};

struct MatchingVerdict {
  bool valid = true;     // pairs are faces one vertex apart, no face reused
  bool complete = true;  // every face, ∅ included, is matched
  bool acyclic = true;   // the modified Hasse digraph has no directed cycle
  std::vector<Face> unmatched;
  std::string problem;   // first failure, empty when ok()
  bool ok() const { return valid && complete && acyclic; }
};

// Checks a matching on the Hasse diagram of `complex` (∅ included). Edges
// point from each face to its codimension-one faces; matched edges are
// reversed. Acyclicity is decided by depth-first search.
MatchingVerdict verify_matching(const SimplicialComplex& complex, const MorseMatching& matching);

struct ConingMatching {
  SimplicialComplex cone;
  MorseMatching matching;
  MatchingVerdict verdict;
};

// Builds Γ̃ and matches σ ∪ τ with σ ∪ τ ∪ {y_j} for the least j with σ in
// Γ_j, then verifies the result. Cover violations throw as in cone_tilde.
ConingMatching coning_matching(const SimplicialComplex& gamma, const std::vector<SimplicialComplex>& covers);

}  // namespace betti
