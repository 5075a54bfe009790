#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "betti/complex.hpp"

namespace betti {

// Shedding witness. A leaf (empty `vertex`) is a simplex; otherwise
// children[0] decomposes the link and children[1] the deletion of `vertex`.
struct SheddingTree {
  std::string vertex;
  std::vector<SheddingTree> children;

  std::size_t size() const;
};

struct VertexDecomposition {
  bool decomposable = false;
  std::optional<SheddingTree> witness;
};

// Exhaustive search for a shedding vertex, candidates tried in ascending id.
// Results are memoized on complexes relabeled to dense vertex ids; the memo
// belongs to the checker, so separate checkers share nothing.
class VertexDecomposabilityChecker {
 public:
  VertexDecomposition check(const SimplicialComplex& complex);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  bool decide(const SimplicialComplex& complex);
  SheddingTree witness(const SimplicialComplex& complex);
  std::optional<VarId> shedding_vertex(const SimplicialComplex& complex);

  std::map<std::vector<Face>, bool> memo_;
};

// The empty complex {∅} counts as the (-1)-simplex. Throws on the void complex.
VertexDecomposition is_vertex_decomposable(const SimplicialComplex& complex);

}  // namespace betti
