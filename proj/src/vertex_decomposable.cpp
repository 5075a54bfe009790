#include "betti/vertex_decomposable.hpp"

#include "betti/error.hpp"

namespace betti {

namespace {

// Facets relabeled onto the vertices they use, in ascending order.
std::vector<Face> canonical_key(const SimplicialComplex& complex) {
  Face used = 0;
  for (Face f : complex.facets()) used |= f;
  auto verts = face_vertices(used);
  std::vector<Face> key;
  key.reserve(complex.num_facets());
  for (Face f : complex.facets()) {
    Face g = 0;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (f & bit(verts[k])) g |= bit(k);
    key.push_back(g);
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

std::size_t SheddingTree::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

std::optional<VarId> VertexDecomposabilityChecker::shedding_vertex(const SimplicialComplex& complex) {
  const int d = complex.dimension();
  Face used = 0;
  for (Face f : complex.facets()) used |= f;
  for (auto x : face_vertices(used)) {
    auto lk = link(complex, x);
    auto del = deletion(complex, x);
    if (lk.dimension() != d - 1 || del.dimension() != d) continue;
    if (decide(lk) && decide(del)) return x;
  }
  return std::nullopt;
}

bool VertexDecomposabilityChecker::decide(const SimplicialComplex& complex) {
  if (!complex.is_pure()) return false;
  if (complex.num_facets() == 1) return true;
  auto key = canonical_key(complex);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  auto x = shedding_vertex(complex);
  memo_[std::move(key)] = x.has_value();
  return x.has_value();
}

SheddingTree VertexDecomposabilityChecker::witness(const SimplicialComplex& complex) {
  if (complex.num_facets() == 1) return {};
  auto x = shedding_vertex(complex);
  SheddingTree tree{complex.universe().name(*x), {}};
  tree.children.push_back(witness(link(complex, *x)));
  tree.children.push_back(witness(deletion(complex, *x)));
  return tree;
}

VertexDecomposition VertexDecomposabilityChecker::check(const SimplicialComplex& complex) {
  if (complex.is_void()) throw PreconditionError("vertex-decomposability of the void complex");
  if (!decide(complex)) return {false, std::nullopt};
  return {true, witness(complex)};
}

VertexDecomposition is_vertex_decomposable(const SimplicialComplex& complex) {
  VertexDecomposabilityChecker checker;
  return checker.check(complex);
}

}  // namespace betti
