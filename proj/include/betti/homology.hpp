#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "betti/complex.hpp"
#include "betti/field.hpp"
#include "betti/sparse_matrix.hpp"

namespace betti {

// Finitely generated abelian group Z^rank ⊕ ⊕ Z/t_k, torsion ascending.
struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  // "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Augmented chain complex: faces_by_dim[k + 1] holds the k-faces (∅ is the
// single (-1)-face) in ascending mask order; boundary(k) maps k-faces to
// (k-1)-faces with sign (-1)^p for dropping the p-th smallest vertex.
class ChainBoundary {
 public:
  ChainBoundary() = default;
  // `faces` must be closed under subsets and sorted canonically.
  explicit ChainBoundary(const std::vector<Face>& faces);

  // -2 for the void complex.
  int top_dimension() const { return static_cast<int>(faces_by_dim_.size()) - 2; }
  std::size_t num_faces(int k) const;
  const std::vector<Face>& faces(int k) const { return faces_by_dim_.at(k + 1); }
  // Defined for 0 <= k <= top_dimension().
  const SparseMatrix& boundary(int k) const { return boundaries_.at(k); }

 private:
  std::vector<std::vector<Face>> faces_by_dim_;
  std::vector<SparseMatrix> boundaries_;
};

ChainBoundary boundary(const SimplicialComplex& complex,
                       std::size_t max_faces = SimplicialComplex::kDefaultFaceBound);

// Reduced homology over Z in degrees -1 .. top (index k + 1).
std::vector<HomologyGroup> reduced_homology_Z(const ChainBoundary& chain);
std::vector<HomologyGroup> reduced_homology_Z(const SimplicialComplex& complex);
HomologyGroup homology_Z(const SimplicialComplex& complex, int i);

// Reduced Betti numbers over a field in degrees -1 .. top (index k + 1),
// from ranks computed directly over the field.
std::vector<std::size_t> reduced_betti_numbers(const ChainBoundary& chain, const FieldSpec& field);
std::vector<std::size_t> reduced_betti_numbers(const SimplicialComplex& complex, const FieldSpec& field);
std::size_t homology_dim(const SimplicialComplex& complex, int i, const FieldSpec& field);

std::vector<std::uint64_t> prime_divisors(const mpz_class& n);
// Primes dividing some torsion coefficient of the reduced integral homology.
std::vector<std::uint64_t> torsion_primes(const std::vector<HomologyGroup>& homology);
std::vector<std::uint64_t> torsion_primes(const SimplicialComplex& complex);

}  // namespace betti
