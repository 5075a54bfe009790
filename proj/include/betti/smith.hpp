#pragma once

#include <vector>

#include <gmpxx.h>

#include "betti/sparse_matrix.hpp"

namespace betti {

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix, all >= 1.
struct SmithForm {
  std::vector<mpz_class> invariant_factors;

  std::size_t rank() const { return invariant_factors.size(); }
  // The factors greater than one.
  std::vector<mpz_class> torsion() const;
};

// Exact elimination over Z with arbitrary-precision entries. Pivots are
// entries of least absolute value; a pivot that fails to divide its row or
// column is replaced by the Euclidean remainder until it does.
SmithForm smith_normal_form(const SparseMatrix& m);

}  // namespace betti
