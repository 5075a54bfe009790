#pragma once

#include <cstdint>

#include "betti/field.hpp"
#include "betti/sparse_matrix.hpp"

namespace betti {

// Column reduction by leading (largest) row index. These routines share no
// code with the Smith normal form so the two can check each other.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p);
// Exact rank over Q by fraction-free reduction with content removal.
std::size_t rank_rational(const SparseMatrix& m);
std::size_t rank_over(const SparseMatrix& m, const FieldSpec& field);

}  // namespace betti
