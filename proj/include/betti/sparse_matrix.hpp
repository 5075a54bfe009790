#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace betti {

// Column-major sparse integer matrix; each column holds (row, value) pairs
// sorted by row with no zero values.
struct SparseMatrix {
  using Entry = std::pair<std::size_t, std::int64_t>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
  std::vector<std::vector<std::int64_t>> to_dense() const;

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }
  // this * rhs, exact in 64 bits (boundary products stay tiny).
  SparseMatrix multiply(const SparseMatrix& rhs) const;

  // Debug export: a `dim rows cols` header line, then `row col value` triplets.
  std::string to_text(int dim) const;
};

}  // namespace betti
