#include "betti/sparse_matrix.hpp"

#include <map>
#include <sstream>

#include "betti/error.hpp"

namespace betti {

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
  std::size_t r = dense.size();
  std::size_t c = r ? dense[0].size() : 0;
  SparseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (dense[i].size() != c) throw InputError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (dense[i][j]) m.columns[j].emplace_back(i, dense[i][j]);
  }
  return m;
}

std::vector<std::vector<std::int64_t>> SparseMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j)
    for (auto [i, v] : columns[j]) out[i][j] = v;
  return out;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns) n += c.size();
  return n;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
  if (cols != rhs.rows) throw InputError("matrix shapes do not compose");
  SparseMatrix out(rows, rhs.cols);
  for (std::size_t j = 0; j < rhs.cols; ++j) {
    std::map<std::size_t, std::int64_t> acc;
    for (auto [k, b] : rhs.columns[j])
      for (auto [i, a] : columns[k]) acc[i] += a * b;
    for (auto [i, v] : acc)
      if (v) out.columns[j].emplace_back(i, v);
  }
  return out;
}

std::string SparseMatrix::to_text(int dim) const {
  std::ostringstream out;
  out << dim << ' ' << rows << ' ' << cols << '\n';
  for (std::size_t j = 0; j < cols; ++j)
    for (auto [i, v] : columns[j]) out << i << ' ' << j << ' ' << v << '\n';
  return out.str();
}

}  // namespace betti
