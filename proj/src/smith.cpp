#include "betti/smith.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace betti {

namespace {

using Row = std::vector<std::pair<std::size_t, mpz_class>>;

class Eliminator {
 public:
  explicit Eliminator(const SparseMatrix& m) : rows_(m.rows), col_rows_(m.cols) {
    for (std::size_t j = 0; j < m.cols; ++j)
      for (auto [i, v] : m.columns[j]) {
        rows_[i].emplace_back(j, mpz_class(static_cast<long>(v)));
        col_rows_[j].insert(i);
      }
    for (auto& r : rows_) std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  std::vector<mpz_class> run() {
    std::vector<mpz_class> diagonal;
    std::size_t r, c;
    while (choose_pivot(r, c)) diagonal.push_back(eliminate(r, c));
    return diagonal;
  }

 private:
  const mpz_class& entry(std::size_t r, std::size_t c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t k) { return e.first < k; });
    return it->second;
  }

  // Least |value|; among unit entries, least fill-in estimate.
  bool choose_pivot(std::size_t& r, std::size_t& c) const {
    bool found = false;
    mpz_class best_abs;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (const auto& [j, v] : rows_[i]) {
        int cmp = found ? mpz_cmpabs(v.get_mpz_t(), best_abs.get_mpz_t()) : -1;
        std::size_t cost = (rows_[i].size() - 1) * (col_rows_[j].size() - 1);
        if (cmp < 0 || (cmp == 0 && cost < best_cost)) {
          found = true;
          best_abs = abs(v);
          best_cost = cost;
          r = i;
          c = j;
        }
      }
    }
    return found;
  }

  // rows_[target] -= q * rows_[source]
  void row_axpy(std::size_t target, const mpz_class& q, std::size_t source) {
    const Row& a = rows_[target];
    const Row& b = rows_[source];
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, k = 0;
    while (i < a.size() || k < b.size()) {
      if (k == b.size() || (i < a.size() && a[i].first < b[k].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[k].first < a[i].first) {
        col_rows_[b[k].first].insert(target);
        out.emplace_back(b[k].first, -q * b[k].second);
        ++k;
      } else {
        mpz_class v = a[i].second - q * b[k].second;
        if (v == 0) col_rows_[a[i].first].erase(target);
        else out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++k;
      }
    }
    rows_[target] = std::move(out);
  }

  mpz_class eliminate(std::size_t r, std::size_t c) {
    while (true) {
      const mpz_class p = entry(r, c);
      // Clear column c below/above the pivot with row operations.
      bool moved = false;
      std::vector<std::size_t> others(col_rows_[c].begin(), col_rows_[c].end());
      for (std::size_t k : others) {
        if (k == r) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), entry(k, c).get_mpz_t(), p.get_mpz_t());
        if (q != 0) row_axpy(k, q, r);
        if (col_rows_[c].count(k)) {
          r = k;
          moved = true;
          break;
        }
      }
      if (moved) continue;
      // Column c now meets only row r, so column operations touch row r alone.
      Row& row = rows_[r];
      Row kept;
      std::size_t next_c = c;
      for (auto& [j, v] : row) {
        if (j == c) {
          kept.emplace_back(j, v);
          continue;
        }
        mpz_class rem;
        mpz_tdiv_r(rem.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        if (rem == 0) {
          col_rows_[j].erase(r);
        } else {
          kept.emplace_back(j, rem);
          if (next_c == c) next_c = j;
        }
      }
      row = std::move(kept);
      if (next_c == c) {
        rows_[r].clear();
        col_rows_[c].clear();
        return abs(p);
      }
      c = next_c;
    }
  }

  std::vector<Row> rows_;
  std::vector<std::set<std::size_t>> col_rows_;
};

}  // namespace

std::vector<mpz_class> SmithForm::torsion() const {
  std::vector<mpz_class> out;
  for (const auto& d : invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

SmithForm smith_normal_form(const SparseMatrix& m) {
  auto diagonal = Eliminator(m).run();
  // Turn the diagonal into a divisibility chain: (a, b) -> (gcd, lcm).
  std::vector<mpz_class> big;
  std::size_t ones = 0;
  for (auto& d : diagonal) {
    if (d == 1) ++ones;
    else big.push_back(std::move(d));
  }
  std::sort(big.begin(), big.end());
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j) {
      mpz_class g = gcd(big[i], big[j]);
      mpz_class l = big[i] / g * big[j];
      big[i] = g;
      big[j] = l;
    }
  SmithForm out;
  out.invariant_factors.assign(ones, mpz_class(1));
  for (auto& d : big) out.invariant_factors.push_back(std::move(d));
  std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
  return out;
}

}  // namespace betti
