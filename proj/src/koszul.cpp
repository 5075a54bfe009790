#include "betti/koszul.hpp"

#include <gmpxx.h>

#include "betti/error.hpp"

namespace betti {

namespace {

// Dense rank by plain Gaussian elimination. Kept separate from the sparse
// routines on purpose.
std::size_t dense_rank_mod(std::vector<std::vector<std::int64_t>> a, std::uint64_t p) {
  const auto P = static_cast<std::int64_t>(p);
  auto inv = [P](std::int64_t x) {
    std::int64_t r = 1, b = x, e = P - 2;
    for (; e; e >>= 1, b = b * b % P)
      if (e & 1) r = r * b % P;
    return r;
  };
  for (auto& row : a)
    for (auto& v : row) v = ((v % P) + P) % P;
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t s = inv(a[rank][c]);
    for (auto& v : a[rank]) v = v * s % P;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % P + P) % P;
    }
    ++rank;
  }
  return rank;
}

std::size_t dense_rank_q(const std::vector<std::vector<std::int64_t>>& in) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& row : in) a.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t dense_rank(const std::vector<std::vector<std::int64_t>>& a, const FieldSpec& field) {
  if (a.empty() || a[0].empty()) return 0;
  return field.is_rational() ? dense_rank_q(a) : dense_rank_mod(a, field.characteristic());
}

Monomial minus_face(const Monomial& a, Face tau) {
  auto e = a.exponents();
  for (std::size_t v : face_vertices(tau)) --e[v];
  return Monomial(std::move(e));
}

}  // namespace

std::vector<std::size_t> koszul_oracle(const MonomialIdeal& ideal, const FieldSpec& field, const Monomial& a) {
  const std::size_t n = ideal.ring().size();
  if (a.num_vars() != n) throw InputError("multidegree has the wrong number of variables");
  const Face supp = a.support_face();
  const std::size_t s = static_cast<std::size_t>(face_size(supp));
  if (s > kKoszulBound) throw CapacityError("Koszul strand support too large", kKoszulBound);

  // basis[i]: the τ ⊆ supp(a) with |τ| = i and x^{a-τ} ∉ I.
  std::vector<std::vector<Face>> basis(s + 1);
  for (Face tau = supp;; tau = (tau - 1) & supp) {
    if (!ideal.contains(minus_face(a, tau))) basis[face_size(tau)].push_back(tau);
    if (tau == 0) break;
  }
  for (auto& b : basis) std::sort(b.begin(), b.end());

  // rank of d_i : K_i -> K_{i-1}
  std::vector<std::size_t> rank(s + 2, 0);
  for (std::size_t i = 1; i <= s; ++i) {
    const auto& src = basis[i];
    const auto& dst = basis[i - 1];
    if (src.empty() || dst.empty()) continue;
    std::vector<std::vector<std::int64_t>> m(dst.size(), std::vector<std::int64_t>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      int pos = 0;
      for (std::size_t v : face_vertices(src[c])) {
        Face lower = src[c] & ~bit(v);
        auto it = std::lower_bound(dst.begin(), dst.end(), lower);
        if (it != dst.end() && *it == lower) m[static_cast<std::size_t>(it - dst.begin())][c] = pos % 2 ? -1 : 1;
        ++pos;
      }
    }
    rank[i] = dense_rank(m, field);
  }
  std::vector<std::size_t> out(s + 1);
  for (std::size_t i = 0; i <= s; ++i) out[i] = basis[i].size() - rank[i] - rank[i + 1];
  return out;
}

std::vector<std::size_t> koszul_oracle(const MonomialIdeal& ideal, const FieldSpec& field, Face sigma) {
  return koszul_oracle(ideal, field, Monomial::from_face(ideal.ring().size(), sigma));
}

MultigradedBetti koszul_multigraded(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (!ideal.is_squarefree()) throw NotSquarefreeError();
  const std::size_t n = ideal.ring().size();
  if (n > kKoszulBound) throw CapacityError("Koszul oracle ring too large", kKoszulBound);
  MultigradedBetti out(ideal.ring(), ModuleConvention::kQuotient);
  const Face all = full_face(n);
  for (Face sigma = 0;; ++sigma) {
    auto dims = koszul_oracle(ideal, field, sigma);
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (dims[i]) out.set(static_cast<int>(i), sigma, dims[i]);
    if (sigma == all) break;
  }
  return out;
}

BettiTable koszul_graded_table(const MonomialIdeal& ideal, const FieldSpec& field, ModuleConvention convention) {
  BettiTable out(ModuleConvention::kQuotient);
  if (ideal.is_unit()) return out.in(convention);
  const std::size_t n = ideal.ring().size();
  auto top = ideal.max_exponents();
  std::vector<Exponent> e(n, 0);
  // Odometer over the box 0 <= e <= top.
  for (;;) {
    Monomial a(e);
    auto dims = koszul_oracle(ideal, field, a);
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (dims[i]) out.add(static_cast<int>(i), static_cast<int>(a.degree()), dims[i]);
    std::size_t v = 0;
    while (v < n && e[v] == top[v]) e[v++] = 0;
    if (v == n) break;
    ++e[v];
  }
  return out.in(convention);
}

}  // namespace betti
