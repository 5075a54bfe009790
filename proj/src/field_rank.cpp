#include "betti/field_rank.hpp"

#include <unordered_map>

#include <gmpxx.h>

namespace betti {

namespace {

std::uint64_t mod(std::int64_t v, std::uint64_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

template <class T>
using Vec = std::vector<std::pair<std::size_t, T>>;

}  // namespace

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  // pivots[row] = reduced column whose leading row is `row`, normalized to 1.
  std::unordered_map<std::size_t, Vec<std::uint64_t>> pivots;
  for (const auto& column : m.columns) {
    Vec<std::uint64_t> v;
    for (auto [i, x] : column)
      if (auto r = mod(x, p)) v.emplace_back(i, r);
    while (!v.empty()) {
      auto it = pivots.find(v.back().first);
      if (it == pivots.end()) break;
      std::uint64_t f = v.back().second;
      const auto& piv = it->second;
      Vec<std::uint64_t> out;
      out.reserve(v.size() + piv.size());
      std::size_t a = 0, b = 0;
      while (a < v.size() || b < piv.size()) {
        if (b == piv.size() || (a < v.size() && v[a].first < piv[b].first)) {
          out.push_back(v[a++]);
        } else if (a == v.size() || piv[b].first < v[a].first) {
          out.emplace_back(piv[b].first, (p - piv[b].second * f % p) % p);
          ++b;
        } else {
          std::uint64_t x = (v[a].second + p - piv[b].second * f % p) % p;
          if (x) out.emplace_back(v[a].first, x);
          ++a;
          ++b;
        }
      }
      v = std::move(out);
    }
    if (v.empty()) continue;
    std::uint64_t inv = inverse_mod(v.back().second, p);
    for (auto& e : v) e.second = e.second * inv % p;
    pivots.emplace(v.back().first, std::move(v));
  }
  return pivots.size();
}

std::size_t rank_rational(const SparseMatrix& m) {
  std::unordered_map<std::size_t, Vec<mpz_class>> pivots;
  for (const auto& column : m.columns) {
    Vec<mpz_class> v;
    for (auto [i, x] : column) v.emplace_back(i, mpz_class(static_cast<long>(x)));
    while (!v.empty()) {
      auto it = pivots.find(v.back().first);
      if (it == pivots.end()) break;
      const auto& piv = it->second;
      // v <- (lead(piv) * v - lead(v) * piv) / content
      mpz_class a_scale = piv.back().second;
      mpz_class b_scale = v.back().second;
      mpz_class g = gcd(a_scale, b_scale);
      a_scale /= g;
      b_scale /= g;
      Vec<mpz_class> out;
      out.reserve(v.size() + piv.size());
      std::size_t a = 0, b = 0;
      while (a < v.size() || b < piv.size()) {
        if (b == piv.size() || (a < v.size() && v[a].first < piv[b].first)) {
          out.emplace_back(v[a].first, a_scale * v[a].second);
          ++a;
        } else if (a == v.size() || piv[b].first < v[a].first) {
          out.emplace_back(piv[b].first, -b_scale * piv[b].second);
          ++b;
        } else {
          mpz_class x = a_scale * v[a].second - b_scale * piv[b].second;
          if (x != 0) out.emplace_back(v[a].first, std::move(x));
          ++a;
          ++b;
        }
      }
      mpz_class content = 0;
      for (const auto& e : out) content = gcd(content, e.second);
      if (content > 1)
        for (auto& e : out) e.second /= content;
      v = std::move(out);
    }
    if (!v.empty()) pivots.emplace(v.back().first, std::move(v));
  }
  return pivots.size();
}

std::size_t rank_over(const SparseMatrix& m, const FieldSpec& field) {
  return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

}  // namespace betti
