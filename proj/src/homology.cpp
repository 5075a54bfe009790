#include "betti/homology.hpp"

#include <algorithm>
#include <set>

#include "betti/field_rank.hpp"
#include "betti/smith.hpp"

namespace betti {

std::string HomologyGroup::to_string() const {
  std::string out;
  if (rank == 1) out = "Z";
  else if (rank > 1) out = "Z^" + std::to_string(rank);
  for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
  return out.empty() ? "0" : out;
}

ChainBoundary::ChainBoundary(const std::vector<Face>& faces) {
  for (Face f : faces) {
    std::size_t slot = static_cast<std::size_t>(face_size(f));
    if (faces_by_dim_.size() <= slot) faces_by_dim_.resize(slot + 1);
    faces_by_dim_[slot].push_back(f);
  }
  for (std::size_t slot = 1; slot < faces_by_dim_.size(); ++slot) {
    const auto& lower = faces_by_dim_[slot - 1];
    const auto& upper = faces_by_dim_[slot];
    SparseMatrix m(lower.size(), upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
      Face f = upper[j];
      std::int64_t sign = 1;
      auto& col = m.columns[j];
      for (Face rest = f; rest; rest &= rest - 1) {
        Face g = f & ~(rest & -rest);
        auto it = std::lower_bound(lower.begin(), lower.end(), g);
        col.emplace_back(static_cast<std::size_t>(it - lower.begin()), sign);
        sign = -sign;
      }
      std::sort(col.begin(), col.end());
    }
    boundaries_.push_back(std::move(m));
  }
}

std::size_t ChainBoundary::num_faces(int k) const {
  std::size_t slot = static_cast<std::size_t>(k + 1);
  return k >= -1 && slot < faces_by_dim_.size() ? faces_by_dim_[slot].size() : 0;
}

ChainBoundary boundary(const SimplicialComplex& complex, std::size_t max_faces) {
  return ChainBoundary(complex.faces(max_faces));
}

std::vector<HomologyGroup> reduced_homology_Z(const ChainBoundary& chain) {
  const int top = chain.top_dimension();
  std::vector<SmithForm> snf;
  for (int k = 0; k <= top; ++k) snf.push_back(smith_normal_form(chain.boundary(k)));
  auto rank_of = [&](int k) -> std::size_t { return k >= 0 && k <= top ? snf[k].rank() : 0; };
  std::vector<HomologyGroup> out;
  for (int k = -1; k <= top; ++k) {
    HomologyGroup h;
    h.rank = chain.num_faces(k) - rank_of(k) - rank_of(k + 1);
    if (k + 1 <= top) h.torsion = snf[k + 1].torsion();
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<HomologyGroup> reduced_homology_Z(const SimplicialComplex& complex) {
  return reduced_homology_Z(boundary(complex));
}

HomologyGroup homology_Z(const SimplicialComplex& complex, int i) {
  auto all = reduced_homology_Z(complex);
  std::size_t slot = static_cast<std::size_t>(i + 1);
  return i >= -1 && slot < all.size() ? all[slot] : HomologyGroup{};
}

std::vector<std::size_t> reduced_betti_numbers(const ChainBoundary& chain, const FieldSpec& field) {
  const int top = chain.top_dimension();
  std::vector<std::size_t> ranks;
  for (int k = 0; k <= top; ++k) ranks.push_back(rank_over(chain.boundary(k), field));
  auto rank_of = [&](int k) -> std::size_t { return k >= 0 && k <= top ? ranks[k] : 0; };
  std::vector<std::size_t> out;
  for (int k = -1; k <= top; ++k) out.push_back(chain.num_faces(k) - rank_of(k) - rank_of(k + 1));
  return out;
}

std::vector<std::size_t> reduced_betti_numbers(const SimplicialComplex& complex, const FieldSpec& field) {
  return reduced_betti_numbers(boundary(complex), field);
}

std::size_t homology_dim(const SimplicialComplex& complex, int i, const FieldSpec& field) {
  auto all = reduced_betti_numbers(complex, field);
  std::size_t slot = static_cast<std::size_t>(i + 1);
  return i >= -1 && slot < all.size() ? all[slot] : 0;
}

std::vector<std::uint64_t> prime_divisors(const mpz_class& n) {
  std::vector<std::uint64_t> out;
  mpz_class rest = abs(n);
  for (std::uint64_t p = 2; rest > 1; ++p) {
    mpz_class pp(std::to_string(p));
    if (pp * pp > rest) {
      out.push_back(rest.get_ui());
      break;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) rest /= static_cast<unsigned long>(p);
    }
  }
  return out;
}

std::vector<std::uint64_t> torsion_primes(const std::vector<HomologyGroup>& homology) {
  std::set<std::uint64_t> primes;
  for (const auto& h : homology)
    for (const auto& t : h.torsion)
      for (auto p : prime_divisors(t)) primes.insert(p);
  return {primes.begin(), primes.end()};
}

std::vector<std::uint64_t> torsion_primes(const SimplicialComplex& complex) {
  return torsion_primes(reduced_homology_Z(complex));
}

}  // namespace betti
