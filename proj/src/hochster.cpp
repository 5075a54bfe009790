#include "betti/hochster.hpp"

#include "betti/complex.hpp"
#include "betti/error.hpp"
#include "betti/homology.hpp"
#include "parallel.hpp"

namespace betti {

namespace detail {

void check_scan_capacity(std::size_t vertices, const ScanOptions& options) {
  if (vertices > kMaxVertices) throw CapacityError("scan needs more vertices than a mask holds", kMaxVertices);
  if (vertices > 40) throw CapacityError("scan of 2^" + std::to_string(vertices) + " subsets refused", 40);
  if (vertices > options.max_vertices && !options.allow_large)
    throw CapacityError("scan over " + std::to_string(vertices) + " vertices needs --allow-large",
                        options.max_vertices);
}

}  // namespace detail

Face active_vertices(const MonomialIdeal& ideal) {
  Face used = 0;
  for (Face f : ideal.generator_faces()) used |= f;
  return used;
}

MultigradedBetti hochster_multigraded(const MonomialIdeal& ideal, const FieldSpec& field,
                                      const ScanOptions& options) {
  if (!ideal.is_squarefree()) throw NotSquarefreeError();
  if (ideal.is_unit()) throw DegenerateIdealError("Hochster's formula needs a proper ideal");
  MultigradedBetti out(ideal.ring(), ModuleConvention::kQuotient);
  const Face used = active_vertices(ideal);
  const std::size_t k = static_cast<std::size_t>(face_size(used));
  detail::check_scan_capacity(k, options);
  out.set(0, 0, 1);
  if (k == 0) return out;

  const auto faces = restriction(sr_complex(ideal), used).faces();
  const std::uint64_t total = std::uint64_t{1} << k;
  const std::uint64_t chunk = 256;
  std::vector<std::vector<std::tuple<int, Face, std::size_t>>> found((total + chunk - 1) / chunk);
  detail::parallel_chunks(total, options.jobs, chunk, [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
    std::vector<Face> sub;
    for (std::uint64_t t = std::max<std::uint64_t>(begin, 1); t < end; ++t) {
      Face sigma = detail::deposit_bits(t, used);
      sub.clear();
      for (Face f : faces)
        if (is_subset(f, sigma)) sub.push_back(f);
      auto dims = reduced_betti_numbers(ChainBoundary(sub), field);
      const int s = face_size(sigma);
      for (std::size_t slot = 0; slot < dims.size(); ++slot)
        if (dims[slot]) found[c].emplace_back(s - static_cast<int>(slot), sigma, dims[slot]);
    }
  });
  for (const auto& part : found)
    for (const auto& [i, sigma, v] : part) out.set(i, sigma, v);
  return out;
}

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field, ModuleConvention convention,
                       const ScanOptions& options) {
  if (ideal.is_unit()) return BettiTable(ModuleConvention::kQuotient).in(convention);
  BettiTable quotient = ideal.is_squarefree()
                            ? hochster_multigraded(ideal, field, options).graded()
                            : hochster_multigraded(polarize(ideal).ideal, field, options).graded();
  return quotient.in(convention);
}

}  // namespace betti
