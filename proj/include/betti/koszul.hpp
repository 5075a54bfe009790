#pragma once

#include <vector>

#include "betti/betti_table.hpp"
#include "betti/field.hpp"
#include "betti/ideal.hpp"

namespace betti {

// Largest support of a multidegree the oracle accepts.
inline constexpr std::size_t kKoszulBound = 14;

// dim Tor_i(k, R/I)_a for i = 0 .. |supp a|, from the degree-a strand of the
// Koszul complex on all variables tensored with R/I. Works for any monomial
// ideal and any multidegree a; shares no code with the Hochster path.
std::vector<std::size_t> koszul_oracle(const MonomialIdeal& ideal, const FieldSpec& field, const Monomial& a);
std::vector<std::size_t> koszul_oracle(const MonomialIdeal& ideal, const FieldSpec& field, Face sigma);

// All squarefree multidegrees of a squarefree ideal, quotient convention.
MultigradedBetti koszul_multigraded(const MonomialIdeal& ideal, const FieldSpec& field);

// Graded table of R/I summed over every multidegree below the lcm of the
// generators (where all nonzero entries live). Any monomial ideal.
BettiTable koszul_graded_table(const MonomialIdeal& ideal, const FieldSpec& field,
                               ModuleConvention convention = ModuleConvention::kQuotient);

}  // namespace betti
