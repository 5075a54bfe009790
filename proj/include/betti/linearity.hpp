#pragma once

#include <optional>
#include <vector>

#include "betti/char_scan.hpp"
#include "betti/field.hpp"
#include "betti/hochster.hpp"
#include "betti/ideal.hpp"

namespace betti {

// I = (I_t)R and β_{i,j}(I) = 0 whenever j != i + t.
bool is_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field, unsigned t,
                          const ScanOptions& options = {});

struct DegreeVerdict {
  unsigned t = 0;
  bool linear = false;
};

// Componentwise linearity checked for t in [first_degree, last_degree]. The
// upper end is reg(I) over the same field: from there on (I_t)R = I ∩ m^t has
// a linear resolution, so the finite range decides the property.
struct ComponentwiseReport {
  bool componentwise_linear = true;
  unsigned first_degree = 0;
  unsigned last_degree = 0;
  std::optional<unsigned> first_failure;
  std::vector<DegreeVerdict> degrees;
};

// Throws DegenerateIdealError on the zero ideal.
ComponentwiseReport is_componentwise_linear(const MonomialIdeal& ideal, const FieldSpec& field,
                                            const ScanOptions& options = {});

// Characteristic dependence of I, of J (the generators not divisible by x^t)
// and of (I : x), for the least t with x^t in I.
struct PowersReport {
  bool dep_ideal = false;
  bool dep_rest = false;
  bool dep_colon = false;
  unsigned power = 0;
  bool consistent() const { return dep_ideal == (dep_rest || dep_colon); }
};

// Throws PreconditionError if no power of x lies in I.
PowersReport powers_report(const MonomialIdeal& ideal, VarId x, const CharScanOptions& options = {});

}  // namespace betti
