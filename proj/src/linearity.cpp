#include "betti/linearity.hpp"

#include "betti/error.hpp"

namespace betti {

bool is_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field, unsigned t,
                          const ScanOptions& options) {
  if (!(graded_piece(ideal, t) == ideal)) return false;
  const BettiTable table = betti_table(ideal, field, ModuleConvention::kIdeal, options);
  for (const auto& [key, v] : table.entries())
    if (key.second != key.first + static_cast<int>(t)) return false;
  return true;
}

ComponentwiseReport is_componentwise_linear(const MonomialIdeal& ideal, const FieldSpec& field,
                                            const ScanOptions& options) {
  ComponentwiseReport report;
  report.first_degree = d_of(ideal);
  const auto reg = betti_table(ideal, field, ModuleConvention::kIdeal, options).regularity();
  report.last_degree = static_cast<unsigned>(*reg);
  for (unsigned t = report.first_degree; t <= report.last_degree; ++t) {
    const bool linear = is_linear_resolution(graded_piece(ideal, t), field, t, options);
    report.degrees.push_back({t, linear});
    if (!linear && !report.first_failure) {
      report.first_failure = t;
      report.componentwise_linear = false;
    }
  }
  return report;
}

PowersReport powers_report(const MonomialIdeal& ideal, VarId x, const CharScanOptions& options) {
  const PowerSplit split = power_split(ideal, x);
  PowersReport report;
  report.power = split.power;
  report.dep_ideal = char_dependence_scan(ideal, options).depends;
  report.dep_rest = char_dependence_scan(split.rest, options).depends;
  report.dep_colon = char_dependence_scan(split.colon, options).depends;
  return report;
}

}  // namespace betti
