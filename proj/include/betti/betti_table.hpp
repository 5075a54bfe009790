#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "betti/face.hpp"
#include "betti/monomial.hpp"

namespace betti {

// Whether a table describes I itself or R/I. β_{i,j}(I) = β_{i+1,j}(R/I).
enum class ModuleConvention { kIdeal, kQuotient };

std::string to_string(ModuleConvention c);
// "ideal" or "quotient"; throws InputError otherwise.
ModuleConvention parse_convention(const std::string& text);

// Graded Betti numbers β_{i,j}, keyed by homological index i and internal
// degree j. Zero entries are never stored.
class BettiTable {
 public:
  explicit BettiTable(ModuleConvention convention = ModuleConvention::kQuotient) : convention_(convention) {}

  ModuleConvention convention() const { return convention_; }
  std::size_t at(int i, int j) const;
  void set(int i, int j, std::size_t value);
  void add(int i, int j, std::size_t value) { set(i, j, at(i, j) + value); }
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  std::size_t total(int i) const;
  // Largest i with a nonzero entry, -1 for the empty table.
  int max_index() const;
  // max (j - i) over nonzero entries.
  std::optional<int> regularity() const;

  // Re-indexes between conventions. Going to the quotient adds β_{0,0} = 1
  // unless the ideal is the unit ideal (β_{0,0}(I) = 1).
  BettiTable to_ideal() const;
  BettiTable to_quotient() const;
  BettiTable in(ModuleConvention c) const { return c == ModuleConvention::kIdeal ? to_ideal() : to_quotient(); }

  // Column i, row r shows β_{i,i+r}; a `total` row; zeros print as `.`.
  // Columns are right-aligned and separated by one space.
  std::string render() const;

  // {"convention": "...", "entries": [[i, j, count], ...]}
  nlohmann::json to_json() const;
  static BettiTable from_json(const nlohmann::json& j);

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  ModuleConvention convention_;
  std::map<std::pair<int, int>, std::size_t> entries_;
};

// Multigraded Betti numbers β_{i,σ} with squarefree multidegrees σ given as
// masks over `ring`.
class MultigradedBetti {
 public:
  MultigradedBetti(Ring ring, ModuleConvention convention) : ring_(std::move(ring)), convention_(convention) {}

  const Ring& ring() const { return ring_; }
  ModuleConvention convention() const { return convention_; }
  std::size_t at(int i, Face sigma) const;
  void set(int i, Face sigma, std::size_t value);
  const std::map<std::pair<int, Face>, std::size_t>& entries() const { return entries_; }

  // Sums over |σ| = j.
  BettiTable graded() const;

  friend bool operator==(const MultigradedBetti&, const MultigradedBetti&) = default;

 private:
  Ring ring_;
  ModuleConvention convention_;
  std::map<std::pair<int, Face>, std::size_t> entries_;
};

// Splits text into lines of whitespace-separated tokens, dropping empty lines.
std::vector<std::vector<std::string>> normalize_table_text(const std::string& text);

}  // namespace betti
