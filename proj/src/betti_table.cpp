#include "betti/betti_table.hpp"

#include <algorithm>
#include <sstream>

#include "betti/error.hpp"

namespace betti {

std::string to_string(ModuleConvention c) { return c == ModuleConvention::kIdeal ? "ideal" : "quotient"; }

ModuleConvention parse_convention(const std::string& text) {
  if (text == "ideal") return ModuleConvention::kIdeal;
  if (text == "quotient") return ModuleConvention::kQuotient;
  throw InputError("unknown module convention '" + text + "'");
}

std::size_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::size_t value) {
  if (value) entries_[{i, j}] = value;
  else entries_.erase({i, j});
}

std::size_t BettiTable::total(int i) const {
  std::size_t t = 0;
  for (const auto& [key, v] : entries_)
    if (key.first == i) t += v;
  return t;
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [key, v] : entries_) m = std::max(m, key.first);
  return m;
}

std::optional<int> BettiTable::regularity() const {
  std::optional<int> r;
  for (const auto& [key, v] : entries_) r = std::max(r.value_or(key.second - key.first), key.second - key.first);
  return r;
}

BettiTable BettiTable::to_ideal() const {
  if (convention_ == ModuleConvention::kIdeal) return *this;
  BettiTable out(ModuleConvention::kIdeal);
  if (entries_.empty()) {
    out.set(0, 0, 1);  // R/R = 0, so I = R
    return out;
  }
  for (const auto& [key, v] : entries_)
    if (key.first > 0) out.set(key.first - 1, key.second, v);
  return out;
}

BettiTable BettiTable::to_quotient() const {
  if (convention_ == ModuleConvention::kQuotient) return *this;
  BettiTable out(ModuleConvention::kQuotient);
  if (at(0, 0) == 1) return out;
  out.set(0, 0, 1);
  for (const auto& [key, v] : entries_) out.set(key.first + 1, key.second, v);
  return out;
}

std::string BettiTable::render() const {
  const int columns = max_index() + 1;
  int lo = 0, hi = -1;
  bool first = true;
  for (const auto& [key, v] : entries_) {
    int row = key.second - key.first;
    lo = first ? row : std::min(lo, row);
    hi = first ? row : std::max(hi, row);
    first = false;
  }
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{""};
  for (int i = 0; i < columns; ++i) header.push_back(std::to_string(i));
  grid.push_back(header);
  std::vector<std::string> totals{"total"};
  for (int i = 0; i < columns; ++i) totals.push_back(std::to_string(total(i)));
  grid.push_back(totals);
  for (int row = lo; row <= hi; ++row) {
    std::vector<std::string> line{std::to_string(row)};
    for (int i = 0; i < columns; ++i) {
      std::size_t v = at(i, i + row);
      line.push_back(v ? std::to_string(v) : ".");
    }
    grid.push_back(line);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(columns) + 1, 0);
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::string out;
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) text += ' ';
      text += std::string(width[c] - line[c].size(), ' ') + line[c];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text + '\n';
  }
  return out;
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, v] : entries_) entries.push_back({key.first, key.second, v});
  return {{"convention", to_string(convention_)}, {"entries", entries}};
}

BettiTable BettiTable::from_json(const nlohmann::json& j) {
  try {
    BettiTable out(parse_convention(j.at("convention").get<std::string>()));
    for (const auto& e : j.at("entries")) {
      long long count = e.at(2).get<long long>();
      if (count < 0) throw InputError("negative Betti number");
      out.add(e.at(0).get<int>(), e.at(1).get<int>(), static_cast<std::size_t>(count));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed Betti table JSON: ") + e.what());
  }
}

std::size_t MultigradedBetti::at(int i, Face sigma) const {
  auto it = entries_.find({i, sigma});
  return it == entries_.end() ? 0 : it->second;
}

void MultigradedBetti::set(int i, Face sigma, std::size_t value) {
  if (value) entries_[{i, sigma}] = value;
  else entries_.erase({i, sigma});
}

BettiTable MultigradedBetti::graded() const {
  BettiTable out(convention_);
  for (const auto& [key, v] : entries_) out.add(key.first, face_size(key.second), v);
  return out;
}

std::vector<std::vector<std::string>> normalize_table_text(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (!tokens.empty()) out.push_back(std::move(tokens));
  }
  return out;
}

}  // namespace betti
