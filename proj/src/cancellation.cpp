#include "betti/cancellation.hpp"

#include "betti/error.hpp"

namespace betti {

std::optional<std::vector<CancellationStep>> cancellation_feasible(const BettiTable& from, const BettiTable& to) {
  if (from.convention() != to.convention())
    throw PreconditionError("cancellation needs both tables in the same convention");
  std::map<int, std::pair<int, int>> span;  // j -> [min i, max i]
  auto note = [&](int i, int j) {
    auto [it, fresh] = span.emplace(j, std::make_pair(i, i));
    if (!fresh) it->second = {std::min(it->second.first, i), std::max(it->second.second, i)};
  };
  for (const auto& [key, v] : from.entries()) note(key.first, key.second);
  for (const auto& [key, v] : to.entries()) note(key.first, key.second);

  std::vector<CancellationStep> steps;
  for (const auto& [j, range] : span) {
    long long prev = 0;
    for (int i = range.first; i <= range.second + 1; ++i) {
      const long long d = static_cast<long long>(from.at(i, j)) - static_cast<long long>(to.at(i, j));
      if (d < 0) return std::nullopt;
      const long long c = d - prev;
      if (c < 0) return std::nullopt;
      if (c > 0) steps.push_back({i, j, static_cast<std::size_t>(c)});
      prev = c;
    }
  }
  return steps;
}

BettiTable apply_cancellations(const BettiTable& table, const std::vector<CancellationStep>& steps) {
  BettiTable out = table;
  for (const auto& s : steps) {
    for (int i : {s.i, s.i + 1}) {
      if (out.at(i, s.j) < s.count) throw PreconditionError("cancellation drives an entry negative");
      out.set(i, s.j, out.at(i, s.j) - s.count);
    }
  }
  return out;
}

}  // namespace betti
