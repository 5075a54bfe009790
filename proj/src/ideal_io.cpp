#include "betti/ideal_io.hpp"

#include <fstream>
#include <sstream>

#include "betti/error.hpp"
#include "io_util.hpp"

namespace betti {

namespace {

Monomial parse_monomial(const std::string& token, const Ring& ring, std::size_t line) {
  std::vector<Exponent> exp(ring.size(), 0);
  if (token == "1") return Monomial(std::move(exp));
  std::size_t pos = 0;
  while (pos <= token.size()) {
    std::size_t star = token.find('*', pos);
    std::string factor = token.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    if (factor.empty()) throw InputError("empty factor in '" + token + "'", line);
    std::string name = factor;
    unsigned long power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      std::string digits = factor.substr(caret + 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad exponent in '" + factor + "'", line);
      power = std::stoul(digits);
    }
    auto v = ring.find(name);
    if (!v) throw InputError("unknown variable '" + name + "'", line);
    exp[*v] += static_cast<Exponent>(power);
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return Monomial(std::move(exp));
}

}  // namespace

MonomialIdeal parse_ideal(std::istream& in) {
  std::optional<Ring> ring;
  std::vector<Monomial> gens;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto tokens = detail::tokenize(raw);
    if (tokens.empty()) continue;
    if (!ring) {
      if (tokens[0] != "ring") throw InputError("expected 'ring x1 ... xn'", line);
      try {
        ring = Ring(std::vector<std::string>(tokens.begin() + 1, tokens.end()));
      } catch (const InputError& e) {
        throw InputError(e.what(), line);
      }
      continue;
    }
    if (tokens.size() != 1) throw InputError("expected one monomial per line", line);
    gens.push_back(parse_monomial(tokens[0], *ring, line));
  }
  if (!ring) throw InputError("missing 'ring' header");
  return MonomialIdeal(*ring, std::move(gens));
}

MonomialIdeal parse_ideal(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal(in);
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "ring";
  for (const auto& n : ideal.ring().names()) out += " " + n;
  out += "\n";
  for (const auto& g : ideal.generators()) out += g.to_string(ideal.ring()) + "\n";
  return out;
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) {
    nlohmann::json powers = nlohmann::json::array();
    for (VarId v : g.support()) powers.push_back({ideal.ring().name(v), g[v]});
    gens.push_back(powers);
  }
  return {{"vars", ideal.ring().names()}, {"gens", gens}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& j) {
  try {
    Ring ring(j.at("vars").get<std::vector<std::string>>());
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens")) {
      std::vector<Exponent> exp(ring.size(), 0);
      for (const auto& p : g) {
        auto e = p.at(1).get<long long>();
        if (e < 0) throw InputError("negative exponent");
        exp[ring.id(p.at(0).get<std::string>())] += static_cast<Exponent>(e);
      }
      gens.emplace_back(std::move(exp));
    }
    return MonomialIdeal(std::move(ring), std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ideal JSON: ") + e.what());
  }
}

MonomialIdeal read_ideal_file(const std::string& path) {
  std::string text = detail::read_file(path);
  if (detail::looks_like_json(text)) return ideal_from_json(detail::parse_json(text));
  return parse_ideal(text);
}

void write_ideal_file(const std::string& path, const MonomialIdeal& ideal) {
  detail::write_file(path, format_ideal(ideal));
}

}  // namespace betti
