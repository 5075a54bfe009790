#pragma once

#include <string>
#include <vector>

#include "betti/complex_io.hpp"
#include "betti/ideal_io.hpp"

namespace helpers {

// ideal("x1 x2", {"x1^2", "x1*x2"})
inline betti::MonomialIdeal ideal(const std::string& vars, const std::vector<std::string>& gens) {
  std::string text = "ring " + vars + "\n";
  for (const auto& g : gens) text += g + "\n";
  return betti::parse_ideal(text);
}

inline betti::Monomial mono(const betti::Ring& ring, const std::string& m) {
  std::string vars;
  for (const auto& n : ring.names()) vars += n + " ";
  return ideal(vars, {m}).generators().at(0);
}

// complex("x1 x2 x3", {"x1 x2", "x3"})
inline betti::SimplicialComplex complex(const std::string& vertices, const std::vector<std::string>& facets) {
  std::string text = "vertices " + vertices + "\n";
  for (const auto& f : facets) text += f + "\n";
  return betti::parse_complex(text);
}

inline std::vector<std::string> gen_strings(const betti::MonomialIdeal& i) {
  std::vector<std::string> out;
  for (const auto& g : i.generators()) out.push_back(g.to_string(i.ring()));
  return out;
}

}  // namespace helpers
