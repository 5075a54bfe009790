#pragma once

#include <istream>
#include <string>

#include <json.hpp>

#include "betti/ideal.hpp"

namespace betti {

// Text format: first non-comment line `ring x1 x2 ... xn`, then one monomial
// per line as `*`-separated powers (`x1^2*x2`, or `1`). `#` starts a comment.
MonomialIdeal parse_ideal(std::istream& in);
MonomialIdeal parse_ideal(const std::string& text);
std::string format_ideal(const MonomialIdeal& ideal);

// {"vars": [...], "gens": [[["x1", 2], ["x2", 1]], ...]}
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

// Dispatches on content: a leading `{` means JSON.
MonomialIdeal read_ideal_file(const std::string& path);
void write_ideal_file(const std::string& path, const MonomialIdeal& ideal);

}  // namespace betti
