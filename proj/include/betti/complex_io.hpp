#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "betti/complex.hpp"

namespace betti {

// Text format: `vertices x1 ... xn`, then one facet per line as
// space-separated vertex names; `{}` is the empty facet. No facet lines means
// the void complex.
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex(const std::string& text);
std::string format_complex(const SimplicialComplex& complex);

// {"vertices": [...], "facets": [["x1", "x2"], ...]}
nlohmann::json complex_to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const nlohmann::json& j);

SimplicialComplex read_complex_file(const std::string& path);
void write_complex_file(const std::string& path, const SimplicialComplex& complex);

// A family of vertex subsets over `universe`, one per line (space-separated
// names, `{}` for the empty set). JSON: {"sets": [["x1"], ...]}.
std::vector<Face> parse_vertex_sets(const std::string& text, const Ring& universe);

// A family of subcomplexes, one per line, facets separated by `|`.
// JSON: {"covers": [[["x1", "x2"], ["x3"]], ...]}.
std::vector<SimplicialComplex> parse_covers(const std::string& text, const SimplicialComplex& base);

}  // namespace betti
