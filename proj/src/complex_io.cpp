#include "betti/complex_io.hpp"

#include <sstream>

#include "betti/error.hpp"
#include "io_util.hpp"

namespace betti {

namespace {

Face parse_face(const std::vector<std::string>& tokens, const Ring& ring, std::size_t line) {
  Face f = 0;
  for (const auto& t : tokens) {
    if (t == "{}") continue;
    auto v = ring.find(t);
    if (!v) throw InputError("unknown vertex '" + t + "'", line);
    f |= bit(*v);
  }
  return f;
}

Face json_face(const nlohmann::json& names, const Ring& ring) {
  Face f = 0;
  for (const auto& n : names) f |= bit(ring.id(n.get<std::string>()));
  return f;
}

}  // namespace

SimplicialComplex parse_complex(std::istream& in) {
  std::optional<Ring> ring;
  std::vector<Face> facets;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto tokens = detail::tokenize(raw);
    if (tokens.empty()) continue;
    if (!ring) {
      if (tokens[0] != "vertices") throw InputError("expected 'vertices x1 ... xn'", line);
      try {
        ring = Ring(std::vector<std::string>(tokens.begin() + 1, tokens.end()));
      } catch (const InputError& e) {
        throw InputError(e.what(), line);
      }
      if (ring->size() > kMaxVertices) throw CapacityError("too many vertices for a complex", kMaxVertices);
      continue;
    }
    facets.push_back(parse_face(tokens, *ring, line));
  }
  if (!ring) throw InputError("missing 'vertices' header");
  return SimplicialComplex(*ring, std::move(facets));
}

SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

std::string format_complex(const SimplicialComplex& complex) {
  std::string out = "vertices";
  for (const auto& n : complex.vertex_names()) out += " " + n;
  out += "\n";
  for (Face f : complex.facets()) out += complex.facet_string(f) + "\n";
  return out;
}

nlohmann::json complex_to_json(const SimplicialComplex& complex) {
  nlohmann::json facets = nlohmann::json::array();
  for (Face f : complex.facets()) {
    nlohmann::json names = nlohmann::json::array();
    for (auto v : face_vertices(f)) names.push_back(complex.universe().name(v));
    facets.push_back(names);
  }
  return {{"vertices", complex.vertex_names()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
  try {
    Ring ring(j.at("vertices").get<std::vector<std::string>>());
    if (ring.size() > kMaxVertices) throw CapacityError("too many vertices for a complex", kMaxVertices);
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) facets.push_back(json_face(f, ring));
    return SimplicialComplex(std::move(ring), std::move(facets));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed complex JSON: ") + e.what());
  }
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::string text = detail::read_file(path);
  if (detail::looks_like_json(text)) return complex_from_json(detail::parse_json(text));
  return parse_complex(text);
}

void write_complex_file(const std::string& path, const SimplicialComplex& complex) {
  detail::write_file(path, format_complex(complex));
}

std::vector<Face> parse_vertex_sets(const std::string& text, const Ring& universe) {
  std::vector<Face> out;
  if (detail::looks_like_json(text)) {
    auto j = detail::parse_json(text);
    try {
      for (const auto& s : j.at("sets")) out.push_back(json_face(s, universe));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed sets JSON: ") + e.what());
    }
    return out;
  }
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto tokens = detail::tokenize(raw);
    if (!tokens.empty()) out.push_back(parse_face(tokens, universe, line));
  }
  return out;
}

std::vector<SimplicialComplex> parse_covers(const std::string& text, const SimplicialComplex& base) {
  const Ring& ring = base.universe();
  std::vector<SimplicialComplex> out;
  if (detail::looks_like_json(text)) {
    auto j = detail::parse_json(text);
    try {
      for (const auto& cover : j.at("covers")) {
        std::vector<Face> facets;
        for (const auto& f : cover) facets.push_back(json_face(f, ring));
        out.emplace_back(ring, base.vertex_set(), std::move(facets));
      }
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed covers JSON: ") + e.what());
    }
    return out;
  }
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = raw.substr(0, raw.find('#'));
    if (detail::tokenize(body).empty()) continue;
    std::vector<Face> facets;
    std::size_t pos = 0;
    while (true) {
      std::size_t bar = body.find('|', pos);
      facets.push_back(parse_face(detail::tokenize(body.substr(pos, bar == std::string::npos ? bar : bar - pos)),
                                  ring, line));
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    out.emplace_back(ring, base.vertex_set(), std::move(facets));
  }
  return out;
}

}  // namespace betti
