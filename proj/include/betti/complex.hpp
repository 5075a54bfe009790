#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betti/face.hpp"
#include "betti/ideal.hpp"
#include "betti/monomial.hpp"

namespace betti {

// A finite simplicial complex. Faces are masks over a named universe of at
// most 63 vertices; `vertex_set` is the subset of the universe the complex
// lives on (vertices in no face are allowed). The void complex has no faces
// at all, the empty complex {∅} has the single facet ∅.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Facets are maximalized. Throws CapacityError past 63 vertices and
  // InputError if a facet leaves the vertex set.
  SimplicialComplex(Ring universe, Face vertex_set, std::vector<Face> facets);
  // Vertex set = the whole universe.
  SimplicialComplex(Ring universe, std::vector<Face> facets);

  static SimplicialComplex void_complex(Ring universe);
  static SimplicialComplex empty_complex(Ring universe);
  static SimplicialComplex simplex(Ring universe);

  const Ring& universe() const { return universe_; }
  Face vertex_set() const { return vertex_set_; }
  std::vector<std::string> vertex_names() const;
  const std::vector<Face>& facets() const { return facets_; }
  std::size_t num_facets() const { return facets_.size(); }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }
  bool contains(Face f) const;
  // All faces (∅ included) in canonical order. Throws CapacityError past
  // `max_faces`.
  std::vector<Face> faces(std::size_t max_faces = kDefaultFaceBound) const;

  // Throws PreconditionError for the void complex.
  int dimension() const;
  bool is_pure() const;

  std::string facet_string(Face f) const;
  std::string to_string() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  static constexpr std::size_t kDefaultFaceBound = 4'000'000;

 private:
  Ring universe_;
  Face vertex_set_ = 0;
  std::vector<Face> facets_;
};

// Compares complexes by vertex and facet names, ignoring universe order.
bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b);

// Stanley–Reisner complex. Throws NotSquarefreeError; the unit ideal gives
// the void complex.
SimplicialComplex sr_complex(const MonomialIdeal& ideal);
// Minimal nonfaces, over the ring of the vertex set (universe order).
MonomialIdeal sr_ideal(const SimplicialComplex& complex);

SimplicialComplex restriction(const SimplicialComplex& complex, Face sigma);
SimplicialComplex link(const SimplicialComplex& complex, VarId x);
SimplicialComplex deletion(const SimplicialComplex& complex, VarId x);
SimplicialComplex star(const SimplicialComplex& complex, VarId x);

// Set union / intersection of face sets over a shared universe.
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

// Lowest vertex lying in every facet, if any. Throws on the void complex.
std::optional<VarId> is_cone(const SimplicialComplex& complex);

}  // namespace betti
