#include "betti/complex.hpp"

#include <algorithm>

#include "betti/error.hpp"

namespace betti {

namespace {

void check_universe(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (!(a.universe() == b.universe())) throw RingMismatchError("complexes over different vertex universes");
}

// Packs the bits of `f` selected by `domain` into the low bits.
Face compress(Face f, Face domain) {
  Face out = 0;
  std::size_t k = 0;
  for (auto v : face_vertices(domain)) {
    if (f & bit(v)) out |= bit(k);
    ++k;
  }
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(Ring universe, Face vertex_set, std::vector<Face> facets)
    : universe_(std::move(universe)), vertex_set_(vertex_set) {
  if (universe_.size() > kMaxVertices) throw CapacityError("too many vertices for a complex", kMaxVertices);
  if (!is_subset(vertex_set_, full_face(universe_.size())))
    throw InputError("vertex set outside the universe");
  for (Face f : facets)
    if (!is_subset(f, vertex_set_)) throw InputError("facet outside the vertex set");
  facets_ = maximal_faces(std::move(facets));
}

SimplicialComplex::SimplicialComplex(Ring universe, std::vector<Face> facets)
    : SimplicialComplex(universe, full_face(universe.size()), std::move(facets)) {}

SimplicialComplex SimplicialComplex::void_complex(Ring universe) { return SimplicialComplex(std::move(universe), {}); }

SimplicialComplex SimplicialComplex::empty_complex(Ring universe) {
  return SimplicialComplex(std::move(universe), {Face{0}});
}

SimplicialComplex SimplicialComplex::simplex(Ring universe) {
  Face all = full_face(universe.size());
  return SimplicialComplex(std::move(universe), {all});
}

std::vector<std::string> SimplicialComplex::vertex_names() const {
  std::vector<std::string> out;
  for (auto v : face_vertices(vertex_set_)) out.push_back(universe_.name(v));
  return out;
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return is_subset(f, g); });
}

std::vector<Face> SimplicialComplex::faces(std::size_t max_faces) const {
  for (Face f : facets_)
    if (face_size(f) >= 40 || (std::size_t{1} << face_size(f)) > max_faces)
      throw CapacityError("complex has too many faces", max_faces);
  auto out = downward_closure(facets_);
  if (out.size() > max_faces) throw CapacityError("complex has too many faces", max_faces);
  return out;
}

int SimplicialComplex::dimension() const {
  if (is_void()) throw PreconditionError("dimension of the void complex");
  int d = -1;
  for (Face f : facets_) d = std::max(d, face_size(f) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  if (is_void()) throw PreconditionError("purity of the void complex");
  int k = face_size(facets_.front());
  return std::all_of(facets_.begin(), facets_.end(), [k](Face f) { return face_size(f) == k; });
}

std::string SimplicialComplex::facet_string(Face f) const {
  if (f == 0) return "{}";
  std::string out;
  for (auto v : face_vertices(f)) out += (out.empty() ? "" : " ") + universe_.name(v);
  return out;
}

std::string SimplicialComplex::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < facets_.size(); ++i) out += (i ? ", " : "") + facet_string(facets_[i]);
  return out + ">";
}

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto describe = [](const SimplicialComplex& c) {
    auto verts = c.vertex_names();
    std::sort(verts.begin(), verts.end());
    std::vector<std::vector<std::string>> facets;
    for (Face f : c.facets()) {
      std::vector<std::string> names;
      for (auto v : face_vertices(f)) names.push_back(c.universe().name(v));
      std::sort(names.begin(), names.end());
      facets.push_back(std::move(names));
    }
    std::sort(facets.begin(), facets.end());
    return std::make_pair(verts, facets);
  };
  return describe(a) == describe(b);
}

SimplicialComplex sr_complex(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw NotSquarefreeError();
  const Ring& ring = ideal.ring();
  if (ring.size() > kMaxVertices) throw CapacityError("too many vertices for a complex", kMaxVertices);
  Face all = full_face(ring.size());
  std::vector<Face> facets;
  for (Face cover : minimal_transversals(ideal.generator_faces())) facets.push_back(all & ~cover);
  return SimplicialComplex(ring, std::move(facets));
}

MonomialIdeal sr_ideal(const SimplicialComplex& complex) {
  Face vs = complex.vertex_set();
  std::vector<Face> complements;
  for (Face f : complex.facets()) complements.push_back(compress(vs & ~f, vs));
  return MonomialIdeal::from_faces(Ring(complex.vertex_names()), minimal_transversals(complements));
}

SimplicialComplex restriction(const SimplicialComplex& complex, Face sigma) {
  if (!is_subset(sigma, complex.vertex_set())) throw PreconditionError("restriction outside the vertex set");
  std::vector<Face> facets;
  for (Face f : complex.facets()) facets.push_back(f & sigma);
  return SimplicialComplex(complex.universe(), sigma, std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& complex, VarId x) {
  Face xb = bit(x);
  std::vector<Face> facets;
  for (Face f : complex.facets())
    if (f & xb) facets.push_back(f & ~xb);
  return SimplicialComplex(complex.universe(), complex.vertex_set() & ~xb, std::move(facets));
}

SimplicialComplex deletion(const SimplicialComplex& complex, VarId x) {
  return restriction(complex, complex.vertex_set() & ~bit(x));
}

SimplicialComplex star(const SimplicialComplex& complex, VarId x) {
  std::vector<Face> facets;
  for (Face f : complex.facets())
    if (f & bit(x)) facets.push_back(f);
  return SimplicialComplex(complex.universe(), complex.vertex_set(), std::move(facets));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  check_universe(a, b);
  std::vector<Face> facets = a.facets();
  facets.insert(facets.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex(a.universe(), a.vertex_set() | b.vertex_set(), std::move(facets));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  check_universe(a, b);
  std::vector<Face> facets;
  for (Face f : a.facets())
    for (Face g : b.facets()) facets.push_back(f & g);
  return SimplicialComplex(a.universe(), a.vertex_set() & b.vertex_set(), std::move(facets));
}

std::optional<VarId> is_cone(const SimplicialComplex& complex) {
  if (complex.is_void()) throw PreconditionError("cone test on the void complex");
  Face common = complex.vertex_set();
  for (Face f : complex.facets()) common &= f;
  if (!common) return std::nullopt;
  return static_cast<VarId>(std::countr_zero(common));
}

}  // namespace betti
