#include "betti/constructions.hpp"

#include <algorithm>

#include "betti/error.hpp"

namespace betti {

namespace {

std::vector<std::string> fresh_names(const Ring& base, const std::string& prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= count; ++j) {
    std::string name = prefix + std::to_string(j);
    if (base.find(name)) throw PreconditionError("new variable '" + name + "' collides with an existing one");
    out.push_back(std::move(name));
  }
  return out;
}

std::vector<Monomial> widen(const MonomialIdeal& ideal, std::size_t extra) {
  std::vector<Monomial> out;
  for (const auto& g : ideal.generators()) {
    auto exp = g.exponents();
    exp.resize(exp.size() + extra, 0);
    out.emplace_back(std::move(exp));
  }
  return out;
}

}  // namespace

SimplicialComplex compact(const SimplicialComplex& complex) {
  auto verts = face_vertices(complex.vertex_set());
  std::vector<Face> facets;
  for (Face f : complex.facets()) {
    Face g = 0;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (f & bit(verts[k])) g |= bit(k);
    facets.push_back(g);
  }
  return SimplicialComplex(Ring(complex.vertex_names()), std::move(facets));
}

MonomialIdeal whisker(const MonomialIdeal& ideal, VarId x, const std::string& y) {
  const Ring& ring = ideal.ring();
  if (x >= ring.size()) throw PreconditionError("whiskered variable outside the ring");
  if (ring.find(y)) throw PreconditionError("new variable '" + y + "' collides with an existing one");
  Ring bigger = ring.extended({y});
  auto gens = widen(ideal, 1);
  Monomial edge = Monomial::variable(bigger.size(), x) * Monomial::variable(bigger.size(), ring.size());
  gens.push_back(std::move(edge));
  return MonomialIdeal(std::move(bigger), std::move(gens));
}

Whiskering whisker_all(const MonomialIdeal& ideal) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.size();
  auto ys = fresh_names(ring, "y", n);
  Ring bigger = ring.extended(ys);
  auto gens = widen(ideal, n);
  Whiskering out;
  for (VarId v = 0; v < n; ++v) {
    gens.push_back(Monomial::variable(2 * n, v) * Monomial::variable(2 * n, n + v));
    out.provenance.emplace_back(ys[v], ring.name(v));
  }
  out.ideal = MonomialIdeal(std::move(bigger), std::move(gens));
  return out;
}

SimplicialComplex cone_tilde(const SimplicialComplex& gamma_in, const std::vector<SimplicialComplex>& covers_in) {
  if (gamma_in.is_void()) throw PreconditionError("cannot cone the void complex");
  SimplicialComplex gamma = compact(gamma_in);
  const std::size_t n = gamma.universe().size();
  const std::size_t m = covers_in.size();
  if (n + m > kMaxVertices) throw CapacityError("coned complex needs too many vertices", kMaxVertices);
  std::vector<SimplicialComplex> covers;
  for (std::size_t j = 0; j < m; ++j) {
    if (!(covers_in[j].universe() == gamma_in.universe()))
      throw PreconditionError("cover " + std::to_string(j + 1) + " lives on another vertex universe");
    for (Face f : covers_in[j].facets())
      if (!gamma_in.contains(f))
        throw PreconditionError("cover " + std::to_string(j + 1) + " is not a subcomplex: facet {" +
                                gamma_in.facet_string(f) + "}");
    SimplicialComplex c(gamma_in.universe(), gamma_in.vertex_set(), covers_in[j].facets());
    covers.push_back(compact(c));
  }
  for (Face f : gamma.facets()) {
    bool covered = std::any_of(covers.begin(), covers.end(), [f](const SimplicialComplex& c) { return c.contains(f); });
    if (!covered) throw PreconditionError("covers miss the facet {" + gamma.facet_string(f) + "}");
  }
  Ring ring = gamma.universe().extended(fresh_names(gamma.universe(), "y", m));
  std::vector<Face> facets;
  for (Face sigma : gamma.faces()) {
    Face cone = sigma;
    for (std::size_t j = 0; j < m; ++j)
      if (covers[j].contains(sigma)) cone |= bit(n + j);
    facets.push_back(cone);
  }
  return SimplicialComplex(std::move(ring), std::move(facets));
}

BipartiteInstance bipartite_from_complex(const SimplicialComplex& gamma_in, const std::vector<Face>& incidence) {
  if (gamma_in.is_void()) throw PreconditionError("bipartite construction needs a non-void complex");
  SimplicialComplex gamma = compact(gamma_in);
  const std::size_t n = gamma.universe().size();
  const std::size_t m = incidence.size();
  if (n + m > kMaxVertices) throw CapacityError("bipartite construction needs too many vertices", kMaxVertices);
  const Face base = full_face(n);
  // Incidence sets arrive over gamma_in's universe; move them onto V1.
  auto verts = face_vertices(gamma_in.vertex_set());
  std::vector<Face> g(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    if (!is_subset(incidence[j], gamma_in.vertex_set()))
      throw PreconditionError("G_" + std::to_string(j + 1) + " leaves the vertex set of the complex");
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (incidence[j] & bit(verts[k])) g[j] |= bit(k);
    if (!gamma.contains(base & ~g[j]))
      throw PreconditionError("complement of G_" + std::to_string(j + 1) + " is not a face");
  }
  for (Face f : gamma.facets()) {
    bool realized = std::any_of(g.begin(), g.end(), [&](Face gj) { return (base & ~gj) == f; });
    if (!realized) throw PreconditionError("facet {" + gamma.facet_string(f) + "} is no V1 minus G_j");
  }
  Ring ring = gamma.universe().extended(fresh_names(gamma.universe(), "y", m));
  std::vector<Face> facets;
  for (Face sigma : gamma.faces()) {
    Face cone = sigma;
    for (std::size_t j = 0; j < m; ++j)
      if (is_subset(sigma, base & ~g[j])) cone |= bit(n + j);
    facets.push_back(cone);
  }
  SimplicialComplex delta_prime(ring, facets);
  facets.push_back(base);
  SimplicialComplex delta(ring, std::move(facets));
  MonomialIdeal ideal = sr_ideal(delta);
  MonomialIdeal ideal_gamma = sr_ideal(gamma).in_ring(ring);
  return {std::move(gamma), std::move(g), std::move(delta_prime), std::move(delta), std::move(ideal),
          std::move(ideal_gamma)};
}

BipartiteInstance bipartite_from_complex(const SimplicialComplex& gamma) {
  std::vector<Face> incidence;
  for (Face f : gamma.facets()) incidence.push_back(gamma.vertex_set() & ~f);
  return bipartite_from_complex(gamma, incidence);
}

SimplicialComplex bipartite_to_complex(const MonomialIdeal& ideal, const Bipartition& partition) {
  // Re-derive incidences so a stale partition cannot slip through.
  Bipartition checked = bipartition_with(ideal, partition.part1, partition.part2);
  const Ring& ring = ideal.ring();
  std::vector<std::string> names;
  for (VarId v : checked.part1) names.push_back(ring.name(v));
  const std::size_t n = names.size();
  if (n > kMaxVertices) throw CapacityError("too many vertices for a complex", kMaxVertices);
  std::vector<Face> sets;
  for (const auto& gj : checked.incidence) {
    Face f = 0;
    for (VarId x : gj) {
      auto k = std::lower_bound(checked.part1.begin(), checked.part1.end(), x) - checked.part1.begin();
      f |= bit(static_cast<std::size_t>(k));
    }
    sets.push_back(f);
  }
  std::vector<Face> facets;
  for (Face gj : minimal_faces(sets)) facets.push_back(full_face(n) & ~gj);
  return SimplicialComplex(Ring(std::move(names)), std::move(facets));
}

HomologyShiftVerdict homology_shift_check(const SimplicialComplex& gamma, const SimplicialComplex& delta) {
  HomologyShiftVerdict out;
  out.delta_homology = reduced_homology_Z(delta);
  out.gamma_homology = reduced_homology_Z(gamma);
  auto group = [](const std::vector<HomologyGroup>& h, int k) {
    std::size_t slot = static_cast<std::size_t>(k + 1);
    return slot < h.size() ? h[slot] : HomologyGroup{};
  };
  int top = static_cast<int>(std::max(out.delta_homology.size(), out.gamma_homology.size() + 1));
  for (int i = 0; i <= top; ++i) {
    auto d = group(out.delta_homology, i + 1);
    auto g = group(out.gamma_homology, i);
    if (!(d == g)) {
      out.holds = false;
      out.mismatches.push_back({i, d, g});
    }
  }
  return out;
}

ReisnerInstance reisner_instance() {
  Ring ring = Ring::standard(6);
  auto face = [](std::initializer_list<int> vs) {
    Face f = 0;
    for (int v : vs) f |= bit(static_cast<std::size_t>(v - 1));
    return f;
  };
  std::vector<Face> facets = {face({4, 5, 6}), face({3, 5, 6}), face({2, 4, 6}), face({1, 3, 6}),
                              face({1, 2, 6}), face({1, 4, 5}), face({2, 3, 5}), face({1, 2, 5}),
                              face({2, 3, 4}), face({1, 3, 4})};
  std::vector<Face> gens = {face({1, 2, 3}), face({1, 2, 4}), face({1, 3, 5}), face({2, 4, 5}),
                            face({3, 4, 5}), face({2, 3, 6}), face({1, 4, 6}), face({3, 4, 6}),
                            face({1, 5, 6}), face({2, 5, 6})};
  BettiTable char0(ModuleConvention::kQuotient);
  char0.set(0, 0, 1);
  char0.set(1, 3, 10);
  char0.set(2, 4, 15);
  char0.set(3, 5, 6);
  BettiTable char2 = char0;
  char2.set(4, 6, 1);
  char2.set(3, 6, 1);
  return {SimplicialComplex(ring, facets), MonomialIdeal::from_faces(ring, gens), char2, char0};
}

}  // namespace betti
