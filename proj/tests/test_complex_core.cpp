#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betti/complex.hpp"
#include "betti/complex_io.hpp"
#include "betti/constructions.hpp"
#include "betti/error.hpp"
#include "betti/vertex_decomposable.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace betti;
using helpers::complex;
using helpers::gen_strings;
using helpers::ideal;
using Strings = std::vector<std::string>;

namespace {

Strings facet_strings(const SimplicialComplex& c) {
  Strings out;
  for (Face f : c.facets()) out.push_back(c.facet_string(f));
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex rp2() { return reisner_instance().complex; }

}  // namespace

TEST_CASE("void and empty complexes are distinct") {
  const Ring r = Ring::standard(2);
  const auto v = SimplicialComplex::void_complex(r);
  const auto e = SimplicialComplex::empty_complex(r);
  CHECK(v.is_void());
  CHECK_FALSE(e.is_void());
  CHECK(e.is_empty_complex());
  CHECK_FALSE(v == e);
  CHECK(v.faces().empty());
  CHECK(e.faces() == std::vector<Face>{0});
  CHECK(e.dimension() == -1);
  CHECK(e.is_pure());
  CHECK_THROWS_AS(v.dimension(), PreconditionError);
}

TEST_CASE("constructor maximalizes facets and validates vertices") {
  const Ring r = Ring::standard(3);
  const SimplicialComplex c(r, {0b011, 0b001, 0b111, 0b100});
  CHECK(c.facets() == std::vector<Face>{0b111});
  CHECK_THROWS_AS(SimplicialComplex(r, 0b011, {0b100}), InputError);
  CHECK_THROWS_AS(SimplicialComplex(Ring::standard(64), {}), CapacityError);
}

TEST_CASE("Stanley-Reisner complex") {
  const auto full = sr_complex(MonomialIdeal::zero(Ring::standard(2)));
  CHECK(full.facets() == std::vector<Face>{0b11});
  CHECK(same_complex(sr_complex(reisner_instance().ideal), rp2()));
  CHECK(rp2().num_facets() == 10);
  const auto point = sr_complex(ideal("x1", {"x1"}));
  CHECK(point.is_empty_complex());
  CHECK(point.vertex_set() == 0b1);
  CHECK(sr_complex(ideal("x1 x2", {"1"})).is_void());
  CHECK_THROWS_AS(sr_complex(ideal("x1", {"x1^2"})), NotSquarefreeError);
  // Ghost vertex: x2 lies in the ideal but stays in the vertex list.
  const auto ghost = sr_complex(ideal("x1 x2 x3", {"x2"}));
  CHECK(ghost.vertex_names() == Strings{"x1", "x2", "x3"});
  CHECK(facet_strings(ghost) == Strings{"x1 x3"});
}

TEST_CASE("Stanley-Reisner complex faces match brute force") {
  oracle::Rng rng(21);
  for (int c = 0; c < 150; ++c) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 7));
    const auto i = oracle::random_squarefree(rng, n, 6);
    const auto faces = sr_complex(i).faces();
    auto brute = oracle::sr_faces(oracle::gens_of(i), n);
    std::sort(brute.begin(), brute.end(), face_less);
    CHECK(faces == brute);
  }
}

TEST_CASE("Stanley-Reisner ideal") {
  CHECK(sr_ideal(SimplicialComplex::simplex(Ring::standard(4))).is_zero());
  CHECK(sr_ideal(rp2()) == reisner_instance().ideal);
  const auto tri = complex("a b c", {"a b", "b c", "a c"});
  CHECK(gen_strings(sr_ideal(tri)) == Strings{"a*b*c"});
  CHECK(sr_ideal(SimplicialComplex::void_complex(Ring::standard(2))).is_unit());
}

TEST_CASE("the dictionary round-trips") {
  oracle::Rng rng(22);
  for (int c = 0; c < 150; ++c) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 7));
    const auto i = oracle::random_squarefree(rng, n, 6);
    CHECK(sr_ideal(sr_complex(i)) == i);
    const auto cx = oracle::random_complex(rng, n, 5);
    CHECK(sr_complex(sr_ideal(cx)) == cx);
  }
}

TEST_CASE("restriction") {
  CHECK(restriction(rp2(), full_face(6)) == rp2());
  const auto simplex = SimplicialComplex::simplex(Ring::standard(5));
  const auto sub = restriction(simplex, 0b10110);
  CHECK(sub.facets() == std::vector<Face>{0b10110});
  CHECK(sub.vertex_set() == 0b10110);
  const auto r5 = restriction(rp2(), 0b011111);
  CHECK(facet_strings(r5) == Strings{"x1 x2 x5", "x1 x3 x4", "x1 x4 x5", "x2 x3 x4", "x2 x3 x5"});
  // Filtering the ten facets and re-maximalizing gives the same faces.
  std::vector<Face> kept;
  for (Face f : oracle::closure(rp2().facets()))
    if (is_subset(f, 0b011111)) kept.push_back(f);
  std::sort(kept.begin(), kept.end(), face_less);
  CHECK(r5.faces() == kept);
}

TEST_CASE("link, deletion and star") {
  const auto cone = complex("a b c x", {"a b x", "b c x"});
  CHECK(same_complex(compact(restriction(link(cone, 3), 0b0111)), complex("a b c", {"a b", "b c"})));
  CHECK(is_cone(star(rp2(), 0)) == std::optional<VarId>{0});

  const auto del = deletion(rp2(), 5);
  CHECK(facet_strings(del) == Strings{"x1 x2 x5", "x1 x3 x4", "x1 x4 x5", "x2 x3 x4", "x2 x3 x5"});
  CHECK(del.vertex_set() == 0b011111);

  // The link's ideal is (I : x) inside k[V minus x].
  const auto i = reisner_instance().ideal;
  for (VarId x = 0; x < 6; ++x) {
    const auto lk = link(rp2(), x);
    std::vector<VarId> rest;
    for (VarId v = 0; v < 6; ++v)
      if (v != x) rest.push_back(v);
    const auto expected = restrict_to(colon(i, Monomial::variable(6, x)), rest);
    CHECK(sr_ideal(lk).in_ring(i.ring()) == expected);
  }
}

TEST_CASE("star and deletion cover the complex and meet in the link") {
  oracle::Rng rng(23);
  for (int c = 0; c < 150; ++c) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 8));
    const auto cx = oracle::random_complex(rng, n, 6);
    const VarId x = static_cast<VarId>(oracle::uniform(rng, 0, static_cast<int>(n) - 1));
    const auto st = star(cx, x), del = deletion(cx, x), lk = link(cx, x);
    CHECK(complex_union(st, del).faces() == cx.faces());
    const auto meet = complex_intersection(st, del);
    if (lk.is_void()) {
      CHECK(meet.is_void());
    } else {
      CHECK(meet.faces() == lk.faces());
    }
  }
}

TEST_CASE("cone detection") {
  CHECK(is_cone(complex("a b c x", {"a b x", "c x"})) == std::optional<VarId>{3});
  CHECK_FALSE(is_cone(rp2()));
  CHECK_FALSE(is_cone(complex("a b c", {"a b", "b c", "a c"})));
  CHECK(is_cone(complex("a b", {"a b"})) == std::optional<VarId>{0});
  CHECK_FALSE(is_cone(SimplicialComplex::empty_complex(Ring::standard(1))));
  CHECK_THROWS_AS(is_cone(SimplicialComplex::void_complex(Ring::standard(1))), PreconditionError);
  const auto point = complex("x1", {"x1"});
  const auto coned = cone_tilde(point, {point});
  CHECK(is_cone(coned));
}

TEST_CASE("purity and dimension") {
  CHECK(rp2().is_pure());
  CHECK(rp2().dimension() == 2);
  const auto mixed = complex("x1 x2 x3", {"x1 x2", "x3"});
  CHECK_FALSE(mixed.is_pure());
  CHECK(mixed.dimension() == 1);
}

TEST_CASE("vertex-decomposability") {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto vd = is_vertex_decomposable(SimplicialComplex::simplex(Ring::standard(n)));
    CHECK(vd.decomposable);
    REQUIRE(vd.witness);
    CHECK(vd.witness->children.empty());
  }
  CHECK(is_vertex_decomposable(SimplicialComplex::empty_complex(Ring::standard(2))).decomposable);
  CHECK_FALSE(is_vertex_decomposable(rp2()).decomposable);
  CHECK_FALSE(is_vertex_decomposable(complex("x1 x2 x3", {"x1 x2", "x3"})).decomposable);
  CHECK_THROWS_AS(is_vertex_decomposable(SimplicialComplex::void_complex(Ring::standard(1))), PreconditionError);

  const auto path = complex("a b c", {"a b", "b c"});
  const auto vd = is_vertex_decomposable(path);
  REQUIRE(vd.witness);
  CHECK(vd.witness->vertex == "a");
  CHECK(vd.witness->size() == 3);

  // Two disjoint edges are pure but not even connected.
  CHECK_FALSE(is_vertex_decomposable(complex("a b c d", {"a b", "c d"})).decomposable);
}

TEST_CASE("the whiskered Reisner complex is vertex-decomposable") {
  const auto j = whisker_all(reisner_instance().ideal).ideal;
  VertexDecomposabilityChecker checker;
  const auto vd = checker.check(sr_complex(j));
  CHECK(vd.decomposable);
  CHECK(checker.memo_size() > 0);
}

TEST_CASE("witness trees replay as shedding sequences") {
  // Rebuild the complex from each witness node and confirm the shedding rule.
  std::function<bool(const SimplicialComplex&, const SheddingTree&)> replay =
      [&](const SimplicialComplex& c, const SheddingTree& t) -> bool {
    if (t.children.empty()) return c.num_facets() == 1;
    const VarId x = c.universe().id(t.vertex);
    const auto lk = link(c, x), del = deletion(c, x);
    if (lk.is_void() || lk.dimension() != c.dimension() - 1 || del.is_void() || del.dimension() != c.dimension())
      return false;
    return replay(lk, t.children[0]) && replay(del, t.children[1]);
  };
  oracle::Rng rng(24);
  int decomposable = 0;
  for (int c = 0; c < 150; ++c) {
    const auto cx = oracle::random_complex(rng, static_cast<std::size_t>(oracle::uniform(rng, 1, 6)), 4);
    const auto vd = is_vertex_decomposable(cx);
    if (!vd.decomposable) continue;
    ++decomposable;
    REQUIRE(vd.witness);
    CHECK(replay(cx, *vd.witness));
  }
  CHECK(decomposable > 20);
}

TEST_CASE("polarizations of primary ideals are vertex-decomposable") {
  oracle::Rng rng(25);
  for (int c = 0; c < 120; ++c) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    auto gens = oracle::random_monomial(rng, n, 3, 3, 6).generators();
    for (VarId v = 0; v < n; ++v) gens.push_back(Monomial::variable(n, v, static_cast<Exponent>(oracle::uniform(rng, 1, 3))));
    const MonomialIdeal i(Ring::standard(n), gens);
    REQUIRE(is_primary(i));
    CHECK(is_vertex_decomposable(sr_complex(polarize(i).ideal)).decomposable);
  }
}

TEST_CASE("complex text and JSON round trips") {
  oracle::Rng rng(26);
  for (int c = 0; c < 50; ++c) {
    const auto cx = oracle::random_complex(rng, static_cast<std::size_t>(oracle::uniform(rng, 1, 7)), 5);
    CHECK(parse_complex(format_complex(cx)) == cx);
    CHECK(complex_from_json(complex_to_json(cx)) == cx);
  }
  const auto e = parse_complex("vertices a b\n{}\n");
  CHECK(e.is_empty_complex());
  CHECK(parse_complex(format_complex(e)) == e);
  CHECK(parse_complex("vertices a b\n").is_void());
  try {
    parse_complex("vertices a b\na b\na c\n");
    FAIL("expected an error");
  } catch (const InputError& err) {
    CHECK(err.line() == 3);
  }
}

TEST_CASE("vertex-set and cover files") {
  const Ring r = Ring::standard(3);
  CHECK(parse_vertex_sets("x3\nx1 x2\n{}\n", r) == std::vector<Face>{0b100, 0b011, 0});
  CHECK(parse_vertex_sets(R"({"sets": [["x2"], []]})", r) == std::vector<Face>{0b010, 0});
  const auto tri = complex("x1 x2 x3", {"x1 x2", "x2 x3", "x1 x3"});
  const auto covers = parse_covers("x1 x2 | x2 x3\nx1 x3\n", tri);
  REQUIRE(covers.size() == 2);
  CHECK(covers[0].facets() == std::vector<Face>{0b011, 0b110});
  CHECK(covers[1].facets() == std::vector<Face>{0b101});
}
