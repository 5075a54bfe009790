#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "betti/monomial.hpp"

namespace betti {

// A monomial ideal, stored by its unique minimal generating set in
// canonical order. The zero ideal has no generators; the unit ideal has the
// single generator 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(Ring ring = Ring()) : ring_(std::move(ring)) {}
  // Minimalizes `generators`. Throws InputError if a monomial has the wrong
  // number of variables.
  MonomialIdeal(Ring ring, std::vector<Monomial> generators);

  static MonomialIdeal zero(Ring ring) { return MonomialIdeal(std::move(ring)); }
  static MonomialIdeal unit(Ring ring);
  // The irrelevant ideal (x1, ..., xn).
  static MonomialIdeal maximal(Ring ring);
  // Squarefree ideal with one generator per mask.
  static MonomialIdeal from_faces(Ring ring, const std::vector<Face>& faces);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t num_generators() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;
  bool contains(const Monomial& m) const;
  unsigned max_degree() const;
  // Largest exponent of each variable among the generators.
  std::vector<Exponent> max_exponents() const;
  // Generator supports as masks; requires a ring of at most 63 variables.
  std::vector<Face> generator_faces() const;

  // Same generators over another ring that names every variable used here.
  MonomialIdeal in_ring(const Ring& target) const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(std::vector<Monomial> gens, const Ring& ring);

// Variables x_{i,1..e_i} with e_i the largest exponent of x_i (at least 1),
// named "<x_i>_<j>". `origin[k]` is the variable of the original ring that
// the k-th new variable came from, `copy[k]` its index j.
struct Polarization {
  MonomialIdeal ideal;
  std::vector<VarId> origin;
  std::vector<Exponent> copy;

  // Image of a polarized generator back in the original ring.
  Monomial depolarize(const Monomial& m, std::size_t original_nvars) const;
};

Polarization polarize(const MonomialIdeal& ideal);

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// (I ∩ k[W])R: generators supported inside `vars`, same ambient ring.
MonomialIdeal restrict_to(const MonomialIdeal& ideal, std::span<const VarId> vars);
// Minimal generators of (I_t)R. With `squarefree_ambient`, only squarefree
// multipliers coprime to each generator are used (squarefree ideals only).
MonomialIdeal graded_piece(const MonomialIdeal& ideal, unsigned t, bool squarefree_ambient = false);
// m^t as an ideal.
MonomialIdeal maximal_power(const Ring& ring, unsigned t);
// I ∩ m^t.
MonomialIdeal truncate(const MonomialIdeal& ideal, unsigned t);
// Least degree of a minimal generator. Throws DegenerateIdealError on 0.
unsigned d_of(const MonomialIdeal& ideal);
// Throws NotSquarefreeError, or DegenerateIdealError for 0 and (1).
MonomialIdeal alexander_dual(const MonomialIdeal& ideal);

// The variables of the associated prime when the ideal is primary.
std::optional<std::vector<VarId>> is_primary(const MonomialIdeal& ideal);

struct Bipartition {
  std::vector<VarId> part1;
  std::vector<VarId> part2;
  // incidence[j] = {x in part1 : x * part2[j] in I}
  std::vector<std::vector<VarId>> incidence;
};

enum class BipartiteStatus { kBipartite, kNotQuadraticSquarefree, kOddCycle };

struct BipartiteCheck {
  BipartiteStatus status;
  std::optional<Bipartition> partition;
  explicit operator bool() const { return status == BipartiteStatus::kBipartite; }
};

// 2-colouring of the generator graph; the lowest id of each connected
// component (and every isolated variable) goes to part1.
BipartiteCheck is_bipartite(const MonomialIdeal& ideal);

// Incidence sets for a caller-supplied partition. Throws PreconditionError if
// some generator is not of the form x*y with x in part1 and y in part2.
Bipartition bipartition_with(const MonomialIdeal& ideal, std::vector<VarId> part1,
                             std::vector<VarId> part2);

struct PowerSplit {
  MonomialIdeal rest;   // generators not divisible by x^t
  unsigned power;       // least t with x^t in I
  MonomialIdeal colon;  // (I : x)
};

// Throws PreconditionError if no power of x lies in I.
PowerSplit power_split(const MonomialIdeal& ideal, VarId x);

}  // namespace betti
