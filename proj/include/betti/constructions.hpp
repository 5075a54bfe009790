#pragma once

#include <string>
#include <utility>
#include <vector>

#include "betti/betti_table.hpp"
#include "betti/complex.hpp"
#include "betti/homology.hpp"
#include "betti/ideal.hpp"

namespace betti {

// (I R[y], x y). Throws PreconditionError if `y` is already a variable.
MonomialIdeal whisker(const MonomialIdeal& ideal, VarId x, const std::string& y);

struct Whiskering {
  MonomialIdeal ideal;
  // (new variable, variable it whiskers), in ring order.
  std::vector<std::pair<std::string, std::string>> provenance;
};

// I S + (x1 y1, ..., xn yn) with fresh variables y1..yn.
Whiskering whisker_all(const MonomialIdeal& ideal);

// The complex {σ ∪ τ : σ ∈ Γ, τ ⊆ {y_j : σ ∈ Γ_j}} over the vertex set of Γ
// followed by new vertices y1..ym. Throws PreconditionError unless every
// cover is a subcomplex of Γ and the covers exhaust Γ.
SimplicialComplex cone_tilde(const SimplicialComplex& gamma, const std::vector<SimplicialComplex>& covers);

// The bipartite pair built from a complex Γ on V1 and sets G_1..G_m ⊆ V1.
struct BipartiteInstance {
  SimplicialComplex gamma;        // Γ over V1 alone
  std::vector<Face> incidence;    // G_j, masks over V1
  SimplicialComplex delta_prime;  // over V1 ∪ {y_j}
  SimplicialComplex delta;        // Δ' ∪ simplex(V1)
  MonomialIdeal ideal;            // Stanley–Reisner ideal of Δ
  MonomialIdeal ideal_gamma;      // Stanley–Reisner ideal of Γ extended to the big ring

  std::size_t num_base() const { return gamma.universe().size(); }
  Ring ring() const { return ideal.ring(); }
};

// Throws PreconditionError naming the offending j or facet if some V1 ∖ G_j
// is not a face or some facet is not of that form.
BipartiteInstance bipartite_from_complex(const SimplicialComplex& gamma, const std::vector<Face>& incidence);
// G_j = V1 ∖ F_j for the facets F_j in canonical order.
BipartiteInstance bipartite_from_complex(const SimplicialComplex& gamma);

// Γ on part1 whose facets are part1 ∖ G_j for the inclusion-minimal G_j.
SimplicialComplex bipartite_to_complex(const MonomialIdeal& ideal, const Bipartition& partition);

struct HomologyShiftMismatch {
  int degree;  // i, comparing H_{i+1}(Δ) with H_i(Γ)
  HomologyGroup delta_group;
  HomologyGroup gamma_group;
};

struct HomologyShiftVerdict {
  bool holds = true;
  std::vector<HomologyShiftMismatch> mismatches;
  std::vector<HomologyGroup> delta_homology;  // reduced, index k + 1
  std::vector<HomologyGroup> gamma_homology;
};

// Compares H̃_{i+1}(Δ; Z) with H̃_i(Γ; Z) for every i >= 0.
HomologyShiftVerdict homology_shift_check(const SimplicialComplex& gamma, const SimplicialComplex& delta);

// Minimal six-vertex triangulation of RP^2 with its Stanley–Reisner ideal
// and the published Betti tables of R/I in characteristic 2 and 0.
struct ReisnerInstance {
  SimplicialComplex complex;
  MonomialIdeal ideal;
  BettiTable table_char2;
  BettiTable table_char0;
};

ReisnerInstance reisner_instance();

// Copy of `complex` whose universe is exactly its vertex set.
SimplicialComplex compact(const SimplicialComplex& complex);

}  // namespace betti
