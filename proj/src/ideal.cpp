#include "betti/ideal.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "betti/error.hpp"

namespace betti {

namespace {

void check_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatchError("ideals live in different rings");
}

// All monomials of total degree `d` in `n` variables.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.push_back(Monomial());
    return out;
  }
  std::vector<Exponent> exp(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (v + 1 == n) {
      exp[v] = left;
      out.emplace_back(exp);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      exp[v] = e;
      rec(v + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

}  // namespace

MonomialIdeal minimalize(std::vector<Monomial> gens, const Ring& ring) {
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> generators) : ring_(std::move(ring)) {
  for (const auto& g : generators)
    if (g.num_vars() != ring_.size())
      throw InputError("monomial over " + std::to_string(g.num_vars()) + " variables in a ring of " +
                       std::to_string(ring_.size()));
  std::sort(generators.begin(), generators.end(), canonical_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // In canonical order a divisor never comes after its multiples.
  for (auto& g : generators) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::unit(Ring ring) {
  std::size_t n = ring.size();
  return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::maximal(Ring ring) {
  std::vector<Monomial> gens;
  for (VarId v = 0; v < ring.size(); ++v) gens.push_back(Monomial::variable(ring.size(), v));
  return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal MonomialIdeal::from_faces(Ring ring, const std::vector<Face>& faces) {
  std::vector<Monomial> gens;
  for (Face f : faces) gens.push_back(Monomial::from_face(ring.size(), f));
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

unsigned MonomialIdeal::max_degree() const {
  unsigned d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::vector<Exponent> MonomialIdeal::max_exponents() const {
  std::vector<Exponent> out(ring_.size(), 0);
  for (const auto& g : gens_)
    for (VarId v = 0; v < out.size(); ++v) out[v] = std::max(out[v], g[v]);
  return out;
}

std::vector<Face> MonomialIdeal::generator_faces() const {
  std::vector<Face> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.support_face());
  return out;
}

MonomialIdeal MonomialIdeal::in_ring(const Ring& target) const {
  std::vector<Monomial> gens;
  for (const auto& g : gens_) {
    std::vector<Exponent> exp(target.size(), 0);
    for (VarId v : g.support()) {
      auto t = target.find(ring_.name(v));
      if (!t) throw RingMismatchError("variable '" + ring_.name(v) + "' missing from target ring");
      exp[*t] = g[v];
    }
    gens.emplace_back(std::move(exp));
  }
  return MonomialIdeal(target, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string(ring_);
  }
  return out + ")";
}

Monomial Polarization::depolarize(const Monomial& m, std::size_t original_nvars) const {
  std::vector<Exponent> exp(original_nvars, 0);
  for (VarId v : m.support()) exp[origin[v]] = std::max(exp[origin[v]], copy[v]);
  return Monomial(std::move(exp));
}

Polarization polarize(const MonomialIdeal& ideal) {
  const Ring& ring = ideal.ring();
  auto maxexp = ideal.max_exponents();
  Polarization out;
  std::vector<std::string> names;
  std::vector<std::size_t> first(ring.size());
  for (VarId v = 0; v < ring.size(); ++v) {
    first[v] = names.size();
    Exponent copies = std::max<Exponent>(1, maxexp[v]);
    for (Exponent j = 1; j <= copies; ++j) {
      names.push_back(ring.name(v) + "_" + std::to_string(j));
      out.origin.push_back(v);
      out.copy.push_back(j);
    }
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> exp(names.size(), 0);
    for (VarId v : g.support())
      for (Exponent j = 0; j < g[v]; ++j) exp[first[v] + j] = 1;
    gens.emplace_back(std::move(exp));
  }
  out.ideal = MonomialIdeal(Ring(std::move(names)), std::move(gens));
  return out;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.colon(m));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_ring(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_ring(a, b);
  std::vector<Monomial> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g.lcm(h));
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal restrict_to(const MonomialIdeal& ideal, std::span<const VarId> vars) {
  std::vector<bool> allowed(ideal.ring().size(), false);
  for (VarId v : vars) allowed.at(v) = true;
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    auto supp = g.support();
    if (std::all_of(supp.begin(), supp.end(), [&](VarId v) { return allowed[v]; })) gens.push_back(g);
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal graded_piece(const MonomialIdeal& ideal, unsigned t, bool squarefree_ambient) {
  const std::size_t n = ideal.ring().size();
  if (squarefree_ambient && !ideal.is_squarefree()) throw NotSquarefreeError();
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    unsigned d = g.degree();
    if (d > t) continue;
    if (!squarefree_ambient) {
      for (const auto& m : monomials_of_degree(n, t - d)) gens.push_back(g * m);
      continue;
    }
    Face free = full_face(n) & ~g.support_face();
    for (Face sub = free;; sub = (sub - 1) & free) {
      if (static_cast<unsigned>(face_size(sub)) == t - d) gens.push_back(g * Monomial::from_face(n, sub));
      if (sub == 0) break;
    }
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal maximal_power(const Ring& ring, unsigned t) {
  return MonomialIdeal(ring, monomials_of_degree(ring.size(), t));
}

MonomialIdeal truncate(const MonomialIdeal& ideal, unsigned t) {
  return intersect(ideal, maximal_power(ideal.ring(), t));
}

unsigned d_of(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DegenerateIdealError("d(I) is undefined for the zero ideal");
  return ideal.generators().front().degree();
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw NotSquarefreeError();
  if (ideal.is_zero() || ideal.is_unit())
    throw DegenerateIdealError("Alexander dual of the zero or unit ideal");
  return MonomialIdeal::from_faces(ideal.ring(), minimal_transversals(ideal.generator_faces()));
}

std::optional<std::vector<VarId>> is_primary(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return std::nullopt;
  const std::size_t n = ideal.ring().size();
  std::vector<bool> pure(n, false);
  for (const auto& g : ideal.generators()) {
    auto supp = g.support();
    if (supp.size() == 1) pure[supp[0]] = true;
  }
  for (const auto& g : ideal.generators())
    for (VarId v : g.support())
      if (!pure[v]) return std::nullopt;
  std::vector<VarId> prime;
  for (VarId v = 0; v < n; ++v)
    if (pure[v]) prime.push_back(v);
  return prime;
}

Bipartition bipartition_with(const MonomialIdeal& ideal, std::vector<VarId> part1, std::vector<VarId> part2) {
  std::sort(part1.begin(), part1.end());
  std::sort(part2.begin(), part2.end());
  const std::size_t n = ideal.ring().size();
  std::vector<int> side(n, -1);
  for (VarId v : part1) side.at(v) = 0;
  for (VarId v : part2) {
    if (side.at(v) == 0) throw PreconditionError("variable " + ideal.ring().name(v) + " is in both parts");
    side[v] = 1;
  }
  Bipartition out{part1, part2, std::vector<std::vector<VarId>>(part2.size())};
  for (const auto& g : ideal.generators()) {
    auto supp = g.support();
    if (g.degree() != 2 || supp.size() != 2 || side[supp[0]] < 0 || side[supp[1]] < 0 ||
        side[supp[0]] == side[supp[1]])
      throw PreconditionError("generator " + g.to_string(ideal.ring()) + " does not cross the partition");
    VarId x = side[supp[0]] == 0 ? supp[0] : supp[1];
    VarId y = side[supp[0]] == 0 ? supp[1] : supp[0];
    auto j = static_cast<std::size_t>(std::lower_bound(part2.begin(), part2.end(), y) - part2.begin());
    out.incidence[j].push_back(x);
  }
  for (auto& g : out.incidence) std::sort(g.begin(), g.end());
  return out;
}

BipartiteCheck is_bipartite(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ring().size();
  std::vector<std::vector<VarId>> adj(n);
  for (const auto& g : ideal.generators()) {
    auto supp = g.support();
    if (g.degree() != 2 || supp.size() != 2) return {BipartiteStatus::kNotQuadraticSquarefree, std::nullopt};
    adj[supp[0]].push_back(supp[1]);
    adj[supp[1]].push_back(supp[0]);
  }
  std::vector<int> colour(n, -1);
  for (VarId start = 0; start < n; ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::queue<VarId> queue;
    queue.push(start);
    while (!queue.empty()) {
      VarId u = queue.front();
      queue.pop();
      for (VarId w : adj[u]) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push(w);
        } else if (colour[w] == colour[u]) {
          return {BipartiteStatus::kOddCycle, std::nullopt};
        }
      }
    }
  }
  std::vector<VarId> part1, part2;
  for (VarId v = 0; v < n; ++v) (colour[v] == 0 ? part1 : part2).push_back(v);
  return {BipartiteStatus::kBipartite, bipartition_with(ideal, std::move(part1), std::move(part2))};
}

PowerSplit power_split(const MonomialIdeal& ideal, VarId x) {
  const std::size_t n = ideal.ring().size();
  std::optional<unsigned> t;
  for (const auto& g : ideal.generators()) {
    auto supp = g.support();
    if (g.is_one()) t = 0;
    else if (supp.size() == 1 && supp[0] == x) t = std::min(t.value_or(g[x]), static_cast<unsigned>(g[x]));
  }
  if (!t) throw PreconditionError("no power of " + ideal.ring().name(x) + " lies in the ideal");
  Monomial xt = Monomial::variable(n, x, *t);
  std::vector<Monomial> rest;
  for (const auto& g : ideal.generators())
    if (!xt.divides(g)) rest.push_back(g);
  return {MonomialIdeal(ideal.ring(), std::move(rest)), *t, colon(ideal, Monomial::variable(n, x))};
}

}  // namespace betti
