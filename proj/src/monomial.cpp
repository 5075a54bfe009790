#include "betti/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "betti/error.hpp"

namespace betti {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("empty variable name");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
}

Ring Ring::standard(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return Ring(std::move(names));
}

std::optional<VarId> Ring::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VarId>(it - names_.begin());
}

VarId Ring::id(const std::string& name) const {
  auto v = find(name);
  if (!v) throw InputError("unknown variable '" + name + "'");
  return *v;
}

Ring Ring::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = names_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Ring(std::move(all));
}

Monomial Monomial::variable(std::size_t nvars, VarId v, Exponent e) {
  Monomial m = one(nvars);
  m.exp_.at(v) = e;
  return m;
}

Monomial Monomial::from_face(std::size_t nvars, Face f) {
  Monomial m = one(nvars);
  for (auto v : face_vertices(f)) m.exp_.at(v) = 1;
  return m;
}

unsigned Monomial::degree() const {
  return std::accumulate(exp_.begin(), exp_.end(), 0u);
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp_.begin(), exp_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

std::vector<VarId> Monomial::support() const {
  std::vector<VarId> out;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i]) out.push_back(i);
  return out;
}

Face Monomial::support_face() const {
  if (exp_.size() > kMaxVertices)
    throw CapacityError("monomial support does not fit a vertex mask", kMaxVertices);
  Face f = 0;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i]) f |= bit(i);
  return f;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exp_.size(); ++i) out.exp_[i] += other.exp_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exp_.size(); ++i) out.exp_[i] = std::max(exp_[i], other.exp_[i]);
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exp_.size(); ++i) out.exp_[i] = std::min(exp_[i], other.exp_[i]);
  return out;
}

Monomial Monomial::colon(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    out.exp_[i] = exp_[i] > other.exp_[i] ? exp_[i] - other.exp_[i] : 0;
  return out;
}

std::string Monomial::to_string(const Ring& ring) const {
  std::string out;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (!exp_[i]) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return b.exponents() < a.exponents();
}

}  // namespace betti
