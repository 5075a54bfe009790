#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "betti/face.hpp"

namespace betti {

using VarId = std::size_t;
using Exponent = std::uint32_t;

// Ordered list of distinct variable names; variable ids are positions.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names);

  // x1 .. xn
  static Ring standard(std::size_t n, const std::string& prefix = "x");

  std::size_t size() const { return names_.size(); }
  const std::string& name(VarId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VarId> find(const std::string& name) const;
  // Throws InputError for an unknown name.
  VarId id(const std::string& name) const;

  // This ring followed by `extra` (names must be fresh).
  Ring extended(const std::vector<std::string>& extra) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
};

// Dense exponent vector over a ring of fixed size.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exp_(std::move(exponents)) {}

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }
  static Monomial variable(std::size_t nvars, VarId v, Exponent e = 1);
  // Squarefree monomial whose support is `f`.
  static Monomial from_face(std::size_t nvars, Face f);

  std::size_t num_vars() const { return exp_.size(); }
  Exponent operator[](VarId v) const { return exp_[v]; }
  const std::vector<Exponent>& exponents() const { return exp_; }

  unsigned degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  // Variables with positive exponent.
  std::vector<VarId> support() const;
  // Support as a mask; requires num_vars() <= kMaxVertices.
  Face support_face() const;

  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  // this / gcd(this, other): the generator of (this) : other.
  Monomial colon(const Monomial& other) const;

  std::string to_string(const Ring& ring) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exp_;
};

// Canonical generator order: degree ascending, then exponent vectors
// lexicographically descending (x1^2 before x1*x2 before x2^2).
bool canonical_less(const Monomial& a, const Monomial& b);

}  // namespace betti
