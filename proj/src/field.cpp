#include "betti/field.hpp"

#include "betti/error.hpp"

namespace betti {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InputError("characteristic " + std::to_string(p) + " is not a supported prime");
  FieldSpec f;
  f.characteristic_ = p;
  return f;
}

FieldSpec FieldSpec::of_characteristic(std::uint64_t c) {
  return c == 0 ? rationals() : prime(c);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("QQ") : "ZZ/" + std::to_string(characteristic_);
}

}  // namespace betti
