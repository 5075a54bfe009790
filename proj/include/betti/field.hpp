#pragma once

#include <cstdint>
#include <string>

namespace betti {

// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(); }
  // Throws InputError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  // Accepts 0 or a prime.
  static FieldSpec of_characteristic(std::uint64_t c);

  std::uint64_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec() = default;
  std::uint64_t characteristic_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace betti
