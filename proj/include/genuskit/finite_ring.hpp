#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace genuskit {

/// Nonnegative gcd; gcd(0, 0) == 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Euler's function by direct count. Throws InvalidArgument for m < 1.
std::int64_t totient(std::int64_t m);

/// Canonical representative of x in [0, m).
std::int64_t reduce(std::int64_t x, std::int64_t m);

/// An element of Z/m. The value is always kept in [0, m).
///
/// Z/1 is the zero ring: its only element 0 is also its identity and a unit.
class Residue {
 public:
  Residue(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }

  Residue operator+(const Residue& rhs) const;
  Residue operator-(const Residue& rhs) const;
  Residue operator*(const Residue& rhs) const;
  Residue operator-() const;

  bool is_unit() const;
  /// Inverse via extended Euclid; empty when gcd(value, m) != 1.
  std::optional<Residue> inverse() const;

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;

 private:
  void require_same_modulus(const Residue& rhs) const;

  std::int64_t value_;
  std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Residue& r);

/// The unit group of Z/m in increasing order. For m == 1 this is {0}.
std::vector<Residue> units(std::int64_t m);

/// Inverse of a modulo m, or empty if none exists.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace genuskit
