#include "genuskit/finite_ring.hpp"

#include <string>

#include "genuskit/errors.hpp"

namespace genuskit {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  // Work with unsigned magnitudes so INT64_MIN does not overflow.
  auto abs_u = [](std::int64_t x) {
    return x < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(x)
                 : static_cast<std::uint64_t>(x);
  };
  std::uint64_t x = abs_u(a);
  std::uint64_t y = abs_u(b);
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return static_cast<std::int64_t>(x);
}

std::int64_t totient(std::int64_t m) {
  if (m < 1) {
    throw InvalidArgument("totient: modulus must be >= 1, got " + std::to_string(m));
  }
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= m; ++k) {
    if (gcd(k, m) == 1) ++count;
  }
  return count;
}

std::int64_t reduce(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
  if (m < 1) {
    throw InvalidArgument("inverse_mod: modulus must be >= 1, got " + std::to_string(m));
  }
  std::int64_t old_r = reduce(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  return reduce(old_s, m);
}

Residue::Residue(std::int64_t value, std::int64_t modulus) : value_(0), modulus_(modulus) {
  if (modulus < 1) {
    throw InvalidArgument("Residue: modulus must be >= 1, got " + std::to_string(modulus));
  }
  value_ = reduce(value, modulus);
}

void Residue::require_same_modulus(const Residue& rhs) const {
  if (modulus_ != rhs.modulus_) {
    throw InvalidArgument("Residue: modulus mismatch (" + std::to_string(modulus_) + " vs " +
                          std::to_string(rhs.modulus_) + ")");
  }
}

Residue Residue::operator+(const Residue& rhs) const {
  require_same_modulus(rhs);
  return Residue(value_ + rhs.value_, modulus_);
}

Residue Residue::operator-(const Residue& rhs) const {
  require_same_modulus(rhs);
  return Residue(value_ - rhs.value_, modulus_);
}

Residue Residue::operator*(const Residue& rhs) const {
  require_same_modulus(rhs);
  auto prod = static_cast<__int128>(value_) * rhs.value_;
  return Residue(static_cast<std::int64_t>(prod % modulus_), modulus_);
}

Residue Residue::operator-() const { return Residue(-value_, modulus_); }

bool Residue::is_unit() const { return gcd(value_, modulus_) == 1; }

std::optional<Residue> Residue::inverse() const {
  auto inv = inverse_mod(value_, modulus_);
  if (!inv) return std::nullopt;
  return Residue(*inv, modulus_);
}

std::ostream& operator<<(std::ostream& os, const Residue& r) {
  return os << r.value() << " (mod " << r.modulus() << ")";
}

std::vector<Residue> units(std::int64_t m) {
  if (m < 1) {
    throw InvalidArgument("units: modulus must be >= 1, got " + std::to_string(m));
  }
  std::vector<Residue> out;
  for (std::int64_t k = 0; k < m; ++k) {
    Residue r(k, m);
    if (r.is_unit()) out.push_back(r);
  }
  return out;
}

}  // namespace genuskit
