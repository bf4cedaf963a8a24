#pragma once

// Small stable polyhedral atoms and the finite data attached to them:
// rational sphere wedge, torsion classification, reduced endomorphism order
// and genus.
//
// Cell conventions for an atom with suspension index n:
//   S<n>                     sphere S^n
//   M(a)@n                   cofiber of a: S^n -> S^n
//   C(2^r.eta.2^s)@n         cofiber of [[2^r, eta], [0, 2^s]] on S^{n-1} v S^n
//   C(2^r.eta)@n             cofiber of (2^r, eta): S^{n-1} v S^n -> S^{n-1}
//   C(eta.2^s)@n             cofiber of (eta, 2^s): S^n -> S^{n-1} v S^n
//   C(eta)@n                 cofiber of eta: S^n -> S^{n-1}
//   C(eta2)@n                cofiber of eta^2: S^n -> S^{n-2}
//   A(v)@n                   built from C(eta) and v*nu: S^n -> S^{n-3}, 0 < v <= 12

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genuskit/coset_engine.hpp"
#include "genuskit/errors.hpp"

namespace genuskit {

enum class AtomKind { Sphere, Moore, ChangFull, ChangREta, ChangEtaS, ChangEta, ChangEtaSq, AtomA };

/// A catalog atom. Unused parameters are zero, so == is structural identity.
struct Atom {
  AtomKind kind = AtomKind::Sphere;
  int top_dim = 2;
  int first = 0;   ///< a (Moore), r (ChangFull, ChangREta), s (ChangEtaS), v (AtomA)
  int second = 0;  ///< s (ChangFull)

  static Atom sphere(int n);
  static Atom moore(int a, int n);
  static Atom chang_full(int r, int s, int n);
  static Atom chang_r_eta(int r, int n);
  static Atom chang_eta_s(int s, int n);
  static Atom chang_eta(int n);
  static Atom chang_eta_sq(int n);
  static Atom atom_a(int v, int n);

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Throws InvalidArgument when parameters or dimension are out of range.
void validate(const Atom& atom);

/// Canonical name in the CLI grammar; parse_atom(to_string(a)) == a.
std::string to_string(const Atom& atom);

/// Parse error carrying the offending token and its zero-based position.
class AtomParseError : public InvalidArgument {
 public:
  AtomParseError(std::string token, std::size_t position, const std::string& message);
  const std::string& token() const { return token_; }
  std::size_t position() const { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

Atom parse_atom(std::string_view text);

struct EndoDescription {
  enum class Variant { Torsion, Integers, Pullback };
  Variant variant = Variant::Integers;
  std::int64_t level = 0;  ///< m of Z x_m Z; only meaningful for Pullback

  friend bool operator==(const EndoDescription&, const EndoDescription&) = default;
};

std::string to_string(const EndoDescription& endo);

/// Sorted sphere dimensions of the rational wedge (with multiplicity).
std::vector<int> rational_wedge(const Atom& atom);

bool is_torsion(const Atom& atom);

/// Reduced endomorphism ring (endomorphisms modulo the nilradical).
EndoDescription endo_order(const Atom& atom);

/// Genus via the order-genus engine; torsion and Z give 1.
std::int64_t genus_of_atom(const Atom& atom, std::size_t cap = kDefaultEnumerationCap);

/// Identical atoms, or two A(v) atoms with equal dimension and gcd(v, 24).
bool same_genus(const Atom& a, const Atom& b);

/// Stable partition into (torsion atoms, reduced atoms).
std::pair<std::vector<Atom>, std::vector<Atom>> torsion_split(const std::vector<Atom>& atoms);

/// Sorted multiset union of the rational wedges.
std::vector<int> b0_of_wedge(const std::vector<Atom>& atoms);

}  // namespace genuskit
