#pragma once

// Genus of an order L with mG <= L <= G = prod_i Mat(r_i, Z), computed from
// its image in the finite ring G/mG:
//
//   g(L) = g(G) * #( Im(G^x) \ (G/mG)^x / (L/mG)^x ),   g(G) = 1.
//
// Im(G^x) in each block is the subgroup of GL(r, Z/m) generated by the
// elementary matrices and diag(-1, 1, ..., 1).

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genuskit/coset_engine.hpp"
#include "genuskit/matrix_mod.hpp"

namespace genuskit {

/// An order given by its conductor level m, block sizes and generators of
/// its image L/mG (the identity tuple is always added).
struct OrderSpec {
  std::int64_t level = 1;
  std::vector<int> blocks;
  std::vector<MatTuple> generators;

  RingLayout layout() const { return RingLayout(level, blocks); }
  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

/// Throws InvalidArgument unless every generator matches blocks and level.
void validate(const OrderSpec& spec);

struct GenusResult {
  std::int64_t relative = 1;  ///< number of double cosets
  std::int64_t maximal = 1;   ///< genus of prod Mat(r_i, Z)
  std::int64_t total = 1;     ///< relative * maximal
  std::int64_t bound = 1;     ///< 1 if m <= 2, else (phi(m)/2)^k

  friend bool operator==(const GenusResult&, const GenusResult&) = default;
};

/// The finite ring L/mG as sorted codes of spec.layout(). Contains 0 and 1.
/// Throws ResourceLimit if it grows past cap.
std::vector<Code> subring_closure(const OrderSpec& spec, std::size_t cap = kDefaultEnumerationCap);

/// Elements of the subring S with a two-sided inverse inside S.
FiniteGroup subring_units(std::span<const Code> subring, const RingLayout& layout);

/// (G/mG)^x = prod_i GL(r_i, Z/m), tuplewise.
FiniteGroup unit_group(const RingLayout& layout, std::size_t cap = kDefaultEnumerationCap);

/// prod_i of the per-block stable images, with the embedded elementary
/// generators attached.
Subgroup global_unit_image(const RingLayout& layout, std::size_t cap = kDefaultEnumerationCap);

/// The double-coset blocks Im \ (G/mG)^x / (L/mG)^x.
std::vector<std::vector<Code>> genus_partition(const OrderSpec& spec,
                                               std::size_t cap = kDefaultEnumerationCap);

std::int64_t genus_relative(const OrderSpec& spec, std::size_t cap = kDefaultEnumerationCap);

/// Full genus with its upper bound. Throws InternalInconsistency if the
/// count exceeds the bound.
GenusResult genus(const OrderSpec& spec, std::size_t cap = kDefaultEnumerationCap);

/// 1 if m <= 2, otherwise (phi(m)/2)^k.
std::int64_t genus_bound(std::int64_t level, std::size_t block_count);

/// Z x_m Z = {(a, b) : a = b mod m}: blocks (1, 1), generator (1, 1).
OrderSpec pullback_spec(std::int64_t level);

/// Closed form for Z x_m Z: 1 if m <= 2, else phi(m)/2.
std::int64_t genus_pullback_formula(std::int64_t level);

// JSON form: {"m":<int>,"blocks":[<int>...],"generators":[[<row-major matrix>...]...]}.
// Entries are reduced mod m on load.
OrderSpec parse_order_spec(std::string_view json_text);
OrderSpec load_order_spec(const std::filesystem::path& path);
std::string dump_order_spec(const OrderSpec& spec);

}  // namespace genuskit
