#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "genuskit/coset_engine.hpp"
#include "genuskit/finite_ring.hpp"

namespace genuskit {

/// Largest matrix size supported by the cofactor determinant.
inline constexpr int kMaxMatrixSize = 4;

/// A square matrix over Z/m with entries stored row-major in [0, m).
class MatModM {
 public:
  /// The zero matrix.
  MatModM(int size, std::int64_t modulus);

  static MatModM identity(int size, std::int64_t modulus);
  /// Entries are reduced mod m; the row count fixes the size.
  static MatModM from_rows(std::int64_t modulus,
                           const std::vector<std::vector<std::int64_t>>& rows);
  static MatModM from_row_major(int size, std::int64_t modulus,
                                std::span<const std::int64_t> entries);

  int size() const { return size_; }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t at(int row, int col) const { return entries_[row * size_ + col]; }
  void set(int row, int col, std::int64_t value);
  std::span<const std::int64_t> entries() const { return entries_; }

  friend bool operator==(const MatModM&, const MatModM&) = default;

 private:
  int size_;
  std::int64_t modulus_;
  std::vector<std::int64_t> entries_;
};

std::ostream& operator<<(std::ostream& os, const MatModM& a);

/// Matrix product. Throws InvalidArgument on size or modulus mismatch.
MatModM mat_mul(const MatModM& a, const MatModM& b);
MatModM mat_add(const MatModM& a, const MatModM& b);

/// Determinant by cofactor expansion (no division, so valid for composite m).
/// Throws UnsupportedSize for size > kMaxMatrixSize.
Residue det(const MatModM& a);

/// Adjugate times det^-1, or empty when det is not a unit.
std::optional<MatModM> mat_inverse(const MatModM& a);

/// E_ij(1): identity plus a 1 at (i, j), i != j. Zero-based indices.
MatModM transvection(int size, std::int64_t modulus, int row, int col);

/// The transvections E_ij(1) for all i != j, then diag(-1, 1, ..., 1).
/// For size 1 this is just the 1x1 matrix (-1 mod m).
std::vector<MatModM> elementary_generators(int size, std::int64_t modulus);

using MatTuple = std::vector<MatModM>;

/// Layout of the finite ring prod_i Mat(r_i, Z/m) with a canonical 64-bit
/// encoding: the concatenated row-major entries of all blocks, block 0 first,
/// read as base-m digits with the first entry least significant.
///
/// Construction fails with ResourceLimit when m^(sum r_i^2) exceeds 2^64.
class RingLayout {
 public:
  RingLayout(std::int64_t modulus, std::vector<int> blocks);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<int>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  /// Total number of entries, sum r_i^2.
  int entry_count() const { return entry_count_; }
  /// Number of ring elements m^(sum r_i^2), or empty if it does not fit in 64 bits.
  std::optional<std::uint64_t> ambient_size() const { return ambient_size_; }

  Code encode(const MatTuple& tuple) const;
  MatTuple decode(Code code) const;

  Code identity() const { return identity_; }
  Code zero() const { return 0; }
  Code multiply(Code a, Code b) const;
  Code add(Code a, Code b) const;
  /// Integer multiple c * a.
  Code scale(Code a, std::int64_t c) const;

  /// True when every block has a unit determinant.
  bool is_unit(Code a) const;
  std::optional<Code> inverse(Code a) const;

  /// Code of the block-i component, as an element of the one-block layout.
  Code block_code(Code a, std::size_t block) const;
  /// Inverse of block_code: assemble a tuple code from per-block codes.
  Code combine(std::span<const Code> block_codes) const;
  /// The tuple with `matrix` in slot `block` and the identity elsewhere.
  Code embed(std::size_t block, const MatModM& matrix) const;

  /// The one-block layout for block i.
  RingLayout block_layout(std::size_t block) const;

  FiniteGroup::Operation multiplication() const;

 private:
  void unpack(Code code, std::int64_t* digits) const;
  Code pack(const std::int64_t* digits) const;

  std::int64_t modulus_;
  std::vector<int> blocks_;
  std::vector<int> offsets_;
  int entry_count_ = 0;
  std::optional<std::uint64_t> ambient_size_;
  std::vector<std::uint64_t> block_weight_;  // m^offset_i
  Code identity_ = 0;
};

/// GL(r, Z/m) by scanning all m^(r^2) matrices. Codes follow RingLayout(m, {r}).
/// Throws ResourceLimit when m^(r^2) exceeds cap.
FiniteGroup enumerate_gl(int size, std::int64_t modulus,
                         std::size_t cap = kDefaultEnumerationCap);

/// The subgroup of GL(r, Z/m) generated by elementary_generators: the image
/// of GL(r, Z) modulo m.
FiniteGroup stable_image(int size, std::int64_t modulus,
                         std::size_t cap = kDefaultEnumerationCap);

}  // namespace genuskit
