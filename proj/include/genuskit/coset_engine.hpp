#pragma once

// Generic finite-group machinery. Elements are opaque 64-bit canonical codes;
// the engine compares codes and calls the group operation, nothing else.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace genuskit {

using Code = std::uint64_t;

/// Default bound on stored elements for every enumeration.
inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

/// Subgroups up to this size are verified by the pairwise product check.
inline constexpr std::size_t kPairwiseVerifyLimit = 10'000;

/// A finite group given by its carrier, operation and identity.
///
/// The carrier is stored sorted, so iteration order never depends on how the
/// group was built. Group axioms are the caller's responsibility; the
/// constructor only checks that the identity belongs to the carrier.
class FiniteGroup {
 public:
  using Operation = std::function<Code(Code, Code)>;

  FiniteGroup(std::vector<Code> carrier, Operation op, Code identity);

  std::size_t order() const { return carrier_.size(); }
  std::span<const Code> elements() const { return carrier_; }
  Code identity() const { return identity_; }
  Code multiply(Code a, Code b) const { return op_(a, b); }
  const Operation& operation() const { return op_; }

  bool contains(Code x) const { return index_of(x).has_value(); }
  std::optional<std::size_t> index_of(Code x) const;

  /// The same operation restricted to a subset (which must be a subgroup).
  FiniteGroup restrict_to(std::vector<Code> subset) const;

 private:
  std::vector<Code> carrier_;
  Operation op_;
  Code identity_;
};

/// A subgroup handed to the double-coset routines. When generators are given
/// the orbit search acts by them alone; otherwise every element is used.
struct Subgroup {
  std::vector<Code> elements;
  std::optional<std::vector<Code>> generators;
};

struct CosetOptions {
  /// Skip subgroup verification. Only for subgroups built by closure.
  bool trusted = false;
};

/// Smallest subset containing gens and the identity that is closed under the
/// operation. Sorted ascending. Throws InvalidArgument if a generator is not
/// in the carrier.
std::vector<Code> subgroup_closure(const FiniteGroup& group, std::span<const Code> gens);

/// True when subset contains the identity, lies in the carrier and is closed
/// under the operation. Pairwise check up to kPairwiseVerifyLimit elements,
/// generated-closure comparison beyond that.
bool is_subgroup(const FiniteGroup& group, std::span<const Code> subset);

/// A small generating set of a subgroup, built greedily (Dimino-style coset
/// extension). Throws InvalidArgument if subset is not a subgroup.
std::vector<Code> generating_set(const FiniteGroup& group, std::span<const Code> subset);

/// Orbits of g -> h*g*k (h in H, k in K) on the carrier. Each block is sorted
/// and blocks are ordered by their smallest element.
///
/// Unless options.trusted, both subgroups are verified first: a subgroup with
/// generators must equal their closure, one without must pass is_subgroup.
/// Throws InvalidArgument otherwise.
std::vector<std::vector<Code>> double_coset_partition(const FiniteGroup& group,
                                                      const Subgroup& left,
                                                      const Subgroup& right,
                                                      CosetOptions options = {});

/// Number of blocks of double_coset_partition, without materializing them.
std::size_t double_coset_count(const FiniteGroup& group, const Subgroup& left,
                               const Subgroup& right, CosetOptions options = {});

}  // namespace genuskit
