#include "genuskit/coset_engine.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "genuskit/errors.hpp"

namespace genuskit {

FiniteGroup::FiniteGroup(std::vector<Code> carrier, Operation op, Code identity)
    : carrier_(std::move(carrier)), op_(std::move(op)), identity_(identity) {
  std::sort(carrier_.begin(), carrier_.end());
  carrier_.erase(std::unique(carrier_.begin(), carrier_.end()), carrier_.end());
  if (!contains(identity_)) {
    throw InvalidArgument("FiniteGroup: identity is not in the carrier");
  }
}

std::optional<std::size_t> FiniteGroup::index_of(Code x) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), x);
  if (it == carrier_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - carrier_.begin());
}

FiniteGroup FiniteGroup::restrict_to(std::vector<Code> subset) const {
  return FiniteGroup(std::move(subset), op_, identity_);
}

namespace {

// Membership bitmap over the carrier of a fixed group.
class Marks {
 public:
  explicit Marks(const FiniteGroup& group) : group_(group), bits_(group.order(), 0) {}

  // Index of x in the carrier; throws if the operation escaped the carrier.
  std::size_t index(Code x) const {
    auto idx = group_.index_of(x);
    if (!idx) throw InvalidArgument("element " + std::to_string(x) + " is not in the group");
    return *idx;
  }
  bool test(Code x) const { return bits_[index(x)] != 0; }
  // Returns true if x was newly marked.
  bool mark(Code x) {
    auto i = index(x);
    if (bits_[i]) return false;
    bits_[i] = 1;
    return true;
  }

 private:
  const FiniteGroup& group_;
  std::vector<char> bits_;
};

std::vector<Code> sorted_copy(std::span<const Code> s) {
  std::vector<Code> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool sorted_contains(const std::vector<Code>& v, Code x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// Dimino-style extension. Returns the generators if the closure stays inside
// `target` and exhausts it, otherwise nullopt.
std::optional<std::vector<Code>> greedy_generators(const FiniteGroup& group,
                                                   const std::vector<Code>& target) {
  Marks in_closure(group);
  std::vector<Code> closure{group.identity()};
  in_closure.mark(group.identity());
  std::vector<Code> gens;

  for (Code candidate : target) {
    if (in_closure.test(candidate)) continue;
    gens.push_back(candidate);

    // Current closure C is a subgroup; the new one is a union of cosets C*r.
    const std::vector<Code> base = closure;
    std::vector<Code> reps{group.identity()};
    auto add_coset = [&](Code rep) -> bool {
      for (Code c : base) {
        Code x = group.multiply(c, rep);
        if (!sorted_contains(target, x)) return false;
        if (in_closure.mark(x)) closure.push_back(x);
      }
      reps.push_back(rep);
      return true;
    };
    if (!add_coset(candidate)) return std::nullopt;
    for (std::size_t pos = 1; pos < reps.size(); ++pos) {
      for (Code s : gens) {
        Code t = group.multiply(reps[pos], s);
        if (!sorted_contains(target, t)) return std::nullopt;
        if (!in_closure.test(t) && !add_coset(t)) return std::nullopt;
      }
    }
  }
  if (closure.size() != target.size()) return std::nullopt;
  return gens;
}

bool pairwise_closed(const FiniteGroup& group, const std::vector<Code>& s) {
  for (Code a : s) {
    for (Code b : s) {
      if (!sorted_contains(s, group.multiply(a, b))) return false;
    }
  }
  return true;
}

void verify_subgroup(const FiniteGroup& group, const Subgroup& sub, const char* which) {
  auto elems = sorted_copy(sub.elements);
  bool ok = false;
  if (sub.generators) {
    // A generated closure is a subgroup; it only has to match the elements.
    ok = std::all_of(sub.generators->begin(), sub.generators->end(),
                     [&](Code g) { return group.contains(g); }) &&
         subgroup_closure(group, *sub.generators) == elems;
  } else {
    ok = is_subgroup(group, elems);
  }
  if (!ok) {
    throw InvalidArgument(std::string("double coset: ") + which +
                          " is not a subgroup generated by its generators");
  }
}

// Calls visit(block) for each orbit; block ids are assigned in carrier order.
template <typename Visit>
void for_each_orbit(const FiniteGroup& group, const Subgroup& left, const Subgroup& right,
                    CosetOptions options, Visit&& visit) {
  if (!options.trusted) {
    verify_subgroup(group, left, "left subgroup");
    verify_subgroup(group, right, "right subgroup");
  }
  const std::vector<Code>& left_act = left.generators ? *left.generators : left.elements;
  const std::vector<Code>& right_act = right.generators ? *right.generators : right.elements;

  Marks seen(group);
  std::vector<Code> block;
  for (Code start : group.elements()) {
    if (!seen.mark(start)) continue;
    block.clear();
    block.push_back(start);
    for (std::size_t pos = 0; pos < block.size(); ++pos) {
      Code g = block[pos];
      for (Code h : left_act) {
        Code x = group.multiply(h, g);
        if (seen.mark(x)) block.push_back(x);
      }
      for (Code k : right_act) {
        Code x = group.multiply(g, k);
        if (seen.mark(x)) block.push_back(x);
      }
    }
    visit(block);
  }
}

}  // namespace

std::vector<Code> subgroup_closure(const FiniteGroup& group, std::span<const Code> gens) {
  for (Code g : gens) {
    if (!group.contains(g)) {
      throw InvalidArgument("subgroup_closure: generator " + std::to_string(g) +
                            " is not in the group");
    }
  }
  auto unique_gens = sorted_copy(gens);
  Marks seen(group);
  std::vector<Code> out{group.identity()};
  seen.mark(group.identity());
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    for (Code g : unique_gens) {
      Code x = group.multiply(out[pos], g);
      if (seen.mark(x)) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(const FiniteGroup& group, std::span<const Code> subset) {
  auto s = sorted_copy(subset);
  if (!sorted_contains(s, group.identity())) return false;
  for (Code x : s) {
    if (!group.contains(x)) return false;
  }
  if (s.size() <= kPairwiseVerifyLimit) return pairwise_closed(group, s);
  return greedy_generators(group, s).has_value();
}

std::vector<Code> generating_set(const FiniteGroup& group, std::span<const Code> subset) {
  auto s = sorted_copy(subset);
  for (Code x : s) {
    if (!group.contains(x)) throw InvalidArgument("generating_set: element outside the group");
  }
  if (!sorted_contains(s, group.identity())) {
    throw InvalidArgument("generating_set: subset does not contain the identity");
  }
  auto gens = greedy_generators(group, s);
  if (!gens) throw InvalidArgument("generating_set: subset is not a subgroup");
  return *gens;
}

std::vector<std::vector<Code>> double_coset_partition(const FiniteGroup& group,
                                                      const Subgroup& left,
                                                      const Subgroup& right,
                                                      CosetOptions options) {
  std::vector<std::vector<Code>> blocks;
  for_each_orbit(group, left, right, options, [&](const std::vector<Code>& block) {
    auto sorted = block;
    std::sort(sorted.begin(), sorted.end());
    blocks.push_back(std::move(sorted));
  });
  return blocks;
}

std::size_t double_coset_count(const FiniteGroup& group, const Subgroup& left,
                               const Subgroup& right, CosetOptions options) {
  std::size_t count = 0;
  for_each_orbit(group, left, right, options, [&](const std::vector<Code>&) { ++count; });
  return count;
}

}  // namespace genuskit
