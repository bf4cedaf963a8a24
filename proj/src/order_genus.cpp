#include "genuskit/order_genus.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "genuskit/errors.hpp"
#include "genuskit/finite_ring.hpp"

namespace genuskit {

namespace {

// All tuples whose block-i component lies in factors[i].
std::vector<Code> cartesian(const RingLayout& layout, const std::vector<std::vector<Code>>& factors,
                            std::size_t cap, const char* what) {
  std::size_t total = 1;
  for (const auto& f : factors) {
    if (f.empty()) return {};
    if (total > cap / f.size()) {
      throw ResourceLimit(std::string(what) + ": product group exceeds the cap of " +
                          std::to_string(cap));
    }
    total *= f.size();
  }
  std::vector<Code> out;
  out.reserve(total);
  std::vector<std::size_t> idx(factors.size(), 0);
  std::vector<Code> parts(factors.size());
  while (true) {
    for (std::size_t b = 0; b < factors.size(); ++b) parts[b] = factors[b][idx[b]];
    out.push_back(layout.combine(parts));
    std::size_t b = 0;
    while (b < factors.size() && ++idx[b] == factors[b].size()) idx[b++] = 0;
    if (b == factors.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Code> to_vector(std::span<const Code> s) { return {s.begin(), s.end()}; }

}  // namespace

void validate(const OrderSpec& spec) {
  if (spec.level < 1) {
    throw InvalidArgument("order spec: m must be >= 1, got " + std::to_string(spec.level));
  }
  if (spec.blocks.empty()) throw InvalidArgument("order spec: blocks must be non-empty");
  for (int r : spec.blocks) {
    if (r < 1) throw InvalidArgument("order spec: block sizes must be >= 1");
  }
  for (std::size_t g = 0; g < spec.generators.size(); ++g) {
    const auto& tuple = spec.generators[g];
    if (tuple.size() != spec.blocks.size()) {
      throw InvalidArgument("order spec: generator " + std::to_string(g) + " has " +
                            std::to_string(tuple.size()) + " blocks, expected " +
                            std::to_string(spec.blocks.size()));
    }
    for (std::size_t b = 0; b < tuple.size(); ++b) {
      if (tuple[b].size() != spec.blocks[b] || tuple[b].modulus() != spec.level) {
        throw InvalidArgument("order spec: generator " + std::to_string(g) + " block " +
                              std::to_string(b) + " does not match size/modulus");
      }
    }
  }
}

std::vector<Code> subring_closure(const OrderSpec& spec, std::size_t cap) {
  validate(spec);
  const RingLayout layout = spec.layout();

  std::vector<Code> gens;
  for (const auto& t : spec.generators) gens.push_back(layout.encode(t));

  std::unordered_set<Code> members{layout.zero()};
  std::vector<Code> elements{layout.zero()};
  std::vector<Code> additive_basis;

  // A := A + <p>, as the union of the cosets A + k*p before k*p returns to A.
  auto extend = [&](Code p) {
    if (members.contains(p)) return;
    const std::vector<Code> base = elements;
    for (Code multiple = p; !members.contains(multiple); multiple = layout.add(multiple, p)) {
      if (elements.size() + base.size() > cap) {
        throw ResourceLimit("subring_closure: subring exceeds the cap of " + std::to_string(cap));
      }
      for (Code a : base) {
        Code x = layout.add(a, multiple);
        members.insert(x);
        elements.push_back(x);
      }
    }
    additive_basis.push_back(p);
  };

  extend(layout.identity());
  for (Code g : gens) extend(g);
  // Closed under right multiplication by every generator once each additive
  // generator is; together with 1 in A this gives closure under products.
  for (std::size_t pos = 0; pos < additive_basis.size(); ++pos) {
    for (Code g : gens) extend(layout.multiply(additive_basis[pos], g));
  }

  std::sort(elements.begin(), elements.end());
  return elements;
}

FiniteGroup subring_units(std::span<const Code> subring, const RingLayout& layout) {
  std::vector<Code> sorted = to_vector(subring);
  std::sort(sorted.begin(), sorted.end());
  std::vector<Code> units;
  for (Code a : sorted) {
    auto inv = layout.inverse(a);
    if (inv && std::binary_search(sorted.begin(), sorted.end(), *inv)) units.push_back(a);
  }
  return FiniteGroup(std::move(units), layout.multiplication(), layout.identity());
}

FiniteGroup unit_group(const RingLayout& layout, std::size_t cap) {
  std::vector<std::vector<Code>> factors;
  for (int r : layout.blocks()) {
    factors.push_back(to_vector(enumerate_gl(r, layout.modulus(), cap).elements()));
  }
  return FiniteGroup(cartesian(layout, factors, cap, "unit_group"), layout.multiplication(),
                     layout.identity());
}

Subgroup global_unit_image(const RingLayout& layout, std::size_t cap) {
  std::vector<std::vector<Code>> factors;
  std::vector<Code> gens;
  for (std::size_t b = 0; b < layout.block_count(); ++b) {
    const int r = layout.blocks()[b];
    factors.push_back(to_vector(stable_image(r, layout.modulus(), cap).elements()));
    for (const auto& g : elementary_generators(r, layout.modulus())) {
      gens.push_back(layout.embed(b, g));
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Subgroup{cartesian(layout, factors, cap, "global_unit_image"), std::move(gens)};
}

namespace {

struct CosetProblem {
  FiniteGroup group;
  Subgroup left;
  Subgroup right;
};

CosetProblem build_problem(const OrderSpec& spec, std::size_t cap) {
  validate(spec);
  const RingLayout layout = spec.layout();
  FiniteGroup group = unit_group(layout, cap);
  Subgroup left = global_unit_image(layout, cap);
  FiniteGroup order_units = subring_units(subring_closure(spec, cap), layout);
  std::vector<Code> right_elems = to_vector(order_units.elements());
  std::vector<Code> right_gens = generating_set(group, right_elems);
  return CosetProblem{std::move(group), std::move(left),
                      Subgroup{std::move(right_elems), std::move(right_gens)}};
}

}  // namespace

std::vector<std::vector<Code>> genus_partition(const OrderSpec& spec, std::size_t cap) {
  auto p = build_problem(spec, cap);
  return double_coset_partition(p.group, p.left, p.right);
}

std::int64_t genus_relative(const OrderSpec& spec, std::size_t cap) {
  auto p = build_problem(spec, cap);
  return static_cast<std::int64_t>(double_coset_count(p.group, p.left, p.right));
}

std::int64_t genus_bound(std::int64_t level, std::size_t block_count) {
  if (level <= 2) return 1;
  const std::int64_t per_block = totient(level) / 2;
  std::int64_t bound = 1;
  for (std::size_t i = 0; i < block_count; ++i) bound *= per_block;
  return bound;
}

GenusResult genus(const OrderSpec& spec, std::size_t cap) {
  GenusResult result;
  result.relative = genus_relative(spec, cap);
  result.maximal = 1;
  result.total = result.maximal * result.relative;
  result.bound = genus_bound(spec.level, spec.blocks.size());
  if (result.total < 1 || result.total > result.bound) {
    throw InternalInconsistency("genus: computed " + std::to_string(result.total) +
                                " violates the bound " + std::to_string(result.bound));
  }
  return result;
}

OrderSpec pullback_spec(std::int64_t level) {
  if (level < 1) {
    throw InvalidArgument("pullback_spec: m must be >= 1, got " + std::to_string(level));
  }
  OrderSpec spec;
  spec.level = level;
  spec.blocks = {1, 1};
  spec.generators = {{MatModM::identity(1, level), MatModM::identity(1, level)}};
  return spec;
}

std::int64_t genus_pullback_formula(std::int64_t level) {
  if (level < 1) {
    throw InvalidArgument("genus_pullback_formula: m must be >= 1, got " + std::to_string(level));
  }
  return level <= 2 ? 1 : totient(level) / 2;
}

}  // namespace genuskit
