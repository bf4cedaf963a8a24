#pragma once

// The acceptance checks as library code, shared by the `check` command and
// the acceptance test binary.

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "genuskit/coset_engine.hpp"
#include "genuskit/order_genus.hpp"

namespace genuskit::acceptance {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  double elapsed_ms = 0;
  double limit_ms = 0;
};

struct Config {
  /// Stable-image routine under test; replaceable for fault injection.
  std::function<FiniteGroup(int, std::int64_t, std::size_t)> stable_image =
      [](int r, std::int64_t m, std::size_t cap) { return genuskit::stable_image(r, m, cap); };
  std::uint64_t seed = 20240611;
  std::size_t cap = kDefaultEnumerationCap;
};

/// Random spec over the given level and blocks with `count` generator tuples.
/// Entries of a tuple share a random divisor of m, which keeps many closures
/// proper subrings.
OrderSpec random_order_spec(std::mt19937_64& rng, std::int64_t level, std::vector<int> blocks,
                            int count);

CheckResult pullback_oracle(const Config& config = {});
CheckResult atom_a_table(const Config& config = {});
CheckResult genus_one_catalog(const Config& config = {});
CheckResult stable_image_characterization(const Config& config = {});
CheckResult small_level_rule(const Config& config = {});
CheckResult bound_and_monotonicity(const Config& config = {});
CheckResult double_coset_properties(const Config& config = {});
CheckResult atom_a_genus_classes(const Config& config = {});

std::vector<CheckResult> run_all(const Config& config = {});

/// "PASS  4 stable-image ... expected=... actual=... (12 ms, limit 60000 ms)"
void print(std::ostream& os, const CheckResult& result);

}  // namespace genuskit::acceptance
