#include "genuskit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "genuskit/atom_catalog.hpp"
#include "genuskit/errors.hpp"
#include "genuskit/finite_ring.hpp"
#include "genuskit/matrix_mod.hpp"

namespace genuskit::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

// Runs body(result), times it, and fails the check if it throws or overruns.
template <typename Body>
CheckResult timed(int id, std::string name, double limit_ms, Body&& body) {
  CheckResult result;
  result.id = id;
  result.name = std::move(name);
  result.limit_ms = limit_ms;
  auto start = Clock::now();
  try {
    body(result);
  } catch (const std::exception& e) {
    result.passed = false;
    result.actual = std::string("exception: ") + e.what();
  }
  result.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (result.elapsed_ms > limit_ms) {
    result.passed = false;
    result.actual += " [time limit exceeded]";
  }
  return result;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

std::vector<std::int64_t> divisors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

}  // namespace

OrderSpec random_order_spec(std::mt19937_64& rng, std::int64_t level, std::vector<int> blocks,
                            int count) {
  OrderSpec spec;
  spec.level = level;
  spec.blocks = std::move(blocks);
  const auto divs = divisors(level);
  std::uniform_int_distribution<std::int64_t> entry(0, level - 1);
  for (int g = 0; g < count; ++g) {
    const std::int64_t d = pick(rng, divs);
    MatTuple tuple;
    for (int r : spec.blocks) {
      std::vector<std::int64_t> entries(static_cast<std::size_t>(r) * r);
      for (auto& e : entries) e = d * entry(rng);
      tuple.push_back(MatModM::from_row_major(r, level, entries));
    }
    spec.generators.push_back(std::move(tuple));
  }
  return spec;
}

CheckResult pullback_oracle(const Config& config) {
  return timed(1, "pullback-oracle (m = 1..30)", 5'000, [&](CheckResult& res) {
    std::vector<std::int64_t> engine, formula;
    for (std::int64_t m = 1; m <= 30; ++m) {
      engine.push_back(genus(pullback_spec(m), config.cap).total);
      formula.push_back(m <= 2 ? 1 : totient(m) / 2);
    }
    res.expected = join(formula);
    res.actual = join(engine);
    res.passed = engine == formula;
  });
}

CheckResult atom_a_table(const Config& config) {
  return timed(2, "A(v) genus table (v = 1..12)", 5'000, [&](CheckResult& res) {
    std::vector<std::int64_t> engine, table;
    for (int v = 1; v <= 12; ++v) {
      const auto d = gcd(v, 24);
      table.push_back(d == 1 ? 4 : (d == 2 || d == 3) ? 2 : 1);
      engine.push_back(genus_of_atom(Atom::atom_a(v, 10), config.cap));
    }
    res.expected = join(table);
    res.actual = join(engine);
    res.passed = engine == table;
  });
}

CheckResult genus_one_catalog(const Config& config) {
  return timed(3, "genus-one catalog", 1'000, [&](CheckResult& res) {
    const int n = 6;
    std::vector<Atom> atoms = {Atom::moore(2, n),        Atom::moore(3, n),
                               Atom::moore(4, n),        Atom::moore(8, n),
                               Atom::chang_full(1, 1, n), Atom::chang_r_eta(1, n),
                               Atom::chang_eta_s(2, n),  Atom::chang_eta(n),
                               Atom::chang_eta_sq(n)};
    std::vector<std::int64_t> got;
    for (const auto& a : atoms) got.push_back(genus_of_atom(a, config.cap));
    res.expected = join(std::vector<std::int64_t>(atoms.size(), 1));
    res.actual = join(got);
    res.passed = std::all_of(got.begin(), got.end(), [](auto g) { return g == 1; });
  });
}

CheckResult stable_image_characterization(const Config& config) {
  return timed(4, "stable image = {det = +-1}", 60'000, [&](CheckResult& res) {
    std::vector<std::pair<int, std::int64_t>> cases;
    for (std::int64_t m = 2; m <= 12; ++m) cases.emplace_back(2, m);
    for (std::int64_t m = 2; m <= 4; ++m) cases.emplace_back(3, m);

    std::vector<std::string> mismatches;
    for (auto [r, m] : cases) {
      const FiniteGroup gl = enumerate_gl(r, m, config.cap);
      const RingLayout layout(m, {r});
      std::vector<Code> expected;
      for (Code c : gl.elements()) {
        auto d = det(layout.decode(c)[0]);
        if (d.value() == 1 % m || d.value() == reduce(-1, m)) expected.push_back(c);
      }
      const FiniteGroup image = config.stable_image(r, m, config.cap);
      std::vector<Code> actual(image.elements().begin(), image.elements().end());
      if (actual != expected) {
        mismatches.push_back("GL(" + std::to_string(r) + ",Z/" + std::to_string(m) + ") " +
                             std::to_string(actual.size()) + "!=" +
                             std::to_string(expected.size()));
      }
    }
    res.expected = std::to_string(cases.size()) + " exact set matches";
    res.actual = mismatches.empty() ? res.expected : "mismatch: " + join(mismatches);
    res.passed = mismatches.empty();
  });
}

CheckResult small_level_rule(const Config& config) {
  return timed(5, "genus 1 for m in {2,3,4,6}", 60'000, [&](CheckResult& res) {
    std::mt19937_64 rng(config.seed);
    const std::vector<std::int64_t> levels = {2, 3, 4, 6};
    const std::vector<std::vector<int>> shapes = {{1, 1}, {2}};
    std::vector<std::string> failures;
    for (int trial = 0; trial < 50; ++trial) {
      const auto spec = random_order_spec(rng, pick(rng, levels), pick(rng, shapes),
                                          std::uniform_int_distribution<int>(1, 3)(rng));
      const auto g = genus(spec, config.cap).total;
      if (g != 1) failures.push_back(dump_order_spec(spec) + " -> " + std::to_string(g));
    }
    res.expected = "50/50 specs with genus 1";
    res.actual = failures.empty() ? res.expected : "failures: " + join(failures);
    res.passed = failures.empty();
  });
}

CheckResult bound_and_monotonicity(const Config& config) {
  return timed(6, "bound (phi(m)/2)^k and monotonicity", 120'000, [&](CheckResult& res) {
    std::mt19937_64 rng(config.seed + 6);
    const std::vector<std::int64_t> levels = {5, 8, 12, 24};
    const std::vector<std::vector<int>> shapes = {{1, 1}, {2}, {1, 1, 1}, {1, 2}};
    std::vector<std::string> failures;
    std::set<std::int64_t> seen;
    for (int trial = 0; trial < 50; ++trial) {
      auto spec = random_order_spec(rng, pick(rng, levels), pick(rng, shapes),
                                    std::uniform_int_distribution<int>(1, 2)(rng));
      const auto before = genus(spec, config.cap);
      const auto extra = random_order_spec(rng, spec.level, spec.blocks, 1);
      spec.generators.push_back(extra.generators.front());
      const auto after = genus(spec, config.cap);
      seen.insert(before.total);
      if (before.total > before.bound || after.total > after.bound ||
          after.relative > before.relative) {
        failures.push_back(dump_order_spec(spec) + ": " + std::to_string(before.total) + " -> " +
                           std::to_string(after.total) + " (bound " +
                           std::to_string(before.bound) + ")");
      }
    }
    res.expected = "50/50 within bound and non-increasing";
    res.actual = failures.empty() ? res.expected + " (genera seen: " +
                                        join(std::vector<std::int64_t>(seen.begin(), seen.end())) +
                                        ")"
                                  : "failures: " + join(failures);
    res.passed = failures.empty();
  });
}

namespace {

// One random double-coset case: returns an empty string on success.
std::string double_coset_case(std::mt19937_64& rng, const FiniteGroup& group) {
  auto random_elements = [&](int count) {
    std::vector<Code> out;
    for (int i = 0; i < count; ++i) {
      out.push_back(group.elements()[std::uniform_int_distribution<std::size_t>(
          0, group.order() - 1)(rng)]);
    }
    return out;
  };
  auto random_subgroup = [&]() {
    auto gens = random_elements(std::uniform_int_distribution<int>(0, 2)(rng));
    return Subgroup{subgroup_closure(group, gens), gens};
  };
  const Subgroup left = random_subgroup();
  const Subgroup right = random_subgroup();
  const auto blocks = double_coset_partition(group, left, right);

  std::vector<Code> all;
  std::size_t total = 0;
  for (const auto& b : blocks) {
    total += b.size();
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  if (total != group.order()) return "block sizes do not sum to |G|";
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return "blocks overlap";
  if (!std::equal(all.begin(), all.end(), group.elements().begin(), group.elements().end())) {
    return "union of blocks is not G";
  }
  for (const auto& b : blocks) {
    for (Code g : b) {
      for (Code h : left.elements) {
        if (!std::binary_search(b.begin(), b.end(), group.multiply(h, g))) return "not H-closed";
      }
      for (Code k : right.elements) {
        if (!std::binary_search(b.begin(), b.end(), group.multiply(g, k))) return "not K-closed";
      }
    }
  }

  // Shuffled carrier and element-set action must agree with the generator run.
  std::vector<Code> shuffled(group.elements().begin(), group.elements().end());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const FiniteGroup reshuffled(shuffled, group.operation(), group.identity());
  Subgroup left_full{left.elements, std::nullopt};
  Subgroup right_full{right.elements, std::nullopt};
  std::shuffle(left_full.elements.begin(), left_full.elements.end(), rng);
  std::shuffle(right_full.elements.begin(), right_full.elements.end(), rng);
  if (double_coset_count(reshuffled, left_full, right_full) != blocks.size()) {
    return "count changed under shuffling";
  }

  const std::vector<Code> everything(group.elements().begin(), group.elements().end());
  const Subgroup whole{everything, generating_set(group, everything)};
  const Subgroup trivial{{group.identity()}, std::vector<Code>{}};
  if (double_coset_count(group, whole, whole) != 1) return "H = K = G did not give 1";
  if (double_coset_count(group, trivial, trivial) != group.order()) {
    return "H = K = {e} did not give |G|";
  }
  return {};
}

}  // namespace

CheckResult double_coset_properties(const Config& config) {
  return timed(7, "double-coset partition properties", 120'000, [&](CheckResult& res) {
    std::vector<FiniteGroup> groups;
    for (std::int64_t m : {5, 8, 12, 15, 21, 24}) {
      groups.push_back(unit_group(RingLayout(m, {1, 1}), config.cap));
    }
    groups.push_back(unit_group(RingLayout(7, {1, 1, 1}), config.cap));
    groups.push_back(unit_group(RingLayout(13, {1, 1, 1}), config.cap));
    for (std::int64_t m : {2, 3, 4, 5, 6}) groups.push_back(enumerate_gl(2, m, config.cap));
    groups.push_back(unit_group(RingLayout(2, {2, 2}), config.cap));
    for (const auto& g : groups) {
      if (g.order() > 2000) throw InternalInconsistency("test group larger than 2000");
    }

    std::mt19937_64 rng(config.seed + 7);
    const int cases = 240;
    std::vector<std::string> failures;
    for (int i = 0; i < cases; ++i) {
      const auto& group = groups[static_cast<std::size_t>(i) % groups.size()];
      auto why = double_coset_case(rng, group);
      if (!why.empty()) failures.push_back("case " + std::to_string(i) + ": " + why);
    }
    res.expected = std::to_string(cases) + " cases satisfy all partition invariants";
    res.actual = failures.empty() ? res.expected : join(failures);
    res.passed = failures.empty();
  });
}

CheckResult atom_a_genus_classes(const Config& config) {
  return timed(8, "same_genus classes on A(v)", 1'000, [&](CheckResult& res) {
    const int n = 7;
    std::vector<Atom> atoms;
    for (int v = 1; v <= 12; ++v) atoms.push_back(Atom::atom_a(v, n));
    std::vector<std::string> problems;
    std::vector<std::int64_t> genera;
    for (const auto& a : atoms) genera.push_back(genus_of_atom(a, config.cap));
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (!same_genus(atoms[i], atoms[i])) problems.push_back("not reflexive");
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        const bool sij = same_genus(atoms[i], atoms[j]);
        if (sij != same_genus(atoms[j], atoms[i])) problems.push_back("not symmetric");
        const bool fiber = gcd(atoms[i].first, 24) == gcd(atoms[j].first, 24);
        if (sij != fiber) problems.push_back("class is not a gcd fiber");
        if (sij && genera[i] != genera[j]) problems.push_back("genus not constant on class");
        for (std::size_t k = 0; k < atoms.size(); ++k) {
          if (sij && same_genus(atoms[j], atoms[k]) && !same_genus(atoms[i], atoms[k])) {
            problems.push_back("not transitive");
          }
        }
      }
    }
    res.expected = "equivalence with classes {gcd(v,24)} and constant genus";
    res.actual = problems.empty() ? res.expected : problems.front();
    res.passed = problems.empty();
  });
}

std::vector<CheckResult> run_all(const Config& config) {
  return {pullback_oracle(config),         atom_a_table(config),
          genus_one_catalog(config),       stable_image_characterization(config),
          small_level_rule(config),        bound_and_monotonicity(config),
          double_coset_properties(config), atom_a_genus_classes(config)};
}

void print(std::ostream& os, const CheckResult& r) {
  os << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.name << ": expected=" << r.expected
     << " actual=" << r.actual << " (" << std::fixed << std::setprecision(1) << r.elapsed_ms
     << " ms, limit " << std::setprecision(0) << r.limit_ms << " ms)\n";
  os.unsetf(std::ios::floatfield);
}

}  // namespace genuskit::acceptance
