#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "genuskit/acceptance.hpp"
#include "genuskit/errors.hpp"
#include "genuskit/finite_ring.hpp"
#include "genuskit/order_genus.hpp"

using namespace genuskit;

namespace {

MatModM scalar(int r, std::int64_t m, std::int64_t c) {
  auto a = MatModM::identity(r, m);
  for (int i = 0; i < r; ++i) a.set(i, i, c);
  return a;
}

OrderSpec full_ring_spec(std::int64_t m, std::vector<int> blocks) {
  OrderSpec spec{m, blocks, {}};
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const int r = blocks[b];
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        MatTuple t;
        for (std::size_t c = 0; c < blocks.size(); ++c) t.push_back(MatModM(blocks[c], m));
        t[b].set(i, j, 1);
        spec.generators.push_back(t);
      }
    }
  }
  return spec;
}

}  // namespace

TEST(SubringClosure, ScalarsFromIdentity) {
  OrderSpec spec{10, {2}, {{MatModM::identity(2, 10)}}};
  auto s = subring_closure(spec);
  ASSERT_EQ(s.size(), 10u);
  auto layout = spec.layout();
  for (std::int64_t c = 0; c < 10; ++c) {
    EXPECT_TRUE(std::binary_search(s.begin(), s.end(), layout.encode({scalar(2, 10, c)})));
  }
}

TEST(SubringClosure, PullbackAndFullRing) {
  auto s = subring_closure(pullback_spec(6));
  EXPECT_EQ(s.size(), 6u);
  auto layout = pullback_spec(6).layout();
  for (std::int64_t c = 0; c < 6; ++c) {
    EXPECT_TRUE(std::binary_search(
        s.begin(), s.end(), layout.encode({scalar(1, 6, c), scalar(1, 6, c)})));
  }
  EXPECT_EQ(subring_closure(full_ring_spec(3, {1, 2})).size(), 3u * 81u);
  EXPECT_EQ(subring_closure(full_ring_spec(4, {2})).size(), 256u);
}

TEST(SubringClosure, ClosedUnderRingOperations) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto spec = acceptance::random_order_spec(rng, 6, {2}, 1 + trial % 2);
    auto s = subring_closure(spec);
    auto layout = spec.layout();
    auto in = [&](Code x) { return std::binary_search(s.begin(), s.end(), x); };
    ASSERT_TRUE(in(layout.zero()));
    ASSERT_TRUE(in(layout.identity()));
    for (const auto& g : spec.generators) ASSERT_TRUE(in(layout.encode(g)));
    for (Code a : s) {
      for (Code b : s) {
        ASSERT_TRUE(in(layout.add(a, b)));
        ASSERT_TRUE(in(layout.multiply(a, b)));
      }
    }
  }
}

TEST(SubringClosure, CapIsEnforced) {
  EXPECT_THROW(subring_closure(full_ring_spec(5, {2}), 100), ResourceLimit);
}

TEST(SubringUnits, Examples) {
  auto scalars = subring_closure(OrderSpec{12, {1}, {}});
  EXPECT_EQ(subring_units(scalars, RingLayout(12, {1})).order(), 4u);

  auto diag = subring_closure(pullback_spec(5));
  EXPECT_EQ(subring_units(diag, RingLayout(5, {1, 1})).order(), 4u);

  auto full = subring_closure(full_ring_spec(3, {1, 2}));
  RingLayout layout(3, {1, 2});
  EXPECT_EQ(subring_units(full, layout).order(), unit_group(layout).order());
  EXPECT_EQ(unit_group(layout).order(), 2u * 48u);
}

TEST(SubringUnits, SubsetClosedUnderProductAndInverse) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto spec = acceptance::random_order_spec(rng, 8, {1, 1, 1}, 2);
    auto s = subring_closure(spec);
    auto layout = spec.layout();
    auto k = subring_units(s, layout);
    for (Code a : k.elements()) {
      ASSERT_TRUE(std::binary_search(s.begin(), s.end(), a));
      auto inv = layout.inverse(a);
      ASSERT_TRUE(inv && k.contains(*inv));
      for (Code b : k.elements()) ASSERT_TRUE(k.contains(layout.multiply(a, b)));
    }
  }
}

TEST(GenusRelative, Examples) {
  EXPECT_EQ(genus_relative(full_ring_spec(5, {1, 1})), 1);
  EXPECT_EQ(genus_relative(full_ring_spec(7, {2})), 1);
  EXPECT_EQ(genus_relative(pullback_spec(5)), 2);
  EXPECT_EQ(genus_relative(pullback_spec(24)), 4);
}

TEST(Genus, Examples) {
  auto g12 = genus(pullback_spec(12));
  EXPECT_EQ(g12.total, 2);
  EXPECT_EQ(g12.maximal, 1);
  EXPECT_EQ(g12.bound, 4);  // k = 2 blocks
  EXPECT_EQ(genus(pullback_spec(1)).total, 1);
  EXPECT_EQ(genus(pullback_spec(2)).total, 1);
  EXPECT_EQ(genus(pullback_spec(8)).total, 2);
  EXPECT_EQ(genus(pullback_spec(24)).total, 4);
  for (std::int64_t m : {2, 3, 4, 6}) {
    EXPECT_EQ(genus(OrderSpec{m, {1, 1}, {}}).total, 1) << "scalars, m=" << m;
  }
}

TEST(Genus, PullbackMatchesFormula) {
  for (std::int64_t m = 1; m <= 30; ++m) {
    EXPECT_EQ(genus(pullback_spec(m)).total, genus_pullback_formula(m)) << "m=" << m;
  }
}

TEST(Genus, ScalarOrdersWithSeveralBlocks) {
  // Z embedded diagonally in Z^3 modulo m: K = diagonal units, H = {+-1}^3.
  // Double cosets = |U^3| / (|{+-1}^3| * |U| / |{+-1}|) = (phi/2)^2 for m > 2.
  for (std::int64_t m : {5, 7, 8, 9}) {
    OrderSpec spec{m, {1, 1, 1}, {}};
    const std::int64_t half = totient(m) / 2;
    EXPECT_EQ(genus(spec).total, half * half) << "m=" << m;
    EXPECT_EQ(genus(spec).bound, half * half * half);
  }
}

TEST(Genus, UpperTriangularOrderHasGenusOne) {
  for (std::int64_t m : {5, 7, 8}) {
    OrderSpec spec{m, {2}, {{MatModM::from_rows(m, {{1, 0}, {0, 0}})},
                            {MatModM::from_rows(m, {{0, 1}, {0, 0}})}}};
    EXPECT_EQ(subring_closure(spec).size(), static_cast<std::size_t>(m * m * m));
    EXPECT_EQ(genus(spec).total, 1);
  }
}

TEST(Genus, SameOrderAtDifferentLevels) {
  // Z x_5 Z contains 10(Z x Z); mod 10 it is generated by (1,1) and (5,0).
  OrderSpec at10{10, {1, 1}, {{scalar(1, 10, 1), scalar(1, 10, 1)},
                              {scalar(1, 10, 5), scalar(1, 10, 0)}}};
  EXPECT_EQ(genus(at10).total, genus(pullback_spec(5)).total);
  OrderSpec at4{4, {1, 1}, {{scalar(1, 4, 1), scalar(1, 4, 1)}, {scalar(1, 4, 2), scalar(1, 4, 0)}}};
  EXPECT_EQ(genus(at4).total, genus(pullback_spec(2)).total);
  // Z x_3 Z at level 24.
  OrderSpec at24{24, {1, 1}, {{scalar(1, 24, 1), scalar(1, 24, 1)},
                              {scalar(1, 24, 3), scalar(1, 24, 0)}}};
  EXPECT_EQ(genus(at24).total, genus(pullback_spec(3)).total);
}

TEST(Genus, BoundAndMonotonicityOnRandomSpecs) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const std::int64_t m = std::vector<std::int64_t>{5, 7, 9, 10, 12}[trial % 5];
    auto spec = acceptance::random_order_spec(rng, m, trial % 2 ? std::vector<int>{1, 1}
                                                                 : std::vector<int>{2}, 1);
    auto before = genus(spec);
    EXPECT_LE(before.total, before.bound);
    spec.generators.push_back(acceptance::random_order_spec(rng, m, spec.blocks, 1).generators[0]);
    EXPECT_LE(genus(spec).relative, before.relative);
  }
}

TEST(Genus, PartitionCoversUnitGroup) {
  auto blocks = genus_partition(pullback_spec(24));
  ASSERT_EQ(blocks.size(), 4u);
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  EXPECT_EQ(total, 64u);
}

TEST(Genus, CapPropagates) {
  EXPECT_THROW(genus(full_ring_spec(24, {2}), 1000), ResourceLimit);
}

TEST(PullbackFormula, Examples) {
  EXPECT_EQ(genus_pullback_formula(1), 1);
  EXPECT_EQ(genus_pullback_formula(2), 1);
  EXPECT_EQ(genus_pullback_formula(5), 2);
  EXPECT_EQ(genus_pullback_formula(24), 4);
  EXPECT_THROW(genus_pullback_formula(0), InvalidArgument);
  EXPECT_THROW(pullback_spec(0), InvalidArgument);
}

TEST(Validate, RejectsMismatchedGenerators) {
  OrderSpec wrong_blocks{5, {1, 1}, {{MatModM::identity(1, 5)}}};
  EXPECT_THROW(validate(wrong_blocks), InvalidArgument);
  OrderSpec wrong_size{5, {2}, {{MatModM::identity(1, 5)}}};
  EXPECT_THROW(validate(wrong_size), InvalidArgument);
  OrderSpec wrong_mod{5, {1}, {{MatModM::identity(1, 7)}}};
  EXPECT_THROW(validate(wrong_mod), InvalidArgument);
  EXPECT_THROW(genus(wrong_mod), InvalidArgument);
}

// --- JSON ---------------------------------------------------------------------

TEST(OrderSpecJson, BitExactPullback) {
  const std::string text = R"({"m":6,"blocks":[1,1],"generators":[[[1],[1]]]})";
  EXPECT_EQ(parse_order_spec(text), pullback_spec(6));
  EXPECT_EQ(dump_order_spec(pullback_spec(6)), text);
}

TEST(OrderSpecJson, ReducesEntriesAndRoundTrips) {
  auto spec = parse_order_spec(
      R"({"blocks":[2,1],"m":5,"generators":[[[7,-1,0,12],[-3]],[[1,0,0,1],[0]]]})");
  EXPECT_EQ(spec.generators[0][0], MatModM::from_rows(5, {{2, 4}, {0, 2}}));
  EXPECT_EQ(spec.generators[0][1].at(0, 0), 2);
  EXPECT_EQ(parse_order_spec(dump_order_spec(spec)), spec);
}

TEST(OrderSpecJson, RejectsMalformedInput) {
  for (const char* bad : {
           "not json",
           "[]",
           R"({"blocks":[1],"generators":[]})",
           R"({"m":0,"blocks":[1],"generators":[]})",
           R"({"m":5,"blocks":[],"generators":[]})",
           R"({"m":5,"blocks":[5],"generators":[]})",
           R"({"m":5,"blocks":[1],"generators":[[[1],[1]]]})",
           R"({"m":5,"blocks":[2],"generators":[[[1,2,3]]]})",
           R"({"m":5,"blocks":[1],"generators":[[[1.5]]]})",
           R"({"m":5,"blocks":[1],"generators":[],"extra":1})",
       }) {
    EXPECT_THROW(parse_order_spec(bad), InvalidArgument) << bad;
  }
}

TEST(OrderSpecJson, LoadFromFile) {
  auto path = std::filesystem::temp_directory_path() / "genuskit_spec_test.json";
  {
    std::ofstream out(path);
    out << dump_order_spec(pullback_spec(24));
  }
  EXPECT_EQ(load_order_spec(path), pullback_spec(24));
  std::filesystem::remove(path);
  EXPECT_THROW(load_order_spec(path), InvalidArgument);
}
