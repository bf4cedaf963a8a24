#include <gtest/gtest.h>

#include "genuskit/atom_catalog.hpp"
#include "genuskit/finite_ring.hpp"
#include "genuskit/order_genus.hpp"

using namespace genuskit;

namespace {

std::vector<Atom> catalog(int n) {
  return {Atom::sphere(n),          Atom::moore(2, n),      Atom::moore(9, n),
          Atom::chang_full(1, 2, n), Atom::chang_r_eta(3, n), Atom::chang_eta_s(1, n),
          Atom::chang_eta(n),        Atom::chang_eta_sq(n),   Atom::atom_a(5, n)};
}

}  // namespace

TEST(RationalWedge, Examples) {
  EXPECT_EQ(rational_wedge(Atom::sphere(7)), (std::vector<int>{7}));
  EXPECT_EQ(rational_wedge(Atom::atom_a(3, 9)), (std::vector<int>{6, 10}));
  EXPECT_TRUE(rational_wedge(Atom::moore(3, 5)).empty());
  EXPECT_EQ(rational_wedge(Atom::chang_eta(5)), (std::vector<int>{4, 6}));
  EXPECT_EQ(rational_wedge(Atom::chang_eta_sq(5)), (std::vector<int>{3, 6}));
  EXPECT_EQ(rational_wedge(Atom::chang_r_eta(2, 5)), (std::vector<int>{6}));
  EXPECT_EQ(rational_wedge(Atom::chang_eta_s(2, 5)), (std::vector<int>{4}));
}

TEST(IsTorsion, Examples) {
  EXPECT_TRUE(is_torsion(Atom::moore(3, 4)));
  EXPECT_TRUE(is_torsion(Atom::chang_full(1, 2, 4)));
  EXPECT_FALSE(is_torsion(Atom::sphere(5)));
}

TEST(IsTorsion, IffRationalWedgeEmpty) {
  for (const auto& a : catalog(8)) {
    EXPECT_EQ(is_torsion(a), rational_wedge(a).empty()) << to_string(a);
  }
}

TEST(EndoOrder, Examples) {
  using V = EndoDescription::Variant;
  EXPECT_EQ(endo_order(Atom::chang_eta(5)), (EndoDescription{V::Pullback, 2}));
  EXPECT_EQ(endo_order(Atom::chang_eta_sq(5)), (EndoDescription{V::Pullback, 2}));
  EXPECT_EQ(endo_order(Atom::atom_a(5, 5)), (EndoDescription{V::Pullback, 24}));
  EXPECT_EQ(endo_order(Atom::atom_a(4, 5)), (EndoDescription{V::Pullback, 6}));
  EXPECT_EQ(endo_order(Atom::sphere(5)).variant, V::Integers);
  EXPECT_EQ(endo_order(Atom::chang_r_eta(1, 5)).variant, V::Integers);
  EXPECT_EQ(endo_order(Atom::chang_eta_s(1, 5)).variant, V::Integers);
  EXPECT_EQ(endo_order(Atom::moore(2, 5)).variant, V::Torsion);
  EXPECT_EQ(endo_order(Atom::chang_full(1, 1, 5)).variant, V::Torsion);
  EXPECT_EQ(to_string(endo_order(Atom::atom_a(2, 5))), "Z x_12 Z");
}

TEST(GenusOfAtom, Examples) {
  EXPECT_EQ(genus_of_atom(Atom::atom_a(1, 6)), 4);
  EXPECT_EQ(genus_of_atom(Atom::atom_a(3, 6)), 2);
  EXPECT_EQ(genus_of_atom(Atom::atom_a(8, 6)), 1);
  EXPECT_EQ(genus_of_atom(Atom::moore(5, 6)), 1);
  EXPECT_EQ(genus_of_atom(Atom::chang_eta(6)), 1);
}

TEST(GenusOfAtom, EngineAgreesWithFormulaForAllA) {
  for (int v = 1; v <= 12; ++v) {
    EXPECT_EQ(genus_of_atom(Atom::atom_a(v, 5)), genus_pullback_formula(24 / gcd(v, 24)))
        << "v=" << v;
  }
}

TEST(SameGenus, Examples) {
  EXPECT_TRUE(same_genus(Atom::atom_a(5, 6), Atom::atom_a(7, 6)));
  EXPECT_FALSE(same_genus(Atom::atom_a(2, 6), Atom::atom_a(3, 6)));
  EXPECT_TRUE(same_genus(Atom::sphere(4), Atom::sphere(4)));
  EXPECT_FALSE(same_genus(Atom::moore(2, 4), Atom::moore(3, 4)));
  EXPECT_FALSE(same_genus(Atom::atom_a(5, 6), Atom::atom_a(7, 7)));
  EXPECT_FALSE(same_genus(Atom::chang_eta(6), Atom::chang_eta_sq(6)));
}

TEST(SameGenus, GenusConstantOnClasses) {
  auto atoms = catalog(6);
  for (int v = 1; v <= 12; ++v) atoms.push_back(Atom::atom_a(v, 6));
  for (const auto& a : atoms) {
    for (const auto& b : atoms) {
      if (same_genus(a, b)) EXPECT_EQ(genus_of_atom(a), genus_of_atom(b));
    }
  }
}

TEST(TorsionSplit, Examples) {
  auto [t0, f0] = torsion_split({Atom::moore(2, 4), Atom::sphere(3)});
  EXPECT_EQ(t0, (std::vector<Atom>{Atom::moore(2, 4)}));
  EXPECT_EQ(f0, (std::vector<Atom>{Atom::sphere(3)}));

  auto [t1, f1] = torsion_split({});
  EXPECT_TRUE(t1.empty() && f1.empty());

  auto [t2, f2] =
      torsion_split({Atom::chang_full(1, 1, 4), Atom::chang_eta(4), Atom::moore(4, 4)});
  EXPECT_EQ(t2, (std::vector<Atom>{Atom::chang_full(1, 1, 4), Atom::moore(4, 4)}));
  EXPECT_EQ(f2, (std::vector<Atom>{Atom::chang_eta(4)}));
}

TEST(B0OfWedge, Examples) {
  const int n = 8;
  EXPECT_EQ(b0_of_wedge({Atom::atom_a(5, n), Atom::sphere(n + 1)}),
            (std::vector<int>{n - 3, n + 1, n + 1}));
  EXPECT_TRUE(b0_of_wedge({Atom::moore(2, n), Atom::moore(3, n)}).empty());
  EXPECT_EQ(b0_of_wedge({Atom::chang_eta(n)}), (std::vector<int>{n - 1, n + 1}));
}

TEST(Validate, RejectsOutOfRange) {
  EXPECT_THROW(validate(Atom::atom_a(0, 6)), InvalidArgument);
  EXPECT_THROW(validate(Atom::atom_a(13, 6)), InvalidArgument);
  EXPECT_THROW(validate(Atom::atom_a(5, 3)), InvalidArgument);
  EXPECT_THROW(validate(Atom::chang_eta_sq(3)), InvalidArgument);
  EXPECT_THROW(validate(Atom::moore(1, 5)), InvalidArgument);
  EXPECT_THROW(validate(Atom::chang_full(0, 1, 5)), InvalidArgument);
  EXPECT_THROW(validate(Atom::sphere(1)), InvalidArgument);
  EXPECT_THROW(genus_of_atom(Atom::atom_a(24, 6)), InvalidArgument);
}

TEST(ParseAtom, Grammar) {
  EXPECT_EQ(parse_atom("S5"), Atom::sphere(5));
  EXPECT_EQ(parse_atom("M(3)@4"), Atom::moore(3, 4));
  EXPECT_EQ(parse_atom("C(2^1.eta.2^2)@5"), Atom::chang_full(1, 2, 5));
  EXPECT_EQ(parse_atom("C(2^3.eta)@5"), Atom::chang_r_eta(3, 5));
  EXPECT_EQ(parse_atom("C(eta.2^2)@5"), Atom::chang_eta_s(2, 5));
  EXPECT_EQ(parse_atom("C(eta)@5"), Atom::chang_eta(5));
  EXPECT_EQ(parse_atom("C(eta2)@5"), Atom::chang_eta_sq(5));
  EXPECT_EQ(parse_atom("A(6)@10"), Atom::atom_a(6, 10));
}

TEST(ParseAtom, CanonicalNamesRoundTrip) {
  for (const auto& a : catalog(9)) EXPECT_EQ(parse_atom(to_string(a)), a) << to_string(a);
}

TEST(ParseAtom, ErrorsNameTokenAndPosition) {
  struct Case {
    const char* text;
    std::size_t position;
    const char* token;
  };
  for (const auto& c : std::vector<Case>{{"X(1)@4", 0, "X"},
                                         {"A(5)#4", 4, "#"},
                                         {"A(x)@4", 2, "x"},
                                         {"C(eta.3)@4", 6, "3"},
                                         {"C(zeta)@4", 2, "zeta"},
                                         {"S5junk", 2, "junk"},
                                         {"A(5)", 4, "<end of input>"},
                                         {"", 0, "<end of input>"}}) {
    try {
      parse_atom(c.text);
      ADD_FAILURE() << "accepted " << c.text;
    } catch (const AtomParseError& e) {
      EXPECT_EQ(e.position(), c.position) << c.text;
      EXPECT_EQ(e.token(), c.token) << c.text;
      EXPECT_NE(std::string(e.what()).find(c.token), std::string::npos);
    }
  }
  EXPECT_THROW(parse_atom("A(13)@5"), InvalidArgument);
  EXPECT_THROW(parse_atom("A(5)@2"), InvalidArgument);
}
