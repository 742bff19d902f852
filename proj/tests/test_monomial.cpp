#include <gtest/gtest.h>

#include "support.hpp"

using namespace arrfree;
using namespace testing_support;

using Row = std::vector<std::uint64_t>;

TEST(MonomialIdeal, Minimalize) {
  EXPECT_EQ(ideal({"x^2", "x^3"}).generators(), ideal({"x^2"}).generators());
  EXPECT_EQ(ideal({"x*y", "x^2*y", "y^3", "x*y^3"}), ideal({"x*y", "y^3"}));
  auto b = ideal({"x^2", "y^3", "x*z"});
  EXPECT_EQ(ideal({"x*z", "y^3", "x^2"}), b);
}

TEST(MonomialIdeal, Containment) {
  auto b = ideal({"x^2"});
  EXPECT_TRUE(b.contains(pp({3, 1, 0})));
  EXPECT_FALSE(b.contains(pp({1, 5, 0})));
  EXPECT_FALSE(MonomialIdeal(3).contains(pp({0, 0, 0})));
  EXPECT_THROW(b.contains(pp({1, 1})), DimensionError);
  EXPECT_EQ(to_string(MonomialIdeal(2)), "<0>");
}

TEST(SectionalMatrix, FreeQuinticTable) {
  auto m = sectional_matrix(ideal({"x^4", "x^3*y", "x^2*y^2", "x*y^4", "y^6"}), 7);
  EXPECT_EQ(row(m, 1), (Row{1, 1, 1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(row(m, 2), (Row{1, 2, 3, 4, 2, 1, 0, 0}));
  EXPECT_EQ(row(m, 3), (Row{1, 3, 6, 10, 12, 13, 13, 13}));
}

TEST(SectionalMatrix, NonFreeQuinticTable) {
  auto m = sectional_matrix(ideal({"x^4", "x^3*y", "x^2*y^2", "x*y^4", "y^5", "x*y^3*z^2"}), 7);
  EXPECT_EQ(row(m, 2), (Row{1, 2, 3, 4, 2, 0, 0, 0}));
  EXPECT_EQ(row(m, 3), (Row{1, 3, 6, 10, 12, 12, 11, 11}));
}

TEST(SectionalMatrix, WholeRingIsZero) {
  auto m = sectional_matrix(MonomialIdeal::whole_ring(3));
  EXPECT_TRUE(m.is_zero());
}

TEST(SectionalMatrix, RowIsHilbertFunction) {
  auto b = ideal({"x^3", "x^2*y", "x*y^3", "y^4", "x*y^2*z"});
  ASSERT_TRUE(is_strongly_stable(b));
  auto m = sectional_matrix(b, 9);
  for (unsigned d = 0; d <= 9; ++d) EXPECT_EQ(m(3, d), hilbert_function(b, d));
}

TEST(SectionalMatrix, ModeAndRange) {
  EXPECT_THROW(sectional_matrix(ideal({"y"}, 2)), std::invalid_argument);
  auto raw = sectional_matrix(ideal({"y"}, 2), 3, SectionMode::raw_count);
  EXPECT_EQ(row(raw, 1), (Row{1, 1, 1, 1}));
  auto m = sectional_matrix(ideal({"x"}, 2), 3);
  EXPECT_THROW(m(0, 0), std::out_of_range);
  EXPECT_THROW(m(1, 4), std::out_of_range);
}

TEST(SectionalMatrix, QuarticCurveTable) {
  auto b = rgin(polys({"x^4 - y^2 z^2", "x y^2 - y z^2 - z^3"}), seeded()).ideal;
  auto m = sectional_matrix(b.ideal(), 9);
  EXPECT_EQ(row(m, 1), (Row{1, 1, 1, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(row(m, 2), (Row{1, 2, 3, 3, 2, 1, 0, 0, 0, 0}));
  EXPECT_EQ(row(m, 3), (Row{1, 3, 6, 9, 11, 12, 12, 12, 12, 12}));
  EXPECT_TRUE(triangle_equality(m, 3, 4));
  EXPECT_LT(m(3, 4), m(1, 3) + m(2, 3) + m(3, 3));
}

TEST(TriangleEquality, CohenMacaulayTables) {
  auto b = rgin(polys({"x^4 - y^2 z^2", "x y^2 - y z^2 - z^3"}), seeded()).ideal;
  auto m = sectional_matrix(b.ideal(), 5);
  EXPECT_EQ(m(3, 4), m(2, 4) + m(3, 3));

  auto j2 = sectional_matrix(ideal({"x^2", "x*y^2", "x*y*z", "y^4"}, 4), 5);
  EXPECT_FALSE(triangle_equality(j2, 3, 3));
  EXPECT_EQ(j2(3, 3), 5u);
  EXPECT_EQ(j2(3, 2) + j2(2, 3), 6u);
}

TEST(TriangleEquality, ZeroIdealFollowsPascal) {
  auto m = sectional_matrix(MonomialIdeal(4), 6);
  for (std::size_t i = 2; i <= 4; ++i)
    for (unsigned d = 1; d <= 6; ++d) EXPECT_TRUE(triangle_equality(m, i, d));
}

TEST(TriangleEquality, GeneratorOutsideTheSectionDoesNotBreakEquality) {
  // xyz^3 has degree 5 and involves y, but lies outside K[x, y]; equality
  // in row 2 at degree 5 still holds
  auto b = ideal({"x^2", "x*y^3", "x*y^2*z", "y^4", "y^3*z", "x*y*z^3"});
  ASSERT_TRUE(is_strongly_stable(b));
  auto m = sectional_matrix(b, 6);
  EXPECT_TRUE(triangle_equality(m, 2, 5));
  EXPECT_FALSE(has_corner_generator(b, 2, 5));
  EXPECT_TRUE(has_corner_generator(b, 3, 5));
  EXPECT_FALSE(triangle_equality(m, 3, 5));
}

TEST(ReductionNumber, Examples) {
  auto free_b = ideal({"x^4", "x^3*y", "x^2*y^2", "x*y^4", "y^6"});
  EXPECT_EQ(reduction_number(free_b, 1), 5u);
  EXPECT_EQ(reduction_number(ideal({"x^4", "x^3*y", "x^2*y^2", "x*y^4", "y^5", "x*y^3*z^2"}), 1), 4u);
  EXPECT_EQ(reduction_number(free_b, 2), 3u);
  EXPECT_FALSE(reduction_number(free_b, 0).has_value());
  // <x> in K[x, y]: no power of y, so r_0 is infinite; r_1 reads x itself
  EXPECT_FALSE(reduction_number(ideal({"x"}, 2), 0).has_value());
  EXPECT_EQ(reduction_number(ideal({"x"}, 2), 1), 0u);
  EXPECT_THROW(reduction_number(free_b, 3), std::out_of_range);
}

TEST(ReductionNumber, MatrixAgreesWithGenerators) {
  auto b = ideal({"x^4", "x^3*y", "x^2*y^2", "x*y^4", "y^6"});
  auto m = sectional_matrix(b);
  EXPECT_EQ(reduction_number(m, 1), reduction_number(b, 1));
  EXPECT_EQ(reduction_number(m, 2), reduction_number(b, 2));
  EXPECT_FALSE(reduction_number(m, 0).has_value());
}

TEST(Regularity, Examples) {
  EXPECT_EQ(regularity_stable(borel({"x^2", "x*y", "y^5"}, 2)), 5u);
  EXPECT_EQ(regularity_stable(borel({"x"})), 1u);
  EXPECT_EQ(regularity_stable(borel({"x^4", "x^3*y", "x^2*y^2", "x*y^4", "y^6"})), 6u);
  EXPECT_THROW(regularity_stable(StronglyStableIdeal(MonomialIdeal(2))), std::domain_error);
}

TEST(Betti, FourPlanesResolution) {
  auto t = betti_eliahou_kervaire(borel({"x^3", "x^2*y", "x*y^2", "y^4"}));
  EXPECT_EQ(t(0, 3), 3u);
  EXPECT_EQ(t(0, 4), 1u);
  EXPECT_EQ(t(1, 4), 2u);
  EXPECT_EQ(t(1, 5), 1u);
}

TEST(Betti, KoszulPair) {
  auto t = betti_eliahou_kervaire(borel({"x", "y"}, 2));
  EXPECT_EQ(t.beta0(), (std::map<unsigned, std::uint64_t>{{1, 2}}));
  EXPECT_EQ(t.beta1(), (std::map<unsigned, std::uint64_t>{{2, 1}}));
}

TEST(Betti, MatchesSimplicialHomologyOracle) {
  // frozen from tools/oracle.py (upper Koszul complexes)
  auto t = betti_eliahou_kervaire(borel({"x^4", "x^3*y", "x^2*y^2", "x*y^4", "y^6"}));
  EXPECT_EQ(t.beta0(), (std::map<unsigned, std::uint64_t>{{4, 3}, {5, 1}, {6, 1}}));
  EXPECT_EQ(t.beta1(), (std::map<unsigned, std::uint64_t>{{5, 2}, {6, 1}, {7, 1}}));
  EXPECT_EQ(t.betti.size(), 2u);

  auto u = betti_eliahou_kervaire(borel({"x^4", "x^3*y", "x^2*y^2", "x*y^4", "y^5", "x*y^3*z^2"}));
  EXPECT_EQ(u.beta0(), (std::map<unsigned, std::uint64_t>{{4, 3}, {5, 2}, {6, 1}}));
  EXPECT_EQ(u.beta1(), (std::map<unsigned, std::uint64_t>{{5, 2}, {6, 2}, {7, 2}}));
  EXPECT_EQ(u(2, 8), 1u);
}

TEST(LexSegment, Recognition) {
  auto s = is_cm_codim2_stable(borel({"x^4", "x^3*y", "x^2*y^2", "x*y^4", "y^6"}));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->n, 5u);
  EXPECT_EQ(s->lambda, (std::vector<unsigned>{1, 2, 4, 6}));
  EXPECT_FALSE(is_cm_codim2_stable(borel({"x^4", "x^3*y", "x^2*y^2", "x*y^4", "y^5", "x*y^3*z^2"})));
  EXPECT_FALSE(is_cm_codim2_stable(borel({"x"})));
}

namespace {

struct CmCase {
  const char* name;
  std::vector<QPolynomial> gens;
  std::size_t codim;
  std::vector<Row> rows;
  bool cm;
};

}  // namespace

TEST(CohenMacaulay, SectionalTablesAndVerdicts) {
  std::vector<CmCase> cases{
      {"intersection", polys({"x^2 z + x z^2", "x y z", "x y w", "y z w"}, 4), 2,
       {{1, 1, 1, 0, 0}, {1, 2, 3, 0, 0}, {1, 3, 6, 6, 6}, {1, 4, 10, 16, 22}}, true},
      {"embedded line", polys({"x z", "x y w"}, 4), 1,
       {{1, 1, 0, 0, 0}, {1, 2, 2, 1, 1}, {1, 3, 5, 6, 7}, {1, 4, 9, 15, 22}}, false},
      {"non-saturated", polys({"x^2", "x y^2", "x y z", "y^4"}, 4), 2,
       {{1, 1, 0, 0, 0, 0}, {1, 2, 2, 1, 0, 0}, {1, 3, 5, 5, 5, 5}, {1, 4, 9, 14, 19, 24}}, false},
  };
  for (const auto& c : cases) {
    auto b = rgin(c.gens, seeded()).ideal;
    unsigned reg = regularity_stable(b);
    auto m = sectional_matrix(b.ideal(), static_cast<unsigned>(c.rows.front().size() - 1));
    for (std::size_t i = 1; i <= 4; ++i) EXPECT_EQ(row(m, i), c.rows[i - 1]) << c.name << " row " << i;
    auto wide = sectional_matrix(b.ideal(), reg + 2);
    EXPECT_EQ(is_cohen_macaulay_sectional(wide, c.codim, reg), c.cm) << c.name;
    EXPECT_EQ(is_cohen_macaulay_stable(b, c.codim), c.cm) << c.name;
  }
}

TEST(CohenMacaulay, ShortMatrixRejected) {
  auto m = sectional_matrix(ideal({"x^2", "x*y", "y^3"}), 2);
  EXPECT_THROW(is_cohen_macaulay_sectional(m, 2, 3), std::out_of_range);
}
