#include <hyperweyl/root_data.hpp>

#include <gtest/gtest.h>

using namespace hyperweyl;

TEST(RootDatum, PositiveRootCounts) {
  EXPECT_EQ(parse_root_datum("A1").num_positive_roots(), 1u);
  EXPECT_EQ(parse_root_datum("A2").num_positive_roots(), 3u);
  EXPECT_EQ(parse_root_datum("A3").num_positive_roots(), 6u);
  EXPECT_EQ(parse_root_datum("B2").num_positive_roots(), 4u);
  EXPECT_EQ(parse_root_datum("G2").num_positive_roots(), 6u);
  EXPECT_EQ(parse_root_datum("D4").num_positive_roots(), 12u);
  EXPECT_EQ(parse_root_datum("E6").num_positive_roots(), 36u);
}

TEST(RootDatum, A2RootOrder) {
  const auto A2 = parse_root_datum("A2");
  EXPECT_EQ(A2.root(0).coords, (std::vector<int>{1, 0}));
  EXPECT_EQ(A2.root(1).coords, (std::vector<int>{0, 1}));
  EXPECT_EQ(A2.root(2).coords, (std::vector<int>{1, 1}));
  EXPECT_EQ(A2.root_index(RootVector{{1, 1}}), 2);
  EXPECT_EQ(A2.root_index(RootVector{{2, 1}}), -1);
}

TEST(RootDatum, CartanMatrixA2) {
  const auto A2 = parse_root_datum("A2");
  EXPECT_EQ(A2.cartan(0, 0), 2);
  EXPECT_EQ(A2.cartan(0, 1), -1);
  EXPECT_EQ(A2.cartan(1, 0), -1);
}

TEST(RootDatum, RejectsBadLabels) {
  EXPECT_THROW(parse_root_datum("A0"), std::invalid_argument);
  EXPECT_THROW(parse_root_datum("Q3"), std::invalid_argument);
  EXPECT_THROW(parse_root_datum("A"), std::invalid_argument);
  EXPECT_THROW(parse_root_datum("E5"), std::invalid_argument);
}

TEST(RootDatum, PairingWithHighestRoot) {
  const auto A2 = parse_root_datum("A2");
  EXPECT_EQ(A2.pairing(Weight{{1, 1}}, 2), 2);
  EXPECT_EQ(A2.pairing(Weight{{2, 0}}, 2), 2);
  EXPECT_EQ(A2.pairing(Weight{{2, 0}}, 1), 0);
}

TEST(RootDatum, RootWeightConversionRoundTrip) {
  const auto A3 = parse_root_datum("A3");
  for (std::size_t a = 0; a < A3.num_positive_roots(); ++a) {
    const auto w = A3.to_weight(A3.root(a));
    EXPECT_EQ(A3.to_root_vector(w), A3.root(a));
  }
  EXPECT_FALSE(parse_root_datum("A1").to_root_vector(Weight{{1}}).has_value());
}

TEST(RootDatum, Dominance) {
  const auto A1 = parse_root_datum("A1");
  EXPECT_TRUE(A1.dominance_leq(Weight{{-2}}, Weight{{2}}));
  EXPECT_FALSE(A1.dominance_leq(Weight{{-1}}, Weight{{2}}));
  const auto A2 = parse_root_datum("A2");
  EXPECT_TRUE(A2.dominance_leq(Weight{{0, 0}}, Weight{{1, 1}}));
  EXPECT_FALSE(A2.dominance_leq(Weight{{1, 1}}, Weight{{0, 0}}));
}

TEST(RootDatum, OrbitSizeDividesWeylGroupOrder) {
  for (const char* label : {"A1", "A2", "A3", "B2", "G2"}) {
    const auto D = parse_root_datum(label);
    for (int i = 0; i < D.rank(); ++i) {
      for (const auto& mu : {D.fundamental(i), D.rho(), D.fundamental(i) + D.fundamental(0)}) {
        const auto n = D.weyl_orbit(mu).size();
        EXPECT_EQ(D.weyl_group_order() % n, 0) << label;
      }
    }
    EXPECT_EQ(D.weyl_orbit(D.rho()).size(), D.weyl_group_order().get_ui()) << label;
  }
}

TEST(RootDatum, LongestElement) {
  const auto A1 = parse_root_datum("A1");
  EXPECT_EQ(A1.longest_element_image(Weight{{3}}), Weight{{-3}});
  const auto A2 = parse_root_datum("A2");
  EXPECT_EQ(A2.longest_element_image(Weight{{1, 0}}), (Weight{{0, -1}}));
  EXPECT_EQ(A2.longest_element_image(Weight{{2, 1}}), (Weight{{-1, -2}}));
}

TEST(RootDatum, WeylDimension) {
  const auto A1 = parse_root_datum("A1");
  for (int m = 0; m <= 6; ++m) EXPECT_EQ(A1.weyl_dimension(Weight{{m}}), m + 1);
  const auto A2 = parse_root_datum("A2");
  EXPECT_EQ(A2.weyl_dimension(Weight{{1, 0}}), 3);
  EXPECT_EQ(A2.weyl_dimension(Weight{{1, 1}}), 8);
  EXPECT_EQ(A2.weyl_dimension(Weight{{2, 0}}), 6);
  EXPECT_EQ(A2.weyl_dimension(Weight{{3, 0}}), 10);
  EXPECT_EQ(parse_root_datum("G2").weyl_dimension(Weight{{1, 0}}), 7);
  EXPECT_THROW((void)A1.weyl_dimension(Weight{{-1}}), std::invalid_argument);
}

TEST(RootDatum, WeylGroupOrders) {
  EXPECT_EQ(parse_root_datum("A3").weyl_group_order(), 24);
  EXPECT_EQ(parse_root_datum("B3").weyl_group_order(), 48);
  EXPECT_EQ(parse_root_datum("G2").weyl_group_order(), 12);
}
