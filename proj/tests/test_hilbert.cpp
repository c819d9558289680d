#include <gtest/gtest.h>

#include <random>

#include "g2flat/hilbert.hpp"

using namespace g2flat;

namespace {

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

RingPtr ring6(MonomialOrder order = MonomialOrder::grevlex()) {
  return PolyRing::make({"x", "y", "z", "t", "u", "v"}, CoefficientField::prime(32003), order);
}

}  // namespace

TEST(Hilbert, TwistedCubic) {
  auto r = ring6();
  Ideal c(r, {P(r, "u"), P(r, "v"), P(r, "x*z - y^2"), P(r, "y*t - x^2"), P(r, "z*t - x*y")});
  auto h = hilbert_data(c);
  EXPECT_EQ(h.dimension, 1);
  ASSERT_TRUE(h.degree);
  EXPECT_EQ(*h.degree, 3);
  ASSERT_EQ(h.hp_coefficients.size(), 2u);
  EXPECT_EQ(h.hp_coefficients[0], 1);
  EXPECT_EQ(h.hp_coefficients[1], 3);
}

TEST(Hilbert, EmptyAndWholeSpace) {
  auto r = ring6();
  auto empty = hilbert_data(Ideal(r, {P(r, "x"), P(r, "y"), P(r, "z"), P(r, "t"), P(r, "u"), P(r, "v^2")}));
  EXPECT_EQ(empty.dimension, -1);
  EXPECT_FALSE(empty.degree);
  EXPECT_EQ(empty.hilbert_function(0), 1);
  EXPECT_EQ(empty.hilbert_function(1), 1);
  EXPECT_EQ(empty.hilbert_function(2), 0);
  auto whole = hilbert_data(Ideal(r));
  EXPECT_EQ(whole.dimension, 5);
  EXPECT_EQ(*whole.degree, 1);
  auto unit = hilbert_data(Ideal(r, {Polynomial::constant(r, 1)}));
  EXPECT_EQ(unit.dimension, -1);
  EXPECT_EQ(unit.hilbert_function(0), 0);
}

TEST(Hilbert, RecursionMatchesGradedRanksOnRandomMonomialIdeals) {
  std::mt19937 rng(7);
  auto r = PolyRing::make({"a", "b", "c", "d"}, CoefficientField::prime(32003));
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    std::vector<Monomial> monos;
    const int k = 1 + static_cast<int>(rng() % 6);
    for (int g = 0; g < k; ++g) {
      Monomial m(4);
      for (std::size_t i = 0; i < 4; ++i) m[i] = static_cast<int>(rng() % 4);
      if (m.is_one()) m[0] = 1;
      monos.push_back(m);
      gens.push_back(Polynomial::monomial(r, m));
    }
    const auto h = hilbert_data_from_monomials(monos, 4);
    const Ideal ideal(r, gens);
    for (long d = 0; d <= 8; ++d) {
      EXPECT_EQ(h.hilbert_function(d), hilbert_function_by_rank(ideal, d)) << "trial " << trial << " d " << d;
    }
    // degree from the series numerator
    if (h.degree) {
      EXPECT_EQ(h.hp_coefficients.back() * [&] {
        mpz_class f = 1;
        for (int i = 2; i <= h.dimension; ++i) f *= i;
        return mpq_class(f);
      }(), mpq_class(*h.degree));
    }
  }
}

TEST(Hilbert, OrderIndependence) {
  std::mt19937 rng(3);
  auto g = ring6();
  auto l = ring6(MonomialOrder::lex());
  const char* gens[] = {"x*y - z*t", "x^2 - u*v", "y*u - t*v + x*z", "z^2 - x*v"};
  std::vector<Polynomial> pg, pl;
  for (auto s : gens) {
    pg.push_back(P(g, s));
    pl.push_back(P(l, s));
  }
  auto hg = hilbert_data(Ideal(g, pg));
  auto hl = hilbert_data(Ideal(l, pl));
  EXPECT_EQ(hg, hl);
  EXPECT_EQ(hg.dimension, 1);
  EXPECT_EQ(*hg.degree, 16);
  for (long d = 0; d <= 5; ++d) EXPECT_EQ(hg.hilbert_function(d), hilbert_function_by_rank(Ideal(g, pg), d));
}

TEST(Hilbert, GradedPieceOfTwistedCubicHasFourteenQuadrics) {
  auto r = ring6();
  Ideal c(r, {P(r, "u"), P(r, "v"), P(r, "x*z - y^2"), P(r, "y*t - x^2"), P(r, "z*t - x*y")});
  EXPECT_EQ(graded_piece(c, 2).size(), 14u);
  EXPECT_EQ(graded_piece(Ideal(r), 2).size(), 0u);
  EXPECT_EQ(monomials_of_degree(6, 2).size(), 21u);
}
