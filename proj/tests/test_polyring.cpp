#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "g2flat/polyring.hpp"

using namespace g2flat;

namespace {

RingPtr qq_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex()) {
  return PolyRing::make(std::move(vars), CoefficientField::rationals(), order);
}

Polynomial random_poly(const RingPtr& r, std::mt19937& rng, int terms, int maxdeg) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m(r->nvars());
    for (std::size_t i = 0; i < r->nvars(); ++i) m[i] = static_cast<int>(rng() % (maxdeg + 1));
    ts.push_back(Term{mpq_class(static_cast<long>(rng() % 11) - 5, 1 + rng() % 3), m});
  }
  return Polynomial::from_terms(r, std::move(ts));
}

}  // namespace

TEST(Polyring, ParseRoundTrip) {
  auto r = qq_ring({"x", "y", "z"});
  auto f = parse_polynomial("3/2*x^2*y - y*z + 7 - x^2*y", r);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_TRUE(f.check_invariants());
  EXPECT_EQ(parse_polynomial(f.to_string(), r), f);
  EXPECT_THROW(parse_polynomial("x +* y", r), ParseError);
  EXPECT_THROW(parse_polynomial("w", r), ParseError);
}

TEST(Polyring, GrevlexOrder) {
  auto r = qq_ring({"x", "y", "z"});
  // grevlex: x*z < y^2 (smaller last exponent wins)
  auto f = parse_polynomial("x*z + y^2", r);
  EXPECT_EQ(f.leading_term().mono, Monomial({0, 2, 0}));
  auto lex = qq_ring({"x", "y", "z"}, MonomialOrder::lex());
  EXPECT_EQ(parse_polynomial("x*z + y^2", lex).leading_term().mono, Monomial({1, 0, 1}));
}

TEST(Polyring, RingAxiomsRandom) {
  auto r = qq_ring({"a", "b", "c"});
  std::mt19937 rng(11);
  for (int k = 0; k < 30; ++k) {
    auto f = random_poly(r, rng, 5, 3), g = random_poly(r, rng, 4, 2), h = random_poly(r, rng, 3, 2);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * g, g * f);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_TRUE((f * g).check_invariants());
  }
}

TEST(Polyring, FpCoefficientsReduced) {
  auto r = PolyRing::make({"x"}, CoefficientField::prime(7), MonomialOrder::grevlex());
  auto f = parse_polynomial("8*x - 1/2", r);
  EXPECT_EQ(f, parse_polynomial("x + 3", r));
  EXPECT_TRUE(parse_polynomial("7*x", r).is_zero());
}

TEST(Polyring, SubstituteAndEvaluate) {
  auto r = qq_ring({"x", "y"});
  auto f = parse_polynomial("x^2 - y", r);
  std::vector<Polynomial> images{parse_polynomial("y", r), parse_polynomial("x + y", r)};
  EXPECT_EQ(substitute(f, images), parse_polynomial("y^2 - x - y", r));
  std::vector<mpq_class> pt{3, 4};
  EXPECT_EQ(evaluate(f, std::span<const mpq_class>(pt), RationalOps{}), 5);
}

TEST(Polyring, DerivativeAndPow) {
  auto r = qq_ring({"x", "y"});
  auto f = parse_polynomial("x + y", r);
  EXPECT_EQ(f.pow(3).derivative(0), parse_polynomial("3*x^2 + 6*x*y + 3*y^2", r));
  EXPECT_EQ(f.pow(0), Polynomial::constant(r, 1));
}

TEST(Polyring, IdealFileRoundTrip) {
  auto r = PolyRing::make({"a", "b"}, CoefficientField::prime(32003));
  std::vector<Polynomial> gens{parse_polynomial("a^2 - b", r), parse_polynomial("a*b", r)};
  std::stringstream ss;
  write_ideal_file(ss, r, gens, std::vector<std::string>{"test"});
  auto back = read_ideal_file(ss);
  ASSERT_EQ(back.generators.size(), 2u);
  EXPECT_TRUE(back.ring->same_as(*r));
  EXPECT_EQ(back.generators[0], gens[0].map_to(back.ring));
}

TEST(Polyring, RingMismatchDetected) {
  auto r = qq_ring({"x"});
  auto s = qq_ring({"y"});
  EXPECT_THROW(Polynomial::variable(r, 0) + Polynomial::variable(s, 0), RingMismatch);
}
