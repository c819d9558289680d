#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "g2flat/exterior.hpp"
#include "g2flat/hilbert.hpp"

using namespace g2flat;

namespace {

const auto Fp = CoefficientField::prime(32003);

Form random_form(std::mt19937& rng, int grade) {
  Form f(grade);
  for (unsigned b = 0; b < 128; ++b) {
    if (std::popcount(b) != grade) continue;
    f.add_term(static_cast<Blade>(b), mpq_class(static_cast<long>(rng() % 7) - 3));
  }
  return f;
}

Form random_vector(std::mt19937& rng) {
  std::vector<mpq_class> c(7);
  for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
  return vector_form(c);
}

}  // namespace

TEST(Exterior, WedgeBasics) {
  EXPECT_TRUE(wedge(basis_form({1}), basis_form({1})).is_zero());
  const Form vol = wedge(basis_form({1, 2}), basis_form({3, 4, 5, 6, 7}));
  EXPECT_EQ(vol, basis_form({1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(basis_form({2, 1}), basis_form({1, 2}, -1));
  EXPECT_THROW(wedge(basis_form({1, 2, 3, 4}), basis_form({1, 2, 3, 4})), std::invalid_argument);
}

TEST(Exterior, GradedAnticommutativity) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = static_cast<int>(rng() % 4), l = static_cast<int>(rng() % 4);
    const Form a = random_form(rng, k), b = random_form(rng, l);
    const Form ab = wedge(a, b), ba = wedge(b, a);
    EXPECT_EQ(ab, (k * l) % 2 ? -ba : ba);
  }
}

TEST(Exterior, HodgeDual) {
  const Form d = hodge_dual(basis_form({1, 2, 3, 4, 5}));
  EXPECT_EQ(d.grade(), 2);
  EXPECT_EQ(d, basis_form({6, 7}));
  std::mt19937 rng(2);
  for (int k = 0; k <= 7; ++k) {
    const Form a = random_form(rng, k);
    EXPECT_EQ(hodge_dual(hodge_dual(a)), a);  // (-1)^{k(7-k)} = 1
    for (const auto& [b, c] : a.terms()) {
      Form single(k);
      single.add_term(b, 1);
      EXPECT_EQ(wedge(single, hodge_dual(single)), basis_form({1, 2, 3, 4, 5, 6, 7}));
    }
  }
}

TEST(Exterior, Decomposability) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Form f = random_vector(rng);
    for (int k = 1; k < 5; ++k) f = wedge(f, random_vector(rng));
    EXPECT_TRUE(is_decomposable(f));
    EXPECT_TRUE(is_decomposable(wedge(random_vector(rng), random_vector(rng))));
  }
  const Form a = basis_form({1, 2, 3, 4, 5}) + basis_form({1, 2, 3, 6, 7});
  EXPECT_FALSE(is_decomposable(a));
  const Form w = hodge_dual(a);
  EXPECT_EQ(w, basis_form({6, 7}) + basis_form({4, 5}));
  EXPECT_FALSE(is_decomposable(basis_form({1, 2}) + basis_form({3, 4})));
  EXPECT_THROW(is_decomposable(omega0()), std::domain_error);
}

TEST(Exterior, DecomposabilityInvariantUnderBasisChange) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    // random unipotent (hence invertible) integer matrix
    std::vector<std::vector<mpq_class>> g(7, std::vector<mpq_class>(7, 0));
    for (int i = 0; i < 7; ++i) {
      g[i][i] = 1;
      for (int j = i + 1; j < 7; ++j) g[i][j] = static_cast<long>(rng() % 5) - 2;
    }
    auto image = [&](const Form& f) {
      // apply g to each basis vector of each blade
      Form out(f.grade());
      for (const auto& [b, c] : f.terms()) {
        Form acc = basis_form({}, c);
        for (int i : blade_indices(b)) {
          std::vector<mpq_class> col(7);
          for (int r = 0; r < 7; ++r) col[r] = g[r][i - 1];
          acc = wedge(acc, vector_form(col));
        }
        out = out + acc;
      }
      return out;
    };
    const Form generic = basis_form({1, 2, 3, 4, 5}) + basis_form({1, 2, 3, 6, 7});
    const Form pair = basis_form({1, 2}) + basis_form({3, 4});
    EXPECT_EQ(is_decomposable(image(generic)), false);
    EXPECT_EQ(is_decomposable(image(pair)), false);
    EXPECT_EQ(is_decomposable(image(basis_form({2, 5}))), true);
  }
}

TEST(Exterior, IsotropyKernelDimensions) {
  for (const auto& omega : {omega_g2(), omega0(), omega1()}) {
    const auto k = isotropy_kernel(omega, Fp);
    EXPECT_EQ(k.rank + k.basis.size(), 21u);
  }
  EXPECT_EQ(isotropy_kernel(omega_g2(), Fp).basis.size(), 14u);
  EXPECT_EQ(isotropy_kernel(omega0(), Fp).basis.size(), 14u);
  EXPECT_EQ(isotropy_kernel(Form(4), Fp).basis.size(), 21u);
  const auto ring = PolyRing::make(plucker_names(), Fp);
  EXPECT_EQ(isotropy_linear_system(omega0(), ring).size(), 7u);
}

TEST(Exterior, ZeroFormGivesPluckerIdealOfGrassmannian) {
  const Ideal i = isotropic_variety_ideal(Form(4), Fp);
  EXPECT_EQ(i.ring()->nvars(), 21u);
  const auto h = hilbert_data(i);
  EXPECT_EQ(h.dimension, 10);  // G(2,7)
  EXPECT_EQ(*h.degree, 42);
}

TEST(Exterior, ThreespaceConicOfSimpleFormIsEverything) {
  const Ideal i = threespace_conic(basis_form({1, 2, 3, 4}), Fp);
  EXPECT_TRUE(i.is_zero());
}

TEST(Exterior, BivectorLemmaBothModes) {
  for (auto mode : {BivectorMode::chain, BivectorMode::concurrent}) {
    const auto rep = bivector_square_check(mode);
    EXPECT_EQ(rep.solutions, 16u);
    EXPECT_EQ(rep.single_coordinate_solutions, 16u);
    EXPECT_TRUE(rep.scan_ok);
    EXPECT_TRUE(rep.symbolic_ok);
  }
  const Form w = basis_form({1, 2}) + basis_form({3, 4});
  EXPECT_EQ(wedge(w, w), basis_form({1, 2, 3, 4}, 2));
}

TEST(Exterior, FormFileRoundTrip) {
  std::stringstream ss;
  write_form(ss, omega_t(mpq_class(3, 2)));
  EXPECT_EQ(read_form(ss), omega_t(mpq_class(3, 2)));
  std::stringstream bad("2: 2 1 : 1\n");
  EXPECT_THROW(read_form(bad), ParseError);
}
