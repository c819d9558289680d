#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "g2flat/varieties.hpp"

using namespace g2flat;

namespace {

const auto QQ = CoefficientField::rationals();
const auto Fp = CoefficientField::prime(32003);

Ideal ghat_ideal(const CoefficientField& field) {
  return pfaffian_ideal(build_presentation(PresentationKind::Ghat, field));
}

// Determinant of a rational matrix by fraction-free elimination.
mpq_class det(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && sgn(a[r][c]) == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(a[r], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const mpq_class f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

SkewPresentation numeric_skew(const std::vector<std::vector<mpq_class>>& a) {
  const RingPtr ring = PolyRing::make({"x"}, QQ);
  SkewPresentation m;
  m.ring = ring;
  for (const auto& row : a) {
    std::vector<Polynomial> r;
    for (const auto& v : row) r.push_back(Polynomial::constant(ring, v));
    m.m.push_back(std::move(r));
  }
  return m;
}

std::vector<std::vector<mpq_class>> random_skew(std::size_t n, std::mt19937& rng) {
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      a[i][j] = static_cast<long>(rng() % 11) - 5;
      a[j][i] = -a[i][j];
    }
  }
  return a;
}

mpq_class value(const Polynomial& p) { return p.is_zero() ? mpq_class(0) : p.terms()[0].coeff; }

}  // namespace

TEST(Varieties, PfaffianOfGenericBlock) {
  const RingPtr ring = PolyRing::make({"a", "b", "c", "d", "e", "f"}, QQ);
  auto v = [&](const char* n) { return Polynomial::variable(ring, n); };
  const Polynomial z(ring);
  SkewPresentation m;
  m.ring = ring;
  m.m = {{z, v("a"), v("b"), v("c")}, {-v("a"), z, v("d"), v("e")}, {-v("b"), -v("d"), z, v("f")},
         {-v("c"), -v("e"), -v("f"), z}};
  const auto pfs = pfaffians4(m);
  ASSERT_EQ(pfs.size(), 1u);
  EXPECT_EQ(pfs[0], parse_polynomial("a*f - b*e + c*d", ring));
}

TEST(Varieties, ZeroMatrixGivesZeroIdeal) {
  const auto m = numeric_skew(std::vector<std::vector<mpq_class>>(7, std::vector<mpq_class>(7, 0)));
  EXPECT_EQ(pfaffians4(m).size(), 35u);
  EXPECT_TRUE(pfaffian_ideal(m).is_zero());
}

TEST(Varieties, PfaffianSquaresToDeterminant) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a4 = random_skew(4, rng);
    const mpq_class pf4 = value(pfaffian4(numeric_skew(a4), 0, 1, 2, 3));
    EXPECT_EQ(pf4 * pf4, det(a4));

    // 6x6 by expansion along the first row into 4x4 Pfaffians
    const auto a6 = random_skew(6, rng);
    const auto m6 = numeric_skew(a6);
    mpq_class pf6 = 0;
    for (std::size_t j = 1; j < 6; ++j) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 1; k < 6; ++k) {
        if (k != j) rest.push_back(k);
      }
      const mpq_class minor = value(pfaffian4(m6, rest[0], rest[1], rest[2], rest[3]));
      pf6 += (j % 2 == 1 ? 1 : -1) * a6[0][j] * minor;
    }
    EXPECT_EQ(pf6 * pf6, det(a6));
  }
}

TEST(Varieties, PfaffianIdealInvariantUnderPermutation) {
  const auto m = build_presentation(PresentationKind::Ghat, Fp);
  std::mt19937 rng(12);
  std::vector<std::size_t> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    SkewPresentation pm = m;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) pm.m[i][j] = m.m[perm[i]][perm[j]];
    EXPECT_EQ(ideal_equal(pfaffian_ideal(pm), pfaffian_ideal(m)), IdealRelation::equal);
  }
}

TEST(Varieties, PresentationsLieInIsotropicSpan) {
  const std::vector<std::pair<PresentationKind, mpq_class>> cases = {
      {PresentationKind::G2, 0},       {PresentationKind::Ghat, 0},          {PresentationKind::family_t, 0},
      {PresentationKind::family_t, 1}, {PresentationKind::family_t, 7},      {PresentationKind::family_lambda, 1},
      {PresentationKind::family_lambda, 2}, {PresentationKind::family_lambda, mpq_class(1, 3)}};
  for (const auto& [kind, par] : cases) {
    const auto m = build_presentation(kind, QQ, par);
    for (const auto& d : isotropy_defect(m, form_for(kind, par))) EXPECT_TRUE(d.is_zero()) << m.name;
  }
  // the Ghat matrix is not isotropic for the G2 form
  const auto ghat = build_presentation(PresentationKind::Ghat, QQ);
  const auto d = isotropy_defect(ghat, omega_g2());
  EXPECT_TRUE(std::any_of(d.begin(), d.end(), [](const Polynomial& p) { return !p.is_zero(); }));
}

TEST(Varieties, CrossValidation) {
  for (auto kind : {PresentationKind::G2, PresentationKind::Ghat}) {
    const auto cv = cross_validate(kind, Fp);
    EXPECT_TRUE(cv.ok) << cv.name;
    EXPECT_EQ(cv.pfaffian.dimension, 5);
    EXPECT_EQ(*cv.pfaffian.degree, 18);
  }
  EXPECT_TRUE(cross_validate(PresentationKind::family_lambda, Fp, 5).ok);
  EXPECT_FALSE(cross_validate(PresentationKind::family_lambda, Fp, 0).ok);
}

TEST(Varieties, PrintedAsymmetriesAreLogged) {
  EXPECT_TRUE(build_presentation(PresentationKind::G2, QQ).asymmetries.empty());
  const auto ghat = build_presentation(PresentationKind::Ghat, QQ);
  ASSERT_EQ(ghat.asymmetries.size(), 1u);
  EXPECT_NE(ghat.asymmetries[0].find("(6,3)"), std::string::npos);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_TRUE(ghat.at(i, i).is_zero());
    for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(ghat.at(i, j), -ghat.at(j, i));
  }
}

TEST(Varieties, FamilyTAtZeroIsGhat) {
  const auto t0 = pfaffian_ideal(build_presentation(PresentationKind::family_t, Fp, 0));
  EXPECT_EQ(ideal_equal(t0, ghat_ideal(Fp)), IdealRelation::equal);
}

TEST(Varieties, FamilyTIsFlat) {
  const auto ref = hilbert_data(ghat_ideal(Fp));
  for (int t : {0, 1, 2, 7}) {
    EXPECT_EQ(hilbert_data(pfaffian_ideal(build_presentation(PresentationKind::family_t, Fp, t))), ref) << t;
  }
}

TEST(Varieties, ParametrizationKillsPfaffians) {
  const auto ghat = build_presentation(PresentationKind::Ghat, QQ);
  const auto ok = verify_parametrization(ghat, ghat_coordinates(QQ));
  EXPECT_TRUE(ok.identically_zero);
  EXPECT_FALSE(ok.vacuous);

  const auto literal = verify_parametrization(ghat, ghat_coordinates(QQ, true));
  EXPECT_FALSE(literal.identically_zero);
  EXPECT_EQ(literal.nonzero_pfaffians, 9u);
  EXPECT_TRUE(literal.counterexample.has_value());

  auto corrupted = ghat_coordinates(QQ);
  corrupted[2] = parse_polynomial("y*t + x^2", corrupted[2].ring());
  const auto bad = verify_parametrization(ghat, corrupted);
  EXPECT_FALSE(bad.identically_zero);
  ASSERT_TRUE(bad.counterexample.has_value());

  const std::vector<Polynomial> zeros(14, Polynomial(p5_ring(QQ)));
  const auto vac = verify_parametrization(ghat, zeros);
  EXPECT_TRUE(vac.identically_zero);
  EXPECT_TRUE(vac.vacuous);
}

TEST(Varieties, LambdaParametrization) {
  for (int l : {1, 2, 3}) {
    EXPECT_TRUE(verify_parametrization(build_presentation(PresentationKind::family_lambda, QQ, l),
                                       lambda_coordinates(l, QQ))
                    .identically_zero);
  }
  // the lambda coordinates span the quadrics through the lambda curve
  const auto c = lambda_curve_ideal(2, QQ);
  for (const auto& q : lambda_coordinates(2, QQ)) {
    EXPECT_TRUE(ideal_contained(Ideal(q.ring(), {q}), c));
  }
}

TEST(Varieties, SampledPointsSatisfyPfaffiansExactly) {
  const auto gens = pfaffians4(build_presentation(PresentationKind::Ghat, QQ));
  const auto coords = ghat_coordinates(QQ);
  const RationalOps ops;
  std::mt19937 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<mpq_class> src(6);
    for (auto& x : src) {
      x = mpq_class(static_cast<long>(rng() % 41) - 20, 1 + rng() % 7);
      x.canonicalize();
    }
    std::vector<mpq_class> pt;
    for (const auto& c : coords) pt.push_back(evaluate(c, std::span<const mpq_class>(src), ops));
    for (const auto& g : gens) ASSERT_EQ(evaluate(g, std::span<const mpq_class>(pt), ops), 0);
  }
}

TEST(Varieties, CurveIdeals) {
  for (auto v : {CurveVariant::C, CurveVariant::C0, CurveVariant::C1, CurveVariant::C2}) {
    const auto h = hilbert_data(curve_ideal(v, QQ));
    EXPECT_EQ(h.dimension, 1) << to_string(v);
    EXPECT_EQ(*h.degree, 3) << to_string(v);
    EXPECT_EQ(h.hilbert_polynomial_at(10), 31) << to_string(v);
  }
}

TEST(Varieties, CurvePointMembership) {
  const RationalOps ops;
  auto on = [&](CurveVariant v, const std::vector<int>& ints) {
    std::vector<mpq_class> pt;
    for (int x : ints) pt.emplace_back(x);
    const Ideal curve = curve_ideal(v, QQ);
    for (const auto& g : curve.generators()) {
      if (evaluate(g, std::span<const mpq_class>(pt), ops) != 0) return false;
    }
    return true;
  };
  // C1 is the chain of lines xt, xy, yz
  EXPECT_TRUE(on(CurveVariant::C1, {1, 0, 0, 0, 0, 0}));
  EXPECT_TRUE(on(CurveVariant::C1, {0, 1, 0, 0, 0, 0}));
  EXPECT_TRUE(on(CurveVariant::C1, {1, 1, 0, 0, 0, 0}));   // x-y line
  EXPECT_TRUE(on(CurveVariant::C1, {1, 0, 0, 1, 0, 0}));   // x-t line
  EXPECT_TRUE(on(CurveVariant::C1, {0, 1, 1, 0, 0, 0}));   // y-z line
  EXPECT_FALSE(on(CurveVariant::C1, {0, 0, 1, 1, 0, 0}));  // z and t lines are disjoint
  for (const std::vector<int>& pt : {std::vector<int>{1, 0, 0, 5, 0, 0}, std::vector<int>{0, 1, 0, 5, 0, 0},
                                     std::vector<int>{0, 0, 1, 5, 0, 0}}) {
    EXPECT_TRUE(on(CurveVariant::C2, pt));
  }
  EXPECT_FALSE(on(CurveVariant::C2, {1, 1, 0, 0, 0, 0}));
}

TEST(Varieties, QuadricsThroughCurves) {
  const auto qc = quadrics_through(curve_ideal(CurveVariant::C, QQ));
  ASSERT_EQ(qc.size(), 14u);
  const auto coords = ghat_coordinates(QQ);
  const Ideal span_q(qc[0].ring(), qc);
  const Ideal span_p(coords[0].ring(), coords);
  EXPECT_EQ(ideal_equal(span_q, span_p), IdealRelation::equal);

  for (auto v : {CurveVariant::C0, CurveVariant::C1, CurveVariant::C2}) {
    EXPECT_EQ(quadrics_through(curve_ideal(v, QQ)).size(), 14u);
  }
  for (const auto& q : quadrics_through(curve_ideal(CurveVariant::C1, QQ))) EXPECT_EQ(q.size(), 1u);
  const RingPtr p5 = p5_ring(QQ);
  EXPECT_EQ(quadrics_through(Ideal(p5, {Polynomial::constant(p5, 1)})).size(), 21u);
  EXPECT_TRUE(quadrics_through(Ideal(p5)).empty());
}

TEST(Varieties, ImageIsGhat) {
  const auto ker = kernel_of_map(letters_ring(QQ), ghat_coordinates(QQ));
  EXPECT_EQ(ideal_equal(ker, ghat_ideal(QQ)), IdealRelation::equal);
}

TEST(Varieties, CurveImagesAreFlat) {
  const auto ref = hilbert_data(ghat_ideal(Fp));
  for (auto v : {CurveVariant::C, CurveVariant::C0, CurveVariant::C1, CurveVariant::C2}) {
    const auto ker = kernel_of_map(letters_ring(Fp), quadrics_through(curve_ideal(v, Fp)));
    EXPECT_TRUE(hilbert_data(ker).same_polynomial(ref)) << to_string(v);
  }
}

TEST(Varieties, Projection) {
  const auto ghat = ghat_ideal(Fp);
  const auto minors = projection_minor_ideal(Fp);
  EXPECT_EQ(minors.ring()->nvars(), 11u);
  EXPECT_EQ(ideal_equal(projection_image(ghat), minors), IdealRelation::equal);
  const auto g2 = pfaffian_ideal(build_presentation(PresentationKind::G2, Fp));
  EXPECT_NE(ideal_equal(projection_image(g2), minors), IdealRelation::equal);
  const auto h = hilbert_data(minors);
  EXPECT_EQ(h.dimension, 5);  // hyperplane section of P1 x P5
  EXPECT_EQ(*h.degree, 6);
}

TEST(Varieties, DivisorAndFanoFourfolds) {
  const auto ghat = ghat_ideal(Fp);
  const auto d = hilbert_data(divisor_D(ghat));
  EXPECT_EQ(d.dimension, 4);
  EXPECT_EQ(*d.degree, 8);

  const auto f = fano_F(ghat);
  const auto fp = fano_Fprime(ghat);
  for (const auto* x : {&f, &fp}) {
    const auto h = hilbert_data(*x);
    EXPECT_EQ(h.dimension, 4);
    EXPECT_EQ(*h.degree, 5);
  }
  EXPECT_EQ(ideal_equal(f, pfaffian_ideal(fano_F_presentation(Fp))), IdealRelation::equal);
  EXPECT_EQ(ideal_equal(fp, pfaffian_ideal(fano_Fprime_presentation(Fp))), IdealRelation::equal);

  const auto sum = ghat + singular_plane_ideal(ghat.ring());
  const auto hs = hilbert_data(sum);
  EXPECT_EQ(hs.dimension, 2);
  EXPECT_EQ(*hs.degree, 1);
}

TEST(Varieties, SingularPlane) {
  const auto ghat = ghat_ideal(Fp);
  const auto coords = ghat_coordinates(Fp);
  std::mt19937_64 rng(14);
  std::vector<std::vector<std::uint32_t>> off, on;
  for (int i = 0; i < 30; ++i) off.push_back(sample_parametrized_point(coords, 32003, rng));
  std::uniform_int_distribution<std::uint32_t> dist(1, 32002);
  for (int i = 0; i < 5; ++i) {
    std::vector<std::uint32_t> pt(14, 0);
    pt[2] = dist(rng);
    pt[5] = dist(rng);
    pt[10] = dist(rng);
    on.push_back(pt);
  }
  const auto s_off = smoothness_probe(ghat, 8, off);
  EXPECT_EQ(s_off.smooth, 30u);
  const auto s_on = smoothness_probe(ghat, 8, on);
  EXPECT_EQ(s_on.singular, 5u);
  for (auto r : s_on.ranks) EXPECT_LE(r, 7u);

  std::vector<std::uint32_t> bad(14, 0);
  bad[0] = 1;
  bad[1] = 1;
  EXPECT_THROW(smoothness_probe(ghat, 8, {bad}), std::invalid_argument);
}

TEST(Varieties, G2IsSmoothAtRandomIsotropicPlanes) {
  const auto m = build_presentation(PresentationKind::G2, Fp);
  const auto g2 = pfaffian_ideal(m);
  std::mt19937_64 rng(15);
  std::vector<std::vector<std::uint32_t>> pts;
  for (int i = 0; i < 3; ++i) {
    pts.push_back(letters_from_plucker(m, sample_isotropic_bivector(omega_g2(), 32003, rng), 32003));
  }
  EXPECT_EQ(smoothness_probe(g2, 8, pts).smooth, 3u);
}

TEST(Varieties, TwoNodesOnTheSingularPlane) {
  const auto ghat = ghat_ideal(Fp);
  const auto nr = node_count(ghat, {{2, 10, 5}}, ghat_coordinates(Fp), 101, 3);
  EXPECT_TRUE(nr.section_dimension_ok);
  EXPECT_EQ(*nr.section_degree, 36);
  EXPECT_EQ(nr.count, 2u);
  EXPECT_EQ(nr.points_found, 2u);
  EXPECT_EQ(nr.expected_rank, 10u);
  for (auto r : nr.ranks) EXPECT_LT(r, 10u);
  EXPECT_EQ(nr.probe_points, 3u);
  EXPECT_EQ(nr.probe_smooth, 3u);
}
