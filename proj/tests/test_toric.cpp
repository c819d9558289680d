#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "g2flat/hilbert.hpp"
#include "g2flat/toric.hpp"
#include "g2flat/varieties.hpp"

using namespace g2flat;

namespace {

const auto Fp = CoefficientField::prime(32003);

LatticePolytope printed(int which) {
  return LatticePolytope::from_points(
      read_polytope_file(std::string(G2FLAT_DATA_DIR) + (which == 1 ? "/polytope_T1.txt" : "/polytope_T2.txt")));
}

LatticePolytope simplex(std::size_t d) {
  std::vector<IVec> pts = {IVec(d, 0)};
  for (std::size_t i = 0; i < d; ++i) {
    IVec e(d, 0);
    e[i] = 1;
    pts.push_back(e);
  }
  return LatticePolytope::from_points(pts);
}

// Random unimodular matrix as a product of elementary operations.
std::vector<IVec> random_unimodular(std::size_t d, std::mt19937& rng) {
  std::vector<IVec> u(d, IVec(d, 0));
  for (std::size_t i = 0; i < d; ++i) u[i][i] = 1;
  for (int step = 0; step < 12; ++step) {
    const std::size_t a = rng() % d, b = rng() % d;
    if (a == b) continue;
    const long k = static_cast<long>(rng() % 3) - 1;
    for (std::size_t c = 0; c < d; ++c) u[a][c] += k * u[b][c];
    if (rng() % 4 == 0) std::swap(u[a], u[b]);
  }
  return u;
}

// Leading coefficient of the Ehrhart polynomial times d!, from counts at
// k = 0..d by finite differences.
mpz_class volume_from_counts(const LatticePolytope& p) {
  const std::size_t d = p.rank();
  std::vector<mpz_class> vals;
  vals.emplace_back(1);
  for (std::size_t k = 1; k <= d; ++k) vals.emplace_back(static_cast<unsigned long>(p.lattice_points(static_cast<long>(k)).size()));
  for (std::size_t level = 0; level < d; ++level) {
    for (std::size_t i = vals.size() - 1; i > level; --i) vals[i] -= vals[i - 1];
  }
  return vals[d];
}

}  // namespace

TEST(Toric, StandardSimplex) {
  const auto s = simplex(5);
  EXPECT_EQ(s.vertices().size(), 6u);
  EXPECT_EQ(s.facets().size(), 6u);
  const auto e = ehrhart_invariants(s);
  EXPECT_EQ(e.lattice_points, 6u);
  EXPECT_EQ(e.normalized_volume, 1);
  EXPECT_EQ(two_face_classification(s).unit_parallelograms, 0u);
  EXPECT_EQ(two_face_classification(s).unimodular_triangles, 20u);
}

TEST(Toric, DegenerateInputs) {
  EXPECT_THROW(LatticePolytope::from_points({{0, 0}, {1, 1}, {2, 2}}), std::invalid_argument);
  EXPECT_THROW(LatticePolytope::from_points({{0, 0}, {1}}), std::invalid_argument);
  EXPECT_THROW(dual_polytope(simplex(3)), std::invalid_argument);  // origin is a vertex
}

TEST(Toric, SquareAndDiamond) {
  const auto sq = LatticePolytope::from_points({{-1, -1}, {-1, 1}, {1, -1}, {1, 1}, {0, 0}, {1, 0}});
  EXPECT_EQ(sq.vertices().size(), 4u);
  const auto d = dual_polytope(sq);
  EXPECT_TRUE(d.reflexive);
  EXPECT_TRUE(d.double_dual_ok);
  ASSERT_TRUE(d.polytope.has_value());
  auto v = d.polytope->vertices();
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v, (std::vector<IVec>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
  EXPECT_EQ(ehrhart_invariants(sq).lattice_points, 9u);
  EXPECT_EQ(ehrhart_invariants(sq).normalized_volume, 8);

  const auto tri = LatticePolytope::from_points({{-1, -1}, {2, -1}, {-1, 2}});
  EXPECT_FALSE(dual_polytope(LatticePolytope::from_points({{-2, -2}, {-2, 2}, {2, -2}, {2, 2}})).reflexive);
  EXPECT_TRUE(dual_polytope(tri).reflexive);
}

TEST(Toric, PrintedPolytopesAreReflexive) {
  for (int which : {1, 2}) {
    const auto p = printed(which);
    EXPECT_EQ(p.rank(), 5u);
    EXPECT_EQ(p.vertices().size(), which == 1 ? 9u : 10u);
    const auto d = dual_polytope(p);
    EXPECT_TRUE(d.reflexive);
    EXPECT_TRUE(d.double_dual_ok);
  }
}

TEST(Toric, ConifoldFaces) {
  const auto r1 = two_face_classification(printed(1));
  EXPECT_EQ(r1.unit_parallelograms, 3u);
  EXPECT_EQ(r1.other, 0u);
  EXPECT_EQ(r1.unimodular_triangles + r1.unit_parallelograms + r1.other, r1.two_faces);
  const auto r2 = two_face_classification(printed(2));
  EXPECT_EQ(r2.unit_parallelograms, 4u);
  EXPECT_EQ(r2.other, 0u);
}

TEST(Toric, DualsHaveFanoIndexThree) {
  for (int which : {1, 2}) {
    const auto d = *dual_polytope(printed(which)).polytope;
    const auto e = ehrhart_invariants(d);
    EXPECT_EQ(e.lattice_points, 273u);
    EXPECT_EQ(e.normalized_volume, 4374);
    const auto idx = index_decomposition(d);
    EXPECT_EQ(idx.index, 3);
    const auto eb = ehrhart_invariants(idx.base);
    EXPECT_EQ(eb.lattice_points, 14u);
    EXPECT_EQ(eb.normalized_volume, 18);
    EXPECT_TRUE(eb.triangulations_agree);
  }
}

TEST(Toric, VolumeMatchesEhrhartLeadingCoefficient) {
  const auto qs = quadrics_through(curve_ideal(CurveVariant::C1, Fp));
  const auto e = exponent_polytope(qs);
  EXPECT_EQ(volume_from_counts(e.polytope), normalized_volume(e.polytope));
  EXPECT_EQ(volume_from_counts(printed(1)), normalized_volume(printed(1)));
  EXPECT_EQ(volume_from_counts(simplex(4)), 1);
}

TEST(Toric, TriangulationOrdersAgree) {
  std::mt19937 rng(21);
  for (int which : {1, 2}) {
    const auto p = printed(which);
    std::vector<std::size_t> order(p.vertices().size());
    std::iota(order.begin(), order.end(), 0);
    const auto ref = normalized_volume(p);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      EXPECT_EQ(normalized_volume(p, order), ref);
    }
  }
}

TEST(Toric, VeroneseSegment) {
  const RingPtr ring = PolyRing::make({"x", "y"}, Fp);
  const std::vector<Polynomial> mons = {parse_polynomial("x^2", ring), parse_polynomial("x*y", ring),
                                        parse_polynomial("y^2", ring)};
  const auto e = exponent_polytope(mons);
  EXPECT_EQ(e.polytope.rank(), 1u);
  EXPECT_EQ(e.polytope.vertices().size(), 2u);
  EXPECT_EQ(normalized_volume(e.polytope), 2);
  EXPECT_EQ(e.index, 1);  // the conic is anticanonical on P^1
  EXPECT_THROW(exponent_polytope(std::vector<Polynomial>{parse_polynomial("x^2+y^2", ring)}), std::invalid_argument);
  EXPECT_THROW(exponent_polytope(std::vector<Polynomial>{mons[0], parse_polynomial("x", ring)}),
               std::invalid_argument);
}

TEST(Toric, ExponentPolytopesMatchPrinted) {
  const std::pair<CurveVariant, int> cases[] = {{CurveVariant::C1, 1}, {CurveVariant::C2, 2}};
  for (const auto& [v, which] : cases) {
    const auto qs = quadrics_through(curve_ideal(v, Fp));
    const auto e = exponent_polytope(qs);
    EXPECT_EQ(e.index, 3);
    ASSERT_TRUE(e.anticanonical.has_value());
    const auto base = index_decomposition(*dual_polytope(printed(which)).polytope).base;
    EXPECT_EQ(e.polytope.vertices().size(), base.vertices().size());
    EXPECT_EQ(ehrhart_invariants(e.polytope).lattice_points, 14u);
    EXPECT_EQ(normalized_volume(e.polytope), 18);
    EXPECT_EQ(two_face_classification(e.polytope).f_vector, two_face_classification(base).f_vector);
    EXPECT_EQ(lattice_equivalent(e.polytope, base).status, EquivalenceStatus::found);
    const auto n = *dual_polytope(*e.anticanonical).polytope;
    const auto eq = lattice_equivalent(n, printed(which));
    ASSERT_EQ(eq.status, EquivalenceStatus::found);
    EXPECT_EQ(transform(n, eq.matrix, eq.translation).vertices().size(), printed(which).vertices().size());
  }
}

TEST(Toric, ConifoldPlanesAreUnimodularTriangles) {
  const auto qs = quadrics_through(curve_ideal(CurveVariant::C1, Fp));
  const auto planes = conifold_planes(exponent_polytope(qs));
  ASSERT_EQ(planes.size(), 3u);
  for (const auto& pl : planes) EXPECT_EQ(pl.size(), 3u);
  EXPECT_EQ(conifold_planes(exponent_polytope(quadrics_through(curve_ideal(CurveVariant::C2, Fp)))).size(), 4u);
}

TEST(Toric, InvariantsUnderUnimodularTransforms) {
  std::mt19937 rng(22);
  for (int which : {1, 2}) {
    const auto p = printed(which);
    const auto ref_e = ehrhart_invariants(p);
    const auto ref_f = two_face_classification(p);
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = random_unimodular(5, rng);
      IVec t(5);
      for (auto& x : t) x = static_cast<long>(rng() % 7) - 3;
      const auto q = transform(p, u, t);
      const auto e = ehrhart_invariants(q);
      EXPECT_EQ(e.lattice_points, ref_e.lattice_points);
      EXPECT_EQ(e.normalized_volume, ref_e.normalized_volume);
      const auto f = two_face_classification(q);
      EXPECT_EQ(f.unit_parallelograms, ref_f.unit_parallelograms);
      EXPECT_EQ(f.unimodular_triangles, ref_f.unimodular_triangles);
      EXPECT_EQ(lattice_equivalent(p, q).status, EquivalenceStatus::found);
    }
  }
}

TEST(Toric, NonEquivalentPolytopes) {
  const auto sq = LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto tri = LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(lattice_equivalent(sq, tri).status, EquivalenceStatus::not_equivalent);
  const auto big = LatticePolytope::from_points({{0, 0}, {2, 0}, {0, 1}, {2, 1}});
  EXPECT_EQ(lattice_equivalent(sq, big).status, EquivalenceStatus::not_equivalent);
  EXPECT_EQ(lattice_equivalent(printed(1), printed(2)).status, EquivalenceStatus::not_equivalent);
  EXPECT_EQ(lattice_equivalent(printed(1), printed(1), 0).status, EquivalenceStatus::budget_exhausted);
}

TEST(Toric, Binomiality) {
  const auto qs = quadrics_through(curve_ideal(CurveVariant::C1, Fp));
  const auto t = kernel_of_map(letters_ring(Fp), qs);
  EXPECT_TRUE(is_binomial(t));
  EXPECT_FALSE(is_binomial(pfaffian_ideal(build_presentation(PresentationKind::Ghat, Fp))));
  const RingPtr ring = PolyRing::make({"x", "y", "z"}, Fp);
  EXPECT_TRUE(is_binomial(Ideal(ring, {parse_polynomial("x^2 - y*z", ring)})));
}

TEST(Toric, EhrhartMatchesHilbertFunction) {
  for (auto v : {CurveVariant::C1, CurveVariant::C2}) {
    const auto qs = quadrics_through(curve_ideal(v, Fp));
    const auto h = hilbert_data(kernel_of_map(letters_ring(Fp), qs));
    const auto e = exponent_polytope(qs);
    for (long d : {1, 2, 3}) {
      EXPECT_EQ(h.hilbert_function(d), static_cast<unsigned long>(e.polytope.lattice_points(d).size()));
    }
  }
}

TEST(Toric, GoldenFilesMatchBuiltinTables) {
  for (int which : {1, 2}) {
    const auto rows =
        read_polytope_file(std::string(G2FLAT_DATA_DIR) + (which == 1 ? "/polytope_T1.txt" : "/polytope_T2.txt"));
    EXPECT_EQ(rows, printed_polytope(which));
  }
  EXPECT_THROW(printed_polytope(3), std::invalid_argument);
}

TEST(Toric, PolytopeFile) {
  std::stringstream ok("# comment\n1 0\n\n0 1  # trailing\n-1 -1\n");
  EXPECT_EQ(read_polytope_file(ok), (std::vector<IVec>{{1, 0}, {0, 1}, {-1, -1}}));
  std::stringstream ragged("1 0\n0 1 2\n");
  EXPECT_THROW(read_polytope_file(ragged), ParseError);
  std::stringstream bad("1 x\n");
  EXPECT_THROW(read_polytope_file(bad), ParseError);
}
