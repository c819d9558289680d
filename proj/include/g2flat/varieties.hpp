#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "g2flat/exterior.hpp"
#include "g2flat/groebner.hpp"
#include "g2flat/hilbert.hpp"
#include "g2flat/linalg.hpp"

namespace g2flat {

/// The fourteen coordinates a..n of the linear span of G2 in P^13.
const std::vector<std::string>& letter_names();
RingPtr letters_ring(const CoefficientField& field, MonomialOrder order = MonomialOrder::grevlex());
/// The coordinates x,y,z,t,u,v of P^5.
RingPtr p5_ring(const CoefficientField& field);

/// Skew-symmetric matrix of linear forms. Built from a printed matrix whose
/// upper triangle is taken as authoritative; lower-triangle entries that do
/// not match are recorded in `asymmetries`.
struct SkewPresentation {
  std::string name;
  RingPtr ring;
  std::vector<std::vector<Polynomial>> m;
  std::vector<std::string> asymmetries;

  std::size_t size() const { return m.size(); }
  const Polynomial& at(std::size_t i, std::size_t j) const { return m[i][j]; }
  /// Parses the printed rows in `ring` extended by `param` (if nonempty),
  /// then specializes the parameter to `value`.
  static SkewPresentation from_printed(std::string name, const RingPtr& ring,
                                       const std::vector<std::vector<std::string>>& rows,
                                       const std::string& param = {}, const mpq_class& value = 0);
  SkewPresentation substitute(std::span<const Polynomial> images) const;
};

enum class PresentationKind { G2, Ghat, family_t, family_lambda };

SkewPresentation build_presentation(PresentationKind kind, const CoefficientField& field,
                                    const mpq_class& parameter = 0);
/// The printed 5x5 matrix of F in the variables (b,c,d,f,j,l,m,k).
SkewPresentation fano_F_presentation(const CoefficientField& field);
/// Rows 1,3,5,6,7 of the Ghat matrix on the space (e,h,i,a,n,c,k,f).
SkewPresentation fano_Fprime_presentation(const CoefficientField& field);

/// m_ij m_kl - m_ik m_jl + m_il m_jk for 0-based indices i<j<k<l.
Polynomial pfaffian4(const SkewPresentation& m, std::size_t i, std::size_t j, std::size_t k, std::size_t l);
/// All 4x4 principal Pfaffians in lexicographic index order, zeros included.
std::vector<Polynomial> pfaffians4(const SkewPresentation& m);
/// The ideal of the nonzero 4x4 Pfaffians.
Ideal pfaffian_ideal(const SkewPresentation& m);

/// Signs s_i with p_ij = s_i s_j M_ij identifying matrix entries with
/// Plucker coordinates of the isotropic bivector.
const std::vector<int>& plucker_sign_twist();
/// The 7 linear forms of p ^ omega after substituting p_ij = s_i s_j M_ij;
/// all zero iff the presentation lies in the isotropic linear span.
std::vector<Polynomial> isotropy_defect(const SkewPresentation& m, const Form& omega);
Form form_for(PresentationKind kind, const mpq_class& parameter = 0);

/// Checks a presentation against the isotropic variety of its form: the
/// matrix must lie in the isotropic span and the Hilbert data must agree.
struct CrossValidation {
  std::string name;
  bool ok = false;
  std::vector<std::string> defect;  // nonzero components of p ^ omega
  std::vector<std::string> asymmetries;
  HilbertData pfaffian;
  HilbertData intrinsic;
};
CrossValidation cross_validate(PresentationKind kind, const CoefficientField& field, const mpq_class& parameter = 0,
                               const GroebnerOptions& options = {});

enum class CurveVariant { C, C0, C1, C2 };
std::string to_string(CurveVariant v);
Ideal curve_ideal(CurveVariant v, const CoefficientField& field);
/// u = v = 0 and the minors of ((lambda x, y, z), (t, x, lambda y)).
Ideal lambda_curve_ideal(const mpq_class& lambda, const CoefficientField& field);

/// Basis of the quadrics containing the scheme of I (degree-2 piece).
std::vector<Polynomial> quadrics_through(const Ideal& curve);

/// The map P^5 -> P^13 in the coordinates a..n. `literal_sign` keeps the
/// printed sign of n (n = ut); otherwise n = -ut, matching the printed
/// substituted matrix.
std::vector<Polynomial> ghat_coordinates(const CoefficientField& field, bool literal_sign = false);
/// Coordinates for the lambda curve: signed minors scaled by lambda.
std::vector<Polynomial> lambda_coordinates(const mpq_class& lambda, const CoefficientField& field);

struct ParametrizationCheck {
  bool identically_zero = false;
  bool vacuous = false;
  std::size_t nonzero_pfaffians = 0;
  std::optional<std::string> counterexample;
};
ParametrizationCheck verify_parametrization(const SkewPresentation& m, std::span<const Polynomial> coords);

/// 2x2 minors of ((e,g,h,i,a,-n),(-d,j,-g,l,b,m)) in the letters ring.
std::vector<Polynomial> projection_minors(const RingPtr& letters);
/// The same minors in the ring of the 11 coordinates other than c,k,f.
Ideal projection_minor_ideal(const CoefficientField& field);
Ideal projection_image(const Ideal& ghat, const GroebnerOptions& options = {});

Ideal linear_section(const Ideal& ideal, std::span<const Polynomial> forms);
Ideal divisor_D(const Ideal& ghat);
/// Ghat + (a,e,g,h,i,n) restricted to (b,c,d,f,j,l,m,k).
Ideal fano_F(const Ideal& ghat);
/// Ghat + (b,d,g,j,l,m) restricted to (e,h,i,a,n,c,k,f).
Ideal fano_Fprime(const Ideal& ghat);
/// Linear ideal of the plane (c,k,f): all other letters.
Ideal singular_plane_ideal(const RingPtr& letters);

/// Rank of the Jacobian of `gens` at `point` over Ops.
template <class Ops>
std::size_t jacobian_rank(std::span<const Polynomial> gens, std::span<const typename Ops::Elem> point,
                          const Ops& ops) {
  if (gens.empty()) return 0;
  const std::size_t n = gens[0].ring()->nvars();
  linalg::Matrix<Ops> jac(gens.size(), n, ops);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) jac.at(r, c) = evaluate(gens[r].derivative(c), point, ops);
  }
  return linalg::rank(jac, ops);
}

/// A point of Ghat: a random point of P^5 over F_p pushed through coords.
std::vector<std::uint32_t> sample_parametrized_point(std::span<const Polynomial> coords, std::uint32_t p,
                                                     std::mt19937_64& rng);
/// A random isotropic bivector of omega over F_p, in Plucker coordinates
/// (plucker_blades order). Found by scanning random lines for vectors whose
/// isotropic partners span more than the vector itself.
std::vector<std::uint32_t> sample_isotropic_bivector(const Form& omega, std::uint32_t p, std::mt19937_64& rng);
/// Converts Plucker coordinates to matrix letters via the sign twist.
std::vector<std::uint32_t> letters_from_plucker(const SkewPresentation& m, std::span<const std::uint32_t> plucker,
                                                std::uint32_t p);

struct SmoothnessProbe {
  std::size_t points = 0;
  std::size_t smooth = 0;
  std::size_t singular = 0;
  std::vector<std::size_t> ranks;
};
/// Jacobian rank at each point; smooth iff rank equals expected_codim.
/// Throws std::invalid_argument if a point is not on the variety.
SmoothnessProbe smoothness_probe(const Ideal& ideal, std::size_t expected_codim,
                                 const std::vector<std::vector<std::uint32_t>>& points);

struct NodeReport {
  std::size_t count = 0;              // degree of the singular scheme on the planes
  std::size_t points_found = 0;       // points solved explicitly
  std::vector<std::size_t> ranks;     // Jacobian rank of the section at each point
  std::size_t expected_rank = 0;      // codimension of the section
  bool section_dimension_ok = false;  // I + H + Q has the expected dimension
  std::optional<mpz_class> section_degree;
  std::size_t resamples = 0;
  std::size_t probe_points = 0;       // random points of the section off the planes
  std::size_t probe_smooth = 0;
  std::string h_text, q_text;
};

/// Singular points of the section of I by a random hyperplane H and quadric Q
/// over F_p that lie on the given coordinate planes (each plane is the span
/// of three coordinates of I's ring). If `coords` (a map P^5 -> ring) is
/// given, random points of the section are probed for smoothness.
NodeReport node_count(const Ideal& ideal, const std::vector<std::vector<std::size_t>>& planes,
                      std::span<const Polynomial> coords, std::uint64_t seed, std::size_t probes = 10,
                      const GroebnerOptions& options = {});

/// Random linear (degree 1) or quadratic form over F_p.
Polynomial random_form(const RingPtr& ring, int degree, std::mt19937_64& rng);

}  // namespace g2flat
