#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "g2flat/groebner.hpp"

namespace g2flat {

using IVec = std::vector<long>;

/// Facet inequality <normal, x> + offset >= 0 with a primitive integer normal.
struct Facet {
  IVec normal;
  long offset = 0;
  bool operator==(const Facet&) const = default;
};

/// Full-dimensional lattice polytope given by its vertices. Facets and the
/// face lattice are computed exactly at construction; vertex sets of faces
/// are bit masks over `vertices()` (at most 64 vertices).
class LatticePolytope {
 public:
  /// Convex hull of the rows. Throws std::invalid_argument when the rows
  /// have inconsistent length or do not span an affine space of full rank.
  static LatticePolytope from_points(const std::vector<IVec>& rows);

  std::size_t rank() const { return rank_; }
  const std::vector<IVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Vertex mask of each facet, parallel to facets().
  const std::vector<std::uint64_t>& facet_masks() const { return facet_masks_; }
  /// All nonempty faces (vertex masks), the polytope itself included.
  const std::vector<std::uint64_t>& faces() const { return faces_; }
  /// Affine dimension of a face given by its vertex mask.
  int face_dimension(std::uint64_t mask) const;
  std::vector<std::uint64_t> faces_of_dimension(int dim) const;
  /// Number of faces of each dimension 0..rank-1.
  std::vector<std::size_t> f_vector() const;

  bool contains(const IVec& x, long dilation = 1) const;
  bool strictly_contains(const IVec& x, long dilation = 1) const;
  /// Lattice points of dilation * P in a deterministic order.
  std::vector<IVec> lattice_points(long dilation = 1) const;
  /// Lattice points of P on the face with the given vertex mask.
  std::vector<IVec> face_lattice_points(std::uint64_t mask) const;

 private:
  std::size_t rank_ = 0;
  std::vector<IVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::uint64_t> facet_masks_;
  std::vector<std::uint64_t> faces_;
  std::vector<int> face_dims_;
};

/// Polar dual {y : <x,y> >= -1 for x in P}.
struct DualPolytope {
  std::vector<std::vector<mpq_class>> vertices;  // one per facet of P
  bool reflexive = false;
  /// Present when all dual vertices are integral.
  std::optional<LatticePolytope> polytope;
  /// The dual of the dual has the vertices of P (checked when integral).
  bool double_dual_ok = false;
};

/// Throws std::invalid_argument unless the origin is an interior point.
DualPolytope dual_polytope(const LatticePolytope& p);

/// Normalized volume rank! * vol from a pulling triangulation that pulls
/// vertices in the given order (ascending index when empty).
mpz_class normalized_volume(const LatticePolytope& p, const std::vector<std::size_t>& order = {});

struct EhrhartInvariants {
  std::size_t lattice_points = 0;
  mpz_class normalized_volume;
  /// Volumes from two opposite pulling orders agree.
  bool triangulations_agree = false;
};
EhrhartInvariants ehrhart_invariants(const LatticePolytope& p);

struct FaceReport {
  std::vector<std::size_t> f_vector;
  std::size_t two_faces = 0;
  std::size_t unimodular_triangles = 0;
  std::size_t unit_parallelograms = 0;
  std::size_t other = 0;
  std::vector<std::uint64_t> parallelogram_masks;
};

/// Classifies the 2-faces of P by lattice type.
FaceReport two_face_classification(const LatticePolytope& p);

/// A reflexive polytope D written as r Q + c with Q a lattice polytope and r
/// as large as possible; r is the Fano index of the toric variety and Q the
/// polytope of the primitive polarization.
struct IndexDecomposition {
  long index = 1;
  LatticePolytope base;  // translated so that its first vertex is the origin
};
IndexDecomposition index_decomposition(const LatticePolytope& d);

/// Exponent vectors of monomials of one degree, written in the affine
/// lattice of their degree slice (last exponent dropped).
struct ExponentPolytope {
  LatticePolytope polytope;
  std::vector<IVec> points;  // one per input monomial, same coordinates as the polytope
  /// Smallest r <= 6 such that r P has a single interior lattice point at
  /// lattice distance one from every facet; 0 when none exists.
  long index = 0;
  IVec interior;  // interior lattice point of index * P
  /// index * P - interior, reflexive.
  std::optional<LatticePolytope> anticanonical;
};
/// Throws std::invalid_argument for non-monomials or mixed degrees.
ExponentPolytope exponent_polytope(std::span<const Polynomial> monomials);

/// For every unit-parallelogram 2-face of the dual of the anticanonical
/// polytope, the indices of the monomials on the dual 2-face. These span the
/// coordinate planes of the codimension-3 strata through the conifold faces.
std::vector<std::vector<std::size_t>> conifold_planes(const ExponentPolytope& e);

enum class EquivalenceStatus { found, not_equivalent, budget_exhausted };
std::string to_string(EquivalenceStatus s);

struct LatticeEquivalence {
  EquivalenceStatus status = EquivalenceStatus::not_equivalent;
  std::vector<IVec> matrix;  // rows of U, with x -> U x + translation
  IVec translation;
  std::size_t nodes = 0;
};

/// Searches for U in GL(n,Z) and a translation mapping the vertices of P onto
/// those of Q, by backtracking over images of an affine basis.
LatticeEquivalence lattice_equivalent(const LatticePolytope& p, const LatticePolytope& q,
                                      std::size_t budget = 1000000);

/// Applies x -> U x + translation to each vertex.
LatticePolytope transform(const LatticePolytope& p, const std::vector<IVec>& matrix, const IVec& translation);

/// Every element of the reduced Groebner basis has at most two terms.
bool is_binomial(const Ideal& ideal, const GroebnerOptions& options = {});

/// The printed 9-vertex (which = 1) and 10-vertex (which = 2) polytopes, in
/// the row order of data/polytope_T1.txt and data/polytope_T2.txt.
const std::vector<IVec>& printed_polytope(int which);

/// One integer vector per line, whitespace separated; '#' starts a comment.
std::vector<IVec> read_polytope_file(std::istream& in);
std::vector<IVec> read_polytope_file(const std::string& path);

}  // namespace g2flat
