#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2flat/polyring.hpp"

namespace g2flat {

/// Raised when a computation exceeds its time budget. Callers treat it as a
/// distinct outcome, never as a negative answer.
class Timeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
  /// Zero generators are dropped; all generators must live in `ring`.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const;

  Ideal operator+(const Ideal& other) const;
  Ideal with_generators(std::span<const Polynomial> extra) const;
  /// Same generators, reinterpreted in a ring with the same variables.
  Ideal in_ring(const RingPtr& ring) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

struct GroebnerOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Pairs above this (sugar) degree are skipped; the result is then truncated.
  std::optional<std::uint32_t> degree_bound;

  static GroebnerOptions with_timeout(std::chrono::duration<double> budget);
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis, sorted by increasing leading monomial, each
/// element monic.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis, bool complete, GroebnerStats stats)
      : ring_(std::move(ring)), basis_(std::move(basis)), complete_(complete), stats_(stats) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  bool is_unit() const;
  /// False when a degree bound truncated the computation.
  bool complete() const { return complete_; }
  const GroebnerStats& stats() const { return stats_; }
  std::vector<Monomial> leading_monomials() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
  bool complete_;
  GroebnerStats stats_;
};

/// Buchberger with Gebauer-Moeller criteria and sugar selection, in the
/// ideal's ring order. Throws Timeout when the deadline passes.
GroebnerBasis groebner_basis(const Ideal& ideal, const GroebnerOptions& options = {});
/// Same, after switching the ring to `order`.
GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder order,
                             const GroebnerOptions& options = {});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// S-pair certificate: every S-polynomial of the basis reduces to zero.
bool all_spairs_reduce_to_zero(const GroebnerBasis& basis);

/// I intersected with the subring on the variables not in `drop`. The result
/// lives in a grevlex ring on the kept variables, in their original order.
Ideal elimination_ideal(const Ideal& ideal, std::span<const std::string> drop,
                        const GroebnerOptions& options = {});

/// Ideal of relations among homogeneous `images` of one common degree, as an
/// ideal in `target` (one variable per image). Computed from the graph ideal
/// {T_i - images_i} by eliminating the source variables.
Ideal kernel_of_map(const RingPtr& target, std::span<const Polynomial> images,
                    const GroebnerOptions& options = {});

enum class IdealRelation { equal, first_strictly_inside, second_strictly_inside, incomparable };
std::string to_string(IdealRelation r);

IdealRelation ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});
/// True iff every generator of `a` lies in `b`.
bool ideal_contained(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

/// f in sqrt(I) via 1 in I + (1 - w f) in a ring with one extra variable.
bool radical_membership(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& options = {});

/// I : l^infinity for a nonzero linear form l, through a coordinate change
/// that makes l the last variable of a grevlex order.
Ideal saturation(const Ideal& ideal, const Polynomial& linear_form, const GroebnerOptions& options = {});

/// Ideal file with a `# groebner: reduced, order=<order>` header (or
/// `truncated` for an incomplete basis).
void write_groebner_basis(std::ostream& out, const GroebnerBasis& basis);

/// Interreduced generators of the ideal (the reduced basis as an Ideal).
Ideal reduced_ideal(const Ideal& ideal, const GroebnerOptions& options = {});

}  // namespace g2flat
