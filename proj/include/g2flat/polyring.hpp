#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "g2flat/field.hpp"

namespace g2flat {

using Coeff = mpq_class;

enum class OrderKind { grevlex, lex, block };

/// Monomial order of a ring. `block` compares the first `front_block`
/// variables by (weighted) grevlex and breaks ties by grevlex on the rest;
/// it eliminates the front block.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::size_t front_block = 0;

  static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0}; }
  static MonomialOrder block(std::size_t front) { return {OrderKind::block, front}; }
  static MonomialOrder parse(const std::string& text);

  std::string to_string() const;
  bool operator==(const MonomialOrder&) const = default;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::int32_t> exps);

  std::size_t size() const { return exps_.size(); }
  std::int32_t operator[](std::size_t i) const { return exps_[i]; }
  std::int32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::int32_t>& exponents() const { return exps_; }

  long degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  /// Exponent-wise sum; throws std::overflow_error past the exponent limit.
  Monomial operator*(const Monomial& other) const;
  /// Requires this->divides(other) to be false only for callers that checked.
  Monomial quotient(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

  static constexpr std::int32_t kMaxExponent = 1 << 20;

 private:
  std::vector<std::int32_t> exps_;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  /// Variables must be distinct identifiers [a-zA-Z][a-zA-Z0-9_]*. Weights
  /// default to 1; they only change the degree used by grevlex blocks.
  static RingPtr make(std::vector<std::string> variables, CoefficientField field,
                      MonomialOrder order = MonomialOrder::grevlex(),
                      std::vector<int> weights = {});

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable(std::size_t i) const { return vars_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;
  const CoefficientField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_grading() const;

  long weighted_degree(const Monomial& m) const;
  /// Negative, zero or positive as a <, =, > b in this ring's order.
  int compare(const Monomial& a, const Monomial& b) const;

  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_field(CoefficientField field) const;

  /// Same variables, field, order and weights.
  bool same_as(const PolyRing& other) const;
  std::string describe() const;

 private:
  PolyRing(std::vector<std::string> vars, CoefficientField field, MonomialOrder order,
           std::vector<int> weights);

  std::vector<std::string> vars_;
  CoefficientField field_;
  MonomialOrder order_;
  std::vector<int> weights_;
};

struct Term {
  Coeff coeff;
  Monomial mono;
};

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse polynomial; terms sorted strictly descending in the ring order, no
/// zero coefficients. Values are immutable once built.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Coeff& c = 1);
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading_term() const;
  long total_degree() const;
  bool is_homogeneous() const;
  /// True when the term list satisfies the canonical-form invariants.
  bool check_invariants() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scale(const Coeff& c) const;
  Polynomial mul_term(const Coeff& c, const Monomial& m) const;
  /// Throws std::invalid_argument for negative exponents.
  Polynomial pow(long exponent) const;
  Polynomial make_monic() const;
  Polynomial derivative(std::size_t var) const;

  bool operator==(const Polynomial& other) const;

  /// Reinterprets the polynomial in `target` by variable name; missing
  /// variables throw RingMismatch. Coefficients are normalized in the target field.
  Polynomial map_to(const RingPtr& target) const;

  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Ring homomorphism sending variable i of f's ring to images[i].
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);

/// Evaluation at a point with coefficients mapped through `ops`.
template <class Ops>
typename Ops::Elem evaluate(const Polynomial& f, std::span<const typename Ops::Elem> point,
                            const Ops& ops) {
  if (point.size() != f.ring()->nvars()) throw std::invalid_argument("point arity mismatch");
  auto acc = ops.zero();
  for (const Term& t : f.terms()) {
    auto v = ops.from_mpq(t.coeff);
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (std::int32_t e = 0; e < t.mono[i]; ++e) v = ops.mul(v, point[i]);
    }
    acc = ops.add(acc, v);
  }
  return acc;
}

struct IdealFile {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::vector<std::string> comments;
};

/// Header `ring: v1,...,vk over QQ|Fp:<p> order grevlex|lex`, one polynomial
/// per line, `#` starts a comment.
IdealFile read_ideal_file(std::istream& in);
IdealFile read_ideal_file(const std::string& path);
void write_ideal_file(std::ostream& out, const RingPtr& ring, std::span<const Polynomial> gens,
                      std::span<const std::string> header_comments = {});

}  // namespace g2flat
