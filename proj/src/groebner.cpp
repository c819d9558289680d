#include "g2flat/groebner.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "gb_engine.hpp"

namespace g2flat {

using detail::DeadlineGuard;
using detail::Engine;
using detail::EPoly;
using detail::OrderSpec;

namespace {

template <class F>
auto with_field_ops(const CoefficientField& field, F&& fn) {
  if (field.is_prime_field()) return fn(PrimeFieldOps{field.modulus()});
  return fn(RationalOps{});
}

}  // namespace

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.ring() != ring_ && !g.ring()->same_as(*ring_)) {
      throw RingMismatch("ideal generator lives in a different ring");
    }
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

Ideal Ideal::operator+(const Ideal& other) const { return with_generators(other.gens_); }

Ideal Ideal::with_generators(std::span<const Polynomial> extra) const {
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::in_ring(const RingPtr& ring) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.map_to(ring));
  return Ideal(ring, std::move(gens));
}

GroebnerOptions GroebnerOptions::with_timeout(std::chrono::duration<double> budget) {
  GroebnerOptions o;
  o.deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
  return o;
}

// ---------------------------------------------------------------- bases

bool GroebnerBasis::is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.leading_term().mono);
  return out;
}

GroebnerBasis groebner_basis(const Ideal& ideal, const GroebnerOptions& options) {
  const RingPtr& ring = ideal.ring();
  const OrderSpec spec = OrderSpec::from_ring(*ring);
  return with_field_ops(ring->field(), [&](auto ops) {
    using Ops = decltype(ops);
    Engine<Ops> engine(ops, spec, DeadlineGuard(options.deadline));
    std::vector<EPoly<Ops>> input;
    for (const auto& g : ideal.generators()) input.push_back(detail::to_engine(g, ops, spec));
    auto result = engine.run(std::move(input), options.degree_bound);
    std::vector<Polynomial> basis;
    for (const auto& g : result.basis) basis.push_back(detail::from_engine(g, ring, ops));
    return GroebnerBasis(ring, std::move(basis), result.complete,
                         GroebnerStats{result.pairs_processed, result.zero_reductions});
  });
}

GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder order, const GroebnerOptions& options) {
  if (ideal.ring()->order() == order) return groebner_basis(ideal, options);
  const RingPtr ring = ideal.ring()->with_order(order);
  return groebner_basis(ideal.in_ring(ring), options);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  const RingPtr& ring = basis.ring();
  if (f.ring() != ring && !f.ring()->same_as(*ring)) throw RingMismatch("normal_form: ring mismatch");
  const OrderSpec spec = OrderSpec::from_ring(*ring);
  return with_field_ops(ring->field(), [&](auto ops) {
    using Ops = decltype(ops);
    Engine<Ops> engine(ops, spec, DeadlineGuard(std::nullopt));
    std::vector<EPoly<Ops>> reducers;
    reducers.reserve(basis.size());
    for (const auto& g : basis.elements()) {
      auto e = detail::to_engine(g, ops, spec);
      engine.make_monic(e);
      reducers.push_back(std::move(e));
    }
    std::vector<const EPoly<Ops>*> ptrs;
    for (const auto& r : reducers) ptrs.push_back(&r);
    auto nf = engine.reduce(detail::to_engine(f, ops, spec), ptrs);
    return detail::from_engine(nf, ring, ops);
  });
}

bool all_spairs_reduce_to_zero(const GroebnerBasis& basis) {
  const RingPtr& ring = basis.ring();
  const OrderSpec spec = OrderSpec::from_ring(*ring);
  return with_field_ops(ring->field(), [&](auto ops) {
    using Ops = decltype(ops);
    Engine<Ops> engine(ops, spec, DeadlineGuard(std::nullopt));
    std::vector<EPoly<Ops>> g;
    for (const auto& p : basis.elements()) {
      auto e = detail::to_engine(p, ops, spec);
      engine.make_monic(e);
      g.push_back(std::move(e));
    }
    std::vector<const EPoly<Ops>*> ptrs;
    for (const auto& r : g) ptrs.push_back(&r);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        const auto l = spec.lcm(g[i][0].m, g[j][0].m);
        auto s = engine.spoly(g[i], g[j], l);
        if (!engine.reduce(std::move(s), ptrs).empty()) return false;
      }
    }
    return true;
  });
}

// ---------------------------------------------------------------- derived operations

Ideal reduced_ideal(const Ideal& ideal, const GroebnerOptions& options) {
  auto gb = groebner_basis(ideal, options);
  return Ideal(ideal.ring(), gb.elements());
}

Ideal elimination_ideal(const Ideal& ideal, std::span<const std::string> drop,
                        const GroebnerOptions& options) {
  const RingPtr& ring = ideal.ring();
  std::vector<bool> dropped(ring->nvars(), false);
  for (const auto& name : drop) dropped[ring->require_index(name)] = true;
  std::vector<std::string> front, back;
  std::vector<int> wfront, wback;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    (dropped[i] ? front : back).push_back(ring->variable(i));
    (dropped[i] ? wfront : wback).push_back(ring->weights()[i]);
  }
  if (back.empty()) throw std::invalid_argument("elimination_ideal: cannot drop every variable");
  const RingPtr kept = PolyRing::make(back, ring->field(), MonomialOrder::grevlex(), wback);
  if (front.empty()) return reduced_ideal(ideal.in_ring(ring->with_order(MonomialOrder::grevlex())), options).in_ring(kept);

  std::vector<std::string> all = front;
  all.insert(all.end(), back.begin(), back.end());
  std::vector<int> weights = wfront;
  weights.insert(weights.end(), wback.begin(), wback.end());
  const RingPtr elim = PolyRing::make(all, ring->field(), MonomialOrder::block(front.size()), weights);
  auto gb = groebner_basis(ideal.in_ring(elim), options);
  std::vector<Polynomial> gens;
  for (const auto& g : gb.elements()) {
    bool free_of_front = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i < front.size(); ++i) {
        if (t.mono[i] > 0) return false;
      }
      return true;
    });
    if (free_of_front) gens.push_back(g.map_to(kept));
  }
  return Ideal(kept, std::move(gens));
}

Ideal kernel_of_map(const RingPtr& target, std::span<const Polynomial> images,
                    const GroebnerOptions& options) {
  if (images.size() != target->nvars()) {
    throw std::invalid_argument("kernel_of_map: one image per target variable required");
  }
  if (images.empty()) throw std::invalid_argument("kernel_of_map: no images");
  const RingPtr& source = images[0].ring();
  if (!(source->field() == target->field())) throw RingMismatch("kernel_of_map: field mismatch");
  long degree = -1;
  for (const auto& q : images) {
    if (q.ring() != source && !q.ring()->same_as(*source)) throw RingMismatch("kernel_of_map: images in different rings");
    if (q.is_zero()) continue;
    if (!q.is_homogeneous()) throw std::invalid_argument("kernel_of_map: images must be homogeneous");
    const long d = q.total_degree();
    if (degree >= 0 && d != degree) throw std::invalid_argument("kernel_of_map: images of different degrees");
    degree = d;
  }
  if (degree <= 0) degree = 1;

  std::vector<std::string> names;
  std::vector<int> weights;
  for (std::size_t i = 0; i < source->nvars(); ++i) {
    names.push_back("s" + std::to_string(i));
    weights.push_back(1);
  }
  for (std::size_t j = 0; j < target->nvars(); ++j) {
    names.push_back("t" + std::to_string(j));
    weights.push_back(static_cast<int>(degree));
  }
  const RingPtr graph = PolyRing::make(names, source->field(), MonomialOrder::block(source->nvars()), weights);
  std::vector<Polynomial> source_images;
  for (std::size_t i = 0; i < source->nvars(); ++i) source_images.push_back(Polynomial::variable(graph, i));
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < target->nvars(); ++j) {
    gens.push_back(Polynomial::variable(graph, source->nvars() + j) - substitute(images[j], source_images));
  }
  std::vector<std::string> drop(names.begin(), names.begin() + static_cast<long>(source->nvars()));
  const Ideal elim = elimination_ideal(Ideal(graph, std::move(gens)), drop, options);
  // rename t_j -> target variable j
  std::vector<Polynomial> to_target;
  for (std::size_t j = 0; j < target->nvars(); ++j) to_target.push_back(Polynomial::variable(target, j));
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(substitute(g, to_target));
  return Ideal(target, std::move(out));
}

std::string to_string(IdealRelation r) {
  switch (r) {
    case IdealRelation::equal: return "equal";
    case IdealRelation::first_strictly_inside: return "first_strictly_inside";
    case IdealRelation::second_strictly_inside: return "second_strictly_inside";
    case IdealRelation::incomparable: return "incomparable";
  }
  return "?";
}

namespace {

bool contained_in_basis(const Ideal& a, const GroebnerBasis& gb) {
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const Polynomial& g) {
    return normal_form(g.map_to(gb.ring()), gb).is_zero();
  });
}

}  // namespace

bool ideal_contained(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  const auto gb = groebner_basis(b, options);
  return contained_in_basis(a, gb);
}

IdealRelation ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  if (!a.ring()->same_as(*b.ring())) throw RingMismatch("ideal_equal: ring mismatch");
  const auto ga = groebner_basis(a, options);
  const auto gb = groebner_basis(b, options);
  const bool a_in_b = contained_in_basis(a, gb);
  const bool b_in_a = contained_in_basis(b, ga);
  if (a_in_b && b_in_a) return IdealRelation::equal;
  if (a_in_b) return IdealRelation::first_strictly_inside;
  if (b_in_a) return IdealRelation::second_strictly_inside;
  return IdealRelation::incomparable;
}

bool radical_membership(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& options) {
  const RingPtr& ring = ideal.ring();
  std::string aux = "w";
  while (ring->index_of(aux)) aux += "_";
  std::vector<std::string> names = ring->variables();
  names.push_back(aux);
  const RingPtr ext = PolyRing::make(names, ring->field(), MonomialOrder::grevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.map_to(ext));
  const Polynomial w = Polynomial::variable(ext, ring->nvars());
  gens.push_back(Polynomial::constant(ext, 1) - w * f.map_to(ext));
  return groebner_basis(Ideal(ext, std::move(gens)), options).is_unit();
}

Ideal saturation(const Ideal& ideal, const Polynomial& linear_form, const GroebnerOptions& options) {
  const RingPtr& ring = ideal.ring();
  if (linear_form.is_zero() || linear_form.total_degree() != 1 || !linear_form.is_homogeneous()) {
    throw std::invalid_argument("saturation: expected a nonzero linear form");
  }
  const std::size_t n = ring->nvars();
  // pivot: last variable with a nonzero coefficient
  std::size_t k = n;
  std::vector<Coeff> coeff(n, 0);
  for (const auto& t : linear_form.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono[i] == 1) coeff[i] = t.coeff;
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    if (sgn(coeff[i]) != 0) {
      k = i;
      break;
    }
  }
  // new ring: variables with x_k moved last; there x_k stands for the form
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != k) names.push_back(ring->variable(i));
  }
  names.push_back(ring->variable(k));
  const RingPtr moved = PolyRing::make(names, ring->field(), MonomialOrder::grevlex());
  const auto& field = ring->field();
  // x_k = (y - sum_{j != k} c_j x_j) / c_k
  Polynomial xk_image = Polynomial::variable(moved, n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k || sgn(coeff[j]) == 0) continue;
    xk_image = xk_image - Polynomial::variable(moved, ring->variable(j)).scale(coeff[j]);
  }
  xk_image = xk_image.scale(field.inverse(coeff[k]));
  std::vector<Polynomial> forward;
  for (std::size_t i = 0; i < n; ++i) {
    forward.push_back(i == k ? xk_image : Polynomial::variable(moved, ring->variable(i)));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(substitute(g, forward));
  auto gb = groebner_basis(Ideal(moved, std::move(gens)), options);

  // divide by the largest power of the last variable, then map back y -> form
  std::vector<Polynomial> backward;
  for (std::size_t i = 0; i + 1 < n; ++i) backward.push_back(Polynomial::variable(ring, names[i]));
  backward.push_back(linear_form);
  std::vector<Polynomial> out;
  for (const auto& g : gb.elements()) {
    std::int32_t common = std::numeric_limits<std::int32_t>::max();
    for (const auto& t : g.terms()) common = std::min(common, t.mono[n - 1]);
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m = t.mono;
      m[n - 1] -= common;
      terms.push_back(Term{t.coeff, m});
    }
    out.push_back(substitute(Polynomial::from_terms(moved, std::move(terms)), backward));
  }
  return Ideal(ring, std::move(out));
}

void write_groebner_basis(std::ostream& out, const GroebnerBasis& basis) {
  const std::string header = std::string("groebner: ") + (basis.complete() ? "reduced" : "truncated") +
                             ", order=" + basis.ring()->order().to_string();
  write_ideal_file(out, basis.ring(), basis.elements(), std::span<const std::string>(&header, 1));
}

}  // namespace g2flat
