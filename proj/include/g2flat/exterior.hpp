#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2flat/groebner.hpp"

namespace g2flat {

/// Dimension of the underlying vector space V.
inline constexpr int kDim = 7;

/// A basis blade e_{i1} ^ ... ^ e_{ik} as a bit mask; bit i-1 stands for e_i.
using Blade = std::uint8_t;

Blade blade_of(std::initializer_list<int> indices);
std::vector<int> blade_indices(Blade b);
inline int blade_grade(Blade b) { return std::popcount(static_cast<unsigned>(b)); }

/// Sign of e_A ^ e_B relative to e_{A u B}; 0 when A and B overlap.
int wedge_sign(Blade a, Blade b);
/// Sign s with e_A ^ e_{A^c} = s * e_1...7.
int complement_sign(Blade a);

inline bool scalar_is_zero(const mpq_class& c) { return sgn(c) == 0; }
inline bool scalar_is_zero(const Polynomial& c) { return c.is_zero(); }

/// Homogeneous element of Lambda^k V with coefficients in S (mpq_class or
/// Polynomial). Zero coefficients are never stored.
template <class S>
class MultiVector {
 public:
  explicit MultiVector(int grade) : grade_(grade) {
    if (grade < 0 || grade > kDim) throw std::invalid_argument("grade out of range");
  }

  int grade() const { return grade_; }
  const std::map<Blade, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Blade b, const S& c) {
    if (blade_grade(b) != grade_) throw std::invalid_argument("blade grade mismatch");
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      if (!scalar_is_zero(c)) terms_.emplace(b, c);
      return;
    }
    it->second = it->second + c;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }

  MultiVector operator+(const MultiVector& o) const {
    if (o.grade_ != grade_) throw std::invalid_argument("adding multivectors of different grades");
    MultiVector r = *this;
    for (const auto& [b, c] : o.terms_) r.add_term(b, c);
    return r;
  }

  MultiVector operator-() const {
    MultiVector r(grade_);
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
  }

  MultiVector operator-(const MultiVector& o) const { return *this + (-o); }

  MultiVector scale(const S& s) const {
    MultiVector r(grade_);
    for (const auto& [b, c] : terms_) r.add_term(b, c * s);
    return r;
  }

  bool operator==(const MultiVector& o) const {
    if (grade_ != o.grade_ || terms_.size() != o.terms_.size()) return false;
    return (*this - o).is_zero();
  }

 private:
  int grade_;
  std::map<Blade, S> terms_;
};

template <class S>
MultiVector<S> wedge(const MultiVector<S>& a, const MultiVector<S>& b) {
  if (a.grade() + b.grade() > kDim) throw std::invalid_argument("wedge: grade overflow");
  MultiVector<S> r(a.grade() + b.grade());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      const int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      const S prod = ca * cb;
      r.add_term(static_cast<Blade>(ba | bb), s > 0 ? prod : -prod);
    }
  }
  return r;
}

/// Hodge dual with respect to e_1...7: e_I maps to complement_sign(I) e_{I^c},
/// so that e_I ^ dual(e_I) = e_1...7. dual(dual(x)) = x in odd dimension 7.
template <class S>
MultiVector<S> hodge_dual(const MultiVector<S>& a) {
  MultiVector<S> r(kDim - a.grade());
  constexpr Blade full = (1u << kDim) - 1;
  for (const auto& [b, c] : a.terms()) {
    const Blade comp = static_cast<Blade>(full & ~b);
    r.add_term(comp, complement_sign(b) > 0 ? c : -c);
  }
  return r;
}

using Form = MultiVector<mpq_class>;

Form basis_form(std::initializer_list<int> indices, const mpq_class& coeff = 1);
Form vector_form(const std::vector<mpq_class>& coords);

/// The four-forms attached to G2 and its degenerations.
Form omega_g2();
Form omega0();
Form omega1();
/// omega0 + t * x1^x2^x4^x5.
Form omega_t(const mpq_class& t);
/// x1^x2^x3^x7 + x4^x5^x6^x7 + lambda (x2^x3^x5^x6 + x1^x3^x4^x6).
Form omega_lambda(const mpq_class& lambda);

/// Decomposability via the wedge-square criterion. Grades 3 and 4 raise
/// std::domain_error.
bool is_decomposable(const Form& a);

/// Plucker variables p_ij (i<j) in lexicographic order, named "p12".."p67".
std::vector<std::string> plucker_names();
std::vector<Blade> plucker_blades();

/// The seven components of p ^ omega in Lambda^6 V, one row of 21
/// coefficients per component (columns follow plucker_blades()).
std::vector<std::vector<mpq_class>> isotropy_matrix(const Form& omega);

struct IsotropyKernel {
  /// Kernel basis, one 21-vector per free column; free columns are the
  /// coordinates of the isotropic linear span.
  std::vector<std::vector<mpq_class>> basis;
  std::vector<std::size_t> free_columns;
  std::size_t rank = 0;
};

/// Kernel of isotropy_matrix over the given field by Gauss elimination with
/// left-to-right pivots.
IsotropyKernel isotropy_kernel(const Form& omega, const CoefficientField& field);

/// Linear forms of p ^ omega in the ring of the 21 Plucker variables.
std::vector<Polynomial> isotropy_linear_system(const Form& omega, const RingPtr& plucker_ring);

/// The Plucker quadrics of G(2,7): coefficient of e_ijkl in (p^p)/2, i.e.
/// p_ij p_kl - p_ik p_jl + p_il p_jk, for a bivector p with entries in a ring.
std::vector<Polynomial> plucker_quadrics(const MultiVector<Polynomial>& p);

/// Isotropic 2-planes of omega in the coordinates of the kernel (named after
/// their free Plucker columns), cut by the restricted Plucker quadrics.
Ideal isotropic_variety_ideal(const Form& omega, const CoefficientField& field);

/// {v : v ^ omega decomposable} as the quadrics of (v^omega)* ^ (v^omega)*.
Ideal threespace_conic(const Form& omega, const CoefficientField& field);

enum class BivectorMode { chain, concurrent };

struct BivectorReport {
  std::size_t field_size = 0;
  std::size_t solutions = 0;  // nonzero (a,b,c,d) with w^w = 0
  std::size_t single_coordinate_solutions = 0;
  bool scan_ok = false;
  bool symbolic_ok = false;
  std::vector<std::string> symbolic_components;
};

/// w = a v1^v2 + b v3^v4 + c v5^v6 + d v7^(v1+v3[+v5]); scans F_q^4 and
/// expands w^w with indeterminate coefficients.
BivectorReport bivector_square_check(BivectorMode mode, std::uint32_t q = 5);

/// Lines "k: i1 ... ik : coefficient".
void write_form(std::ostream& out, const Form& f);
Form read_form(std::istream& in);

}  // namespace g2flat
