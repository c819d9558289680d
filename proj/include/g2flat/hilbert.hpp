#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "g2flat/groebner.hpp"

namespace g2flat {

/// Hilbert data of R/I for a homogeneous ideal I in a standard graded ring
/// with n variables. The series is numerator(s) / (1-s)^n.
struct HilbertData {
  /// Projective dimension; -1 for the empty scheme.
  int dimension = -1;
  /// Absent when the scheme is empty.
  std::optional<mpz_class> degree;
  /// Hilbert polynomial, coefficient of t^i at index i.
  std::vector<mpq_class> hp_coefficients;
  /// K-polynomial over (1-s)^n, coefficient of s^i at index i.
  std::vector<mpz_class> series_numerator;
  /// numerator / (1-s)^(n - dimension - 1).
  std::vector<mpz_class> reduced_numerator;
  std::size_t nvars = 0;

  bool operator==(const HilbertData& other) const;
  /// Same dimension, degree and Hilbert polynomial (ambient may differ).
  bool same_polynomial(const HilbertData& other) const;
  /// Value of the Hilbert function at degree t >= 0.
  mpz_class hilbert_function(long t) const;
  mpq_class hilbert_polynomial_at(long t) const;
  std::string describe() const;
};

/// K-polynomial of the quotient by a monomial ideal, by pivot recursion.
std::vector<mpz_class> hilbert_numerator(std::span<const Monomial> generators, std::size_t nvars);

HilbertData hilbert_data_from_numerator(std::vector<mpz_class> numerator, std::size_t nvars);
HilbertData hilbert_data_from_monomials(std::span<const Monomial> generators, std::size_t nvars);

/// Hilbert data of R/I from the leading monomials of a Groebner basis.
HilbertData hilbert_data(const Ideal& ideal, const GroebnerOptions& options = {});
HilbertData hilbert_data(const GroebnerBasis& basis);

/// Basis of the degree-d piece of a homogeneous ideal, computed by linear
/// algebra on all monomial multiples of the generators (no Groebner basis).
/// Returned in reduced echelon form with monic leading terms.
std::vector<Polynomial> graded_piece(const Ideal& ideal, long degree);

/// dim_k (R/I)_d from graded_piece.
mpz_class hilbert_function_by_rank(const Ideal& ideal, long degree);

/// All monomials of total degree d in n variables, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, long degree);

}  // namespace g2flat
