#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace g2flat {

/// The coefficient field of a polynomial ring: either QQ or a prime field F_p.
///
/// Coefficients are carried as exact rationals everywhere outside the Groebner
/// engine. Over F_p a coefficient is stored as its canonical representative in
/// [0, p).
class CoefficientField {
 public:
  enum class Kind { rationals, prime_field };

  static CoefficientField rationals() { return CoefficientField(Kind::rationals, 0); }
  /// Throws std::invalid_argument unless p is a prime greater than 2 and below 2^31.
  static CoefficientField prime(std::uint32_t p);
  /// Parses "QQ" or "Fp:<p>".
  static CoefficientField parse(const std::string& text);

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::prime_field; }
  std::uint32_t modulus() const { return modulus_; }

  /// Canonical representative of x. Over F_p throws std::domain_error if the
  /// denominator of x is divisible by p.
  mpq_class normalize(const mpq_class& x) const;
  mpq_class inverse(const mpq_class& x) const;

  std::string to_string() const;

  bool operator==(const CoefficientField& other) const = default;

 private:
  CoefficientField(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p on machine words. p < 2^31.
struct PrimeFieldOps {
  using Elem = std::uint32_t;

  std::uint32_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
  }
  Elem inv(Elem a) const;
  Elem from_mpq(const mpq_class& x) const;
  mpq_class to_mpq(Elem a) const { return mpq_class(static_cast<unsigned long>(a)); }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }
};

/// Exact arithmetic in QQ through GMP.
struct RationalOps {
  using Elem = mpq_class;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  Elem from_mpq(const mpq_class& x) const { return x; }
  mpq_class to_mpq(const Elem& a) const { return a; }
  Elem from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
};

/// Quadratic extension F_p[r]/(r^2 - nonresidue). Used where points of a
/// zero-dimensional scheme are only defined over F_{p^2}.
struct QuadraticExtensionOps {
  struct Elem {
    std::uint32_t re = 0;
    std::uint32_t im = 0;
    bool operator==(const Elem&) const = default;
  };

  PrimeFieldOps base;
  std::uint32_t nonresidue;

  static QuadraticExtensionOps for_prime(std::uint32_t p);

  Elem zero() const { return {}; }
  Elem one() const { return {1, 0}; }
  bool is_zero(const Elem& a) const { return a.re == 0 && a.im == 0; }
  Elem add(const Elem& a, const Elem& b) const { return {base.add(a.re, b.re), base.add(a.im, b.im)}; }
  Elem sub(const Elem& a, const Elem& b) const { return {base.sub(a.re, b.re), base.sub(a.im, b.im)}; }
  Elem neg(const Elem& a) const { return {base.neg(a.re), base.neg(a.im)}; }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem from_base(std::uint32_t a) const { return {a, 0}; }
  Elem from_mpq(const mpq_class& x) const { return {base.from_mpq(x), 0}; }
  /// Square root of a base-field element, always defined in the extension.
  Elem sqrt(std::uint32_t a) const;
};

/// Euler criterion and Tonelli-Shanks square root in F_p. sqrt_mod throws
/// std::domain_error on non-squares.
bool is_square_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t sqrt_mod(std::uint32_t a, std::uint32_t p);

}  // namespace g2flat
