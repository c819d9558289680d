#include "g2flat/field.hpp"

#include <limits>

namespace g2flat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

CoefficientField CoefficientField::prime(std::uint32_t p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("modulus must be a prime in (2, 2^31): " + std::to_string(p));
  }
  return CoefficientField(Kind::prime_field, p);
}

CoefficientField CoefficientField::parse(const std::string& text) {
  if (text == "QQ") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad prime field spec: " + text);
    }
    const unsigned long long p = std::stoull(digits);
    if (p > std::numeric_limits<std::uint32_t>::max()) {
      throw std::invalid_argument("modulus too large: " + text);
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("unknown coefficient field: " + text);
}

mpq_class CoefficientField::normalize(const mpq_class& x) const {
  if (kind_ == Kind::rationals) {
    mpq_class r(x);
    r.canonicalize();
    return r;
  }
  const mpz_class p(static_cast<unsigned long>(modulus_));
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = x.get_den() % p;
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * den_inv) % p;
  return mpq_class(r);
}

mpq_class CoefficientField::inverse(const mpq_class& x) const {
  if (sgn(x) == 0) throw std::domain_error("division by zero");
  if (kind_ == Kind::rationals) return 1 / x;
  PrimeFieldOps ops{modulus_};
  return ops.to_mpq(ops.inv(ops.from_mpq(x)));
}

std::string CoefficientField::to_string() const {
  if (kind_ == Kind::rationals) return "QQ";
  return "Fp:" + std::to_string(modulus_);
}

PrimeFieldOps::Elem PrimeFieldOps::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // extended Euclid on signed 64-bit
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<Elem>(t);
}

PrimeFieldOps::Elem PrimeFieldOps::from_mpq(const mpq_class& x) const {
  const mpz_class pz(static_cast<unsigned long>(p));
  mpz_class num = x.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = x.get_den() % pz;
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  const Elem n = static_cast<Elem>(num.get_ui());
  const Elem d = static_cast<Elem>(den.get_ui());
  return mul(n, inv(d));
}

namespace {

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1, b = base % p;
  while (e > 0) {
    if (e & 1) result = result * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_square_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) return true;
  return pow_mod(a, (p - 1) / 2, p) == 1;
}

std::uint32_t sqrt_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) return 0;
  if (!is_square_mod(a, p)) throw std::domain_error("not a square mod p");
  std::uint32_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint32_t z = 2;
  while (is_square_mod(z, p)) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

QuadraticExtensionOps QuadraticExtensionOps::for_prime(std::uint32_t p) {
  std::uint32_t r = 2;
  while (is_square_mod(r, p)) ++r;
  return QuadraticExtensionOps{PrimeFieldOps{p}, r};
}

QuadraticExtensionOps::Elem QuadraticExtensionOps::mul(const Elem& a, const Elem& b) const {
  // (a0 + a1 r)(b0 + b1 r) = a0 b0 + n a1 b1 + (a0 b1 + a1 b0) r
  const std::uint32_t re = base.add(base.mul(a.re, b.re), base.mul(nonresidue, base.mul(a.im, b.im)));
  const std::uint32_t im = base.add(base.mul(a.re, b.im), base.mul(a.im, b.re));
  return {re, im};
}

QuadraticExtensionOps::Elem QuadraticExtensionOps::inv(const Elem& a) const {
  // 1/(x + y r) = (x - y r)/(x^2 - n y^2)
  const std::uint32_t norm = base.sub(base.mul(a.re, a.re), base.mul(nonresidue, base.mul(a.im, a.im)));
  const std::uint32_t ninv = base.inv(norm);
  return {base.mul(a.re, ninv), base.mul(base.neg(a.im), ninv)};
}

QuadraticExtensionOps::Elem QuadraticExtensionOps::sqrt(std::uint32_t a) const {
  if (is_square_mod(a, base.p)) return {sqrt_mod(a, base.p), 0};
  // a = n * (a/n) and a/n is a square, so sqrt(a) = sqrt(a/n) * r
  const std::uint32_t q = base.mul(a, base.inv(nonresidue));
  return {0, sqrt_mod(q, base.p)};
}

}  // namespace g2flat
