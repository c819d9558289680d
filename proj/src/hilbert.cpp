#include "g2flat/hilbert.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "g2flat/linalg.hpp"

namespace g2flat {

namespace {

using SPoly = std::vector<mpz_class>;
using Exps = std::vector<int>;

void trim(SPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

SPoly add(const SPoly& a, const SPoly& b) {
  SPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

SPoly mul(const SPoly& a, const SPoly& b) {
  if (a.empty() || b.empty()) return {};
  SPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

SPoly shift(const SPoly& a, long d) {
  if (a.empty()) return {};
  SPoly r(a.size() + static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < a.size(); ++i) r[i + static_cast<std::size_t>(d)] = a[i];
  return r;
}

SPoly one_minus_power(long d) {
  SPoly r(static_cast<std::size_t>(d) + 1);
  r[0] += 1;
  r[static_cast<std::size_t>(d)] -= 1;
  trim(r);
  return r;
}

long degree_of(const Exps& m) {
  long d = 0;
  for (int e : m) d += e;
  return d;
}

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// Minimal generators, sorted for use as a memo key.
std::vector<Exps> minimalize(std::vector<Exps> gens) {
  std::sort(gens.begin(), gens.end(), [](const Exps& a, const Exps& b) {
    const long da = degree_of(a), db = degree_of(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exps> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

class NumeratorRecursion {
 public:
  explicit NumeratorRecursion(std::size_t n) : n_(n) {}

  SPoly run(std::vector<Exps> gens) { return rec(minimalize(std::move(gens))); }

 private:
  SPoly rec(const std::vector<Exps>& gens) {
    if (gens.empty()) return SPoly{1};
    for (const auto& g : gens) {
      if (degree_of(g) == 0) return {};  // unit ideal
    }
    // pairwise coprime generators: product formula
    bool coprime = true;
    std::vector<int> seen(n_, 0);
    for (const auto& g : gens) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (g[i] > 0 && seen[i]++) coprime = false;
      }
    }
    if (coprime) {
      SPoly r{1};
      for (const auto& g : gens) r = mul(r, one_minus_power(degree_of(g)));
      return r;
    }
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;

    // pivot: the variable shared by most generators, to the power of the
    // median of its positive exponents
    std::size_t var = 0;
    int best = -1;
    for (std::size_t i = 0; i < n_; ++i) {
      int count = 0;
      for (const auto& g : gens) count += g[i] > 0 ? 1 : 0;
      if (count > best) {
        best = count;
        var = i;
      }
    }
    std::vector<int> exps;
    for (const auto& g : gens) {
      if (g[var] > 0) exps.push_back(g[var]);
    }
    std::sort(exps.begin(), exps.end());
    const int e = exps[(exps.size() - 1) / 2];
    Exps pivot(n_, 0);
    pivot[var] = e;

    std::vector<Exps> sum = gens;
    sum.push_back(pivot);
    std::vector<Exps> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
      Exps q = g;
      q[var] = std::max(0, q[var] - e);
      colon.push_back(std::move(q));
    }
    SPoly result = add(rec(minimalize(std::move(sum))), shift(rec(minimalize(std::move(colon))), e));
    memo_.emplace(gens, result);
    return result;
  }

  std::size_t n_;
  std::map<std::vector<Exps>, SPoly> memo_;
};

/// Divides by (1-s) when p(1) = 0.
std::optional<SPoly> divide_one_minus_s(const SPoly& p) {
  mpz_class total = 0;
  for (const auto& c : p) total += c;
  if (total != 0 || p.empty()) return std::nullopt;
  SPoly q(p.size() - 1);
  mpz_class acc = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    acc += p[i];
    q[i] = acc;
  }
  trim(q);
  return q;
}

/// binomial(t - shift + m, m) as a polynomial in t with rational coefficients.
std::vector<mpq_class> shifted_binomial(long shift, long m) {
  std::vector<mpq_class> r{1};
  for (long k = 1; k <= m; ++k) {
    // multiply by (t - shift + k) / k
    std::vector<mpq_class> next(r.size() + 1, 0);
    const mpq_class c(k - shift, k);
    for (std::size_t i = 0; i < r.size(); ++i) {
      next[i + 1] += r[i] / k;
      next[i] += r[i] * c;
    }
    r = std::move(next);
  }
  for (auto& c : r) c.canonicalize();
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

std::vector<mpz_class> hilbert_numerator(std::span<const Monomial> generators, std::size_t nvars) {
  std::vector<Exps> gens;
  gens.reserve(generators.size());
  for (const auto& m : generators) {
    if (m.size() != nvars) throw std::invalid_argument("monomial arity mismatch");
    gens.emplace_back(m.exponents().begin(), m.exponents().end());
  }
  return NumeratorRecursion(nvars).run(std::move(gens));
}

HilbertData hilbert_data_from_numerator(std::vector<mpz_class> numerator, std::size_t nvars) {
  trim(numerator);
  HilbertData h;
  h.nvars = nvars;
  h.series_numerator = numerator;
  SPoly reduced = numerator;
  std::size_t codim = 0;
  while (codim < nvars) {
    auto q = divide_one_minus_s(reduced);
    if (!q) break;
    reduced = std::move(*q);
    ++codim;
  }
  h.reduced_numerator = reduced;
  const long m = static_cast<long>(nvars - codim);  // Krull dimension
  if (reduced.empty() || m == 0) {
    h.dimension = -1;
    return h;
  }
  h.dimension = static_cast<int>(m - 1);
  mpz_class deg = 0;
  for (const auto& c : reduced) deg += c;
  h.degree = deg;
  std::vector<mpq_class> hp(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i] == 0) continue;
    const auto b = shifted_binomial(static_cast<long>(i), m - 1);
    for (std::size_t k = 0; k < b.size(); ++k) hp[k] += b[k] * reduced[i];
  }
  for (auto& c : hp) c.canonicalize();
  while (!hp.empty() && hp.back() == 0) hp.pop_back();
  h.hp_coefficients = std::move(hp);
  return h;
}

HilbertData hilbert_data_from_monomials(std::span<const Monomial> generators, std::size_t nvars) {
  return hilbert_data_from_numerator(hilbert_numerator(generators, nvars), nvars);
}

HilbertData hilbert_data(const GroebnerBasis& basis) {
  if (!basis.ring()->standard_grading()) {
    throw std::invalid_argument("hilbert_data requires a standard graded ring");
  }
  if (!basis.complete()) throw std::invalid_argument("hilbert_data needs a complete Groebner basis");
  for (const auto& g : basis.elements()) {
    if (!g.is_homogeneous()) throw std::invalid_argument("hilbert_data requires a homogeneous ideal");
  }
  const auto lead = basis.leading_monomials();
  return hilbert_data_from_monomials(lead, basis.ring()->nvars());
}

HilbertData hilbert_data(const Ideal& ideal, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw std::invalid_argument("hilbert_data requires a homogeneous ideal");
  return hilbert_data(groebner_basis(ideal, options));
}

bool HilbertData::operator==(const HilbertData& other) const {
  return nvars == other.nvars && series_numerator == other.series_numerator;
}

bool HilbertData::same_polynomial(const HilbertData& other) const {
  return dimension == other.dimension && degree == other.degree && hp_coefficients == other.hp_coefficients;
}

mpz_class HilbertData::hilbert_function(long t) const {
  if (t < 0) return 0;
  const long m = dimension + 1;
  mpz_class v = 0;
  for (std::size_t i = 0; i < reduced_numerator.size() && static_cast<long>(i) <= t; ++i) {
    if (m == 0) {
      if (static_cast<long>(i) == t) v += reduced_numerator[i];
    } else {
      v += reduced_numerator[i] * binomial(t - static_cast<long>(i) + m - 1, m - 1);
    }
  }
  return v;
}

mpq_class HilbertData::hilbert_polynomial_at(long t) const {
  mpq_class v = 0, power = 1;
  for (const auto& c : hp_coefficients) {
    v += c * power;
    power *= t;
  }
  return v;
}

std::string HilbertData::describe() const {
  std::ostringstream out;
  out << "dim " << dimension;
  if (degree) out << ", degree " << *degree;
  out << ", HP =";
  if (hp_coefficients.empty()) out << " 0";
  for (std::size_t i = hp_coefficients.size(); i-- > 0;) {
    if (hp_coefficients[i] == 0) continue;
    out << ' ' << (hp_coefficients[i] < 0 ? '-' : '+') << ' ' << mpq_class(abs(hp_coefficients[i])).get_str();
    if (i > 0) out << "*t" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out.str();
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, long degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial m(nvars);
  // enumerate exponent vectors in lex-descending order
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == nvars) {
      m[i] = static_cast<std::int32_t>(left);
      out.push_back(m);
      return;
    }
    for (long e = left; e >= 0; --e) {
      m[i] = static_cast<std::int32_t>(e);
      self(self, i + 1, left - e);
    }
    m[i] = 0;
  };
  if (degree >= 0) rec(rec, 0, degree);
  return out;
}

namespace {

template <class Ops>
std::vector<Polynomial> graded_piece_impl(const Ideal& ideal, long degree, const Ops& ops) {
  const RingPtr& ring = ideal.ring();
  auto monos = monomials_of_degree(ring->nvars(), degree);
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) > 0; });
  std::map<std::vector<std::int32_t>, std::size_t> column;
  for (std::size_t c = 0; c < monos.size(); ++c) column.emplace(monos[c].exponents(), c);

  std::vector<std::vector<std::pair<std::size_t, typename Ops::Elem>>> rows;
  for (const auto& g : ideal.generators()) {
    const long dg = g.total_degree();
    if (!g.is_homogeneous() || dg > degree) continue;
    for (const auto& mult : monomials_of_degree(ring->nvars(), degree - dg)) {
      std::vector<std::pair<std::size_t, typename Ops::Elem>> row;
      for (const auto& t : g.terms()) {
        row.emplace_back(column.at((t.mono * mult).exponents()), ops.from_mpq(t.coeff));
      }
      rows.push_back(std::move(row));
    }
  }
  linalg::Matrix<Ops> mat(rows.size(), monos.size(), ops);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (auto& [c, v] : rows[r]) mat.at(r, c) = v;
  }
  const auto pivots = linalg::rref(mat, ops);
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (!ops.is_zero(mat.at(r, c))) terms.push_back(Term{ops.to_mpq(mat.at(r, c)), monos[c]});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> graded_piece(const Ideal& ideal, long degree) {
  if (!ideal.ring()->standard_grading()) throw std::invalid_argument("graded_piece requires standard grading");
  if (ideal.ring()->field().is_prime_field()) {
    return graded_piece_impl(ideal, degree, PrimeFieldOps{ideal.ring()->field().modulus()});
  }
  return graded_piece_impl(ideal, degree, RationalOps{});
}

mpz_class hilbert_function_by_rank(const Ideal& ideal, long degree) {
  if (degree < 0) return 0;
  const auto n = static_cast<long>(ideal.ring()->nvars());
  return binomial(degree + n - 1, n - 1) - static_cast<long>(graded_piece(ideal, degree).size());
}

}  // namespace g2flat
