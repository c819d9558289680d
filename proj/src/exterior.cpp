#include "g2flat/exterior.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "g2flat/linalg.hpp"

namespace g2flat {

Blade blade_of(std::initializer_list<int> indices) {
  Blade b = 0;
  for (int i : indices) {
    if (i < 1 || i > kDim) throw std::invalid_argument("basis index out of range");
    const Blade bit = static_cast<Blade>(1u << (i - 1));
    if (b & bit) throw std::invalid_argument("repeated basis index");
    b |= bit;
  }
  return b;
}

std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  for (int i = 0; i < kDim; ++i) {
    if (b & (1u << i)) out.push_back(i + 1);
  }
  return out;
}

int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  // count pairs (x in a, y in b) with x > y
  int inversions = 0;
  for (int y = 0; y < kDim; ++y) {
    if (!(b & (1u << y))) continue;
    inversions += std::popcount(static_cast<unsigned>(a) >> (y + 1));
  }
  return inversions % 2 ? -1 : 1;
}

int complement_sign(Blade a) {
  constexpr Blade full = (1u << kDim) - 1;
  return wedge_sign(a, static_cast<Blade>(full & ~a));
}

Form basis_form(std::initializer_list<int> indices, const mpq_class& coeff) {
  // e_{i1} ^ ... ^ e_{ik} in the given order, so unsorted input carries a sign
  Form f(static_cast<int>(indices.size()));
  std::vector<int> idx(indices);
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] > idx[j]) sign = -sign;
  f.add_term(blade_of(indices), sign > 0 ? coeff : mpq_class(-coeff));
  return f;
}

Form vector_form(const std::vector<mpq_class>& coords) {
  if (coords.size() != kDim) throw std::invalid_argument("vector_form expects 7 coordinates");
  Form f(1);
  for (int i = 0; i < kDim; ++i) f.add_term(static_cast<Blade>(1u << i), coords[i]);
  return f;
}

Form omega0() {
  return basis_form({1, 2, 3, 7}) + basis_form({4, 5, 6, 7}) + basis_form({2, 3, 5, 6}) +
         basis_form({1, 3, 4, 6});
}

Form omega_g2() { return omega0() + basis_form({1, 2, 4, 5}); }

Form omega1() { return basis_form({1, 2, 3, 7}) + basis_form({2, 3, 5, 6}) + basis_form({1, 3, 4, 6}); }

Form omega_t(const mpq_class& t) { return omega0() + basis_form({1, 2, 4, 5}, t); }

Form omega_lambda(const mpq_class& lambda) {
  return basis_form({1, 2, 3, 7}) + basis_form({4, 5, 6, 7}) + basis_form({2, 3, 5, 6}, lambda) +
         basis_form({1, 3, 4, 6}, lambda);
}

bool is_decomposable(const Form& a) {
  switch (a.grade()) {
    case 0:
    case 1:
    case 6:
    case 7:
      return true;
    case 2:
      return wedge(a, a).is_zero();
    case 5: {
      const Form w = hodge_dual(a);
      return wedge(w, w).is_zero();
    }
    default:
      throw std::domain_error("decomposability test is only implemented for grades 0,1,2,5,6,7");
  }
}

std::vector<Blade> plucker_blades() {
  std::vector<Blade> out;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i + 1; j <= kDim; ++j) out.push_back(blade_of({i, j}));
  }
  return out;
}

std::vector<std::string> plucker_names() {
  std::vector<std::string> out;
  for (int i = 1; i <= kDim; ++i) {
    for (int j = i + 1; j <= kDim; ++j) out.push_back("p" + std::to_string(i) + std::to_string(j));
  }
  return out;
}

std::vector<std::vector<mpq_class>> isotropy_matrix(const Form& omega) {
  if (omega.grade() != 4) throw std::invalid_argument("isotropy conditions need a four-form");
  constexpr Blade full = (1u << kDim) - 1;
  const auto cols = plucker_blades();
  std::vector<std::vector<mpq_class>> m(kDim, std::vector<mpq_class>(cols.size(), 0));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    Form p(2);
    p.add_term(cols[c], 1);
    const Form six = wedge(p, omega);
    for (const auto& [b, coeff] : six.terms()) {
      // row r is the component along e_{1..7 without r+1}
      const int missing = std::countr_zero(static_cast<unsigned>(full & ~b));
      m[static_cast<std::size_t>(missing)][c] = coeff;
    }
  }
  return m;
}

namespace {

template <class Ops>
IsotropyKernel kernel_with(const std::vector<std::vector<mpq_class>>& rows, const Ops& ops) {
  linalg::Matrix<Ops> m(rows.size(), rows.empty() ? 0 : rows[0].size(), ops);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = ops.from_mpq(rows[r][c]);
  }
  IsotropyKernel out;
  out.rank = linalg::rank(m, ops);
  for (const auto& v : linalg::kernel(m, ops)) {
    std::vector<mpq_class> q;
    q.reserve(v.size());
    for (const auto& x : v) q.push_back(ops.to_mpq(x));
    out.basis.push_back(std::move(q));
  }
  const auto pivots = linalg::rref(m, ops);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (!is_pivot[c]) out.free_columns.push_back(c);
  }
  return out;
}

MultiVector<Polynomial> lift(const Form& f, const RingPtr& ring) {
  MultiVector<Polynomial> out(f.grade());
  for (const auto& [b, c] : f.terms()) out.add_term(b, Polynomial::constant(ring, c));
  return out;
}

}  // namespace

IsotropyKernel isotropy_kernel(const Form& omega, const CoefficientField& field) {
  const auto rows = isotropy_matrix(omega);
  if (field.is_prime_field()) return kernel_with(rows, PrimeFieldOps{field.modulus()});
  return kernel_with(rows, RationalOps{});
}

std::vector<Polynomial> isotropy_linear_system(const Form& omega, const RingPtr& plucker_ring) {
  if (plucker_ring->nvars() != 21) throw std::invalid_argument("expected the 21 Plucker variables");
  const auto rows = isotropy_matrix(omega);
  std::vector<Polynomial> out;
  for (const auto& row : rows) {
    Polynomial f(plucker_ring);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (sgn(row[c]) != 0) f = f + Polynomial::variable(plucker_ring, c).scale(row[c]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Polynomial> plucker_quadrics(const MultiVector<Polynomial>& p) {
  if (p.grade() != 2) throw std::invalid_argument("plucker_quadrics expects a bivector");
  if (p.is_zero()) return {};
  const RingPtr ring = p.terms().begin()->second.ring();
  auto entry = [&](int i, int j) {
    auto it = p.terms().find(blade_of({i, j}));
    return it == p.terms().end() ? Polynomial(ring) : it->second;
  };
  std::vector<Polynomial> out;
  for (int i = 1; i <= kDim; ++i)
    for (int j = i + 1; j <= kDim; ++j)
      for (int k = j + 1; k <= kDim; ++k)
        for (int l = k + 1; l <= kDim; ++l) {
          out.push_back(entry(i, j) * entry(k, l) - entry(i, k) * entry(j, l) + entry(i, l) * entry(j, k));
        }
  return out;
}

Ideal isotropic_variety_ideal(const Form& omega, const CoefficientField& field) {
  const auto kernel = isotropy_kernel(omega, field);
  const auto names = plucker_names();
  std::vector<std::string> vars;
  for (auto c : kernel.free_columns) vars.push_back(names[c]);
  const RingPtr ring = PolyRing::make(vars, field);
  const auto blades = plucker_blades();
  MultiVector<Polynomial> p(2);
  for (std::size_t j = 0; j < kernel.basis.size(); ++j) {
    const Polynomial q = Polynomial::variable(ring, j);
    for (std::size_t c = 0; c < blades.size(); ++c) {
      if (sgn(kernel.basis[j][c]) != 0) p.add_term(blades[c], q.scale(kernel.basis[j][c]));
    }
  }
  return Ideal(ring, plucker_quadrics(p));
}

Ideal threespace_conic(const Form& omega, const CoefficientField& field) {
  if (omega.grade() != 4) throw std::invalid_argument("threespace_conic needs a four-form");
  const RingPtr ring = PolyRing::make({"v1", "v2", "v3", "v4", "v5", "v6", "v7"}, field);
  MultiVector<Polynomial> v(1);
  for (int i = 0; i < kDim; ++i) v.add_term(static_cast<Blade>(1u << i), Polynomial::variable(ring, i));
  const auto w = hodge_dual(wedge(v, lift(omega, ring)));
  const auto sq = wedge(w, w);
  std::vector<Polynomial> gens;
  for (const auto& [b, c] : sq.terms()) gens.push_back(c);
  return Ideal(ring, std::move(gens));
}

namespace {

Form bivector_w(BivectorMode mode, const mpq_class& a, const mpq_class& b, const mpq_class& c,
                const mpq_class& d) {
  Form w = basis_form({1, 2}, a) + basis_form({3, 4}, b) + basis_form({5, 6}, c) +
           basis_form({7, 1}, d) + basis_form({7, 3}, d);
  if (mode == BivectorMode::concurrent) w = w + basis_form({7, 5}, d);
  return w;
}

Blade sorted_blade(std::initializer_list<int> idx) { return blade_of(idx); }

}  // namespace

BivectorReport bivector_square_check(BivectorMode mode, std::uint32_t q) {
  BivectorReport rep;
  rep.field_size = q;
  const PrimeFieldOps ops{q};
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          if (a == 0 && b == 0 && c == 0 && d == 0) continue;
          const Form w = bivector_w(mode, a, b, c, d);
          const Form sq = wedge(w, w);
          bool zero = true;
          for (const auto& [bl, coeff] : sq.terms()) {
            if (ops.from_mpq(coeff) != 0) zero = false;
          }
          if (!zero) continue;
          ++rep.solutions;
          const int nonzero = (a != 0) + (b != 0) + (c != 0) + (d != 0);
          if (nonzero == 1) ++rep.single_coordinate_solutions;
        }
  rep.scan_ok = rep.solutions == 4 * (q - 1) && rep.single_coordinate_solutions == rep.solutions;

  // symbolic: components of w^w generate the ideal of pairwise products
  const RingPtr ring = PolyRing::make({"a", "b", "c", "d"}, CoefficientField::rationals());
  const Polynomial A = Polynomial::variable(ring, 0), B = Polynomial::variable(ring, 1),
                   C = Polynomial::variable(ring, 2), D = Polynomial::variable(ring, 3);
  MultiVector<Polynomial> w(2);
  w.add_term(sorted_blade({1, 2}), A);
  w.add_term(sorted_blade({3, 4}), B);
  w.add_term(sorted_blade({5, 6}), C);
  w.add_term(sorted_blade({1, 7}), -D);
  w.add_term(sorted_blade({3, 7}), -D);
  if (mode == BivectorMode::concurrent) w.add_term(sorted_blade({5, 7}), -D);
  const auto sq = wedge(w, w);
  std::vector<Polynomial> comps;
  for (const auto& [bl, coeff] : sq.terms()) {
    comps.push_back(coeff);
    std::ostringstream s;
    for (int i : blade_indices(bl)) s << i;
    rep.symbolic_components.push_back("e" + s.str() + ": " + coeff.to_string());
  }
  const std::vector<Polynomial> products{A * B, A * C, A * D, B * C, B * D, C * D};
  rep.symbolic_ok = ideal_equal(Ideal(ring, comps), Ideal(ring, products)) == IdealRelation::equal;
  return rep;
}

void write_form(std::ostream& out, const Form& f) {
  for (const auto& [b, c] : f.terms()) {
    out << f.grade() << ":";
    for (int i : blade_indices(b)) out << ' ' << i;
    out << " : " << c.get_str() << '\n';
  }
}

Form read_form(std::istream& in) {
  std::string line;
  std::optional<Form> f;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto c1 = line.find(':');
    const auto c2 = line.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw ParseError("malformed multivector line: " + line);
    const int k = std::stoi(line.substr(0, c1));
    std::istringstream idx(line.substr(c1 + 1, c2 - c1 - 1));
    Blade b = 0;
    int i, count = 0, prev = 0;
    while (idx >> i) {
      if (i <= prev || i > kDim) throw ParseError("indices must be strictly increasing in 1..7: " + line);
      b |= static_cast<Blade>(1u << (i - 1));
      prev = i;
      ++count;
    }
    if (count != k) throw ParseError("grade does not match index count: " + line);
    std::string coeff = line.substr(c2 + 1);
    coeff.erase(0, coeff.find_first_not_of(" \t"));
    coeff.erase(coeff.find_last_not_of(" \t\r") + 1);
    mpq_class value;
    if (value.set_str(coeff, 10) != 0) throw ParseError("bad coefficient: " + coeff);
    value.canonicalize();
    if (!f) f.emplace(k);
    if (f->grade() != k) throw ParseError("mixed grades in multivector file");
    f->add_term(b, value);
  }
  if (!f) throw ParseError("empty multivector file");
  return *f;
}

}  // namespace g2flat
