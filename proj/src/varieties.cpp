#include "g2flat/varieties.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g2flat {

namespace {

using Rows = std::vector<std::vector<std::string>>;

const Rows kG2Rows = {
    {"0", "-f", "e", "g", "h", "i", "a"},      {"f", "0", "-d", "j", "k", "l", "b"},
    {"-e", "d", "0", "m", "n", "-g-k", "c"},   {"-g", "-j", "-m", "0", "c", "-b", "d"},
    {"-h", "-k", "-n", "-c", "0", "a", "e"},   {"-i", "-l", "g+k", "b", "-a", "0", "f"},
    {"-a", "-b", "-c", "-d", "-e", "-f", "0"},
};

const Rows kGhatRows = {
    {"0", "0", "e", "g", "h", "i", "a"},     {"0", "0", "-d", "j", "-g", "l", "b"},
    {"-e", "d", "0", "m", "n", "k", "c"},    {"-g", "-j", "-m", "0", "0", "-b", "d"},
    {"-h", "g", "-n", "0", "0", "a", "e"},   {"-i", "-l", "k", "b", "-a", "0", "f"},
    {"-a", "-b", "-c", "-d", "-e", "-f", "0"},
};

const Rows kFamilyTRows = {
    {"0", "-t*f", "e", "g", "h", "i", "a"},      {"f", "0", "-d", "j", "-g-t*k", "l", "b"},
    {"-e", "d", "0", "m", "n", "k", "c"},        {"-g", "-j", "-m", "0", "t*c", "-b", "d"},
    {"-h", "-k", "-n", "-c", "0", "a", "e"},     {"-i", "-l", "g+k", "b", "-a", "0", "f"},
    {"-a", "-b", "-c", "-d", "-e", "-f", "0"},
};

const Rows kFamilyLambdaRows = {
    {"0", "0", "lambda*e", "g", "h", "i", "a"},
    {"0", "0", "-lambda*d", "j", "-g", "l", "b"},
    {"-lambda*e", "lambda*d", "0", "m", "n", "k", "c"},
    {"-g", "-j", "-m", "0", "0", "-lambda*b", "d"},
    {"-h", "g", "-n", "0", "0", "lambda*a", "e"},
    {"-i", "-l", "k", "lambda*b", "-lambda*a", "0", "f"},
    {"-a", "-b", "-c", "-d", "-e", "-f", "0"},
};

const Rows kFanoFRows = {
    {"0", "-d", "j", "l", "b"},  {"d", "0", "m", "k", "c"},  {"-j", "-m", "0", "-b", "d"},
    {"-l", "-k", "b", "0", "f"}, {"-b", "-c", "-d", "-f", "0"},
};

RingPtr named_ring(std::vector<std::string> vars, const CoefficientField& field) {
  return PolyRing::make(std::move(vars), field);
}

// Sends each variable of `from` to the same-named variable of `to`, or to
// zero when `to` lacks it.
std::vector<Polynomial> restriction_images(const RingPtr& from, const RingPtr& to) {
  std::vector<Polynomial> images;
  for (const auto& name : from->variables()) {
    if (auto idx = to->index_of(name)) {
      images.push_back(Polynomial::variable(to, *idx));
    } else {
      images.emplace_back(to);
    }
  }
  return images;
}

Ideal restrict_to(const Ideal& ideal, const std::vector<std::string>& kept) {
  const RingPtr target = named_ring(kept, ideal.ring()->field());
  const auto images = restriction_images(ideal.ring(), target);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(substitute(g, images));
  return Ideal(target, std::move(gens));
}

PrimeFieldOps prime_ops(const RingPtr& ring) {
  if (!ring->field().is_prime_field()) throw std::invalid_argument("a prime field is required");
  return PrimeFieldOps{ring->field().modulus()};
}

}  // namespace

const std::vector<std::string>& letter_names() {
  static const std::vector<std::string> names = {"a", "b", "c", "d", "e", "f", "g",
                                                 "h", "i", "j", "k", "l", "m", "n"};
  return names;
}

RingPtr letters_ring(const CoefficientField& field, MonomialOrder order) {
  return PolyRing::make(letter_names(), field, order);
}

RingPtr p5_ring(const CoefficientField& field) {
  return PolyRing::make({"x", "y", "z", "t", "u", "v"}, field);
}

SkewPresentation SkewPresentation::from_printed(std::string name, const RingPtr& ring, const Rows& rows,
                                                const std::string& param, const mpq_class& value) {
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("printed matrix is not square");
  }
  RingPtr parse_ring = ring;
  std::vector<Polynomial> specialize;
  if (!param.empty()) {
    auto vars = ring->variables();
    vars.push_back(param);
    parse_ring = PolyRing::make(vars, ring->field());
    for (std::size_t i = 0; i < ring->nvars(); ++i) specialize.push_back(Polynomial::variable(ring, i));
    specialize.push_back(Polynomial::constant(ring, value));
  }
  auto specialized = [&](const Polynomial& p) { return param.empty() ? p : g2flat::substitute(p, specialize); };

  SkewPresentation out;
  out.name = std::move(name);
  out.ring = ring;
  out.m.assign(n, std::vector<Polynomial>(n, Polynomial(ring)));
  std::vector<std::vector<Polynomial>> printed(n, std::vector<Polynomial>(n, Polynomial(parse_ring)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) printed[i][j] = parse_polynomial(rows[i][j], parse_ring);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!printed[i][i].is_zero()) {
      out.asymmetries.push_back("(" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") printed " +
                                printed[i][i].to_string() + ", expected 0");
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const Polynomial expected = -printed[i][j];
      if (!(printed[j][i] == expected)) {
        out.asymmetries.push_back("(" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ") printed " +
                                  printed[j][i].to_string() + ", expected " + expected.to_string());
      }
      out.m[i][j] = specialized(printed[i][j]);
      out.m[j][i] = -out.m[i][j];
    }
  }
  return out;
}

SkewPresentation SkewPresentation::substitute(std::span<const Polynomial> images) const {
  if (images.empty()) throw std::invalid_argument("substitute: no images");
  SkewPresentation out;
  out.name = name;
  out.ring = images[0].ring();
  out.asymmetries = asymmetries;
  for (const auto& row : m) {
    std::vector<Polynomial> r;
    for (const auto& e : row) r.push_back(g2flat::substitute(e, images));
    out.m.push_back(std::move(r));
  }
  return out;
}

SkewPresentation build_presentation(PresentationKind kind, const CoefficientField& field,
                                    const mpq_class& parameter) {
  const RingPtr ring = letters_ring(field);
  switch (kind) {
    case PresentationKind::G2:
      return SkewPresentation::from_printed("G2", ring, kG2Rows);
    case PresentationKind::Ghat:
      return SkewPresentation::from_printed("Ghat", ring, kGhatRows);
    case PresentationKind::family_t:
      return SkewPresentation::from_printed("family_t(" + parameter.get_str() + ")", ring, kFamilyTRows, "t",
                                            parameter);
    case PresentationKind::family_lambda:
      return SkewPresentation::from_printed("family_lambda(" + parameter.get_str() + ")", ring,
                                            kFamilyLambdaRows, "lambda", parameter);
  }
  throw std::invalid_argument("unknown presentation");
}

SkewPresentation fano_F_presentation(const CoefficientField& field) {
  return SkewPresentation::from_printed("F", named_ring({"b", "c", "d", "f", "j", "l", "m", "k"}, field),
                                        kFanoFRows);
}

SkewPresentation fano_Fprime_presentation(const CoefficientField& field) {
  const auto ghat = build_presentation(PresentationKind::Ghat, field);
  const RingPtr ring = named_ring({"e", "h", "i", "a", "n", "c", "k", "f"}, field);
  const auto images = restriction_images(ghat.ring, ring);
  const std::size_t idx[] = {0, 2, 4, 5, 6};
  SkewPresentation out;
  out.name = "Fprime";
  out.ring = ring;
  for (auto i : idx) {
    std::vector<Polynomial> row;
    for (auto j : idx) row.push_back(g2flat::substitute(ghat.m[i][j], images));
    out.m.push_back(std::move(row));
  }
  return out;
}

Polynomial pfaffian4(const SkewPresentation& m, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return m.at(i, j) * m.at(k, l) - m.at(i, k) * m.at(j, l) + m.at(i, l) * m.at(j, k);
}

std::vector<Polynomial> pfaffians4(const SkewPresentation& m) {
  std::vector<Polynomial> out;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) out.push_back(pfaffian4(m, i, j, k, l));
  return out;
}

Ideal pfaffian_ideal(const SkewPresentation& m) { return Ideal(m.ring, pfaffians4(m)); }

const std::vector<int>& plucker_sign_twist() {
  static const std::vector<int> s = {-1, -1, -1, 1, 1, 1, 1};
  return s;
}

std::vector<Polynomial> isotropy_defect(const SkewPresentation& m, const Form& omega) {
  if (m.size() != static_cast<std::size_t>(kDim)) throw std::invalid_argument("isotropy_defect needs a 7x7 matrix");
  const auto& s = plucker_sign_twist();
  MultiVector<Polynomial> p(2);
  for (int i = 0; i < kDim; ++i) {
    for (int j = i + 1; j < kDim; ++j) {
      p.add_term(blade_of({i + 1, j + 1}), m.at(i, j).scale(s[i] * s[j]));
    }
  }
  MultiVector<Polynomial> om(omega.grade());
  for (const auto& [b, c] : omega.terms()) om.add_term(b, Polynomial::constant(m.ring, c));
  const auto w = wedge(p, om);
  std::vector<Polynomial> out;
  constexpr Blade full = (1u << kDim) - 1;
  for (int r = 0; r < kDim; ++r) {
    const Blade b = static_cast<Blade>(full & ~(1u << r));
    auto it = w.terms().find(b);
    out.push_back(it == w.terms().end() ? Polynomial(m.ring) : it->second);
  }
  return out;
}

Form form_for(PresentationKind kind, const mpq_class& parameter) {
  switch (kind) {
    case PresentationKind::G2:
      return omega_g2();
    case PresentationKind::Ghat:
      return omega0();
    case PresentationKind::family_t:
      return omega_t(parameter);
    case PresentationKind::family_lambda:
      return omega_lambda(parameter);
  }
  throw std::invalid_argument("unknown presentation");
}

CrossValidation cross_validate(PresentationKind kind, const CoefficientField& field, const mpq_class& parameter,
                               const GroebnerOptions& options) {
  CrossValidation out;
  const auto m = build_presentation(kind, field, parameter);
  out.name = m.name;
  out.asymmetries = m.asymmetries;
  for (const auto& d : isotropy_defect(m, form_for(kind, parameter))) {
    if (!d.is_zero()) out.defect.push_back(d.to_string());
  }
  out.pfaffian = hilbert_data(pfaffian_ideal(m), options);
  out.intrinsic = hilbert_data(isotropic_variety_ideal(form_for(kind, parameter), field), options);
  out.ok = out.defect.empty() && out.pfaffian.same_polynomial(out.intrinsic);
  return out;
}

std::string to_string(CurveVariant v) {
  switch (v) {
    case CurveVariant::C:
      return "C";
    case CurveVariant::C0:
      return "C0";
    case CurveVariant::C1:
      return "C1";
    case CurveVariant::C2:
      return "C2";
  }
  return "?";
}

Ideal curve_ideal(CurveVariant v, const CoefficientField& field) {
  const RingPtr ring = p5_ring(field);
  std::vector<std::string> gens = {"u", "v"};
  switch (v) {
    case CurveVariant::C:
      gens.insert(gens.end(), {"x^2-y*t", "x*y-z*t", "y^2-x*z"});
      break;
    case CurveVariant::C0:
      gens.insert(gens.end(), {"x^2-y*t", "z*t", "x*z"});
      break;
    case CurveVariant::C1:
      gens.insert(gens.end(), {"y*t", "z*t", "x*z"});
      break;
    case CurveVariant::C2:
      gens.insert(gens.end(), {"x*y", "y*z", "z*x"});
      break;
  }
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(parse_polynomial(g, ring));
  return Ideal(ring, std::move(polys));
}

Ideal lambda_curve_ideal(const mpq_class& lambda, const CoefficientField& field) {
  const RingPtr ring = p5_ring(field);
  auto var = [&](const char* n) { return Polynomial::variable(ring, n); };
  auto c = [&](const mpq_class& q) { return Polynomial::constant(ring, q); };
  const Polynomial x = var("x"), y = var("y"), z = var("z"), t = var("t");
  return Ideal(ring, {var("u"), var("v"), c(lambda) * x * x - y * t, c(lambda * lambda) * x * y - z * t,
                      c(lambda) * y * y - x * z});
}

std::vector<Polynomial> quadrics_through(const Ideal& curve) { return graded_piece(curve, 2); }

std::vector<Polynomial> ghat_coordinates(const CoefficientField& field, bool literal_sign) {
  const RingPtr ring = p5_ring(field);
  const std::vector<std::string> text = {"u*y", "v*y", "y*t-x^2", "-v*x", "u*x", "y^2-x*z", "u*v",
                                         "-u^2", "u*z", "v^2", "-x*y+z*t", "v*z", "v*t",
                                         literal_sign ? "u*t" : "-u*t"};
  std::vector<Polynomial> out;
  for (const auto& s : text) out.push_back(parse_polynomial(s, ring));
  return out;
}

std::vector<Polynomial> lambda_coordinates(const mpq_class& lambda, const CoefficientField& field) {
  auto out = ghat_coordinates(field);
  const RingPtr ring = out[0].ring();
  auto var = [&](const char* n) { return Polynomial::variable(ring, n); };
  const Polynomial x = var("x"), y = var("y"), z = var("z"), t = var("t");
  const Polynomial l = Polynomial::constant(ring, lambda);
  out[2] = y * t - l * x * x;
  out[5] = l * y * y - x * z;
  out[10] = z * t - l * l * x * y;
  return out;
}

ParametrizationCheck verify_parametrization(const SkewPresentation& m, std::span<const Polynomial> coords) {
  if (coords.size() != m.ring->nvars()) throw std::invalid_argument("coordinate count mismatch");
  ParametrizationCheck out;
  out.vacuous = std::all_of(coords.begin(), coords.end(), [](const Polynomial& p) { return p.is_zero(); });
  const auto sub = m.substitute(coords);
  const std::size_t n = sub.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          const Polynomial pf = pfaffian4(sub, i, j, k, l);
          if (pf.is_zero()) continue;
          ++out.nonzero_pfaffians;
          if (!out.counterexample) {
            std::ostringstream os;
            os << "Pf(" << i + 1 << "," << j + 1 << "," << k + 1 << "," << l + 1 << ") = " << pf.to_string();
            out.counterexample = os.str();
          }
        }
  out.identically_zero = out.nonzero_pfaffians == 0;
  return out;
}

std::vector<Polynomial> projection_minors(const RingPtr& letters) {
  auto var = [&](const char* n) { return Polynomial::variable(letters, n); };
  const std::vector<Polynomial> top = {var("e"), var("g"), var("h"), var("i"), var("a"), -var("n")};
  const std::vector<Polynomial> bottom = {-var("d"), var("j"), -var("g"), var("l"), var("b"), var("m")};
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < top.size(); ++i)
    for (std::size_t j = i + 1; j < top.size(); ++j) out.push_back(top[i] * bottom[j] - top[j] * bottom[i]);
  return out;
}

Ideal projection_minor_ideal(const CoefficientField& field) {
  std::vector<std::string> kept;
  for (const auto& n : letter_names()) {
    if (n != "c" && n != "k" && n != "f") kept.push_back(n);
  }
  return restrict_to(Ideal(letters_ring(field), projection_minors(letters_ring(field))), kept);
}

Ideal projection_image(const Ideal& ghat, const GroebnerOptions& options) {
  const std::vector<std::string> drop = {"c", "k", "f"};
  return elimination_ideal(ghat, drop, options);
}

Ideal linear_section(const Ideal& ideal, std::span<const Polynomial> forms) {
  for (const auto& f : forms) {
    if (!f.is_homogeneous()) throw std::invalid_argument("linear_section: forms must be homogeneous");
  }
  return ideal.with_generators(forms);
}

namespace {

Ideal add_letters(const Ideal& ideal, std::initializer_list<const char*> names) {
  std::vector<Polynomial> extra;
  for (const char* n : names) extra.push_back(Polynomial::variable(ideal.ring(), n));
  return linear_section(ideal, extra);
}

}  // namespace

Ideal divisor_D(const Ideal& ghat) { return add_letters(ghat, {"g", "h", "j"}); }

Ideal fano_F(const Ideal& ghat) {
  return restrict_to(add_letters(ghat, {"a", "e", "g", "h", "i", "n"}), {"b", "c", "d", "f", "j", "l", "m", "k"});
}

Ideal fano_Fprime(const Ideal& ghat) {
  return restrict_to(add_letters(ghat, {"b", "d", "g", "j", "l", "m"}), {"e", "h", "i", "a", "n", "c", "k", "f"});
}

Ideal singular_plane_ideal(const RingPtr& letters) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < letters->nvars(); ++i) {
    const auto& n = letters->variable(i);
    if (n != "c" && n != "k" && n != "f") gens.push_back(Polynomial::variable(letters, i));
  }
  return Ideal(letters, std::move(gens));
}

std::vector<std::uint32_t> sample_parametrized_point(std::span<const Polynomial> coords, std::uint32_t p,
                                                     std::mt19937_64& rng) {
  if (coords.empty()) throw std::invalid_argument("no coordinates");
  const PrimeFieldOps ops{p};
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  const std::size_t n = coords[0].ring()->nvars();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<std::uint32_t> src(n);
    for (auto& x : src) x = dist(rng);
    std::vector<std::uint32_t> out;
    bool nonzero = false;
    for (const auto& c : coords) {
      out.push_back(evaluate(c, std::span<const std::uint32_t>(src), ops));
      nonzero = nonzero || out.back() != 0;
    }
    if (nonzero) return out;
  }
  throw std::runtime_error("sample_parametrized_point: only base points found");
}

std::vector<std::uint32_t> sample_isotropic_bivector(const Form& omega, std::uint32_t p, std::mt19937_64& rng) {
  if (omega.grade() != 4) throw std::invalid_argument("sample_isotropic_bivector needs a four-form");
  const PrimeFieldOps ops{p};
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  // phi_v1(e_j) = v1 ^ e_j ^ omega, precomputed per (i, j) as a 7-vector.
  std::vector<std::vector<std::vector<std::uint32_t>>> table(kDim, std::vector<std::vector<std::uint32_t>>(kDim));
  for (int i = 0; i < kDim; ++i) {
    for (int j = 0; j < kDim; ++j) {
      std::vector<std::uint32_t> col(kDim, 0);
      if (i != j) {
        const Form w = wedge(wedge(basis_form({i + 1}), basis_form({j + 1})), omega);
        for (const auto& [b, c] : w.terms()) {
          const int missing = std::countr_zero(static_cast<unsigned>(static_cast<Blade>(~b) & 0x7f));
          col[missing] = ops.from_mpq(c);
        }
      }
      table[i][j] = std::move(col);
    }
  }
  for (int line = 0; line < 200; ++line) {
    std::vector<std::uint32_t> a(kDim), b(kDim);
    for (auto& x : a) x = dist(rng);
    for (auto& x : b) x = dist(rng);
    const std::uint32_t start = dist(rng);
    for (std::uint32_t step = 0; step < p; ++step) {
      const std::uint32_t s = ops.add(start, step);
      std::vector<std::uint32_t> v1(kDim);
      for (int i = 0; i < kDim; ++i) v1[i] = ops.add(a[i], ops.mul(s, b[i]));
      linalg::Matrix<PrimeFieldOps> phi(kDim, kDim, ops);
      for (int j = 0; j < kDim; ++j) {
        for (int i = 0; i < kDim; ++i) {
          if (v1[i] == 0) continue;
          for (int r = 0; r < kDim; ++r) phi.at(r, j) = ops.add(phi.at(r, j), ops.mul(v1[i], table[i][j][r]));
        }
      }
      const auto ker = linalg::kernel(phi, ops);
      if (ker.size() < 2) continue;
      // pick a kernel vector not proportional to v1
      for (const auto& v2 : ker) {
        std::vector<std::uint32_t> pl;
        bool nonzero = false;
        for (int i = 0; i < kDim; ++i) {
          for (int j = i + 1; j < kDim; ++j) {
            pl.push_back(ops.sub(ops.mul(v1[i], v2[j]), ops.mul(v1[j], v2[i])));
            nonzero = nonzero || pl.back() != 0;
          }
        }
        if (nonzero) return pl;
      }
    }
  }
  throw std::runtime_error("sample_isotropic_bivector: no isotropic plane found");
}

std::vector<std::uint32_t> letters_from_plucker(const SkewPresentation& m, std::span<const std::uint32_t> plucker,
                                                std::uint32_t p) {
  const PrimeFieldOps ops{p};
  const auto& s = plucker_sign_twist();
  const std::size_t n = m.ring->nvars();
  std::vector<std::optional<std::uint32_t>> value(n);
  // entry (i,j) of the matrix has value s_i s_j p_ij
  auto entry = [&](std::size_t i, std::size_t j) {
    std::size_t col = 0;
    for (std::size_t a = 0; a < i; ++a) col += kDim - 1 - a;
    col += j - i - 1;
    const std::uint32_t v = plucker[col];
    return s[i] * s[j] > 0 ? v : ops.neg(v);
  };
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const Polynomial& e = m.at(i, j);
      if (e.size() != 1 || e.total_degree() != 1) continue;
      const Term& t = e.leading_term();
      std::size_t var = 0;
      while (t.mono[var] == 0) ++var;
      if (!value[var]) value[var] = ops.mul(entry(i, j), ops.inv(ops.from_mpq(t.coeff)));
    }
  }
  std::vector<std::uint32_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!value[v]) throw std::runtime_error("letter " + m.ring->variable(v) + " has no single-entry position");
    out.push_back(*value[v]);
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (evaluate(m.at(i, j), std::span<const std::uint32_t>(out), ops) != entry(i, j)) {
        throw std::runtime_error("bivector is not in the span of the presentation");
      }
    }
  }
  return out;
}

SmoothnessProbe smoothness_probe(const Ideal& ideal, std::size_t expected_codim,
                                 const std::vector<std::vector<std::uint32_t>>& points) {
  const PrimeFieldOps ops = prime_ops(ideal.ring());
  SmoothnessProbe out;
  for (const auto& pt : points) {
    const std::span<const std::uint32_t> view(pt);
    for (const auto& g : ideal.generators()) {
      if (evaluate(g, view, ops) != 0) throw std::invalid_argument("smoothness_probe: point is not on the variety");
    }
    const std::size_t r = jacobian_rank(std::span<const Polynomial>(ideal.generators()), view, ops);
    out.ranks.push_back(r);
    ++out.points;
    if (r == expected_codim) {
      ++out.smooth;
    } else {
      ++out.singular;
    }
  }
  return out;
}

Polynomial random_form(const RingPtr& ring, int degree, std::mt19937_64& rng) {
  const PrimeFieldOps ops = prime_ops(ring);
  std::uniform_int_distribution<std::uint32_t> dist(0, ops.p - 1);
  std::vector<Term> terms;
  for (auto& m : monomials_of_degree(ring->nvars(), degree)) {
    terms.push_back({mpq_class(static_cast<unsigned long>(dist(rng))), std::move(m)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

NodeReport node_count(const Ideal& ideal, const std::vector<std::vector<std::size_t>>& planes,
                      std::span<const Polynomial> coords, std::uint64_t seed, std::size_t probes,
                      const GroebnerOptions& options) {
  const RingPtr ring = ideal.ring();
  const PrimeFieldOps ops = prime_ops(ring);
  const std::uint32_t p = ops.p;
  const auto qops = QuadraticExtensionOps::for_prime(p);
  const std::size_t n = ring->nvars();
  std::mt19937_64 rng(seed);

  const HilbertData base = hilbert_data(ideal, options);
  NodeReport out;
  out.expected_rank = n - 1 - static_cast<std::size_t>(base.dimension) + 2;

  constexpr std::size_t kMaxResamples = 5;
  for (;; ++out.resamples) {
    if (out.resamples > kMaxResamples) throw std::runtime_error("node_count: no generic section found");
    const Polynomial h = random_form(ring, 1, rng);
    const Polynomial q = random_form(ring, 2, rng);
    out.h_text = h.to_string();
    out.q_text = q.to_string();
    out.points_found = 0;
    out.count = 0;
    out.ranks.clear();

    const std::vector<Polynomial> hq = {h, q};
    const Ideal section = linear_section(ideal, hq);
    const HilbertData sd = hilbert_data(section, options);
    out.section_dimension_ok = sd.dimension == base.dimension - 2;
    out.section_degree = sd.degree;
    if (!out.section_dimension_ok) continue;

    std::vector<Polynomial> jac_gens = section.generators();
    bool generic = true;
    for (const auto& plane : planes) {
      if (plane.size() != 3) throw std::invalid_argument("node_count: planes are spanned by three coordinates");
      // restrict H and Q to the plane
      auto at = [&](const std::vector<std::uint32_t>& xyz, const Polynomial& f) {
        std::vector<std::uint32_t> full(n, 0);
        for (std::size_t s = 0; s < 3; ++s) full[plane[s]] = xyz[s];
        return evaluate(f, std::span<const std::uint32_t>(full), ops);
      };
      linalg::Matrix<PrimeFieldOps> hrow(1, 3, ops);
      for (std::size_t s = 0; s < 3; ++s) {
        std::vector<std::uint32_t> unit(3, 0);
        unit[s] = 1;
        hrow.at(0, s) = at(unit, h);
      }
      const auto line = linalg::kernel(hrow, ops);
      if (line.size() != 2) {
        generic = false;
        break;
      }
      const auto& p0 = line[0];
      const auto& p1 = line[1];
      std::vector<std::uint32_t> sum(3);
      for (std::size_t s = 0; s < 3; ++s) sum[s] = ops.add(p0[s], p1[s]);
      const std::uint32_t qa = at(p0, q), qc = at(p1, q);
      const std::uint32_t qb = ops.sub(ops.sub(at(sum, q), qa), qc);
      const std::uint32_t disc = ops.sub(ops.mul(qb, qb), ops.mul(4, ops.mul(qa, qc)));
      if (qa == 0 || disc == 0) {
        generic = false;
        break;
      }
      std::vector<Polynomial> plane_gens = {h, q};
      for (std::size_t v = 0; v < n; ++v) {
        if (std::find(plane.begin(), plane.end(), v) == plane.end()) plane_gens.push_back(Polynomial::variable(ring, v));
      }
      const HilbertData pd = hilbert_data(Ideal(ring, plane_gens), options);
      if (pd.dimension != 0) {
        generic = false;
        break;
      }

      // sigma = (-B +- sqrt(disc)) / 2A in F_{p^2}; point sigma*P0 + P1
      const auto root = qops.sqrt(disc);
      const auto inv2a = qops.from_base(ops.inv(ops.mul(2, qa)));
      for (int sign : {1, -1}) {
        const auto num = qops.add(qops.from_base(ops.neg(qb)), sign > 0 ? root : qops.neg(root));
        const auto sigma = qops.mul(num, inv2a);
        std::vector<QuadraticExtensionOps::Elem> pt(n, qops.zero());
        for (std::size_t s = 0; s < 3; ++s) {
          pt[plane[s]] = qops.add(qops.mul(sigma, qops.from_base(p0[s])), qops.from_base(p1[s]));
        }
        const std::span<const QuadraticExtensionOps::Elem> view(pt);
        for (const auto& g : jac_gens) {
          if (!qops.is_zero(evaluate(g, view, qops))) throw std::runtime_error("node_count: plane is not contained in the variety");
        }
        out.ranks.push_back(jacobian_rank(std::span<const Polynomial>(jac_gens), view, qops));
        ++out.points_found;
      }
      out.count += pd.degree->get_ui();
    }
    if (!generic) continue;
    break;
  }

  if (!coords.empty() && probes > 0) {
    const RingPtr src = coords[0].ring();
    const std::size_t m = src->nvars();
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    const Polynomial h = parse_polynomial(out.h_text, ring);
    const Polynomial q = parse_polynomial(out.q_text, ring);
    std::vector<Polynomial> jac_gens = ideal.generators();
    jac_gens.push_back(h);
    jac_gens.push_back(q);
    auto image = [&](const std::vector<std::uint32_t>& u) {
      std::vector<std::uint32_t> x;
      for (const auto& c : coords) x.push_back(evaluate(c, std::span<const std::uint32_t>(u), ops));
      return x;
    };
    auto on_planes = [&](const std::vector<std::uint32_t>& x) {
      for (const auto& plane : planes) {
        bool inside = true;
        for (std::size_t v = 0; v < n && inside; ++v) {
          if (x[v] != 0 && std::find(plane.begin(), plane.end(), v) == plane.end()) inside = false;
        }
        if (inside) return true;
      }
      return false;
    };
    std::size_t attempts = 0;
    while (out.probe_points < probes && attempts < 50 * probes) {
      ++attempts;
      // random plane A + alpha B + beta C of the source; H o coords is quadratic in beta
      std::vector<std::uint32_t> a(m), b(m), c(m);
      for (auto& v : a) v = dist(rng);
      for (auto& v : b) v = dist(rng);
      for (auto& v : c) v = dist(rng);
      const std::uint32_t start = dist(rng);
      for (std::uint32_t step = 0; step < p && out.probe_points < probes; ++step) {
        const std::uint32_t alpha = ops.add(start, step);
        std::vector<std::uint32_t> base_pt(m);
        for (std::size_t i = 0; i < m; ++i) base_pt[i] = ops.add(a[i], ops.mul(alpha, b[i]));
        auto along = [&](std::uint32_t beta) {
          std::vector<std::uint32_t> u(m);
          for (std::size_t i = 0; i < m; ++i) u[i] = ops.add(base_pt[i], ops.mul(beta, c[i]));
          return u;
        };
        auto hval = [&](std::uint32_t beta) {
          const auto x = image(along(beta));
          return evaluate(h, std::span<const std::uint32_t>(x), ops);
        };
        const std::uint32_t f0 = hval(0), f1 = hval(1), fm = hval(p - 1);
        // f(beta) = A beta^2 + B beta + C
        const std::uint32_t cc = f0;
        const std::uint32_t inv2 = ops.inv(2);
        const std::uint32_t aa = ops.mul(ops.sub(ops.add(f1, fm), ops.mul(2, f0)), inv2);
        const std::uint32_t bb = ops.mul(ops.sub(f1, fm), inv2);
        if (aa == 0) continue;
        const std::uint32_t disc = ops.sub(ops.mul(bb, bb), ops.mul(4, ops.mul(aa, cc)));
        if (!is_square_mod(disc, p)) continue;
        const std::uint32_t r = sqrt_mod(disc, p);
        for (std::uint32_t root : {r, ops.neg(r)}) {
          const std::uint32_t beta = ops.mul(ops.add(ops.neg(bb), root), ops.inv(ops.mul(2, aa)));
          const auto x = image(along(beta));
          const std::span<const std::uint32_t> view(x);
          if (evaluate(q, view, ops) != 0) continue;
          if (std::all_of(x.begin(), x.end(), [](std::uint32_t v) { return v == 0; }) || on_planes(x)) continue;
          ++out.probe_points;
          if (jacobian_rank(std::span<const Polynomial>(jac_gens), view, ops) == out.expected_rank) ++out.probe_smooth;
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace g2flat
