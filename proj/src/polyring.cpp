#include "g2flat/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace g2flat {

// ---------------------------------------------------------------- orders

MonomialOrder MonomialOrder::parse(const std::string& text) {
  if (text == "grevlex") return grevlex();
  if (text == "lex") return lex();
  throw std::invalid_argument("unknown monomial order: " + text);
}

std::string MonomialOrder::to_string() const {
  switch (kind) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::block: return "block(" + std::to_string(front_block) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------- monomials

Monomial::Monomial(std::vector<std::int32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e > kMaxExponent) throw std::overflow_error("exponent overflow");
  }
}

long Monomial::degree() const {
  long d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::int64_t s = static_cast<std::int64_t>(exps_[i]) + other.exps_[i];
    if (s > kMaxExponent) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::int32_t>(s);
  }
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (divisor.exps_[i] > exps_[i]) throw std::invalid_argument("monomial does not divide");
    r.exps_[i] = exps_[i] - divisor.exps_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- rings

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

PolyRing::PolyRing(std::vector<std::string> vars, CoefficientField field, MonomialOrder order,
                   std::vector<int> weights)
    : vars_(std::move(vars)), field_(field), order_(order), weights_(std::move(weights)) {}

RingPtr PolyRing::make(std::vector<std::string> variables, CoefficientField field,
                       MonomialOrder order, std::vector<int> weights) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!valid_identifier(v)) throw std::invalid_argument("invalid variable name: '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name: " + v);
  }
  if (weights.empty()) weights.assign(variables.size(), 1);
  if (weights.size() != variables.size()) throw std::invalid_argument("weight count mismatch");
  for (int w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  }
  if (order.kind == OrderKind::block &&
      (order.front_block == 0 || order.front_block >= variables.size())) {
    throw std::invalid_argument("block order must split the variables into two nonempty blocks");
  }
  if (order.kind != OrderKind::block) order.front_block = 0;
  return RingPtr(new PolyRing(std::move(variables), field, order, std::move(weights)));
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t PolyRing::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw RingMismatch("unknown variable: " + std::string(name));
  return *idx;
}

bool PolyRing::standard_grading() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

long PolyRing::weighted_degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(weights_[i]) * m[i];
  return d;
}

namespace {

// grevlex restricted to variables [lo, hi)
int compare_grevlex_range(const Monomial& a, const Monomial& b, const std::vector<int>& w,
                          std::size_t lo, std::size_t hi) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += static_cast<long>(w[i]) * a[i];
    db += static_cast<long>(w[i]) * b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  switch (order_.kind) {
    case OrderKind::grevlex:
      return compare_grevlex_range(a, b, weights_, 0, vars_.size());
    case OrderKind::lex:
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::block: {
      const int c = compare_grevlex_range(a, b, weights_, 0, order_.front_block);
      if (c != 0) return c;
      return compare_grevlex_range(a, b, weights_, order_.front_block, vars_.size());
    }
  }
  return 0;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return make(vars_, field_, order, weights_);
}

RingPtr PolyRing::with_field(CoefficientField field) const {
  return make(vars_, field, order_, weights_);
}

bool PolyRing::same_as(const PolyRing& other) const {
  return vars_ == other.vars_ && field_ == other.field_ && order_ == other.order_ &&
         weights_ == other.weights_;
}

std::string PolyRing::describe() const {
  std::string s;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += vars_[i];
  }
  return s + " over " + field_.to_string() + " order " + order_.to_string();
}

// ---------------------------------------------------------------- polynomials

namespace {

void canonicalize(const PolyRing& ring, std::vector<Term>& terms) {
  for (auto& t : terms) t.coeff = ring.field().normalize(t.coeff);
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return ring.compare(x.mono, y.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && ring.compare(out.back().mono, t.mono) == 0) {
      out.back().coeff = ring.field().normalize(out.back().coeff + t.coeff);
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.coeff) == 0; });
  terms = std::move(out);
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  const std::size_t n = ring->nvars();
  return from_terms(std::move(ring), {Term{c, Monomial(n)}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index");
  Monomial m(ring->nvars());
  m[index] = 1;
  return from_terms(std::move(ring), {Term{1, m}});
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  const std::size_t idx = ring->require_index(name);
  return variable(std::move(ring), idx);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Coeff& c) {
  if (m.size() != ring->nvars()) throw RingMismatch("monomial arity mismatch");
  return from_terms(std::move(ring), {Term{c, m}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw RingMismatch("monomial arity mismatch");
  }
  canonicalize(*ring, terms);
  return Polynomial(std::move(ring), std::move(terms));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const long d = ring_->weighted_degree(terms_[0].mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return ring_->weighted_degree(t.mono) == d; });
}

bool Polynomial::check_invariants() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (sgn(terms_[i].coeff) == 0) return false;
    if (terms_[i].mono.size() != ring_->nvars()) return false;
    if (ring_->field().normalize(terms_[i].coeff) != terms_[i].coeff) return false;
    if (i > 0 && ring_->compare(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
  }
  return true;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ != other.ring_ && !ring_->same_as(*other.ring_)) {
    throw RingMismatch("operands live in different rings");
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_ring(other);
  const auto& field = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == other.terms_.size()) c = 1;
    else c = ring_->compare(terms_[i].mono, other.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(other.terms_[j++]);
    } else {
      Coeff s = field.normalize(terms_[i].coeff + other.terms_[j].coeff);
      if (sgn(s) != 0) out.push_back(Term{std::move(s), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const { return scale(-1); }

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::scale(const Coeff& c) const {
  const auto& field = ring_->field();
  const Coeff cc = field.normalize(c);
  if (sgn(cc) == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{field.normalize(t.coeff * cc), t.mono});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Coeff& c, const Monomial& m) const {
  const auto& field = ring_->field();
  const Coeff cc = field.normalize(c);
  if (sgn(cc) == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // multiplication by a monomial preserves the order
  for (const auto& t : terms_) out.push_back(Term{field.normalize(t.coeff * cc), t.mono * m});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  const Polynomial& small = terms_.size() <= other.terms_.size() ? *this : other;
  const Polynomial& big = terms_.size() <= other.terms_.size() ? other : *this;
  Polynomial acc(ring_);
  for (const auto& t : small.terms_) acc = acc + big.mul_term(t.coeff, t.mono);
  return acc;
}

Polynomial Polynomial::pow(long exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative power");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial Polynomial::make_monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inverse(terms_[0].coeff));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw std::out_of_range("variable index");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Monomial m = t.mono;
    m[var] -= 1;
    out.push_back(Term{t.coeff * t.mono[var], m});
  }
  return from_terms(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (ring_ != other.ring_ && !ring_->same_as(*other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != other.terms_[i].coeff || !(terms_[i].mono == other.terms_[i].mono)) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
  std::vector<std::size_t> idx(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    auto j = target->index_of(ring_->variable(i));
    if (!j) {
      bool used = std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[i] > 0; });
      if (used) throw RingMismatch("variable " + ring_->variable(i) + " missing in target ring");
      idx[i] = target->nvars();
    } else {
      idx[i] = *j;
    }
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] > 0) m[idx[i]] = t.mono[i];
    }
    out.push_back(Term{t.coeff, m});
  }
  return from_terms(target, std::move(out));
}

namespace {

std::string coeff_text(const Coeff& c, const CoefficientField& field) {
  if (field.is_prime_field()) {
    // symmetric representative keeps printed output readable
    const long p = field.modulus();
    long v = c.get_num().get_si();
    if (v > p / 2) v -= p;
    return std::to_string(v);
  }
  return c.get_str();
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = coeff_text(t.coeff, ring_->field());
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c = c.substr(1);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variable(i);
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out << c;
    } else if (c == "1") {
      out << mono;
    } else {
      out << c << "*" << mono;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 6) fail("exponent too large");
      return base.pow(std::stol(digits));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Polynomial number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string lit(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) fail("malformed rational literal");
      lit += "/" + std::string(text_.substr(dstart, pos_ - dstart));
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || std::isalpha(static_cast<unsigned char>(text_[pos_])))) {
      fail("coefficient must be an integer or rational literal");
    }
    mpq_class q;
    if (q.set_str(lit, 10) != 0) fail("malformed literal");
    if (q.get_den() == 0) fail("zero denominator");
    q.canonicalize();
    try {
      return Polynomial::constant(ring_, q);
    } catch (const std::domain_error&) {
      fail("denominator vanishes in " + ring_->field().to_string());
    }
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

// ---------------------------------------------------------------- substitution

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  const auto& src = *f.ring();
  if (images.size() != src.nvars()) {
    throw std::invalid_argument("substitute: expected " + std::to_string(src.nvars()) +
                                " images, got " + std::to_string(images.size()));
  }
  if (images.empty()) throw std::invalid_argument("substitute: ring without variables");
  const RingPtr& target = images[0].ring();
  for (const auto& img : images) {
    if (img.ring() != target && !img.ring()->same_as(*target)) {
      throw RingMismatch("substitute: images live in different rings");
    }
  }
  // powers[i][e] = images[i]^e, built lazily
  std::vector<std::vector<Polynomial>> powers(src.nvars());
  auto power_of = [&](std::size_t i, std::int32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<std::int32_t>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial acc(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < src.nvars() && !term.is_zero(); ++i) {
      if (t.mono[i] > 0) term = term * power_of(i, t.mono[i]);
    }
    acc = acc + term;
  }
  return acc;
}

// ---------------------------------------------------------------- ideal files

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

RingPtr parse_ring_line(const std::string& line) {
  // ring: <v1,...,vk> over <field> order <order>
  std::string rest = trim(line.substr(5));
  const auto over = rest.find(" over ");
  if (over == std::string::npos) throw ParseError("ring line lacks 'over': " + line);
  std::string vars_text = trim(rest.substr(0, over));
  std::string tail = trim(rest.substr(over + 6));
  if (!vars_text.empty() && vars_text.front() == '<' && vars_text.back() == '>') {
    vars_text = vars_text.substr(1, vars_text.size() - 2);
  }
  std::vector<std::string> vars;
  std::stringstream vs(vars_text);
  for (std::string v; std::getline(vs, v, ',');) vars.push_back(trim(v));
  std::string field_text = tail, order_text = "grevlex";
  const auto ord = tail.find(" order ");
  if (ord != std::string::npos) {
    field_text = trim(tail.substr(0, ord));
    order_text = trim(tail.substr(ord + 7));
  }
  auto strip = [](std::string s) {
    if (!s.empty() && s.front() == '<' && s.back() == '>') return s.substr(1, s.size() - 2);
    return s;
  };
  return PolyRing::make(vars, CoefficientField::parse(strip(field_text)),
                        MonomialOrder::parse(strip(order_text)));
}

}  // namespace

IdealFile read_ideal_file(std::istream& in) {
  IdealFile file;
  std::string line;
  while (std::getline(in, line)) {
    std::string body = line;
    const auto hash = body.find('#');
    if (hash != std::string::npos) {
      file.comments.push_back(trim(body.substr(hash + 1)));
      body = body.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;
    if (!file.ring) {
      if (body.rfind("ring:", 0) != 0) throw ParseError("ideal file must start with a ring: line");
      file.ring = parse_ring_line(body);
      continue;
    }
    file.generators.push_back(parse_polynomial(body, file.ring));
  }
  if (!file.ring) throw ParseError("ideal file has no ring: line");
  return file;
}

IdealFile read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_ideal_file(in);
}

void write_ideal_file(std::ostream& out, const RingPtr& ring, std::span<const Polynomial> gens,
                      std::span<const std::string> header_comments) {
  for (const auto& c : header_comments) out << "# " << c << "\n";
  out << "ring: ";
  for (std::size_t i = 0; i < ring->nvars(); ++i) out << (i ? "," : "") << ring->variable(i);
  const auto& order = ring->order();
  out << " over " << ring->field().to_string() << " order "
      << (order.kind == OrderKind::lex ? "lex" : "grevlex") << "\n";
  for (const auto& g : gens) out << g.to_string() << "\n";
}

}  // namespace g2flat
