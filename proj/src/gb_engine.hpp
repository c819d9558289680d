// Internal Buchberger engine. Monomials are packed into fixed-width exponent
// arrays; the public Polynomial type is converted at the boundary.
#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "g2flat/groebner.hpp"
#include "g2flat/polyring.hpp"

namespace g2flat::detail {

constexpr std::size_t kMaxVars = 32;
constexpr std::uint32_t kMaxPackedExponent = 255;

struct EMono {
  std::uint32_t deg = 0;        // weighted total degree
  std::uint32_t deg_front = 0;  // weighted degree of the front block
  std::uint32_t mask = 0;       // bit i set iff e[i] > 0
  std::array<std::uint8_t, kMaxVars> e{};
};

struct OrderSpec {
  OrderKind kind = OrderKind::grevlex;
  std::size_t n = 0;
  std::size_t front = 0;
  std::array<std::uint32_t, kMaxVars> w{};

  static OrderSpec from_ring(const PolyRing& ring) {
    if (ring.nvars() > kMaxVars) {
      throw std::invalid_argument("Groebner engine supports at most 32 variables");
    }
    OrderSpec s;
    s.kind = ring.order().kind;
    s.n = ring.nvars();
    s.front = ring.order().front_block;
    for (std::size_t i = 0; i < s.n; ++i) s.w[i] = static_cast<std::uint32_t>(ring.weights()[i]);
    return s;
  }

  void finish(EMono& m) const {
    std::uint32_t d = 0, df = 0, mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      d += w[i] * m.e[i];
      if (i < front) df += w[i] * m.e[i];
      if (m.e[i]) mask |= (1u << i);
    }
    m.deg = d;
    m.deg_front = df;
    m.mask = mask;
  }

  int compare(const EMono& a, const EMono& b) const {
    switch (kind) {
      case OrderKind::grevlex:
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        for (std::size_t i = n; i-- > 0;) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
      case OrderKind::lex:
        for (std::size_t i = 0; i < n; ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        }
        return 0;
      case OrderKind::block: {
        if (a.deg_front != b.deg_front) return a.deg_front < b.deg_front ? -1 : 1;
        for (std::size_t i = front; i-- > 0;) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        const std::uint32_t ra = a.deg - a.deg_front, rb = b.deg - b.deg_front;
        if (ra != rb) return ra < rb ? -1 : 1;
        for (std::size_t i = n; i-- > front;) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
      }
    }
    return 0;
  }

  EMono mul(const EMono& a, const EMono& b) const {
    EMono r;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t s = std::uint32_t(a.e[i]) + b.e[i];
      if (s > kMaxPackedExponent) throw std::overflow_error("exponent overflow in Groebner engine");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = a.deg + b.deg;
    r.deg_front = a.deg_front + b.deg_front;
    r.mask = a.mask | b.mask;
    return r;
  }

  EMono quotient(const EMono& a, const EMono& b) const {
    EMono r;
    for (std::size_t i = 0; i < n; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    finish(r);
    return r;
  }

  EMono lcm(const EMono& a, const EMono& b) const {
    EMono r;
    for (std::size_t i = 0; i < n; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    finish(r);
    return r;
  }

  bool divides(const EMono& a, const EMono& b) const {
    if (a.mask & ~b.mask) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (a.e[i] > b.e[i]) return false;
    }
    return true;
  }

  bool equal(const EMono& a, const EMono& b) const {
    if (a.mask != b.mask || a.deg != b.deg) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (a.e[i] != b.e[i]) return false;
    }
    return true;
  }

  static bool coprime(const EMono& a, const EMono& b) { return (a.mask & b.mask) == 0; }
};

template <class Ops>
struct ETerm {
  typename Ops::Elem c;
  EMono m;
};

template <class Ops>
using EPoly = std::vector<ETerm<Ops>>;

template <class Ops>
EPoly<Ops> to_engine(const Polynomial& f, const Ops& ops, const OrderSpec& spec) {
  EPoly<Ops> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    ETerm<Ops> et{ops.from_mpq(t.coeff), {}};
    for (std::size_t i = 0; i < spec.n; ++i) {
      if (t.mono[i] > static_cast<std::int32_t>(kMaxPackedExponent)) {
        throw std::overflow_error("exponent too large for Groebner engine");
      }
      et.m.e[i] = static_cast<std::uint8_t>(t.mono[i]);
    }
    spec.finish(et.m);
    if (!ops.is_zero(et.c)) out.push_back(std::move(et));
  }
  std::sort(out.begin(), out.end(),
            [&](const ETerm<Ops>& a, const ETerm<Ops>& b) { return spec.compare(a.m, b.m) > 0; });
  return out;
}

template <class Ops>
Polynomial from_engine(const EPoly<Ops>& f, const RingPtr& ring, const Ops& ops) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f) {
    Monomial m(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) m[i] = t.m.e[i];
    terms.push_back(Term{ops.to_mpq(t.c), std::move(m)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

using Clock = std::chrono::steady_clock;

class DeadlineGuard {
 public:
  explicit DeadlineGuard(std::optional<Clock::time_point> deadline) : deadline_(deadline) {}
  void tick() {
    if (!deadline_) return;
    if (++counter_ % 256 != 0) return;
    if (Clock::now() > *deadline_) throw Timeout("Groebner computation exceeded its time budget");
  }
  void check() {
    if (deadline_ && Clock::now() > *deadline_) {
      throw Timeout("Groebner computation exceeded its time budget");
    }
  }

 private:
  std::optional<Clock::time_point> deadline_;
  std::uint64_t counter_ = 0;
};

template <class Ops>
class Engine {
 public:
  using Elem = typename Ops::Elem;
  using Poly = EPoly<Ops>;

  Engine(Ops ops, OrderSpec spec, DeadlineGuard guard) : ops_(std::move(ops)), spec_(spec), guard_(guard) {}

  void make_monic(Poly& f) const {
    if (f.empty() || ops_.is_one(f[0].c)) return;
    const Elem inv = ops_.inv(f[0].c);
    for (auto& t : f) t.c = ops_.mul(t.c, inv);
  }

  /// out = a[a_from..] - c * q * b[b_from..]
  void sub_mul(const Poly& a, std::size_t a_from, const Elem& c, const EMono& q, const Poly& b,
               std::size_t b_from, Poly& out) const {
    out.clear();
    out.reserve(a.size() - a_from + b.size() - b_from);
    std::size_t i = a_from, j = b_from;
    const Elem negc = ops_.neg(c);
    EMono bm;
    bool have_bm = false;
    while (i < a.size() || j < b.size()) {
      if (j < b.size() && !have_bm) {
        bm = spec_.mul(b[j].m, q);
        have_bm = true;
      }
      int cmp;
      if (j >= b.size()) cmp = 1;
      else if (i >= a.size()) cmp = -1;
      else cmp = spec_.compare(a[i].m, bm);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back(ETerm<Ops>{ops_.mul(negc, b[j].c), bm});
        ++j;
        have_bm = false;
      } else {
        Elem s = ops_.add(a[i].c, ops_.mul(negc, b[j].c));
        if (!ops_.is_zero(s)) out.push_back(ETerm<Ops>{std::move(s), a[i].m});
        ++i;
        ++j;
        have_bm = false;
      }
    }
  }

  const Poly* find_reducer(const EMono& m, const std::vector<const Poly*>& reducers) const {
    for (const Poly* g : reducers) {
      if (spec_.divides((*g)[0].m, m)) return g;
    }
    return nullptr;
  }

  /// Full reduction of f by monic reducers. `sugar` tracks the sugar degree.
  Poly reduce(Poly f, const std::vector<const Poly*>& reducers, std::uint32_t* sugar = nullptr,
              const std::vector<std::uint32_t>* reducer_sugar = nullptr) {
    Poly result;
    Poly buffer;
    std::size_t start = 0;
    while (start < f.size()) {
      guard_.tick();
      const ETerm<Ops>& lead = f[start];
      const Poly* g = nullptr;
      std::size_t gi = 0;
      for (std::size_t k = 0; k < reducers.size(); ++k) {
        if (spec_.divides((*reducers[k])[0].m, lead.m)) {
          g = reducers[k];
          gi = k;
          break;
        }
      }
      if (!g) {
        result.push_back(lead);
        ++start;
        continue;
      }
      const EMono q = spec_.quotient(lead.m, (*g)[0].m);
      if (sugar && reducer_sugar) *sugar = std::max(*sugar, (*reducer_sugar)[gi] + q.deg);
      const Elem c = lead.c;
      sub_mul(f, start + 1, c, q, *g, 1, buffer);
      std::swap(f, buffer);
      start = 0;
    }
    return result;
  }

  Poly spoly(const Poly& f, const Poly& g, const EMono& lcm) {
    const EMono qf = spec_.quotient(lcm, f[0].m);
    const EMono qg = spec_.quotient(lcm, g[0].m);
    Poly a;
    a.reserve(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) a.push_back(ETerm<Ops>{f[k].c, spec_.mul(f[k].m, qf)});
    Poly out;
    sub_mul(a, 0, ops_.one(), qg, g, 1, out);
    return out;
  }

  struct Pair {
    std::size_t i, j;
    EMono lcm;
    std::uint32_t sugar;
    bool alive;
  };

  struct Result {
    std::vector<Poly> basis;
    bool complete = true;
    std::size_t pairs_processed = 0;
    std::size_t zero_reductions = 0;
  };

  Result run(std::vector<Poly> input, std::optional<std::uint32_t> degree_bound) {
    polys_.clear();
    sugar_.clear();
    active_.clear();
    pairs_.clear();
    Result res;
    auto pair_less = [this](std::size_t a, std::size_t b) {
      // priority_queue pops the largest: invert for smallest sugar, then smallest lcm
      const Pair& x = pairs_[a];
      const Pair& y = pairs_[b];
      if (x.sugar != y.sugar) return x.sugar > y.sugar;
      const int c = spec_.compare(x.lcm, y.lcm);
      if (c != 0) return c > 0;
      if (x.j != y.j) return x.j > y.j;
      return x.i > y.i;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(pair_less)> queue(pair_less);

    // sort input by leading monomial so insertion is deterministic and cheap
    std::erase_if(input, [](const Poly& p) { return p.empty(); });
    for (auto& f : input) make_monic(f);
    std::stable_sort(input.begin(), input.end(),
                     [&](const Poly& a, const Poly& b) { return spec_.compare(a[0].m, b[0].m) < 0; });

    auto active_reducers = [&]() {
      std::vector<const Poly*> r;
      r.reserve(active_.size());
      for (std::size_t k : active_) r.push_back(&polys_[k]);
      return r;
    };
    auto active_sugars = [&]() {
      std::vector<std::uint32_t> s;
      s.reserve(active_.size());
      for (std::size_t k : active_) s.push_back(sugar_[k]);
      return s;
    };

    auto insert = [&](Poly h, std::uint32_t sugar) -> bool {
      make_monic(h);
      if (h[0].m.mask == 0) {
        // unit ideal
        res.basis = {Poly{ETerm<Ops>{ops_.one(), h[0].m}}};
        return true;
      }
      const std::size_t hn = polys_.size();
      polys_.push_back(std::move(h));
      sugar_.push_back(sugar);
      update(hn, queue);
      return false;
    };

    for (auto& f : input) {
      std::uint32_t sugar = 0;
      for (const auto& t : f) sugar = std::max(sugar, t.m.deg);
      auto reducers = active_reducers();
      Poly h = reduce(std::move(f), reducers);
      if (h.empty()) continue;
      if (insert(std::move(h), sugar)) return res;
    }

    while (!queue.empty()) {
      guard_.check();
      const std::size_t pi = queue.top();
      queue.pop();
      Pair pr = pairs_[pi];
      if (!pr.alive) continue;
      if (degree_bound && pr.sugar > *degree_bound) {
        res.complete = false;
        continue;
      }
      ++res.pairs_processed;
      Poly s = spoly(polys_[pr.i], polys_[pr.j], pr.lcm);
      std::uint32_t sugar = pr.sugar;
      auto reducers = active_reducers();
      auto sugars = active_sugars();
      Poly h = reduce(std::move(s), reducers, &sugar, &sugars);
      if (h.empty()) {
        ++res.zero_reductions;
        continue;
      }
      if (insert(std::move(h), sugar)) return res;
    }

    res.basis = interreduce();
    return res;
  }

  std::vector<Poly> interreduce() {
    std::vector<Poly> basis;
    for (std::size_t k : active_) basis.push_back(polys_[k]);
    std::sort(basis.begin(), basis.end(),
              [&](const Poly& a, const Poly& b) { return spec_.compare(a[0].m, b[0].m) < 0; });
    // drop elements whose leading monomial is divisible by another's
    std::vector<Poly> minimal;
    for (auto& g : basis) {
      bool redundant = false;
      for (const auto& h : minimal) {
        if (spec_.divides(h[0].m, g[0].m)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) minimal.push_back(std::move(g));
    }
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Poly*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(&minimal[l]);
      }
      Poly tail(minimal[k].begin() + 1, minimal[k].end());
      Poly reduced_tail = reduce(std::move(tail), others);
      Poly g;
      g.reserve(reduced_tail.size() + 1);
      g.push_back(minimal[k][0]);
      for (auto& t : reduced_tail) g.push_back(std::move(t));
      minimal[k] = std::move(g);
    }
    return minimal;
  }

  const OrderSpec& spec() const { return spec_; }
  const Ops& ops() const { return ops_; }

 private:
  template <class Queue>
  void update(std::size_t hn, Queue& queue) {
    const EMono& lh = polys_[hn][0].m;

    // new pairs {h, g} for active g
    struct Cand {
      std::size_t g;
      EMono lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(active_.size());
    for (std::size_t g : active_) {
      const EMono& lg = polys_[g][0].m;
      cands.push_back(Cand{g, spec_.lcm(lh, lg), OrderSpec::coprime(lh, lg)});
    }

    // Gebauer-Moeller: keep {h,g1} if coprime or no other candidate lcm divides it
    std::vector<std::size_t> d;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool ok = cands[a].coprime;
      if (!ok) {
        ok = true;
        for (std::size_t b = a + 1; b < cands.size() && ok; ++b) {
          if (spec_.divides(cands[b].lcm, cands[a].lcm)) ok = false;
        }
        for (std::size_t b : d) {
          if (!ok) break;
          if (spec_.divides(cands[b].lcm, cands[a].lcm)) ok = false;
        }
      }
      if (ok) d.push_back(a);
    }

    // old pairs criterion B_k
    for (auto& pr : pairs_) {
      if (!pr.alive) continue;
      if (!spec_.divides(lh, pr.lcm)) continue;
      const EMono l1 = spec_.lcm(polys_[pr.i][0].m, lh);
      const EMono l2 = spec_.lcm(polys_[pr.j][0].m, lh);
      if (!spec_.equal(l1, pr.lcm) && !spec_.equal(l2, pr.lcm)) pr.alive = false;
    }

    for (std::size_t a : d) {
      if (cands[a].coprime) continue;
      const std::size_t g = cands[a].g;
      const EMono qh = spec_.quotient(cands[a].lcm, lh);
      const EMono qg = spec_.quotient(cands[a].lcm, polys_[g][0].m);
      const std::uint32_t sugar = std::max(sugar_[hn] + qh.deg, sugar_[g] + qg.deg);
      pairs_.push_back(Pair{g, hn, cands[a].lcm, sugar, true});
      queue.push(pairs_.size() - 1);
    }

    std::vector<std::size_t> next;
    next.reserve(active_.size() + 1);
    for (std::size_t g : active_) {
      if (!spec_.divides(lh, polys_[g][0].m)) next.push_back(g);
    }
    next.push_back(hn);
    active_ = std::move(next);
  }

  Ops ops_;
  OrderSpec spec_;
  DeadlineGuard guard_;
  std::vector<Poly> polys_;
  std::vector<std::uint32_t> sugar_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace g2flat::detail
