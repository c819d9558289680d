#include "g2flat/toric.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "g2flat/linalg.hpp"

namespace g2flat {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

mpz_class det(ZMatrix a) {
  // Bareiss fraction-free elimination
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[r], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

long dot(const IVec& a, const IVec& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IVec diff(const IVec& a, const IVec& b) {
  IVec d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

std::size_t rational_rank(const std::vector<IVec>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  const RationalOps ops;
  linalg::Matrix<RationalOps> m(rows.size(), cols, ops);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  return linalg::rank(m, ops);
}

std::size_t affine_rank(const std::vector<IVec>& pts) {
  if (pts.empty()) return 0;
  std::vector<IVec> d;
  for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(diff(pts[i], pts[0]));
  return rational_rank(d, pts[0].size());
}

// Primitive normal of the hyperplane through d points in Z^d (zero if degenerate).
IVec hyperplane_normal(const std::vector<const IVec*>& pts) {
  const std::size_t d = pts[0]->size();
  ZMatrix rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<mpz_class> r;
    for (std::size_t c = 0; c < d; ++c) r.emplace_back((*pts[i])[c] - (*pts[0])[c]);
    rows.push_back(std::move(r));
  }
  std::vector<mpz_class> normal(d);
  for (std::size_t col = 0; col < d; ++col) {
    ZMatrix minor;
    for (const auto& r : rows) {
      std::vector<mpz_class> mr;
      for (std::size_t c = 0; c < d; ++c) {
        if (c != col) mr.push_back(r[c]);
      }
      minor.push_back(std::move(mr));
    }
    normal[col] = det(std::move(minor));
    if (col % 2 == 1) normal[col] = -normal[col];
  }
  mpz_class g = 0;
  for (const auto& x : normal) g = gcd(g, x);
  IVec out(d, 0);
  if (g == 0) return out;
  for (std::size_t c = 0; c < d; ++c) {
    const mpz_class v = normal[c] / g;
    if (!v.fits_slong_p()) throw std::overflow_error("facet normal too large");
    out[c] = v.get_si();
  }
  return out;
}

long lattice_length(const IVec& a, const IVec& b) {
  long g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) g = std::gcd(g, std::abs(a[i] - b[i]));
  return g;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(const std::vector<IVec>& rows) {
  if (rows.empty()) throw std::invalid_argument("polytope: no points");
  const std::size_t d = rows[0].size();
  if (d == 0) throw std::invalid_argument("polytope: rank 0");
  std::vector<IVec> pts;
  for (const auto& r : rows) {
    if (r.size() != d) throw std::invalid_argument("polytope: rows of different length");
    if (std::find(pts.begin(), pts.end(), r) == pts.end()) pts.push_back(r);
  }
  if (affine_rank(pts) != d) throw std::invalid_argument("polytope: points are not full-dimensional");

  LatticePolytope p;
  p.rank_ = d;
  std::set<std::pair<IVec, long>> seen;
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t n = pts.size();
  // enumerate d-subsets in lexicographic order
  while (true) {
    std::vector<const IVec*> sub;
    for (auto i : idx) sub.push_back(&pts[i]);
    IVec a = hyperplane_normal(sub);
    if (std::any_of(a.begin(), a.end(), [](long v) { return v != 0; })) {
      const long v0 = dot(a, pts[idx[0]]);
      bool above = true, below = true;
      for (const auto& x : pts) {
        const long v = dot(a, x);
        above = above && v >= v0;
        below = below && v <= v0;
      }
      if (above || below) {
        long off = -v0;
        if (!above) {
          for (auto& c : a) c = -c;
          off = v0;
        }
        if (seen.insert({a, off}).second) p.facets_.push_back({a, off});
      }
    }
    std::size_t k = d;
    while (k > 0 && idx[k - 1] == n - d + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(p.facets_.begin(), p.facets_.end(), [](const Facet& x, const Facet& y) {
    return std::tie(x.normal, x.offset) < std::tie(y.normal, y.offset);
  });

  for (const auto& x : pts) {
    std::vector<IVec> normals;
    for (const auto& f : p.facets_) {
      if (dot(f.normal, x) + f.offset == 0) normals.push_back(f.normal);
    }
    if (rational_rank(normals, d) == d) p.vertices_.push_back(x);
  }
  if (p.vertices_.size() > 64) throw std::invalid_argument("polytope: more than 64 vertices");

  for (const auto& f : p.facets_) {
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < p.vertices_.size(); ++v) {
      if (dot(f.normal, p.vertices_[v]) + f.offset == 0) mask |= std::uint64_t{1} << v;
    }
    p.facet_masks_.push_back(mask);
  }

  const std::uint64_t full = p.vertices_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.vertices_.size()) - 1;
  std::set<std::uint64_t> faces = {full};
  std::vector<std::uint64_t> work(p.facet_masks_.begin(), p.facet_masks_.end());
  for (auto m : work) faces.insert(m);
  while (!work.empty()) {
    const std::uint64_t m = work.back();
    work.pop_back();
    for (auto f : p.facet_masks_) {
      const std::uint64_t x = m & f;
      if (x != 0 && faces.insert(x).second) work.push_back(x);
    }
  }
  p.faces_.assign(faces.begin(), faces.end());
  for (auto m : p.faces_) {
    std::vector<IVec> vs;
    for (std::size_t v = 0; v < p.vertices_.size(); ++v) {
      if (m >> v & 1) vs.push_back(p.vertices_[v]);
    }
    p.face_dims_.push_back(static_cast<int>(affine_rank(vs)));
  }
  return p;
}

int LatticePolytope::face_dimension(std::uint64_t mask) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), mask);
  if (it == faces_.end() || *it != mask) throw std::invalid_argument("not a face");
  return face_dims_[static_cast<std::size_t>(it - faces_.begin())];
}

std::vector<std::uint64_t> LatticePolytope::faces_of_dimension(int dim) const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (face_dims_[i] == dim) out.push_back(faces_[i]);
  }
  return out;
}

std::vector<std::size_t> LatticePolytope::f_vector() const {
  std::vector<std::size_t> f(rank_, 0);
  for (auto dim : face_dims_) {
    if (dim < static_cast<int>(rank_)) ++f[static_cast<std::size_t>(dim)];
  }
  return f;
}

bool LatticePolytope::contains(const IVec& x, long dilation) const {
  for (const auto& f : facets_) {
    if (dot(f.normal, x) + dilation * f.offset < 0) return false;
  }
  return true;
}

bool LatticePolytope::strictly_contains(const IVec& x, long dilation) const {
  for (const auto& f : facets_) {
    if (dot(f.normal, x) + dilation * f.offset <= 0) return false;
  }
  return true;
}

std::vector<IVec> LatticePolytope::lattice_points(long dilation) const {
  IVec lo(rank_), hi(rank_);
  for (std::size_t c = 0; c < rank_; ++c) {
    lo[c] = hi[c] = vertices_[0][c];
    for (const auto& v : vertices_) {
      lo[c] = std::min(lo[c], v[c]);
      hi[c] = std::max(hi[c], v[c]);
    }
    lo[c] *= dilation;
    hi[c] *= dilation;
  }
  std::vector<IVec> out;
  IVec x = lo;
  while (true) {
    if (contains(x, dilation)) out.push_back(x);
    std::size_t c = 0;
    while (c < rank_ && x[c] == hi[c]) {
      x[c] = lo[c];
      ++c;
    }
    if (c == rank_) break;
    ++x[c];
  }
  return out;
}

std::vector<IVec> LatticePolytope::face_lattice_points(std::uint64_t mask) const {
  std::vector<const Facet*> tight;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if ((facet_masks_[i] & mask) == mask) tight.push_back(&facets_[i]);
  }
  std::vector<IVec> out;
  for (const auto& x : lattice_points()) {
    if (std::all_of(tight.begin(), tight.end(), [&](const Facet* f) { return dot(f->normal, x) + f->offset == 0; })) {
      out.push_back(x);
    }
  }
  return out;
}

DualPolytope dual_polytope(const LatticePolytope& p) {
  for (const auto& f : p.facets()) {
    if (f.offset <= 0) throw std::invalid_argument("dual_polytope: origin is not an interior point");
  }
  DualPolytope out;
  out.reflexive = true;
  std::vector<IVec> integral;
  for (const auto& f : p.facets()) {
    std::vector<mpq_class> v;
    IVec iv;
    for (auto a : f.normal) {
      mpq_class q(a, f.offset);
      q.canonicalize();
      v.push_back(q);
      iv.push_back(a / f.offset);
    }
    if (f.offset != 1) out.reflexive = false;
    out.vertices.push_back(std::move(v));
    integral.push_back(std::move(iv));
  }
  const bool all_integral = std::all_of(out.vertices.begin(), out.vertices.end(), [](const auto& v) {
    return std::all_of(v.begin(), v.end(), [](const mpq_class& q) { return q.get_den() == 1; });
  });
  if (all_integral) {
    out.polytope = LatticePolytope::from_points(integral);
    // dual of the dual: facet normals scaled by offsets are the vertices of p
    std::vector<IVec> back;
    bool ok = out.polytope->vertices().size() == integral.size();
    for (const auto& f : out.polytope->facets()) {
      if (f.offset <= 0 || std::any_of(f.normal.begin(), f.normal.end(), [&](long a) { return a % f.offset != 0; })) {
        ok = false;
        break;
      }
      IVec v;
      for (auto a : f.normal) v.push_back(a / f.offset);
      back.push_back(std::move(v));
    }
    auto mine = p.vertices();
    std::sort(mine.begin(), mine.end());
    std::sort(back.begin(), back.end());
    out.double_dual_ok = ok && back == mine;
  }
  return out;
}

mpz_class normalized_volume(const LatticePolytope& p, const std::vector<std::size_t>& order) {
  const std::size_t nv = p.vertices().size();
  std::vector<std::size_t> ord = order;
  if (ord.empty()) {
    ord.resize(nv);
    std::iota(ord.begin(), ord.end(), 0);
  }
  if (ord.size() != nv) throw std::invalid_argument("normalized_volume: order must list every vertex");

  // facets of each face: faces one dimension lower that it contains
  const auto& faces = p.faces();
  std::map<std::uint64_t, std::vector<std::uint64_t>> sub;
  for (auto f : faces) {
    const int df = p.face_dimension(f);
    for (auto g : faces) {
      if (g != f && (g & f) == g && p.face_dimension(g) == df - 1) sub[f].push_back(g);
    }
  }
  std::map<std::uint64_t, std::vector<std::vector<std::size_t>>> memo;
  std::function<const std::vector<std::vector<std::size_t>>&(std::uint64_t)> triangulate =
      [&](std::uint64_t f) -> const std::vector<std::vector<std::size_t>>& {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<std::size_t>> out;
    if (std::popcount(f) == 1) {
      out.push_back({static_cast<std::size_t>(std::countr_zero(f))});
    } else {
      std::size_t apex = 0;
      for (auto v : ord) {
        if (f >> v & 1) {
          apex = v;
          break;
        }
      }
      for (auto g : sub[f]) {
        if (g >> apex & 1) continue;
        for (const auto& s : triangulate(g)) {
          auto t = s;
          t.push_back(apex);
          out.push_back(std::move(t));
        }
      }
    }
    return memo.emplace(f, std::move(out)).first->second;
  };
  std::uint64_t all = 0;
  for (auto f : faces) all |= f;
  mpz_class vol = 0;
  for (const auto& s : triangulate(all)) {
    ZMatrix m;
    for (std::size_t i = 1; i < s.size(); ++i) {
      std::vector<mpz_class> r;
      for (std::size_t c = 0; c < p.rank(); ++c) r.emplace_back(p.vertices()[s[i]][c] - p.vertices()[s[0]][c]);
      m.push_back(std::move(r));
    }
    vol += abs(det(std::move(m)));
  }
  return vol;
}

EhrhartInvariants ehrhart_invariants(const LatticePolytope& p) {
  EhrhartInvariants out;
  out.lattice_points = p.lattice_points().size();
  out.normalized_volume = normalized_volume(p);
  std::vector<std::size_t> rev(p.vertices().size());
  std::iota(rev.rbegin(), rev.rend(), 0);
  out.triangulations_agree = normalized_volume(p, rev) == out.normalized_volume;
  return out;
}

FaceReport two_face_classification(const LatticePolytope& p) {
  FaceReport out;
  out.f_vector = p.f_vector();
  for (auto f : p.faces_of_dimension(2)) {
    ++out.two_faces;
    const int nv = std::popcount(f);
    const std::size_t npts = p.face_lattice_points(f).size();
    std::vector<IVec> vs;
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      if (f >> v & 1) vs.push_back(p.vertices()[v]);
    }
    if (nv == 3 && npts == 3) {
      ++out.unimodular_triangles;
      continue;
    }
    if (nv == 4 && npts == 4) {
      // some pairing of opposite vertices shares its midpoint
      auto sum = [&](std::size_t i, std::size_t j) {
        IVec s(vs[i].size());
        for (std::size_t c = 0; c < s.size(); ++c) s[c] = vs[i][c] + vs[j][c];
        return s;
      };
      if (sum(0, 1) == sum(2, 3) || sum(0, 2) == sum(1, 3) || sum(0, 3) == sum(1, 2)) {
        ++out.unit_parallelograms;
        out.parallelogram_masks.push_back(f);
        continue;
      }
    }
    ++out.other;
  }
  return out;
}

IndexDecomposition index_decomposition(const LatticePolytope& d) {
  const auto& vs = d.vertices();
  long bound = 0;
  for (const auto& v : vs) {
    for (std::size_t c = 0; c < v.size(); ++c) bound = std::max(bound, std::abs(v[c] - vs[0][c]));
  }
  for (long r = std::max(bound, 1L); r >= 1; --r) {
    bool divides = true;
    for (const auto& v : vs) {
      for (std::size_t c = 0; c < v.size() && divides; ++c) divides = (v[c] - vs[0][c]) % r == 0;
    }
    if (!divides) continue;
    std::vector<IVec> base;
    for (const auto& v : vs) {
      IVec b = diff(v, vs[0]);
      for (auto& x : b) x /= r;
      base.push_back(std::move(b));
    }
    return {r, LatticePolytope::from_points(base)};
  }
  throw std::logic_error("index_decomposition: unreachable");
}

ExponentPolytope exponent_polytope(std::span<const Polynomial> monomials) {
  if (monomials.empty()) throw std::invalid_argument("exponent_polytope: no monomials");
  const std::size_t n = monomials[0].ring()->nvars();
  const long deg = monomials[0].total_degree();
  std::vector<IVec> raw;
  for (const auto& m : monomials) {
    if (m.size() != 1) throw std::invalid_argument("exponent_polytope: " + m.to_string() + " is not a monomial");
    if (m.total_degree() != deg) throw std::invalid_argument("exponent_polytope: mixed degrees");
    IVec e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back(m.leading_term().mono[i]);
    raw.push_back(std::move(e));
  }
  ExponentPolytope out{LatticePolytope::from_points(raw), raw, 0, {}, std::nullopt};
  const auto& p = out.polytope;
  for (long r = 1; r <= 6; ++r) {
    std::vector<IVec> interior;
    for (const auto& x : p.lattice_points(r)) {
      if (p.strictly_contains(x, r)) interior.push_back(x);
    }
    if (interior.size() != 1) continue;
    const bool distance_one = std::all_of(p.facets().begin(), p.facets().end(), [&](const Facet& f) {
      return dot(f.normal, interior[0]) + r * f.offset == 1;
    });
    if (!distance_one) continue;
    out.index = r;
    out.interior = interior[0];
    std::vector<IVec> scaled;
    for (const auto& v : p.vertices()) {
      IVec w(v.size());
      for (std::size_t c = 0; c < v.size(); ++c) w[c] = r * v[c] - interior[0][c];
      scaled.push_back(std::move(w));
    }
    out.anticanonical = LatticePolytope::from_points(scaled);
    break;
  }
  return out;
}

std::vector<std::vector<std::size_t>> conifold_planes(const ExponentPolytope& e) {
  if (!e.anticanonical) return {};
  const auto dual = dual_polytope(*e.anticanonical);
  if (!dual.polytope) return {};
  const auto& n = *dual.polytope;
  // dual vertices are the primitive facet normals, shared with the unscaled polytope
  const auto& facets = e.polytope.facets();
  std::vector<std::vector<std::size_t>> out;
  for (auto mask : two_face_classification(n).parallelogram_masks) {
    std::vector<const Facet*> tight;
    for (std::size_t v = 0; v < n.vertices().size(); ++v) {
      if (!(mask >> v & 1)) continue;
      auto it = std::find_if(facets.begin(), facets.end(), [&](const Facet& f) { return f.normal == n.vertices()[v]; });
      if (it == facets.end()) throw std::logic_error("conifold_planes: dual vertex without facet");
      tight.push_back(&*it);
    }
    std::vector<std::size_t> plane;
    for (std::size_t m = 0; m < e.points.size(); ++m) {
      if (std::all_of(tight.begin(), tight.end(),
                      [&](const Facet* f) { return dot(f->normal, e.points[m]) + f->offset == 0; })) {
        plane.push_back(m);
      }
    }
    out.push_back(std::move(plane));
  }
  return out;
}

std::string to_string(EquivalenceStatus s) {
  switch (s) {
    case EquivalenceStatus::found:
      return "found";
    case EquivalenceStatus::not_equivalent:
      return "not equivalent";
    case EquivalenceStatus::budget_exhausted:
      return "not found within budget";
  }
  return "?";
}

LatticePolytope transform(const LatticePolytope& p, const std::vector<IVec>& matrix, const IVec& translation) {
  std::vector<IVec> pts;
  for (const auto& v : p.vertices()) {
    IVec w(matrix.size());
    for (std::size_t r = 0; r < matrix.size(); ++r) w[r] = dot(matrix[r], v) + translation[r];
    pts.push_back(std::move(w));
  }
  return LatticePolytope::from_points(pts);
}

LatticeEquivalence lattice_equivalent(const LatticePolytope& p, const LatticePolytope& q, std::size_t budget) {
  LatticeEquivalence out;
  const std::size_t d = p.rank();
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  if (q.rank() != d || pv.size() != qv.size() || p.f_vector() != q.f_vector()) return out;

  auto facet_count = [](const LatticePolytope& x, std::size_t v) {
    std::size_t c = 0;
    for (auto m : x.facet_masks()) c += m >> v & 1;
    return c;
  };
  auto edges = [](const LatticePolytope& x) {
    std::set<std::pair<std::size_t, std::size_t>> e;
    for (auto m : x.faces_of_dimension(1)) {
      const auto a = static_cast<std::size_t>(std::countr_zero(m));
      const auto b = static_cast<std::size_t>(63 - std::countl_zero(m));
      e.insert({a, b});
    }
    return e;
  };
  const auto pe = edges(p), qe = edges(q);
  auto is_edge = [](const std::set<std::pair<std::size_t, std::size_t>>& e, std::size_t a, std::size_t b) {
    return e.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  // affine basis of p among its vertices
  std::vector<std::size_t> basis = {0};
  for (std::size_t v = 1; v < pv.size() && basis.size() < d + 1; ++v) {
    std::vector<IVec> cand;
    for (auto b : basis) cand.push_back(pv[b]);
    cand.push_back(pv[v]);
    if (affine_rank(cand) == basis.size()) basis.push_back(v);
  }

  std::set<IVec> qset(qv.begin(), qv.end());
  std::vector<std::size_t> image(basis.size());
  std::vector<bool> used(qv.size(), false);
  const RationalOps ops;

  auto try_solve = [&]() -> bool {
    // U (p_b - p_0) = q_b - q_0 for each basis vector
    linalg::Matrix<RationalOps> m(d, 2 * d, ops);
    for (std::size_t k = 1; k <= d; ++k) {
      const IVec dp = diff(pv[basis[k]], pv[basis[0]]);
      for (std::size_t c = 0; c < d; ++c) m.at(c, k - 1) = dp[c];
    }
    for (std::size_t c = 0; c < d; ++c) m.at(c, d + c) = 1;
    linalg::rref(m, ops);  // right half becomes Dp^{-1}
    std::vector<IVec> u(d, IVec(d, 0));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        mpq_class s = 0;
        for (std::size_t k = 1; k <= d; ++k) {
          s += mpq_class(qv[image[k]][r] - qv[image[0]][r]) * m.at(k - 1, d + c);
        }
        if (s.get_den() != 1) return false;
        u[r][c] = s.get_num().get_si();
      }
    }
    ZMatrix um;
    for (const auto& row : u) {
      std::vector<mpz_class> zr;
      for (auto x : row) zr.emplace_back(x);
      um.push_back(std::move(zr));
    }
    if (abs(det(um)) != 1) return false;
    IVec t(d);
    for (std::size_t r = 0; r < d; ++r) t[r] = qv[image[0]][r] - dot(u[r], pv[basis[0]]);
    for (const auto& v : pv) {
      IVec w(d);
      for (std::size_t r = 0; r < d; ++r) w[r] = dot(u[r], v) + t[r];
      if (!qset.count(w)) return false;
    }
    out.matrix = u;
    out.translation = t;
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == basis.size()) return try_solve();
    for (std::size_t j = 0; j < qv.size(); ++j) {
      if (used[j] || facet_count(p, basis[k]) != facet_count(q, j)) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < k && consistent; ++i) {
        consistent = lattice_length(pv[basis[i]], pv[basis[k]]) == lattice_length(qv[image[i]], qv[j]) &&
                     is_edge(pe, basis[i], basis[k]) == is_edge(qe, image[i], j);
      }
      if (!consistent) continue;
      if (++out.nodes > budget) throw std::length_error("budget");
      used[j] = true;
      image[k] = j;
      if (search(k + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  try {
    out.status = search(0) ? EquivalenceStatus::found : EquivalenceStatus::not_equivalent;
  } catch (const std::length_error&) {
    out.status = EquivalenceStatus::budget_exhausted;
  }
  return out;
}

bool is_binomial(const Ideal& ideal, const GroebnerOptions& options) {
  const auto gb = groebner_basis(ideal, options);
  return std::all_of(gb.elements().begin(), gb.elements().end(), [](const Polynomial& p) { return p.size() <= 2; });
}

const std::vector<IVec>& printed_polytope(int which) {
  static const std::vector<IVec> t1 = {{0, 0, 1, 0, 0},   {0, 0, 0, 1, 0},  {-1, -1, -1, -1, -1},
                                       {0, 0, 0, 0, 1},   {1, 0, 0, 0, 0},  {0, 1, 0, 0, 0},
                                       {1, 1, 1, 0, 1},   {0, 0, -1, 0, -1}, {1, 1, 0, 1, 1}};
  static const std::vector<IVec> t2 = {{-1, -1, -1, -1, -1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1},
                                       {1, 0, 0, 0, 0},      {0, 1, 0, 0, 0}, {1, 1, 1, 1, 0}, {1, 1, 1, 0, 1},
                                       {1, 1, 0, 1, 1},      {2, 2, 1, 1, 1}};
  if (which == 1) return t1;
  if (which == 2) return t2;
  throw std::invalid_argument("printed polytope index must be 1 or 2");
}

std::vector<IVec> read_polytope_file(std::istream& in) {
  std::vector<IVec> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    IVec row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("polytope file: bad integer '" + tok + "'");
      }
      if (used != tok.size()) throw ParseError("polytope file: bad integer '" + tok + "'");
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows[0].size()) throw ParseError("polytope file: rows of different length");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<IVec> read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_polytope_file(in);
}

}  // namespace g2flat
