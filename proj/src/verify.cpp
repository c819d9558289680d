#include "g2flat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "g2flat/exterior.hpp"
#include "g2flat/groebner.hpp"
#include "g2flat/hilbert.hpp"
#include "g2flat/toric.hpp"
#include "g2flat/varieties.hpp"

namespace g2flat {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string to_string(TaskStatus s) {
  switch (s) {
    case TaskStatus::pass:
      return "pass";
    case TaskStatus::fail:
      return "fail";
    case TaskStatus::timeout:
      return "timeout";
    case TaskStatus::vacuous:
      return "vacuous";
    case TaskStatus::probabilistic_pass:
      return "probabilistic-pass";
  }
  return "?";
}

json VerifyConfig::to_json() const {
  return {{"prime", prime},
          {"second_prime", second_prime},
          {"seed", seed},
          {"order", order.to_string()},
          {"timeout", task_timeout},
          {"global_timeout", global_timeout},
          {"jobs", jobs},
          {"omit_timing", omit_timing}};
}

void VerifyConfig::apply_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "prime") {
        prime = value.get<std::uint32_t>();
      } else if (key == "second_prime") {
        second_prime = value.get<std::uint32_t>();
      } else if (key == "seed") {
        seed = value.get<std::uint64_t>();
      } else if (key == "order") {
        order = MonomialOrder::parse(value.get<std::string>());
      } else if (key == "timeout") {
        task_timeout = value.get<double>();
      } else if (key == "global_timeout") {
        global_timeout = value.get<double>();
      } else if (key == "jobs") {
        jobs = value.get<std::size_t>();
      } else if (key == "omit_timing") {
        omit_timing = value.get<bool>();
      } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  validate();
}

void VerifyConfig::validate() const {
  CoefficientField::prime(prime);
  CoefficientField::prime(second_prime);
  if (prime == second_prime) throw std::invalid_argument("second prime must differ from the prime");
  if (order.kind == OrderKind::block) throw std::invalid_argument("order must be grevlex or lex");
  if (!(task_timeout > 0) || !(global_timeout > 0)) throw std::invalid_argument("timeouts must be positive");
  if (jobs == 0) throw std::invalid_argument("jobs must be at least 1");
}

std::uint64_t task_seed(const std::string& name, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  h ^= seed + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

namespace {

json jz(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json hd_json(const HilbertData& h) {
  json hp = json::array();
  for (const auto& c : h.hp_coefficients) hp.push_back(c.get_str());
  json hv = json::array();
  for (const auto& c : h.reduced_numerator) hv.push_back(jz(c));
  return {{"dimension", h.dimension},
          {"degree", h.degree ? jz(*h.degree) : json(nullptr)},
          {"hilbert_polynomial", hp},
          {"h_vector", hv},
          {"ambient_variables", h.nvars}};
}

bool has_dim_deg(const HilbertData& h, int dim, long deg) { return h.dimension == dim && h.degree && *h.degree == deg; }

json poly_list(std::span<const Polynomial> ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

struct Outcome {
  TaskStatus status = TaskStatus::fail;
  json evidence = json::object();
};

// Collects named sub-checks; failing ones form the certificate.
class Checks {
 public:
  void add(const std::string& what, bool ok) {
    if (!ok) failed_.push_back(what);
  }
  bool ok() const { return failed_.empty(); }
  Outcome finish(json evidence, TaskStatus success = TaskStatus::pass) const {
    if (ok()) return {success, std::move(evidence)};
    evidence["certificate"] = {{"failed_checks", failed_}};
    return {TaskStatus::fail, std::move(evidence)};
  }

 private:
  std::vector<std::string> failed_;
};

struct Ctx {
  const VerifyConfig& cfg;
  CoefficientField field;
  CoefficientField second;
  GroebnerOptions opts;
  std::uint64_t seed;

  void check() const {
    if (opts.deadline && Clock::now() > *opts.deadline) throw Timeout("task deadline reached");
  }
  HilbertData hd(const Ideal& i) const {
    check();
    return hilbert_data(groebner_basis(i, cfg.order, opts));
  }
  Ideal ghat() const { return pfaffian_ideal(build_presentation(PresentationKind::Ghat, field)); }
  HilbertData g2_data() const { return hd(pfaffian_ideal(build_presentation(PresentationKind::G2, field))); }
};

json cross_json(const CrossValidation& cv) {
  return {{"ok", cv.ok},
          {"isotropy_defect", cv.defect},
          {"printed_asymmetries", cv.asymmetries},
          {"pfaffian", hd_json(cv.pfaffian)},
          {"intrinsic", hd_json(cv.intrinsic)}};
}

Outcome task_g2_hilbert(const Ctx& c) {
  Checks ck;
  const auto g2 = pfaffian_ideal(build_presentation(PresentationKind::G2, c.field));
  const auto h = c.hd(g2);
  ck.add("dimension 5 and degree 18", has_dim_deg(h, 5, 18));
  const MonomialOrder other = c.cfg.order.kind == OrderKind::lex ? MonomialOrder::grevlex() : MonomialOrder::lex();
  const auto h_other = hilbert_data(groebner_basis(g2, other, c.opts));
  ck.add("order independence", h == h_other);
  const auto h_second = c.hd(pfaffian_ideal(build_presentation(PresentationKind::G2, c.second)));
  ck.add("second prime agrees", h == h_second);
  const auto cv = cross_validate(PresentationKind::G2, c.field, 0, c.opts);
  ck.add("matrix lies in the isotropic span of omega", cv.defect.empty());
  ck.add("isotropic variety has the same Hilbert data", cv.ok);
  return ck.finish({{"pfaffians", g2.generators().size()},
                    {"hilbert", hd_json(h)},
                    {"other_order", {{"order", other.to_string()}, {"same", h == h_other}}},
                    {"second_prime", {{"prime", c.second.modulus()}, {"same", h == h_second}}},
                    {"cross_validation", cross_json(cv)}});
}

Outcome task_ghat_hilbert(const Ctx& c) {
  Checks ck;
  const auto g2 = c.g2_data();
  const auto h = c.hd(c.ghat());
  ck.add("Hilbert data equal to G2", h == g2);
  const auto cv = cross_validate(PresentationKind::Ghat, c.field, 0, c.opts);
  ck.add("cross validation against omega0", cv.ok);
  return ck.finish({{"hilbert", hd_json(h)}, {"g2", hd_json(g2)}, {"cross_validation", cross_json(cv)}});
}

Outcome task_flat_family_t(const Ctx& c) {
  Checks ck;
  const auto g2 = c.g2_data();
  json members = json::array();
  for (long t : {0L, 1L, 2L, 7L}) {
    c.check();
    const auto h = c.hd(pfaffian_ideal(build_presentation(PresentationKind::family_t, c.field, t)));
    const auto cv = cross_validate(PresentationKind::family_t, c.field, t, c.opts);
    ck.add("t=" + std::to_string(t) + " Hilbert data", h == g2);
    ck.add("t=" + std::to_string(t) + " cross validation", cv.ok);
    members.push_back({{"t", t}, {"hilbert", hd_json(h)}, {"same_as_g2", h == g2}, {"cross_validation", cv.ok}});
  }
  return ck.finish({{"g2", hd_json(g2)}, {"members", members}});
}

Outcome task_flat_family_lambda(const Ctx& c) {
  Checks ck;
  const auto g2 = c.g2_data();
  json members = json::array();
  const auto qq = CoefficientField::rationals();
  for (long l : {1L, 2L}) {
    c.check();
    const auto m = build_presentation(PresentationKind::family_lambda, c.field, l);
    const auto h = c.hd(pfaffian_ideal(m));
    const auto cv = cross_validate(PresentationKind::family_lambda, c.field, l, c.opts);
    const auto par = verify_parametrization(build_presentation(PresentationKind::family_lambda, qq, l),
                                            lambda_coordinates(l, qq));
    ck.add("lambda=" + std::to_string(l) + " Hilbert data", h == g2);
    ck.add("lambda=" + std::to_string(l) + " cross validation", cv.ok);
    ck.add("lambda=" + std::to_string(l) + " parametrization", par.identically_zero && !par.vacuous);
    members.push_back({{"lambda", l},
                       {"hilbert", hd_json(h)},
                       {"same_as_g2", h == g2},
                       {"cross_validation", cv.ok},
                       {"parametrization_identity", par.identically_zero}});
  }
  // lambda = 0: the curve becomes the chain of lines, the image is toric.
  const auto qs = quadrics_through(lambda_curve_ideal(0, c.field));
  const auto image = kernel_of_map(letters_ring(c.field), qs, c.opts);
  const auto h0 = c.hd(image);
  const bool binomial = is_binomial(image, c.opts);
  ck.add("lambda=0 image is binomial", binomial);
  ck.add("lambda=0 Hilbert data", h0 == g2);
  const auto m0 = c.hd(pfaffian_ideal(build_presentation(PresentationKind::family_lambda, c.field, 0)));
  return ck.finish({{"g2", hd_json(g2)},
                    {"members", members},
                    {"lambda_zero",
                     {{"quadrics", qs.size()},
                      {"image_binomial", binomial},
                      {"image_hilbert", hd_json(h0)},
                      {"specialized_matrix_hilbert", hd_json(m0)}}}});
}

Outcome task_map_inverse(const Ctx& c) {
  const auto qq = CoefficientField::rationals();
  const auto m = build_presentation(PresentationKind::Ghat, qq);
  const auto chk = verify_parametrization(m, ghat_coordinates(qq));
  const auto literal = verify_parametrization(m, ghat_coordinates(qq, true));
  json ev = {{"field", "QQ"},
             {"pfaffians", pfaffians4(m).size()},
             {"identically_zero", chk.identically_zero},
             {"nonzero_pfaffians", chk.nonzero_pfaffians},
             {"coordinates", poly_list(ghat_coordinates(qq))},
             {"literal_sign_n",
              {{"nonzero_pfaffians", literal.nonzero_pfaffians},
               {"counterexample", literal.counterexample ? json(*literal.counterexample) : json(nullptr)}}}};
  c.check();
  if (chk.vacuous) return {TaskStatus::vacuous, ev};
  if (chk.identically_zero) return {TaskStatus::pass, ev};
  ev["certificate"] = {{"counterexample", chk.counterexample.value_or("")}};
  return {TaskStatus::fail, ev};
}

Outcome task_image_kernel(const Ctx& c) {
  Checks ck;
  json fields = json::array();
  for (const auto& f : {c.field, CoefficientField::rationals()}) {
    c.check();
    const auto kernel = kernel_of_map(letters_ring(f), ghat_coordinates(f), c.opts);
    const auto pf = pfaffian_ideal(build_presentation(PresentationKind::Ghat, f));
    const auto rel = ideal_equal(kernel, pf, c.opts);
    json entry = {{"field", f.to_string()}, {"kernel_generators", kernel.generators().size()},
                  {"relation", to_string(rel)}};
    if (rel == IdealRelation::equal) {
      entry["pfaffians_generate_saturated_ideal"] = true;
    } else {
      bool k_in = true, p_in = true;
      for (const auto& g : kernel.generators()) k_in = k_in && radical_membership(g, pf, c.opts);
      for (const auto& g : pf.generators()) p_in = p_in && radical_membership(g, kernel, c.opts);
      entry["kernel_in_radical_of_pfaffians"] = k_in;
      entry["pfaffians_in_radical_of_kernel"] = p_in;
      ck.add(f.to_string() + " mutual radical membership", k_in && p_in);
    }
    fields.push_back(entry);
  }
  return ck.finish({{"fields", fields}});
}

Outcome task_projection(const Ctx& c) {
  Checks ck;
  const auto img = projection_image(c.ghat(), c.opts);
  const auto minors = projection_minor_ideal(c.field);
  const auto rel = ideal_equal(img, minors, c.opts);
  ck.add("elimination equals the minor ideal", rel == IdealRelation::equal);
  const auto h = c.hd(minors);
  const auto control = ideal_equal(
      projection_image(pfaffian_ideal(build_presentation(PresentationKind::G2, c.field)), c.opts), minors, c.opts);
  return ck.finish({{"relation", to_string(rel)},
                    {"eliminated", {"c", "k", "f"}},
                    {"image_generators", img.generators().size()},
                    {"minor_ideal", hd_json(h)},
                    {"g2_control_relation", to_string(control)}});
}

Outcome task_divisor_d(const Ctx& c) {
  Checks ck;
  const auto h = c.hd(divisor_D(c.ghat()));
  ck.add("dimension 4 and degree 8", has_dim_deg(h, 4, 8));
  return ck.finish({{"section", {"g", "h", "j"}}, {"hilbert", hd_json(h)}});
}

Outcome task_fano_pencil(const Ctx& c) {
  Checks ck;
  const auto ghat = c.ghat();
  const auto f = fano_F(ghat);
  const auto fp = fano_Fprime(ghat);
  const auto hf = c.hd(f), hfp = c.hd(fp);
  const auto rf = ideal_equal(f, pfaffian_ideal(fano_F_presentation(c.field)), c.opts);
  const auto rfp = ideal_equal(fp, pfaffian_ideal(fano_Fprime_presentation(c.field)), c.opts);
  ck.add("F dimension 4 degree 5", has_dim_deg(hf, 4, 5));
  ck.add("F' dimension 4 degree 5", has_dim_deg(hfp, 4, 5));
  ck.add("F equals the printed Pfaffian ideal", rf == IdealRelation::equal);
  ck.add("F' equals the printed Pfaffian ideal", rfp == IdealRelation::equal);

  const RingPtr& ring = ghat.ring();
  std::vector<Polynomial> lin;
  for (const char* v : {"a", "e", "g", "h", "i", "n", "b", "d", "g", "j", "l", "m"}) {
    lin.push_back(Polynomial::variable(ring, v));
  }
  const auto both = ghat.with_generators(lin);
  const auto span = graded_piece(both, 1);
  const auto hb = c.hd(both);
  const auto rel = ideal_equal(both, singular_plane_ideal(ring), c.opts);
  ck.add("F and F' meet in the plane (c,k,f)", rel == IdealRelation::equal && has_dim_deg(hb, 2, 1));
  return ck.finish({{"F", {{"hilbert", hd_json(hf)}, {"relation_to_printed", to_string(rf)}}},
                    {"F_prime", {{"hilbert", hd_json(hfp)}, {"relation_to_printed", to_string(rfp)}}},
                    {"intersection",
                     {{"linear_forms", span.size()},
                      {"hilbert", hd_json(hb)},
                      {"relation_to_plane_ckf", to_string(rel)}}}});
}

std::vector<std::size_t> plane_ckf(const RingPtr& letters) {
  return {letters->require_index("c"), letters->require_index("k"), letters->require_index("f")};
}

Outcome task_singular_plane(const Ctx& c) {
  Checks ck;
  const auto ghat = c.ghat();
  const std::uint32_t p = c.field.modulus();
  const auto coords = ghat_coordinates(c.field);
  const auto plane = plane_ckf(ghat.ring());
  std::mt19937_64 rng(c.seed);
  std::vector<std::vector<std::uint32_t>> off, on;
  std::size_t rejected = 0;
  while (off.size() < 100) {
    auto pt = sample_parametrized_point(coords, p, rng);
    bool on_plane = true;
    for (std::size_t i = 0; i < pt.size(); ++i) {
      if (std::find(plane.begin(), plane.end(), i) == plane.end() && pt[i] != 0) on_plane = false;
    }
    if (on_plane) {
      ++rejected;
      continue;
    }
    off.push_back(std::move(pt));
  }
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  while (on.size() < 20) {
    std::vector<std::uint32_t> pt(14, 0);
    for (auto i : plane) pt[i] = dist(rng);
    if (pt[plane[0]] == 0 && pt[plane[1]] == 0 && pt[plane[2]] == 0) continue;
    on.push_back(std::move(pt));
  }
  c.check();
  const auto s_off = smoothness_probe(ghat, 8, off);
  const auto s_on = smoothness_probe(ghat, 8, on);
  ck.add("rank 8 at every sampled point off the plane", s_off.smooth == off.size());
  ck.add("rank at most 7 at every sampled point of the plane",
         std::all_of(s_on.ranks.begin(), s_on.ranks.end(), [](std::size_t r) { return r <= 7; }));
  std::map<std::size_t, std::size_t> hist_off, hist_on;
  for (auto r : s_off.ranks) ++hist_off[r];
  for (auto r : s_on.ranks) ++hist_on[r];
  json ho = json::object(), hn = json::object();
  for (auto [r, n] : hist_off) ho[std::to_string(r)] = n;
  for (auto [r, n] : hist_on) hn[std::to_string(r)] = n;
  return ck.finish({{"seed", c.seed},
                    {"samples", {{"off_plane", off.size()}, {"on_plane", on.size()}}},
                    {"codimension", 8},
                    {"rank_histogram_off_plane", ho},
                    {"rank_histogram_on_plane", hn},
                    {"rejected_on_plane_samples", rejected},
                    {"first_points_off_plane", json(std::vector(off.begin(), off.begin() + 3))},
                    {"first_points_on_plane", json(std::vector(on.begin(), on.begin() + 3))}},
                   TaskStatus::probabilistic_pass);
}

json node_json(const NodeReport& nr) {
  return {{"count", nr.count},
          {"points_found", nr.points_found},
          {"jacobian_ranks", nr.ranks},
          {"expected_rank", nr.expected_rank},
          {"section_dimension_ok", nr.section_dimension_ok},
          {"section_degree", nr.section_degree ? jz(*nr.section_degree) : json(nullptr)},
          {"resamples", nr.resamples},
          {"probe_points", nr.probe_points},
          {"probe_smooth", nr.probe_smooth},
          {"hyperplane", nr.h_text},
          {"quadric", nr.q_text}};
}

bool nodes_ok(const NodeReport& nr, std::size_t expected) {
  return nr.section_dimension_ok && nr.count == expected && nr.points_found == expected &&
         std::all_of(nr.ranks.begin(), nr.ranks.end(), [&](std::size_t r) { return r < nr.expected_rank; }) &&
         nr.probe_smooth == nr.probe_points;
}

Outcome task_nodes_ghat(const Ctx& c) {
  Checks ck;
  const auto ghat = c.ghat();
  const auto nr = node_count(ghat, {plane_ckf(ghat.ring())}, ghat_coordinates(c.field), c.seed, 10, c.opts);
  ck.add("two nodes on the plane (c,k,f), smooth elsewhere", nodes_ok(nr, 2));
  return ck.finish({{"seed", c.seed}, {"samples", nr.probe_points}, {"section", node_json(nr)}},
                   TaskStatus::probabilistic_pass);
}

Outcome task_nodes_toric(const Ctx& c) {
  Checks ck;
  json cases = json::array();
  const std::pair<CurveVariant, std::size_t> variants[] = {{CurveVariant::C1, 6}, {CurveVariant::C2, 8}};
  std::size_t samples = 0;
  for (const auto& [v, expected] : variants) {
    c.check();
    const auto qs = quadrics_through(curve_ideal(v, c.field));
    const auto t = kernel_of_map(letters_ring(c.field), qs, c.opts);
    const auto planes = conifold_planes(exponent_polytope(qs));
    const auto nr = node_count(t, planes, qs, c.seed, 5, c.opts);
    ck.add(to_string(v) + ": " + std::to_string(expected) + " nodes", nodes_ok(nr, expected));
    samples += nr.probe_points;
    cases.push_back({{"curve", to_string(v)}, {"expected", expected}, {"strata", planes.size()},
                     {"section", node_json(nr)}});
  }
  return ck.finish({{"seed", c.seed}, {"samples", samples}, {"cases", cases}}, TaskStatus::probabilistic_pass);
}

Outcome task_conic_q(const Ctx& c) {
  Checks ck;
  const auto conic = threespace_conic(omega0(), c.field);
  const auto h = c.hd(conic);
  std::mt19937_64 rng(c.seed);
  const auto l = random_form(conic.ring(), 1, rng);
  const auto sat = saturation(conic, l, c.opts);
  const auto lin = graded_piece(sat, 1);
  const auto hs = c.hd(sat);
  ck.add("dimension 1 and degree 2", has_dim_deg(h, 1, 2) && has_dim_deg(hs, 1, 2));
  ck.add("spans a plane", lin.size() == 4);
  const auto empty = c.hd(threespace_conic(omega_g2(), c.field));
  ck.add("empty for the G2 form", empty.dimension == -1);
  return ck.finish({{"omega0", {{"hilbert", hd_json(h)}, {"linear_span_equations", poly_list(lin)}}},
                    {"omega", {{"hilbert", hd_json(empty)}}}});
}

Outcome task_omega1_flat(const Ctx& c) {
  Checks ck;
  const auto g2 = c.g2_data();
  const auto image = kernel_of_map(letters_ring(c.field), quadrics_through(curve_ideal(CurveVariant::C0, c.field)), c.opts);
  const auto hi = c.hd(image);
  ck.add("C0 image has the Hilbert polynomial of G2", hi.same_polynomial(g2));
  const auto iso = isotropic_variety_ideal(omega1(), c.field);
  const auto h1 = c.hd(iso);
  ck.add("isotropic variety of omega1 has the Hilbert data of G2", h1.same_polynomial(g2));
  // Which single extra blade would make the form flat.
  json completions = json::array();
  if (!h1.same_polynomial(g2)) {
    for (int a = 1; a <= 7; ++a)
      for (int b = a + 1; b <= 7; ++b)
        for (int d = b + 1; d <= 7; ++d)
          for (int e = d + 1; e <= 7; ++e) {
            c.check();
            const Form w = omega1() + basis_form({a, b, d, e});
            if (isotropy_kernel(w, c.field).basis.size() != 14) continue;
            if (c.hd(isotropic_variety_ideal(w, c.field)).same_polynomial(g2)) {
              completions.push_back(std::to_string(a) + std::to_string(b) + std::to_string(d) + std::to_string(e));
            }
          }
  }
  return ck.finish({{"c0_image", hd_json(hi)},
                    {"omega1_isotropic_variety", {{"span_dimension", iso.ring()->nvars()}, {"hilbert", hd_json(h1)}}},
                    {"flat_one_blade_completions", completions},
                    {"g2", hd_json(g2)}});
}

LatticePolytope printed(int which) { return LatticePolytope::from_points(printed_polytope(which)); }

Outcome task_toric_reflexive(const Ctx& c) {
  Checks ck;
  json out = json::array();
  for (int which : {1, 2}) {
    c.check();
    const auto p = printed(which);
    const auto d = dual_polytope(p);
    ck.add("T" + std::to_string(which) + " reflexive", d.reflexive && d.double_dual_ok);
    out.push_back({{"polytope", "T" + std::to_string(which)},
                   {"vertices", p.vertices().size()},
                   {"facets", p.facets().size()},
                   {"reflexive", d.reflexive},
                   {"double_dual_ok", d.double_dual_ok},
                   {"lattice_points", p.lattice_points().size()}});
  }
  return ck.finish({{"polytopes", out}});
}

Outcome task_toric_strata(const Ctx& c) {
  Checks ck;
  json out = json::array();
  const std::size_t expected[] = {3, 4};
  for (int which : {1, 2}) {
    c.check();
    const auto p = printed(which);
    const auto fr = two_face_classification(p);
    ck.add("T" + std::to_string(which) + " conifold 2-faces",
           fr.unit_parallelograms == expected[which - 1] && fr.other == 0);
    json par = json::array();
    for (auto mask : fr.parallelogram_masks) {
      json vs = json::array();
      for (std::size_t i = 0; i < p.vertices().size(); ++i)
        if (mask >> i & 1) vs.push_back(p.vertices()[i]);
      par.push_back(vs);
    }
    out.push_back({{"polytope", "T" + std::to_string(which)},
                   {"f_vector", fr.f_vector},
                   {"two_faces", fr.two_faces},
                   {"unimodular_triangles", fr.unimodular_triangles},
                   {"unit_parallelograms", fr.unit_parallelograms},
                   {"other", fr.other},
                   {"parallelograms", par}});
  }
  return ck.finish({{"polytopes", out}});
}

Outcome task_toric_ehrhart(const Ctx& c) {
  Checks ck;
  json out = json::array();
  for (int which : {1, 2}) {
    c.check();
    const auto d = *dual_polytope(printed(which)).polytope;
    const auto e = ehrhart_invariants(d);
    ck.add("dual of T" + std::to_string(which) + " has 14 lattice points and volume 18",
           e.lattice_points == 14 && e.normalized_volume == 18);
    const auto idx = index_decomposition(d);
    const auto eb = ehrhart_invariants(idx.base);
    out.push_back({{"polytope", "T" + std::to_string(which) + " dual"},
                   {"lattice_points", e.lattice_points},
                   {"normalized_volume", jz(e.normalized_volume)},
                   {"triangulations_agree", e.triangulations_agree},
                   {"index", idx.index},
                   {"index_base", {{"lattice_points", eb.lattice_points},
                                   {"normalized_volume", jz(eb.normalized_volume)},
                                   {"vertices", idx.base.vertices().size()}}}});
  }
  return ck.finish({{"duals", out}});
}

Outcome task_exponent_polytope(const Ctx& c) {
  Checks ck;
  json out = json::array();
  const std::pair<CurveVariant, int> cases[] = {{CurveVariant::C1, 1}, {CurveVariant::C2, 2}};
  for (const auto& [v, which] : cases) {
    c.check();
    const auto qs = quadrics_through(curve_ideal(v, c.field));
    const auto e = exponent_polytope(qs);
    const auto base = index_decomposition(*dual_polytope(printed(which)).polytope).base;
    const auto fe = two_face_classification(e.polytope), fb = two_face_classification(base);
    const auto ee = ehrhart_invariants(e.polytope), eb = ehrhart_invariants(base);
    const bool match = e.polytope.vertices().size() == base.vertices().size() &&
                       ee.lattice_points == eb.lattice_points && ee.normalized_volume == eb.normalized_volume &&
                       fe.f_vector == fb.f_vector && fe.unit_parallelograms == fb.unit_parallelograms &&
                       fe.unimodular_triangles == fb.unimodular_triangles;
    const std::string tag = to_string(v) + " vs T" + std::to_string(which);
    ck.add(tag + " invariants", match);
    const auto eq_m = lattice_equivalent(e.polytope, base);
    ck.add(tag + " exponent polytope not inequivalent", eq_m.status != EquivalenceStatus::not_equivalent);
    json n_side = nullptr;
    if (e.anticanonical) {
      const auto n = *dual_polytope(*e.anticanonical).polytope;
      const auto eq_n = lattice_equivalent(n, printed(which));
      ck.add(tag + " fan polytope not inequivalent", eq_n.status != EquivalenceStatus::not_equivalent);
      n_side = {{"status", to_string(eq_n.status)}, {"nodes", eq_n.nodes}, {"matrix", eq_n.matrix},
                {"translation", eq_n.translation}};
    } else {
      ck.add(tag + " anticanonical dilation exists", false);
    }
    out.push_back({{"case", tag},
                   {"monomials", qs.size()},
                   {"vertices", e.polytope.vertices().size()},
                   {"lattice_points", ee.lattice_points},
                   {"normalized_volume", jz(ee.normalized_volume)},
                   {"f_vector", fe.f_vector},
                   {"unit_parallelograms", fe.unit_parallelograms},
                   {"anticanonical_index", e.index},
                   {"invariants_match_dual_base", match},
                   {"equivalence_to_dual_base", {{"status", to_string(eq_m.status)}, {"nodes", eq_m.nodes}}},
                   {"equivalence_of_fan_polytope_to_printed", n_side}});
  }
  return ck.finish({{"cases", out}});
}

Outcome task_binomiality(const Ctx& c) {
  Checks ck;
  json out = json::array();
  for (auto v : {CurveVariant::C1, CurveVariant::C2}) {
    c.check();
    const auto qs = quadrics_through(curve_ideal(v, c.field));
    const auto t = kernel_of_map(letters_ring(c.field), qs, c.opts);
    const bool bin = is_binomial(t, c.opts);
    const auto h = c.hd(t);
    const auto e = exponent_polytope(qs);
    json degrees = json::array();
    for (long d : {1L, 2L}) {
      const auto hf = h.hilbert_function(d);
      const auto pts = e.polytope.lattice_points(d).size();
      ck.add(to_string(v) + " degree " + std::to_string(d) + " Hilbert function equals lattice points",
             hf == static_cast<unsigned long>(pts));
      degrees.push_back({{"degree", d}, {"hilbert_function", jz(hf)}, {"lattice_points", pts}});
    }
    ck.add(to_string(v) + " image ideal binomial", bin);
    out.push_back({{"curve", to_string(v)}, {"binomial", bin}, {"generators", t.generators().size()},
                   {"hilbert", hd_json(h)}, {"ehrhart", degrees}});
  }
  return ck.finish({{"cases", out}, {"ghat_binomial", is_binomial(c.ghat(), c.opts)}});
}

Outcome task_bivector_lemma(const Ctx& c) {
  Checks ck;
  json out = json::array();
  for (auto [mode, name] : {std::pair{BivectorMode::chain, "chain"}, std::pair{BivectorMode::concurrent, "concurrent"}}) {
    c.check();
    const auto r = bivector_square_check(mode, 5);
    ck.add(std::string(name) + " scan", r.scan_ok && r.solutions == 16 && r.single_coordinate_solutions == 16);
    ck.add(std::string(name) + " symbolic", r.symbolic_ok);
    out.push_back({{"mode", name},
                   {"field_size", r.field_size},
                   {"solutions", r.solutions},
                   {"single_coordinate_solutions", r.single_coordinate_solutions},
                   {"symbolic_components", r.symbolic_components}});
  }
  return ck.finish({{"modes", out}});
}

struct TaskDef {
  const char* name;
  const char* claim;
  Outcome (*run)(const Ctx&);
  bool optional = false;
};

const std::vector<TaskDef>& registry() {
  static const std::vector<TaskDef> defs = {
      {"g2-hilbert", "the Pfaffian ideal of G2 defines a 5-fold of degree 18", task_g2_hilbert},
      {"ghat-hilbert", "Ghat has the Hilbert polynomial of G2 (flat degeneration)", task_ghat_hilbert},
      {"flat-family-t", "the t-family of Pfaffian ideals is flat", task_flat_family_t},
      {"flat-family-lambda", "the lambda-family is flat and degenerates to a binomial ideal", task_flat_family_lambda},
      {"map-inverse", "the quadrics through the twisted cubic parametrize the Ghat matrix", task_map_inverse},
      {"image-kernel", "the image of P5 under the quadrics is Ghat", task_image_kernel},
      {"projection-p1p5", "projection from the plane (c,k,f) lands in a hyperplane section of P1 x P5",
       task_projection},
      {"divisor-d", "the union of 3-spaces in Ghat is a divisor of degree 8", task_divisor_d},
      {"fano-pencil", "Ghat contains Fano 4-folds of degree 5 meeting in the plane (c,k,f)", task_fano_pencil},
      {"singular-plane", "the singular locus of Ghat is the plane (c,k,f)", task_singular_plane},
      {"nodes-ghat", "a quadric and hyperplane section of Ghat has exactly two nodes", task_nodes_ghat},
      {"nodes-toric", "sections of the toric degenerations have 6 and 8 nodes", task_nodes_toric, true},
      {"conic-q", "the 3-spaces in Ghat are parametrized by a plane conic", task_conic_q},
      {"omega1-flat", "the C0 degeneration is flat and is the isotropic variety of omega1", task_omega1_flat},
      {"toric-reflexive", "the printed polytopes are reflexive", task_toric_reflexive},
      {"toric-strata", "the toric 5-folds have 3 and 4 conifold strata", task_toric_strata},
      {"toric-ehrhart", "the duals of the printed polytopes have 14 lattice points and volume 18",
       task_toric_ehrhart},
      {"exponent-polytope", "the quadrics through C1 and C2 have the printed polytopes as exponent data",
       task_exponent_polytope},
      {"binomiality", "the toric degenerations have binomial ideals matching their Ehrhart counts",
       task_binomiality},
      {"bivector-lemma", "the test bivector squares to zero iff exactly one coefficient is nonzero",
       task_bivector_lemma},
  };
  return defs;
}

const TaskDef& find_task(const std::string& name) {
  for (const auto& d : registry())
    if (name == d.name) return d;
  throw std::invalid_argument("unknown task '" + name + "'");
}

TaskResult run_until(const TaskDef& def, const VerifyConfig& config, Clock::time_point deadline) {
  TaskResult r;
  r.name = def.name;
  r.claim = def.claim;
  r.optional = def.optional;
  const auto start = Clock::now();
  try {
    GroebnerOptions opts;
    opts.deadline = deadline;
    const Ctx ctx{config, CoefficientField::prime(config.prime), CoefficientField::prime(config.second_prime), opts,
                  task_seed(def.name, config.seed)};
    ctx.check();
    auto out = def.run(ctx);
    r.status = out.status;
    r.evidence = std::move(out.evidence);
  } catch (const Timeout& e) {
    r.status = TaskStatus::timeout;
    r.evidence = {{"reason", e.what()}};
  } catch (const std::exception& e) {
    r.status = TaskStatus::fail;
    r.evidence = {{"certificate", {{"error", e.what()}}}};
  }
  r.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

Clock::time_point after(Clock::time_point t, double seconds) {
  return t + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

}  // namespace

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.emplace_back(d.name);
    return out;
  }();
  return names;
}

bool is_task(const std::string& name) {
  return std::any_of(registry().begin(), registry().end(), [&](const TaskDef& d) { return name == d.name; });
}

std::string task_claim(const std::string& name) { return find_task(name).claim; }

TaskResult run_task(const std::string& name, const VerifyConfig& config) {
  config.validate();
  return run_until(find_task(name), config, after(Clock::now(), config.task_timeout));
}

SuiteReport run_suite(const std::vector<std::string>& names, const VerifyConfig& config) {
  config.validate();
  std::vector<const TaskDef*> todo;
  std::set<std::string> seen;
  for (const auto& n : names) {
    const auto& def = find_task(n);
    if (seen.insert(n).second) todo.push_back(&def);
  }
  const auto start = Clock::now();
  const auto global = after(start, config.global_timeout);
  SuiteReport rep;
  rep.results.resize(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      const auto deadline = std::min(global, after(Clock::now(), config.task_timeout));
      rep.results[i] = run_until(*todo[i], config, deadline);
    }
  };
  const std::size_t nthreads = std::min(config.jobs, std::max<std::size_t>(todo.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<std::string, std::size_t> counts;
  for (auto s : {TaskStatus::pass, TaskStatus::fail, TaskStatus::timeout, TaskStatus::vacuous,
                 TaskStatus::probabilistic_pass})
    counts[to_string(s)] = 0;
  bool failed = false, timed_out = false;
  json tasks = json::array();
  for (const auto& r : rep.results) {
    ++counts[to_string(r.status)];
    if (r.status == TaskStatus::fail) failed = true;
    if (r.status == TaskStatus::timeout && !r.optional) timed_out = true;
    tasks.push_back({{"name", r.name},
                     {"status", to_string(r.status)},
                     {"evidence", r.evidence},
                     {"wall_time", config.omit_timing ? json(nullptr) : json(r.wall_time)},
                     {"claim", r.claim},
                     {"optional", r.optional}});
  }
  rep.exit_code = failed ? 1 : timed_out ? 2 : 0;
  json summary(counts);
  summary["total"] = rep.results.size();
  summary["exit_code"] = rep.exit_code;
  rep.json = {{"config", config.to_json()}, {"tasks", tasks}, {"summary", summary}};
  return rep;
}

}  // namespace g2flat
