#pragma once

// Randomized verification suites. Each suite draws instances from the
// seeded generator (one independent stream per instance index), checks the
// relevant identity exactly, and tallies results. Output never depends on
// timing or thread count.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "polyconj/calculus.hpp"
#include "polyconj/io.hpp"
#include "polyconj/mapping.hpp"
#include "polyconj/oracle.hpp"
#include "polyconj/plfunc.hpp"
#include "polyconj/polyhedron.hpp"
#include "polyconj/support.hpp"

namespace polyconj {

struct InstanceOutcome {
  bool qualified = true;  // preconditions / qualification (c) held
  std::size_t checks = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok)
      ++passed;
    else
      failures.push_back(what);
  }
};

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;      // instances examined
  std::size_t qualified = 0;      // of which the rule's qualification held
  std::size_t checks = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;  // first few, for diagnosis

  std::size_t failed() const { return checks - passed; }
  bool ok() const { return checks == passed; }
};

using InstanceCheck = std::function<InstanceOutcome(Xorshift64Star&, const Profile&)>;

namespace detail {

inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t suite_tag, std::uint64_t index) {
  return seed ^ (suite_tag * 0x9E3779B97F4A7C15ULL) ^ (index * 0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL);
}

inline std::uint64_t tag_of(const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
  return h;
}

inline InstanceOutcome run_instance(const InstanceCheck& fn, std::uint64_t seed, const Profile& prof) {
  Xorshift64Star rng(seed);
  try {
    return fn(rng, prof);
  } catch (const std::exception& e) {
    InstanceOutcome o;
    o.check(false, std::string("exception: ") + e.what());
    return o;
  }
}

inline constexpr std::size_t kMaxReportedFailures = 5;

}  // namespace detail

/// Runs instances 0, 1, 2, ... until `count` of them are qualified (or
/// 20 * count + 20 instances have been tried). Instances run in batches over
/// `threads` workers; results are merged in index order.
inline SuiteResult run_suite(const std::string& name, const InstanceCheck& fn, std::uint64_t seed, std::size_t count,
                             const Profile& prof, unsigned threads = 1) {
  SuiteResult res;
  res.name = name;
  const std::uint64_t tag = detail::tag_of(name);
  const std::size_t cap = 20 * count + 20;
  std::size_t next = 0;
  threads = std::max(1u, threads);
  while (res.qualified < count && next < cap) {
    const std::size_t batch = std::min(cap - next, std::max<std::size_t>(count - res.qualified, threads));
    std::vector<InstanceOutcome> outs(batch);
    auto work = [&](unsigned w) {
      for (std::size_t k = w; k < batch; k += threads)
        outs[k] = detail::run_instance(fn, detail::instance_seed(seed, tag, next + k), prof);
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (std::size_t k = 0; k < batch && res.qualified < count; ++k) {
      const InstanceOutcome& o = outs[k];
      ++res.instances;
      if (o.qualified) ++res.qualified;
      res.checks += o.checks;
      res.passed += o.passed;
      for (const std::string& f : o.failures)
        if (res.failures.size() < detail::kMaxReportedFailures)
          res.failures.push_back("instance " + std::to_string(next + k) + ": " + f);
    }
    next += batch;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Instance checks.

namespace suites {

namespace detail {

inline std::size_t rand_dim(Xorshift64Star& rng, const Profile& prof) {
  return static_cast<std::size_t>(rng.uniform(1, static_cast<long>(prof.max_dim)));
}

inline std::string show(const Vec& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// Dual directions for a constructed set: cone combinations of its rows
/// (finite support values) mixed with plain random vectors.
inline std::vector<Vec> dual_points(Xorshift64Star& rng, const Polyhedron& P, std::size_t count, long bound) {
  std::vector<Vec> out;
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(k % 10 < 7 && P.rows() > 0 ? random_cone_vector(rng, P) : random_int_vec(rng, P.dim(), bound));
  return out;
}

}  // namespace detail

/// Support values carry sound certificates (possibly empty P).
inline InstanceOutcome support_certificates(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t dim = detail::rand_dim(rng, prof);
  const auto rows = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(prof.max_rows)));
  const Polyhedron P = random_rows(rng, dim, rows, prof.coeff_bound);
  const Vec v = rng.coin(2) ? random_cone_vector(rng, P) : random_int_vec(rng, dim, prof.coeff_bound);
  const SupportEval s = support_eval(P, v);
  o.check(verify_support_certificate(P, v, s), "certificate for sigma at " + detail::show(v) + " = " + to_string(s.value));
  return o;
}

/// LP support values agree with the vertex oracle on bounded polyhedra.
inline InstanceOutcome oracle_equivalence(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t dim = detail::rand_dim(rng, prof);
  const Polyhedron P = random_bounded_polyhedron(rng, dim, prof);
  for (const Vec& v : detail::dual_points(rng, P, 10, prof.coeff_bound)) {
    const ExtReal lp = support_value(P, v);
    const ExtReal vx = vertex_support_oracle(P, v);
    o.check(lp == vx, "direction " + detail::show(v) + ": LP " + to_string(lp) + " vs vertices " + to_string(vx));
  }
  return o;
}

/// σ_{P1∩P2} = σ_{P1} □ σ_{P2} with attaining split under (c); <= always.
inline InstanceOutcome intersection_rule(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t dim = detail::rand_dim(rng, prof);
  const Polyhedron P1 = random_polyhedron(rng, dim, prof);
  const Polyhedron P2 = random_polyhedron(rng, dim, prof);
  const Polyhedron I = intersect(P1, P2);
  o.qualified = !is_empty(I);
  for (const Vec& v : detail::dual_points(rng, intersect(P1, P2), 5, prof.coeff_bound)) {
    const IntersectionRuleReport r = intersection_rule_check(P1, P2, v);
    const std::string at = "v = " + detail::show(v) + ": lhs " + to_string(r.lhs) + ", rhs " + to_string(r.rhs);
    o.check(r.inequality_holds, at + " (inequality)");
    if (o.qualified) {
      o.check(r.equal, at + " (equality)");
      if (r.lhs.finite()) o.check(r.split_value && *r.split_value == r.rhs, at + " (split attains)");
    }
  }
  return o;
}

namespace detail {

inline void record_rule(InstanceOutcome& o, const RuleReport& r, const Vec& a, const Vec& b) {
  const std::string at = std::string(to_string(r.kind)) + " rule at (" + show(a) + ", " + show(b) + "): lhs " +
                         to_string(r.lhs) + ", rhs " + to_string(r.rhs);
  o.check(r.inequality_holds, at + " (inequality)");
  o.check(r.reduction == r.lhs, at + " (reduction route " + to_string(r.reduction) + ")");
  if (r.applicable) {
    o.check(r.equal, at + " (equality)");
    if (r.lhs.finite()) o.check(r.witness_attains(), at + " (witness attains)");
  }
}

inline std::vector<std::pair<Vec, Vec>> split_points(const std::vector<Vec>& ws, std::size_t first) {
  std::vector<std::pair<Vec, Vec>> out;
  for (const Vec& w : ws) out.emplace_back(slice(w, 0, first), slice(w, first, w.size() - first));
  return out;
}

}  // namespace detail

/// (F1 + F2)* = inf{F1*(u1, v) + F2*(u2, v)} under dom F1 ∩ dom F2 ≠ ∅.
inline InstanceOutcome sum_rule(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t n = detail::rand_dim(rng, prof), p = detail::rand_dim(rng, prof);
  const PolyMap F1 = random_polymap(rng, n, p, prof), F2 = random_polymap(rng, n, p, prof);
  const PolyMap S = sum_map(F1, F2);
  const auto pts = detail::split_points(detail::dual_points(rng, S.graph(), 10, prof.coeff_bound), n);
  const std::vector<RuleReport> rs = sum_rule_check(F1, F2, pts);
  o.qualified = rs.front().applicable;
  for (std::size_t k = 0; k < rs.size(); ++k) detail::record_rule(o, rs[k], pts[k].first, pts[k].second);
  return o;
}

/// (G ∘ F)* = inf_v F*(u, v) + G*(-v, w) under rge F ∩ dom G ≠ ∅.
inline InstanceOutcome chain_rule(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t n = detail::rand_dim(rng, prof), p = detail::rand_dim(rng, prof), q = detail::rand_dim(rng, prof);
  const PolyMap F = random_polymap(rng, n, p, prof), G = random_polymap(rng, p, q, prof);
  const PolyMap C = compose_map(F, G);
  const auto pts = detail::split_points(detail::dual_points(rng, C.graph(), 10, prof.coeff_bound), n);
  const std::vector<RuleReport> rs = chain_rule_check(F, G, pts);
  o.qualified = rs.front().applicable;
  for (std::size_t k = 0; k < rs.size(); ++k) detail::record_rule(o, rs[k], pts[k].first, pts[k].second);
  return o;
}

/// (F1 ∩ F2)* = F1* □ F2* under gph F1 ∩ gph F2 ≠ ∅.
inline InstanceOutcome intersection_map_rule(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t n = detail::rand_dim(rng, prof), p = detail::rand_dim(rng, prof);
  const PolyMap F1 = random_polymap(rng, n, p, prof), F2 = random_polymap(rng, n, p, prof);
  const PolyMap I = intersect_map(F1, F2);
  const auto pts = detail::split_points(detail::dual_points(rng, I.graph(), 10, prof.coeff_bound), n);
  const std::vector<RuleReport> rs = intersection_rule_map_check(F1, F2, pts);
  o.qualified = rs.front().applicable;
  for (std::size_t k = 0; k < rs.size(); ++k) detail::record_rule(o, rs[k], pts[k].first, pts[k].second);
  return o;
}

/// Coderivative membership: Fenchel-Young equality, active-row LP and the
/// H-form slice of the normal cone all agree.
inline InstanceOutcome coderivative_routes(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t n = detail::rand_dim(rng, prof), p = detail::rand_dim(rng, prof);
  const PolyMap F = random_polymap(rng, n, p, prof);
  for (const Vec& z : sample_graph_points(F, 5, rng.next())) {
    const Vec xb = slice(z, 0, n), yb = slice(z, n, p);
    const Polyhedron N = graph_normal_cone(F, xb, yb);
    const std::vector<std::size_t> act = active_rows(F.graph(), z);
    for (int k = 0; k < 10; ++k) {
      Vec xs, ys;
      if (k % 2 == 0 && !act.empty()) {
        const Vec w = random_cone_vector(rng, F.graph(), act);
        xs = slice(w, 0, n);
        ys = -slice(w, n, p);
        if (k % 4 == 2) xs[rng.next() % n] += 1;  // near miss
      } else {
        xs = random_int_vec(rng, n, 2);
        ys = random_int_vec(rng, p, 2);
      }
      const bool fy = coderivative_contains_fy(F, xb, yb, ys, xs);
      const bool nc = coderivative_contains_normal(F, xb, yb, ys, xs);
      const bool hf = contains(::polyconj::detail::slice_coderivative(N, n, ys), xs);
      o.check(fy == nc && nc == hf, "point " + detail::show(z) + ", y* " + detail::show(ys) + ", x* " +
                                        detail::show(xs) + ": FY " + std::to_string(fy) + " normal " +
                                        std::to_string(nc) + " H-form " + std::to_string(hf));
    }
  }
  return o;
}

/// Linear maps F(x) = {Ax}: F* is the indicator of A^T y* = -x*, and
/// D*F(x, Ax)(y*) = {A^T y*}.
inline InstanceOutcome linear_maps(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t n = detail::rand_dim(rng, prof), p = detail::rand_dim(rng, prof);
  Mat A(p, n);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = rng.uniform(-prof.coeff_bound, prof.coeff_bound);
  const PolyMap F = from_linear(A);
  for (int k = 0; k < 10; ++k) {
    const Vec ys = random_int_vec(rng, p, 3);
    const Vec xs = k % 2 == 0 ? Vec(-A.tmul(ys)) : random_int_vec(rng, n, 3);
    const ExtReal val = conjugate_value(F, xs, ys);
    const ExtReal want = A.tmul(ys) == -xs ? ExtReal(0) : ExtReal::plus_inf();
    o.check(val == want, "F*(" + detail::show(xs) + ", " + detail::show(ys) + ") = " + to_string(val));
  }
  for (int k = 0; k < 3; ++k) {
    const Vec xb = random_int_vec(rng, n, 3), ys = random_int_vec(rng, p, 3);
    const Polyhedron D = coderivative_polyhedron(F, xb, A * xb, ys);
    o.check(equal(D, Polyhedron::point(A.tmul(ys))), "D*F at " + detail::show(xb) + " for y* " + detail::show(ys));
  }
  return o;
}

/// D*(F1+F2)(x̄, ȳ1+ȳ2) = D*F1(x̄,ȳ1) + D*F2(x̄,ȳ2).
inline InstanceOutcome coderivative_sum(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t n = detail::rand_dim(rng, prof), p = detail::rand_dim(rng, prof);
  const PolyMap F1 = random_polymap(rng, n, p, prof), F2 = random_polymap(rng, n, p, prof);
  const Polyhedron omega = ::polyconj::detail::sum_product(F1, F2);  // (x, y1, y2)
  if (is_empty(omega)) {
    o.qualified = false;
    return o;
  }
  const Vec z = random_point_in(rng, omega);
  const Vec xb = slice(z, 0, n), y1 = slice(z, n, p), y2 = slice(z, n + p, p);
  const std::vector<std::size_t> act1 = active_rows(F1.graph(), concat(xb, y1));
  for (int k = 0; k < 3; ++k) {
    const Vec ys = k == 0 ? Vec(-slice(random_cone_vector(rng, F1.graph(), act1), n, p)) : random_int_vec(rng, p, 2);
    const CoderivativeRuleReport r = coderivative_sum_rule_check(F1, F2, xb, y1, y2, ys);
    const std::string at = "point " + detail::show(z) + ", y* " + detail::show(ys);
    o.check(r.rhs_in_lhs, at + " (sum of coderivatives inside coderivative of sum)");
    o.check(r.equal, at + " (equality)");
  }
  return o;
}

/// D*(G∘F)(x̄, z̄) = D*F(x̄,ȳ) ∘ D*G(ȳ,z̄).
inline InstanceOutcome coderivative_chain(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t n = detail::rand_dim(rng, prof), p = detail::rand_dim(rng, prof), q = detail::rand_dim(rng, prof);
  const PolyMap F = random_polymap(rng, n, p, prof), G = random_polymap(rng, p, q, prof);
  const Polyhedron omega = ::polyconj::detail::chain_product(F, G);  // (x, y, z)
  if (is_empty(omega)) {
    o.qualified = false;
    return o;
  }
  const Vec pt = random_point_in(rng, omega);
  const Vec xb = slice(pt, 0, n), yb = slice(pt, n, p), zb = slice(pt, n + p, q);
  const std::vector<std::size_t> actG = active_rows(G.graph(), concat(yb, zb));
  for (int k = 0; k < 3; ++k) {
    const Vec zs = k == 0 ? Vec(-slice(random_cone_vector(rng, G.graph(), actG), p, q)) : random_int_vec(rng, q, 2);
    const CoderivativeRuleReport r = coderivative_chain_rule_check(F, G, xb, yb, zb, zs);
    const std::string at = "point " + detail::show(pt) + ", z* " + detail::show(zs);
    o.check(r.lhs_in_rhs, at + " (lhs inside rhs)");
    o.check(r.rhs_in_lhs, at + " (rhs inside lhs)");
  }
  return o;
}

/// ∂F*(x*, y*) membership matches D*F(·)(-y*) membership; F** membership
/// matches graph membership.
inline InstanceOutcome subdiff_biconjugate(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t n = detail::rand_dim(rng, prof), p = detail::rand_dim(rng, prof);
  const PolyMap F = random_polymap(rng, n, p, prof);
  const std::vector<Vec> pts = sample_graph_points(F, 5, rng.next());
  for (const Vec& w : detail::dual_points(rng, F.graph(), 4, 2)) {
    if (!support_value(F.graph(), w).finite()) continue;
    const Vec xs = slice(w, 0, n), ys = slice(w, n, p);
    const Polyhedron face = conjugate_subdifferential(F, xs, ys);
    for (const Vec& z : pts) {
      const bool a = contains(face, z);
      const bool b = coderivative_contains(F, slice(z, 0, n), slice(z, n, p), -ys, xs);
      o.check(a == b, "dual " + detail::show(w) + " at " + detail::show(z));
    }
  }
  for (int k = 0; k < 10; ++k) {
    Vec z;
    if (k < 4) {
      z = pts[static_cast<std::size_t>(k)];
    } else if (k < 7) {
      const std::size_t i = rng.next() % F.graph().rows();
      z = pts[rng.next() % pts.size()] + Rational(1, rng.uniform(1, 3)) * F.graph().A().row_vec(i);
    } else {
      z = random_int_vec(rng, n + p, prof.coeff_bound);
    }
    const bool in = contains(F.graph(), z);
    o.check(biconjugate_contains(F, slice(z, 0, n), slice(z, n, p)) == in,
            "biconjugate at " + detail::show(z) + " (graph membership " + std::to_string(in) + ")");
  }
  return o;
}

/// (f1 + f2)* = f1* □ f2* and ∂(f1 + f2) = ∂f1 + ∂f2.
inline InstanceOutcome function_sum(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t n = detail::rand_dim(rng, prof);
  const PLFunction f1 = random_plfunction(rng, n, prof), f2 = random_plfunction(rng, n, prof);
  const Polyhedron dom = intersect(f1.dom(), f2.dom());
  if (is_empty(dom)) {
    o.qualified = false;
    return o;
  }
  const Vec xb = random_point_in(rng, dom);
  const Polyhedron sd = subdifferential(pointwise_sum(f1, f2), xb);
  for (int k = 0; k < 3; ++k) {
    const Vec xs = k == 0 ? random_point_in(rng, sd) : random_int_vec(rng, n, 3);
    const FunctionSumReport r = sum_rule_function_check(f1, f2, xs, xb);
    o.check(r.passed(), "x* " + detail::show(xs) + ", xbar " + detail::show(xb) + ": lhs " + to_string(r.conj_lhs) +
                            ", rhs " + to_string(r.conj_rhs) + ", subdifferentials equal " +
                            std::to_string(r.subdiff_equal));
  }
  return o;
}

/// (g∘A)*(x*) = inf{g*(y*) : A^T y* = x*} and ∂(g∘A)(x̄) = A^T ∂g(Ax̄).
inline InstanceOutcome linear_chain(Xorshift64Star& rng, const Profile& prof) {
  InstanceOutcome o;
  const std::size_t n = detail::rand_dim(rng, prof), p = detail::rand_dim(rng, prof);
  const PLFunction g = random_plfunction(rng, p, prof);
  Mat A(p, n);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = rng.uniform(-2, 2);
  Polyhedron pre(n);
  for (std::size_t i = 0; i < g.dom().rows(); ++i) pre.add_row(A.tmul(g.dom().A().row_vec(i)), g.dom().b()[i]);
  if (is_empty(pre)) {
    o.qualified = false;
    return o;
  }
  const Vec xb = random_point_in(rng, pre);
  const Polyhedron sd = subdifferential(compose_linear(g, A), xb);
  for (int k = 0; k < 3; ++k) {
    const Vec xs = k == 0 ? random_point_in(rng, sd) : random_int_vec(rng, n, 3);
    const LinearChainReport r = linear_chain_check(g, A, xs, xb);
    o.check(r.passed(), "x* " + detail::show(xs) + ", xbar " + detail::show(xb) + ": lhs " + to_string(r.conj_lhs) +
                            ", rhs " + to_string(r.conj_rhs) + ", subdifferentials equal " +
                            std::to_string(r.subdiff_equal));
  }
  return o;
}

}  // namespace suites

struct SuiteSpec {
  const char* name;
  InstanceCheck fn;
};

inline std::vector<SuiteSpec> all_suites() {
  return {
      {"support_certificates", suites::support_certificates},
      {"oracle_equivalence", suites::oracle_equivalence},
      {"intersection_rule", suites::intersection_rule},
      {"sum_rule", suites::sum_rule},
      {"chain_rule", suites::chain_rule},
      {"intersection_map_rule", suites::intersection_map_rule},
      {"coderivative_routes", suites::coderivative_routes},
      {"linear_maps", suites::linear_maps},
      {"coderivative_sum_rule", suites::coderivative_sum},
      {"coderivative_chain_rule", suites::coderivative_chain},
      {"subdiff_biconjugate", suites::subdiff_biconjugate},
      {"function_sum_rule", suites::function_sum},
      {"linear_chain_rule", suites::linear_chain},
  };
}

struct SelfcheckReport {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  Profile profile;
  std::vector<SuiteResult> suites;

  bool ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
  }
};

inline SelfcheckReport selfcheck(std::uint64_t seed, std::size_t count, const Profile& prof, unsigned threads = 1) {
  SelfcheckReport rep{seed, count, prof, {}};
  if (count == 0) return rep;
  for (const SuiteSpec& s : all_suites()) rep.suites.push_back(run_suite(s.name, s.fn, seed, count, prof, threads));
  return rep;
}

inline io::Json to_json(const SelfcheckReport& r) {
  io::Json suites = io::Json::array();
  std::size_t checks = 0, passed = 0;
  for (const SuiteResult& s : r.suites) {
    suites.push_back(io::Json{{"name", s.name},
                              {"instances", s.instances},
                              {"qualified", s.qualified},
                              {"checks", s.checks},
                              {"passed", s.passed},
                              {"failed", s.failed()},
                              {"failures", s.failures}});
    checks += s.checks;
    passed += s.passed;
  }
  return io::Json{
      {"seed", std::to_string(r.seed)},
      {"count", r.count},
      {"profile", {{"max_dim", r.profile.max_dim}, {"max_rows", r.profile.max_rows}, {"coeff_bound", r.profile.coeff_bound}}},
      {"suites", suites},
      {"summary", {{"suites", r.suites.size()}, {"checks", checks}, {"passed", passed}, {"failed", checks - passed}}},
  };
}

inline std::string to_text(const SelfcheckReport& r) {
  std::ostringstream out;
  out << "selfcheck seed " << r.seed << ", count " << r.count << ", profile " << r.profile.max_dim << ","
      << r.profile.max_rows << "," << r.profile.coeff_bound << "\n";
  std::size_t checks = 0, passed = 0;
  for (const SuiteResult& s : r.suites) {
    out << "  " << s.name << ": " << s.passed << "/" << s.checks << " checks passed over " << s.instances
        << " instances (" << s.qualified << " qualified)\n";
    for (const std::string& f : s.failures) out << "    FAILED " << f << "\n";
    checks += s.checks;
    passed += s.passed;
  }
  out << r.suites.size() << " suites, " << checks << " checks, " << passed << " passed, " << checks - passed
      << " failed\n";
  return out.str();
}

}  // namespace polyconj
