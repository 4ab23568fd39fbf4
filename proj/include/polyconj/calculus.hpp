#pragma once

// Constructive calculus for polyhedral mappings: sum, composition and
// intersection graphs built by projection, and checks of the conjugate and
// coderivative rules with attaining witnesses.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyconj/linalg.hpp"
#include "polyconj/mapping.hpp"
#include "polyconj/polyhedron.hpp"
#include "polyconj/support.hpp"

namespace polyconj {

namespace detail {

inline void require_same_shape(const PolyMap& F1, const PolyMap& F2, const char* who) {
  require_dims(F1.n() == F2.n() && F1.p() == F2.p(), std::string(who) + ": mapping dimensions differ");
}

/// Copies the rows of `src` (over src.dim() coordinates) into `dst`, mapping
/// source coordinate k to destination coordinate cols[k] (coefficients
/// accumulate when two source coordinates share a destination).
inline void place_rows(Polyhedron& dst, const Polyhedron& src, const std::vector<std::size_t>& cols,
                       const std::vector<int>& signs = {}) {
  for (std::size_t i = 0; i < src.rows(); ++i) {
    Vec a = zeros(dst.dim());
    for (std::size_t k = 0; k < src.dim(); ++k) {
      Rational c = src.A()(i, k);
      if (!signs.empty() && signs[k] < 0) c = -c;
      a[cols[k]] += c;
    }
    dst.add_row(a, src.b()[i]);
  }
}

inline std::vector<std::size_t> join(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// {(x, y1, y) : (x, y1) ∈ gph F1, (x, y - y1) ∈ gph F2} in R^{n+p+p}.
inline Polyhedron sum_lift(const PolyMap& F1, const PolyMap& F2) {
  const std::size_t n = F1.n(), p = F1.p();
  Polyhedron sys(n + 2 * p);
  place_rows(sys, F1.graph(), join(index_range(0, n), index_range(n, p)));
  // (x, y - y1): column for y_j gets +a, column for y1_j gets -a.
  for (std::size_t i = 0; i < F2.graph().rows(); ++i) {
    Vec a = zeros(n + 2 * p);
    for (std::size_t j = 0; j < n; ++j) a[j] = F2.graph().A()(i, j);
    for (std::size_t j = 0; j < p; ++j) {
      a[n + j] -= F2.graph().A()(i, n + j);
      a[n + p + j] += F2.graph().A()(i, n + j);
    }
    sys.add_row(a, F2.graph().b()[i]);
  }
  return sys;
}

/// Ω1 ∩ Ω2 over (x, y1, y2): y1 ∈ F1(x), y2 ∈ F2(x).
inline Polyhedron sum_product(const PolyMap& F1, const PolyMap& F2) {
  const std::size_t n = F1.n(), p = F1.p();
  Polyhedron sys(n + 2 * p);
  place_rows(sys, F1.graph(), join(index_range(0, n), index_range(n, p)));
  place_rows(sys, F2.graph(), join(index_range(0, n), index_range(n + p, p)));
  return sys;
}

/// Ω1 ∩ Ω2 over (x, y, z): (x, y) ∈ gph F, (y, z) ∈ gph G.
inline Polyhedron chain_product(const PolyMap& F, const PolyMap& G) {
  const std::size_t n = F.n(), p = F.p(), q = G.p();
  Polyhedron sys(n + p + q);
  place_rows(sys, F.graph(), index_range(0, n + p));
  place_rows(sys, G.graph(), index_range(n, p + q));
  return sys;
}

}  // namespace detail

/// x ↦ F1(x) + F2(x).
inline PolyMap sum_map(const PolyMap& F1, const PolyMap& F2) {
  detail::require_same_shape(F1, F2, "sum_map");
  const std::size_t n = F1.n(), p = F1.p();
  return PolyMap(n, p, project(detail::sum_lift(F1, F2), detail::join(index_range(0, n), index_range(n + p, p))));
}

/// G ∘ F for F: R^n ⇉ R^p, G: R^p ⇉ R^q.
inline PolyMap compose_map(const PolyMap& F, const PolyMap& G) {
  require_dims(F.p() == G.n(), "compose_map: F target vs G source");
  const std::size_t n = F.n(), p = F.p(), q = G.p();
  return PolyMap(n, q,
                 project(detail::chain_product(F, G), detail::join(index_range(0, n), index_range(n + p, q))));
}

/// gph(F1 ∩ F2) = gph F1 ∩ gph F2.
inline PolyMap intersect_map(const PolyMap& F1, const PolyMap& F2) {
  detail::require_same_shape(F1, F2, "intersect_map");
  return PolyMap(F1.n(), F1.p(), intersect(F1.graph(), F2.graph()));
}

// ---------------------------------------------------------------------------

enum class RuleKind { Sum, Chain, Intersection };

inline const char* to_string(RuleKind k) {
  switch (k) {
    case RuleKind::Sum: return "sum";
    case RuleKind::Chain: return "chain";
    case RuleKind::Intersection: return "intersection";
  }
  return "?";
}

/// Outcome of a conjugate calculus rule at one dual point.
///
/// `witness` holds the attaining decomposition when the right-hand LP is
/// finite: {u1, u2} for the sum rule, {v} for the chain rule, and
/// {(u1, v1), (u2, v2)} for the intersection rule. `witness_value` is the
/// right side recomputed from separate conjugate evaluations at the witness.
/// `reduction` is the left side recomputed on the un-projected product set.
struct RuleReport {
  RuleKind kind = RuleKind::Sum;
  ExtReal lhs;
  ExtReal rhs;
  bool equal = false;
  bool inequality_holds = false;
  std::optional<std::vector<Vec>> witness;
  std::optional<ExtReal> witness_value;
  ExtReal reduction;
  Qualification qualification;
  bool applicable = false;

  bool witness_attains() const { return witness_value && *witness_value == rhs; }

  /// What the theorem demands: lhs <= rhs always; when applicable, equality,
  /// and for finite lhs an attaining witness. The reduction route must match.
  bool passed() const {
    if (!inequality_holds || reduction != lhs) return false;
    if (!applicable) return true;
    if (!equal) return false;
    return !lhs.finite() || witness_attains();
  }
};

/// Exact qualification flags: (c) via emptiness, (a) via common
/// relative-interior points of the relevant polyhedra.
inline Qualification qualification_report(RuleKind kind, const PolyMap& F1, const PolyMap& F2) {
  Polyhedron A, B;
  switch (kind) {
    case RuleKind::Sum:
      detail::require_same_shape(F1, F2, "qualification_report");
      A = domain(F1);
      B = domain(F2);
      break;
    case RuleKind::Chain:
      require_dims(F1.p() == F2.n(), "qualification_report: F target vs G source");
      A = range(F1);
      B = domain(F2);
      break;
    case RuleKind::Intersection:
      detail::require_same_shape(F1, F2, "qualification_report");
      A = F1.graph();
      B = F2.graph();
      break;
  }
  Qualification q;
  q.nonempty = !is_empty(intersect(A, B));
  q.relative_interior = q.nonempty && relative_interiors_meet(A, B);
  return q;
}

namespace detail {

inline void finish(RuleReport& r) {
  r.equal = r.lhs == r.rhs;
  r.inequality_holds = r.lhs <= r.rhs;
  r.applicable = r.qualification.nonempty;
}

/// Joint LP for inf{F1*(u1, v) + F2*(u2, v) : u1 + u2 = u}:
///   min Σλb¹ + Σμb²  s.t.  y(A1^T λ) = v,  y(A2^T μ) = v,  x(A1^T λ) + x(A2^T μ) = u.
inline std::pair<ExtReal, std::optional<Vec>> sum_rhs(const PolyMap& F1, const PolyMap& F2, const Vec& u,
                                                      const Vec& v) {
  const std::size_t n = F1.n(), p = F1.p(), m1 = F1.graph().rows(), m2 = F2.graph().rows();
  Mat eq(n + 2 * p, m1 + m2);
  Vec rhs = concat(concat(u, v), v);
  for (std::size_t i = 0; i < m1; ++i) {
    for (std::size_t j = 0; j < n; ++j) eq(j, i) = F1.graph().A()(i, j);
    for (std::size_t j = 0; j < p; ++j) eq(n + j, i) = F1.graph().A()(i, n + j);
  }
  for (std::size_t i = 0; i < m2; ++i) {
    for (std::size_t j = 0; j < n; ++j) eq(j, m1 + i) = F2.graph().A()(i, j);
    for (std::size_t j = 0; j < p; ++j) eq(n + p + j, m1 + i) = F2.graph().A()(i, n + j);
  }
  LPOutcome o = solve_multiplier_lp(concat(F1.graph().b(), F2.graph().b()), eq, rhs);
  std::optional<Vec> u1;
  if (o.status == LPStatus::Optimal) u1 = slice(F1.graph().A().tmul(slice(*o.primal, 0, m1)), 0, n);
  return {multiplier_lp_value(o), u1};
}

/// Joint LP for inf{F*(u, v) + G*(-v, w)}:
///   min Σλb_F + Σμb_G  s.t.  x(A_F^T λ) = u,  z(A_G^T μ) = w,  y(A_F^T λ) + y(A_G^T μ) = 0.
inline std::pair<ExtReal, std::optional<Vec>> chain_rhs(const PolyMap& F, const PolyMap& G, const Vec& u,
                                                        const Vec& w) {
  const std::size_t n = F.n(), p = F.p(), q = G.p(), m1 = F.graph().rows(), m2 = G.graph().rows();
  Mat eq(n + q + p, m1 + m2);
  Vec rhs = concat(concat(u, w), zeros(p));
  for (std::size_t i = 0; i < m1; ++i) {
    for (std::size_t j = 0; j < n; ++j) eq(j, i) = F.graph().A()(i, j);
    for (std::size_t j = 0; j < p; ++j) eq(n + q + j, i) = F.graph().A()(i, n + j);
  }
  for (std::size_t i = 0; i < m2; ++i) {
    for (std::size_t j = 0; j < q; ++j) eq(n + j, m1 + i) = G.graph().A()(i, p + j);
    for (std::size_t j = 0; j < p; ++j) eq(n + q + j, m1 + i) = G.graph().A()(i, j);
  }
  LPOutcome o = solve_multiplier_lp(concat(F.graph().b(), G.graph().b()), eq, rhs);
  std::optional<Vec> v;
  if (o.status == LPStatus::Optimal) v = slice(F.graph().A().tmul(slice(*o.primal, 0, m1)), n, p);
  return {multiplier_lp_value(o), v};
}

}  // namespace detail

/// Conjugate sum rule at each (u, v) in `points`, sharing the constructed
/// sum graph and the qualification analysis.
inline std::vector<RuleReport> sum_rule_check(const PolyMap& F1, const PolyMap& F2,
                                              const std::vector<std::pair<Vec, Vec>>& points) {
  detail::require_same_shape(F1, F2, "sum_rule_check");
  const PolyMap S = sum_map(F1, F2);
  const Polyhedron omega = detail::sum_product(F1, F2);
  const Qualification q = qualification_report(RuleKind::Sum, F1, F2);
  std::vector<RuleReport> out;
  for (const auto& [u, v] : points) {
    require_dims(u.size() == F1.n() && v.size() == F1.p(), "sum_rule_check: dual point");
    RuleReport r;
    r.kind = RuleKind::Sum;
    r.qualification = q;
    r.lhs = conjugate_value(S, u, v);
    r.reduction = support_value(omega, concat(concat(u, v), v));
    auto [rhs, u1] = detail::sum_rhs(F1, F2, u, v);
    r.rhs = rhs;
    if (u1) {
      const Vec u2 = u - *u1;
      r.witness = std::vector<Vec>{*u1, u2};
      r.witness_value = conjugate_value(F1, *u1, v) + conjugate_value(F2, u2, v);
    }
    detail::finish(r);
    out.push_back(std::move(r));
  }
  return out;
}

inline RuleReport sum_rule_check(const PolyMap& F1, const PolyMap& F2, const Vec& u, const Vec& v) {
  return sum_rule_check(F1, F2, {{u, v}}).front();
}

/// Conjugate chain rule (G ∘ F)*(u, w) = inf_v F*(u, v) + G*(-v, w).
inline std::vector<RuleReport> chain_rule_check(const PolyMap& F, const PolyMap& G,
                                                const std::vector<std::pair<Vec, Vec>>& points) {
  require_dims(F.p() == G.n(), "chain_rule_check: F target vs G source");
  const PolyMap C = compose_map(F, G);
  const Polyhedron omega = detail::chain_product(F, G);
  const Qualification q = qualification_report(RuleKind::Chain, F, G);
  std::vector<RuleReport> out;
  for (const auto& [u, w] : points) {
    require_dims(u.size() == F.n() && w.size() == G.p(), "chain_rule_check: dual point");
    RuleReport r;
    r.kind = RuleKind::Chain;
    r.qualification = q;
    r.lhs = conjugate_value(C, u, w);
    r.reduction = support_value(omega, concat(concat(u, zeros(F.p())), w));
    auto [rhs, v] = detail::chain_rhs(F, G, u, w);
    r.rhs = rhs;
    if (v) {
      r.witness = std::vector<Vec>{*v};
      r.witness_value = conjugate_value(F, u, *v) + conjugate_value(G, -*v, w);
    }
    detail::finish(r);
    out.push_back(std::move(r));
  }
  return out;
}

inline RuleReport chain_rule_check(const PolyMap& F, const PolyMap& G, const Vec& u, const Vec& w) {
  return chain_rule_check(F, G, {{u, w}}).front();
}

/// Conjugate intersection rule (F1 ∩ F2)* = F1* □ F2*.
inline std::vector<RuleReport> intersection_rule_map_check(const PolyMap& F1, const PolyMap& F2,
                                                           const std::vector<std::pair<Vec, Vec>>& points) {
  detail::require_same_shape(F1, F2, "intersection_rule_map_check");
  const PolyMap I = intersect_map(F1, F2);
  const Qualification q = qualification_report(RuleKind::Intersection, F1, F2);
  const std::size_t n = F1.n(), p = F1.p();
  std::vector<RuleReport> out;
  for (const auto& [u, v] : points) {
    require_dims(u.size() == n && v.size() == p, "intersection_rule_map_check: dual point");
    RuleReport r;
    r.kind = RuleKind::Intersection;
    r.qualification = q;
    r.lhs = conjugate_value(I, u, v);
    r.reduction = r.lhs;  // the intersection graph needs no projection
    InfConvolution ic = inf_convolution_support(F1.graph(), F2.graph(), concat(u, v));
    r.rhs = ic.value;
    if (ic.split) {
      const Vec& s1 = ic.split->first;
      const Vec& s2 = ic.split->second;
      r.witness = std::vector<Vec>{s1, s2};
      r.witness_value = conjugate_value(F1, slice(s1, 0, n), slice(s1, n, p)) +
                        conjugate_value(F2, slice(s2, 0, n), slice(s2, n, p));
    }
    detail::finish(r);
    out.push_back(std::move(r));
  }
  return out;
}

inline RuleReport intersection_rule_map_check(const PolyMap& F1, const PolyMap& F2, const Vec& u, const Vec& v) {
  return intersection_rule_map_check(F1, F2, {{u, v}}).front();
}

// ---------------------------------------------------------------------------
// Coderivative rules.

/// P1 + P2 via projection of {(s, a, b) : s = a + b, a ∈ P1, b ∈ P2}.
inline Polyhedron minkowski_sum(const Polyhedron& P1, const Polyhedron& P2) {
  require_dims(P1.dim() == P2.dim(), "minkowski_sum");
  const std::size_t n = P1.dim();
  Polyhedron sys(3 * n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec a = zeros(3 * n);
    a[j] = 1;
    a[n + j] = -1;
    a[2 * n + j] = -1;
    sys.add_equality(a, Rational(0));
  }
  detail::place_rows(sys, P1, index_range(n, n));
  detail::place_rows(sys, P2, index_range(2 * n, n));
  return project(sys, index_range(0, n));
}

/// Both sides of a coderivative rule as polyhedra in x*-space.
/// `rhs_in_lhs`/`lhs_in_rhs` are the two inclusions; `equal` both.
struct CoderivativeRuleReport {
  Polyhedron lhs;
  Polyhedron rhs;
  bool lhs_in_rhs = false;
  bool rhs_in_lhs = false;
  bool equal = false;
  Qualification qualification;
};

/// D*(F1+F2)(x̄, ȳ1+ȳ2)(y*) versus D*F1(x̄,ȳ1)(y*) + D*F2(x̄,ȳ2)(y*).
inline CoderivativeRuleReport coderivative_sum_rule_check(const PolyMap& F1, const PolyMap& F2, const Vec& xbar,
                                                          const Vec& ybar1, const Vec& ybar2, const Vec& ystar) {
  detail::require_same_shape(F1, F2, "coderivative_sum_rule_check");
  detail::require_graph_point(F1, xbar, ybar1, "coderivative_sum_rule_check (F1)");
  detail::require_graph_point(F2, xbar, ybar2, "coderivative_sum_rule_check (F2)");
  CoderivativeRuleReport r;
  r.lhs = coderivative_polyhedron(sum_map(F1, F2), xbar, ybar1 + ybar2, ystar);
  r.rhs = minkowski_sum(coderivative_polyhedron(F1, xbar, ybar1, ystar),
                        coderivative_polyhedron(F2, xbar, ybar2, ystar));
  r.lhs_in_rhs = includes(r.rhs, r.lhs);
  r.rhs_in_lhs = includes(r.lhs, r.rhs);
  r.equal = r.lhs_in_rhs && r.rhs_in_lhs;
  r.qualification = qualification_report(RuleKind::Sum, F1, F2);
  return r;
}

/// D*(G∘F)(x̄, z̄)(z*) versus (D*F(x̄,ȳ) ∘ D*G(ȳ,z̄))(z*), ȳ ∈ F(x̄) ∩ G^{-1}(z̄).
inline CoderivativeRuleReport coderivative_chain_rule_check(const PolyMap& F, const PolyMap& G, const Vec& xbar,
                                                            const Vec& ybar, const Vec& zbar, const Vec& zstar) {
  require_dims(F.p() == G.n(), "coderivative_chain_rule_check: F target vs G source");
  detail::require_graph_point(F, xbar, ybar, "coderivative_chain_rule_check (F)");
  detail::require_graph_point(G, ybar, zbar, "coderivative_chain_rule_check (G)");
  require_dims(zstar.size() == G.p(), "coderivative_chain_rule_check: z*");
  const std::size_t n = F.n(), p = F.p();
  CoderivativeRuleReport r;
  r.lhs = coderivative_polyhedron(compose_map(F, G), xbar, zbar, zstar);

  // {(x*, y*) : (x*, -y*) ∈ N_F, y* ∈ D*G(ȳ,z̄)(z*)}, projected to x*.
  const Polyhedron NF = graph_normal_cone(F, xbar, ybar);
  const Polyhedron DG = coderivative_polyhedron(G, ybar, zbar, zstar);
  Polyhedron sys(n + p);
  std::vector<int> flip(n + p, 1);
  for (std::size_t j = 0; j < p; ++j) flip[n + j] = -1;
  detail::place_rows(sys, NF, index_range(0, n + p), flip);
  detail::place_rows(sys, DG, index_range(n, p));
  r.rhs = project(sys, index_range(0, n));

  r.lhs_in_rhs = includes(r.rhs, r.lhs);
  r.rhs_in_lhs = includes(r.lhs, r.rhs);
  r.equal = r.lhs_in_rhs && r.rhs_in_lhs;
  r.qualification = qualification_report(RuleKind::Chain, F, G);
  return r;
}

}  // namespace polyconj
