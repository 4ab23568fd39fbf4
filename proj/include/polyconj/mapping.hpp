#pragma once

// Polyhedral convex set-valued mappings F: R^n ⇉ R^p stored by their graph.
// Graph coordinates are always ordered (x-block, y-block).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polyconj/linalg.hpp"
#include "polyconj/polyhedron.hpp"
#include "polyconj/support.hpp"

namespace polyconj {

class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(std::size_t n, std::size_t p, Polyhedron graph) : n_(n), p_(p), graph_(std::move(graph)) {
    require_dims(graph_.dim() == n_ + p_, "mapping graph dimension vs n + p");
  }

  std::size_t n() const { return n_; }
  std::size_t p() const { return p_; }
  const Polyhedron& graph() const { return graph_; }

  /// F(x) as a polyhedron in R^p.
  Polyhedron value_at(const Vec& x) const {
    require_dims(x.size() == n_, "mapping argument");
    Polyhedron out(p_);
    for (std::size_t i = 0; i < graph_.rows(); ++i) {
      Rational rhs = graph_.b()[i];
      for (std::size_t j = 0; j < n_; ++j) rhs -= graph_.A()(i, j) * x[j];
      out.add_row(slice(graph_.A().row_vec(i), n_, p_), rhs);
    }
    return out;
  }

  bool in_graph(const Vec& x, const Vec& y) const {
    require_dims(x.size() == n_ && y.size() == p_, "graph point");
    return contains(graph_, concat(x, y));
  }

 private:
  std::size_t n_ = 0;
  std::size_t p_ = 0;
  Polyhedron graph_;
};

inline std::vector<std::size_t> index_range(std::size_t from, std::size_t count) {
  std::vector<std::size_t> r(count);
  for (std::size_t i = 0; i < count; ++i) r[i] = from + i;
  return r;
}

/// F(x) = {A x}: graph {(x, y) : A x - y <= 0, y - A x <= 0}.
inline PolyMap from_linear(const Mat& A) {
  const std::size_t p = A.rows(), n = A.cols();
  Polyhedron g(n + p);
  for (std::size_t i = 0; i < p; ++i) {
    Vec a = zeros(n + p);
    for (std::size_t j = 0; j < n; ++j) a[j] = A(i, j);
    a[n + i] = -1;
    g.add_equality(a, Rational(0));
  }
  return PolyMap(n, p, std::move(g));
}

/// F*(x*, y*) = σ_{gph F}(x*, y*).
inline SupportEval conjugate_eval(const PolyMap& F, const Vec& xstar, const Vec& ystar) {
  require_dims(xstar.size() == F.n() && ystar.size() == F.p(), "conjugate arguments");
  return support_eval(F.graph(), concat(xstar, ystar));
}

inline ExtReal conjugate_value(const PolyMap& F, const Vec& xstar, const Vec& ystar) {
  return conjugate_eval(F, xstar, ystar).value;
}

inline Polyhedron domain(const PolyMap& F) { return project(F.graph(), index_range(0, F.n())); }
inline Polyhedron range(const PolyMap& F) { return project(F.graph(), index_range(F.n(), F.p())); }

/// Inverse mapping: swaps the blocks.
inline PolyMap inverse(const PolyMap& F) {
  const std::size_t n = F.n(), p = F.p();
  Polyhedron g(n + p);
  for (std::size_t i = 0; i < F.graph().rows(); ++i) {
    Vec a = F.graph().A().row_vec(i);
    g.add_row(concat(slice(a, n, p), slice(a, 0, n)), F.graph().b()[i]);
  }
  return PolyMap(p, n, std::move(g));
}

// ---------------------------------------------------------------------------
// Coderivatives.

namespace detail {

inline void require_graph_point(const PolyMap& F, const Vec& xbar, const Vec& ybar, const char* who) {
  require_dims(xbar.size() == F.n() && ybar.size() == F.p(), std::string(who) + ": base point");
  if (!F.in_graph(xbar, ybar)) throw PreconditionError(std::string(who) + ": (xbar, ybar) is not in the graph");
}

}  // namespace detail

/// <y*, ȳ> + F*(x*, -y*) - <x*, x̄>; never negative.
inline ExtReal fenchel_young_gap(const PolyMap& F, const Vec& xbar, const Vec& ybar, const Vec& ystar,
                                 const Vec& xstar) {
  detail::require_graph_point(F, xbar, ybar, "fenchel_young_gap");
  require_dims(ystar.size() == F.p() && xstar.size() == F.n(), "fenchel_young_gap: dual vectors");
  const ExtReal conj = conjugate_value(F, xstar, -ystar);
  return conj + ExtReal(Rational(dot(ystar, ybar) - dot(xstar, xbar)));
}

/// x* ∈ D*F(x̄,ȳ)(y*) via equality in the Fenchel-Young inequality.
inline bool coderivative_contains_fy(const PolyMap& F, const Vec& xbar, const Vec& ybar, const Vec& ystar,
                                     const Vec& xstar) {
  const ExtReal gap = fenchel_young_gap(F, xbar, ybar, ystar, xstar);
  return gap.finite() && sgn(gap.value()) == 0;
}

/// x* ∈ D*F(x̄,ȳ)(y*) via (x*, -y*) ∈ pos{active rows}, an LP feasibility test.
inline bool coderivative_contains_normal(const PolyMap& F, const Vec& xbar, const Vec& ybar, const Vec& ystar,
                                         const Vec& xstar) {
  detail::require_graph_point(F, xbar, ybar, "coderivative_contains");
  require_dims(ystar.size() == F.p() && xstar.size() == F.n(), "coderivative_contains: dual vectors");
  const std::vector<std::size_t> act = active_rows(F.graph(), concat(xbar, ybar));
  const std::size_t d = F.n() + F.p();
  Mat eq(d, act.size());
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t t = 0; t < act.size(); ++t) eq(j, t) = F.graph().A()(act[t], j);
  LPOutcome o = detail::solve_multiplier_lp(zeros(act.size()), eq, concat(xstar, -ystar));
  return o.status != LPStatus::Infeasible;
}

/// Both routes, which must agree for a convex mapping.
inline bool coderivative_contains(const PolyMap& F, const Vec& xbar, const Vec& ybar, const Vec& ystar,
                                  const Vec& xstar) {
  const bool fy = coderivative_contains_fy(F, xbar, ybar, ystar, xstar);
  const bool nc = coderivative_contains_normal(F, xbar, ybar, ystar, xstar);
  if (fy != nc) throw std::logic_error("coderivative_contains: Fenchel-Young and normal-cone routes disagree");
  return fy;
}

/// Normal cone of the graph at (x̄, ȳ) as a set of (x*, y*).
inline Polyhedron graph_normal_cone(const PolyMap& F, const Vec& xbar, const Vec& ybar) {
  detail::require_graph_point(F, xbar, ybar, "graph_normal_cone");
  return normal_cone(F.graph(), concat(xbar, ybar));
}

namespace detail {

/// {x* : (x*, -y*) ∈ N} for a cone N over (x*, y*) with x-block size n.
inline Polyhedron slice_coderivative(const Polyhedron& N, std::size_t n, const Vec& ystar) {
  const std::size_t p = ystar.size();
  Polyhedron out(n);
  for (std::size_t i = 0; i < N.rows(); ++i) {
    Rational rhs = N.b()[i];
    for (std::size_t j = 0; j < p; ++j) rhs += N.A()(i, n + j) * ystar[j];
    out.add_row(slice(N.A().row_vec(i), 0, n), rhs);
  }
  return out;
}

}  // namespace detail

/// D*F(x̄,ȳ)(y*) in H-form over x*-space.
inline Polyhedron coderivative_polyhedron(const PolyMap& F, const Vec& xbar, const Vec& ybar, const Vec& ystar) {
  require_dims(ystar.size() == F.p(), "coderivative_polyhedron: y*");
  return detail::slice_coderivative(graph_normal_cone(F, xbar, ybar), F.n(), ystar);
}

/// ∂F*(x*, y*) = argmax face of the graph in direction (x*, y*).
inline Polyhedron conjugate_subdifferential(const PolyMap& F, const Vec& xstar, const Vec& ystar) {
  require_dims(xstar.size() == F.n() && ystar.size() == F.p(), "conjugate_subdifferential arguments");
  if (!conjugate_value(F, xstar, ystar).finite())
    throw PreconditionError("conjugate_subdifferential: conjugate value is not finite");
  return face_argmax(F.graph(), concat(xstar, ystar));
}

/// F**(x, y) from conjugate values only: for a nonempty polyhedral graph,
/// gph F = {z : <a_i, z> <= F*(a_i)} over the graph's row normals, so F** is 0
/// there and +∞ elsewhere. Empty graph gives F* ≡ -∞ and F** ≡ +∞.
inline ExtReal biconjugate_value(const PolyMap& F, const Vec& x, const Vec& y) {
  require_dims(x.size() == F.n() && y.size() == F.p(), "biconjugate arguments");
  const Vec z = concat(x, y);
  for (std::size_t i = 0; i < F.graph().rows(); ++i) {
    const Vec a = F.graph().A().row_vec(i);
    const ExtReal s = support_value(F.graph(), a);
    if (s.is_minus_inf()) return ExtReal::plus_inf();
    if (s.finite() && dot(a, z) > s.value()) return ExtReal::plus_inf();
  }
  return Rational(0);
}

inline bool biconjugate_contains(const PolyMap& F, const Vec& x, const Vec& y) {
  return biconjugate_value(F, x, y) == ExtReal(0);
}

}  // namespace polyconj
