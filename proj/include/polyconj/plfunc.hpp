#pragma once

// Piecewise-linear convex functions f(x) = max_i <c_i, x> + d_i on a
// polyhedral domain (+∞ outside), handled through the epigraphical mapping
// E_f whose graph is epi f.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyconj/calculus.hpp"
#include "polyconj/linalg.hpp"
#include "polyconj/mapping.hpp"
#include "polyconj/polyhedron.hpp"
#include "polyconj/support.hpp"

namespace polyconj {

struct AffinePiece {
  Vec c;
  Rational d;
};

class PLFunction {
 public:
  PLFunction() = default;

  /// Requires at least one piece and a nonempty domain.
  PLFunction(std::vector<AffinePiece> pieces, Polyhedron dom) : pieces_(std::move(pieces)), dom_(std::move(dom)) {
    if (pieces_.empty()) throw InputError("PLFunction: no affine pieces");
    for (const AffinePiece& pc : pieces_) require_dims(pc.c.size() == dom_.dim(), "PLFunction piece");
    if (is_empty(dom_)) throw InputError("PLFunction: empty domain");
  }

  /// max of the given pieces on all of R^n.
  static PLFunction max_affine(std::vector<AffinePiece> pieces) {
    const std::size_t n = pieces.empty() ? 0 : pieces.front().c.size();
    return PLFunction(std::move(pieces), Polyhedron::whole_space(n));
  }

  std::size_t n() const { return dom_.dim(); }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const Polyhedron& dom() const { return dom_; }

  /// Direct evaluation: +∞ off the domain, otherwise the largest piece.
  ExtReal operator()(const Vec& x) const {
    require_dims(x.size() == n(), "PLFunction argument");
    if (!contains(dom_, x)) return ExtReal::plus_inf();
    Rational best = dot(pieces_.front().c, x) + pieces_.front().d;
    for (const AffinePiece& pc : pieces_) {
      Rational v = dot(pc.c, x) + pc.d;
      if (v > best) best = v;
    }
    return best;
  }

 private:
  std::vector<AffinePiece> pieces_;
  Polyhedron dom_;
};

/// E_f with graph epi f = {(x, t) : x ∈ dom f, <c_i, x> + d_i <= t}.
inline PolyMap epi_mapping(const PLFunction& f) {
  const std::size_t n = f.n();
  Polyhedron g = embed(f.dom(), n + 1, 0);
  for (const AffinePiece& pc : f.pieces()) {
    Vec a = pc.c;
    a.push_back(-1);
    g.add_row(a, Rational(-pc.d));
  }
  return PolyMap(n, 1, std::move(g));
}

/// f*(x*) = E_f*(x*, -1).
inline ExtReal conjugate(const PLFunction& f, const Vec& xstar) {
  return conjugate_value(epi_mapping(f), xstar, make_vec({-1}));
}

/// ∂f(x̄) = D*E_f(x̄, f(x̄))(1).
inline Polyhedron subdifferential(const PLFunction& f, const Vec& xbar) {
  const ExtReal fx = f(xbar);
  if (!fx.finite()) throw PreconditionError("subdifferential: point outside dom f");
  return coderivative_polyhedron(epi_mapping(f), xbar, Vec{fx.value()}, make_vec({1}));
}

namespace detail {

/// Drops pieces that never attain the maximum on the domain (LP per piece).
inline std::vector<AffinePiece> prune_pieces(std::vector<AffinePiece> pieces, const Polyhedron& dom) {
  const std::size_t n = dom.dim();
  for (std::size_t i = pieces.size(); i-- > 0 && pieces.size() > 1;) {
    Polyhedron epi = embed(dom, n + 1, 0);
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      if (k == i) continue;
      Vec a = pieces[k].c;
      a.push_back(-1);
      epi.add_row(a, Rational(-pieces[k].d));
    }
    // max <c_i, x> - t  over the epigraph of the others; redundant if <= -d_i.
    Vec obj = pieces[i].c;
    obj.push_back(-1);
    LPOutcome o = maximize(epi, obj);
    if (o.status == LPStatus::Optimal && *o.value <= -pieces[i].d) pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return pieces;
}

inline constexpr std::size_t kPiecePruneThreshold = 64;

}  // namespace detail

/// (f1 + f2) with all pairwise piece sums on dom f1 ∩ dom f2.
inline PLFunction pointwise_sum(const PLFunction& f1, const PLFunction& f2) {
  require_dims(f1.n() == f2.n(), "pointwise_sum");
  std::vector<AffinePiece> pieces;
  for (const AffinePiece& a : f1.pieces())
    for (const AffinePiece& b : f2.pieces()) pieces.push_back({a.c + b.c, Rational(a.d + b.d)});
  Polyhedron dom = intersect(f1.dom(), f2.dom());
  if (is_empty(dom)) throw PreconditionError("pointwise_sum: domains do not intersect");
  if (pieces.size() > detail::kPiecePruneThreshold) pieces = detail::prune_pieces(std::move(pieces), dom);
  return PLFunction(std::move(pieces), std::move(dom));
}

/// g ∘ A for g on R^p and A: p × n; dom is the preimage of dom g.
inline PLFunction compose_linear(const PLFunction& g, const Mat& A) {
  require_dims(A.rows() == g.n(), "compose_linear: matrix rows vs g dimension");
  std::vector<AffinePiece> pieces;
  for (const AffinePiece& pc : g.pieces()) pieces.push_back({A.tmul(pc.c), pc.d});
  Polyhedron dom(A.cols());
  for (std::size_t i = 0; i < g.dom().rows(); ++i) dom.add_row(A.tmul(g.dom().A().row_vec(i)), g.dom().b()[i]);
  if (is_empty(dom)) throw PreconditionError("compose_linear: range of A misses dom g");
  return PLFunction(std::move(pieces), std::move(dom));
}

/// max over the given dual points of <x*, x> - f*(x*): a lower bound for
/// f**(x), exact once the grid contains a subgradient at x.
inline ExtReal biconjugate_lower_bound(const PLFunction& f, const Vec& x, const std::vector<Vec>& duals) {
  ExtReal best = ExtReal::minus_inf();
  for (const Vec& s : duals) {
    const ExtReal fs = conjugate(f, s);
    if (!fs.finite()) continue;
    const ExtReal val = ExtReal(dot(s, x)) + (-fs);
    if (val > best) best = val;
  }
  return best;
}

// ---------------------------------------------------------------------------

/// (f1+f2)* = f1* □ f2*  and  ∂(f1+f2)(x̄) = ∂f1(x̄) + ∂f2(x̄).
struct FunctionSumReport {
  ExtReal conj_lhs;
  ExtReal conj_rhs;
  bool conj_equal = false;
  std::optional<std::pair<Vec, Vec>> split;  // (x1*, x2*)
  std::optional<ExtReal> split_value;        // f1*(x1*) + f2*(x2*)
  Polyhedron subdiff_lhs;
  Polyhedron subdiff_rhs;
  bool subdiff_equal = false;

  bool passed() const {
    if (!conj_equal || !(conj_lhs <= conj_rhs)) return false;
    if (conj_lhs.finite() && !(split_value && *split_value == conj_rhs)) return false;
    return subdiff_equal;
  }
};

inline FunctionSumReport sum_rule_function_check(const PLFunction& f1, const PLFunction& f2, const Vec& xstar,
                                                 const Vec& xbar) {
  require_dims(f1.n() == f2.n() && xstar.size() == f1.n() && xbar.size() == f1.n(), "sum_rule_function_check");
  if (!f1(xbar).finite() || !f2(xbar).finite())
    throw PreconditionError("sum_rule_function_check: xbar outside dom f1 ∩ dom f2");
  const PLFunction sum = pointwise_sum(f1, f2);
  FunctionSumReport r;
  r.conj_lhs = conjugate(sum, xstar);
  auto [rhs, u1] = detail::sum_rhs(epi_mapping(f1), epi_mapping(f2), xstar, make_vec({-1}));
  r.conj_rhs = rhs;
  if (u1) {
    const Vec u2 = xstar - *u1;
    r.split = std::make_pair(*u1, u2);
    r.split_value = conjugate(f1, *u1) + conjugate(f2, u2);
  }
  r.conj_equal = r.conj_lhs == r.conj_rhs;
  r.subdiff_lhs = subdifferential(sum, xbar);
  r.subdiff_rhs = minkowski_sum(subdifferential(f1, xbar), subdifferential(f2, xbar));
  r.subdiff_equal = equal(r.subdiff_lhs, r.subdiff_rhs);
  return r;
}

/// (g∘A)*(x*) = inf{g*(y*) : A^T y* = x*}  and  ∂(g∘A)(x̄) = A^T ∂g(A x̄).
struct LinearChainReport {
  ExtReal conj_lhs;
  ExtReal conj_rhs;
  bool conj_equal = false;
  std::optional<Vec> ystar;             // attaining y*
  std::optional<ExtReal> witness_value; // g*(y*)
  Polyhedron subdiff_lhs;
  Polyhedron subdiff_rhs;
  bool subdiff_equal = false;

  bool passed() const {
    if (!conj_equal || !(conj_lhs <= conj_rhs)) return false;
    if (conj_lhs.finite() && !(witness_value && *witness_value == conj_rhs)) return false;
    return subdiff_equal;
  }
};

inline LinearChainReport linear_chain_check(const PLFunction& g, const Mat& A, const Vec& xstar, const Vec& xbar) {
  require_dims(A.rows() == g.n() && xstar.size() == A.cols() && xbar.size() == A.cols(), "linear_chain_check");
  const PLFunction ga = compose_linear(g, A);  // throws when A(X) ∩ dom g = ∅
  if (!ga(xbar).finite()) throw PreconditionError("linear_chain_check: xbar outside dom(g∘A)");
  const std::size_t n = A.cols(), p = A.rows();
  const PolyMap E = epi_mapping(g);
  const Polyhedron& epi = E.graph();
  LinearChainReport r;
  r.conj_lhs = conjugate(ga, xstar);

  // min Σμ_i b_i  s.t.  t-block(E^T μ) = -1,  A^T y-block(E^T μ) = x*,  μ >= 0.
  const std::size_t m = epi.rows();
  Mat eq(1 + n, m);
  for (std::size_t i = 0; i < m; ++i) {
    eq(0, i) = epi.A()(i, p);
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < p; ++k) s += A(k, j) * epi.A()(i, k);
      eq(1 + j, i) = s;
    }
  }
  LPOutcome o = detail::solve_multiplier_lp(epi.b(), eq, concat(make_vec({-1}), xstar));
  r.conj_rhs = detail::multiplier_lp_value(o);
  if (o.status == LPStatus::Optimal) {
    Vec y = slice(epi.A().tmul(*o.primal), 0, p);
    r.witness_value = A.tmul(y) == xstar ? conjugate(g, y) : ExtReal::plus_inf();
    r.ystar = std::move(y);
  }
  r.conj_equal = r.conj_lhs == r.conj_rhs;

  r.subdiff_lhs = subdifferential(ga, xbar);
  const Polyhedron dg = subdifferential(g, A * xbar);
  Polyhedron sys(n + p);  // (x*, y*)
  for (std::size_t j = 0; j < n; ++j) {
    Vec a = zeros(n + p);
    a[j] = 1;
    for (std::size_t k = 0; k < p; ++k) a[n + k] = -A(k, j);
    sys.add_equality(a, Rational(0));
  }
  detail::place_rows(sys, dg, index_range(n, p));
  r.subdiff_rhs = project(sys, index_range(0, n));
  r.subdiff_equal = equal(r.subdiff_lhs, r.subdiff_rhs);
  return r;
}

}  // namespace polyconj
