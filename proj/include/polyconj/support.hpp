#pragma once

// Support functions of polyhedra with LP-duality certificates, and the
// support-function intersection rule  σ_{P1∩P2} = σ_{P1} □ σ_{P2}.

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyconj/linalg.hpp"
#include "polyconj/lp.hpp"
#include "polyconj/polyhedron.hpp"

namespace polyconj {

/// R ∪ {+∞, -∞}.
class ExtReal {
 public:
  enum class Tag { Finite, PlusInf, MinusInf };

  ExtReal() : tag_(Tag::Finite), value_(0) {}
  ExtReal(Rational v) : tag_(Tag::Finite), value_(std::move(v)) {}  // NOLINT(implicit)
  ExtReal(long v) : ExtReal(Rational(v)) {}                          // NOLINT(implicit)

  static ExtReal plus_inf() { return ExtReal(Tag::PlusInf); }
  static ExtReal minus_inf() { return ExtReal(Tag::MinusInf); }

  Tag tag() const { return tag_; }
  bool finite() const { return tag_ == Tag::Finite; }
  bool is_plus_inf() const { return tag_ == Tag::PlusInf; }
  bool is_minus_inf() const { return tag_ == Tag::MinusInf; }

  const Rational& value() const {
    if (!finite()) throw std::logic_error("ExtReal: value of an infinite quantity");
    return value_;
  }

  friend bool operator==(const ExtReal& x, const ExtReal& y) {
    if (x.tag_ != y.tag_) return false;
    return !x.finite() || x.value_ == y.value_;
  }

  friend std::strong_ordering operator<=>(const ExtReal& x, const ExtReal& y) {
    auto rank = [](Tag t) { return t == Tag::MinusInf ? 0 : t == Tag::Finite ? 1 : 2; };
    if (x.tag_ != y.tag_) return rank(x.tag_) <=> rank(y.tag_);
    if (!x.finite()) return std::strong_ordering::equal;
    int c = cmp(x.value_, y.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// +∞ + (-∞) has no meaning here and throws.
  friend ExtReal operator+(const ExtReal& x, const ExtReal& y) {
    if ((x.is_plus_inf() && y.is_minus_inf()) || (x.is_minus_inf() && y.is_plus_inf()))
      throw std::domain_error("ExtReal: +inf + -inf");
    if (x.is_plus_inf() || y.is_plus_inf()) return plus_inf();
    if (x.is_minus_inf() || y.is_minus_inf()) return minus_inf();
    return ExtReal(Rational(x.value_ + y.value_));
  }

  friend ExtReal operator-(const ExtReal& x) {
    if (x.is_plus_inf()) return minus_inf();
    if (x.is_minus_inf()) return plus_inf();
    return ExtReal(Rational(-x.value_));
  }

 private:
  explicit ExtReal(Tag t) : tag_(t), value_(0) {}
  Tag tag_;
  Rational value_;
};

inline std::string to_string(const ExtReal& x) {
  if (x.is_plus_inf()) return "+inf";
  if (x.is_minus_inf()) return "-inf";
  return to_string(x.value());
}

inline std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << to_string(x); }

/// σ_P(v) together with the evidence for it.
///
///  - Finite: multipliers λ >= 0 with Σ λ_i a_i = v and Σ λ_i b_i = value,
///    plus a maximizer in P attaining the value.
///  - PlusInf: a ray r with A r <= 0 and <v, r> > 0 (P nonempty).
///  - MinusInf: P is empty; `farkas` proves it.
struct SupportEval {
  ExtReal value;
  std::optional<Vec> multipliers;
  std::optional<Vec> maximizer;
  std::optional<Vec> unbounded_ray;
  std::optional<Vec> farkas;
};

inline SupportEval support_eval(const Polyhedron& P, const Vec& v) {
  LPOutcome o = maximize(P, v);
  SupportEval s;
  switch (o.status) {
    case LPStatus::Optimal:
      s.value = *o.value;
      s.multipliers = std::move(o.dual);
      s.maximizer = std::move(o.primal);
      break;
    case LPStatus::Unbounded:
      s.value = ExtReal::plus_inf();
      s.unbounded_ray = std::move(o.ray);
      s.maximizer = std::move(o.primal);  // a feasible point, not a maximizer
      break;
    case LPStatus::Infeasible:
      s.value = ExtReal::minus_inf();
      s.farkas = std::move(o.farkas);
      break;
  }
  if (s.value.is_plus_inf()) s.maximizer.reset();
  return s;
}

inline ExtReal support_value(const Polyhedron& P, const Vec& v) { return support_eval(P, v).value; }

// ---------------------------------------------------------------------------

/// Value of (σ_{P1} □ σ_{P2})(v) and, when finite, an attaining split.
struct InfConvolution {
  ExtReal value;
  std::optional<std::pair<Vec, Vec>> split;  // (v1, v2), v1 + v2 = v
  std::optional<Vec> lambda;                 // multipliers on P1's rows
  std::optional<Vec> mu;                     // multipliers on P2's rows
};

namespace detail {

/// min <cost, λ>  over λ >= 0  with  eq λ = eq_rhs  (one column per multiplier).
inline LPOutcome solve_multiplier_lp(const Vec& cost, const Mat& eq, const Vec& eq_rhs) {
  const std::size_t k = cost.size();
  require_dims(eq.cols() == k && eq.rows() == eq_rhs.size(), "multiplier LP");
  Polyhedron sys(k);
  for (std::size_t r = 0; r < eq.rows(); ++r) sys.add_equality(eq.row_vec(r), eq_rhs[r]);
  for (std::size_t t = 0; t < k; ++t) {
    Vec a = zeros(k);
    a[t] = -1;
    sys.add_row(a, Rational(0));
  }
  return lp_solve(cost, sys.A(), sys.b(), Sense::Min);
}

inline ExtReal multiplier_lp_value(const LPOutcome& o) {
  switch (o.status) {
    case LPStatus::Optimal: return *o.value;
    case LPStatus::Unbounded: return ExtReal::minus_inf();
    case LPStatus::Infeasible: return ExtReal::plus_inf();
  }
  return ExtReal::plus_inf();
}

}  // namespace detail

/// (σ_{P1} □ σ_{P2})(v) as one joint LP over the multipliers of both
/// systems:  min Σλb¹ + Σμb²  s.t.  A1^T λ + A2^T μ = v,  λ, μ >= 0.
/// Infeasible LP means +∞; unbounded means -∞ (only possible when the
/// intersection is empty).
inline InfConvolution inf_convolution_support(const Polyhedron& P1, const Polyhedron& P2, const Vec& v) {
  require_dims(P1.dim() == P2.dim() && v.size() == P1.dim(), "inf-convolution operands");
  const std::size_t n = P1.dim(), m1 = P1.rows(), m2 = P2.rows();
  Mat eq(n, m1 + m2);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m1; ++i) eq(j, i) = P1.A()(i, j);
    for (std::size_t i = 0; i < m2; ++i) eq(j, m1 + i) = P2.A()(i, j);
  }
  LPOutcome o = detail::solve_multiplier_lp(concat(P1.b(), P2.b()), eq, v);
  InfConvolution r;
  r.value = detail::multiplier_lp_value(o);
  if (o.status == LPStatus::Optimal) {
    Vec lambda = slice(*o.primal, 0, m1);
    Vec mu = slice(*o.primal, m1, m2);
    Vec v1 = P1.A().tmul(lambda);
    r.split = std::make_pair(v1, v - v1);
    r.lambda = std::move(lambda);
    r.mu = std::move(mu);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Relative-interior qualification tests (exact for polyhedra).

namespace detail {

/// Adds the rows of P to `sys` (over total coordinates, P at `offset`):
/// implicit rows as equalities, the others relaxed by the slack column `tcol`.
inline void add_ri_rows(Polyhedron& sys, const Polyhedron& P, std::size_t offset, std::size_t tcol) {
  std::vector<std::size_t> imp = implicit_equalities(P);
  std::vector<bool> is_imp(P.rows(), false);
  for (std::size_t i : imp) is_imp[i] = true;
  for (std::size_t i = 0; i < P.rows(); ++i) {
    Vec a = zeros(sys.dim());
    for (std::size_t j = 0; j < P.dim(); ++j) a[offset + j] = P.A()(i, j);
    if (is_imp[i]) {
      sys.add_equality(a, P.b()[i]);
    } else {
      a[tcol] = 1;
      sys.add_row(a, P.b()[i]);
    }
  }
}

inline bool strict_lp_positive(Polyhedron sys) {
  const std::size_t t = sys.dim() - 1;
  Vec e = zeros(sys.dim());
  e[t] = 1;
  sys.add_row(e, Rational(1));
  LPOutcome o = maximize(sys, e);
  return o.status == LPStatus::Optimal && sgn(*o.value) > 0;
}

}  // namespace detail

/// ri P ∩ ri Q ≠ ∅.
inline bool relative_interiors_meet(const Polyhedron& P, const Polyhedron& Q) {
  require_dims(P.dim() == Q.dim(), "relative interior test");
  if (is_empty(P) || is_empty(Q)) return false;
  const std::size_t n = P.dim();
  Polyhedron sys(n + 1);
  detail::add_ri_rows(sys, P, 0, n);
  detail::add_ri_rows(sys, Q, 0, n);
  return detail::strict_lp_positive(sys);
}

/// P ∩ ri Q ≠ ∅.
inline bool meets_relative_interior(const Polyhedron& P, const Polyhedron& Q) {
  require_dims(P.dim() == Q.dim(), "relative interior test");
  if (is_empty(P) || is_empty(Q)) return false;
  const std::size_t n = P.dim();
  Polyhedron sys = embed(P, n + 1, 0);
  detail::add_ri_rows(sys, Q, 0, n);
  return detail::strict_lp_positive(sys);
}

/// Which qualification conditions hold for a pair of sets:
/// (a) ri ∩ ri ≠ ∅, (b) first ∩ ri second ≠ ∅, (c) plain intersection ≠ ∅.
/// Mapping-level reports leave `mixed` unset.
struct Qualification {
  bool relative_interior = false;
  std::optional<bool> mixed;
  bool nonempty = false;
};

struct IntersectionRuleReport {
  ExtReal lhs;
  ExtReal rhs;
  bool equal = false;
  bool inequality_holds = false;  // lhs <= rhs
  std::optional<std::pair<Vec, Vec>> split;
  std::optional<ExtReal> split_value;  // σ_{P1}(v1) + σ_{P2}(v2)
  Qualification qualification;
  bool applicable = false;  // (c) holds
};

/// Evaluates both sides of σ_{P1∩P2}(v) = (σ_{P1} □ σ_{P2})(v).
inline IntersectionRuleReport intersection_rule_check(const Polyhedron& P1, const Polyhedron& P2, const Vec& v) {
  require_dims(P1.dim() == P2.dim() && v.size() == P1.dim(), "intersection rule operands");
  IntersectionRuleReport rep;
  rep.lhs = support_value(intersect(P1, P2), v);
  InfConvolution ic = inf_convolution_support(P1, P2, v);
  rep.rhs = ic.value;
  rep.equal = rep.lhs == rep.rhs;
  rep.inequality_holds = rep.lhs <= rep.rhs;
  rep.split = ic.split;
  if (ic.split) {
    const ExtReal s1 = support_value(P1, ic.split->first);
    const ExtReal s2 = support_value(P2, ic.split->second);
    rep.split_value = s1 + s2;
  }
  rep.qualification.nonempty = !is_empty(intersect(P1, P2));
  rep.qualification.relative_interior = relative_interiors_meet(P1, P2);
  rep.qualification.mixed = meets_relative_interior(P1, P2);
  rep.applicable = rep.qualification.nonempty;
  return rep;
}

}  // namespace polyconj
