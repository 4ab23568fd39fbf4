#pragma once

// H-representation polyhedra {x : A x <= b} with exact predicates and
// Fourier-Motzkin projection.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polyconj/linalg.hpp"
#include "polyconj/lp.hpp"

namespace polyconj {

/// {x in R^n : <a_i, x> <= b_i}. Zero rows means all of R^n. An empty
/// polyhedron is an ordinary value.
class Polyhedron {
 public:
  Polyhedron() = default;
  explicit Polyhedron(std::size_t dim) : A_(0, dim) {}
  Polyhedron(Mat A, Vec b) : A_(std::move(A)), b_(std::move(b)) {
    require_dims(A_.rows() == b_.size(), "polyhedron rows vs right-hand side");
  }

  static Polyhedron whole_space(std::size_t dim) { return Polyhedron(dim); }

  /// The canonical empty set {x : 0 <= -1}.
  static Polyhedron empty(std::size_t dim) {
    Polyhedron p(dim);
    p.add_row(zeros(dim), Rational(-1));
    return p;
  }

  /// Axis-aligned box lo <= x_j <= hi.
  static Polyhedron box(std::size_t dim, const Rational& lo, const Rational& hi) {
    Polyhedron p(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Vec e = zeros(dim);
      e[j] = 1;
      p.add_row(e, hi);
      e[j] = -1;
      p.add_row(e, -lo);
    }
    return p;
  }

  /// {x}, one equality pair per coordinate.
  static Polyhedron point(const Vec& x) {
    Polyhedron p(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      Vec e = zeros(x.size());
      e[j] = 1;
      p.add_equality(e, x[j]);
    }
    return p;
  }

  std::size_t dim() const { return A_.cols(); }
  std::size_t rows() const { return A_.rows(); }
  const Mat& A() const { return A_; }
  const Vec& b() const { return b_; }

  void add_row(std::span<const Rational> a, const Rational& rhs) {
    A_.append_row(a);
    b_.push_back(rhs);
  }

  /// Adds <a, x> = rhs as a pair of inequalities.
  void add_equality(const Vec& a, const Rational& rhs) {
    add_row(a, rhs);
    add_row(-a, -rhs);
  }

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;

 private:
  Mat A_;
  Vec b_;
};

/// Row concatenation: P ∩ Q.
inline Polyhedron intersect(const Polyhedron& P, const Polyhedron& Q) {
  require_dims(P.dim() == Q.dim(), "intersection of polyhedra");
  Polyhedron r = P;
  for (std::size_t i = 0; i < Q.rows(); ++i) r.add_row(Q.A().row(i), Q.b()[i]);
  return r;
}

/// Embeds P (over `P.dim()` coordinates) into R^total, placing P's coordinate
/// k at position offset + k.
inline Polyhedron embed(const Polyhedron& P, std::size_t total, std::size_t offset) {
  require_dims(offset + P.dim() <= total, "embedding");
  Polyhedron r(total);
  for (std::size_t i = 0; i < P.rows(); ++i) {
    Vec a = zeros(total);
    for (std::size_t j = 0; j < P.dim(); ++j) a[offset + j] = P.A()(i, j);
    r.add_row(a, P.b()[i]);
  }
  return r;
}

/// Emptiness test. The certificate, when present, is a Farkas vector.
struct EmptinessResult {
  bool empty = false;
  std::optional<Vec> farkas;
  std::optional<Vec> point;
};

inline EmptinessResult check_empty(const Polyhedron& P) {
  LPOutcome o = lp_solve(zeros(P.dim()), P.A(), P.b());
  if (o.status == LPStatus::Infeasible) return {true, o.farkas, std::nullopt};
  return {false, std::nullopt, o.primal};
}

inline bool is_empty(const Polyhedron& P) { return check_empty(P).empty; }

inline bool contains(const Polyhedron& P, const Vec& x) {
  require_dims(x.size() == P.dim(), "point vs polyhedron dimension");
  for (std::size_t i = 0; i < P.rows(); ++i)
    if (dot(P.A().row(i), x) > P.b()[i]) return false;
  return true;
}

/// Indices of rows tight at x.
inline std::vector<std::size_t> active_rows(const Polyhedron& P, const Vec& x) {
  if (!contains(P, x)) throw PreconditionError("active_rows: point is not in the polyhedron");
  std::vector<std::size_t> act;
  for (std::size_t i = 0; i < P.rows(); ++i)
    if (dot(P.A().row(i), x) == P.b()[i]) act.push_back(i);
  return act;
}

/// max <v, x> over P; Optimal, Unbounded or Infeasible (P empty).
inline LPOutcome maximize(const Polyhedron& P, const Vec& v) {
  require_dims(v.size() == P.dim(), "direction vs polyhedron dimension");
  return lp_solve(v, P.A(), P.b(), Sense::Max);
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin projection.

namespace detail {

struct Row {
  Vec a;
  Rational b;
  std::vector<bool> from;  // input rows this one was combined from
};

inline std::size_t history_size(const Row& r) { return static_cast<std::size_t>(std::count(r.from.begin(), r.from.end(), true)); }

inline std::vector<bool> merge_history(const Row& p, const Row& q) {
  std::vector<bool> h(p.from.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = p.from[i] || q.from[i];
  return h;
}

// Positive rescaling of a to a primitive integer vector.
inline void normalize(Row& r) {
  mpz_class den = 1, num = 0;
  for (const Rational& x : r.a) {
    if (sgn(x) == 0) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
  }
  if (num == 0) return;
  const Rational s(den, num);
  for (Rational& y : r.a) y *= s;
  r.b *= s;
}

inline bool is_negation(const Row& p, const Row& q) {
  if (p.b != -q.b) return false;
  for (std::size_t j = 0; j < p.a.size(); ++j)
    if (p.a[j] != -q.a[j]) return false;
  return true;
}

struct VecLess {
  bool operator()(const Vec& x, const Vec& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
};

/// Canonicalizes rows: normalize, drop trivially true zero rows, keep the
/// tightest right-hand side per coefficient vector. Returns false if a row
/// 0 <= negative is found (system infeasible).
inline bool tidy(std::vector<Row>& rows) {
  std::map<Vec, std::size_t, VecLess> best;
  std::vector<Row> out;
  for (Row& r : rows) {
    normalize(r);
    if (is_zero(r.a)) {
      if (sgn(r.b) < 0) return false;
      continue;
    }
    auto [it, inserted] = best.emplace(r.a, out.size());
    if (inserted) {
      out.push_back(std::move(r));
      continue;
    }
    Row& kept = out[it->second];
    if (r.b < kept.b || (r.b == kept.b && history_size(r) < history_size(kept))) kept = std::move(r);
  }
  rows = std::move(out);
  return true;
}

inline Polyhedron to_polyhedron(const std::vector<Row>& rows, std::size_t dim) {
  Polyhedron p(dim);
  for (const Row& r : rows) p.add_row(r.a, r.b);
  return p;
}

/// Removes rows implied by the others (one LP per row, sequentially).
inline void prune_redundant(std::vector<Row>& rows, std::size_t dim) {
  for (std::size_t i = rows.size(); i-- > 0;) {
    std::vector<Row> rest;
    rest.reserve(rows.size() - 1);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != i) rest.push_back(rows[k]);
    Polyhedron q = to_polyhedron(rest, dim);
    LPOutcome o = maximize(q, rows[i].a);
    if (o.status == LPStatus::Optimal && *o.value <= rows[i].b) rows = std::move(rest);
  }
}

inline constexpr std::size_t kPruneThreshold = 256;

}  // namespace detail

namespace detail {

/// Index of a row forming an equality pair and involving coordinate k.
inline std::optional<std::size_t> equality_row(const std::vector<Row>& rows, std::size_t k) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (sgn(rows[i].a[k]) == 0) continue;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i && is_negation(rows[i], rows[j])) return i;
  }
  return std::nullopt;
}

inline std::size_t pair_count(const std::vector<Row>& rows, std::size_t k) {
  std::size_t pos = 0, neg = 0;
  for (const Row& r : rows) {
    const int s = sgn(r.a[k]);
    pos += s > 0;
    neg += s < 0;
  }
  return pos * neg;
}

}  // namespace detail

/// Exact image of P under the coordinate projection x -> (x_k)_{k in keep}.
/// Dropped coordinates are eliminated one at a time: first any coordinate
/// occurring in an equality (a pair of opposite rows), which is substituted
/// out; otherwise the coordinate with the fewest positive/negative row
/// pairs (lowest index on ties), combined pairwise. Duplicates are removed
/// after each step, and after t consecutive pairwise eliminations any row
/// combined from more than t + 1 rows is dropped (Chernikov's rule).
/// LP-based redundancy pruning runs when the row count exceeds 256;
/// substitution and pruning restart the row histories.
inline Polyhedron project(const Polyhedron& P, const std::vector<std::size_t>& keep) {
  const std::size_t n = P.dim();
  if (keep.empty()) throw InputError("project: empty coordinate list");
  std::vector<bool> kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) throw InputError("project: coordinate " + std::to_string(k) + " out of range");
    if (kept[k]) throw InputError("project: duplicate coordinate " + std::to_string(k));
    kept[k] = true;
  }

  std::vector<detail::Row> rows;
  for (std::size_t i = 0; i < P.rows(); ++i) {
    rows.push_back({P.A().row_vec(i), P.b()[i], std::vector<bool>(P.rows(), false)});
    rows.back().from[i] = true;
  }
  if (!detail::tidy(rows)) return Polyhedron::empty(keep.size());

  // Histories restart whenever rows are dropped by other means.
  std::size_t eliminated = 0;
  auto reset_history = [&](std::vector<detail::Row>& rs) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      rs[i].from.assign(rs.size(), false);
      rs[i].from[i] = true;
    }
    eliminated = 0;
  };
  auto prune = [&](std::vector<detail::Row>& rs) {
    if (is_empty(detail::to_polyhedron(rs, n))) return false;
    detail::prune_redundant(rs, n);
    reset_history(rs);
    return true;
  };
  if (rows.size() > detail::kPruneThreshold && !prune(rows)) return Polyhedron::empty(keep.size());

  std::vector<std::size_t> todo;
  for (std::size_t k = 0; k < n; ++k)
    if (!kept[k]) todo.push_back(k);

  while (!todo.empty()) {
    std::size_t pick = 0;
    std::optional<std::size_t> eq;
    for (std::size_t t = 0; t < todo.size() && !eq; ++t)
      if ((eq = detail::equality_row(rows, todo[t]))) pick = t;
    if (!eq) {
      std::size_t best = detail::pair_count(rows, todo[0]);
      for (std::size_t t = 1; t < todo.size(); ++t) {
        const std::size_t c = detail::pair_count(rows, todo[t]);
        if (c < best) best = c, pick = t;
      }
    }
    const std::size_t k = todo[pick];
    todo.erase(todo.begin() + static_cast<std::ptrdiff_t>(pick));

    std::vector<detail::Row> next;
    if (eq) {
      const detail::Row e = rows[*eq];
      const detail::Row& e_neg = *std::find_if(rows.begin(), rows.end(), [&](const detail::Row& r) { return detail::is_negation(r, e); });
      for (const detail::Row& r : rows) {
        if (sgn(r.a[k]) == 0) {
          next.push_back(r);
          continue;
        }
        const Rational f = r.a[k] / e.a[k];
        detail::Row s{r.a, r.b, detail::merge_history(r, sgn(f) < 0 ? e : e_neg)};
        for (std::size_t j = 0; j < n; ++j) s.a[j] -= f * e.a[j];
        s.b -= f * e.b;
        s.a[k] = 0;
        next.push_back(std::move(s));
      }
    } else {
      std::vector<const detail::Row*> pos, neg;
      for (const detail::Row& r : rows) {
        int s = sgn(r.a[k]);
        if (s == 0)
          next.push_back(r);
        else
          (s > 0 ? pos : neg).push_back(&r);
      }
      for (const detail::Row* p : pos)
        for (const detail::Row* q : neg) {
          const Rational wp = -q->a[k];  // > 0
          const Rational wq = p->a[k];   // > 0
          detail::Row s{zeros(n), wp * p->b + wq * q->b, detail::merge_history(*p, *q)};
          for (std::size_t j = 0; j < n; ++j) s.a[j] = wp * p->a[j] + wq * q->a[j];
          s.a[k] = 0;
          next.push_back(std::move(s));
        }
    }
    if (!detail::tidy(next)) return Polyhedron::empty(keep.size());
    if (eq) {
      reset_history(next);
    } else {
      ++eliminated;
      std::erase_if(next, [&](const detail::Row& r) { return detail::history_size(r) > eliminated + 1; });
    }
    if (next.size() > detail::kPruneThreshold && !prune(next)) return Polyhedron::empty(keep.size());
    rows = std::move(next);
  }

  Polyhedron out(keep.size());
  for (const detail::Row& r : rows) {
    Vec a(keep.size());
    for (std::size_t t = 0; t < keep.size(); ++t) a[t] = r.a[keep[t]];
    out.add_row(a, r.b);
  }
  return out;
}

/// Removes redundant rows (LP per row). Empty input gives the canonical empty set.
inline Polyhedron remove_redundancy(const Polyhedron& P) {
  if (is_empty(P)) return Polyhedron::empty(P.dim());
  std::vector<detail::Row> rows;
  for (std::size_t i = 0; i < P.rows(); ++i) rows.push_back({P.A().row_vec(i), P.b()[i], {}});
  if (!detail::tidy(rows)) return Polyhedron::empty(P.dim());
  detail::prune_redundant(rows, P.dim());
  return detail::to_polyhedron(rows, P.dim());
}

/// Q ⊆ P.
inline bool includes(const Polyhedron& P, const Polyhedron& Q) {
  require_dims(P.dim() == Q.dim(), "inclusion test");
  if (is_empty(Q)) return true;
  for (std::size_t i = 0; i < P.rows(); ++i) {
    LPOutcome o = maximize(Q, P.A().row_vec(i));
    if (o.status != LPStatus::Optimal || *o.value > P.b()[i]) return false;
  }
  return true;
}

inline bool equal(const Polyhedron& P, const Polyhedron& Q) { return includes(P, Q) && includes(Q, P); }

/// Rows satisfied with equality on all of P.
inline std::vector<std::size_t> implicit_equalities(const Polyhedron& P) {
  if (is_empty(P)) throw PreconditionError("implicit_equalities: empty polyhedron");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < P.rows(); ++i) {
    // max b_i - <a_i, x>  ==  b_i - min <a_i, x>
    LPOutcome o = lp_solve(P.A().row_vec(i), P.A(), P.b(), Sense::Min);
    if (o.status == LPStatus::Optimal && *o.value == P.b()[i]) out.push_back(i);
  }
  return out;
}

/// A point of ri P from  max t  s.t. implicit rows tight, other rows slack by
/// t, t <= 1. Nothing when P is empty.
inline std::optional<Vec> relative_interior_point(const Polyhedron& P) {
  if (is_empty(P)) return std::nullopt;
  const std::size_t n = P.dim();
  std::vector<std::size_t> imp = implicit_equalities(P);
  std::vector<bool> is_imp(P.rows(), false);
  for (std::size_t i : imp) is_imp[i] = true;

  Polyhedron lifted(n + 1);
  for (std::size_t i = 0; i < P.rows(); ++i) {
    Vec a = P.A().row_vec(i);
    if (is_imp[i]) {
      a.push_back(0);
      lifted.add_equality(a, P.b()[i]);
    } else {
      a.push_back(1);
      lifted.add_row(a, P.b()[i]);
    }
  }
  Vec t = zeros(n + 1);
  t[n] = 1;
  lifted.add_row(t, Rational(1));
  LPOutcome o = maximize(lifted, t);
  if (o.status != LPStatus::Optimal) throw std::logic_error("relative_interior_point: LP not optimal");
  return slice(*o.primal, 0, n);
}

/// H-representation of the normal cone N(x; P) = pos{a_i : i active at x},
/// obtained by eliminating the multipliers from {x* = sum λ_i a_i, λ >= 0}.
inline Polyhedron normal_cone(const Polyhedron& P, const Vec& x) {
  std::vector<std::size_t> act = active_rows(P, x);
  const std::size_t n = P.dim(), k = act.size();
  Polyhedron sys(n + k);
  for (std::size_t j = 0; j < n; ++j) {
    Vec a = zeros(n + k);
    a[j] = 1;
    for (std::size_t t = 0; t < k; ++t) a[n + t] = -P.A()(act[t], j);
    sys.add_equality(a, Rational(0));
  }
  for (std::size_t t = 0; t < k; ++t) {
    Vec a = zeros(n + k);
    a[n + t] = -1;
    sys.add_row(a, Rational(0));
  }
  std::vector<std::size_t> keep(n);
  for (std::size_t j = 0; j < n; ++j) keep[j] = j;
  return project(sys, keep);
}

/// Finite support value in every coordinate direction (and nonempty).
inline bool is_bounded(const Polyhedron& P) {
  for (std::size_t j = 0; j < P.dim(); ++j) {
    for (int s : {1, -1}) {
      Vec e = zeros(P.dim());
      e[j] = s;
      if (maximize(P, e).status == LPStatus::Unbounded) return false;
    }
  }
  return true;
}

/// All vertices of a bounded polyhedron by enumerating n-row subsystems.
/// Empty P gives an empty list.
inline std::vector<Vec> vertices(const Polyhedron& P) {
  if (is_empty(P)) return {};
  if (!is_bounded(P)) throw PreconditionError("unbounded polyhedron");
  const std::size_t n = P.dim(), m = P.rows();
  std::set<Vec, detail::VecLess> found;
  if (n == 0) return {Vec{}};
  if (m < n) return {};
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (;;) {
    Mat M(n, n);
    Vec rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t j = 0; j < n; ++j) M(r, j) = P.A()(idx[r], j);
      rhs[r] = P.b()[idx[r]];
    }
    if (rank(M) == n) {
      std::optional<Vec> x = solve_linear_system(M, rhs);
      if (x && contains(P, *x)) found.insert(*x);
    }
    // next combination
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == m - n + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

/// {x in P : <v, x> = max_P <v, .>}; requires a finite support value.
inline Polyhedron face_argmax(const Polyhedron& P, const Vec& v) {
  LPOutcome o = maximize(P, v);
  if (o.status != LPStatus::Optimal)
    throw PreconditionError("face_argmax: support value is not finite");
  if (is_zero(v)) return P;
  Polyhedron f = P;
  f.add_equality(v, *o.value);
  return f;
}

}  // namespace polyconj
