#pragma once

// Exact two-phase primal simplex for  max/min <c, x>  s.t.  A x <= b,  x free.
//
// The free variables are split as x = x+ - x-, every row gets a slack, and
// rows with negative right-hand side get an artificial for phase one.
// Pivoting follows Bland's rule (lowest-index entering column, lowest-index
// leaving basic variable among ratio ties), so runs are deterministic and
// cannot cycle.
//
// Certificates are read off the reduced costs of the slack columns: at the
// end of either phase the multiplier of row i equals minus the reduced cost
// of slack i, independently of whether the row was negated for phase one.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polyconj/linalg.hpp"

namespace polyconj {

enum class Sense { Max, Min };
enum class LPStatus { Optimal, Infeasible, Unbounded };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
  }
  return "?";
}

/// Result of lp_solve.
///
///  - Optimal: primal feasible, A^T dual = objective, b . dual = value =
///    objective . primal; dual >= 0 for Max and dual <= 0 for Min.
///  - Infeasible: farkas >= 0, farkas^T A = 0, farkas . b < 0.
///  - Unbounded: primal feasible, A ray <= 0, and the ray strictly improves
///    the objective in the requested sense.
struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  std::optional<Vec> primal;
  std::optional<Rational> value;
  std::optional<Vec> dual;
  std::optional<Vec> ray;
  std::optional<Vec> farkas;
};

namespace detail {

class SimplexTableau {
 public:
  SimplexTableau(const Mat& A, const Vec& b)
      : m_(A.rows()), n_(A.cols()), slack0_(2 * n_), art0_(2 * n_ + m_) {
    std::size_t arts = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (sgn(b[i]) < 0) ++arts;
    cols_ = art0_ + arts;
    rows_.assign(m_, zeros(cols_ + 1));
    basis_.resize(m_);
    std::size_t next_art = art0_;
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = sgn(b[i]) < 0;
      Vec& r = rows_[i];
      for (std::size_t j = 0; j < n_; ++j) {
        r[j] = flip ? Rational(-A(i, j)) : A(i, j);
        r[n_ + j] = -r[j];
      }
      r[slack0_ + i] = flip ? -1 : 1;
      r[cols_] = flip ? Rational(-b[i]) : b[i];
      if (flip) {
        r[next_art] = 1;
        basis_[i] = next_art++;
      } else {
        basis_[i] = slack0_ + i;
      }
    }
  }

  std::size_t artificial_count() const { return cols_ - art0_; }

  // Phase one: maximize minus the sum of artificials.
  bool phase_one() {
    allowed_ = cols_;
    Vec cost = zeros(cols_);
    for (std::size_t j = art0_; j < cols_; ++j) cost[j] = -1;
    price(cost);
    run();  // bounded below by zero, never unbounded
    return sgn(obj_[cols_]) == 0;
  }

  // Drives remaining zero-level artificials out of the basis.
  void purge_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < art0_) continue;
      for (std::size_t j = 0; j < art0_; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  /// Returns the entering column if unbounded, otherwise nullopt.
  std::optional<std::size_t> phase_two(const Vec& c) {
    allowed_ = art0_;
    Vec cost = zeros(cols_);
    for (std::size_t j = 0; j < n_; ++j) {
      cost[j] = c[j];
      cost[n_ + j] = -c[j];
    }
    price(cost);
    return run();
  }

  Vec primal() const {
    Vec z = zeros(cols_);
    for (std::size_t i = 0; i < m_; ++i) z[basis_[i]] = rows_[i][cols_];
    Vec x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = z[j] - z[n_ + j];
    return x;
  }

  Vec row_multipliers() const {
    Vec y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = -obj_[slack0_ + i];
    return y;
  }

  Vec ray(std::size_t entering) const {
    Vec d = zeros(cols_);
    d[entering] = 1;
    for (std::size_t i = 0; i < m_; ++i) d[basis_[i]] = -rows_[i][entering];
    Vec r(n_);
    for (std::size_t j = 0; j < n_; ++j) r[j] = d[j] - d[n_ + j];
    return r;
  }

 private:
  void price(const Vec& cost) {
    obj_ = zeros(cols_ + 1);
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) obj_[j] -= cb * rows_[i][j];
    }
  }

  std::optional<std::size_t> run() {
    for (;;) {
      std::size_t enter = allowed_;
      for (std::size_t j = 0; j < allowed_; ++j) {
        if (sgn(obj_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed_) return std::nullopt;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return enter;
      pivot(*leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t k) {
    Vec& pr = rows_[r];
    const Rational inv = 1 / pr[k];
    for (std::size_t j = 0; j <= cols_; ++j)
      if (sgn(pr[j]) != 0) pr[j] *= inv;
    auto eliminate = [&](Vec& row) {
      if (sgn(row[k]) == 0) return;
      const Rational f = row[k];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (sgn(pr[j]) != 0) row[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < m_; ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(obj_);
    basis_[r] = k;
  }

  std::size_t m_, n_, slack0_, art0_, cols_ = 0, allowed_ = 0;
  std::vector<Vec> rows_;
  Vec obj_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Solves  sense <objective, x>  s.t.  A x <= b  exactly.
inline LPOutcome lp_solve(const Vec& objective, const Mat& A, const Vec& b, Sense sense = Sense::Max) {
  require_dims(objective.size() == A.cols(), "objective length vs matrix columns");
  require_dims(b.size() == A.rows(), "right-hand side length vs matrix rows");
  const Vec c = sense == Sense::Max ? objective : -objective;

  detail::SimplexTableau tab(A, b);
  LPOutcome out;
  if (!tab.phase_one()) {
    out.status = LPStatus::Infeasible;
    out.farkas = tab.row_multipliers();
    return out;
  }
  tab.purge_artificials();
  if (auto enter = tab.phase_two(c)) {
    out.status = LPStatus::Unbounded;
    out.primal = tab.primal();
    out.ray = tab.ray(*enter);
    return out;
  }
  out.status = LPStatus::Optimal;
  out.primal = tab.primal();
  out.value = dot(objective, *out.primal);
  Vec y = tab.row_multipliers();
  out.dual = sense == Sense::Max ? y : -y;
  return out;
}

/// Feasibility of A x <= b; returns a point or nothing.
inline std::optional<Vec> find_feasible_point(const Mat& A, const Vec& b) {
  LPOutcome o = lp_solve(zeros(A.cols()), A, b, Sense::Max);
  if (o.status == LPStatus::Infeasible) return std::nullopt;
  return o.primal;
}

/// Exact Gaussian elimination with first-nonzero pivoting; free variables are
/// set to zero. Returns nothing when the system is inconsistent.
inline std::optional<Vec> solve_linear_system(const Mat& M, const Vec& rhs) {
  require_dims(M.rows() == rhs.size(), "system rows vs right-hand side");
  const std::size_t m = M.rows(), n = M.cols();
  std::vector<Vec> aug(m);
  for (std::size_t i = 0; i < m; ++i) {
    aug[i] = M.row_vec(i);
    aug[i].push_back(rhs[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(aug[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(aug[p], aug[r]);
    const Rational inv = 1 / aug[r][c];
    for (std::size_t j = c; j <= n; ++j) aug[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(aug[i][c]) == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (sgn(aug[i][n]) != 0) return std::nullopt;
  Vec x = zeros(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][n];
  return x;
}

/// Rank of M (exact).
inline std::size_t rank(const Mat& M) {
  std::vector<Vec> rows(M.rows());
  for (std::size_t i = 0; i < M.rows(); ++i) rows[i] = M.row_vec(i);
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < M.cols(); ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace polyconj
