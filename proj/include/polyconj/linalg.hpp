#pragma once

// Exact rational scalars, dense vectors and matrices.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyconj {

/// Arbitrary-precision rational. mpq_class keeps values canonical
/// (positive denominator, reduced) after every arithmetic operation.
using Rational = mpq_class;

/// Raised for malformed input: dimension mismatches, bad indices, bad text.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require_dims(bool ok, const std::string& what) {
  if (!ok) throw InputError("dimension mismatch: " + what);
}

// ---------------------------------------------------------------------------
// Text form: "p/q" or "p", canonical on output.

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational: \"" + s + "\"");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator: \"" + s + "\"");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

// ---------------------------------------------------------------------------

using Vec = std::vector<Rational>;

inline Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

inline Vec make_vec(std::initializer_list<long> xs) {
  Vec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require_dims(a.size() == b.size(), "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec operator+(const Vec& a, const Vec& b) {
  require_dims(a.size() == b.size(), "vector sum");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  require_dims(a.size() == b.size(), "vector difference");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vec operator*(const Rational& t, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
  return r;
}

inline bool is_zero(std::span<const Rational> a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return sgn(x) == 0; });
}

inline Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline Vec slice(const Vec& a, std::size_t from, std::size_t count) {
  require_dims(from + count <= a.size(), "vector slice");
  return Vec(a.begin() + static_cast<std::ptrdiff_t>(from),
             a.begin() + static_cast<std::ptrdiff_t>(from + count));
}

inline std::ostream& operator<<(std::ostream& os, const Vec& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  return os << ')';
}

// ---------------------------------------------------------------------------

/// Dense row-major matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds from nested rows; all rows must have `cols` entries.
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require_dims(rows[i].size() == cols, "matrix row " + std::to_string(i));
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
  }

  static Mat from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vec> vs;
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    for (const auto& r : rows) vs.push_back(make_vec(r));
    return from_rows(vs, cols);
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vec row_vec(std::size_t i) const { return Vec(row(i).begin(), row(i).end()); }

  void append_row(std::span<const Rational> r) {
    require_dims(r.size() == cols_, "appended row");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec operator*(const Vec& x) const {
    require_dims(x.size() == cols_, "matrix-vector product");
    Vec y = zeros(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = dot(row(i), x);
    return y;
  }

  /// A^T y without materializing the transpose.
  Vec tmul(const Vec& y) const {
    require_dims(y.size() == rows_, "transpose-vector product");
    Vec x = zeros(cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (sgn(y[i]) == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) x[j] += y[i] * (*this)(i, j);
    }
    return x;
  }

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace polyconj
