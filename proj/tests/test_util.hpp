#pragma once

#include <initializer_list>
#include <string>

#include "polyconj/polyconj.hpp"

namespace polyconj::testing {

inline Rational Q(const char* s) { return parse_rational(s); }

inline Vec V(std::initializer_list<const char*> xs) {
  Vec v;
  for (const char* x : xs) v.push_back(parse_rational(x));
  return v;
}

inline Polyhedron H(std::initializer_list<std::initializer_list<long>> A, std::initializer_list<long> b) {
  return Polyhedron(Mat::from_ints(A), make_vec(b));
}

/// [lo, hi] in R with rows x <= hi, -x <= -lo.
inline Polyhedron interval(long lo, long hi) { return H({{1}, {-1}}, {hi, -lo}); }

inline PLFunction abs_fn() { return PLFunction::max_affine({{make_vec({1}), 0}, {make_vec({-1}), 0}}); }

}  // namespace polyconj::testing
