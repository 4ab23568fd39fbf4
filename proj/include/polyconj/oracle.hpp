#pragma once

// Brute-force verification helpers and reproducible random instances.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyconj/linalg.hpp"
#include "polyconj/mapping.hpp"
#include "polyconj/plfunc.hpp"
#include "polyconj/polyhedron.hpp"
#include "polyconj/support.hpp"

namespace polyconj {

/// xorshift64* (Marsaglia shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D).
/// The seed is mixed once with splitmix64 (increment 0x9E3779B97F4A7C15,
/// multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB) so that small and
/// zero seeds give well-spread, nonzero states.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    state_ = z ? z : 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform integer in [lo, hi] (modulo reduction; bias is irrelevant here).
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }

  bool coin(unsigned one_in) { return next() % one_in == 0; }

 private:
  std::uint64_t state_;
};

struct Profile {
  std::size_t max_dim = 3;
  std::size_t max_rows = 8;
  long coeff_bound = 4;

  friend bool operator==(const Profile&, const Profile&) = default;
};

struct InstanceSeed {
  std::uint64_t seed = 0;
  Profile profile;
};

class RetryExhausted : public std::runtime_error {
 public:
  explicit RetryExhausted(std::uint64_t seed)
      : std::runtime_error("random instance generation exhausted retries for seed " + std::to_string(seed)) {}
};

// ---------------------------------------------------------------------------

/// max over vertices of <v, .>; -∞ for the empty set. Requires boundedness.
inline ExtReal vertex_support_oracle(const Polyhedron& P, const Vec& v) {
  const std::vector<Vec> vs = vertices(P);
  if (vs.empty()) return ExtReal::minus_inf();
  Rational best = dot(v, vs.front());
  for (const Vec& x : vs) {
    Rational s = dot(v, x);
    if (s > best) best = s;
  }
  return best;
}

inline Vec random_int_vec(Xorshift64Star& rng, std::size_t n, long bound) {
  Vec v(n);
  for (auto& x : v) x = rng.uniform(-bound, bound);
  return v;
}

/// Random rows with integer coefficients in [-c, c]; about one row in four
/// is doubled into an equality pair (counted against the row budget).
inline Polyhedron random_rows(Xorshift64Star& rng, std::size_t dim, std::size_t rows, long bound) {
  Polyhedron P(dim);
  while (P.rows() < rows) {
    Vec a = random_int_vec(rng, dim, bound);
    Rational b = rng.uniform(-bound, bound);
    if (P.rows() + 2 <= rows && rng.coin(4))
      P.add_equality(a, b);
    else
      P.add_row(a, b);
  }
  return P;
}

/// Random nonempty polyhedron with 1..max_rows rows.
inline Polyhedron random_polyhedron(Xorshift64Star& rng, std::size_t dim, const Profile& prof,
                                    std::uint64_t seed_for_errors = 0) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(prof.max_rows)));
    Polyhedron P = random_rows(rng, dim, rows, prof.coeff_bound);
    if (!is_empty(P)) return P;
  }
  throw RetryExhausted(seed_for_errors);
}

/// Random nonempty bounded polyhedron: random rows intersected with the box
/// [-coeff_bound, coeff_bound]^dim.
inline Polyhedron random_bounded_polyhedron(Xorshift64Star& rng, std::size_t dim, const Profile& prof,
                                            std::uint64_t seed_for_errors = 0) {
  const Polyhedron box = Polyhedron::box(dim, Rational(-prof.coeff_bound), Rational(prof.coeff_bound));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(prof.max_rows)));
    Polyhedron P = intersect(random_rows(rng, dim, rows, prof.coeff_bound), box);
    if (!is_empty(P)) return P;
  }
  throw RetryExhausted(seed_for_errors);
}

/// Deterministic nonempty-graph mapping R^n ⇉ R^p for the given seed.
inline PolyMap random_polymap(const InstanceSeed& s, std::size_t n, std::size_t p) {
  if (n == 0 || p == 0 || n > s.profile.max_dim || p > s.profile.max_dim)
    throw InputError("random_polymap: dimensions outside profile");
  Xorshift64Star rng(s.seed);
  return PolyMap(n, p, random_polyhedron(rng, n + p, s.profile, s.seed));
}

inline PolyMap random_polymap(Xorshift64Star& rng, std::size_t n, std::size_t p, const Profile& prof) {
  return PolyMap(n, p, random_polyhedron(rng, n + p, prof));
}

/// Random max-affine function with 1..3 pieces on a random nonempty domain
/// (whole space with probability 1/3).
inline PLFunction random_plfunction(Xorshift64Star& rng, std::size_t n, const Profile& prof) {
  const long pieces = rng.uniform(1, 3);
  std::vector<AffinePiece> ps;
  for (long i = 0; i < pieces; ++i)
    ps.push_back({random_int_vec(rng, n, prof.coeff_bound), Rational(rng.uniform(-prof.coeff_bound, prof.coeff_bound))});
  Polyhedron dom = rng.coin(3) ? Polyhedron::whole_space(n)
                               : random_polyhedron(rng, n, Profile{prof.max_dim, std::min<std::size_t>(prof.max_rows, 4), prof.coeff_bound});
  return PLFunction(std::move(ps), std::move(dom));
}

/// Points of a nonempty graph: a pool of vertices (bounded case) or LP
/// maximizers in random directions, plus the relative-interior point, rays
/// from it (unbounded case) and rational convex combinations of pool
/// points. Every returned point is checked for membership.
inline std::vector<Vec> sample_graph_points(const PolyMap& F, std::size_t count, std::uint64_t seed) {
  const Polyhedron& G = F.graph();
  std::optional<Vec> ri = relative_interior_point(G);
  if (!ri) throw PreconditionError("sample_graph_points: empty graph");
  Xorshift64Star rng(seed);
  std::vector<Vec> pool;
  std::vector<Vec> rays;
  if (is_bounded(G)) {
    pool = vertices(G);
  } else {
    for (int k = 0; k < 8; ++k) {
      SupportEval s = support_eval(G, random_int_vec(rng, G.dim(), 3));
      if (s.value.finite())
        pool.push_back(*s.maximizer);
      else if (s.unbounded_ray)
        rays.push_back(*s.unbounded_ray);
    }
  }
  if (pool.empty()) pool.push_back(*ri);

  static const Rational weights[] = {Rational(1, 2), Rational(1, 4), Rational(3, 4), Rational(1, 3)};
  std::vector<Vec> out;
  out.reserve(count);
  for (std::size_t i = 0; out.size() < count; ++i) {
    Vec x;
    switch (i % 4) {
      case 0: x = pool[(i / 4) % pool.size()]; break;
      case 1: x = *ri; break;
      case 2: {
        const Vec& a = pool[rng.next() % pool.size()];
        const Vec& b = pool[rng.next() % pool.size()];
        const Rational& t = weights[rng.next() % 4];
        x = t * a + Rational(1 - t) * b;
        break;
      }
      default:
        x = rays.empty() ? pool[rng.next() % pool.size()] : *ri + Rational(rng.uniform(1, 3)) * rays[rng.next() % rays.size()];
        break;
    }
    if (!contains(G, x)) throw std::logic_error("sample_graph_points: generated point left the graph");
    out.push_back(std::move(x));
  }
  return out;
}

/// Nonnegative integer combination (weights 0..2) of the given rows of P.
inline Vec random_cone_vector(Xorshift64Star& rng, const Polyhedron& P, const std::vector<std::size_t>& rows) {
  Vec w = zeros(P.dim());
  for (std::size_t i : rows) w = w + Rational(rng.uniform(0, 2)) * P.A().row_vec(i);
  return w;
}

inline Vec random_cone_vector(Xorshift64Star& rng, const Polyhedron& P) {
  return random_cone_vector(rng, P, index_range(0, P.rows()));
}

/// A point of a nonempty P: the maximizer in a random direction when that
/// is finite (often a vertex or edge point), otherwise the ri point.
inline Vec random_point_in(Xorshift64Star& rng, const Polyhedron& P) {
  if (rng.coin(3)) return *relative_interior_point(P);
  SupportEval s = support_eval(P, random_int_vec(rng, P.dim(), 3));
  if (s.value.finite()) return *s.maximizer;
  std::optional<Vec> ri = relative_interior_point(P);
  if (!ri) throw PreconditionError("random_point_in: empty polyhedron");
  return *ri;
}

/// Whether `s` is a valid certificate for σ_P(v) (see SupportEval).
inline bool verify_support_certificate(const Polyhedron& P, const Vec& v, const SupportEval& s) {
  if (s.value.finite()) {
    if (!s.multipliers || !s.maximizer || s.multipliers->size() != P.rows()) return false;
    for (const Rational& l : *s.multipliers)
      if (sgn(l) < 0) return false;
    return P.A().tmul(*s.multipliers) == v && dot(P.b(), *s.multipliers) == s.value.value() &&
           contains(P, *s.maximizer) && dot(v, *s.maximizer) == s.value.value();
  }
  if (s.value.is_plus_inf()) {
    if (!s.unbounded_ray) return false;
    for (const Rational& t : P.A() * *s.unbounded_ray)
      if (sgn(t) > 0) return false;
    return sgn(dot(v, *s.unbounded_ray)) > 0 && !is_empty(P);
  }
  if (!s.farkas || s.farkas->size() != P.rows()) return false;
  for (const Rational& y : *s.farkas)
    if (sgn(y) < 0) return false;
  return is_zero(P.A().tmul(*s.farkas)) && sgn(dot(P.b(), *s.farkas)) < 0;
}

/// Random dual vector; half the time a nonnegative combination of `rows`
/// (so the support value in that direction is finite).
inline Vec random_dual(Xorshift64Star& rng, const Polyhedron& P, long bound = 3) {
  if (P.rows() > 0 && rng.coin(2)) {
    Vec y = zeros(P.rows());
    for (auto& t : y) t = rng.uniform(0, 2);
    return P.A().tmul(y);
  }
  return random_int_vec(rng, P.dim(), bound);
}

}  // namespace polyconj
