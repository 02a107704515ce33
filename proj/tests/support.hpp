#pragma once

// Shared helpers for the test suites: deterministic random instances and
// the independent oracles the expected values are frozen from.

#include <random>
#include <vector>

#include "lorentz/bodies.hpp"
#include "lorentz/polynomial.hpp"

namespace lorentz::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_num = 8, int max_den = 4) {
  std::uniform_int_distribution<int> num(0, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_signed_rational(Rng& rng, int max_num = 8, int max_den = 4) {
  std::uniform_int_distribution<int> flip(0, 1);
  Rational q = random_rational(rng, max_num, max_den);
  return flip(rng) ? q : Rational(-q);
}

inline Vec random_nonneg_vec(Rng& rng, int s, int max_num = 6) {
  Vec v(s);
  for (int i = 0; i < s; ++i) v[i] = random_rational(rng, max_num);
  return v;
}

/// Strictly positive rational vector (interior of the orthant).
inline Vec random_positive_vec(Rng& rng, int s, int max_num = 6) {
  Vec v(s);
  for (int i = 0; i < s; ++i) v[i] = random_rational(rng, max_num) + Rational(1, 7);
  return v;
}

/// Random rational polytope with vertices on a small grid.
inline Polytope random_polytope(Rng& rng, int dim, int npoints, int span = 4) {
  std::uniform_int_distribution<int> coord(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Vec> pts;
  for (int k = 0; k < npoints; ++k) {
    Vec p(dim);
    for (int i = 0; i < dim; ++i) p[i] = Rational(coord(rng), den(rng));
    pts.push_back(p);
  }
  return Polytope(dim, pts);
}

/// Full-dimensional random polytope (resamples until the volume is positive).
inline Polytope random_full_dim_polytope(Rng& rng, int dim, int npoints, int span = 4) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Polytope p = random_polytope(rng, dim, npoints, span);
    if (volume(p) > 0) return p;
  }
  throw std::runtime_error("random_full_dim_polytope: no full-dimensional sample");
}

// --- independent oracles -------------------------------------------------

/// 2D mixed area by support functions: V(A,B) = (1/2) sum over edges of A
/// of h_B(nu_e) with nu_e the outward rotated (unnormalized) edge vector.
inline Rational mixed_area_support_oracle(const Polytope& a, const Polytope& b) {
  if (a.dim() != 2 || b.dim() != 2) throw input_error("mixed_area_support_oracle: 2D only");
  std::vector<Vec> ring = polygon_ccw(a);
  auto support = [&](const Vec& direction) {
    Rational best = b.vertices()[0].dot(direction);
    for (const auto& q : b.vertices()) {
      Rational s = q.dot(direction);
      if (s > best) best = s;
    }
    return best;
  };
  Rational total = 0;
  const std::size_t n = ring.size();
  if (n < 2) return 0;
  for (std::size_t i = 0; i < n; ++i) {
    Vec w = ring[(i + 1) % n] - ring[i];
    Vec nu(2);
    nu[0] = w[1];
    nu[1] = -w[0];
    total += support(nu);
  }
  return total / 2;
}

/// Shoelace area of the CCW polygon ring (oracle for 2D hull volume).
inline Rational shoelace_oracle(const Polytope& p) {
  std::vector<Vec> ring = polygon_ccw(p);
  if (ring.size() < 3) return 0;
  Rational twice = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Vec& u = ring[i];
    const Vec& v = ring[(i + 1) % ring.size()];
    twice += u[0] * v[1] - u[1] * v[0];
  }
  return twice / 2;
}

}  // namespace lorentz::testing
