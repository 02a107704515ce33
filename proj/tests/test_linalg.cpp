#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lorentz/linalg.hpp"

using namespace lorentz;

namespace {

std::mt19937_64 rng(424242);

Mat rand_symmetric(int n) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational q(num(rng), den(rng));
      m(i, j) = q;
      m(j, i) = q;
    }
  return m;
}

Mat rand_invertible(int n) {
  std::uniform_int_distribution<int> num(-4, 4);
  while (true) {
    Mat s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s(i, j) = num(rng);
    if (rank_of(s) == n) return s;
  }
}

}  // namespace

TEST_CASE("inertia on the worked examples") {
  Mat hyperbolic(2, 2);
  hyperbolic << 0, Rational(1, 2), Rational(1, 2), 0;
  CHECK(inertia_of(hyperbolic) == Inertia{1, 0, 1});

  Mat identity(2, 2);
  identity << 1, 0, 0, 1;
  CHECK(inertia_of(identity) == Inertia{2, 0, 0});

  Mat rank_one(2, 2);
  rank_one << 1, 1, 1, 1;
  CHECK(inertia_of(rank_one) == Inertia{1, 1, 0});

  Mat zero = Mat::Zero(3, 3);
  CHECK(inertia_of(zero) == Inertia{0, 3, 0});
}

TEST_CASE("inertia is a congruence invariant") {
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 4;
    Mat q = rand_symmetric(n);
    Mat s = rand_invertible(n);
    Mat congruent = s.transpose() * q * s;
    CHECK(inertia_of(congruent) == inertia_of(q));
  }
}

TEST_CASE("inertia counts sum to the dimension") {
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 5;
    Inertia in = inertia_of(rand_symmetric(n));
    CHECK(in.n_plus + in.n_zero + in.n_minus == n);
  }
}

TEST_CASE("rank and nullspace") {
  Mat a(2, 3);
  a << 1, 2, 3, 2, 4, 6;
  CHECK(rank_of(a) == 1);
  Mat ns = nullspace_of(a);
  CHECK(ns.cols() == 2);
  for (int j = 0; j < ns.cols(); ++j) CHECK((a * ns.col(j)).isZero());
}

TEST_CASE("phase-1 simplex feasibility") {
  // x + y = 1, x - y = 0 has x = y = 1/2 >= 0
  Mat a(2, 2);
  a << 1, 1, 1, -1;
  Vec b(2);
  b << 1, 0;
  Vec x;
  CHECK(nonneg_solution_exists(a, b, &x));
  CHECK(a * x == b);
  CHECK(x[0] >= 0);
  CHECK(x[1] >= 0);

  // x + y = -1 has no nonnegative solution
  Mat a2(1, 2);
  a2 << 1, 1;
  Vec b2(1);
  b2 << -1;
  CHECK_FALSE(nonneg_solution_exists(a2, b2));
}

TEST_CASE("hull membership helpers") {
  std::vector<Vec> gens{make_vec({1, 0}), make_vec({1, 1})};
  CHECK(in_conic_hull(gens, make_vec({3, 2})));
  CHECK_FALSE(in_conic_hull(gens, make_vec({0, 1})));
  CHECK(in_conic_hull(gens, make_vec({0, 0})));

  std::vector<Vec> square{make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1}), make_vec({1, 1})};
  CHECK(in_convex_hull(square, make_vec({Rational(1, 2), Rational(1, 3)})));
  CHECK_FALSE(in_convex_hull(square, make_vec({2, 0})));
  CHECK(in_convex_hull(square, make_vec({1, 1})));
}
