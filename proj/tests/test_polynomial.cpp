#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lorentz/polynomial.hpp"

using namespace lorentz;

namespace {

VolumePolynomial poly_xy() {
  VolumePolynomial f(2, 2);
  f.add_term({1, 1}, 1);
  return f;
}

VolumePolynomial poly_x2y() {
  VolumePolynomial f(3, 2);
  f.add_term({2, 1}, 1);
  return f;
}

VolumePolynomial poly_x_plus_y_sq() {
  VolumePolynomial f(2, 2);
  f.add_term({2, 0}, 1);
  f.add_term({1, 1}, 2);
  f.add_term({0, 2}, 1);
  return f;
}

VolumePolynomial poly_xy_plus_xz() {
  VolumePolynomial f(2, 3);
  f.add_term({1, 1, 0}, 1);
  f.add_term({1, 0, 1}, 1);
  return f;
}

std::mt19937_64 rng(20250809);

Rational rand_rat() {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

Vec rand_vec(int s) {
  Vec v(s);
  for (int i = 0; i < s; ++i) v[i] = rand_rat();
  return v;
}

VolumePolynomial rand_poly(int d, int s) {
  VolumePolynomial f(d, s);
  std::vector<Exponents> all;
  Exponents cur(s, 0);
  auto rec = [&](auto&& self, int from, int remaining) -> void {
    if (remaining == 0) {
      all.push_back(cur);
      return;
    }
    for (int i = from; i < s; ++i) {
      cur[i] += 1;
      self(self, i, remaining - 1);
      cur[i] -= 1;
    }
  };
  rec(rec, 0, d);
  for (const auto& e : all) f.add_term(e, rand_rat());
  return f;
}

}  // namespace

TEST_CASE("evaluate on the worked examples") {
  CHECK(evaluate(poly_xy(), make_vec({1, 1})) == 1);
  CHECK(evaluate(poly_x_plus_y_sq(), make_vec({1, 1})) == 4);
  CHECK(evaluate(poly_x2y(), make_vec({2, 3})) == 12);
  CHECK_THROWS_AS(evaluate(poly_xy(), make_vec({1, 1, 1})), input_error);
}

TEST_CASE("directional derivatives") {
  VolumePolynomial dy = directional_derivative(poly_xy(), basis_vector(2, 0));
  CHECK(dy == VolumePolynomial::monomial(2, {0, 1}, 1));

  VolumePolynomial d = directional_derivative(poly_x2y(), make_vec({1, 1}));
  VolumePolynomial expect(2, 2);
  expect.add_term({1, 1}, 2);
  expect.add_term({2, 0}, 1);
  CHECK(d == expect);

  VolumePolynomial twice =
      directional_derivative(directional_derivative(poly_x2y(), basis_vector(2, 1)),
                             basis_vector(2, 1));
  CHECK(twice.is_zero());

  VolumePolynomial constant(0, 2);
  constant.add_term({0, 0}, 3);
  CHECK_THROWS_AS(directional_derivative(constant, basis_vector(2, 0)), domain_error);
}

TEST_CASE("mixed values match the intersection-number convention") {
  CHECK(mixed_value(poly_xy(), {basis_vector(2, 0), basis_vector(2, 1)}) == Rational(1, 2));
  CHECK(mixed_value(poly_xy_plus_xz(), {basis_vector(3, 1), basis_vector(3, 2)}) == 0);
  // vol polynomial of two unit squares is (t1+t2)^2; V(Q,Q) = 1
  CHECK(mixed_value(poly_x_plus_y_sq(), {basis_vector(2, 0), basis_vector(2, 1)}) == 1);
  CHECK_THROWS_AS(mixed_value(poly_xy(), {basis_vector(2, 0)}), input_error);
}

TEST_CASE("mixed_value is symmetric, multilinear and polarizes evaluate") {
  for (int trial = 0; trial < 40; ++trial) {
    int d = 2 + trial % 3, s = 2 + trial % 2;
    VolumePolynomial f = rand_poly(d, s);
    std::vector<Vec> dirs;
    for (int i = 0; i < d; ++i) dirs.push_back(rand_vec(s));

    Rational base = mixed_value(f, dirs);
    std::vector<Vec> swapped = dirs;
    std::swap(swapped[0], swapped[d - 1]);
    CHECK(mixed_value(f, swapped) == base);

    Vec u = rand_vec(s), w = rand_vec(s);
    Rational a = rand_rat(), b = rand_rat();
    std::vector<Vec> mixed_dirs = dirs, u_dirs = dirs, w_dirs = dirs;
    mixed_dirs[0] = a * u + b * w;
    u_dirs[0] = u;
    w_dirs[0] = w;
    CHECK(mixed_value(f, mixed_dirs) == a * mixed_value(f, u_dirs) + b * mixed_value(f, w_dirs));

    Vec v = rand_vec(s);
    CHECK(mixed_value(f, Slots{{v, d}}) == evaluate(f, v));
  }
}

TEST_CASE("derivatives commute") {
  for (int trial = 0; trial < 20; ++trial) {
    VolumePolynomial f = rand_poly(3, 3);
    Vec u = rand_vec(3), w = rand_vec(3);
    CHECK(directional_derivative(directional_derivative(f, u), w) ==
          directional_derivative(directional_derivative(f, w), u));
  }
}

TEST_CASE("substitute_cone on the worked examples") {
  std::vector<Vec> std_basis{basis_vector(2, 0), basis_vector(2, 1)};
  CHECK(substitute_cone(poly_xy(), std_basis) == poly_xy());

  VolumePolynomial ray = substitute_cone(poly_xy(), {make_vec({1, 1})});
  CHECK(ray == VolumePolynomial::monomial(1, {2}, 1));

  VolumePolynomial g = substitute_cone(poly_x2y(), {make_vec({1, 0}), make_vec({1, 1})});
  VolumePolynomial expect(3, 2);
  expect.add_term({2, 1}, 1);
  expect.add_term({1, 2}, 2);
  expect.add_term({0, 3}, 1);
  CHECK(g == expect);

  CHECK_THROWS_AS(substitute_cone(poly_xy(), {}), input_error);
}

TEST_CASE("substitute_cone agrees with evaluation at basis vectors") {
  for (int trial = 0; trial < 20; ++trial) {
    VolumePolynomial f = rand_poly(3, 3);
    std::vector<Vec> gens{rand_vec(3), rand_vec(3), rand_vec(3), rand_vec(3)};
    VolumePolynomial g = substitute_cone(f, gens);
    for (std::size_t i = 0; i < gens.size(); ++i)
      CHECK(evaluate(g, basis_vector(4, static_cast<int>(i))) == evaluate(f, gens[i]));
    // and on a random combination
    Vec y = rand_vec(4);
    Vec x = Vec::Zero(3);
    for (int i = 0; i < 4; ++i) x += y[i] * gens[i];
    CHECK(evaluate(g, y) == evaluate(f, x));
  }
}

TEST_CASE("sequence_sk worked examples") {
  // alpha = beta gives a constant sequence
  VolumePolynomial f = rand_poly(3, 2);
  Vec v = make_vec({1, 2});
  SequenceSk s = sequence_sk(f, v, v);
  for (const auto& value : s.values) CHECK(value == evaluate(f, v));

  // two unit squares: f = (t1+t2)^2, s = (1, 1, 1)
  SequenceSk sq = sequence_sk(poly_x_plus_y_sq(), basis_vector(2, 0), basis_vector(2, 1));
  CHECK(sq.values == std::vector<Rational>{1, 1, 1});

  // square vs rectangle [0,2]x[0,1/2]: f = t1^2 + (5/2) t1 t2 + t2^2
  VolumePolynomial sr(2, 2);
  sr.add_term({2, 0}, 1);
  sr.add_term({1, 1}, Rational(5, 2));
  sr.add_term({0, 2}, 1);
  SequenceSk seq = sequence_sk(sr, basis_vector(2, 0), basis_vector(2, 1));
  CHECK(seq.values == std::vector<Rational>{1, Rational(5, 4), 1});

  // endpoints are the plain volumes
  CHECK(seq[2] == evaluate(sr, basis_vector(2, 0)));
  CHECK(seq[0] == evaluate(sr, basis_vector(2, 1)));
}

TEST_CASE("contract yields the volume polynomial of w.Omega") {
  for (int trial = 0; trial < 10; ++trial) {
    VolumePolynomial f = rand_poly(3, 2);
    Vec w = rand_vec(2), v = rand_vec(2);
    VolumePolynomial g = contract(f, w);
    CHECK(evaluate(g, v) == mixed_value(f, Slots{{v, 2}, {w, 1}}));
  }
}

TEST_CASE("rational parsing and roots") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK_THROWS_AS(parse_rational("1/0"), input_error);
  CHECK_THROWS_AS(parse_rational("a"), input_error);

  Rational root;
  CHECK(exact_nth_root(Rational(9, 4), 2, root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(exact_nth_root(Rational(2), 2, root));

  Interval r2 = nth_root(Rational(2), 2, 128);
  CHECK(r2.lo * r2.lo <= 2);
  CHECK(r2.hi * r2.hi >= 2);
  CHECK(r2.width() <= Rational(1, pow2(120)));

  Interval c = nth_root(Rational(27, 8), 3, 64);
  CHECK(c.is_point());
  CHECK(c.lo == Rational(3, 2));
}

TEST_CASE("two-root comparator") {
  // 5 <= 2*sqrt(2) + 3*sqrt(1)  is false (2.83 + 3 = 5.83 >= 5: true actually)
  CHECK(leq_two_root_rhs(5, 2, 2, 3, 1));
  // 6 <= 2*sqrt(2) + 3  is false
  CHECK_FALSE(leq_two_root_rhs(6, 2, 2, 3, 1));
  CHECK(leq_root_rhs(3, 2, Rational(9, 4)));
  CHECK_FALSE(leq_root_rhs(Rational(301, 100), 2, Rational(9, 4)));
}
