#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lorentz/bodies.hpp"
#include "lorentz/certify.hpp"
#include "support.hpp"

using namespace lorentz;
using namespace lorentz::testing;

namespace {

Polytope unit_square() {
  return Polytope(2, {make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1}), make_vec({1, 1})});
}

Polytope unit_triangle() {
  return Polytope(2, {make_vec({0, 0}), make_vec({1, 0}), make_vec({0, 1})});
}

Polytope rectangle_2_half() {
  return Polytope(2, {make_vec({0, 0}), make_vec({2, 0}), make_vec({0, Rational(1, 2)}),
                      make_vec({2, Rational(1, 2)})});
}

Polytope cube(int n) {
  std::vector<Vec> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    pts.push_back(v);
  }
  return Polytope(n, pts);
}

Polytope simplex(int n) {
  std::vector<Vec> pts{Vec::Zero(n)};
  for (int i = 0; i < n; ++i) pts.push_back(basis_vector(n, i));
  return Polytope(n, pts);
}

}  // namespace

TEST_CASE("canonical vertex sets") {
  // interior and duplicate points are dropped
  Polytope p(2, {make_vec({0, 0}), make_vec({2, 0}), make_vec({0, 2}), make_vec({2, 2}),
                 make_vec({1, 1}), make_vec({2, 2})});
  CHECK(p.vertices().size() == 4);
  // collinear midpoints are dropped too
  Polytope seg(2, {make_vec({0, 0}), make_vec({2, 2}), make_vec({1, 1})});
  CHECK(seg.vertices().size() == 2);
}

TEST_CASE("volumes of the worked examples") {
  CHECK(volume(unit_square()) == 1);
  CHECK(volume(unit_triangle()) == Rational(1, 2));
  Polytope segment(2, {make_vec({0, 0}), make_vec({3, 4})});
  CHECK(volume(segment) == 0);
  CHECK(volume(cube(3)) == 1);
  CHECK(volume(cube(4)) == 1);
  CHECK(volume(simplex(3)) == Rational(1, 6));
  CHECK(volume(simplex(4)) == Rational(1, 24));
}

TEST_CASE("volume agrees with the shoelace oracle on random 2D hulls") {
  Rng rng(7101);
  for (int trial = 0; trial < 120; ++trial) {
    Polytope p = random_polytope(rng, 2, 3 + trial % 8);
    CHECK(volume(p) == shoelace_oracle(p));
  }
}

TEST_CASE("volume is translation invariant and scales like c^n") {
  Rng rng(7102);
  for (int dim = 2; dim <= 4; ++dim)
    for (int trial = 0; trial < 12; ++trial) {
      Polytope p = random_polytope(rng, dim, dim + 3 + trial % 5);
      Vec shift = random_nonneg_vec(rng, dim);
      CHECK(volume(translate(p, shift)) == volume(p));
      Rational c(3, 2);
      CHECK(volume(scale(p, c)) == rational_pow(c, dim) * volume(p));
    }
}

TEST_CASE("hull boundary invariants on random instances") {
  Rng rng(7103);
  for (int dim = 2; dim <= 4; ++dim)
    for (int trial = 0; trial < 10; ++trial) {
      Polytope p = random_polytope(rng, dim, dim + 4 + trial % 4);
      CHECK(hull_invariants_hold(p));
    }
}

TEST_CASE("minkowski sums") {
  Polytope origin(2, {Vec::Zero(2)});
  CHECK(minkowski_sum(unit_square(), origin) == unit_square());

  Polytope doubled = minkowski_sum(unit_square(), unit_square());
  CHECK(doubled == scale(unit_square(), 2));
  CHECK(volume(doubled) == 4);

  Polytope pentagon = minkowski_sum(unit_square(), unit_triangle());
  CHECK(volume(pentagon) == Rational(7, 2));  // = 1 + 2*V(Q,T) + 1/2 with V = 1
  CHECK(pentagon.vertices().size() == 5);

  Polytope p3(3, {Vec::Zero(3), basis_vector(3, 0)});
  CHECK_THROWS_AS(minkowski_sum(unit_square(), p3), input_error);
}

TEST_CASE("mixed volume fixtures") {
  BodyFamily squares{{unit_square(), unit_square()}};
  VolumePolynomial f = mixed_volumes(squares);
  VolumePolynomial expect(2, 2);
  expect.add_term({2, 0}, 1);
  expect.add_term({1, 1}, 2);
  expect.add_term({0, 2}, 1);
  CHECK(f == expect);
  CHECK(mixed_value(f, {basis_vector(2, 0), basis_vector(2, 1)}) == 1);

  BodyFamily sq_tri{{unit_square(), unit_triangle()}};
  VolumePolynomial g = mixed_volumes(sq_tri);
  CHECK(mixed_value(g, {basis_vector(2, 0), basis_vector(2, 1)}) == 1);
  CHECK(evaluate(g, make_vec({1, 0})) == 1);
  CHECK(evaluate(g, make_vec({0, 1})) == Rational(1, 2));

  BodyFamily sq_rect{{unit_square(), rectangle_2_half()}};
  CHECK(mixed_value(mixed_volumes(sq_rect), {basis_vector(2, 0), basis_vector(2, 1)}) ==
        Rational(5, 4));
}

TEST_CASE("mixed volumes match the support-function oracle in 2D") {
  Rng rng(7104);
  for (int trial = 0; trial < 40; ++trial) {
    Polytope a = random_full_dim_polytope(rng, 2, 4 + trial % 5);
    Polytope b = random_full_dim_polytope(rng, 2, 4 + trial % 4);
    BodyFamily fam{{a, b}};
    VolumePolynomial f = mixed_volumes(fam);
    CHECK(mixed_value(f, {basis_vector(2, 0), basis_vector(2, 1)}) ==
          mixed_area_support_oracle(a, b));
  }
}

TEST_CASE("volume polynomial evaluates to the hull volume at test points") {
  Rng rng(7105);
  for (int dim = 2; dim <= 3; ++dim) {
    BodyFamily fam{{random_full_dim_polytope(rng, dim, dim + 4),
                    random_polytope(rng, dim, dim + 3), random_polytope(rng, dim, dim + 2)}};
    VolumePolynomial f = mixed_volumes(fam);
    for (int trial = 0; trial < 4; ++trial) {
      Vec t = random_nonneg_vec(rng, 3, 3);
      std::optional<Polytope> sum;
      for (int i = 0; i < 3; ++i) {
        if (t[i] == 0) continue;
        Polytope scaled = scale(fam.bodies[i], t[i]);
        sum = sum ? minkowski_sum(*sum, scaled) : scaled;
      }
      Rational direct = sum ? volume(*sum) : Rational(0);
      CHECK(evaluate(f, t) == direct);
    }
  }
}

TEST_CASE("binomial mixed-volume identity |A+B| = |A| + 2V + |B|") {
  Rng rng(7106);
  for (int trial = 0; trial < 30; ++trial) {
    Polytope a = random_polytope(rng, 2, 3 + trial % 6);
    Polytope b = random_polytope(rng, 2, 3 + trial % 5);
    BodyFamily fam{{a, b}};
    Rational v = mixed_value(mixed_volumes(fam), {basis_vector(2, 0), basis_vector(2, 1)});
    CHECK(volume(minkowski_sum(a, b)) == volume(a) + 2 * v + volume(b));
    // Minkowski's inequality V(A,B)^2 >= |A||B|
    CHECK(v * v >= volume(a) * volume(b));
  }
}

TEST_CASE("compiled volume polynomials are cone-Lorentzian over the orthant") {
  Rng rng(7107);
  for (int dim = 2; dim <= 4; ++dim) {
    BodyFamily fam{{random_full_dim_polytope(rng, dim, dim + 4),
                    random_full_dim_polytope(rng, dim, dim + 3)}};
    VolumePolynomial f = mixed_volumes(fam);
    LorentzCertificate cert = check_cone_lorentzian(f, ConeModel::positive_orthant(2, "nef"));
    CHECK(cert.verdict == LorentzVerdict::Lorentzian);
  }
}

TEST_CASE("polygon intersection area") {
  CHECK(intersection_area(unit_square(), unit_square()) == 1);
  CHECK(intersection_area(unit_square(), translate(unit_square(), make_vec({Rational(1, 2), 0}))) ==
        Rational(1, 2));
  CHECK(intersection_area(unit_square(), translate(unit_square(), make_vec({2, 2}))) == 0);
  CHECK(intersection_area(unit_square(), rectangle_2_half()) == Rational(1, 2));
  CHECK(intersection_area(unit_square(), unit_triangle()) == Rational(1, 2));
}

TEST_CASE("asymmetry of a body with itself is zero") {
  BodyAsymmetry self = asymmetry_F_bodies(unit_square(), unit_square());
  CHECK(self.F.lo == 0);
  CHECK(self.F.hi == 0);  // the grid contains an exact-overlap translation

  BodyAsymmetry shifted =
      asymmetry_F_bodies(unit_square(), translate(unit_square(), make_vec({3, Rational(5, 7)})));
  CHECK(shifted.F.hi == 0);
}

TEST_CASE("asymmetry fixture: unit square vs 2:1 rectangle") {
  BodyAsymmetry rec = asymmetry_F_bodies(unit_square(), rectangle_2_half());
  CHECK(rec.F.contains(Rational(1, 2)));
  CHECK(rec.F.hi == Rational(1, 2));  // optimum attained on the grid
  CHECK(rec.F.width() <= Rational(1, 64));
}

TEST_CASE("fmp_bodies_check") {
  FmpBodiesRecord same = fmp_bodies_check(unit_square(), scale(unit_square(), 3));
  CHECK(same.bm_zero_exact);
  CHECK_FALSE(same.ratio.has_value());
  CHECK(same.F.hi == 0);

  FmpBodiesRecord rec = fmp_bodies_check(unit_square(), rectangle_2_half());
  CHECK_FALSE(rec.bm_zero_exact);
  CHECK(rec.bm_deficit.lo > 0);
  REQUIRE(rec.ratio.has_value());
  CHECK(rec.ratio->lo > 0);

  Rng rng(7108);
  int finite_ratios = 0;
  for (int trial = 0; trial < 6; ++trial) {
    Polytope a = random_full_dim_polytope(rng, 2, 4);
    Polytope b = random_full_dim_polytope(rng, 2, 4);
    FmpBodiesRecord r = fmp_bodies_check(a, b);
    if (r.ratio) ++finite_ratios;
  }
  CHECK(finite_ratios > 0);
}
