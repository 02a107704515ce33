#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lorentz/radii.hpp"

using namespace lorentz;

namespace {

VolumePolynomial poly_xy() {
  VolumePolynomial f(2, 2);
  f.add_term({1, 1}, 1);
  return f;
}

}  // namespace

TEST_CASE("radii on the worked example") {
  ConeModel quadrant = ConeModel::positive_orthant(2, "nef");
  VolumePolynomial f = poly_xy();

  Vec alpha = make_vec({1, 1}), beta = make_vec({2, 1});
  RadiiReport rep = radii(f, alpha, beta, quadrant);
  CHECK(rep.r_in == Rational(1, 2));
  CHECK(rep.R_out == 1);
  CHECK_FALSE(rep.R_infinite);
  CHECK_FALSE(rep.heuristic);

  RadiiReport same = radii(f, alpha, alpha, quadrant);
  CHECK(same.r_in == 1);
  CHECK(same.R_out == 1);

  // Lemma-style bound: R(beta, alpha) <= 2^{d-1} s_{d-1}/s_d
  RadiiReport rev = radii(f, beta, alpha, quadrant);
  SequenceSk s = sequence_sk(f, alpha, beta);
  CHECK(rev.R_out == 2);
  CHECK(rev.R_out <= 2 * s[1] / s[2]);
}

TEST_CASE("radii partial-order invariant holds on the report") {
  ConeModel quadrant = ConeModel::positive_orthant(2, "nef");
  VolumePolynomial f = poly_xy();
  Vec alpha = make_vec({3, Rational(1, 2)}), beta = make_vec({1, 2});
  RadiiReport rep = radii(f, alpha, beta, quadrant);
  for (int i = 0; i < 2; ++i) {
    Vec g = quadrant.generators[i];
    CHECK(mixed_value(f, {alpha - rep.r_in * beta, g}) >= 0);
    CHECK(mixed_value(f, {rep.R_out * beta - alpha, g}) >= 0);
  }
}

TEST_CASE("radii degenerate input") {
  ConeModel quadrant = ConeModel::positive_orthant(2, "nef");
  CHECK_THROWS_AS(radii(poly_xy(), make_vec({1, 1}), Vec::Zero(2), quadrant), domain_error);
}
