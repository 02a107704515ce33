#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lorentz/certify.hpp"

using namespace lorentz;

namespace {

VolumePolynomial poly_xy() {
  VolumePolynomial f(2, 2);
  f.add_term({1, 1}, 1);
  return f;
}

VolumePolynomial poly_sum_of_squares() {
  VolumePolynomial f(2, 2);
  f.add_term({2, 0}, 1);
  f.add_term({0, 2}, 1);
  return f;
}

VolumePolynomial poly_x_plus_y_sq() {
  VolumePolynomial f(2, 2);
  f.add_term({2, 0}, 1);
  f.add_term({1, 1}, 2);
  f.add_term({0, 2}, 1);
  return f;
}

VolumePolynomial poly_x2y() {
  VolumePolynomial f(3, 2);
  f.add_term({2, 1}, 1);
  return f;
}

}  // namespace

TEST_CASE("contracted forms on the worked examples") {
  Mat q = contracted_form(poly_xy(), {}).matrix;
  CHECK(q(0, 0) == 0);
  CHECK(q(0, 1) == Rational(1, 2));
  CHECK(q(1, 0) == Rational(1, 2));

  Mat diag = contracted_form(poly_sum_of_squares(), {}).matrix;
  CHECK(diag(0, 0) == 1);
  CHECK(diag(1, 1) == 1);
  CHECK(diag(0, 1) == 0);

  Mat c = contracted_form(poly_x2y(), {make_vec({1, 1})}).matrix;
  CHECK(c(0, 1) == Rational(1, 3));
  CHECK(c(0, 0) == Rational(1, 3));
  CHECK(c(1, 1) == 0);

  CHECK_THROWS_AS(contracted_form(poly_x2y(), {}), input_error);
}

TEST_CASE("contracted form entries are the mixed values") {
  VolumePolynomial f = poly_x2y();
  Vec w = make_vec({2, Rational(1, 3)});
  Mat q = contracted_form(f, {w}).matrix;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(q(i, j) == mixed_value(f, {basis_vector(2, i), basis_vector(2, j), w}));
}

TEST_CASE("M-convex support") {
  CHECK(is_m_convex_support(poly_xy()));
  CHECK(is_m_convex_support(poly_x_plus_y_sq()));
  CHECK_FALSE(is_m_convex_support(poly_sum_of_squares()));
}

TEST_CASE("positive orthant certification") {
  CHECK(check_positive_orthant_lorentzian(poly_xy()).verdict == LorentzVerdict::Lorentzian);

  LorentzCertificate bad = check_positive_orthant_lorentzian(poly_sum_of_squares());
  CHECK(bad.verdict == LorentzVerdict::NotLorentzian);
  CHECK_FALSE(bad.witnesses.empty());

  VolumePolynomial negcoef(3, 2);
  negcoef.add_term({2, 1}, 1);
  negcoef.add_term({1, 2}, -1);
  CHECK(check_positive_orthant_lorentzian(negcoef).verdict == LorentzVerdict::NotLorentzian);

  VolumePolynomial zero(2, 2);
  LorentzCertificate z = check_positive_orthant_lorentzian(zero);
  CHECK(z.verdict == LorentzVerdict::NotLorentzian);
  CHECK(z.detail == "identically zero");
}

TEST_CASE("cone certification") {
  ConeModel quadrant = ConeModel::positive_orthant(2, "nef");
  CHECK(check_cone_lorentzian(poly_xy(), quadrant).verdict == LorentzVerdict::Lorentzian);
  CHECK(check_cone_lorentzian(poly_sum_of_squares(), quadrant).verdict ==
        LorentzVerdict::NotLorentzian);

  // vol polynomial of unit square + unit triangle: t1^2 + 2 t1 t2 + t2^2/2
  VolumePolynomial sq_tri(2, 2);
  sq_tri.add_term({2, 0}, 1);
  sq_tri.add_term({1, 1}, 2);
  sq_tri.add_term({0, 2}, Rational(1, 2));
  CHECK(check_cone_lorentzian(sq_tri, quadrant).verdict == LorentzVerdict::Lorentzian);
  Mat q = contracted_form(sq_tri, {}).matrix;
  CHECK(q(0, 0) == 1);
  CHECK(q(0, 1) == 1);
  CHECK(q(1, 1) == Rational(1, 2));
  CHECK(inertia_of(q) == Inertia{1, 0, 1});

  ConeModel empty;
  CHECK_THROWS_AS(check_cone_lorentzian(poly_xy(), empty), input_error);

  // a single-ray cone does not span; the exact prong is inapplicable
  ConeModel ray;
  ray.name = "ray";
  ray.generators.push_back(make_vec({1, 1}));
  CHECK(check_cone_lorentzian(poly_xy(), ray).verdict == LorentzVerdict::Indeterminate);
}

TEST_CASE("cone certification is invariant under generator permutation") {
  VolumePolynomial f(3, 3);
  f.add_term({1, 1, 1}, 1);
  f.add_term({2, 1, 0}, 1);
  f.add_term({1, 2, 0}, 1);
  std::vector<Vec> gens{basis_vector(3, 0), basis_vector(3, 1), basis_vector(3, 2)};
  LorentzVerdict v1 = check_positive_orthant_lorentzian(substitute_cone(f, gens)).verdict;
  std::vector<Vec> permuted{gens[2], gens[0], gens[1]};
  LorentzVerdict v2 = check_positive_orthant_lorentzian(substitute_cone(f, permuted)).verdict;
  CHECK(v1 == v2);
}

TEST_CASE("strictness certification") {
  ConeModel quadrant = ConeModel::positive_orthant(2, "nef");

  LorentzCertificate strict = check_strict(poly_xy(), quadrant);
  CHECK(strict.verdict == LorentzVerdict::StrictlyLorentzian);

  LorentzCertificate degenerate = check_strict(poly_x_plus_y_sq(), quadrant);
  CHECK(degenerate.verdict == LorentzVerdict::Indeterminate);  // rank-1 at every sample
  for (const auto& w : degenerate.witnesses) CHECK(w.inertia == Inertia{1, 1, 0});

  LorentzCertificate x2y = check_strict(poly_x2y(), quadrant);
  CHECK(x2y.verdict == LorentzVerdict::StrictlyLorentzian);

  CHECK_THROWS_AS(check_strict(poly_sum_of_squares(), quadrant), domain_error);
}
