#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lorentz/certify.hpp"
#include "lorentz/matroid.hpp"

using namespace lorentz;

TEST_CASE("matroid construction and rank") {
  Matroid u23 = Matroid::uniform(2, 3);
  CHECK(u23.rank() == 2);
  CHECK(u23.bases().size() == 3);
  CHECK(u23.loopless());
  CHECK(u23.rank_of(0b111) == 2);
  CHECK(u23.rank_of(0b001) == 1);

  // {{0,1}} and {{2}}-free family violating exchange
  CHECK_THROWS_AS(Matroid(3, std::vector<std::uint32_t>{0b011, 0b100}), input_error);
}

TEST_CASE("flats of the worked examples") {
  FlatLattice u23 = flats(Matroid::uniform(2, 3));
  CHECK(u23.count() == 3);  // three singletons
  for (int r : u23.flat_rank) CHECK(r == 1);

  FlatLattice u34 = flats(Matroid::uniform(3, 4));
  CHECK(u34.count() == 10);  // 4 singletons + 6 pairs

  FlatLattice boolean3 = flats(Matroid::uniform(3, 3));
  CHECK(boolean3.count() == 6);  // all nonempty proper subsets
}

TEST_CASE("chow ring quotient dimensions") {
  ChowRingModel u34 = chow_ring(Matroid::uniform(3, 4));
  CHECK(u34.top_degree() == 2);
  CHECK(u34.quotient_dims()[0] == 1);
  CHECK(u34.quotient_dims()[2] == 1);

  ChowRingModel boolean3 = chow_ring(Matroid::uniform(3, 3));
  CHECK(boolean3.quotient_dims()[2] == 1);

  ChowRingModel rank2 = chow_ring(Matroid::uniform(2, 3));
  CHECK(rank2.top_degree() == 1);
  CHECK(rank2.quotient_dims()[1] == 1);
}

TEST_CASE("degrees of alpha/beta on U_{3,4}") {
  Matroid m = Matroid::uniform(3, 4);
  ChowRingModel model = chow_ring(m);
  DivisorSpec a = divisor_alpha(model.lattice());
  DivisorSpec b = divisor_beta(model.lattice());
  CHECK(degree(model, {a, a}) == 1);
  CHECK(degree(model, {a, b}) == 3);
  CHECK(degree(model, {b, b}) == 3);
  CHECK_THROWS_AS(degree(model, {a}), input_error);
}

TEST_CASE("matroid degree sequences match the characteristic-polynomial oracle") {
  for (const Matroid& m : {Matroid::uniform(3, 4), Matroid::uniform(2, 4), Matroid::uniform(3, 5),
                           Matroid::graphic_complete(4)}) {
    ChowRingModel model = chow_ring(m);
    DivisorSpec a = divisor_alpha(model.lattice());
    DivisorSpec b = divisor_beta(model.lattice());
    std::vector<Rational> mu = reduced_characteristic_coefficients(m);
    const int d = model.top_degree();
    for (int k = 0; k <= d; ++k) {
      std::vector<DivisorSpec> slots;
      for (int i = 0; i < d - k; ++i) slots.push_back(a);
      for (int i = 0; i < k; ++i) slots.push_back(b);
      CHECK(degree(model, slots) == mu[static_cast<std::size_t>(k)]);
    }
    // log-concavity of the degree sequence, exact
    for (int k = 1; k < d; ++k)
      CHECK(mu[k] * mu[k] >= mu[k - 1] * mu[k + 1]);
  }
}

TEST_CASE("bergman volume polynomial of U_{3,4}") {
  Matroid m = Matroid::uniform(3, 4);
  ChowRingModel model = chow_ring(m);
  DivisorSpec a = divisor_alpha(model.lattice());
  DivisorSpec b = divisor_beta(model.lattice());
  VolumePolynomial f = bergman_volume_polynomial(model, {a, b});
  // s-sequence (deg b^2, deg ab, deg a^2) = (3, 3, 1)
  SequenceSk s = sequence_sk(f, basis_vector(2, 0), basis_vector(2, 1));
  CHECK(s.values == std::vector<Rational>{3, 3, 1});
  CHECK(evaluate(f, make_vec({1, 0})) == 1);
  CHECK(evaluate(f, make_vec({0, 1})) == 3);
  CHECK(evaluate(f, make_vec({1, 1})) == 1 + 2 * 3 + 3);

  // single divisor: a pure monomial of degree r-1
  VolumePolynomial single = bergman_volume_polynomial(model, {b});
  CHECK(single == VolumePolynomial::monomial(1, {2}, 3));

  // volume polynomials of Bergman classes certify Lorentzian
  LorentzCertificate cert = check_cone_lorentzian(f, ConeModel::positive_orthant(2, "nef"));
  CHECK(cert.verdict == LorentzVerdict::Lorentzian);
}

TEST_CASE("ground-set permutation invariance of bergman polynomials") {
  // relabel U_{3,4} by swapping elements 2 and 3: alpha/beta at element 0
  // are untouched, so the volume polynomial is unchanged
  Matroid original = Matroid::uniform(3, 4);
  std::vector<std::uint32_t> bases;
  for (std::uint32_t b : original.bases()) {
    std::uint32_t swapped = b & 0b0011;
    if (b & 0b0100) swapped |= 0b1000;
    if (b & 0b1000) swapped |= 0b0100;
    bases.push_back(swapped);
  }
  Matroid relabeled(4, bases);
  ChowRingModel m1 = chow_ring(original);
  ChowRingModel m2 = chow_ring(relabeled);
  VolumePolynomial f1 =
      bergman_volume_polynomial(m1, {divisor_alpha(m1.lattice()), divisor_beta(m1.lattice())});
  VolumePolynomial f2 =
      bergman_volume_polynomial(m2, {divisor_alpha(m2.lattice()), divisor_beta(m2.lattice())});
  CHECK(f1 == f2);
}

TEST_CASE("submodular divisors") {
  Matroid m = Matroid::uniform(3, 4);
  FlatLattice lattice = flats(m);
  // z(S) = |S| (4 - |S|) is strictly concave in |S|
  DivisorSpec w =
      divisor_concave_cardinality(lattice, {Rational(3), Rational(4), Rational(3), Rational(0)});
  CHECK(w.nef);
  CHECK(w.ample);

  // a modular profile is nef but not ample
  DivisorSpec lin = divisor_concave_cardinality(lattice, {1, 2, 3, 4});
  CHECK(lin.nef);
  CHECK_FALSE(lin.ample);

  DivisorSpec a = divisor_alpha(lattice);
  CHECK(a.nef);
}

TEST_CASE("intrinsic Hodge-Riemann in degree one") {
  for (const Matroid& m : {Matroid::uniform(3, 4), Matroid::uniform(3, 5),
                           Matroid::graphic_complete(4)}) {
    ChowRingModel model = chow_ring(m);
    int n = m.ground_size();
    std::vector<Rational> profile;
    for (int k = 1; k <= n; ++k) profile.push_back(Rational(k * (n - k)));
    DivisorSpec omega = divisor_concave_cardinality(model.lattice(), profile);
    REQUIRE(omega.ample);
    IntrinsicHR hr = intrinsic_hr_check(model, omega);
    CHECK(hr.hr_holds);
    CHECK(hr.nondegenerate);
    CHECK(hr.inertia.n_plus == 1);
    CHECK(hr.ch1_dim == model.lattice().count() - hr.radical_rank);
  }
}

TEST_CASE("strict certification of bergman polynomials from ample divisors") {
  Matroid m = Matroid::uniform(3, 4);
  ChowRingModel model = chow_ring(m);
  int n = m.ground_size();
  std::vector<Rational> profile;
  for (int k = 1; k <= n; ++k) profile.push_back(Rational(k * (n - k)));
  DivisorSpec w = divisor_concave_cardinality(model.lattice(), profile, "w");
  DivisorSpec a = divisor_alpha(model.lattice());
  // perturb alpha by the ample class to get a second ample direction
  DivisorSpec mix = a;
  mix.flat_coefficients += w.flat_coefficients;
  mix.nef = true;
  VolumePolynomial f = bergman_volume_polynomial(model, {w, mix});
  LorentzCertificate cert = check_strict(f, ConeModel::positive_orthant(2, "nef"));
  CHECK(cert.verdict == LorentzVerdict::StrictlyLorentzian);
}

TEST_CASE("characteristic polynomial oracle sanity") {
  // chi(U_{2,3}) = (t-1)(t-2): reduced coefficients (1, 2)
  std::vector<Rational> mu = reduced_characteristic_coefficients(Matroid::uniform(2, 3));
  CHECK(mu == std::vector<Rational>{1, 2});
  // chi(K_4 graphic) = (t-1)(t-2)(t-3): reduced (1, 5, 6)
  std::vector<Rational> k4 = reduced_characteristic_coefficients(Matroid::graphic_complete(4));
  CHECK(k4 == std::vector<Rational>{1, 5, 6});
}
