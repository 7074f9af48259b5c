#include <doctest.h>

#include "qgs/bigfloat.hpp"
#include "qgs/error.hpp"
#include "qgs/exact.hpp"

using namespace qgs;

TEST_CASE("surd_normalize pulls square factors out") {
  const SurdValue v = surd_normalize(8, 1);
  CHECK(v.surd_coeff() == GaussianRational(2));
  CHECK(v.radicand() == 2);
  CHECK(v.rational_part().is_zero());

  const SurdValue one = surd_normalize(9, GaussianRational::frac(1, 3));
  CHECK(one.is_rational());
  CHECK(one.rational_part() == GaussianRational(1));
}

TEST_CASE("squarefree_decompose") {
  auto [sq, fr] = squarefree_decompose(72);
  CHECK(sq == 6);
  CHECK(fr == 2);
  auto [sq1, fr1] = squarefree_decompose(1);
  CHECK(sq1 == 1);
  CHECK(fr1 == 1);
  // Large prime square times a small squarefree part.
  const mpz_class p = 1000003;
  auto [sq2, fr2] = squarefree_decompose(p * p * 15);
  CHECK(sq2 == p);
  CHECK(fr2 == 15);
}

TEST_CASE("sqrt(2) e^{-i pi/4} is 1 - i") {
  const ClosedFormValue v(surd_normalize(2, 1), RationalAngle(-1, 4));
  CHECK(cf_equal(v, ClosedFormValue(GaussianRational(1, -1))));
  CHECK(v.is_gaussian_rational());
}

TEST_CASE("quarter turns fold into the coefficient") {
  const ClosedFormValue v = cf_sqrt(3) * cf_phase(1, 2);
  CHECK(v.phase().is_identity());
  CHECK(v.surd().surd_coeff() == GaussianRational::i());
}

TEST_CASE("RationalAngle reduces modulo 2") {
  CHECK(RationalAngle(7, 2).value() == mpq_class(3, 2));
  CHECK(RationalAngle(-1, 4).value() == mpq_class(7, 4));
  CHECK(RationalAngle(4, 1).is_identity());
}

TEST_CASE("Gaussian rational arithmetic") {
  const GaussianRational z(1, 1);
  CHECK(z * z == GaussianRational(0, 2));
  CHECK(z * z.conj() == GaussianRational(2));
  CHECK((z / z) == GaussianRational(1));
  CHECK(z.norm() == 2);
}

TEST_CASE("mixed radicands are not representable") {
  CHECK_THROWS_AS(surd_normalize(2, 1) + surd_normalize(3, 1), Error);
  const SurdValue s = surd_normalize(2, 1) + surd_normalize(8, 1);
  CHECK(s.surd_coeff() == GaussianRational(3));
  const SurdValue prod = surd_normalize(2, 1) * surd_normalize(2, 1);
  CHECK(prod.is_rational());
  CHECK(prod.rational_part() == GaussianRational(2));
}

TEST_CASE("closed form conversion carries a small radius") {
  const HighPrecComplex v = cf_to_complex(cf_sqrt(2), 128);
  CHECK(v.re.to_string(20) == "1.4142135623730950488");
  CHECK(v.im.is_zero());
  CHECK(v.err < 1e-33);
  const HighPrecComplex z = cf_to_complex(ClosedFormValue(0), 128);
  CHECK(z.err == 0.0);
  CHECK_THROWS_AS(cf_to_complex(cf_sqrt(2), 32), Error);
}

TEST_CASE("phase conversion agrees with trigonometry") {
  // sqrt(10)/2 (1+i) e^{-i pi/20}
  const ClosedFormValue v(SurdValue::make({}, GaussianRational(mpq_class(1, 2), mpq_class(1, 2)), 10), RationalAngle(-1, 20));
  const HighPrecComplex z = cf_to_complex(v, 128);
  CHECK(z.re.to_double() == doctest::Approx(1.8090169943749474));
  CHECK(z.im.to_double() == doctest::Approx(1.3143277802978340));
}
