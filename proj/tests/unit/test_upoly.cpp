#include <gtest/gtest.h>

#include "kstab/errors.hpp"
#include "kstab/symcore/binomial.hpp"
#include "kstab/symcore/upoly.hpp"

using namespace kstab;

TEST(UPoly, BinomialInKAgreesWithIntegerBinomial) {
  for (long shift = -4; shift <= 4; ++shift) {
    for (long n = 0; n <= 6; ++n) {
      const UPoly p = UPoly::binomial_in_k(shift, n);
      EXPECT_EQ(p.degree(), n);
      for (long k = std::max(0L, -shift); k <= 15; ++k) {
        ASSERT_EQ(p.evaluate(Rational(k)), Rational(binomial(k + shift, n)));
      }
    }
  }
}

TEST(UPoly, InterpolationRecoversPolynomial) {
  const UPoly p({Rational(3), Rational(0), Rational(Integer(-1), Integer(2)), Rational(2)});
  std::vector<Rational> xs, ys;
  for (long x = -2; x <= 3; ++x) {
    xs.push_back(x);
    ys.push_back(p.evaluate(x));
  }
  EXPECT_EQ(UPoly::interpolate(xs, ys), p);
}

TEST(UPoly, InterpolationRejectsRepeatedAbscissae) {
  std::vector<Rational> xs{Rational(1), Rational(1)}, ys{Rational(0), Rational(1)};
  EXPECT_THROW(UPoly::interpolate(xs, ys), Error);
}

TEST(UPoly, Arithmetic) {
  const UPoly a = UPoly::linear(1);   // k + 1
  const UPoly b = UPoly::linear(-1);  // k - 1
  EXPECT_EQ(a * b, UPoly({Rational(-1), Rational(0), Rational(1)}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ((a + b).coeff(1), Rational(2));
  EXPECT_EQ((a * Rational(3)).coeff(0), Rational(3));
}
