#include <gtest/gtest.h>

#include "kstab/errors.hpp"
#include "kstab/symcore/parse.hpp"
#include "kstab/symcore/random.hpp"

using namespace kstab;

namespace {
const std::vector<std::string> xy{"x", "y"};
}

TEST(Parse, TwoTermExample) {
  const MultiPoly f = parse_poly("x^2 - 3/2*y", xy);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coefficient(Monomial({2, 0})), Rational(1));
  EXPECT_EQ(f.coefficient(Monomial({0, 1})), Rational(Integer(-3), Integer(2)));
}

TEST(Parse, EmptyIsZero) {
  EXPECT_TRUE(parse_poly("", xy).is_zero());
  EXPECT_TRUE(parse_poly("   ", xy).is_zero());
  EXPECT_EQ(to_string(parse_poly("", xy), xy), "0");
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_poly("x**2", xy), ParseError);
  EXPECT_THROW(parse_poly("x^", xy), ParseError);
  EXPECT_THROW(parse_poly("x + + y", xy), ParseError);
  EXPECT_THROW(parse_poly("z", xy), ParseError);
  EXPECT_THROW(parse_poly("1/0*x", xy), ParseError);
  try {
    parse_poly("x + z", xy);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Parse, WhitespaceAndRepeatedFactors) {
  EXPECT_EQ(parse_poly(" x * x * y ", xy), parse_poly("x^2*y", xy));
  EXPECT_EQ(parse_poly("2*x - x", xy), parse_poly("x", xy));
  EXPECT_EQ(parse_poly("-3", xy), MultiPoly::constant(2, -3));
}

TEST(Parse, PrinterFormat) {
  EXPECT_EQ(to_string(parse_poly("y - 3/2*x^2*y + 4", xy), xy),
            "-3/2*x^2*y + y + 4");
  EXPECT_EQ(to_string(parse_poly("-x", xy), xy), "-x");
}

TEST(Parse, RoundTripOnRandomPolys) {
  PolySampler sampler(2024, 20);
  const auto vars = default_var_names(4);
  EXPECT_EQ(vars.front(), "x0");
  for (int trial = 0; trial < 200; ++trial) {
    MultiPoly f(4);
    for (long d = 0; d <= 3; ++d) {
      if (sampler.uniform(0, 1)) f += sampler.form(4, d) * Rational(Integer(1), Integer(sampler.uniform(1, 7)));
    }
    const std::string text = to_string(f, vars);
    ASSERT_EQ(parse_poly(text, vars), f) << text;
    ASSERT_EQ(to_string(parse_poly(text, vars), vars), text);
  }
}
