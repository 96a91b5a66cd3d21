#include <gtest/gtest.h>

#include <random>

#include "scf/exactfield.hpp"

using namespace scf;

namespace {

Scalar S(const char* text) { return parse_scalar(text); }
const Scalar kDelta = Scalar::param(Param::Delta);
const Scalar kLam = Scalar::param(Param::LambdaSym);

// random element of Q(i, sqrt2), optionally with a Delta-dependence
Scalar random_scalar(std::mt19937& rng, bool symbolic) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  auto q = [&] { return make_rational(num(rng), den(rng)); };
  Scalar x(BaseScalar(q(), q(), q(), q()));
  if (symbolic) x = x + Scalar(q()) * kDelta + Scalar(q()) * kDelta * kDelta;
  return x;
}

}  // namespace

TEST(ExactField, GaussianNorm) { EXPECT_EQ(S("(1+I)*(1-I)"), Scalar(2)); }

TEST(ExactField, InverseOfSqrt2) {
  Scalar x = Scalar::sqrt2() / Scalar(2);
  EXPECT_EQ(x * Scalar::sqrt2(), Scalar(1));
  EXPECT_EQ(Scalar::sqrt2().inverse(), x);
}

TEST(ExactField, PolynomialCancellation) {
  Scalar x = (kDelta * kDelta - kDelta) / kDelta;
  EXPECT_EQ(x, kDelta - Scalar(1));
  EXPECT_TRUE(x.denominator().is_constant());
}

TEST(ExactField, Evaluation) {
  Bindings b{{Param::Delta, make_rational(1, 2)}, {Param::LambdaSym, Rational(1)}};
  EXPECT_TRUE((Scalar(2) * kDelta - kLam).eval(b).is_zero());
  EXPECT_EQ(kDelta.eval({{Param::Delta, make_rational(-3, 4)}}), Scalar::rational(-3, 4));
  EXPECT_THROW((Scalar(1) / (kDelta + Scalar(1))).eval({{Param::Delta, Rational(-1)}}), ArithmeticError);
}

TEST(ExactField, DivisionByZeroThrows) { EXPECT_THROW(Scalar(0).inverse(), ArithmeticError); }

TEST(ExactField, RationalArithmeticMatchesGmp) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  for (int t = 0; t < 300; ++t) {
    Rational a = make_rational(num(rng), den(rng)), b = make_rational(num(rng), den(rng));
    EXPECT_EQ((Scalar(a) + Scalar(b)).rational_value(), Rational(a + b));
    EXPECT_EQ((Scalar(a) * Scalar(b)).rational_value(), Rational(a * b));
    if (b != 0) {
      EXPECT_EQ((Scalar(a) / Scalar(b)).rational_value(), Rational(a / b));
    }
  }
}

TEST(ExactField, FieldAxiomsOnSamples) {
  std::mt19937 rng(7);
  for (int t = 0; t < 120; ++t) {
    bool sym = t % 2;
    Scalar x = random_scalar(rng, sym), y = random_scalar(rng, sym), z = random_scalar(rng, false);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + y, y + x);
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), Scalar(1));
    }
  }
}

TEST(ExactField, QuarticRelations) {
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
  EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt2(), Scalar(2));
  Scalar w = (Scalar(1) + Scalar::i()) / Scalar::sqrt2();  // primitive 8th root of unity
  EXPECT_EQ(w.pow(8), Scalar(1));
  EXPECT_EQ(w.pow(4), Scalar(-1));
}

TEST(ExactField, RenderingRoundTrips) {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    Scalar x = random_scalar(rng, t % 3 == 0);
    if (t % 5 == 0 && !x.is_zero()) x = Scalar(1) / (x + kDelta);
    EXPECT_EQ(parse_scalar(x.str()), x) << x.str();
    EXPECT_EQ(parse_scalar(x.str()).str(), x.str());  // canonical form is idempotent
  }
}

TEST(ExactField, EvalCommutesWithArithmetic) {
  std::mt19937 rng(5);
  Bindings b{{Param::Delta, make_rational(5, 7)}};
  for (int t = 0; t < 60; ++t) {
    Scalar x = random_scalar(rng, true), y = random_scalar(rng, true);
    EXPECT_EQ((x + y).eval(b), x.eval(b) + y.eval(b));
    EXPECT_EQ((x * y).eval(b), x.eval(b) * y.eval(b));
    if (!y.eval(b).is_zero()) {
      EXPECT_EQ((x / y).eval(b), x.eval(b) / y.eval(b));
    }
  }
}

TEST(ExactField, RationalRoots) {
  Scalar p = (Scalar(4) * kDelta - Scalar(3)) * (kDelta + Scalar(2)) * (kDelta * kDelta + Scalar(1));
  auto roots = rational_roots(p.numerator(), Param::Delta);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], Rational(-2));
  EXPECT_EQ(roots[1], make_rational(3, 4));
}

TEST(ExactField, ParseErrors) {
  EXPECT_THROW(parse_scalar("1 +"), ParseError);
  EXPECT_THROW(parse_scalar("Foo"), ParseError);
  ScalarVars vars{{"L", Scalar(3)}};
  EXPECT_EQ(parse_scalar("L^2 - 1", vars), Scalar(8));
}
