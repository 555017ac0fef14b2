#include <hyperweyl/scalars.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace hyperweyl;

TEST(Primes, SmallValues) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(3));
  EXPECT_FALSE(is_prime(4));
  EXPECT_TRUE(is_prime(65537));
  EXPECT_FALSE(is_prime(65536));
}

TEST(Binomial, GeneralizedValues) {
  EXPECT_EQ(rational_binomial(5, 2), 10);
  EXPECT_EQ(rational_binomial(3, 5), 0);
  EXPECT_EQ(rational_binomial(-1, 3), -1);
  EXPECT_EQ(rational_binomial(-2, 2), 3);
  EXPECT_EQ(rational_binomial(7, 0), 1);
  EXPECT_EQ(rational_binomial(100, 50), Integer("100891344545564193334812497256"));
}

TEST(Binomial, PascalRule) {
  for (int n = -6; n <= 6; ++n)
    for (unsigned long k = 1; k <= 6; ++k)
      EXPECT_EQ(rational_binomial(n + 1, k), rational_binomial(n, k) + rational_binomial(n, k - 1)) << n << " " << k;
}

TEST(Factorial, Values) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
}

TEST(Residue, Arithmetic) {
  const Residue a(3, 7), b(5, 7);
  EXPECT_EQ((a + b).value(), 1u);
  EXPECT_EQ((a - b).value(), 5u);
  EXPECT_EQ((a * b).value(), 1u);
  EXPECT_EQ((a / b).value(), 2u);
  EXPECT_EQ(Residue(-1, 7).value(), 6u);
  EXPECT_EQ(a * a.inverse(), Residue(1, 7));
  EXPECT_THROW((void)Residue(0, 7).inverse(), std::domain_error);
}

TEST(Residue, FieldMismatch) {
  EXPECT_THROW((void)(Residue(1, 5) + Residue(1, 7)), FieldMismatchError);
  EXPECT_THROW(Residue(1, 1), std::invalid_argument);
}

TEST(ReduceModP, Values) {
  EXPECT_EQ(reduce_mod_p(Rational(1, 2), 5).value(), 3u);
  EXPECT_EQ(reduce_mod_p(Rational(-3, 4), 7).value(), 1u);
  EXPECT_THROW((void)reduce_mod_p(Rational(1, 5), 5), NotIntegralError);
  EXPECT_THROW((void)reduce_mod_p(Rational(1), 4), std::invalid_argument);
}

TEST(ReduceModP, IsRingMap) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-200, 200), den(1, 60);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
    for (int trial = 0; trial < 200; ++trial) {
      Rational x(num(rng), den(rng)), y(num(rng), den(rng));
      x.canonicalize();
      y.canonicalize();
      if (mpz_divisible_ui_p(x.get_den_mpz_t(), p) || mpz_divisible_ui_p(y.get_den_mpz_t(), p)) continue;
      const Residue rx = reduce_mod_p(x, p), ry = reduce_mod_p(y, p);
      Rational s = x + y, m = x * y;
      EXPECT_EQ(reduce_mod_p(s, p), rx + ry);
      EXPECT_EQ(reduce_mod_p(m, p), rx * ry);
    }
  }
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational(" -7/2 "), Rational(-7, 2));
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("+5"), Rational(5));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
}

TEST(MakeRational, Canonical) {
  const Rational r = make_rational(4, -6);
  EXPECT_EQ(r.get_num(), -2);
  EXPECT_EQ(r.get_den(), 3);
  EXPECT_EQ(make_rational(0, 5), Rational(0));
  EXPECT_THROW((void)make_rational(1, 0), std::domain_error);
}

TEST(FieldOps, Conversions) {
  const FieldSpec q{}, f5{5};
  EXPECT_EQ(FieldOps<Rational>::from(Rational(2, 3), q), Rational(2, 3));
  EXPECT_EQ(FieldOps<Residue>::from(Rational(2, 3), f5).value(), 4u);
  EXPECT_EQ(FieldOps<Residue>::from(Integer(-1), f5).value(), 4u);
  EXPECT_EQ(q.name(), "Q");
  EXPECT_EQ(f5.name(), "F_5");
}
