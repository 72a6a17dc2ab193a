#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "cubicsym/errors.hpp"
#include "cubicsym/exact/cyclotomic.hpp"

using cubicsym::Cyclotomic;
using cubicsym::Rational;

namespace {

Cyclotomic z(long n, long k) { return Cyclotomic::root_of_unity(n, k); }

// sqrt(-11) = 2(z + z^3 + z^4 + z^5 + z^9) + 1 in Q(zeta_11)
Cyclotomic sqrt_minus_11() {
  return 2 * (z(11, 1) + z(11, 3) + z(11, 4) + z(11, 5) + z(11, 9)) + 1;
}

Cyclotomic random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  Cyclotomic out;
  for (int k = 0; k < n; ++k) out += Cyclotomic(Rational(coeff(rng), den(rng))) * z(n, k);
  return out;
}

}  // namespace

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(cubicsym::cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cubicsym::cyclotomic_polynomial(3), (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(cubicsym::cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(cubicsym::cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cubicsym::cyclotomic_polynomial(11).size(), 11u);
  EXPECT_EQ(cubicsym::euler_phi(264), 80);
}

TEST(RootOfUnity, Examples) {
  EXPECT_TRUE(z(1, 0).is_one());
  EXPECT_EQ(z(3, 1) + z(3, 2), Cyclotomic(-1));
  EXPECT_EQ(z(4, 1) * z(4, 1), Cyclotomic(-1));
  EXPECT_EQ(z(2, 1), Cyclotomic(-1));
  EXPECT_EQ(z(6, 1), -z(3, 2));
  EXPECT_EQ(z(6, 1).conductor(), 3);
  EXPECT_EQ(z(12, 4), z(3, 1));
  EXPECT_EQ(z(5, -1), z(5, 4));
}

TEST(Arith, Examples) {
  EXPECT_EQ(z(5, 1) + z(5, 2) + z(5, 3) + z(5, 4), Cyclotomic(-1));
  const Cyclotomic p = z(3, 1) * z(4, 1);
  EXPECT_EQ(p, z(12, 7));
  EXPECT_EQ(p.conductor(), 12);
}

TEST(Arith, GaussSumSquare) {
  const Cyclotomic s = sqrt_minus_11();
  // independent check in the complex embedding
  const std::complex<double> approx = s.to_complex();
  EXPECT_NEAR(approx.real(), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(approx.imag()), std::sqrt(11.0), 1e-12);
  EXPECT_EQ(s * s, Cyclotomic(-11));
}

TEST(Invert, Examples) {
  EXPECT_EQ(Cyclotomic(2).inverse(), Cyclotomic(Rational(1, 2)));
  EXPECT_EQ(z(11, 1).inverse(), z(11, 10));
  // 1 + zeta_3 = -zeta_3^2, so its inverse is -zeta_3
  EXPECT_EQ((1 + z(3, 1)).inverse(), -z(3, 1));
  EXPECT_TRUE(((1 + z(3, 1)) * -z(3, 1)).is_one());
  EXPECT_THROW(Cyclotomic(0).inverse(), cubicsym::ZeroDivision);
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(z(11, 2).conjugate(), z(11, 9));
  EXPECT_EQ(Cyclotomic(Rational(-3, 7)).conjugate(), Cyclotomic(Rational(-3, 7)));
  const Cyclotomic a = (sqrt_minus_11() - 1) / 2;
  const Cyclotomic b = (-sqrt_minus_11() - 1) / 2;
  EXPECT_EQ(a.conjugate(), b);
}

TEST(Descent, MixedConductorsReduce) {
  // zeta_12^3 = i, zeta_15^5 = zeta_3
  EXPECT_EQ(z(12, 3), z(4, 1));
  EXPECT_EQ(z(12, 3).conductor(), 4);
  EXPECT_EQ(z(15, 5).conductor(), 3);
  // (zeta_3 * zeta_5) * zeta_5^-1 returns to conductor 3
  const Cyclotomic w = z(3, 1) * z(5, 1) * z(5, 4);
  EXPECT_EQ(w.conductor(), 3);
  EXPECT_EQ(w, z(3, 1));
  // sqrt(5) = z + z^4 - z^2 - z^3 is real but not rational
  const Cyclotomic r5 = z(5, 1) + z(5, 4) - z(5, 2) - z(5, 3);
  EXPECT_EQ(r5 * r5, Cyclotomic(5));
  // sqrt(-3) = 2 zeta_3 + 1 lives in conductor 3, not 12
  const Cyclotomic r3 = z(12, 4) * 2 + 1;
  EXPECT_EQ(r3.conductor(), 3);
  // product of sqrt(-3) and i lands in conductor 12
  EXPECT_EQ((r3 * z(4, 1)).conductor(), 12);
  // i * i * sqrt(-3) returns to conductor 3
  EXPECT_EQ((r3 * z(4, 1) * z(4, 1)).conductor(), 3);
}

TEST(Properties, RootsOfUnitySumToZero) {
  for (int n = 2; n <= 66; ++n) {
    Cyclotomic sum;
    for (int k = 0; k < n; ++k) sum += z(n, k);
    EXPECT_TRUE(sum.is_zero()) << "n = " << n;
  }
}

TEST(Properties, FieldAxiomsOnRandomSamples) {
  std::mt19937 rng(7);
  for (int n : {3, 4, 5, 11, 12, 15, 33}) {
    for (int trial = 0; trial < 6; ++trial) {
      const Cyclotomic a = random_element(rng, n);
      const Cyclotomic b = random_element(rng, n);
      const Cyclotomic c = random_element(rng, n == 33 ? 11 : 3);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_EQ(a.conjugate().conjugate(), a);
      EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
      EXPECT_EQ((a + b).conjugate(), a.conjugate() + b.conjugate());
      // two computation paths to the same value compare equal
      EXPECT_EQ((a - b) + b, a);
    }
  }
}

TEST(Properties, ComplexEmbeddingIsRingHomomorphism) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Cyclotomic a = random_element(rng, 12);
    const Cyclotomic b = random_element(rng, 15);
    EXPECT_LT(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 1e-9);
  }
}

TEST(TextEncoding, ParsesAndPrints) {
  EXPECT_EQ(Cyclotomic::parse("-1/2*E(11)^3 + 2"), 2 - Cyclotomic(Rational(1, 2)) * z(11, 3));
  EXPECT_EQ(Cyclotomic::parse("E(3)^2"), z(3, 2));
  EXPECT_EQ(Cyclotomic::parse("E(4)"), z(4, 1));
  EXPECT_EQ(Cyclotomic::parse("-E(3)^-1"), -z(3, 2));
  EXPECT_EQ(Cyclotomic::parse("(1 + E(3))^-1"), -z(3, 1));
  EXPECT_EQ(Cyclotomic::parse(" 0 "), Cyclotomic(0));
  EXPECT_EQ(Cyclotomic(Rational(-3, 4)).to_string(), "-3/4");
  EXPECT_EQ(z(5, 2).to_string(), "E(5)^2");
  EXPECT_THROW(Cyclotomic::parse("E(3"), cubicsym::ParseError);
  EXPECT_THROW(Cyclotomic::parse("1 +"), cubicsym::ParseError);
  EXPECT_THROW(Cyclotomic::parse("x"), cubicsym::ParseError);
  EXPECT_THROW(Cyclotomic::parse("1/0"), cubicsym::ParseError);
}

TEST(TextEncoding, RoundTripProperty) {
  std::mt19937 rng(3);
  for (int n : {1, 3, 4, 5, 7, 11, 12, 20, 33}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Cyclotomic a = random_element(rng, n);
      EXPECT_EQ(Cyclotomic::parse(a.to_string()), a) << a.to_string();
    }
  }
}
