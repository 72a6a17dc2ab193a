#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "cubicsym/errors.hpp"
#include "cubicsym/smoothprobe/smoothprobe.hpp"

using namespace cubicsym;

namespace {

Cyclotomic z(long n, long k) { return Cyclotomic::root_of_unity(n, k); }

const char* kFermat = "x0^3 + x1^3 + x2^3 + x3^3 + x4^3";
const char* kKlein = "x0*x1^2 + x1*x2^2 + x2*x3^2 + x3*x4^2 + x4*x0^2";

MatrixGroup z3z4_group() {
  const Matrix a{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, z(4, 1), 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}};
  return MatrixGroup::generate({a, Matrix::diagonal({1, 1, 1, z(3, 1), z(3, 2)})});
}

MatrixGroup alt4_group() {
  const Matrix a{{z(3, 1), 0, 0, 0, 0},
                 {0, z(3, 2), 0, 0, 0},
                 {0, 0, 0, 0, 1},
                 {0, 0, 1, 0, 0},
                 {0, 0, 0, 1, 0}};
  return MatrixGroup::generate({a, Matrix::diagonal({1, 1, 1, -1, -1})});
}

// oracle: partial derivatives by finite differences of the polynomial itself
// is not available over F_p, so differentiate symbolically term by term
bool naive_singular(const ReducedCubic& f, const ProjectivePoint& x) {
  const auto& mons = cubic_monomials();
  for (int k = 0; k < 5; ++k) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < mons.size(); ++j) {
      const int e = mons[j].exponents[k];
      if (e == 0) continue;
      std::int64_t v = f.coefficients[j] * e % f.p;
      for (int i = 0; i < 5; ++i)
        for (int t = 0; t < mons[j].exponents[i] - (i == k); ++t) v = v * x[i] % f.p;
      s = (s + v) % f.p;
    }
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

TEST(Reduction, Examples) {
  const PrimeReduction r(3, 7);
  EXPECT_EQ(r.zeta_image(), 2);
  EXPECT_EQ(r(z(3, 1)), 2);
  EXPECT_EQ(r(z(3, 2)), 4);
  EXPECT_EQ(r(Cyclotomic(Rational(1, 2))), 4);
  EXPECT_EQ(r(Cyclotomic(-1)), 6);
  const PrimeReduction k(11, 23);
  EXPECT_EQ(k(z(11, 1)) != 1 && (k(z(11, 1)) * k(z(11, 10))) % 23 == 1, true);
  const auto f = reduce(CubicForm::parse(kKlein), k);
  EXPECT_EQ(f.coefficients, reduce(CubicForm::parse(kKlein), PrimeReduction(1, 23)).coefficients);
  EXPECT_THROW(PrimeReduction(5, 7), BadPrime);
  EXPECT_THROW(PrimeReduction(1, 3), BadPrime);
  EXPECT_THROW(r(Cyclotomic(Rational(1, 7))), BadPrime);
  EXPECT_THROW(r(z(5, 1)), BadPrime);
}

TEST(Reduction, IsARingHomomorphism) {
  const PrimeReduction r(12, 13);
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> d(-3, 3), e(0, 11);
  for (int t = 0; t < 30; ++t) {
    const Cyclotomic a = d(rng) * z(12, e(rng)) + d(rng) * z(4, e(rng));
    const Cyclotomic b = Cyclotomic(Rational(d(rng), 5)) + d(rng) * z(3, e(rng));
    EXPECT_EQ(r(a * b), r(a) * r(b) % 13);
    EXPECT_EQ(r(a + b), (r(a) + r(b)) % 13);
  }
}

TEST(DefaultPrime, Choices) {
  EXPECT_EQ(PrimeReduction::default_prime(1), 7);
  EXPECT_EQ(PrimeReduction::default_prime(3), 7);
  EXPECT_EQ(PrimeReduction::default_prime(4), 13);
  EXPECT_EQ(PrimeReduction::default_prime(5), 11);
  EXPECT_EQ(PrimeReduction::default_prime(11), 23);
  EXPECT_THROW(PrimeReduction::default_prime(33), BadPrime);
}

TEST(Scan, FermatSmoothAtSeven) {
  EXPECT_EQ(projective_point_count(7), 2801);
  const auto f = reduce(CubicForm::parse(kFermat), PrimeReduction(1, 7));
  EXPECT_EQ(singular_scan(f), std::nullopt);
}

TEST(Scan, KleinSmoothAtTwentyThree) {
  EXPECT_EQ(projective_point_count(23), 292561);
  const auto f = reduce(CubicForm::parse(kKlein), PrimeReduction(11, 23));
  const auto start = std::chrono::steady_clock::now();
  EXPECT_EQ(singular_scan(f), std::nullopt);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(5));
}

TEST(Scan, ConePoint) {
  const auto s = reynolds_basis(z3z4_group());
  ASSERT_EQ(s.dimension(), 7u);
  CubicForm member;
  long k = 1;
  for (const auto& f : s.basis) member += Cyclotomic(k++) * f;
  const auto point = singular_scan(reduce(member, PrimeReduction(1, 7)));
  ASSERT_TRUE(point.has_value());
  EXPECT_EQ(*point, (ProjectivePoint{0, 0, 1, 0, 0}));
}

TEST(Scan, AgreesWithNaiveOracle) {
  std::mt19937 rng(9);
  const std::int64_t p = 5;
  for (int t = 0; t < 20; ++t) {
    ReducedCubic f;
    f.p = p;
    // sparse random cubic, often singular
    for (auto& c : f.coefficients) c = rng() % 4 == 0 ? rng() % p : 0;
    std::optional<ProjectivePoint> first;
    for (int lead = 0; lead < 5 && !first; ++lead) {
      ProjectivePoint x{};
      x[lead] = 1;
      const int free = 4 - lead;
      std::int64_t total = 1;
      for (int i = 0; i < free; ++i) total *= p;
      for (std::int64_t idx = 0; idx < total && !first; ++idx) {
        std::int64_t r = idx;
        for (int i = 4; i > lead; --i) {
          x[i] = r % p;
          r /= p;
        }
        if (naive_singular(f, x)) first = x;
      }
    }
    EXPECT_EQ(singular_scan(f), first);
  }
}

TEST(Probe, Examples) {
  InvariantSpace fermat{{}, {CubicForm::parse(kFermat)}};
  EXPECT_EQ(probe_nonempty(fermat).status, ProbeResult::Status::NonEmptyCertified);

  const auto a4 = probe_nonempty(reynolds_basis(alt4_group()));
  EXPECT_EQ(a4.status, ProbeResult::Status::NonEmptyCertified);
  EXPECT_EQ(a4.prime, 7);
  EXPECT_EQ(a4.sample.size(), 35u);

  ProbeConfig few;
  few.trials = 3;
  const auto cone = probe_nonempty(reynolds_basis(z3z4_group()), few);
  EXPECT_EQ(cone.status, ProbeResult::Status::Inconclusive);
  EXPECT_EQ(cone.trials_run, 3);
  EXPECT_TRUE(cone.last_singular_point.has_value());
  EXPECT_EQ((*cone.last_singular_point)[2], 1);
}

TEST(Probe, DeterministicUnderSeed) {
  const auto s = reynolds_basis(alt4_group());
  ProbeConfig c;
  c.seed = 77;
  const auto a = probe_nonempty(s, c);
  const auto b = probe_nonempty(s, c);
  EXPECT_EQ(a.sample, b.sample);
  EXPECT_EQ(a.trials_run, b.trials_run);
}

TEST(Probe, SmoothExamplesAgreeAcrossPrimes) {
  for (const char* text : {kFermat, kKlein}) {
    const auto f = CubicForm::parse(text);
    for (std::int64_t p : {7, 13, 19})
      EXPECT_EQ(singular_scan(reduce(f, PrimeReduction(1, p))), std::nullopt) << text << ' ' << p;
  }
}

TEST(Scan, WorkerCountDoesNotChangeTheAnswer) {
  std::mt19937 rng(31);
  for (int t = 0; t < 6; ++t) {
    // cones with vertex e_4 put the first singular point in the last block
    ReducedCubic f;
    f.p = 13;
    const auto& mons = cubic_monomials();
    for (std::size_t j = 0; j < mons.size(); ++j)
      if (mons[j].exponents[4] == 0 || t % 2 == 1) f.coefficients[j] = rng() % 13;
    const auto one = singular_scan(f, 1);
    EXPECT_EQ(singular_scan(f, 7), one);
    EXPECT_EQ(singular_scan(f, 3), one);
  }
}
