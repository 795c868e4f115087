#include <gtest/gtest.h>

#include <random>

#include "touchard/exact.hpp"

using namespace touchard;

namespace {

ExactComplexRational rational_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 8);
  return {BigRat(num(rng), den(rng)), BigRat(num(rng), den(rng))};
}

// Truncated exponential-series oracle in high precision:
// e^{-z} sum_{k<=K} k^n z^k / k!, with K pushed until the geometric tail
// bound drops below 1e-20.
HighReal dobinski_oracle(int n, const BigRat& z) {
  HighReal zh = to_real(z, HighReal());
  HighReal sum(0);
  HighReal term(1);  // k = 0 value of z^k/k!
  HighReal kpow;
  int k = 0;
  while (true) {
    if (k > 0) term *= zh / k;
    kpow = pow(HighReal(k), n);
    sum += kpow * term;
    // ratio of consecutive summands for k >= 2 max(n, z): below 1/2
    if (k > 2 * std::max(n, 10) + 20) {
      HighReal tail = kpow * term;  // crude geometric bound with ratio 1/2
      if (tail < HighReal("1e-25") * (sum > 0 ? sum : HighReal(1))) break;
    }
    ++k;
  }
  return exp(-zh) * sum;
}

}  // namespace

TEST(Exact, DegreeZeroIsOne) {
  StirlingTable t(0);
  ExactComplexRational z(BigRat(7, 3), BigRat(-4, 5));
  auto v = touchard_exact(0, z, t);
  EXPECT_EQ(v, ExactComplexRational(BigRat(1)));
}

TEST(Exact, BellNumberAtOne) {
  auto v = touchard_exact(5, ExactComplexRational(BigRat(1)));
  EXPECT_EQ(v.re, BigRat(52));
  EXPECT_EQ(v.im, BigRat(0));
}

TEST(Exact, HandEvaluatedCubic) {
  // z^3 + 3 z^2 + z at z = -2:  -8 + 12 - 2 = 2
  auto v = touchard_exact(3, ExactComplexRational(BigRat(-2)));
  EXPECT_EQ(v.re, BigRat(2));
  EXPECT_EQ(v.im, BigRat(0));
}

TEST(Exact, ConjugateSymmetry) {
  StirlingTable t(40);
  std::mt19937 rng(777);
  for (int n : {1, 7, 16, 25, 40}) {
    for (int trial = 0; trial < 3; ++trial) {
      auto z = rational_point(rng);
      auto lhs = touchard_exact(n, conj(z), t);
      auto rhs = conj(touchard_exact(n, z, t));
      EXPECT_EQ(lhs, rhs) << "n=" << n;
    }
  }
}

TEST(Exact, SecondFormIdentity) {
  // sum_k S(n,k) z^k  ==  z^n sum_k S(n,n-k) z^{-k}, exactly, z != 0
  StirlingTable t(12);
  std::mt19937 rng(31);
  for (int n : {1, 4, 9, 12}) {
    auto z = rational_point(rng);
    if (z == ExactComplexRational(BigRat(0))) z = ExactComplexRational(BigRat(1), BigRat(2));
    // 1/z exactly
    BigRat d = z.re * z.re + z.im * z.im;
    ExactComplexRational zinv(z.re / d, -z.im / d);
    ExactComplexRational rhs;
    ExactComplexRational p(BigRat(1));
    for (int k = 0; k <= n; ++k) {
      rhs += BigRat(t(n, n - k)) * p;
      p *= zinv;
    }
    rhs *= pow_int(z, n);
    EXPECT_EQ(rhs, touchard_exact(n, z, t)) << "n=" << n;
  }
}

TEST(Exact, RecurrenceOracle) {
  EXPECT_TRUE(touchard_recurrence_check(4, ExactComplexRational(BigRat(1))));
  EXPECT_TRUE(touchard_recurrence_check(7, ExactComplexRational(BigRat(3, 2), BigRat(2))));
  EXPECT_TRUE(touchard_recurrence_check(10, ExactComplexRational(BigRat(-7))));
  std::mt19937 rng(99);
  std::vector<ExactComplexRational> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(rational_point(rng));
  for (int n = 0; n <= 30; ++n)
    for (const auto& z : pts) EXPECT_TRUE(touchard_recurrence_check(n, z)) << "n=" << n;
}

TEST(Exact, DobinskiCrossCheck) {
  StirlingTable t(15);
  for (int n = 0; n <= 15; ++n) {
    for (const BigRat& z : {BigRat(1, 2), BigRat(1), BigRat(3)}) {
      HighReal oracle = dobinski_oracle(n, z);
      auto exact = touchard_exact(n, ExactComplexRational(z), t);
      HighReal want = to_real(exact.re, HighReal());
      HighReal rel = abs(oracle - want) / abs(want);
      EXPECT_LT(rel, HighReal("1e-15")) << "n=" << n;
    }
  }
}

TEST(Scaled, MatchesExactRational) {
  StirlingTable t(30);
  struct Case { int n; CplxD z; };
  for (const auto& c : {Case{5, {2.0, 0.0}}, Case{19, {-50.0, 0.0}}, Case{30, {0.5, 0.25}}}) {
    auto scaled = touchard_scaled(c.n, c.z, t);
    ASSERT_EQ(scaled.scale_removed, ScaleRemoved::factorial_n);
    // reference: exact rational with the same (exactly representable) z
    ExactComplexRational z(BigRat(c.z.re), BigRat(c.z.im));
    auto exact = touchard_exact(c.n, z, t);
    CplxH ref = to_cplx(exact, HighReal()) / HighReal(factorial_big(c.n));
    LogComplexH ref_log = LogComplexH::from_cplx(ref);
    double rel = std::abs(std::exp(scaled.value.log_mag - to_double(ref_log.log_mag)) - 1.0) +
                 std::abs(scaled.value.phase - to_double(ref_log.phase));
    EXPECT_LT(rel, 1e-12) << "n=" << c.n;
  }
}

TEST(Scaled, ReferenceValues) {
  StirlingTable t(19);
  auto a = touchard_scaled(19, CplxD(2.0, 0.0), t);
  EXPECT_NEAR(a.value.real_part(), 1.76101e-2, 1.76101e-2 * 1e-5);
  auto b = touchard_scaled(19, CplxD(-50.0, 0.0), t);
  EXPECT_NEAR(b.value.real_part(), -1.11431e13, 1.11431e13 * 1e-5);
  // degree one: value is z itself
  auto c = touchard_scaled(1, CplxD(0.3, -0.7));
  EXPECT_NEAR(c.value.real_part(), 0.3, 1e-14);
  EXPECT_NEAR(c.value.imag_part(), -0.7, 1e-14);
}

TEST(LargeZ, LeadingTermOnly) {
  CplxD z(3.0, 4.0);
  auto v = large_z_expansion(7, z, 1);
  auto zn = pow_int(z, 7);
  EXPECT_NEAR(v.re, zn.re, std::abs(zn.re) * 1e-14);
  EXPECT_NEAR(v.im, zn.im, std::abs(zn.im) * 1e-14);
}

TEST(LargeZ, DegreeOneIsExact) {
  CplxD z(-2.0, 5.0);
  auto v = large_z_expansion(1, z, 4);
  EXPECT_NEAR(v.re, z.re, 1e-14);
  EXPECT_NEAR(v.im, z.im, 1e-14);
}

TEST(LargeZ, FourTermAccuracy) {
  StirlingTable t(5);
  auto exact = touchard_exact(5, ExactComplexRational(BigRat(100)), t);
  double want = to_real(exact.re, double());
  double got = large_z_expansion(5, CplxD(100.0, 0.0), 4).re;
  EXPECT_LT(std::abs(got - want) / std::abs(want), 1e-7);
}

TEST(LargeZ, RejectsZero) {
  EXPECT_THROW(large_z_expansion(5, CplxD(0.0, 0.0), 2), DomainError);
  EXPECT_THROW(large_z_expansion(5, CplxD(1.0, 0.0), 5), std::invalid_argument);
}
