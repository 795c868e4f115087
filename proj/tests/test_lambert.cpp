#include <gtest/gtest.h>

#include <cmath>

#include "touchard/lambert.hpp"

using namespace touchard;

TEST(LambertW0, Basics) {
  EXPECT_EQ(lambert_w0(0.0), 0.0);
  EXPECT_NEAR(lambert_w0(4.0), 1.20217, 5e-6);
  EXPECT_NEAR(lambert_w0(-std::exp(-1.0)), -1.0, 1e-12);
  EXPECT_NEAR(lambert_w0(std::exp(1.0)), 1.0, 1e-14);
}

TEST(LambertW0, ResidualOverRange) {
  for (double y : {-0.36, -0.3, -0.1, -1e-4, 1e-4, 0.5, 1.0, 4.0, 20.0, 1e3, 1e8}) {
    double w = lambert_w0(y);
    EXPECT_GE(w, -1.0);
    double resid = std::abs(w * std::exp(w) - y);
    EXPECT_LE(resid, 1e-14 * std::max(1.0, std::abs(y))) << "y=" << y;
  }
}

TEST(LambertW0, DomainError) {
  EXPECT_THROW(lambert_w0(-0.5), DomainError);
}

TEST(LambertWm1, Basics) {
  EXPECT_NEAR(lambert_wm1(-std::exp(-1.0)), -1.0, 1e-12);
  // Newton-refined reference value, residual-verified
  EXPECT_NEAR(lambert_wm1(-0.1), -3.577152063957297, 1e-13);
}

TEST(LambertWm1, ResidualOverRange) {
  for (double y : {-0.3678, -0.36, -0.3, -0.2, -0.1, -1e-2, -1e-4, -1e-8}) {
    double w = lambert_wm1(y);
    EXPECT_LE(w, -1.0);
    double resid = std::abs(w * std::exp(w) - y);
    EXPECT_LE(resid, 1e-14 * std::max(1.0, std::abs(y))) << "y=" << y;
  }
}

TEST(LambertWm1, DomainError) {
  EXPECT_THROW(lambert_wm1(0.1), DomainError);
  EXPECT_THROW(lambert_wm1(0.0), DomainError);
  EXPECT_THROW(lambert_wm1(-1.0), DomainError);
}

TEST(LambertBranchPoint, SeriesRegion) {
  // both branches straddle w = -1 close to the branch point
  double y = -std::exp(-1.0) + 1e-6;
  double w0 = lambert_w0(y);
  double wm = lambert_wm1(y);
  EXPECT_GT(w0, -1.0);
  EXPECT_LT(wm, -1.0);
  EXPECT_LE(std::abs(w0 * std::exp(w0) - y), 1e-14);
  EXPECT_LE(std::abs(wm * std::exp(wm) - y), 1e-14);
}

TEST(LambertHighPrecision, FiftyDigitResidual) {
  HighReal y(4);
  HighReal w = lambert_w0(y);
  HighReal resid = abs(w * exp(w) - y);
  EXPECT_LT(resid, HighReal("1e-45"));
}
