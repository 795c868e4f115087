// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Run with --criterion N to execute a single criterion.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "touchard/touchard.hpp"

using namespace touchard;

namespace {

const double kPi = pi_v<double>();

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// --- 1: saddle locations ---------------------------------------------------
bool criterion1(std::string& detail) {
  Check c;
  PhaseParams p(2.0, 0.0);
  struct Row { int k; double re, im; };
  const Row rows[] = {{1, -0.83431, 4.53027}, {2, -1.70226, 10.83981},
                      {3, -2.15691, 17.15368}, {5, -2.70395, 29.75450},
                      {10, -3.42265, 61.20519}, {15, -3.83638, 92.63559}};
  for (const auto& r : rows) {
    auto s = solve_saddle(p, r.k);
    c.expect(std::abs(s.t.re - r.re) <= 1e-5 && std::abs(s.t.im - r.im) <= 1e-5,
             "k=" + std::to_string(r.k) + " got " + fmt(s.t.re) + "+" + fmt(s.t.im) + "i");
  }
  detail = c.detail.str();
  return c.ok;
}

// --- 2: interval boundaries ------------------------------------------------
bool criterion2(std::string& detail) {
  Check c;
  const double printed[] = {3.11179, 6.87877, 10.25555, 13.56411,
                            17.02935, 20.13877, 23.49898, 26.43594};
  for (int k = 1; k <= 8; ++k) {
    double got = mu_boundary(k);
    double want = printed[k - 1];
    c.expect(std::abs(got - want) <= 1e-4,
             "mu_" + std::to_string(k) + " table " + fmt(want) + " computed " + fmt(got));
  }
  detail = c.detail.str();
  return c.ok;
}

// --- 3: Stokes angles ------------------------------------------------------
bool criterion3(std::string& detail) {
  Check c;
  struct Row { double mu, want; };
  const Row rows[] = {{0.5, 0.26352}, {1.0, 0.43458}, {1.5, 0.57971}, {2.0, 0.71391},
                      {3.0, 0.97162}, {3.5, 0.89984}, {4.0, 0.76994}, {4.5, 0.63821},
                      {5.0, 0.50446}, {6.0, 0.23093}};
  for (const auto& r : rows) {
    auto res = stokes_angle(r.mu);
    if (!res.theta_s) {
      c.expect(false, "mu=" + fmt(r.mu) + " no angle: " + res.diagnostic);
      continue;
    }
    double got = *res.theta_s / kPi;
    c.expect(std::abs(got - r.want) <= 1e-4,
             "mu=" + fmt(r.mu) + " want " + fmt(r.want) + " got " + fmt(got));
  }
  detail = c.detail.str();
  return c.ok;
}

// --- 4: coefficient table --------------------------------------------------
bool criterion4(std::string& detail) {
  Check c;
  PhaseParamsT<HighReal> p(HighReal(4), HighReal(0));
  auto le = local_expansion(solve_saddle(p, 0), 20);
  const double printed[] = {-3.8686291792e-01, 5.8050222467e-02, 2.3540750889e-02,
                            -1.5978602246e-02, 4.2654445898e-03, -2.6842320622e-04,
                            -2.9436829689e-04, 1.6066779690e-04, -4.6043216840e-05,
                            5.7487568453e-06};
  auto cs = wojdylo_c2s_all(le, 10);
  for (int s = 1; s <= 10; ++s) {
    double got = to_double(cs[static_cast<std::size_t>(s)].re);
    double want = printed[s - 1];
    c.expect(std::abs(got - want) <= 5e-11 * std::abs(want),
             "s=" + std::to_string(s) + " want " + fmt(want) + " got " + fmt(got));
  }
  detail = c.detail.str();
  return c.ok;
}

// --- 5: positive-axis expansion table ---------------------------------------
bool criterion5(std::string& detail) {
  Check c;
  struct Row { int n; double x, value, error; };
  const Row rows[] = {
      {20, 2, 1.76101e-02, 1.713e-05},  {30, 2, 2.79684e-05, 6.468e-06},
      {50, 2, 3.52691e-12, 1.766e-06},  {80, 2, 2.20563e-24, 5.071e-07},
      {100, 2, 2.66821e-33, 2.762e-07}, {20, 5, 2.07765e+02, 6.152e-06},
      {30, 5, 1.17615e+01, 3.119e-06},  {50, 5, 8.87071e-04, 1.059e-06},
      {80, 5, 2.99336e-12, 3.469e-07},  // comma-typeset cell, read with a '.'
      {100, 5, 7.50809e-19, 1.987e-07}, {20, 20, 1.46396e+10, 3.146e-06},
      {30, 20, 1.10997e+12, 5.524e-07}, {50, 20, 2.97967e+13, 8.697e-08},
      {80, 20, 2.38019e+12, 8.859e-08}, {100, 20, 2.04887e+10, 6.442e-08}};
  for (const auto& r : rows) {
    StirlingTable table(r.n - 1);
    auto exact = touchard_scaled(r.n - 1, CplxD(r.x, 0.0), table);
    ExpansionParams params(r.n, r.x, 0.0);
    auto j0 = jk_series(solve_saddle(PhaseParams(params), 0), params, 2);
    double err = relative_diff(j0.value, exact.value);
    double val = exact.value.real_part();
    std::string tag = "n=" + std::to_string(r.n) + ",x=" + fmt(r.x);
    c.expect(std::abs(val - r.value) <= 5.5e-6 * std::abs(r.value),
             tag + " value want " + fmt(r.value) + " got " + fmt(val));
    c.expect(std::abs(err - r.error) <= 0.05 * r.error,
             tag + " error want " + fmt(r.error) + " got " + fmt(err));
  }
  detail = c.detail.str();
  return c.ok;
}

// --- 6: negative-axis expansion table ---------------------------------------
bool criterion6(std::string& detail) {
  Check c;
  struct Row { int n; double x, value, error, tol; };
  const Row rows[] = {{20, 20, +1.72015e+03, 2.144e-04, 0.05},
                      {20, 50, -1.11431e+13, 1.762e-01, 0.10},
                      {20, 80, -9.07949e+17, 8.459e-04, 0.05},
                      {20, 100, -1.15125e+20, 1.205e-04, 0.05},
                      {20, 150, -5.25213e+23, 1.064e-05, 0.05},
                      {50, 20, +3.98563e-04, 2.275e-05, 0.05},
                      {50, 50, +4.62064e+09, 1.520e-05, 0.05},
                      {50, 80, -1.59622e+20, 5.736e-06, 0.05},
                      {50, 100, -1.56025e+26, 6.223e-05, 0.05},
                      {50, 150, -1.58180e+39, 1.341e-01, 0.10}};
  for (const auto& r : rows) {
    StirlingTable table(r.n - 1);
    auto exact = touchard_scaled(r.n - 1, CplxD(-r.x, 0.0), table);
    ExpansionParams params(r.n, r.x, kPi);
    auto asym = assemble(params, 2);
    double err = relative_diff(asym, exact.value);
    double val = exact.value.real_part();
    std::string tag = "n=" + std::to_string(r.n) + ",x=" + fmt(r.x);
    c.expect(std::abs(val - r.value) <= 5.5e-6 * std::abs(r.value),
             tag + " value want " + fmt(r.value) + " got " + fmt(val));
    c.expect(std::abs(err - r.error) <= r.tol * r.error,
             tag + " error want " + fmt(r.error) + " got " + fmt(err));
  }
  detail = c.detail.str();
  return c.ok;
}

// --- 7: complex phase sweep --------------------------------------------------
bool criterion7(std::string& detail) {
  Check c;
  struct Row { double top, re, im, ratio; };
  const Row rows[] = {{0.25, +1.42492e-04, -9.15008e-05, 1.157e-29},
                      {0.50, -2.13810e-07, -1.12648e-06, 9.472e-22},
                      {0.80, +7.58481e-12, -3.34873e-11, 1.399e-09},
                      {0.90, -1.49070e-13, -3.53028e-13, 3.395e-05},
                      {0.95, +2.67407e-14, +2.13515e-14, 5.773e-03},
                      {0.98, -4.92974e-15, +6.94352e-15, 1.271e-01},
                      {1.00, -5.42628e-15, 0.0, 1.000}};
  for (const auto& r : rows) {
    ExpansionParams params(50, 5.0, r.top * kPi);
    PhaseParams phase(params);
    auto j0 = jk_series(solve_saddle(phase, 0), params, 2);
    auto j1 = jk_series(solve_saddle(phase, 1), params, 2);
    auto v = j0.value + j1.value;
    double ratio = std::exp(j1.value.log_mag - j0.value.log_mag);
    std::string tag = "theta/pi=" + fmt(r.top);
    double mag = std::exp(v.log_mag);
    c.expect(std::abs(v.real_part() - r.re) <= 5e-5 * mag,
             tag + " re want " + fmt(r.re) + " got " + fmt(v.real_part()));
    c.expect(std::abs(v.imag_part() - r.im) <= 5e-5 * mag,
             tag + " im want " + fmt(r.im) + " got " + fmt(v.imag_part()));
    c.expect(std::abs(ratio - r.ratio) <= 5e-3 * r.ratio,
             tag + " ratio want " + fmt(r.ratio) + " got " + fmt(ratio));
  }
  detail = c.detail.str();
  return c.ok;
}

// --- 8: optimal truncation ----------------------------------------------------
bool criterion8(std::string& detail) {
  Check c;
  ExpansionParamsT<HighReal> params(16, HighReal(4), HighReal(0));
  PhaseParamsT<HighReal> phase(params);
  auto s0 = solve_saddle(phase, 0);
  auto opt = optimal_truncation(s0, params, 30);
  c.expect(opt.s_opt == 26, "s_opt want 26 got " + std::to_string(opt.s_opt));

  StirlingTable table(15);
  auto exact = touchard_scaled_hp(15, CplxH(HighReal(4), HighReal(0)), table);
  double diff = to_double((exact - opt.value).real_part());
  c.expect(std::abs(diff - (-1.344850e-13)) <= 0.5e-18,
           "exact-J0opt want -1.344850e-13 got " + fmt(diff));

  auto j1 = jk_series(solve_saddle(phase, 1), params, 2);
  double pair = 2.0 * to_double(j1.value.real_part());
  c.expect(std::abs(pair - (-1.344958e-13)) <= 0.5e-18,
           "2ReJ1 want -1.344958e-13 got " + fmt(pair));

  c.expect(std::abs(diff - pair) <= 1e-4 * std::abs(pair),
           "mutual agreement " + fmt(std::abs(diff - pair) / std::abs(pair)) + " rel, want <= 1e-4");
  detail = c.detail.str();
  return c.ok;
}

// --- 9: property suites ---------------------------------------------------------
bool criterion9(std::string& detail) {
  Check c;
  std::mt19937 rng(20240817);

  {  // conjugate symmetry, n <= 40, exact arithmetic
    StirlingTable t(41);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    bool all = true;
    for (int n = 0; n <= 40; ++n) {
      ExactComplexRational z(BigRat(num(rng), den(rng)), BigRat(num(rng), den(rng)));
      all &= touchard_exact(n, conj(z), t) == conj(touchard_exact(n, z, t));
    }
    c.expect(all, "conjugate symmetry");
  }

  {  // binomial recurrence oracle, n <= 30, 5 rational points
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<ExactComplexRational> pts;
    for (int i = 0; i < 5; ++i)
      pts.emplace_back(BigRat(num(rng), den(rng)), BigRat(num(rng), den(rng)));
    bool all = true;
    for (int n = 0; n <= 30 && all; ++n)
      for (const auto& z : pts) all &= touchard_recurrence_check(n, z);
    c.expect(all, "recurrence oracle");
  }

  {  // coefficient dual-path equality at 10 saddles
    std::vector<SaddlePoint> saddles;
    PhaseParams p2(2.0, 0.0);
    for (int k : {1, 2, 3, 5, 10, 15}) saddles.push_back(solve_saddle(p2, k));
    for (double mu : {0.5, 2.0, 4.0, 12.0})
      saddles.push_back(solve_saddle(PhaseParams(mu, 0.0), 0));
    for (const auto& s : saddles) {
      auto le = local_expansion(s, 4);
      auto [c2, c4] = c2_c4_closed_form(s);
      c.expect(abs(wojdylo_c2s(le, 1) - c2) <= 1e-11 * abs(c2), "c2 equality k=" + std::to_string(s.k));
      c.expect(abs(wojdylo_c2s(le, 2) - c4) <= 1e-11 * abs(c4), "c4 equality k=" + std::to_string(s.k));
    }
  }

  {  // saddle residuals
    std::uniform_real_distribution<double> mu_d(0.2, 25.0), th_d(0.0, kPi);
    std::uniform_int_distribution<int> k_d(-6, 6);
    bool all = true;
    for (int i = 0; i < 60; ++i) {
      double mu = mu_d(rng), th = th_d(rng);
      int k = k_d(rng);
      if (k == 0 && th == 0.0) continue;
      PhaseParams p(mu, th);
      auto s = solve_saddle(p, k);
      all &= saddle_residual(s, p) <= 1e-12 * std::max(1.0, mu);
    }
    c.expect(all, "saddle residuals");
  }

  {  // contributory-count parity, 50 samples
    std::uniform_real_distribution<double> mu_d(0.05, 27.0);
    const double inv_e = std::exp(-1.0);
    int checked = 0;
    bool all = true;
    while (checked < 50) {
      double mu = mu_d(rng);
      bool near_b = false;
      for (int k = 1; k <= 8; ++k) near_b |= std::abs(mu - mu_boundary(k)) < 1e-2;
      if (near_b) continue;
      all &= contributory_saddles(ExpansionParams(40, 40.0 / mu, 0.0)).indices.size() % 2 == 1;
      if (mu > inv_e + 0.05)
        all &= contributory_saddles(ExpansionParams(40, 40.0 / mu, kPi)).indices.size() % 2 == 0;
      ++checked;
    }
    c.expect(all, "count parity");
  }

  {  // finite-n large-z expansion against the exact oracle
    StirlingTable t(5);
    auto exact = touchard_exact(5, ExactComplexRational(BigRat(100)), t);
    double want = to_real(exact.re, double());
    double got = large_z_expansion(5, CplxD(100.0, 0.0), 4).re;
    c.expect(std::abs(got - want) / std::abs(want) < 1e-7, "large-z expansion");
  }

  {  // assembled values real on both axes
    bool all = true;
    for (double theta : {0.0, kPi}) {
      for (int n : {20, 40}) {
        ExpansionParams params(n, 8.0, theta);
        auto v = assemble(params, 2);
        all &= std::abs(std::sin(v.phase)) <= 1e-12;
      }
    }
    c.expect(all, "axis values real");
  }

  detail = c.detail.str();
  return c.ok;
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
  }

  const std::vector<Criterion> criteria = {
      {1, "saddle locations (table 1, 1e-5)", criterion1},
      {2, "interval boundaries (table 2, 1e-4)", criterion2},
      {3, "Stokes angles (table 4, 1e-4)", criterion3},
      {4, "coefficients (table 8, 5e-11 rel)", criterion4},
      {5, "positive-axis expansion (table 5, 5% on errors)", criterion5},
      {6, "negative-axis expansion (table 6, 5%/10% on errors)", criterion6},
      {7, "complex phase sweep (table 7, 5 digits / 0.5%)", criterion7},
      {8, "optimal truncation (s_opt, remainders, 6 digits)", criterion8},
      {9, "property suites", criterion9},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    if (only != 0 && cr.id != only) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = cr.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", cr.id, cr.name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
