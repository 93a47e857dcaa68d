// Acceptance run: one PASS/FAIL line per criterion, detail lines indented.
// Usage: acceptance [c1 ... c10]   (no arguments runs everything)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hoch/exact_comb.hpp"
#include "hoch/experiments.hpp"
#include "hoch/functionals.hpp"
#include "hoch/particles.hpp"
#include "hoch/solver.hpp"
#include "hoch/weak.hpp"

using namespace hoch;

namespace {

// tolerances
constexpr double kC3Rel = 1e-4;
constexpr double kC3Seconds = 10.0;
constexpr double kC4G = 1e-6;
constexpr double kC4HG = 1e-4;
constexpr double kC4HBound = -1e-12;
constexpr double kC4Ineq = 1e-3;
constexpr double kC4Orbit = 1e-5;
constexpr double kC4Seconds = 30.0;
constexpr double kC5Drift = 1e-4;
constexpr double kC5Order = 2.0;
constexpr double kC5OrderSlack = 0.05;
constexpr double kC5Roundoff = 1e-12;
constexpr double kC6Tol = 0.02;
constexpr double kC7U = -1e-8;
constexpr double kC7Cone = -1e-6;
constexpr double kC7M = -1e-6;
constexpr double kC8Rel = 1e-6;
constexpr double kC8Order = 2.0;
constexpr double kC8Seconds = 60.0;
constexpr double kC9ExpLo = 0.2, kC9ExpHi = 0.6, kC9Spread = 3.0;
constexpr double kC10Tol = 1e-12;
constexpr double kExactSeconds = 5.0;
constexpr double kC10Seconds = 1.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void detail(const char* fmt, auto... args) {
  std::printf("    ");
  std::printf(fmt, args...);
  std::printf("\n");
  std::fflush(stdout);
}

bool verdict(int id, bool pass, const std::string& what, double seconds) {
  std::printf("C%d %s %s (%.1f s)\n", id, pass ? "PASS" : "FAIL", what.c_str(), seconds);
  std::fflush(stdout);
  return pass;
}

bool c1() {
  const auto t0 = Clock::now();
  long checks = 0, bad = 0;
  for (int n = 1; n <= 8; ++n)
    for (const IdentityCheck& c : verify_all(n)) {
      ++checks;
      if (!c.pass || (!c.inequality && !c.residual.is_zero())) {
        ++bad;
        detail("n=%d %s residual %s", n, c.identity.c_str(), c.residual.str().c_str());
      }
    }
  const double s = since(t0);
  return verdict(1, bad == 0 && s < kExactSeconds,
                 "exact identities n=1..8: " + std::to_string(checks) + " checks, " + std::to_string(bad) +
                     " failures",
                 s);
}

bool c2() {
  const auto t0 = Clock::now();
  long points = 0, positive = 0;
  const std::vector<Rational> grid = rational_grid(201);
  for (int n = 1; n <= 8; ++n) {
    const CoeffTable t = build_coeff_table(n);
    Rational worst = phi_poly(t, grid.front());
    for (const Rational& z : grid) {
      const Rational v = phi_poly(t, z);
      worst = std::max(worst, v);
      ++points;
      if (v > Rational(0)) ++positive;
    }
    detail("n=%d max phi on the grid = %s", n, worst.str().c_str());
  }
  const double s = since(t0);
  return verdict(2, positive == 0 && s < kExactSeconds,
                 "phi <= 0 at " + std::to_string(points) + " exact grid points, " + std::to_string(positive) +
                     " violations",
                 s);
}

bool c3() {
  const auto t0 = Clock::now();
  const Grid g = make_grid(40.0, 8192);
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (double a : {1.0, 2.0}) {
      const PeakonParams p = make_peakon(n, a, 0.3 * g.h() + 0.01);
      const Profile pr = peakon_profile(g, p);
      const double e1 = std::abs(H1(pr) / peakon_H1(p) - 1), e2 = std::abs(H2(pr, n) / peakon_H2(p) - 1);
      detail("n=%d a=%g  H1 rel err %.2e  H2 rel err %.2e", n, a, e1, e2);
      worst = std::max({worst, e1, e2});
    }
  const double s = since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "sampled peakon functionals: worst relative error %.2e (tol %.0e)", worst, kC3Rel);
  return verdict(3, worst <= kC3Rel && s < kC3Seconds, buf, s);
}

bool c4() {
  const auto t0 = Clock::now();
  const Grid g = make_grid(40.0, 4096);
  const double amp = 1.3, shift = 0.37;
  const Profile pr = sample_profile(
      g, [&](double x) { return amp / std::cosh(x - shift); },
      [&](double x) { return -amp * std::tanh(x - shift) / std::cosh(x - shift); });
  bool ok = cone_ok(pr);
  const Crest c = locate_crest(pr);
  for (int n = 1; n <= 4; ++n) {
    const NumericCoeffs& nc = numeric_coeffs(n);
    const double grhs = H1(pr) - 2 * c.M * c.M;
    const double gerr = std::abs(g_sq_integral(pr, c.x) - grhs) / std::abs(grhs);
    const double hrhs = H2(pr, n) - 2 * nc.two_minus_c1 / (2 * n + 1) * std::pow(c.M, 2 * n + 1);
    const double herr = std::abs(hg_sq_integral(pr, c.x, n) - hrhs) / std::abs(hrhs);
    const HBoundResult hb = h_bound_margin(pr, c.x, n);
    const InequalityResult iq = stability_inequality_residual(pr, n);
    detail("n=%d  g identity %.2e  hg identity %.2e  h-bound margin %.3e  inequality %.3e (scale %.3e)", n, gerr, herr,
           hb.min_margin, iq.residual, iq.scale);
    ok = ok && gerr <= kC4G && herr <= kC4HG && hb.min_margin >= kC4HBound && iq.residual <= kC4Ineq * iq.scale;
  }
  const OrbitDistance od = orbit_distance(pr, 1.0);
  detail("orbit distance (sech): direct %.10f identity %.10f gap %.2e", od.d, od.d_identity, od.rel_gap);
  ok = ok && od.rel_gap <= kC4Orbit;
  const Grid g2 = make_grid(40.0, 8192);
  const PeakonParams p = make_peakon(2, 1.0, 0.123);
  const Profile pk = sample_profile(
      g2, [&](double x) { return eval_peakon(p, 0, x) + 0.01 * std::exp(-(x - 3) * (x - 3)); },
      [&](double x) { return eval_peakon_dx(p, 0, x) - 0.02 * (x - 3) * std::exp(-(x - 3) * (x - 3)); });
  const OrbitDistance ok2 = orbit_distance(pk, 1.0);
  detail("orbit distance (peakon + bump): direct %.10f identity %.10f gap %.2e", ok2.d, ok2.d_identity, ok2.rel_gap);
  ok = ok && ok2.rel_gap <= kC4Orbit;
  const double s = since(t0);
  return verdict(4, ok && s < kC4Seconds, "functional identities on the smooth cone suite n=1..4", s);
}

SolverConfig base_config(int n, Scheme scheme) {
  SolverConfig c;
  c.n = n;
  c.grid = make_grid(40.0, 2048);
  c.dt = 1e-3;
  c.t_end = 5.0;
  c.scheme = scheme;
  c.particles = 2000;
  c.record_every = 50;
  return c;
}

bool c5() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    ConserveSpec s;
    s.cfg = base_config(n, Scheme::lagrangian);
    s.delta = 0.2;
    s.levels = 3;
    s.drift_tol = kC5Drift;
    s.min_order = kC5Order;
    s.order_slack = kC5OrderSlack;
    s.roundoff = kC5Roundoff;
    const ConserveResult r = run_conserve(s);
    for (size_t l = 0; l < r.levels.size(); ++l) {
      const ConserveLevel& lv = r.levels[l];
      detail("n=%d particles P=%d dt=%.2e: %s at t=%.3f, drift H1 %.2e H2 %.2e", n, lv.particles, lv.dt,
             to_string(lv.status).c_str(), lv.t_final, lv.drift_H1, lv.drift_H2);
    }
    detail("n=%d order H1 %s H2 %s -> %s", n, std::isinf(r.order_H1) ? "round-off" : std::to_string(r.order_H1).c_str(),
           std::isinf(r.order_H2) ? "round-off" : std::to_string(r.order_H2).c_str(), r.report.ok ? "ok" : "violated");
    for (const std::string& v : r.report.violations) detail("  %s", v.c_str());
    ok = ok && r.report.ok;
  }
  // the pseudospectral scheme on the nominal grid, for reference
  for (int n = 1; n <= 3; ++n) {
    SolverConfig c = base_config(n, Scheme::spectral);
    c.underresolved_tol = 0.0;
    const TrajectoryRecord rec = run(mollified_peakon_data(make_peakon(n, 1.0), 0.2), c);
    const auto drift = [](const std::vector<double>& v) {
      double w = 0.0;
      for (double x : v) w = std::max(w, std::abs(x / v.front() - 1));
      return w;
    };
    detail("info: spectral N=2048 n=%d: %s, drift H1 %.2e H2 %.2e", n, to_string(rec.status).c_str(),
           drift(rec.H1_series), drift(rec.H2_series));
  }
  return verdict(5, ok, "conservation of H1 and H2, n=1..3, three-level refinement", since(t0));
}

bool c6() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (auto [n, a] : {std::pair{1, 1.0}, std::pair{2, 1.0}}) {
    SpeedSpec s;
    s.cfg = base_config(n, Scheme::lagrangian);
    s.a = a;
    s.delta = 0.01;
    s.tol = kC6Tol;
    const SpeedResult r = run_speed(s);
    detail("(n,a)=(%d,%g): status %s, measured %.5f, exact %.5f, rel err %.2e", n, a, to_string(r.status).c_str(),
           r.measured, r.expected, r.rel_error);
    for (const std::string& v : r.report.violations) detail("  %s", v.c_str());
    ok = ok && r.report.ok;
  }
  return verdict(6, ok, "crest speed within 2% of the exact wave speed", since(t0));
}

bool c7() {
  const auto t0 = Clock::now();
  std::vector<double> seeds;
  for (int i = 0; i < 16; ++i) seeds.push_back(-2.0 + 4.0 * i / 15);
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    SolverConfig c = base_config(n, Scheme::lagrangian);
    c.seeds = seeds;
    const TrajectoryRecord rec = run(mollified_peakon_data(make_peakon(n, 1.0), 0.2), c);
    const double mu = *std::min_element(rec.min_u_series.begin(), rec.min_u_series.end());
    const double mc = *std::min_element(rec.min_cone_series.begin(), rec.min_cone_series.end());
    const double mm = rec.characteristics.min_m_ratio;
    const bool pass = mu >= kC7U && mc >= kC7Cone && mm >= kC7M && rec.characteristics.m_along.size() >= 2;
    const bool complete = rec.status == RunStatus::completed;
    detail("n=%d: %s at t=%.3f, min u %.3e, min(u -/+ u_x) %.3e, min m/max|m| on 16 paths %.3e, ordered %s", n,
           to_string(rec.status).c_str(), rec.times.back(), mu, mc, mm, rec.characteristics.ordered ? "yes" : "no");
    if (!complete) detail("n=%d: the run stops at the loss of smoothness; signs are checked up to that time", n);
    ok = ok && pass && (n > 1 || complete);
  }
  return verdict(7, ok, "sign and cone preservation with m0 >= 0 (completed run n=1, n=2,3 up to collapse)", since(t0));
}

bool c8() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (int n = 1; n <= 2; ++n) {
    WeakcheckSpec s;
    s.n = n;
    s.levels = 4;
    s.tol = kC8Rel;
    s.min_order = kC8Order;
    const WeakcheckResult r = run_weakcheck(s);
    double worst = 0.0, min_order = INFINITY;
    for (const WeakcheckRow& row : r.rows)
      if (row.level == 4 && row.scale > 0) worst = std::max(worst, std::abs(row.residual) / row.scale);
    for (double o : r.orders) min_order = std::min(min_order, o);
    detail("n=%d: worst level-4 |residual|/scale %.2e, min observed order %s", n, worst,
           std::isinf(min_order) ? "inf (round-off)" : std::to_string(min_order).c_str());
    detail("n=%d: wrong speed +10%% residual %.4e (richardson %.1e), -10%% residual %.4e (richardson %.1e)", n,
           r.wrong_fast, r.wrong_fast_rich, r.wrong_slow, r.wrong_slow_rich);
    for (const std::string& v : r.report.violations) detail("  %s", v.c_str());
    ok = ok && r.report.ok;
  }
  const double s = since(t0);
  return verdict(8, ok && s < kC8Seconds, "weak residual of the peakon, 9 bumps, n=1,2", s);
}

bool c9() {
  const auto t0 = Clock::now();
  auto sweep = [](int n) {
    StabilitySpec s;
    s.cfg = base_config(n, Scheme::lagrangian);
    s.cfg.t_end = 10.0;
    s.a = 1.0;
    s.delta = 1e-4;
    s.eps = {0.01, 0.04, 0.09};
    s.gamma = 4.0;
    s.exponent_lo = kC9ExpLo;
    s.exponent_hi = kC9ExpHi;
    s.ratio_spread = kC9Spread;
    return run_stability(s);
  };
  const StabilityResult r = sweep(2);
  detail("n=2: floor (eps=0) %.3e", r.floor);
  for (size_t i = 0; i < r.epsilons.size(); ++i)
    detail("n=2 eps=%.2f: %s, sup d %.4e, d0 %.4e, sup d/eps^(1/4) %.4f  %s", r.epsilons[i],
           to_string(r.statuses[i]).c_str(), r.sup_distances[i], r.initial_distances[i], r.quarter_ratios[i],
           r.messages[i].c_str());
  detail("n=2 fitted exponent %.3f", r.exponent);
  for (const std::string& v : r.report.violations) detail("  %s", v.c_str());
  const StabilityResult r1 = sweep(1);
  for (size_t i = 0; i < r1.epsilons.size(); ++i)
    detail("info: n=1 eps=%.2f: %s, sup d %.4e, sup d/eps^(1/4) %.4f, max crest offset %.3e", r1.epsilons[i],
           to_string(r1.statuses[i]).c_str(), r1.sup_distances[i], r1.quarter_ratios[i], r1.crest_offsets[i]);
  detail("info: n=1 floor %.3e, fitted exponent %.3f", r1.floor, r1.exponent);
  return verdict(9, r.report.ok, "stability scaling n=2, eps in {0.01, 0.04, 0.09}, t_end=10", since(t0));
}

// CH reference right-hand side with a naive DFT, independent of the FFT path
std::vector<double> ch_reference(const std::vector<double>& u, double L) {
  const int N = static_cast<int>(u.size());
  auto dft = [&](const std::vector<double>& f) {
    std::vector<std::complex<double>> F(N);
    for (int k = 0; k < N; ++k)
      for (int j = 0; j < N; ++j) F[k] += f[j] * std::polar(1.0, -2 * std::numbers::pi * k * j / N);
    return F;
  };
  auto idft = [&](const std::vector<std::complex<double>>& F) {
    std::vector<double> f(N);
    for (int j = 0; j < N; ++j) {
      std::complex<double> s = 0;
      for (int k = 0; k < N; ++k) s += F[k] * std::polar(1.0, 2 * std::numbers::pi * k * j / N);
      f[j] = s.real() / N;
    }
    return f;
  };
  auto wave = [&](int k) { return 2 * std::numbers::pi / L * (k <= N / 2 ? k : k - N); };
  auto U = dft(u);
  for (int k = 0; k < N; ++k) U[k] *= (k == N / 2) ? 0.0 : std::complex<double>(0, wave(k));
  const std::vector<double> ux = idft(U);
  std::vector<double> A(N);
  for (int j = 0; j < N; ++j) A[j] = u[j] * u[j] + 0.5 * ux[j] * ux[j];
  auto AF = dft(A);
  for (int k = 0; k < N; ++k) {
    const double kk = wave(k);
    AF[k] *= (k == N / 2) ? 0.0 : std::complex<double>(0, kk) / (1 + kk * kk);
  }
  const std::vector<double> pa = idft(AF);
  std::vector<double> out(N);
  for (int j = 0; j < N; ++j) out[j] = -(u[j] * ux[j] + pa[j]);
  return out;
}

bool c10() {
  const auto t0 = Clock::now();
  const RhsCoefficients r = rhs_coefficients(1);
  const bool coeff = r.local == std::vector<Rational>{Rational(1)} &&
                     r.A == std::vector<Rational>{Rational(1), Rational(1, 2)} &&
                     r.B == std::vector<Rational>{Rational(0)};
  detail("n=1 coefficients: local %s, A %s %s, B %s", r.local[0].str().c_str(), r.A[0].str().c_str(),
         r.A[1].str().c_str(), r.B[0].str().c_str());
  const Grid g = make_grid(40.0, 128);
  SolverConfig c;
  c.n = 1;
  c.grid = g;
  c.filter_strength = 0.0;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> amp(8), ph(8);
    for (int m = 0; m < 8; ++m) {
      amp[m] = U(rng) / (m + 1);
      ph[m] = std::numbers::pi * U(rng);
    }
    const GridFunction u = sample(g, [&](double x) {
      double s = 0.4;
      for (int m = 0; m < 8; ++m) s += amp[m] * std::cos(2 * std::numbers::pi * (m + 1) * x / g.L + ph[m]);
      return s;
    });
    const GridFunction ours = rhs(u, c);
    const std::vector<double> ref = ch_reference(u.v, g.L);
    for (int j = 0; j < g.N; ++j) worst = std::max(worst, std::abs(ours.v[j] - ref[j]));
  }
  detail("max |rhs - CH reference| over 5 random states: %.2e", worst);
  const double s = since(t0);
  return verdict(10, coeff && worst <= kC10Tol && s < kC10Seconds, "n=1 reduces to the Camassa-Holm equation", s);
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, std::function<bool()>> all{{"c1", c1}, {"c2", c2}, {"c3", c3}, {"c4", c4},
                                                           {"c5", c5}, {"c6", c6}, {"c7", c7}, {"c8", c8},
                                                           {"c9", c9}, {"c10", c10}};
  std::vector<std::string> chosen;
  for (int i = 1; i < argc; ++i) chosen.push_back(argv[i]);
  if (chosen.empty())
    for (int i = 1; i <= 10; ++i) chosen.push_back("c" + std::to_string(i));
  bool ok = true;
  for (const std::string& id : chosen) {
    auto it = all.find(id);
    if (it == all.end()) {
      std::fprintf(stderr, "unknown criterion %s\n", id.c_str());
      return 2;
    }
    try {
      ok = it->second() && ok;
    } catch (const std::exception& e) {
      std::printf("%s FAIL exception: %s\n", id.c_str(), e.what());
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
