#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hoch/functionals.hpp"
#include "hoch/solver.hpp"

using namespace hoch;

namespace {

constexpr double kPi = std::numbers::pi;

GridFunction random_state(const Grid& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double amp[6], ph[6];
  for (int m = 0; m < 6; ++m) {
    amp[m] = U(rng) / (m + 1);
    ph[m] = kPi * U(rng);
  }
  return sample(g, [&](double x) {
    double s = 0.5;
    for (int m = 0; m < 6; ++m) s += amp[m] * std::cos(2 * kPi * (m + 1) * x / g.L + ph[m]);
    return s;
  });
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double e = 0.0;
  for (size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

// -[local + P d_x A + P B] with the polynomials written out by hand
GridFunction reference_rhs(const GridFunction& u, int n) {
  const GridFunction ux = derivative(u, DerivScheme::spectral);
  const int N = u.grid.N;
  GridFunction loc{u.grid, std::vector<double>(N)}, A = loc, B = loc;
  for (int i = 0; i < N; ++i) {
    const double a = u.v[i], z = ux.v[i];
    if (n == 1) {
      loc.v[i] = a * z;
      A.v[i] = a * a + 0.5 * z * z;
      B.v[i] = 0.0;
    } else {
      loc.v[i] = std::pow(a, 3) * z - a * std::pow(z, 3) / 3.0;
      A.v[i] = std::pow(a, 4) + 1.5 * a * a * z * z - std::pow(z, 4) / 12.0;
      B.v[i] = a * std::pow(z, 3) / 3.0;
    }
  }
  const GridFunction pa = helmholtz_inverse(derivative(A, DerivScheme::spectral));
  const GridFunction pb = helmholtz_inverse(B);
  GridFunction out{u.grid, std::vector<double>(N)};
  for (int i = 0; i < N; ++i) out.v[i] = -(loc.v[i] + pa.v[i] + pb.v[i]);
  return out;
}

SolverConfig quiet_config(int n, const Grid& g) {
  SolverConfig c;
  c.n = n;
  c.grid = g;
  c.filter_strength = 0.0;
  return c;
}

}  // namespace

TEST_SUITE("solver") {

TEST_CASE("scheme names") {
  CHECK(parse_solver_scheme("lagrangian") == Scheme::lagrangian);
  CHECK(to_string(Scheme::spectral) == "spectral");
  CHECK_THROWS(parse_solver_scheme("implicit"));
  CHECK(to_string(RunStatus::wave_breaking) == "wave_breaking");
}

TEST_CASE("Helmholtz inverse") {
  const Grid g = make_grid(40.0, 512);
  SUBCASE("eigenfunction") {
    const double k = 2 * kPi / g.L;
    const GridFunction r = helmholtz_inverse(sample(g, [&](double x) { return std::sin(k * x); }));
    for (int j = 0; j < g.N; ++j) CHECK(r.v[j] == doctest::Approx(std::sin(k * g.x(j)) / (1 + k * k)).scale(1.0).epsilon(1e-14));
  }
  SUBCASE("round trip") {
    const GridFunction u = random_state(g, 7);
    const GridFunction uxx = second_derivative(u, DerivScheme::spectral);
    GridFunction m{g, u.v};
    for (int j = 0; j < g.N; ++j) m.v[j] -= uxx.v[j];
    CHECK(max_diff(helmholtz_inverse(m).v, u.v) < 1e-12);
  }
  SUBCASE("narrow Gaussian against direct quadrature of the kernel") {
    const double s = 0.1;
    auto f = [&](double y) { return std::exp(-y * y / (2 * s * s)); };
    const GridFunction r = helmholtz_inverse(sample(make_grid(40.0, 4096), f));
    for (double x0 : {-3.0, -0.5, 0.0, 0.75, 4.0}) {
      const long j = std::lround((x0 + 20.0) / r.grid.h());
      const double x = r.grid.x(j);
      double q = 0.0;
      const int M = 20000;
      const double lo = -1.5, hh = 3.0 / M;
      for (int i = 0; i <= M; ++i) {
        const double y = lo + i * hh;
        q += (i == 0 || i == M ? 0.5 : 1.0) * hh * 0.5 * std::exp(-std::abs(x - y)) * f(y);
      }
      CHECK(r.v[j] == doctest::Approx(q).epsilon(1e-8));
    }
  }
}

TEST_CASE("rhs of the zero state vanishes") {
  const Grid g = make_grid(40.0, 128);
  const GridFunction z = rhs(GridFunction{g, std::vector<double>(g.N, 0.0)}, quiet_config(2, g));
  for (double v : z.v) CHECK(v == 0.0);
}

TEST_CASE("rhs matches hand-written references for n = 1 and n = 2") {
  const Grid g = make_grid(40.0, 256);
  for (int n : {1, 2})
    for (unsigned seed : {1u, 2u, 3u}) {
      const GridFunction u = random_state(g, seed);
      CHECK(max_diff(rhs(u, quiet_config(n, g)).v, reference_rhs(u, n).v) < 1e-12);
    }
}

TEST_CASE("RK4 time reversal") {
  const Grid g = make_grid(40.0, 256);
  const GridFunction u = random_state(g, 11);
  for (double dt : {1e-2, 5e-3}) {
    SolverConfig c = quiet_config(1, g);
    c.dt = dt;
    const GridFunction fwd = step_rk4(u, c);
    c.dt = -dt;
    const double err = max_diff(step_rk4(fwd, c).v, u.v);
    CHECK(err < 50 * std::pow(dt, 5));
  }
}

TEST_CASE("mollified peakon closed form") {
  const PeakonParams p = make_peakon(1, 1.3, 0.4);
  const MollifiedPeakon mp{p, 0.2};
  for (double x : {-2.0, 0.3, 0.4, 1.1, 5.0}) {
    double conv = 0.0;
    const int M = 40000;
    const double lo = -2.4, hh = 4.8 / M;
    for (int i = 0; i <= M; ++i) {
      const double s = lo + i * hh;
      const double gk = std::exp(-0.5 * s * s / 0.04) / (std::sqrt(2 * kPi) * 0.2);
      conv += (i == 0 || i == M ? 0.5 : 1.0) * hh * gk * eval_peakon(p, 0, x - s);
    }
    CHECK(mp.value(x) == doctest::Approx(conv).epsilon(1e-8));
    const double h = 1e-5;
    CHECK(mp.dx(x) == doctest::Approx((mp.value(x + h) - mp.value(x - h)) / (2 * h)).epsilon(1e-7));
  }
  // the momentum is 2a times a unit Gaussian
  double mass = 0.0;
  for (int i = -4000; i <= 4000; ++i) mass += 1e-3 * mp.momentum(0.4 + i * 1e-3);
  CHECK(mass == doctest::Approx(2 * 1.3).epsilon(1e-10));
  CHECK_THROWS(mollified_peakon_data(p, 0.0));
}

TEST_CASE("discrete momentum of the sampled mollified peakon is nonnegative") {
  const Grid g = make_grid(40.0, 4096);
  bool unresolved = true;
  const GridFunction u = mollified_peakon(make_peakon(2, 1.0), 0.2, g, &unresolved);
  CHECK_FALSE(unresolved);
  const GridFunction uxx = second_derivative(u, DerivScheme::spectral);
  double mmin = 1e300;
  for (int j = 0; j < g.N; ++j) mmin = std::min(mmin, u.v[j] - uxx.v[j]);
  CHECK(mmin >= -1e-8);
  mollified_peakon(make_peakon(2, 1.0), 0.01, g, &unresolved);
  CHECK(unresolved);
}

TEST_CASE("zero data stays zero and characteristics stay put") {
  SolverConfig c;
  c.grid = make_grid(40.0, 128);
  c.t_end = 0.1;
  c.record_every = 20;
  c.seeds = {-3.0, 0.0, 2.5};
  c.underresolved_tol = 0.0;
  const TrajectoryRecord rec = run(GridFunction{c.grid, std::vector<double>(c.grid.N, 0.0)}, c);
  CHECK(rec.status == RunStatus::completed);
  for (double v : rec.final_state.v) CHECK(v == 0.0);
  for (const auto& pos : rec.characteristics.paths)
    for (size_t q = 0; q < pos.size(); ++q) CHECK(pos[q] == c.seeds[q]);
  CHECK_THROWS(measure_speed(rec));
}

TEST_CASE("short spectral run of a mollified peakon") {
  SolverConfig c;
  c.n = 1;
  c.grid = make_grid(40.0, 1024);
  c.t_end = 1.0;
  c.record_every = 25;
  c.seeds = {-2.0, -1.0, 0.0, 1.0, 2.0};
  const TrajectoryRecord rec = run(mollified_peakon_data(make_peakon(1, 1.0), 0.2), c);
  CHECK(rec.status == RunStatus::completed);
  CHECK(rec.cfl_ok);
  CHECK(std::abs(rec.H1_series.back() / rec.H1_series.front() - 1) < 1e-4);
  for (double v : rec.min_u_series) CHECK(v >= -1e-8);
  CHECK(rec.characteristics.ordered);
  // far from the bulk m is below the spectral noise of the second derivative
  CHECK(rec.characteristics.min_m_ratio >= -1e-4);
  const double s = measure_speed(rec);
  CHECK(s > 0.85);
  CHECK(s < 1.0);
}

TEST_CASE("wave breaking is detected") {
  SolverConfig c;
  c.n = 1;
  c.grid = make_grid(40.0, 1024);
  c.t_end = 3.0;
  c.record_every = 5;
  // u_x(0) = -4 steepens to -10 near t = 0.24, still resolved at N = 1024
  c.breaking_threshold = 10.0;
  c.underresolved_tol = 0.0;
  const TrajectoryRecord rec = run(sample(c.grid, [](double x) { return -4.0 * x * std::exp(-x * x); }), c);
  CHECK(rec.status == RunStatus::wave_breaking);
  CHECK(rec.times.back() > 0.2);
  CHECK(rec.times.back() < 0.3);
}

TEST_CASE("crest speed fit unwraps the periodic seam") {
  TrajectoryRecord rec;
  rec.final_state.grid = make_grid(10.0, 64);
  for (int i = 0; i <= 20; ++i) {
    const double t = 0.5 * i;
    double x = -4.0 + 0.9 * t;
    x -= 10.0 * std::floor((x + 5.0) / 10.0);
    rec.times.push_back(t);
    rec.crest_positions.push_back(x);
    rec.M_series.push_back(1.0);
  }
  CHECK(measure_speed(rec) == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(measure_speed(rec, 5.0) == doctest::Approx(0.9).epsilon(1e-12));
  rec.times.resize(2);
  rec.crest_positions.resize(2);
  CHECK_THROWS(measure_speed(rec));
}

}  // TEST_SUITE
