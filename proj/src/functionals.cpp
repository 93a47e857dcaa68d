#include "hoch/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hoch {

const NumericCoeffs& numeric_coeffs(int n) {
  static std::map<int, std::unique_ptr<NumericCoeffs>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  const CoeffTable t = build_coeff_table(n);
  const RhsCoefficients r = rhs_coefficients(n);
  auto nc = std::make_unique<NumericCoeffs>();
  nc->n = n;
  auto conv = [](const std::vector<Rational>& v) {
    std::vector<double> out;
    for (const auto& q : v) out.push_back(q.to_double());
    return out;
  };
  nc->local = conv(r.local);
  nc->A = conv(r.A);
  nc->B = conv(r.B);
  nc->h2 = conv(r.h2);
  nc->c.assign(2 * n - 1, 0.0);
  nc->d.assign(2 * n - 1, 0.0);
  nc->c[0] = nc->d[0] = 1.0;
  for (int k = 1; k <= 2 * n - 2; ++k) {
    nc->c[k] = t.c_at(k).to_double();
    nc->d[k] = t.d_at(k).to_double();
  }
  nc->c1 = t.c1.to_double();
  nc->two_minus_c1 = t.two_minus_c1.to_double();
  return *cache.emplace(n, std::move(nc)).first->second;
}

Profile make_profile(const GridFunction& u, DerivScheme scheme) {
  return Profile{u.grid, u.v, derivative(u, scheme).v};
}

Profile sample_profile(const Grid& g, const std::function<double(double)>& f,
                       const std::function<double(double)>& fx) {
  return Profile{g, sample(g, f).v, sample(g, fx).v};
}

Profile peakon_profile(const Grid& g, const PeakonParams& p, double t) {
  return sample_profile(
      g, [&](double x) { return eval_peakon(p, t, x); },
      [&](double x) { return eval_peakon_dx(p, t, x); });
}

double H1_density(double u, double ux) { return u * u + ux * ux; }

double H2_density(const NumericCoeffs& nc, double u, double ux) {
  const int n = nc.n;
  const double u2 = u * u, z2 = ux * ux;
  // sum_k h2[k] u^{2n-2k+1} ux^{2k}, Horner in z2 / u2
  double acc = 0.0;
  for (int k = n; k >= 0; --k) acc = acc * z2 + nc.h2[k] * std::pow(u2, n - k);
  return acc * u;
}

namespace {

double grid_sum(const Grid& g, long count, const std::function<double(long)>& f) {
  NeumaierSum s;
  for (long j = 0; j < count; ++j) s.add(f(j));
  return g.h() * s.value();
}

double split(const Profile& p, double xi, const std::function<double(double, double)>& left,
             const std::function<double(double, double)>& right) {
  const Grid& g = p.grid;
  auto fl = [&](long j) { long w = g.wrap(j); return left(p.u[w], p.ux[w]); };
  auto fr = [&](long j) { long w = g.wrap(j); return right(p.u[w], p.ux[w]); };
  return segment_integral(g, fl, xi - 0.5 * g.L, xi) + segment_integral(g, fr, xi, xi + 0.5 * g.L);
}

double hval(const std::vector<double>& coef, int n, double u, double ux) {
  // sum_k coef[k] u^{2n-1-k} ux^k
  const int D = 2 * n - 1;
  double acc = 0.0;
  for (int k = D - 1; k >= 0; --k) acc = acc * ux + coef[k] * std::pow(u, D - k);
  return acc;
}

}  // namespace

double H1(const Profile& p) {
  return grid_sum(p.grid, p.grid.N, [&](long j) { return H1_density(p.u[j], p.ux[j]); });
}

double H2(const Profile& p, int n) {
  const NumericCoeffs& nc = numeric_coeffs(n);
  return grid_sum(p.grid, p.grid.N, [&](long j) { return H2_density(nc, p.u[j], p.ux[j]); });
}

double H1(const GridFunction& u, DerivScheme scheme) { return H1(make_profile(u, scheme)); }

double H2(const GridFunction& u, int n, DerivScheme scheme) { return H2(make_profile(u, scheme), n); }

double H2_hat(const GridFunction& u, int n, DerivScheme scheme) {
  const GridFunction ux = derivative(u, scheme);
  const GridFunction uxx = second_derivative(u, scheme);
  return grid_sum(u.grid, u.grid.N, [&](long j) {
           const double w = u.v[j] * u.v[j] - ux.v[j] * ux.v[j];
           return std::pow(w, n) * (u.v[j] - uxx.v[j]);
         }) /
         (2.0 * n);
}

double H1_split(const Profile& p, double xi) {
  return split(p, xi, H1_density, H1_density);
}

double H2_split(const Profile& p, int n, double xi) {
  const NumericCoeffs& nc = numeric_coeffs(n);
  auto f = [&](double u, double ux) { return H2_density(nc, u, ux); };
  return split(p, xi, f, f);
}

namespace {

double lagrange(const Grid& g, const std::vector<double>& u, long start, int dir, int count, double x) {
  double acc = 0.0;
  for (int i = 0; i < count; ++i) {
    const double xi = g.x(start + dir * i);
    double li = 1.0;
    for (int m = 0; m < count; ++m) {
      if (m == i) continue;
      const double xm = g.x(start + dir * m);
      li *= (x - xm) / (xi - xm);
    }
    acc += li * u[g.wrap(start + dir * i)];
  }
  return acc;
}

bool kink_intersection(const Profile& p, long lstart, long rstart, double& x, double& M) {
  const Grid& g = p.grid;
  auto D = [&](double y) { return lagrange(g, p.u, lstart, -1, 5, y) - lagrange(g, p.u, rstart, +1, 5, y); };
  double a = g.x(lstart), b = g.x(rstart);
  double fa = D(a), fb = D(b);
  if (fa > 0 || fb < 0) return false;
  for (int it = 0; it < 200 && b - a > 1e-15 * (1 + std::abs(a)); ++it) {
    const double m = 0.5 * (a + b);
    const double fm = D(m);
    if (fm < 0) a = m; else b = m;
  }
  x = 0.5 * (a + b);
  M = 0.5 * (lagrange(g, p.u, lstart, -1, 5, x) + lagrange(g, p.u, rstart, +1, 5, x));
  return true;
}

}  // namespace

Crest locate_crest(const Profile& p, CrestMode mode) {
  const Grid& g = p.grid;
  const long N = g.N;
  const double h = g.h();
  long j = 0;
  for (long i = 1; i < N; ++i)
    if (p.u[i] > p.u[j]) j = i;
  Crest c;
  c.index = j;
  c.x = g.x(j);
  c.M = p.u[j];
  const double tol = 1e-12 * std::max(1.0, std::abs(c.M));
  for (long i = 0; i < N; ++i)
    if (i != j && p.u[i] >= c.M - tol) c.tie = true;

  const double f0 = p.u[g.wrap(j - 1)], f1 = p.u[j], f2 = p.u[g.wrap(j + 1)];
  const double second = f0 - 2 * f1 + f2;
  bool kinked = mode == CrestMode::kink;
  if (mode == CrestMode::automatic) kinked = std::abs(second) > 0.5 * h * std::abs(f1);
  c.kinked = kinked;

  if (kinked) {
    double xa, Ma, xb, Mb;
    const bool ha = kink_intersection(p, j - 1, j, xa, Ma);
    const bool hb = kink_intersection(p, j, j + 1, xb, Mb);
    if (ha && (!hb || Ma >= Mb)) {
      c.x = xa;
      c.M = Ma;
    } else if (hb) {
      c.x = xb;
      c.M = Mb;
    }
    return c;
  }

  double off = second != 0.0 ? 0.5 * (f0 - f2) / second : 0.0;
  off = std::clamp(off, -1.0, 1.0);
  double x = g.x(j) + off * h;
  GridFunction uf{g, p.u};
  TrigInterpolant ti(uf);
  for (int it = 0; it < 20; ++it) {
    const double d2 = ti.d2(x);
    if (!(d2 < 0)) break;
    const double step = ti.d1(x) / d2;
    x -= step;
    if (std::abs(step) < 1e-14 * (1 + std::abs(x))) break;
  }
  if (std::abs(x - g.x(j)) > h) x = g.x(j) + off * h;
  c.x = x;
  c.M = ti.value(x);
  return c;
}

std::vector<double> g_split(const Profile& p, double xi) {
  std::vector<double> g(p.grid.N);
  for (long j = 0; j < p.grid.N; ++j)
    g[j] = p.grid.x(j) < xi ? p.u[j] - p.ux[j] : p.u[j] + p.ux[j];
  return g;
}

std::vector<double> h_func(const Profile& p, double xi, int n) {
  const NumericCoeffs& nc = numeric_coeffs(n);
  std::vector<double> h(p.grid.N);
  for (long j = 0; j < p.grid.N; ++j) {
    if (!(p.u[j] > 0)) throw std::domain_error("h_func: u must be positive");
    h[j] = hval(p.grid.x(j) < xi ? nc.c : nc.d, n, p.u[j], p.ux[j]);
  }
  return h;
}

double g_sq_integral(const Profile& p, double xi) {
  return split(
      p, xi, [](double u, double ux) { return (u - ux) * (u - ux); },
      [](double u, double ux) { return (u + ux) * (u + ux); });
}

double hg_sq_integral(const Profile& p, double xi, int n) {
  const NumericCoeffs& nc = numeric_coeffs(n);
  return split(
      p, xi, [&](double u, double ux) { return hval(nc.c, n, u, ux) * (u - ux) * (u - ux); },
      [&](double u, double ux) { return hval(nc.d, n, u, ux) * (u + ux) * (u + ux); });
}

double cone_margin(const Profile& p) {
  double m = std::numeric_limits<double>::infinity();
  for (long j = 0; j < p.grid.N; ++j) m = std::min(m, p.u[j] - std::abs(p.ux[j]));
  return m;
}

bool cone_ok(const Profile& p, double tol) { return cone_margin(p) >= -tol; }

InequalityResult stability_inequality_residual(const Profile& p, int n, CrestMode mode) {
  const NumericCoeffs& nc = numeric_coeffs(n);
  const Crest c = locate_crest(p, mode);
  const double e = c.kinked ? H1_split(p, c.x) : H1(p);
  const double f = c.kinked ? H2_split(p, n, c.x) : H2(p, n);
  const double tmc = nc.two_minus_c1;
  const double t1 = (2.0 * n - 1) * tmc / (2.0 * n + 1) * std::pow(c.M, 2 * n + 1);
  const double t2 = -0.5 * tmc * std::pow(c.M, 2 * n - 1) * e;
  InequalityResult r;
  r.residual = t1 + t2 + f;
  r.scale = std::abs(t1) + std::abs(t2) + std::abs(f);
  r.guaranteed = cone_ok(p);
  return r;
}

HBoundResult h_bound_margin(const Profile& p, double xi, int n, double cone_tol) {
  const NumericCoeffs& nc = numeric_coeffs(n);
  const std::vector<double> h = h_func(p, xi, n);
  HBoundResult r;
  r.min_margin = std::numeric_limits<double>::infinity();
  for (long j = 0; j < p.grid.N; ++j) {
    if (p.u[j] - std::abs(p.ux[j]) < -cone_tol) continue;
    const double bound = 0.5 * nc.two_minus_c1 * std::pow(p.u[j], 2 * n - 1);
    r.min_margin = std::min(r.min_margin, bound - h[j]);
    ++r.points;
  }
  return r;
}

FunctionalReport functional_report(const GridFunction& u, int n, DerivScheme scheme) {
  const Profile p = make_profile(u, scheme);
  const Crest c = locate_crest(p);
  FunctionalReport r;
  r.H1 = H1(p);
  r.H2 = H2(p, n);
  r.H2_hat = H2_hat(u, n, scheme);
  r.M = c.M;
  r.argmax = c.x;
  r.tie = c.tie;
  r.g_sq_integral = g_sq_integral(p, c.x);
  bool positive = std::all_of(p.u.begin(), p.u.end(), [](double v) { return v > 0; });
  r.hg_sq_integral = positive ? hg_sq_integral(p, c.x, n) : std::numeric_limits<double>::quiet_NaN();
  r.ineq33_residual = stability_inequality_residual(p, n).residual;
  r.cone = cone_ok(p);
  return r;
}

double h1_distance_sq(const Profile& p, double a, double xi) {
  const Grid& g = p.grid;
  auto fl = [&](long j) {
    const long w = g.wrap(j);
    const double ph = a * std::exp(g.x(j) - xi);
    const double du = p.u[w] - ph, dx = p.ux[w] - ph;
    return du * du + dx * dx;
  };
  auto fr = [&](long j) {
    const long w = g.wrap(j);
    const double ph = a * std::exp(xi - g.x(j));
    const double du = p.u[w] - ph, dx = p.ux[w] + ph;
    return du * du + dx * dx;
  };
  return segment_integral(g, fl, xi - 0.5 * g.L, xi) + segment_integral(g, fr, xi, xi + 0.5 * g.L);
}

OrbitDistance orbit_distance(const Profile& p, double a, CrestMode mode) {
  const Grid& g = p.grid;
  const int N = g.N;
  const double h = g.h();

  std::vector<double> K(N), Kx(N);
  for (int m = 0; m < N; ++m) {
    const long s = m < N / 2 ? m : m - N;
    const double ph = a * std::exp(-std::abs(s * h));
    K[m] = ph;
    Kx[m] = s == 0 ? 0.0 : (s > 0 ? -ph : ph);
  }
  Spectrum U, Ux, Kh, Kxh;
  rfft(p.u, U);
  rfft(p.ux, Ux);
  rfft(K, Kh);
  rfft(Kx, Kxh);
  Spectrum prod(U.size());
  for (size_t k = 0; k < U.size(); ++k) prod[k] = U[k] * std::conj(Kh[k]) + Ux[k] * std::conj(Kxh[k]);
  std::vector<double> corr;
  irfft(prod, corr, N);
  long best = 0;
  for (long j = 1; j < N; ++j)
    if (corr[j] > corr[best]) best = j;

  double lo = g.x(best) - h, hi = g.x(best) + h;
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = h1_distance_sq(p, a, x1), f2 = h1_distance_sq(p, a, x2);
  while (hi - lo > 1e-11 * h) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = h1_distance_sq(p, a, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = h1_distance_sq(p, a, x2);
    }
  }
  OrbitDistance out;
  out.xi = 0.5 * (lo + hi);
  out.d = std::sqrt(std::max(0.0, h1_distance_sq(p, a, out.xi)));

  const Crest c = locate_crest(p, mode);
  const double e = c.kinked ? H1_split(p, c.x) : H1(p);
  out.xi_identity = c.x;
  out.d_identity = std::sqrt(std::max(0.0, e - 2 * a * a + 4 * a * (a - c.M)));
  const double den = std::max({out.d, out.d_identity, 1e-300});
  out.rel_gap = std::abs(out.d - out.d_identity) / den;
  return out;
}

ContinuityProbe perturbation_continuity_probe(const Profile& u, const PeakonParams& p) {
  ContinuityProbe r;
  r.eps = std::sqrt(std::max(0.0, h1_distance_sq(u, p.a, p.x0)));
  r.dH1 = std::abs(H1_split(u, p.x0) - peakon_H1(p));
  r.dH2 = std::abs(H2_split(u, p.n, p.x0) - peakon_H2(p));
  r.h1_ratio = r.eps > 0 ? r.dH1 / r.eps : 0.0;
  r.h2_ratio = r.eps > 0 ? r.dH2 / r.eps : 0.0;
  return r;
}

}  // namespace hoch
