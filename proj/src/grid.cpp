#include "hoch/grid.hpp"

#include <fftw3.h>

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hoch {

namespace {

struct Plans {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

std::mutex plan_mutex;

const Plans& plans_for(int N) {
  static std::map<int, Plans> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  double* r = fftw_alloc_real(N);
  fftw_complex* c = fftw_alloc_complex(N / 2 + 1);
  Plans p;
  p.fwd = fftw_plan_dft_r2c_1d(N, r, c, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_c2r_1d(N, c, r, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(r);
  fftw_free(c);
  return cache.emplace(N, p).first->second;
}

GridFunction spectral_multiply(const GridFunction& u, int order) {
  const int N = u.grid.N;
  Spectrum s;
  rfft(u.v, s);
  const auto k = wavenumbers(u.grid);
  for (int j = 0; j <= N / 2; ++j) {
    std::complex<double> m = 1.0;
    for (int o = 0; o < order; ++o) m *= std::complex<double>(0.0, k[j]);
    s[j] *= m;
  }
  if (order % 2 == 1) s[N / 2] = 0.0;
  GridFunction out{u.grid, {}};
  irfft(s, out.v, N);
  return out;
}

}  // namespace

Grid make_grid(double L, int N) {
  if (!(L > 0)) throw std::domain_error("grid length must be positive");
  if (N < 4 || N % 2 != 0) throw std::domain_error("grid size must be even and >= 4");
  return Grid{L, N};
}

GridFunction sample(const Grid& g, const std::function<double(double)>& f) {
  GridFunction out{g, std::vector<double>(g.N)};
  for (int j = 0; j < g.N; ++j) out.v[j] = f(g.x(j));
  return out;
}

GridFunction sample_periodized(const Grid& g, const std::function<double(double)>& f, int images) {
  GridFunction out{g, std::vector<double>(g.N)};
  for (int j = 0; j < g.N; ++j) {
    double s = 0.0;
    for (int k = -images; k <= images; ++k) s += f(g.x(j) + k * g.L);
    out.v[j] = s;
  }
  return out;
}

DerivScheme parse_scheme(const std::string& name) {
  if (name == "spectral") return DerivScheme::spectral;
  if (name == "central2") return DerivScheme::central2;
  if (name == "central4") return DerivScheme::central4;
  throw std::invalid_argument("unknown derivative scheme: " + name);
}

std::string to_string(DerivScheme s) {
  switch (s) {
    case DerivScheme::spectral: return "spectral";
    case DerivScheme::central2: return "central2";
    case DerivScheme::central4: return "central4";
  }
  return "?";
}

GridFunction derivative(const GridFunction& u, DerivScheme scheme) {
  if (scheme == DerivScheme::spectral) return spectral_multiply(u, 1);
  const int N = u.grid.N;
  const double h = u.grid.h();
  GridFunction out{u.grid, std::vector<double>(N)};
  for (long j = 0; j < N; ++j) {
    if (scheme == DerivScheme::central2)
      out.v[j] = (u[j + 1] - u[j - 1]) / (2 * h);
    else
      out.v[j] = (-u[j + 2] + 8 * u[j + 1] - 8 * u[j - 1] + u[j - 2]) / (12 * h);
  }
  return out;
}

GridFunction second_derivative(const GridFunction& u, DerivScheme scheme) {
  if (scheme == DerivScheme::spectral) return spectral_multiply(u, 2);
  const int N = u.grid.N;
  const double h = u.grid.h();
  GridFunction out{u.grid, std::vector<double>(N)};
  for (long j = 0; j < N; ++j) {
    if (scheme == DerivScheme::central2)
      out.v[j] = (u[j + 1] - 2 * u[j] + u[j - 1]) / (h * h);
    else
      out.v[j] = (-u[j + 2] + 16 * u[j + 1] - 30 * u[j] + 16 * u[j - 1] - u[j - 2]) / (12 * h * h);
  }
  return out;
}

std::vector<double> wavenumbers(const Grid& g) {
  std::vector<double> k(g.N / 2 + 1);
  for (int j = 0; j <= g.N / 2; ++j) k[j] = 2 * std::numbers::pi * j / g.L;
  return k;
}

void rfft(const std::vector<double>& in, Spectrum& out) {
  const int N = static_cast<int>(in.size());
  out.assign(N / 2 + 1, 0.0);
  fftw_execute_dft_r2c(plans_for(N).fwd, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
}

void irfft(const Spectrum& in, std::vector<double>& out, int N) {
  Spectrum work(in);
  out.assign(N, 0.0);
  fftw_execute_dft_c2r(plans_for(N).bwd, reinterpret_cast<fftw_complex*>(work.data()), out.data());
  for (double& v : out) v /= N;
}

void NeumaierSum::add(double x) {
  double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

double compensated_sum(const std::vector<double>& v) {
  NeumaierSum s;
  for (double x : v) s.add(x);
  return s.value();
}

double integrate(const GridFunction& f) { return f.grid.h() * compensated_sum(f.v); }

namespace {

// integral over [0, t] (in units of h, measured from node 0) of the degree-5
// Lagrange interpolant through nodes at offsets 0, s, 2s, ..., 5s with s = +-1
double partial_cell(const std::array<double, 6>& f, double t, int s) {
  static const double gx[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                               0.8611363115940526};
  static const double gw[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                               0.3478548451374538};
  double acc = 0.0;
  for (int q = 0; q < 4; ++q) {
    const double y = 0.5 * t * (gx[q] + 1.0);
    const double r = s * y;  // position in node units along the stencil direction
    double p = 0.0;
    for (int i = 0; i < 6; ++i) {
      double li = 1.0;
      for (int m = 0; m < 6; ++m)
        if (m != i) li *= (r - m) / static_cast<double>(i - m);
      p += li * f[i];
    }
    acc += gw[q] * p;
  }
  return 0.5 * t * acc;
}

}  // namespace

double segment_integral(const Grid& g, const std::function<double(long)>& f, double A, double B) {
  if (!(B > A)) return 0.0;
  const double h = g.h();
  const double origin = -0.5 * g.L;
  const long j0 = static_cast<long>(std::ceil((A - origin) / h - 1e-12));
  const long j1 = static_cast<long>(std::floor((B - origin) / h + 1e-12));
  const long m = j1 - j0;
  if (m < 7) throw std::domain_error("segment_integral: segment spans too few nodes");

  std::vector<double> vals(m + 1);
  for (long i = 0; i <= m; ++i) vals[i] = f(j0 + i);

  static const double w[3] = {3.0 / 8.0, 7.0 / 6.0, 23.0 / 24.0};
  NeumaierSum s;
  for (long i = 0; i <= m; ++i) {
    double wi = 1.0;
    if (i < 3) wi = w[i];
    else if (m - i < 3) wi = w[m - i];
    s.add(wi * vals[i]);
  }
  double total = h * s.value();

  const double tl = (g.x(j0) - A) / h;
  if (tl > 0) {
    std::array<double, 6> fs;
    for (int i = 0; i < 6; ++i) fs[i] = vals[i];
    // extrapolate from the nodes above x_{j0} down to A
    total += h * partial_cell(fs, tl, -1);
  }
  const double tr = (B - g.x(j1)) / h;
  if (tr > 0) {
    std::array<double, 6> fs;
    for (int i = 0; i < 6; ++i) fs[i] = vals[m - i];
    total += h * partial_cell(fs, tr, -1);
  }
  return total;
}

TrigInterpolant::TrigInterpolant(const GridFunction& f) : grid_(f.grid) { rfft(f.v, coef_); }

void TrigInterpolant::eval(double x, double& f, double& f1, double& f2) const {
  const int N = grid_.N;
  const double s = x + 0.5 * grid_.L;
  const double k0 = 2 * std::numbers::pi / grid_.L;
  f = coef_[0].real() / N;
  f1 = 0.0;
  f2 = 0.0;
  for (int j = 1; j < N / 2; ++j) {
    const double k = k0 * j;
    const std::complex<double> e = std::polar(1.0, k * s);
    const std::complex<double> c = 2.0 * coef_[j] * e / static_cast<double>(N);
    f += c.real();
    f1 += (std::complex<double>(0, k) * c).real();
    f2 += -k * k * c.real();
  }
}

double TrigInterpolant::value(double x) const {
  double f, f1, f2;
  eval(x, f, f1, f2);
  return f;
}

double TrigInterpolant::d1(double x) const {
  double f, f1, f2;
  eval(x, f, f1, f2);
  return f1;
}

double TrigInterpolant::d2(double x) const {
  double f, f1, f2;
  eval(x, f, f1, f2);
  return f2;
}

}  // namespace hoch
