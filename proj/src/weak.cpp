#include "hoch/weak.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hoch/functionals.hpp"
#include "hoch/quadrature.hpp"

namespace hoch {

double bump(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - s * s));
}

double bump_d(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double q = 1.0 - s * s;
  return bump(s) * (-2.0 * s / (q * q));
}

double TestFunction::value(double t, double x) const {
  return bump((x - center) / width) * bump((t - t_center) / t_width);
}

double TestFunction::dt(double t, double x) const {
  return bump((x - center) / width) * bump_d((t - t_center) / t_width) / t_width;
}

double TestFunction::dx(double t, double x) const {
  return bump_d((x - center) / width) / width * bump((t - t_center) / t_width);
}

WeakCandidate peakon_candidate(const PeakonParams& p, double speed) {
  PeakonParams q = p;
  q.c = speed;
  WeakCandidate c;
  c.u = [q](double t, double x) { return eval_peakon(q, t, x); };
  c.ux = [q](double t, double x) { return eval_peakon_dx(q, t, x); };
  c.kinks = [q](double t) { return std::vector<double>{crest(q, t)}; };
  return c;
}

namespace {

constexpr double kCell = 0.5;
constexpr int kInnerPoints = 12;
constexpr int kOuterPoints = 12;

// integrals of 1/2 e^{-|x-y|} f_k(y), k = 0..K-1, for a vector-valued f
template <int K, class F>
std::array<double, K> convolve(const F& f, double x, const std::vector<double>& kinks, double window) {
  if (std::exp(-window) > 1e-16) throw std::domain_error("kernel_convolve: window too small for the decay budget");
  std::vector<double> bp{x - window, x, x + window};
  for (double k : kinks)
    if (k > x - window && k < x + window && k != x) bp.push_back(k);
  std::sort(bp.begin(), bp.end());
  const GaussRule& gr = gauss_legendre(kInnerPoints);
  std::array<double, K> acc{};
  for (size_t i = 0; i + 1 < bp.size(); ++i) {
    const double a = bp[i], b = bp[i + 1];
    if (!(b > a)) continue;
    const int cells = std::max(1, static_cast<int>(std::ceil((b - a) / kCell)));
    const double hc = (b - a) / cells;
    for (int c = 0; c < cells; ++c) {
      const double lo = a + c * hc;
      for (size_t q = 0; q < gr.x.size(); ++q) {
        const double y = lo + 0.5 * hc * (gr.x[q] + 1.0);
        const double kw = 0.5 * hc * gr.w[q] * 0.5 * std::exp(-std::abs(x - y));
        const std::array<double, K> v = f(y);
        for (int k = 0; k < K; ++k) acc[k] += kw * v[k];
      }
    }
  }
  return acc;
}

// integral of e^{-|x-y|} f_k(y) over a kink-free segment [a, b], with the
// kernel anchored at xr >= b (side = -1) or xr <= a (side = +1)
template <int K, class F>
void segment(const F& f, double a, double b, double xr, std::array<double, K>& acc) {
  if (!(b > a)) return;
  const GaussRule& gr = gauss_legendre(kInnerPoints);
  const int cells = std::max(1, static_cast<int>(std::ceil((b - a) / kCell)));
  const double hc = (b - a) / cells;
  for (int c = 0; c < cells; ++c) {
    const double lo = a + c * hc;
    for (size_t q = 0; q < gr.x.size(); ++q) {
      const double y = lo + 0.5 * hc * (gr.x[q] + 1.0);
      const double kw = 0.5 * hc * gr.w[q] * std::exp(-std::abs(xr - y));
      const std::array<double, K> v = f(y);
      for (int k = 0; k < K; ++k) acc[k] += kw * v[k];
    }
  }
}

template <int K, class F>
void segment_split(const F& f, double a, double b, double xr, const std::vector<double>& kinks,
                   std::array<double, K>& acc) {
  double lo = a;
  for (double k : kinks)
    if (k > a && k < b) {
      segment<K>(f, lo, k, xr, acc);
      lo = k;
    }
  segment<K>(f, lo, b, xr, acc);
}

// convolution with 1/2 e^{-|x-y|} at sorted nodes xs, by the two one-sided
// exponential recursions
template <int K, class F>
std::vector<std::array<double, K>> convolve_sweep(const F& f, const std::vector<double>& xs,
                                                  std::vector<double> kinks, double window) {
  if (std::exp(-window) > 1e-16) throw std::domain_error("kernel_convolve: window too small for the decay budget");
  std::sort(kinks.begin(), kinks.end());
  const size_t m = xs.size();
  std::vector<std::array<double, K>> left(m), right(m), out(m);
  for (size_t j = 0; j < m; ++j) {
    std::array<double, K> acc{};
    if (j == 0) {
      segment_split<K>(f, xs[0] - window, xs[0], xs[0], kinks, acc);
    } else {
      const double e = std::exp(-(xs[j] - xs[j - 1]));
      for (int k = 0; k < K; ++k) acc[k] = e * left[j - 1][k];
      segment_split<K>(f, xs[j - 1], xs[j], xs[j], kinks, acc);
    }
    left[j] = acc;
  }
  for (size_t jj = m; jj-- > 0;) {
    std::array<double, K> acc{};
    if (jj == m - 1) {
      segment_split<K>(f, xs[jj], xs[jj] + window, xs[jj], kinks, acc);
    } else {
      const double e = std::exp(-(xs[jj + 1] - xs[jj]));
      for (int k = 0; k < K; ++k) acc[k] = e * right[jj + 1][k];
      segment_split<K>(f, xs[jj], xs[jj + 1], xs[jj], kinks, acc);
    }
    right[jj] = acc;
  }
  for (size_t j = 0; j < m; ++j)
    for (int k = 0; k < K; ++k) out[j][k] = 0.5 * (left[j][k] + right[j][k]);
  return out;
}

struct Fluxes {
  double a, b;  // A(u, u_x) and the odd-power sum B(u, u_x)
};

Fluxes fluxes(const NumericCoeffs& nc, double u, double z) {
  const int n = nc.n;
  const double u2 = u * u, z2 = z * z;
  double asum = 0.0, bsum = 0.0;
  for (int k = n; k >= 0; --k) asum = asum * z2 + nc.A[k] * std::pow(u2, n - k);
  for (int k = n - 1; k >= 0; --k) bsum = bsum * z2 + nc.B[k] * std::pow(u2, n - 1 - k);
  return {asum, bsum * u * z};
}

// composite Gauss nodes on [a, b] split at the interior breakpoints
void nodes(double a, double b, std::vector<double> breaks, int cells, const GaussRule& gr, std::vector<double>& xs,
           std::vector<double>& ws) {
  std::vector<double> bp{a, b};
  for (double k : breaks)
    if (k > a && k < b) bp.push_back(k);
  std::sort(bp.begin(), bp.end());
  xs.clear();
  ws.clear();
  for (size_t i = 0; i + 1 < bp.size(); ++i) {
    const double hc = (bp[i + 1] - bp[i]) / cells;
    for (int c = 0; c < cells; ++c) {
      const double lo = bp[i] + c * hc;
      for (size_t q = 0; q < gr.x.size(); ++q) {
        xs.push_back(lo + 0.5 * hc * (gr.x[q] + 1.0));
        ws.push_back(0.5 * hc * gr.w[q]);
      }
    }
  }
}

WeakTerms terms_at_level(const WeakCandidate& cand, int n, const TestFunction& phi, int level) {
  const NumericCoeffs& nc = numeric_coeffs(n);
  const GaussRule& gr = gauss_legendre(kOuterPoints);
  const int cells = 1 << level;
  WeakTerms T;
  std::vector<double> ts, tw, xs, xw;
  nodes(phi.t_center - phi.t_width, phi.t_center + phi.t_width, {}, cells, gr, ts, tw);
  for (size_t i = 0; i < ts.size(); ++i) {
    const double t = ts[i];
    const std::vector<double> kinks = cand.kinks(t);
    nodes(phi.center - phi.width, phi.center + phi.width, kinks, cells, gr, xs, xw);
    auto f = [&](double y) {
      const Fluxes fl = fluxes(nc, cand.u(t, y), cand.ux(t, y));
      return std::array<double, 2>{fl.a, fl.b};
    };
    const auto convs = convolve_sweep<2>(f, xs, kinks, 40.0);
    for (size_t j = 0; j < xs.size(); ++j) {
      const double x = xs[j];
      const double w = tw[i] * xw[j];
      const double u = cand.u(t, x), z = cand.ux(t, x);
      const double p = phi.value(t, x), px = phi.dx(t, x), pt = phi.dt(t, x);
      const Fluxes fl = fluxes(nc, u, z);
      const auto& conv = convs[j];
      T.time += w * u * pt;
      T.flux += w * std::pow(u, 2 * n) / (2.0 * n) * px;
      T.local += w * fl.b * p;
      T.nonlocal_a += w * conv[0] * px;
      T.nonlocal_b -= w * conv[1] * p;
    }
  }
  if (phi.t_center - phi.t_width <= 0) {
    nodes(phi.center - phi.width, phi.center + phi.width, cand.kinks(0.0), cells, gr, xs, xw);
    for (size_t j = 0; j < xs.size(); ++j) T.initial += xw[j] * cand.u(0.0, xs[j]) * phi.value(0.0, xs[j]);
  }
  return T;
}

double total(const WeakTerms& t) { return t.time + t.flux + t.local + t.nonlocal_a + t.nonlocal_b + t.initial; }

double magnitude(const WeakTerms& t) {
  return std::abs(t.time) + std::abs(t.flux) + std::abs(t.local) + std::abs(t.nonlocal_a) +
         std::abs(t.nonlocal_b) + std::abs(t.initial);
}

}  // namespace

double kernel_convolve(const std::function<double(double)>& f, double x, const std::vector<double>& kinks,
                       double window) {
  auto g = [&](double y) { return std::array<double, 1>{f(y)}; };
  return convolve<1>(g, x, kinks, window)[0];
}

WeakResidual weak_residual(const WeakCandidate& u, int n, const TestFunction& phi, int level) {
  if (level < 1) throw std::domain_error("weak_residual: level >= 1");
  if (phi.t_center - phi.t_width < 0) throw std::domain_error("test function must be supported in t >= 0");
  const WeakTerms fine = terms_at_level(u, n, phi, level);
  const WeakTerms coarse = terms_at_level(u, n, phi, level - 1);
  WeakResidual r;
  r.level = level;
  r.terms = fine;
  r.value = total(fine);
  r.scale = magnitude(fine);
  r.richardson = r.value - total(coarse);
  return r;
}

double observed_order(const WeakResidual& coarse, const WeakResidual& fine, double floor_rel) {
  const double fl = floor_rel * std::max(coarse.scale, fine.scale);
  if (std::abs(fine.value) <= fl) return std::numeric_limits<double>::infinity();
  if (std::abs(coarse.value) <= fl) return 0.0;
  return std::log2(std::abs(coarse.value) / std::abs(fine.value)) / (fine.level - coarse.level);
}

}  // namespace hoch
