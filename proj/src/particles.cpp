#include "hoch/particles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hoch/quadrature.hpp"

namespace hoch {

namespace {

constexpr int kAuxPoints = 200001;

void place_component(const MomentumComponent& c, int count, double floor, std::vector<double>& r,
                     std::vector<double>& w) {
  if (!(c.hi > c.lo)) throw std::domain_error("momentum window must have hi > lo");
  const double width = c.hi - c.lo;
  const double dy = width / (kAuxPoints - 1);
  std::vector<double> y(kAuxPoints), m(kAuxPoints);
  double mass = 0.0;
  for (int i = 0; i < kAuxPoints; ++i) {
    y[i] = c.lo + i * dy;
    m[i] = c.m(y[i]);
    if (m[i] < 0) throw std::domain_error("particle initialisation needs nonnegative momentum");
    if (i > 0) mass += 0.5 * (m[i] + m[i - 1]) * dy;
  }
  if (!(mass > 0)) throw std::domain_error("momentum component has no mass");

  auto rho = [&](double mv) { return (1.0 - floor) * mv / mass + floor / width; };
  std::vector<double> cdf(kAuxPoints, 0.0);
  for (int i = 1; i < kAuxPoints; ++i) cdf[i] = cdf[i - 1] + 0.5 * (rho(m[i]) + rho(m[i - 1])) * dy;
  const double total = cdf.back();

  int k = 0;
  const size_t first = w.size();
  for (int i = 0; i < count; ++i) {
    const double s = (i + 0.5) / count * total;
    while (k < kAuxPoints - 2 && cdf[k + 1] < s) ++k;
    const double frac = (s - cdf[k]) / (cdf[k + 1] - cdf[k]);
    const double x = y[k] + frac * dy;
    const double mx = c.m(x);
    r.push_back(x);
    w.push_back(mx / (count * rho(mx) / total));
  }
  // rescale so the particles carry the window's mass exactly
  double placed = 0.0;
  for (size_t i = first; i < w.size(); ++i) placed += w[i];
  for (size_t i = first; i < w.size(); ++i) w[i] *= mass / placed;
}

}  // namespace

ParticleState particles_from_momentum(const std::vector<MomentumComponent>& comps, int count, double floor) {
  if (comps.empty()) throw std::domain_error("no momentum components");
  if (count < static_cast<int>(comps.size())) throw std::domain_error("too few particles");
  std::vector<double> r, w;
  const int per = count / static_cast<int>(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) {
    const int c = (i + 1 == comps.size()) ? count - per * static_cast<int>(i) : per;
    place_component(comps[i], c, floor, r, w);
  }
  std::vector<size_t> idx(r.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return r[a] < r[b]; });
  ParticleState s;
  for (size_t i : idx) {
    s.r.push_back(r[i]);
    s.w.push_back(w[i]);
  }
  for (size_t i = 1; i < s.r.size(); ++i)
    if (!(s.r[i] > s.r[i - 1])) throw std::domain_error("coincident particles in initial data");
  return s;
}

ParticleFields particle_fields(const ParticleState& s) {
  const size_t P = s.r.size();
  ParticleFields f;
  f.SL.assign(P, 0.0);
  f.SR.assign(P, 0.0);
  for (size_t i = 1; i < P; ++i) f.SL[i] = std::exp(-(s.r[i] - s.r[i - 1])) * (f.SL[i - 1] + s.w[i - 1]);
  for (size_t i = P - 1; i-- > 0;) f.SR[i] = std::exp(-(s.r[i + 1] - s.r[i])) * (f.SR[i + 1] + s.w[i + 1]);
  f.u.resize(P);
  f.zl.resize(P);
  f.zr.resize(P);
  for (size_t i = 0; i < P; ++i) {
    f.u[i] = 0.5 * (f.SL[i] + s.w[i] + f.SR[i]);
    const double zm = 0.5 * (f.SR[i] - f.SL[i]);
    f.zl[i] = zm + 0.5 * s.w[i];
    f.zr[i] = zm - 0.5 * s.w[i];
  }
  return f;
}

void particle_rhs(const ParticleState& s, int n, ParticleState& out) {
  const ParticleFields f = particle_fields(s);
  const GaussRule& gr = gauss_legendre(n + 1);
  const size_t P = s.r.size();
  out.r.resize(P);
  out.w.resize(P);
  for (size_t i = 0; i < P; ++i) {
    const double u = f.u[i], zm = 0.5 * (f.zl[i] + f.zr[i]), hw = 0.5 * (f.zr[i] - f.zl[i]);
    double vel = 0.0, rate = 0.0;
    for (size_t q = 0; q < gr.x.size(); ++q) {
      const double z = zm + hw * gr.x[q];
      const double base = std::pow(u * u - z * z, n - 1);
      vel += gr.w[q] * base;
      rate += gr.w[q] * z * base;
    }
    out.r[i] = 0.5 * u * vel;
    out.w[i] = -0.5 * s.w[i] * rate;
  }
}

double particle_H1(const ParticleState& s) {
  const ParticleFields f = particle_fields(s);
  NeumaierSum acc;
  for (size_t i = 0; i < s.r.size(); ++i) acc.add(f.u[i] * s.w[i]);
  return acc.value();
}

double particle_H2(const ParticleState& s, int n) {
  const ParticleFields f = particle_fields(s);
  const GaussRule& gr = gauss_legendre(n + 1);
  NeumaierSum acc;
  for (size_t i = 0; i < s.r.size(); ++i) {
    const double u = f.u[i], zm = 0.5 * (f.zl[i] + f.zr[i]), hw = 0.5 * (f.zr[i] - f.zl[i]);
    double avg = 0.0;
    for (size_t q = 0; q < gr.x.size(); ++q) {
      const double z = zm + hw * gr.x[q];
      avg += 0.5 * gr.w[q] * std::pow(u * u - z * z, n);
    }
    acc.add(avg * s.w[i]);
  }
  return acc.value();
}

void sample_particles(const ParticleState& s, const Grid& g, std::vector<double>& u, std::vector<double>& ux) {
  const long N = g.N;
  const size_t P = s.r.size();
  std::vector<double> left(N, 0.0), right(N, 0.0);
  // left[j] = sum_{r_i <= x_j} w_i exp(-(x_j - r_i))
  double acc = 0.0, xprev = g.x(0);
  size_t i = 0;
  for (long j = 0; j < N; ++j) {
    const double x = g.x(j);
    acc *= std::exp(-(x - xprev));
    while (i < P && s.r[i] <= x) {
      acc += s.w[i] * std::exp(-(x - s.r[i]));
      ++i;
    }
    left[j] = acc;
    xprev = x;
  }
  acc = 0.0;
  xprev = g.x(N - 1);
  long k = static_cast<long>(P) - 1;
  for (long j = N - 1; j >= 0; --j) {
    const double x = g.x(j);
    acc *= std::exp(-(xprev - x));
    while (k >= 0 && s.r[k] > x) {
      acc += s.w[k] * std::exp(-(s.r[k] - x));
      --k;
    }
    right[j] = acc;
    xprev = x;
  }
  u.resize(N);
  ux.resize(N);
  for (long j = 0; j < N; ++j) {
    u[j] = 0.5 * (left[j] + right[j]);
    ux[j] = 0.5 * (right[j] - left[j]);
  }
}

namespace {

void axpy(const ParticleState& a, double h, const ParticleState& k, ParticleState& out) {
  const size_t P = a.r.size();
  out.r.resize(P);
  out.w.resize(P);
  for (size_t i = 0; i < P; ++i) {
    out.r[i] = a.r[i] + h * k.r[i];
    out.w[i] = a.w[i] + h * k.w[i];
  }
}

}  // namespace

TrajectoryRecord run_lagrangian(const InitialData& u0, const SolverConfig& cfg) {
  const int n = cfg.n;
  ParticleState s = particles_from_momentum(u0.momentum, cfg.particles, cfg.particle_floor);
  const size_t P = s.r.size();
  TrajectoryRecord rec;
  rec.particles = static_cast<int>(P);

  std::vector<size_t> tracked;
  for (double seed : cfg.seeds) {
    size_t best = 0;
    for (size_t i = 1; i < P; ++i)
      if (std::abs(s.r[i] - seed) < std::abs(s.r[best] - seed)) best = i;
    tracked.push_back(best);
  }
  rec.characteristics.seeds = cfg.seeds;
  rec.characteristics.min_m_ratio = std::numeric_limits<double>::infinity();

  auto record = [&](double t) {
    const ParticleFields f = particle_fields(s);
    size_t best = 0;
    double min_u = f.u[0], min_cone = std::numeric_limits<double>::infinity();
    double min_ux = std::numeric_limits<double>::infinity();
    double wmax = 0.0, wmin = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < P; ++i) {
      if (f.u[i] > f.u[best]) best = i;
      min_u = std::min(min_u, f.u[i]);
      min_cone = std::min({min_cone, f.SL[i], f.SR[i]});
      min_ux = std::min(min_ux, f.zr[i]);
      wmax = std::max(wmax, std::abs(s.w[i]));
      wmin = std::min(wmin, s.w[i]);
    }
    rec.times.push_back(t);
    rec.H1_series.push_back(particle_H1(s));
    rec.H2_series.push_back(particle_H2(s, n));
    rec.crest_positions.push_back(s.r[best]);
    rec.M_series.push_back(f.u[best]);
    rec.min_u_series.push_back(min_u);
    rec.min_cone_series.push_back(min_cone);
    rec.min_ux_series.push_back(min_ux);
    rec.min_m_series.push_back(wmin / wmax);
    if (cfg.orbit_amplitude > 0) {
      const double a = cfg.orbit_amplitude;
      // u is convex between particles, so its maximum sits on a particle
      const double d2 = rec.H1_series.back() - 2 * a * a + 4 * a * (a - f.u[best]);
      rec.orbit_distance_series.push_back(std::sqrt(std::max(0.0, d2)));
    }
    if (!tracked.empty()) {
      std::vector<double> pos, mm;
      for (size_t i : tracked) {
        pos.push_back(s.r[i]);
        mm.push_back(s.w[i]);
        rec.characteristics.min_m_ratio = std::min(rec.characteristics.min_m_ratio, s.w[i] / wmax);
      }
      for (size_t q = 1; q < pos.size(); ++q)
        if (cfg.seeds[q] > cfg.seeds[q - 1] && !(pos[q] > pos[q - 1])) rec.characteristics.ordered = false;
      rec.characteristics.paths.push_back(pos);
      rec.characteristics.m_along.push_back(mm);
    }
    return min_ux;
  };

  {
    const ParticleFields f = particle_fields(s);
    double vmax = 0.0;
    for (size_t i = 0; i < P; ++i) vmax = std::max(vmax, std::abs(f.u[i]) * std::pow(f.u[i] * f.u[i], n - 1));
    double gap = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < P; ++i) gap = std::min(gap, s.r[i] - s.r[i - 1]);
    rec.cfl_number = cfg.dt * vmax / gap;
    rec.cfl_ok = true;
  }

  const long steps = std::lround(cfg.t_end / cfg.dt);
  record(0.0);
  ParticleState k1, k2, k3, k4, tmp;
  double t = 0.0;
  for (long st = 1; st <= steps; ++st) {
    particle_rhs(s, n, k1);
    axpy(s, 0.5 * cfg.dt, k1, tmp);
    particle_rhs(tmp, n, k2);
    axpy(s, 0.5 * cfg.dt, k2, tmp);
    particle_rhs(tmp, n, k3);
    axpy(s, cfg.dt, k3, tmp);
    particle_rhs(tmp, n, k4);
    for (size_t i = 0; i < P; ++i) {
      s.r[i] += cfg.dt / 6 * (k1.r[i] + 2 * k2.r[i] + 2 * k3.r[i] + k4.r[i]);
      s.w[i] += cfg.dt / 6 * (k1.w[i] + 2 * k2.w[i] + 2 * k3.w[i] + k4.w[i]);
    }
    t = st * cfg.dt;
    rec.steps = st;

    bool finite = true;
    for (size_t i = 0; i < P; ++i)
      if (!std::isfinite(s.r[i]) || !std::isfinite(s.w[i])) finite = false;
    if (!finite) {
      rec.status = RunStatus::diverged;
      rec.message = "non-finite particle state at t=" + std::to_string(t);
      break;
    }
    double gap = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < P; ++i) gap = std::min(gap, s.r[i] - s.r[i - 1]);
    if (gap <= cfg.collapse_spacing) {
      record(t);
      rec.status = RunStatus::collapse;
      rec.message = "particle spacing collapsed at t=" + std::to_string(t);
      break;
    }
    if (st % cfg.record_every == 0 || st == steps) {
      const double min_ux = record(t);
      if (min_ux < -cfg.breaking_threshold) {
        rec.status = RunStatus::wave_breaking;
        rec.message = "min u_x below threshold at t=" + std::to_string(t);
        break;
      }
    }
  }
  if (rec.characteristics.min_m_ratio == std::numeric_limits<double>::infinity())
    rec.characteristics.min_m_ratio = 0.0;

  GridFunction fs{cfg.grid, {}};
  std::vector<double> ux;
  sample_particles(s, cfg.grid, fs.v, ux);
  rec.final_state = fs;
  return rec;
}

}  // namespace hoch
