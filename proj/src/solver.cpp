#include "hoch/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hoch/functionals.hpp"
#include "hoch/particles.hpp"

namespace hoch {

Scheme parse_solver_scheme(const std::string& name) {
  if (name == "spectral") return Scheme::spectral;
  if (name == "lagrangian") return Scheme::lagrangian;
  throw std::invalid_argument("unknown solver scheme: " + name);
}

std::string to_string(Scheme s) { return s == Scheme::spectral ? "spectral" : "lagrangian"; }

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::completed: return "completed";
    case RunStatus::wave_breaking: return "wave_breaking";
    case RunStatus::diverged: return "diverged";
    case RunStatus::collapse: return "collapse";
    case RunStatus::under_resolved: return "under_resolved";
  }
  return "?";
}

InitialData operator+(const InitialData& a, const InitialData& b) {
  InitialData out;
  auto au = a.u, bu = b.u, ax = a.ux, bx = b.ux;
  out.u = [au, bu](double x) { return au(x) + bu(x); };
  out.ux = [ax, bx](double x) { return ax(x) + bx(x); };
  out.momentum = a.momentum;
  out.momentum.insert(out.momentum.end(), b.momentum.begin(), b.momentum.end());
  return out;
}

InitialData scaled(const InitialData& a, double s) {
  InitialData out;
  auto au = a.u, ax = a.ux;
  out.u = [au, s](double x) { return s * au(x); };
  out.ux = [ax, s](double x) { return s * ax(x); };
  for (const auto& c : a.momentum) {
    auto m = c.m;
    out.momentum.push_back({[m, s](double x) { return s * m(x); }, c.lo, c.hi});
  }
  return out;
}

double MollifiedPeakon::value(double x) const {
  const double d = delta, s = x - base.x0;
  const double r = std::sqrt(2.0) * d;
  const double pre = 0.5 * base.a * std::exp(0.5 * d * d);
  return pre * (std::exp(-s) * std::erfc((d * d - s) / r) + std::exp(s) * std::erfc((d * d + s) / r));
}

double MollifiedPeakon::dx(double x) const {
  const double d = delta, s = x - base.x0;
  const double r = std::sqrt(2.0) * d;
  const double pre = 0.5 * base.a * std::exp(0.5 * d * d);
  return pre * (-std::exp(-s) * std::erfc((d * d - s) / r) + std::exp(s) * std::erfc((d * d + s) / r));
}

double MollifiedPeakon::momentum(double x) const {
  const double s = (x - base.x0) / delta;
  return 2.0 * base.a * std::exp(-0.5 * s * s) / (std::sqrt(2.0 * std::numbers::pi) * delta);
}

InitialData mollified_peakon_data(const PeakonParams& p, double delta) {
  if (!(delta > 0)) throw std::domain_error("mollifier width must be positive");
  MollifiedPeakon mp{p, delta};
  InitialData d;
  d.u = [mp](double x) { return mp.value(x); };
  d.ux = [mp](double x) { return mp.dx(x); };
  d.momentum.push_back({[mp](double x) { return mp.momentum(x); }, p.x0 - 12 * delta, p.x0 + 12 * delta});
  return d;
}

GridFunction mollified_peakon(const PeakonParams& p, double delta, const Grid& g, bool* unresolved) {
  if (!(delta > 0)) throw std::domain_error("mollifier width must be positive");
  MollifiedPeakon mp{p, delta};
  if (unresolved) *unresolved = delta < 2 * g.h();
  return sample_periodized(g, [&](double x) { return mp.value(x); });
}

GridFunction helmholtz_inverse(const GridFunction& f) {
  Spectrum s;
  rfft(f.v, s);
  const auto k = wavenumbers(f.grid);
  for (size_t j = 0; j < s.size(); ++j) s[j] /= 1.0 + k[j] * k[j];
  GridFunction out{f.grid, {}};
  irfft(s, out.v, f.grid.N);
  return out;
}

namespace {

class SpectralStepper {
public:
  explicit SpectralStepper(const SolverConfig& cfg)
      : cfg_(cfg), nc_(numeric_coeffs(cfg.n)), k_(wavenumbers(cfg.grid)) {
    const int N = cfg.grid.N;
    mask_.assign(N / 2 + 1, 1.0);
    const double kmax = k_.back();
    for (int j = 0; j <= N / 2; ++j) {
      if (cfg.filter_strength > 0)
        mask_[j] = std::exp(-cfg.filter_strength * std::pow(k_[j] / kmax, cfg.filter_order));
    }
    dealias_cut_ = cfg.dealias ? N / 3 : N / 2 + 1;
  }

  // velocity field u (u^2 - u_x^2)^{n-1} is written when vel != nullptr
  void rhs(const std::vector<double>& u, std::vector<double>& out, std::vector<double>* vel = nullptr) {
    const int N = cfg_.grid.N;
    const int n = cfg_.n;
    GridFunction ug{cfg_.grid, u};
    if (cfg_.deriv_scheme == DerivScheme::spectral) {
      rfft(u, uh_);
      for (int j = 0; j <= N / 2; ++j) uh_[j] *= std::complex<double>(0.0, k_[j]);
      uh_[N / 2] = 0.0;
      irfft(uh_, ux_, N);
    } else {
      ux_ = derivative(ug, cfg_.deriv_scheme).v;
    }
    A_.resize(N);
    B_.resize(N);
    loc_.resize(N);
    if (vel) vel->resize(N);
    for (int i = 0; i < N; ++i) {
      const double a = u[i], z = ux_[i];
      const double a2 = a * a, z2 = z * z;
      double local = 0.0, bsum = 0.0, asum = 0.0;
      for (int k = n - 1; k >= 0; --k) {
        local = local * z2 + nc_.local[k] * std::pow(a2, n - 1 - k);
        bsum = bsum * z2 + nc_.B[k] * std::pow(a2, n - 1 - k);
      }
      for (int k = n; k >= 0; --k) asum = asum * z2 + nc_.A[k] * std::pow(a2, n - k);
      loc_[i] = local * a * z;
      B_[i] = bsum * a * z;
      A_[i] = asum;
      if (vel) (*vel)[i] = a * std::pow(a2 - z2, n - 1);
    }
    rfft(A_, Ah_);
    rfft(B_, Bh_);
    for (int j = 0; j <= N / 2; ++j) {
      std::complex<double> v = (std::complex<double>(0.0, k_[j]) * Ah_[j] + Bh_[j]) / (1.0 + k_[j] * k_[j]);
      if (j >= dealias_cut_) v = 0.0;
      Ah_[j] = v;
    }
    Ah_[N / 2] = 0.0;
    irfft(Ah_, out, N);
    for (int i = 0; i < N; ++i) out[i] = -(loc_[i] + out[i]);
  }

  void filter(std::vector<double>& u) {
    if (cfg_.filter_strength <= 0) return;
    rfft(u, uh_);
    for (size_t j = 0; j < uh_.size(); ++j) uh_[j] *= mask_[j];
    irfft(uh_, u, cfg_.grid.N);
  }

  const std::vector<double>& last_ux() const { return ux_; }

private:
  const SolverConfig& cfg_;
  const NumericCoeffs& nc_;
  std::vector<double> k_, mask_;
  int dealias_cut_;
  Spectrum uh_, Ah_, Bh_;
  std::vector<double> ux_, A_, B_, loc_;
};

double interp_periodic(const Grid& g, const std::vector<double>& f, double x) {
  const double s = (x + 0.5 * g.L) / g.h();
  const double fl = std::floor(s);
  const long j = static_cast<long>(fl);
  const double th = s - fl;
  return (1 - th) * f[g.wrap(j)] + th * f[g.wrap(j + 1)];
}

}  // namespace

GridFunction rhs(const GridFunction& u, const SolverConfig& cfg) {
  SolverConfig c = cfg;
  c.grid = u.grid;
  SpectralStepper st(c);
  GridFunction out{u.grid, {}};
  st.rhs(u.v, out.v);
  return out;
}

GridFunction step_rk4(const GridFunction& u, const SolverConfig& cfg) {
  SolverConfig c = cfg;
  c.grid = u.grid;
  SpectralStepper st(c);
  const int N = u.grid.N;
  const double dt = cfg.dt;
  std::vector<double> k1, k2, k3, k4, tmp(N);
  st.rhs(u.v, k1);
  for (int i = 0; i < N; ++i) tmp[i] = u.v[i] + 0.5 * dt * k1[i];
  st.filter(tmp);
  st.rhs(tmp, k2);
  for (int i = 0; i < N; ++i) tmp[i] = u.v[i] + 0.5 * dt * k2[i];
  st.filter(tmp);
  st.rhs(tmp, k3);
  for (int i = 0; i < N; ++i) tmp[i] = u.v[i] + dt * k3[i];
  st.filter(tmp);
  st.rhs(tmp, k4);
  GridFunction out{u.grid, std::vector<double>(N)};
  for (int i = 0; i < N; ++i) out.v[i] = u.v[i] + dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  st.filter(out.v);
  return out;
}

namespace {

TrajectoryRecord run_spectral(const GridFunction& u0, const SolverConfig& cfg_in) {
  SolverConfig cfg = cfg_in;
  cfg.grid = u0.grid;
  const Grid& g = cfg.grid;
  const int N = g.N;
  const int n = cfg.n;
  const double dt = cfg.dt;
  SpectralStepper st(cfg);
  TrajectoryRecord rec;

  std::vector<double> u = u0.v;
  std::vector<double> seeds = cfg.seeds;
  const size_t S = seeds.size();
  rec.characteristics.seeds = seeds;
  rec.characteristics.min_m_ratio = std::numeric_limits<double>::infinity();

  {
    GridFunction ug{g, u};
    const auto ux = derivative(ug, cfg.deriv_scheme).v;
    double vmax = 0.0;
    for (int i = 0; i < N; ++i)
      vmax = std::max(vmax, std::abs(u[i]) * std::pow(std::abs(u[i] * u[i] - ux[i] * ux[i]), n - 1) +
                                std::pow(std::abs(u[i]) + std::abs(ux[i]), 2 * n));
    rec.cfl_number = dt * vmax / g.h();
    rec.cfl_ok = rec.cfl_number <= 0.5;
  }

  // returns false when the run has to stop
  auto record = [&](double t) {
    GridFunction ug{g, u};
    const Profile p = make_profile(ug, cfg.deriv_scheme);
    const GridFunction uxx = second_derivative(ug, cfg.deriv_scheme);
    std::vector<double> m(N);
    double min_u = u[0], min_cone = std::numeric_limits<double>::infinity();
    double min_ux = std::numeric_limits<double>::infinity(), mmax = 0.0, mmin = 0.0;
    for (int i = 0; i < N; ++i) {
      m[i] = u[i] - uxx.v[i];
      min_u = std::min(min_u, u[i]);
      min_cone = std::min(min_cone, u[i] - std::abs(p.ux[i]));
      min_ux = std::min(min_ux, p.ux[i]);
      mmax = std::max(mmax, std::abs(m[i]));
      mmin = std::min(mmin, m[i]);
    }
    const Crest c = locate_crest(p, CrestMode::smooth);
    rec.times.push_back(t);
    rec.H1_series.push_back(H1(p));
    rec.H2_series.push_back(H2(p, n));
    rec.crest_positions.push_back(c.x);
    rec.M_series.push_back(c.M);
    rec.min_u_series.push_back(min_u);
    rec.min_cone_series.push_back(min_cone);
    rec.min_ux_series.push_back(min_ux);
    const double mratio = mmax > 0 ? mmin / mmax : 0.0;
    rec.min_m_series.push_back(mratio);
    if (cfg.orbit_amplitude > 0) rec.orbit_distance_series.push_back(orbit_distance(p, cfg.orbit_amplitude).d);
    if (S > 0) {
      std::vector<double> pos(seeds), mm(S);
      for (size_t q = 0; q < S; ++q) {
        mm[q] = interp_periodic(g, m, seeds[q]);
        if (mmax > 0) rec.characteristics.min_m_ratio = std::min(rec.characteristics.min_m_ratio, mm[q] / mmax);
        if (std::abs(seeds[q]) > 0.5 * g.L) rec.characteristics.flagged = true;
      }
      for (size_t q = 1; q < S; ++q)
        if (cfg.seeds[q] > cfg.seeds[q - 1] && !(pos[q] > pos[q - 1])) rec.characteristics.ordered = false;
      rec.characteristics.paths.push_back(pos);
      rec.characteristics.m_along.push_back(mm);
    }
    if (min_ux < -cfg.breaking_threshold) {
      rec.status = RunStatus::wave_breaking;
      rec.message = "min u_x below threshold at t=" + std::to_string(t);
      return false;
    }
    if (cfg.underresolved_tol > 0 && mratio < -cfg.underresolved_tol) {
      rec.status = RunStatus::under_resolved;
      rec.message = "momentum lost its sign on the grid at t=" + std::to_string(t);
      return false;
    }
    return true;
  };

  const long steps = std::lround(cfg.t_end / dt);
  bool go = record(0.0);
  std::vector<double> k1, k2, k3, k4, tmp(N), v1, v2, v3, v4;
  std::vector<double> sk1(S), sk2(S), sk3(S), sk4(S), sp(S);
  std::vector<double>* vp1 = S ? &v1 : nullptr;
  std::vector<double>* vp2 = S ? &v2 : nullptr;
  std::vector<double>* vp3 = S ? &v3 : nullptr;
  std::vector<double>* vp4 = S ? &v4 : nullptr;
  for (long step = 1; go && step <= steps; ++step) {
    st.rhs(u, k1, vp1);
    for (int i = 0; i < N; ++i) tmp[i] = u[i] + 0.5 * dt * k1[i];
    st.filter(tmp);
    st.rhs(tmp, k2, vp2);
    for (int i = 0; i < N; ++i) tmp[i] = u[i] + 0.5 * dt * k2[i];
    st.filter(tmp);
    st.rhs(tmp, k3, vp3);
    for (int i = 0; i < N; ++i) tmp[i] = u[i] + dt * k3[i];
    st.filter(tmp);
    st.rhs(tmp, k4, vp4);
    if (S) {
      for (size_t q = 0; q < S; ++q) sk1[q] = interp_periodic(g, v1, seeds[q]);
      for (size_t q = 0; q < S; ++q) sk2[q] = interp_periodic(g, v2, seeds[q] + 0.5 * dt * sk1[q]);
      for (size_t q = 0; q < S; ++q) sk3[q] = interp_periodic(g, v3, seeds[q] + 0.5 * dt * sk2[q]);
      for (size_t q = 0; q < S; ++q) sk4[q] = interp_periodic(g, v4, seeds[q] + dt * sk3[q]);
      for (size_t q = 0; q < S; ++q) seeds[q] += dt / 6 * (sk1[q] + 2 * sk2[q] + 2 * sk3[q] + sk4[q]);
    }
    bool finite = true;
    for (int i = 0; i < N; ++i) {
      u[i] += dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
      if (!std::isfinite(u[i])) finite = false;
    }
    st.filter(u);
    rec.steps = step;
    const double t = step * dt;
    if (!finite) {
      rec.status = RunStatus::diverged;
      rec.message = "non-finite state at t=" + std::to_string(t);
      break;
    }
    double min_ux = 0.0;
    for (double z : st.last_ux()) min_ux = std::min(min_ux, z);
    if (min_ux < -cfg.breaking_threshold) {
      record(t);
      rec.status = RunStatus::wave_breaking;
      rec.message = "min u_x below threshold at t=" + std::to_string(t);
      break;
    }
    if (step % cfg.record_every == 0 || step == steps) go = record(t);
  }
  if (rec.characteristics.min_m_ratio == std::numeric_limits<double>::infinity())
    rec.characteristics.min_m_ratio = 0.0;
  rec.final_state = GridFunction{g, u};
  return rec;
}

}  // namespace

TrajectoryRecord run(const GridFunction& u0, const SolverConfig& cfg) {
  if (cfg.scheme != Scheme::spectral) throw std::invalid_argument("grid initial data needs the spectral scheme");
  if (!(cfg.dt > 0) || !(cfg.t_end > 0) || cfg.record_every < 1) throw std::invalid_argument("bad time stepping");
  return run_spectral(u0, cfg);
}

TrajectoryRecord run(const InitialData& u0, const SolverConfig& cfg) {
  if (!(cfg.dt > 0) || !(cfg.t_end > 0) || cfg.record_every < 1) throw std::invalid_argument("bad time stepping");
  if (cfg.scheme == Scheme::lagrangian) return run_lagrangian(u0, cfg);
  return run_spectral(sample_periodized(cfg.grid, u0.u), cfg);
}

double measure_speed(const TrajectoryRecord& rec, double t_from) {
  std::vector<double> t, x;
  const double L = rec.final_state.grid.L;
  double shift = 0.0;
  for (size_t i = 0; i < rec.times.size(); ++i) {
    if (i > 0) {
      const double jump = rec.crest_positions[i] - rec.crest_positions[i - 1];
      if (jump < -0.5 * L) shift += L;
      if (jump > 0.5 * L) shift -= L;
    }
    if (rec.times[i] < t_from - 1e-12) continue;
    if (!(rec.M_series[i] > 1e-12)) throw std::domain_error("measure_speed: no crest to track");
    t.push_back(rec.times[i]);
    x.push_back(rec.crest_positions[i] + shift);
  }
  if (t.size() < 3) throw std::domain_error("measure_speed: too few samples");
  double tm = 0, xm = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    tm += t[i];
    xm += x[i];
  }
  tm /= t.size();
  xm /= t.size();
  double num = 0, den = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    num += (t[i] - tm) * (x[i] - xm);
    den += (t[i] - tm) * (t[i] - tm);
  }
  return num / den;
}

}  // namespace hoch
