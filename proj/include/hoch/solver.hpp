#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hoch/grid.hpp"
#include "hoch/peakon.hpp"

namespace hoch {

enum class Scheme { spectral, lagrangian };
Scheme parse_solver_scheme(const std::string& name);
std::string to_string(Scheme s);

enum class RunStatus { completed, wave_breaking, diverged, collapse, under_resolved };
std::string to_string(RunStatus s);

struct SolverConfig {
  int n = 1;
  Grid grid{40.0, 2048};
  double dt = 1e-3;
  double t_end = 5.0;
  Scheme scheme = Scheme::spectral;
  DerivScheme deriv_scheme = DerivScheme::spectral;
  bool dealias = false;
  double filter_strength = 36.0;
  int filter_order = 16;
  double breaking_threshold = 1e3;
  int record_every = 50;
  // spectral: abort once min m < -tol * max m (tol <= 0 disables)
  double underresolved_tol = 1e-2;
  // lagrangian
  int particles = 2000;
  double particle_floor = 0.05;
  double collapse_spacing = 1e-12;
  // orbit distance to the peakon of this amplitude is recorded when > 0
  double orbit_amplitude = 0.0;
  std::vector<double> seeds;
};

struct MomentumComponent {
  std::function<double(double)> m;
  double lo = 0.0, hi = 0.0;
};

// u0 with u0_x and a nonnegative momentum density split into windows
struct InitialData {
  std::function<double(double)> u, ux;
  std::vector<MomentumComponent> momentum;
};

InitialData operator+(const InitialData& a, const InitialData& b);
InitialData scaled(const InitialData& a, double s);

struct MollifiedPeakon {
  PeakonParams base;
  double delta = 0.2;

  double value(double x) const;
  double dx(double x) const;
  double momentum(double x) const;
};

InitialData mollified_peakon_data(const PeakonParams& p, double delta);
// samples of the closed form; sets *unresolved when delta < 2h
GridFunction mollified_peakon(const PeakonParams& p, double delta, const Grid& g, bool* unresolved = nullptr);

GridFunction helmholtz_inverse(const GridFunction& f);

// u_t = -[local + P d_x A + P B] with P = (1 - d_xx)^{-1}
GridFunction rhs(const GridFunction& u, const SolverConfig& cfg);
// one RK4 step of size cfg.dt (negative dt integrates backwards)
GridFunction step_rk4(const GridFunction& u, const SolverConfig& cfg);

struct CharacteristicTrack {
  std::vector<double> seeds;
  std::vector<std::vector<double>> paths;   // [record][seed]
  std::vector<std::vector<double>> m_along; // [record][seed]
  double min_m_ratio = 0.0;                 // min over records of min m / max |m|
  bool ordered = true;
  bool flagged = false;
};

struct TrajectoryRecord {
  std::vector<double> times, H1_series, H2_series, crest_positions, M_series;
  std::vector<double> min_u_series, min_cone_series, min_ux_series, min_m_series;
  std::vector<double> orbit_distance_series;
  GridFunction final_state;
  RunStatus status = RunStatus::completed;
  std::string message;
  double cfl_number = 0.0;
  bool cfl_ok = true;
  long steps = 0;
  int particles = 0;
  CharacteristicTrack characteristics;
};

TrajectoryRecord run(const InitialData& u0, const SolverConfig& cfg);
TrajectoryRecord run(const GridFunction& u0, const SolverConfig& cfg);

// slope of the unwrapped crest path over times >= t_from
double measure_speed(const TrajectoryRecord& rec, double t_from = 0.0);

}  // namespace hoch
