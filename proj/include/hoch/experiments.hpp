#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hoch/solver.hpp"

namespace hoch {

inline constexpr int kSchemaVersion = 1;

struct ExperimentResult {
  std::string kind;
  bool ok = true;
  std::vector<std::string> violations;
  nlohmann::json summary;
  // (file name, contents) pairs written next to <kind>.json
  std::vector<std::pair<std::string, std::string>> csv_files;

  void fail(const std::string& what);
};

// writes every CSV file plus <kind>.json into dir (created if missing)
void write_outputs(const ExperimentResult& r, const std::string& dir);

ExperimentResult run_identities(int n_min, int n_max);

struct ConserveSpec {
  SolverConfig cfg;
  double a = 1.0;
  double delta = 0.2;
  int levels = 3;
  double drift_tol = 1e-4;
  double min_order = 2.0;
  // an observed order this far below min_order still counts as min_order
  double order_slack = 0.05;
  // drifts below this are round-off and count as converged
  double roundoff = 1e-12;
};

struct ConserveLevel {
  long N = 0;
  int particles = 0;
  double dt = 0.0;
  RunStatus status = RunStatus::completed;
  double t_final = 0.0;
  double drift_H1 = 0.0, drift_H2 = 0.0;
  double seconds = 0.0;
};

struct ConserveResult {
  std::vector<ConserveLevel> levels;
  double order_H1 = 0.0, order_H2 = 0.0;
  ExperimentResult report;
};

ConserveResult run_conserve(const ConserveSpec& spec);

struct SpeedSpec {
  SolverConfig cfg;
  double a = 1.0;
  double delta = 0.2;
  double t_from = 0.0;
  double tol = 0.02;
};

struct SpeedResult {
  double expected = 0.0, measured = 0.0, rel_error = 0.0;
  RunStatus status = RunStatus::completed;
  ExperimentResult report;
};

SpeedResult run_speed(const SpeedSpec& spec);

struct WeakcheckSpec {
  int n = 1;
  double a = 1.0;
  int levels = 4;
  std::vector<double> offsets{-1.0, 0.3, 1.5};
  std::vector<double> widths{0.5, 1.0, 2.0};
  double t_center = 1.0;
  double t_width = 0.5;
  double tol = 1e-6;
  double min_order = 2.0;
  double speed_error = 0.1;
  // control bump for the wrong-speed runs, centred this far ahead of the crest
  double control_offset = 0.3;
};

struct WeakcheckRow {
  double center = 0, width = 0, t_center = 0, t_width = 0;
  int level = 0;
  double residual = 0, richardson = 0, scale = 0;
};

struct WeakcheckResult {
  std::vector<WeakcheckRow> rows;
  std::vector<double> orders;                      // per bump, last two levels
  double wrong_fast = 0.0, wrong_slow = 0.0;       // control residual at the top level
  double wrong_fast_rich = 0.0, wrong_slow_rich = 0.0;
  ExperimentResult report;
};

WeakcheckResult run_weakcheck(const WeakcheckSpec& spec);

struct StabilitySpec {
  SolverConfig cfg;
  double a = 1.0;
  double delta = 1e-4;
  std::vector<double> eps{0.01, 0.04, 0.09};
  double offset = 5.0;       // perturbation sits this far behind the crest
  double pert_delta = 0.2;   // mollification width of the perturbation
  double gamma = 4.0;
  bool randomize = false;
  std::uint64_t seed = 1;
  double exponent_lo = 0.2, exponent_hi = 0.6;
  double ratio_spread = 3.0;
  bool baseline = true;      // also run eps = 0 for the discretization floor
};

struct StabilityResult {
  std::vector<double> epsilons, sup_distances, ratios, quarter_ratios, initial_distances, crest_offsets;
  std::vector<RunStatus> statuses;
  std::vector<std::string> messages;
  double floor = 0.0;
  double exponent = 0.0;
  ExperimentResult report;
};

// H1 norm of the perturbation bump before scaling
double perturbation_norm(const PeakonParams& q, double delta);

StabilityResult run_stability(const StabilitySpec& spec);

ExperimentResult run_peakon_table(const std::vector<int>& ns, const std::vector<double>& as);

// least-squares slope of log y against log x
double fitted_exponent(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hoch
