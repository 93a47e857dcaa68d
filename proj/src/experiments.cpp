#include "hoch/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hoch/exact_comb.hpp"
#include "hoch/functionals.hpp"
#include "hoch/particles.hpp"
#include "hoch/weak.hpp"

namespace hoch {

void ExperimentResult::fail(const std::string& what) {
  ok = false;
  violations.push_back(what);
}

void write_outputs(const ExperimentResult& r, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (const auto& [name, text] : r.csv_files) {
    std::ofstream f(fs::path(dir) / name);
    if (!f) throw std::runtime_error("cannot write " + name);
    f << text;
  }
  nlohmann::json j = r.summary;
  j["schema"] = kSchemaVersion;
  j["kind"] = r.kind;
  j["ok"] = r.ok;
  j["violations"] = r.violations;
  std::ofstream f(fs::path(dir) / (r.kind + ".json"));
  if (!f) throw std::runtime_error("cannot write " + r.kind + ".json");
  f << j.dump(2) << "\n";
}

namespace {

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_rel_drift(const std::vector<double>& series) {
  if (series.empty()) return std::numeric_limits<double>::quiet_NaN();
  double worst = 0.0;
  for (double v : series) worst = std::max(worst, std::abs(v - series.front()));
  return worst / std::abs(series.front());
}

double json_number(double v) { return std::isfinite(v) ? v : (v > 0 ? 1e308 : -1e308); }

nlohmann::json config_json(const SolverConfig& c) {
  return {{"n", c.n},
          {"L", c.grid.L},
          {"N", c.grid.N},
          {"dt", c.dt},
          {"t_end", c.t_end},
          {"scheme", to_string(c.scheme)},
          {"deriv_scheme", to_string(c.deriv_scheme)},
          {"dealias", c.dealias},
          {"filter_strength", c.filter_strength},
          {"particles", c.particles},
          {"record_every", c.record_every}};
}

std::string trajectory_csv(const TrajectoryRecord& rec) {
  std::ostringstream s;
  s << "t,H1,H2,crest,min_ux\n";
  for (size_t i = 0; i < rec.times.size(); ++i)
    s << num(rec.times[i]) << "," << num(rec.H1_series[i]) << "," << num(rec.H2_series[i]) << ","
      << num(rec.crest_positions[i]) << "," << num(rec.min_ux_series[i]) << "\n";
  return s.str();
}

double order_between(double coarse, double fine, double roundoff) {
  if (fine <= roundoff) return std::numeric_limits<double>::infinity();
  return std::log2(coarse / fine);
}

}  // namespace

ExperimentResult run_identities(int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min) throw std::domain_error("identities: need 1 <= n_min <= n_max");
  ExperimentResult r;
  r.kind = "identities";
  const auto t0 = std::chrono::steady_clock::now();
  nlohmann::json items = nlohmann::json::array();
  std::ostringstream csv;
  csv << "n,identity,kind,residual,pass\n";
  long count = 0;
  for (int n = n_min; n <= n_max; ++n) {
    for (const IdentityCheck& c : verify_all(n)) {
      items.push_back({{"n", c.n},
                       {"identity", c.identity},
                       {"inequality", c.inequality},
                       {"residual", c.residual.str()},
                       {"pass", c.pass}});
      csv << c.n << "," << c.identity << "," << (c.inequality ? "inequality" : "equality") << ","
          << c.residual.str() << "," << (c.pass ? 1 : 0) << "\n";
      if (!c.pass) r.fail("n=" + std::to_string(n) + " " + c.identity + " residual " + c.residual.str());
      ++count;
    }
  }
  r.summary = {{"n_min", n_min}, {"n_max", n_max}, {"checks", count}, {"items", items},
               {"seconds", seconds_since(t0)}};
  r.csv_files.emplace_back("identities.csv", csv.str());
  return r;
}

ConserveResult run_conserve(const ConserveSpec& spec) {
  if (spec.levels < 1) throw std::domain_error("conserve: levels >= 1");
  ConserveResult out;
  ExperimentResult& r = out.report;
  r.kind = "conserve";
  const PeakonParams p = make_peakon(spec.cfg.n, spec.a);
  const InitialData u0 = mollified_peakon_data(p, spec.delta);

  std::vector<std::future<std::pair<ConserveLevel, TrajectoryRecord>>> jobs;
  for (int l = 0; l < spec.levels; ++l) {
    SolverConfig c = spec.cfg;
    const long f = 1L << l;
    c.dt = spec.cfg.dt / f;
    c.record_every = spec.cfg.record_every * static_cast<int>(f);
    if (c.scheme == Scheme::spectral)
      c.grid = make_grid(spec.cfg.grid.L, spec.cfg.grid.N * f);
    else
      c.particles = spec.cfg.particles * static_cast<int>(f);
    jobs.push_back(std::async(std::launch::async, [c, &u0] {
      const auto t0 = std::chrono::steady_clock::now();
      TrajectoryRecord rec = run(u0, c);
      ConserveLevel lv;
      lv.N = c.grid.N;
      lv.particles = c.scheme == Scheme::lagrangian ? c.particles : 0;
      lv.dt = c.dt;
      lv.status = rec.status;
      lv.t_final = rec.times.empty() ? 0.0 : rec.times.back();
      lv.drift_H1 = max_rel_drift(rec.H1_series);
      lv.drift_H2 = max_rel_drift(rec.H2_series);
      lv.seconds = seconds_since(t0);
      return std::make_pair(lv, std::move(rec));
    }));
  }

  std::ostringstream csv;
  csv << "level,scheme,N,particles,dt,status,t_final,drift_H1,drift_H2,seconds\n";
  nlohmann::json levels = nlohmann::json::array();
  for (int l = 0; l < spec.levels; ++l) {
    auto [lv, rec] = jobs[l].get();
    if (l == 0) r.csv_files.emplace_back("conserve_trajectory.csv", trajectory_csv(rec));
    out.levels.push_back(lv);
    csv << l << "," << to_string(spec.cfg.scheme) << "," << lv.N << "," << lv.particles << "," << num(lv.dt) << ","
        << to_string(lv.status) << "," << num(lv.t_final) << "," << num(lv.drift_H1) << "," << num(lv.drift_H2)
        << "," << num(lv.seconds) << "\n";
    levels.push_back({{"level", l}, {"N", lv.N}, {"particles", lv.particles}, {"dt", lv.dt},
                      {"status", to_string(lv.status)}, {"message", rec.message}, {"t_final", lv.t_final},
                      {"drift_H1", json_number(lv.drift_H1)}, {"drift_H2", json_number(lv.drift_H2)},
                      {"seconds", lv.seconds}});
    if (lv.status != RunStatus::completed)
      r.fail("level " + std::to_string(l) + " ended with status " + to_string(lv.status) + ": " + rec.message);
  }

  const ConserveLevel& base = out.levels.front();
  if (!(base.drift_H1 <= spec.drift_tol)) r.fail("H1 drift " + num(base.drift_H1) + " above " + num(spec.drift_tol));
  if (!(base.drift_H2 <= spec.drift_tol)) r.fail("H2 drift " + num(base.drift_H2) + " above " + num(spec.drift_tol));

  out.order_H1 = out.order_H2 = std::numeric_limits<double>::infinity();
  if (spec.levels >= 2) {
    for (size_t l = 1; l < out.levels.size(); ++l) {
      const ConserveLevel &c = out.levels[l - 1], &f = out.levels[l];
      if (c.drift_H1 > spec.roundoff) out.order_H1 = std::min(out.order_H1, order_between(c.drift_H1, f.drift_H1, spec.roundoff));
      if (c.drift_H2 > spec.roundoff) out.order_H2 = std::min(out.order_H2, order_between(c.drift_H2, f.drift_H2, spec.roundoff));
    }
    if (!(out.order_H1 >= spec.min_order - spec.order_slack)) r.fail("H1 drift order " + num(out.order_H1) + " below " + num(spec.min_order));
    if (!(out.order_H2 >= spec.min_order - spec.order_slack)) r.fail("H2 drift order " + num(out.order_H2) + " below " + num(spec.min_order));
  }

  r.summary = {{"config", config_json(spec.cfg)},
               {"a", spec.a},
               {"delta", spec.delta},
               {"levels", levels},
               {"drift_tol", spec.drift_tol},
               {"order_H1", json_number(out.order_H1)},
               {"order_H2", json_number(out.order_H2)},
               {"roundoff", spec.roundoff}};
  r.csv_files.emplace_back("conserve.csv", csv.str());
  return out;
}

SpeedResult run_speed(const SpeedSpec& spec) {
  SpeedResult out;
  ExperimentResult& r = out.report;
  r.kind = "speed";
  const PeakonParams p = make_peakon(spec.cfg.n, spec.a);
  out.expected = p.c;
  const TrajectoryRecord rec = run(mollified_peakon_data(p, spec.delta), spec.cfg);
  out.status = rec.status;
  if (rec.status != RunStatus::completed) r.fail("run ended with status " + to_string(rec.status) + ": " + rec.message);
  try {
    out.measured = measure_speed(rec, spec.t_from);
    out.rel_error = std::abs(out.measured - out.expected) / out.expected;
    if (!(out.rel_error <= spec.tol))
      r.fail("speed " + num(out.measured) + " differs from " + num(out.expected) + " by " + num(out.rel_error));
  } catch (const std::exception& e) {
    out.measured = std::numeric_limits<double>::quiet_NaN();
    out.rel_error = std::numeric_limits<double>::quiet_NaN();
    r.fail(std::string("speed fit rejected: ") + e.what());
  }
  r.summary = {{"config", config_json(spec.cfg)},
               {"a", spec.a},
               {"delta", spec.delta},
               {"status", to_string(rec.status)},
               {"message", rec.message},
               {"expected", out.expected},
               {"measured", std::isfinite(out.measured) ? nlohmann::json(out.measured) : nlohmann::json(nullptr)},
               {"rel_error", std::isfinite(out.rel_error) ? nlohmann::json(out.rel_error) : nlohmann::json(nullptr)},
               {"tol", spec.tol}};
  std::ostringstream csv;
  csv << "n,a,expected,measured,rel_error,status\n"
      << spec.cfg.n << "," << num(spec.a) << "," << num(out.expected) << "," << num(out.measured) << ","
      << num(out.rel_error) << "," << to_string(rec.status) << "\n";
  r.csv_files.emplace_back("speed.csv", csv.str());
  r.csv_files.emplace_back("speed_trajectory.csv", trajectory_csv(rec));
  return out;
}

WeakcheckResult run_weakcheck(const WeakcheckSpec& spec) {
  if (spec.levels < 2) throw std::domain_error("weakcheck: levels >= 2");
  WeakcheckResult out;
  ExperimentResult& r = out.report;
  r.kind = "weakcheck";
  const PeakonParams p = make_peakon(spec.n, spec.a);
  const WeakCandidate cand = peakon_candidate(p, p.c);

  std::vector<TestFunction> bumps;
  for (double off : spec.offsets)
    for (double w : spec.widths) bumps.push_back({p.c * spec.t_center + off, w, spec.t_center, spec.t_width});

  std::vector<std::future<std::vector<WeakResidual>>> jobs;
  for (const TestFunction& phi : bumps)
    jobs.push_back(std::async(std::launch::async, [&, phi] {
      std::vector<WeakResidual> res;
      for (int l = 1; l <= spec.levels; ++l) res.push_back(weak_residual(cand, spec.n, phi, l));
      return res;
    }));

  nlohmann::json items = nlohmann::json::array();
  std::ostringstream csv;
  csv << "center,width,t_center,t_width,level,residual,richardson,scale\n";
  for (size_t b = 0; b < bumps.size(); ++b) {
    const TestFunction& phi = bumps[b];
    const std::vector<WeakResidual> res = jobs[b].get();
    for (const WeakResidual& w : res) {
      out.rows.push_back({phi.center, phi.width, phi.t_center, phi.t_width, w.level, w.value, w.richardson, w.scale});
      csv << num(phi.center) << "," << num(phi.width) << "," << num(phi.t_center) << "," << num(phi.t_width) << ","
          << w.level << "," << num(w.value) << "," << num(w.richardson) << "," << num(w.scale) << "\n";
      items.push_back({{"phi_params",
                        {{"center", phi.center}, {"width", phi.width}, {"t_center", phi.t_center}, {"t_width", phi.t_width}}},
                       {"level", w.level},
                       {"residual", w.value},
                       {"richardson", w.richardson},
                       {"scale", w.scale}});
    }
    const WeakResidual& top = res.back();
    const double order = observed_order(res[res.size() - 2], top);
    out.orders.push_back(order);
    const std::string tag = "bump(center=" + num(phi.center) + ", width=" + num(phi.width) + ")";
    if (!(std::abs(top.value) <= spec.tol * top.scale))
      r.fail(tag + ": |residual| " + num(std::abs(top.value)) + " above " + num(spec.tol) + "*scale");
    if (!(order >= spec.min_order)) r.fail(tag + ": observed order " + num(order));
  }

  // wrong-speed control on a bump off the crest line
  const TestFunction ctrl{p.c * spec.t_center + spec.control_offset, 1.0, spec.t_center, spec.t_width};
  auto control = [&](double factor, double& value, double& rich) {
    const WeakResidual w = weak_residual(peakon_candidate(p, factor * p.c), spec.n, ctrl, spec.levels);
    value = w.value;
    rich = w.richardson;
    if (!(std::abs(w.value) > 100.0 * std::abs(w.richardson) && std::abs(w.value) > spec.tol * w.scale))
      r.fail("wrong-speed control x" + num(factor) + " does not converge to a nonzero limit");
  };
  control(1.0 + spec.speed_error, out.wrong_fast, out.wrong_fast_rich);
  control(1.0 - spec.speed_error, out.wrong_slow, out.wrong_slow_rich);
  if (!(out.wrong_fast * out.wrong_slow < 0)) r.fail("wrong-speed residual sign does not flip with the speed error");

  nlohmann::json orders = nlohmann::json::array();
  for (double o : out.orders) orders.push_back(json_number(o));
  r.summary = {{"n", spec.n},
               {"a", spec.a},
               {"levels", spec.levels},
               {"tol", spec.tol},
               {"items", items},
               {"orders", orders},
               {"wrong_speed",
                {{"center", ctrl.center},
                 {"fast", {{"factor", 1.0 + spec.speed_error}, {"residual", out.wrong_fast}, {"richardson", out.wrong_fast_rich}}},
                 {"slow", {{"factor", 1.0 - spec.speed_error}, {"residual", out.wrong_slow}, {"richardson", out.wrong_slow_rich}}}}}};
  r.csv_files.emplace_back("weakcheck.csv", csv.str());
  return out;
}

double perturbation_norm(const PeakonParams& q, double delta) {
  const MollifiedPeakon mp{q, delta};
  const double lo = q.x0 - 40.0, hi = q.x0 + 40.0;
  const int pts = 400000;
  const double h = (hi - lo) / pts;
  NeumaierSum acc;
  // the integrand is smooth, so the trapezoid rule converges spectrally
  for (int i = 0; i <= pts; ++i) {
    const double x = lo + i * h, v = mp.value(x), d = mp.dx(x);
    acc.add((i == 0 || i == pts ? 0.5 : 1.0) * (v * v + d * d) * h);
  }
  return std::sqrt(acc.value());
}

double fitted_exponent(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::domain_error("fitted_exponent: need two aligned points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0 && y[i] > 0)) throw std::domain_error("fitted_exponent: positive data only");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = m * sxx - sx * sx;
  if (!(std::abs(den) > 0)) throw std::domain_error("fitted_exponent: degenerate abscissae");
  return (m * sxy - sx * sy) / den;
}

StabilityResult run_stability(const StabilitySpec& spec) {
  StabilityResult out;
  ExperimentResult& r = out.report;
  r.kind = "stability";
  const int n = spec.cfg.n;
  const PeakonParams p = make_peakon(n, spec.a);
  for (double e : spec.eps) {
    if (!(e > 0)) throw std::domain_error("stability: eps must be positive");
    if (!(e < (spec.gamma - 2.0 * std::sqrt(2.0)) * spec.a)) r.fail("eps " + num(e) + " violates eps < (gamma - 2 sqrt 2) a");
  }
  if (!(spec.gamma > 2.0 * std::sqrt(2.0))) r.fail("gamma must exceed 2 sqrt 2");

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> jitter(-2.0, 2.0);

  SolverConfig cfg = spec.cfg;
  cfg.orbit_amplitude = spec.a;
  const InitialData base = mollified_peakon_data(p, spec.delta);

  struct Job {
    double eps;
    double pert_delta;
    double offset;
    int retries;
  };
  std::vector<double> eps_all;
  if (spec.baseline) eps_all.push_back(0.0);
  for (double e : spec.eps) eps_all.push_back(e);

  std::vector<Job> plan;
  for (double e : eps_all) plan.push_back({e, spec.pert_delta, spec.offset + (spec.randomize ? jitter(rng) : 0.0), 0});

  auto build = [&](Job& job) {
    if (job.eps == 0.0) return base;
    for (;; ++job.retries) {
      const PeakonParams q = make_peakon(n, 1.0, p.x0 - job.offset);
      const InitialData bump = scaled(mollified_peakon_data(q, job.pert_delta), job.eps / perturbation_norm(q, job.pert_delta));
      const InitialData u0 = base + bump;
      bool ok = true;
      try {
        const ParticleState s = particles_from_momentum(u0.momentum, cfg.particles, cfg.particle_floor);
        ok = *std::min_element(s.w.begin(), s.w.end()) >= -1e-8;
      } catch (const std::domain_error&) {
        ok = false;
      }
      if (ok) return u0;
      if (job.retries >= 5) throw std::runtime_error("perturbation momentum stays negative after 5 retries");
      job.pert_delta *= 0.5;
    }
  };

  std::vector<std::future<TrajectoryRecord>> jobs;
  std::vector<InitialData> data;
  for (Job& job : plan) data.push_back(build(job));
  for (size_t i = 0; i < plan.size(); ++i)
    jobs.push_back(std::async(std::launch::async, [&, i] { return run(data[i], cfg); }));

  nlohmann::json runs = nlohmann::json::array();
  std::ostringstream csv;
  csv << "eps,status,initial_distance,sup_distance,ratio_sqrt,ratio_quarter,max_crest_offset\n";
  std::vector<double> fit_eps, fit_d;
  for (size_t i = 0; i < plan.size(); ++i) {
    const TrajectoryRecord rec = jobs[i].get();
    const double e = plan[i].eps;
    double sup = 0.0, crest_off = 0.0;
    for (double d : rec.orbit_distance_series) sup = std::max(sup, d);
    for (size_t k = 0; k < rec.times.size(); ++k) {
      double dx = rec.crest_positions[k] - crest(p, rec.times[k]);
      dx -= cfg.grid.L * std::round(dx / cfg.grid.L);
      crest_off = std::max(crest_off, std::abs(dx));
    }
    const double d0 = rec.orbit_distance_series.empty() ? 0.0 : rec.orbit_distance_series.front();
    if (e == 0.0) {
      out.floor = sup;
    } else {
      out.epsilons.push_back(e);
      out.sup_distances.push_back(sup);
      out.ratios.push_back(sup / std::sqrt(e));
      out.quarter_ratios.push_back(sup / std::pow(e, 0.25));
      out.initial_distances.push_back(d0);
      out.crest_offsets.push_back(crest_off);
      out.statuses.push_back(rec.status);
      out.messages.push_back(rec.message);
      if (rec.status == RunStatus::completed) {
        fit_eps.push_back(e);
        fit_d.push_back(sup);
      } else {
        r.fail("eps " + num(e) + " excluded: " + to_string(rec.status) + " " + rec.message);
      }
    }
    csv << num(e) << "," << to_string(rec.status) << "," << num(d0) << "," << num(sup) << ","
        << (e > 0 ? num(sup / std::sqrt(e)) : "") << "," << (e > 0 ? num(sup / std::pow(e, 0.25)) : "") << ","
        << num(crest_off) << "\n";
    runs.push_back({{"eps", e},
                    {"status", to_string(rec.status)},
                    {"message", rec.message},
                    {"perturbation_delta", plan[i].pert_delta},
                    {"perturbation_offset", plan[i].offset},
                    {"retries", plan[i].retries},
                    {"t_final", rec.times.empty() ? 0.0 : rec.times.back()},
                    {"initial_distance", d0},
                    {"sup_distance", sup},
                    {"max_crest_offset", crest_off}});
  }

  if (fit_eps.empty()) {
    r.fail("every perturbed run was excluded");
    out.exponent = std::numeric_limits<double>::quiet_NaN();
  } else {
    for (size_t i = 0; i < fit_d.size(); ++i)
      if (!std::isfinite(fit_d[i])) r.fail("sup distance not finite at eps " + num(fit_eps[i]));
    for (size_t i = 1; i < fit_d.size(); ++i)
      if (fit_d[i] < fit_d[i - 1]) r.fail("sup distance decreases between eps " + num(fit_eps[i - 1]) + " and " + num(fit_eps[i]));
    if (fit_eps.size() >= 2) {
      out.exponent = fitted_exponent(fit_eps, fit_d);
      if (!(out.exponent >= spec.exponent_lo && out.exponent <= spec.exponent_hi))
        r.fail("fitted exponent " + num(out.exponent) + " outside [" + num(spec.exponent_lo) + ", " + num(spec.exponent_hi) + "]");
      double qmin = std::numeric_limits<double>::infinity(), qmax = 0.0;
      for (size_t i = 0; i < fit_eps.size(); ++i) {
        const double q = fit_d[i] / std::pow(fit_eps[i], 0.25);
        qmin = std::min(qmin, q);
        qmax = std::max(qmax, q);
      }
      if (!(qmax <= spec.ratio_spread * qmin)) r.fail("sup d / eps^(1/4) varies by " + num(qmax / qmin));
    } else {
      out.exponent = std::numeric_limits<double>::quiet_NaN();
      r.fail("fewer than two usable runs for the exponent fit");
    }
  }

  r.summary = {{"config", config_json(cfg)},
               {"a", spec.a},
               {"delta", spec.delta},
               {"gamma", spec.gamma},
               {"seed", spec.seed},
               {"randomize", spec.randomize},
               {"floor", out.floor},
               {"exponent", std::isfinite(out.exponent) ? nlohmann::json(out.exponent) : nlohmann::json(nullptr)},
               {"epsilons", out.epsilons},
               {"sup_distances", out.sup_distances},
               {"ratios", out.ratios},
               {"quarter_ratios", out.quarter_ratios},
               {"initial_distances", out.initial_distances},
               {"runs", runs}};
  r.csv_files.emplace_back("stability.csv", csv.str());
  return out;
}

ExperimentResult run_peakon_table(const std::vector<int>& ns, const std::vector<double>& as) {
  ExperimentResult r;
  r.kind = "peakon-table";
  std::ostringstream csv;
  csv << "n,a,c,H1,H2,c1,two_minus_c1\n";
  nlohmann::json rows = nlohmann::json::array();
  for (int n : ns) {
    const CoeffTable t = build_coeff_table(n);
    for (double a : as) {
      const PeakonParams p = make_peakon(n, a);
      const double h1 = peakon_H1(p), h2 = peakon_H2(p);
      if (std::abs(h1 - 2 * a * a) > 1e-14 * a * a) r.fail("H1 differs from 2a^2 at n=" + std::to_string(n));
      csv << n << "," << num(a) << "," << num(p.c) << "," << num(h1) << "," << num(h2) << "," << t.c1.str() << ","
          << t.two_minus_c1.str() << "\n";
      rows.push_back({{"n", n}, {"a", a}, {"c", p.c}, {"H1", h1}, {"H2", h2}, {"c1", t.c1.str()},
                      {"two_minus_c1", t.two_minus_c1.str()}});
    }
  }
  r.summary = {{"rows", rows}};
  r.csv_files.emplace_back("peakon-table.csv", csv.str());
  return r;
}

}  // namespace hoch
