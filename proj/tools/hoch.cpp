#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "hoch/experiments.hpp"

using namespace hoch;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("range " + text + " is empty");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    out.push_back(std::stoi(text.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct SolverFlags {
  SolverConfig cfg;
  double L = 40.0;
  long N = 2048;
  std::string scheme = "spectral";
  std::string deriv = "spectral";
  double a = 1.0;
  double delta = 0.2;

  void add(CLI::App* app) {
    app->add_option("--n", cfg.n, "equation index n >= 1")->check(CLI::PositiveNumber);
    app->add_option("--a", a, "peakon amplitude")->check(CLI::PositiveNumber);
    app->add_option("--delta", delta, "mollification width of the initial peakon")->check(CLI::PositiveNumber);
    app->add_option("--L", L, "period length")->check(CLI::PositiveNumber);
    app->add_option("--N", N, "grid points")->check(CLI::PositiveNumber);
    app->add_option("--dt", cfg.dt, "time step")->check(CLI::PositiveNumber);
    app->add_option("--t-end", cfg.t_end, "final time")->check(CLI::PositiveNumber);
    app->add_option("--scheme", scheme, "spectral or lagrangian")->check(CLI::IsMember({"spectral", "lagrangian"}));
    app->add_option("--deriv", deriv, "derivative scheme: spectral, central2, central4")
        ->check(CLI::IsMember({"spectral", "central2", "central4"}));
    app->add_flag("--dealias", cfg.dealias, "2/3 dealiasing");
    app->add_option("--filter-strength", cfg.filter_strength, "exponential filter strength (0 disables)");
    app->add_option("--breaking-threshold", cfg.breaking_threshold, "wave-breaking threshold on -min u_x");
    app->add_option("--record-every", cfg.record_every, "steps between diagnostics")->check(CLI::PositiveNumber);
    app->add_option("--particles", cfg.particles, "particle count (lagrangian)")->check(CLI::PositiveNumber);
  }

  SolverConfig finish() const {
    SolverConfig c = cfg;
    c.grid = make_grid(L, N);
    c.scheme = parse_solver_scheme(scheme);
    c.deriv_scheme = parse_scheme(deriv);
    return c;
  }
};

int report(const ExperimentResult& r, const std::string& dir) {
  write_outputs(r, dir);
  std::cout << r.kind << ": " << (r.ok ? "ok" : "FAILED") << " (outputs in " << dir << ")\n";
  for (const std::string& v : r.violations) std::cout << "  violation: " << v << "\n";
  return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hoch: simulation and verification experiments for the HOCH peakon equation"};
  app.require_subcommand(1);
  std::string out_dir = "hoch-out";
  app.add_option("--output-dir", out_dir, "directory for CSV and JSON outputs");

  int n_min = 1, n_max = 8;
  auto* ids = app.add_subcommand("identities", "exact rational identity sweep");
  ids->set_config("--config");
  ids->add_option("--n-min", n_min, "smallest n")->check(CLI::PositiveNumber);
  ids->add_option("--n-max", n_max, "largest n")->check(CLI::PositiveNumber);

  SolverFlags cons_flags;
  ConserveSpec cons;
  auto* conserve = app.add_subcommand("conserve", "H1/H2 drift with a refinement study");
  conserve->set_config("--config");
  cons_flags.add(conserve);
  conserve->add_option("--levels", cons.levels, "refinement levels (dt and resolution halved per level)")
      ->check(CLI::PositiveNumber);
  conserve->add_option("--drift-tol", cons.drift_tol, "allowed relative drift at the base level");

  SolverFlags speed_flags;
  SpeedSpec sp;
  auto* speed = app.add_subcommand("speed", "measured crest speed against the exact wave speed");
  speed->set_config("--config");
  speed_flags.add(speed);
  speed->add_option("--t-from", sp.t_from, "fit crest positions from this time on");
  speed->add_option("--tol", sp.tol, "allowed relative speed error");

  WeakcheckSpec wk;
  auto* weak = app.add_subcommand("weakcheck", "weak-form residual of the exact peakon");
  weak->set_config("--config");
  weak->add_option("--n", wk.n, "equation index")->check(CLI::PositiveNumber);
  weak->add_option("--a", wk.a, "peakon amplitude")->check(CLI::PositiveNumber);
  weak->add_option("--levels", wk.levels, "finest quadrature level (>= 2)")->check(CLI::Range(2, 12));
  weak->add_option("--tol", wk.tol, "allowed |residual| / scale at the finest level");

  SolverFlags stab_flags;
  stab_flags.scheme = "lagrangian";
  stab_flags.delta = 1e-4;
  stab_flags.cfg.n = 2;
  stab_flags.cfg.t_end = 10.0;
  StabilitySpec st;
  auto* stab = app.add_subcommand("stability", "orbit distance under H1-small perturbations");
  stab->set_config("--config");
  stab_flags.add(stab);
  stab->add_option("--eps", st.eps, "perturbation sizes in H1 norm")->delimiter(',');
  stab->add_option("--gamma", st.gamma, "gamma in the stability hypothesis");
  stab->add_option("--offset", st.offset, "distance of the perturbation behind the crest");
  stab->add_option("--pert-delta", st.pert_delta, "mollification width of the perturbation");
  stab->add_option("--seed", st.seed, "seed for randomized placement");
  stab->add_flag("--randomize", st.randomize, "jitter the perturbation placement");

  std::string table_n = "1..4", table_a = "1,2";
  auto* table = app.add_subcommand("peakon-table", "closed-form peakon speeds and functionals");
  table->set_config("--config");
  table->add_option("--n", table_n, "list or range of n, e.g. 1..4");
  table->add_option("--a", table_a, "list of amplitudes, e.g. 1,2");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ids) return report(run_identities(n_min, n_max), out_dir);
    if (*conserve) {
      cons.cfg = cons_flags.finish();
      cons.a = cons_flags.a;
      cons.delta = cons_flags.delta;
      return report(run_conserve(cons).report, out_dir);
    }
    if (*speed) {
      sp.cfg = speed_flags.finish();
      sp.a = speed_flags.a;
      sp.delta = speed_flags.delta;
      return report(run_speed(sp).report, out_dir);
    }
    if (*weak) return report(run_weakcheck(wk).report, out_dir);
    if (*stab) {
      st.cfg = stab_flags.finish();
      st.a = stab_flags.a;
      st.delta = stab_flags.delta;
      return report(run_stability(st).report, out_dir);
    }
    if (*table) {
      std::vector<double> as;
      for (const std::string& s : CLI::detail::split(table_a, ',')) as.push_back(std::stod(s));
      return report(run_peakon_table(parse_int_list(table_n), as), out_dir);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
