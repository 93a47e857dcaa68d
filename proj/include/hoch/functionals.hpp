#pragma once

#include <functional>
#include <vector>

#include "hoch/exact_comb.hpp"
#include "hoch/grid.hpp"
#include "hoch/peakon.hpp"

namespace hoch {

// exact-comb constants converted to double once
struct NumericCoeffs {
  int n = 1;
  std::vector<double> local, A, B, h2;
  std::vector<double> c, d;  // index 0 holds 1, index k holds c_k / d_k
  double c1 = 0.0;
  double two_minus_c1 = 2.0;
};

const NumericCoeffs& numeric_coeffs(int n);

// samples of u and u_x on a common grid
struct Profile {
  Grid grid;
  std::vector<double> u, ux;
};

Profile make_profile(const GridFunction& u, DerivScheme scheme = DerivScheme::spectral);
Profile sample_profile(const Grid& g, const std::function<double(double)>& f,
                       const std::function<double(double)>& fx);
Profile peakon_profile(const Grid& g, const PeakonParams& p, double t = 0.0);

double H1_density(double u, double ux);
double H2_density(const NumericCoeffs& nc, double u, double ux);

double H1(const Profile& p);
double H2(const Profile& p, int n);
double H1(const GridFunction& u, DerivScheme scheme = DerivScheme::spectral);
double H2(const GridFunction& u, int n, DerivScheme scheme = DerivScheme::spectral);
double H2_hat(const GridFunction& u, int n, DerivScheme scheme = DerivScheme::spectral);

// same functionals with the quadrature split at xi (for profiles kinked there)
double H1_split(const Profile& p, double xi);
double H2_split(const Profile& p, int n, double xi);

enum class CrestMode { automatic, smooth, kink };

struct Crest {
  double x = 0.0;
  double M = 0.0;
  long index = 0;
  bool kinked = false;
  bool tie = false;
};

Crest locate_crest(const Profile& p, CrestMode mode = CrestMode::automatic);

// g = u - u_x left of xi, u + u_x right of xi
std::vector<double> g_split(const Profile& p, double xi);
// throws on u <= 0
std::vector<double> h_func(const Profile& p, double xi, int n);

double g_sq_integral(const Profile& p, double xi);
double hg_sq_integral(const Profile& p, double xi, int n);

// min over the grid of u - |u_x|
double cone_margin(const Profile& p);
bool cone_ok(const Profile& p, double tol = 1e-10);

struct InequalityResult {
  double residual = 0.0;
  double scale = 0.0;
  bool guaranteed = false;  // cone condition holds
};

InequalityResult stability_inequality_residual(const Profile& p, int n, CrestMode mode = CrestMode::automatic);

struct HBoundResult {
  double min_margin = 0.0;  // min of (2 - c1)/2 u^{2n-1} - h over cone points
  long points = 0;
};

HBoundResult h_bound_margin(const Profile& p, double xi, int n, double cone_tol = 1e-10);

struct FunctionalReport {
  double H1 = 0, H2 = 0, H2_hat = 0, M = 0, argmax = 0;
  double g_sq_integral = 0, hg_sq_integral = 0, ineq33_residual = 0;
  bool cone = false;
  bool tie = false;
};

FunctionalReport functional_report(const GridFunction& u, int n, DerivScheme scheme = DerivScheme::spectral);

struct OrbitDistance {
  double d = 0.0;           // direct minimization
  double xi = 0.0;
  double d_identity = 0.0;  // H1(u) - H1(phi) + 4a(a - u(xi)) at xi = argmax
  double xi_identity = 0.0;
  double rel_gap = 0.0;
};

// squared H1 distance between u and the peakon of amplitude a centred at xi
double h1_distance_sq(const Profile& p, double a, double xi);
OrbitDistance orbit_distance(const Profile& p, double a, CrestMode mode = CrestMode::automatic);

struct ContinuityProbe {
  double eps = 0.0;
  double dH1 = 0.0, dH2 = 0.0;
  double h1_ratio = 0.0, h2_ratio = 0.0;
};

// eps measured as the H1 norm of u - phi_c (phi_c at p.x0, no shift)
ContinuityProbe perturbation_continuity_probe(const Profile& u, const PeakonParams& p);

}  // namespace hoch
