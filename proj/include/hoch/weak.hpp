#pragma once

#include <functional>
#include <vector>

#include "hoch/peakon.hpp"

namespace hoch {

// exp(-1/(1 - s^2)) on (-1, 1), zero outside
double bump(double s);
double bump_d(double s);

struct TestFunction {
  double center = 0.0;
  double width = 1.0;
  double t_center = 1.0;
  double t_width = 0.5;

  double value(double t, double x) const;
  double dt(double t, double x) const;
  double dx(double t, double x) const;
};

// candidate solution u(t, x) with its x-derivative and the x-locations of its
// kinks at each time
struct WeakCandidate {
  std::function<double(double, double)> u, ux;
  std::function<std::vector<double>(double)> kinks;
};

// a e^{-|x - x0 - speed t|}
WeakCandidate peakon_candidate(const PeakonParams& p, double speed);

// integral of 1/2 e^{-|x-y|} f(y) over |y - x| <= window, split at y = x and
// at the given kinks of f
double kernel_convolve(const std::function<double(double)>& f, double x, const std::vector<double>& kinks = {},
                       double window = 40.0);

struct WeakTerms {
  double time = 0, flux = 0, local = 0, nonlocal_a = 0, nonlocal_b = 0, initial = 0;
};

struct WeakResidual {
  double value = 0.0;
  int level = 0;
  double richardson = 0.0;  // value(level) - value(level - 1)
  double scale = 0.0;       // sum of absolute term magnitudes
  WeakTerms terms;
};

// tensor 12-point Gauss-Legendre quadrature, 2^level cells per direction and per
// kink-free x-interval
WeakResidual weak_residual(const WeakCandidate& u, int n, const TestFunction& phi, int level);

// observed order from the last two levels with residual above the round-off floor
// (returns +inf when the finer level is already at the floor)
double observed_order(const WeakResidual& coarse, const WeakResidual& fine, double floor_rel = 1e-13);

}  // namespace hoch
