#pragma once

#include <utility>

namespace hoch {

struct PeakonParams {
  int n = 1;
  double a = 1.0;
  double c = 1.0;
  double x0 = 0.0;
};

// c filled in from the exact speed constant
PeakonParams make_peakon(int n, double a, double x0 = 0.0);
// throws if a <= 0 or c disagrees with the speed relation beyond 1e-12 relative
void validate(const PeakonParams& p);

double crest(const PeakonParams& p, double t);
double eval_peakon(const PeakonParams& p, double t, double x);
// 0 at the crest
double eval_peakon_dx(const PeakonParams& p, double t, double x);

double peakon_H1(const PeakonParams& p);
double peakon_H2(const PeakonParams& p);

// (sup |u|, sqrt(H1)/sqrt(2)); equal for a peakon
std::pair<double, double> sobolev_sharpness(const PeakonParams& p);

}  // namespace hoch
