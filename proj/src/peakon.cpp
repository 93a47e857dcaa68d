#include "hoch/peakon.hpp"

#include <cmath>
#include <stdexcept>

#include "hoch/exact_comb.hpp"

namespace hoch {

PeakonParams make_peakon(int n, double a, double x0) {
  if (!(a > 0)) throw std::domain_error("peakon amplitude must be positive");
  return PeakonParams{n, a, wave_speed(n, a), x0};
}

void validate(const PeakonParams& p) {
  if (!(p.a > 0)) throw std::domain_error("peakon amplitude must be positive");
  const double c = wave_speed(p.n, p.a);
  if (std::abs(p.c - c) > 1e-12 * std::abs(c))
    throw std::domain_error("peakon speed inconsistent with amplitude");
}

double crest(const PeakonParams& p, double t) { return p.x0 + p.c * t; }

double eval_peakon(const PeakonParams& p, double t, double x) {
  return p.a * std::exp(-std::abs(x - crest(p, t)));
}

double eval_peakon_dx(const PeakonParams& p, double t, double x) {
  const double s = x - crest(p, t);
  if (s == 0.0) return 0.0;
  return (s > 0 ? -1.0 : 1.0) * eval_peakon(p, t, x);
}

double peakon_H1(const PeakonParams& p) { return 2.0 * p.a * p.a; }

double peakon_H2(const PeakonParams& p) {
  return peakon_h2_factor(p.n).to_double() * std::pow(p.a, 2 * p.n + 1);
}

std::pair<double, double> sobolev_sharpness(const PeakonParams& p) {
  return {p.a, std::sqrt(peakon_H1(p)) / std::sqrt(2.0)};
}

}  // namespace hoch
