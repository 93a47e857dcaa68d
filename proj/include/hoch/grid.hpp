#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace hoch {

// periodic [-L/2, L/2), x_j = -L/2 + j h
struct Grid {
  double L = 40.0;
  int N = 2048;

  double h() const { return L / N; }
  double x(long j) const { return -0.5 * L + static_cast<double>(j) * h(); }
  long wrap(long j) const { return ((j % N) + N) % N; }
};

Grid make_grid(double L, int N);

struct GridFunction {
  Grid grid;
  std::vector<double> v;

  double operator[](long j) const { return v[grid.wrap(j)]; }
};

GridFunction sample(const Grid& g, const std::function<double(double)>& f);
// samples of the periodic sum of f(x + kL) over |k| <= images
GridFunction sample_periodized(const Grid& g, const std::function<double(double)>& f, int images = 2);

enum class DerivScheme { spectral, central2, central4 };
DerivScheme parse_scheme(const std::string& name);
std::string to_string(DerivScheme s);

GridFunction derivative(const GridFunction& u, DerivScheme scheme);
GridFunction second_derivative(const GridFunction& u, DerivScheme scheme);

// k_j = 2 pi j / L, j = 0..N/2
std::vector<double> wavenumbers(const Grid& g);

using Spectrum = std::vector<std::complex<double>>;
// unnormalized forward transform (N/2 + 1 modes)
void rfft(const std::vector<double>& in, Spectrum& out);
// inverse including the 1/N factor
void irfft(const Spectrum& in, std::vector<double>& out, int N);

class NeumaierSum {
public:
  void add(double x);
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double compensated_sum(const std::vector<double>& v);
// periodic trapezoid
double integrate(const GridFunction& f);

// Integral over [A, B] of a smooth function known at the nodes x_j (j unwrapped,
// f(j) supplied by the caller). Fourth-order Gregory weights on the interior
// nodes, one-sided degree-5 extrapolation on the two partial cells, so the
// integrand may have kinks at A and B.
double segment_integral(const Grid& g, const std::function<double(long)>& f, double A, double B);

// Trigonometric interpolant of periodic samples, evaluated off-grid.
class TrigInterpolant {
public:
  explicit TrigInterpolant(const GridFunction& f);
  double value(double x) const;
  double d1(double x) const;
  double d2(double x) const;

private:
  void eval(double x, double& f, double& f1, double& f2) const;
  Grid grid_;
  Spectrum coef_;
};

}  // namespace hoch
