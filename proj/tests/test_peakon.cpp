#include <doctest.h>

#include <cmath>

#include "hoch/exact_comb.hpp"
#include "hoch/functionals.hpp"
#include "hoch/peakon.hpp"

using namespace hoch;

namespace {

// composite Simpson on each side of the crest, where the peakon is smooth
template <class F>
double simpson(F f, double lo, double hi, int cells) {
  const double h = (hi - lo) / cells;
  double s = f(lo) + f(hi);
  for (int i = 1; i < cells; ++i) s += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return s * h / 3.0;
}

}  // namespace

TEST_SUITE("peakon") {

TEST_CASE("profile, derivative and crest") {
  const PeakonParams p = make_peakon(2, 1.5, 0.25);
  CHECK(p.c == doctest::Approx(2.0 / 3.0 * std::pow(1.5, 3)));
  CHECK(crest(p, 2.0) == doctest::Approx(0.25 + 2.0 * p.c));
  CHECK(eval_peakon(p, 0.0, 0.25) == doctest::Approx(1.5));
  CHECK(eval_peakon(p, 0.0, 1.25) == doctest::Approx(1.5 * std::exp(-1.0)));
  CHECK(eval_peakon_dx(p, 0.0, 0.25) == 0.0);
  CHECK(eval_peakon_dx(p, 0.0, 1.25) == doctest::Approx(-1.5 * std::exp(-1.0)));
  CHECK(eval_peakon_dx(p, 0.0, -0.75) == doctest::Approx(1.5 * std::exp(-1.0)));
  const double h = 1e-6, x = 0.9;
  CHECK(eval_peakon_dx(p, 0.0, x) ==
        doctest::Approx((eval_peakon(p, 0.0, x + h) - eval_peakon(p, 0.0, x - h)) / (2 * h)).epsilon(1e-8));
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS(make_peakon(1, 0.0));
  CHECK_THROWS(make_peakon(1, -1.0));
  PeakonParams p = make_peakon(2, 1.0);
  CHECK_NOTHROW(validate(p));
  p.c *= 1.01;
  CHECK_THROWS(validate(p));
}

TEST_CASE("closed-form functionals against direct quadrature") {
  for (int n = 1; n <= 4; ++n) {
    for (double a : {1.0, 2.0}) {
      const PeakonParams p = make_peakon(n, a);
      const NumericCoeffs& nc = numeric_coeffs(n);
      // one-sided slopes so the crest end points use the limits from each side
      auto e = [&](double x, double side) {
        const double u = eval_peakon(p, 0, x), z = side * u;
        return u * u + z * z;
      };
      auto f = [&](double x, double side) {
        const double u = eval_peakon(p, 0, x);
        return H2_density(nc, u, side * u);
      };
      auto left = [](auto g) { return [g](double x) { return g(x, 1.0); }; };
      auto right = [](auto g) { return [g](double x) { return g(x, -1.0); }; };
      const double E = simpson(left(e), -40.0, 0.0, 40000) + simpson(right(e), 0.0, 40.0, 40000);
      const double F = simpson(left(f), -40.0, 0.0, 40000) + simpson(right(f), 0.0, 40.0, 40000);
      CHECK(peakon_H1(p) == doctest::Approx(2 * a * a));
      CHECK(E == doctest::Approx(peakon_H1(p)).epsilon(1e-10));
      CHECK(F == doctest::Approx(peakon_H2(p)).epsilon(1e-10));
    }
  }
}

TEST_CASE("peakons saturate the Sobolev bound") {
  const auto [sup, bound] = sobolev_sharpness(make_peakon(3, 1.7));
  CHECK(sup == doctest::Approx(bound).epsilon(1e-15));
}

}  // TEST_SUITE
