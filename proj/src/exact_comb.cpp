#include "hoch/exact_comb.hpp"

#include <cmath>
#include <stdexcept>

namespace hoch {

namespace {

Rational sgn_pow(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& p, const Poly& q) {
  if (p.empty() || q.empty()) return {};
  Poly r(p.size() + q.size() - 1, Rational(0));
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

// sum_i |p_i - q_i| over the common support
Rational poly_gap(const Poly& p, const Poly& q) {
  Rational gap(0);
  size_t len = std::max(p.size(), q.size());
  for (size_t i = 0; i < len; ++i) {
    Rational a = i < p.size() ? p[i] : Rational(0);
    Rational b = i < q.size() ? q[i] : Rational(0);
    gap += abs(a - b);
  }
  return gap;
}

// (1 - z^2)^k in powers of z
Poly one_minus_sq_pow(int k) {
  Poly p(2 * k + 1, Rational(0));
  for (int j = 0; j <= k; ++j) p[2 * j] = sgn_pow(j) * binomial(k, j);
  return p;
}

// coefficient of u^{2n+1-j} u_x^j in the H2 integrand
Poly h2_integrand(int n) {
  Poly p(2 * n + 2, Rational(0));
  p[0] = 1;
  for (int k = 1; k <= n; ++k) p[2 * k] = sgn_pow(k + 1) / Rational(2 * k - 1) * binomial(n, k);
  return p;
}

void check_n(int n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
}

}  // namespace

Rational binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::domain_error("binomial: need 0 <= k <= n");
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational double_factorial(long k) {
  if (k < -1) throw std::domain_error("double_factorial: k >= -1");
  mpz_class r = 1;
  for (long j = k; j > 1; j -= 2) r *= j;
  return Rational(r);
}

CoeffTable build_coeff_table(int n) {
  check_n(n);
  CoeffTable t;
  t.n = n;

  Rational c1(1, 2);
  for (int j = 1; j <= n; ++j)
    c1 += sgn_pow(j + 1) * Rational(2 * j - 3, 2 * (2 * j - 1)) * binomial(n, j);
  t.c1 = c1;

  if (n >= 2) {
    t.c.assign(2 * n - 2, Rational(0));
    t.d.assign(2 * n - 2, Rational(0));
    for (int m = 1; m <= n - 1; ++m) {
      Rational even(0), odd(0);
      for (int j = m + 1; j <= n; ++j) {
        even += sgn_pow(j + 1) * Rational(2 * j - 2 * m - 1, 2 * j - 1) * binomial(n, j);
        odd += sgn_pow(j + 1) * Rational(2 * (j - m), 2 * j - 1) * binomial(n, j);
      }
      t.c[2 * m - 1] = even;
      t.d[2 * m - 1] = even;
      t.c[2 * m - 2] = (m == 1) ? c1 : odd;
      t.d[2 * m - 2] = -t.c[2 * m - 2];
    }
  }

  Rational s(1);
  for (int k = 1; k <= n; ++k) s += sgn_pow(k + 1) / Rational(2 * k - 1) * binomial(n, k);
  t.two_minus_c1 = s;

  t.speed_const = Rational(2 * n + 1, 2 * n) * double_factorial(2 * n) / double_factorial(2 * n + 1);
  return t;
}

IdentityCheck make_check(int n, std::string identity, const Rational& residual) {
  return IdentityCheck{n, std::move(identity), residual, residual.is_zero()};
}

std::vector<IdentityCheck> verify_recursions(const CoeffTable& t) {
  std::vector<IdentityCheck> out;
  const int n = t.n;
  if (n < 2) return out;

  struct Side {
    const char* name;
    const std::vector<Rational>* v;
    int s;  // -1 for c, +1 for d
  };
  for (const Side& side : {Side{"c", &t.c, -1}, Side{"d", &t.d, +1}}) {
    auto at = [&](int k) -> Rational {
      if (k == 0) return Rational(1);
      if (k < 0 || k > 2 * n - 2) return Rational(0);
      return (*side.v)[k - 1];
    };
    const Rational two(2 * side.s);
    std::string p = side.name;

    out.push_back(make_check(n, p + "_top", at(2 * n - 2) - sgn_pow(n + 1) / Rational(2 * n - 1)));
    out.push_back(make_check(n, p + "_top_odd", at(2 * n - 3) + two * at(2 * n - 2)));
    for (int j = 1; j <= n - 2; ++j) {
      int k = 2 * j + 1;
      out.push_back(make_check(n, p + "_odd_" + std::to_string(k), at(k) + two * at(k - 1) + at(k - 2)));
    }
    for (int j = 2; j <= n - 1; ++j) {
      int k = 2 * j;
      Rational rhs = sgn_pow(j + 1) / Rational(2 * j - 1) * binomial(n, j);
      out.push_back(make_check(n, p + "_even_" + std::to_string(k), at(k) + two * at(k - 1) + at(k - 2) - rhs));
    }
    out.push_back(make_check(n, p + "_base", at(2) + two * at(1) + Rational(1) - Rational(n)));
  }
  return out;
}

std::vector<IdentityCheck> verify_expansions(const CoeffTable& t) {
  const int n = t.n;
  std::vector<IdentityCheck> out;
  for (int side : {-1, +1}) {
    Poly h(2 * n, Rational(0));
    h[0] = 1;
    for (int k = 1; k <= 2 * n - 2; ++k) h[k] = side < 0 ? t.c_at(k) : t.d_at(k);
    Poly sq{Rational(1), Rational(2 * side), Rational(1)};
    Poly lhs = poly_mul(sq, h);
    Poly rhs = h2_integrand(n);
    Rational first = side < 0 ? t.c1 - Rational(2) : -t.c1 + Rational(2);
    rhs[1] += first;
    out.push_back(make_check(n, side < 0 ? "expansion_c" : "expansion_d", poly_gap(lhs, rhs)));
  }
  return out;
}

std::vector<IdentityCheck> double_factorial_identities(int n) {
  check_n(n);
  std::vector<IdentityCheck> out;
  const Rational df2n = double_factorial(2 * n);

  Rational s1(0);
  for (int k = 1; k <= n; ++k) s1 += sgn_pow(k - 1) / Rational(2 * k - 1) * binomial(n, k);
  out.push_back(make_check(n, "alt_sum_odd_denominator", s1 - (df2n / double_factorial(2 * n - 1) - Rational(1))));

  Rational s2(0), s2b(0);
  for (int k = 0; k <= n; ++k) s2 += sgn_pow(k) / Rational(2 * k + 1) * binomial(n, k);
  for (int k = 1; k <= n; ++k) s2b += sgn_pow(k + 1) / Rational(2 * k + 1) * binomial(n, k);
  out.push_back(make_check(n, "alt_sum_split", s2 - (Rational(1) - s2b)));
  out.push_back(make_check(n, "alt_sum_double_factorial", s2 - df2n / double_factorial(2 * n + 1)));

  Rational inner(0);
  for (int k = 1; k <= n - 1; ++k) inner += sgn_pow(k + 1) / Rational(2 * k + 1) * binomial(n - 1, k);
  Rational outer(0);
  for (int k = 1; k <= n; ++k)
    outer += sgn_pow(k - 1) * Rational(2 * n - 2 * k + 1, 2 * k - 1) * binomial(n, k);
  Rational lhs = (Rational(2 * n) + inner + outer) / Rational(4L * n * n - 1);
  out.push_back(make_check(n, "peakon_weak_constant", lhs - (Rational(1) - inner)));

  CoeffTable t = build_coeff_table(n);
  Rational speed_sum = Rational(2 * n + 1, 2 * n) * s2;
  out.push_back(make_check(n, "speed_from_sum", t.speed_const - speed_sum));
  out.push_back(make_check(n, "speed_shifted_sum", t.speed_const - (Rational(1) - inner)));
  out.push_back(make_check(n, "speed_double_factorial",
                           t.speed_const - double_factorial(2 * n - 2) / double_factorial(2 * n - 1)));
  return out;
}

Rational phi_poly(const CoeffTable& t, const Rational& z) {
  Rational acc(0), zp(1);
  const Rational z2 = z * z;
  for (int k = 1; k <= t.n - 1; ++k) {
    acc += t.c_at(2 * k - 1) * zp;
    zp *= z2;
  }
  return acc;
}

Rational f_poly(const CoeffTable& t, const Rational& z) {
  Rational acc = t.c1 / Rational(2);
  Rational zp(1);
  for (int k = 1; k <= 2 * t.n - 2; ++k) {
    zp *= z;
    acc += t.c_at(k) * zp;
  }
  return acc;
}

Rational f_poly_d(const CoeffTable& t, const Rational& z) {
  Rational acc = t.c1 / Rational(2);
  Rational zp(1);
  for (int k = 1; k <= 2 * t.n - 2; ++k) {
    zp *= z;
    acc += t.d_at(k) * zp;
  }
  return acc;
}

Rational rho_poly(int n, const Rational& z) {
  check_n(n);
  const Rational z2 = z * z;
  Rational cn2 = n >= 2 ? binomial(n, 2) : Rational(0);
  return (Rational(1) - z2).pow(n) - Rational(1) + Rational(n) * z2 - cn2 * z2 * z2;
}

Rational b_constant(int n) {
  check_n(n);
  Rational b(0);
  for (int k = 1; k <= n - 1; ++k) b += double_factorial(2 * k) / double_factorial(2 * k + 1);
  return b;
}

std::vector<IdentityCheck> b_and_c1_identities(int n) {
  check_n(n);
  std::vector<IdentityCheck> out;
  const Rational b = b_constant(n);

  Rational b_int(0);
  for (int k = 1; k <= n - 1; ++k) {
    Poly p = one_minus_sq_pow(k);
    for (size_t j = 0; j < p.size(); ++j) b_int += p[j] / Rational(static_cast<long>(j) + 1);
  }
  out.push_back(make_check(n, "B_integral_form", b - b_int));

  Poly rho = one_minus_sq_pow(n);
  rho[0] -= Rational(1);
  if (rho.size() > 2) rho[2] += Rational(n);
  Rational cn2 = n >= 2 ? binomial(n, 2) : Rational(0);
  if (rho.size() > 4) rho[4] -= cn2;
  out.push_back(make_check(n, "rho_z0", rho[0]));
  out.push_back(make_check(n, "rho_z2", rho.size() > 2 ? rho[2] : Rational(0)));

  // rho / s^2 is a polynomial once the z^0 coefficient vanishes
  Rational rho_int(0);
  for (size_t j = 2; j < rho.size(); ++j) rho_int += rho[j] / Rational(static_cast<long>(j) - 1);
  out.push_back(make_check(n, "rho_integral", rho_int - (-b + Rational(n - 1) - cn2 / Rational(3))));

  CoeffTable t = build_coeff_table(n);
  out.push_back(make_check(n, "c1_from_rho", t.c1 - (Rational(1 - n) + cn2 / Rational(3) + rho_int)));
  out.push_back(make_check(n, "phi0_is_minus_B", phi_poly(t, Rational(0)) - (n >= 2 ? -b : Rational(0))));
  return out;
}

std::vector<Rational> rational_grid(int points) {
  if (points < 2 || (points - 1) % 2 != 0) throw std::domain_error("rational_grid: odd point count >= 3");
  const long half = (points - 1) / 2;
  std::vector<Rational> zs;
  zs.reserve(points);
  for (long k = 0; k < points; ++k) zs.push_back(Rational(k - half, half));
  return zs;
}

std::vector<IdentityCheck> phi_grid_checks(const CoeffTable& t, int points) {
  const int n = t.n;
  const Rational b = b_constant(n);
  Rational max_phi;
  bool first = true;
  Rational gap_c(0), gap_d(0), gap_closed(0);
  Rational max_bound;
  bool first_bound = true;

  for (const Rational& z : rational_grid(points)) {
    const Rational phi = phi_poly(t, z);
    if (first || phi > max_phi) max_phi = phi;
    first = false;

    const Rational one(1);
    gap_c += abs(f_poly(t, z) - (one + z).pow(2) / Rational(2) * phi);
    gap_d += abs(f_poly_d(t, z) - (one - z).pow(2) / Rational(2) * phi);

    Rational integrals(0);
    for (int k = 1; k <= n - 1; ++k) {
      Poly p = one_minus_sq_pow(k);
      for (size_t j = 0; j < p.size(); ++j)
        integrals += p[j] * z.pow(static_cast<unsigned>(j + 1)) / Rational(static_cast<long>(j) + 1);
    }
    const Rational z2 = z * z;
    gap_closed += abs(phi * (one - z2).pow(2) - (-b * (one + z2) + Rational(2) * z * integrals));

    const Rational bound_gap = phi + b / (one + abs(z)).pow(2);
    if (first_bound || bound_gap > max_bound) max_bound = bound_gap;
    first_bound = false;
  }

  std::vector<IdentityCheck> out;
  IdentityCheck nonpos{n, "phi_nonpositive", max_phi, max_phi.sign() <= 0, true};
  out.push_back(nonpos);
  out.push_back(make_check(n, "f_factorization_c", gap_c));
  out.push_back(make_check(n, "f_factorization_d", gap_d));
  out.push_back(make_check(n, "phi_closed_form", gap_closed));
  out.push_back(IdentityCheck{n, "phi_below_minus_B", max_bound, max_bound.sign() <= 0, true});
  return out;
}

Rational qhat_poly(const CoeffTable& t, const Rational& a, const Rational& y) {
  const int n = t.n;
  return Rational(2 * n - 1) * y.pow(2 * n + 1) - Rational(2 * n + 1) * a * a * y.pow(2 * n - 1) +
         Rational(2) * a.pow(2 * n + 1);
}

namespace {

Poly qhat_coeffs(int n, const Rational& a) {
  Poly q(2 * n + 2, Rational(0));
  q[2 * n + 1] = Rational(2 * n - 1);
  q[2 * n - 1] = -Rational(2 * n + 1) * a * a;
  q[0] += Rational(2) * a.pow(2 * n + 1);
  return q;
}

}  // namespace

IdentityCheck qhat_factor_check(const CoeffTable& t, const Rational& a) {
  const int n = t.n;
  if (a.sign() <= 0) throw std::domain_error("qhat_factor_check: a > 0");
  Poly p(2 * n, Rational(0));
  p[2 * n - 1] = Rational(2 * n - 1);
  for (int k = 1; k <= 2 * n - 2; ++k) p[2 * n - 1 - k] = Rational(2 * (2 * n - k)) * a.pow(k);
  p[0] += Rational(2) * a.pow(2 * n - 1);
  Poly sq{a * a, Rational(-2) * a, Rational(1)};
  return make_check(n, "qhat_factor_a=" + a.str(), poly_gap(qhat_coeffs(n, a), poly_mul(sq, p)));
}

IdentityCheck q_to_qhat_check(const CoeffTable& t, const Rational& a) {
  const int n = t.n;
  const Rational tmc = Rational(2) - t.c1;
  const Rational E = Rational(2) * a * a;
  const Rational F = peakon_h2_factor(n) * a.pow(2 * n + 1);
  Poly q(2 * n + 2, Rational(0));
  q[2 * n + 1] = Rational(2 * n - 1) * tmc / Rational(2 * n + 1);
  q[2 * n - 1] = -tmc / Rational(2) * E;
  q[0] += F;
  Poly scaled = qhat_coeffs(n, a);
  for (Rational& v : scaled) v *= tmc / Rational(2 * n + 1);
  return make_check(n, "q_to_qhat_a=" + a.str(), poly_gap(q, scaled));
}

Rational wave_speed(int n, const Rational& a) {
  if (a.sign() <= 0) throw std::domain_error("wave_speed: a > 0");
  return build_coeff_table(n).speed_const * a.pow(2 * n - 1);
}

double wave_speed(int n, double a) {
  if (!(a > 0)) throw std::domain_error("wave_speed: a > 0");
  return build_coeff_table(n).speed_const.to_double() * std::pow(a, 2 * n - 1);
}

double amplitude_from_speed(int n, double c, double tol) {
  if (!(c > 0)) throw std::domain_error("amplitude_from_speed: c > 0");
  const double k = build_coeff_table(n).speed_const.to_double();
  const int p = 2 * n - 1;
  double a = std::pow(c / k, 1.0 / p);
  for (int it = 0; it < 8; ++it) {
    double f = k * std::pow(a, p) - c;
    if (std::abs(f) <= tol * c) break;
    a -= f / (p * k * std::pow(a, p - 1));
  }
  return a;
}

Rational peakon_h2_factor(int n) {
  check_n(n);
  return Rational(2, 2 * n + 1) * build_coeff_table(n).two_minus_c1;
}

RhsCoefficients rhs_coefficients(int n) {
  check_n(n);
  RhsCoefficients r;
  r.n = n;
  r.local.assign(n, Rational(0));
  r.B.assign(n, Rational(0));
  for (int k = 0; k <= n - 1; ++k) {
    r.local[k] = sgn_pow(k) / Rational(2 * k + 1) * binomial(n - 1, k);
    if (k >= 1) r.B[k] = sgn_pow(k + 1) / Rational(2 * k + 1) * binomial(n - 1, k);
  }
  r.A.assign(n + 1, Rational(0));
  r.A[0] = 1;
  for (int k = 1; k <= n; ++k)
    r.A[k] = sgn_pow(k - 1) * Rational(2 * n - 2 * k + 1, 2 * n * (2 * k - 1)) * binomial(n, k);
  Poly h2 = h2_integrand(n);
  r.h2.assign(n + 1, Rational(0));
  for (int k = 0; k <= n; ++k) r.h2[k] = h2[2 * k];
  return r;
}

std::vector<IdentityCheck> verify_all(int n) {
  CoeffTable t = build_coeff_table(n);
  std::vector<IdentityCheck> out;

  Rational inv(0);
  if (n >= 2) {
    inv += abs(t.c_at(1) - t.c1) + abs(t.d_at(1) + t.c1);
    for (int k = 1; k <= 2 * n - 2; ++k)
      inv += (k % 2 == 0) ? abs(t.c_at(k) - t.d_at(k)) : abs(t.c_at(k) + t.d_at(k));
    Rational odd1(0);
    for (int j = 2; j <= n; ++j) odd1 += sgn_pow(j + 1) * Rational(2 * (j - 1), 2 * j - 1) * binomial(n, j);
    out.push_back(make_check(n, "c1_odd_formula", odd1 - t.c1));
  }
  out.push_back(make_check(n, "table_symmetry", inv));
  out.push_back(make_check(n, "two_minus_c1_sum", Rational(2) - t.c1 - t.two_minus_c1));
  out.push_back(IdentityCheck{n, "two_minus_c1_positive", t.two_minus_c1, t.two_minus_c1.sign() > 0, true});

  auto append = [&out](std::vector<IdentityCheck> v) {
    for (auto& c : v) out.push_back(std::move(c));
  };
  append(verify_recursions(t));
  append(verify_expansions(t));
  append(double_factorial_identities(n));
  append(b_and_c1_identities(n));
  append(phi_grid_checks(t));
  for (const Rational& a : {Rational(1), Rational(2), Rational(1, 3)}) {
    out.push_back(qhat_factor_check(t, a));
    out.push_back(q_to_qhat_check(t, a));
  }
  return out;
}

}  // namespace hoch
