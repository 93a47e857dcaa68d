#pragma once

#include <string>
#include <vector>

#include "hoch/rational.hpp"

namespace hoch {

Rational binomial(long n, long k);
// k!! with 0!! = (-1)!! = 1
Rational double_factorial(long k);

struct CoeffTable {
  int n = 0;
  std::vector<Rational> c;  // c[k-1] holds c_k, k = 1..2n-2
  std::vector<Rational> d;
  Rational c1;
  Rational speed_const;
  Rational two_minus_c1;

  const Rational& c_at(int k) const { return c.at(k - 1); }
  const Rational& d_at(int k) const { return d.at(k - 1); }
};

CoeffTable build_coeff_table(int n);

struct IdentityCheck {
  int n = 0;
  std::string identity;
  // for inequalities the residual holds the quantity whose sign is tested
  Rational residual;
  bool pass = false;
  bool inequality = false;
};

IdentityCheck make_check(int n, std::string identity, const Rational& residual);

std::vector<IdentityCheck> verify_recursions(const CoeffTable& table);
// (u -/+ u_x)^2 h against the H2 integrand, coefficient by coefficient
std::vector<IdentityCheck> verify_expansions(const CoeffTable& table);
std::vector<IdentityCheck> double_factorial_identities(int n);

Rational phi_poly(const CoeffTable& table, const Rational& z);
Rational f_poly(const CoeffTable& table, const Rational& z);
Rational f_poly_d(const CoeffTable& table, const Rational& z);
Rational rho_poly(int n, const Rational& z);

// sum_{k=1}^{n-1} (2k)!!/(2k+1)!!
Rational b_constant(int n);
std::vector<IdentityCheck> b_and_c1_identities(int n);

std::vector<Rational> rational_grid(int points);
// phi <= 0, both factorizations, the closed form and the bound phi <= -B/(1+|z|)^2
std::vector<IdentityCheck> phi_grid_checks(const CoeffTable& table, int points = 201);

Rational qhat_poly(const CoeffTable& table, const Rational& a, const Rational& y);
IdentityCheck qhat_factor_check(const CoeffTable& table, const Rational& a);
// Q(y) = (2 - c1)/(2n + 1) * Qhat(y) once E = 2a^2 and F = peakon H2
IdentityCheck q_to_qhat_check(const CoeffTable& table, const Rational& a);

Rational wave_speed(int n, const Rational& a);
double wave_speed(int n, double a);
double amplitude_from_speed(int n, double c, double tol = 1e-14);

// peakon H2 = peakon_h2_factor * a^{2n+1}
Rational peakon_h2_factor(int n);

// Coefficient vectors of the nonlocal evolution form.
//   local[k]: u^{2n-2k-1} u_x^{2k+1}, k = 0..n-1
//   A[k]:     u^{2n-2k} u_x^{2k},     k = 0..n
//   B[k]:     u^{2n-2k-1} u_x^{2k+1}, k = 0..n-1 (B[0] = 0)
//   h2[k]:    u^{2n-2k+1} u_x^{2k},   k = 0..n  (H2 integrand)
struct RhsCoefficients {
  int n = 0;
  std::vector<Rational> local, A, B, h2;
};

RhsCoefficients rhs_coefficients(int n);

// Everything above for a single n, in a fixed order.
std::vector<IdentityCheck> verify_all(int n);

}  // namespace hoch
