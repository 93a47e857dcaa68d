#pragma once

#include <vector>

#include "hoch/grid.hpp"
#include "hoch/solver.hpp"

namespace hoch {

// Momentum as a sum of point masses w_i at ordered positions r_i, so that
// u(x) = 1/2 sum_i w_i exp(-|x - r_i|). Each particle moves along a
// characteristic and carries the momentum of its Lagrangian cell.
struct ParticleState {
  std::vector<double> r, w;
};

ParticleState particles_from_momentum(const std::vector<MomentumComponent>& comps, int count, double floor);

// u and the one-sided slopes zl = u_x(r_i-), zr = u_x(r_i+) at each particle
struct ParticleFields {
  std::vector<double> u, zl, zr, SL, SR;
};

ParticleFields particle_fields(const ParticleState& s);
void particle_rhs(const ParticleState& s, int n, ParticleState& out);

double particle_H1(const ParticleState& s);
double particle_H2(const ParticleState& s, int n);

// u, u_x of the particle solution at the grid nodes (no periodization)
void sample_particles(const ParticleState& s, const Grid& g, std::vector<double>& u, std::vector<double>& ux);

TrajectoryRecord run_lagrangian(const InitialData& u0, const SolverConfig& cfg);

}  // namespace hoch
