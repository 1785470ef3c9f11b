#ifndef TGCC_WAVE1D_HPP
#define TGCC_WAVE1D_HPP

#include <functional>
#include <string>
#include <vector>

#include "tgcc/obsdomain.hpp"

namespace tgcc {

/// Dirichlet data on [0,1], given as analytic closures so that the odd
/// 2-periodic extensions in the d'Alembert formula can be evaluated exactly.
/// iu1 is the antiderivative of u1 with iu1(0) = 0.
struct InitialData1D {
  std::function<double(double)> u0, du0, u1, iu1;
  std::string family;
  /// Breakpoints of the data inside (0,1); quadrature panels split here.
  std::vector<double> kinks;

  static InitialData1D eigenmode(int k);
  /// C2 compactly supported polynomial bump (1-u^2)^3 of half-width sigma at
  /// x0, launched as a pure traveling wave in direction dir.
  static InitialData1D packet(double x0, int dir, double sigma);
};

/// u and du/dt at (t, x) by d'Alembert with fold/sign bookkeeping of the odd
/// 2-periodic extensions.
std::pair<double, double> dalembert_eval(const InitialData1D& data, double t,
                                         double x);

struct ObservedEnergyReport {
  double observed = 0;  // integral of |du/dt|^2 over the space-time region
  double total = 0;     // 2 E0
  double ratio = 0;
  double quad_error = 0;  // estimated relative quadrature error
  bool converged = true;
};

/// Gauss quadrature on time slabs subdivided at window kinks and at the
/// characteristic lines x +- t crossing integers and window edges.
ObservedEnergyReport observed_energy(const InitialData1D& data,
                                     const MovingDomainSpec& spec, double T);

/// Conserved energy E0 = (1/2) int (u_x^2 + u_t^2) evaluated at time t.
double energy_at(const InitialData1D& data, double t);

/// Infimum of observed/total over a family of initial data.
double obs_ratio_infimum(const MovingDomainSpec& spec, double T,
                         const std::vector<InitialData1D>& family);

/// Default family: eigenmodes k <= 32 plus packets of the given widths
/// launched along (x0, dir).
std::vector<InitialData1D> default_family(double worst_x0, int worst_dir,
                                          const std::vector<double>& sigmas);

struct DecayFit {
  double mu = 0, nu = 0;
  double residual = 0;           // RMS residual of the log-linear fit
  std::vector<double> energies;  // once-per-period samples
};

/// Leapfrog damped wave d^2_t u - d^2_x u + chi_omega(t) d_t u = 0 with
/// Dirichlet ends, lambda = dt/dx = 1/2; least-squares fit of log E over the
/// last 80% of once-per-period samples.
DecayFit damped_decay_rate(const MovingDomainSpec& spec,
                           const InitialData1D& data, int grid_n,
                           double horizon, bool damped = true);

/// Discrete energy of the undamped scheme at a fixed time, for convergence
/// checks against the conserved d'Alembert energy.
double fd_energy_at(const InitialData1D& data, int grid_n, double t);

}  // namespace tgcc

#endif
