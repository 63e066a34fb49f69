#pragma once

#include "lackwalk/instance.hpp"
#include "lackwalk/trace.hpp"

#include <Eigen/Core>

#include <array>
#include <complex>
#include <vector>

namespace lackwalk {

// Closed-form, large-N predictions. Angles satisfy sin(theta), sin(phi) as
// given by the leading-order spectrum of the search operator; t_star is the
// real-valued peak time (rounding to integer steps is left to callers).
struct SpectralPrediction
{
  double theta = 0.0;
  double phi = 0.0;
  double t_star = 0.0;
  double p_star = 0.0;
  double total_runtime = 0.0;
};

struct PerturbativeEigenpair
{
  Eigen::VectorXcd coords;
  std::complex<double> eigenvalue;
};

// Coefficients (a, b, c, d, e, f, g) of the large-N initial state in the
// basis psi_1 .. psi_7 of one_set_eigensystem.
using ExpansionCoefficients = std::array<std::complex<double>, 7>;

// ---- marked vertices in one set (X) -------------------------------------

double one_set_sin_theta(BipartiteInstance const &inst);
double one_set_sin_phi(BipartiteInstance const &inst);

// psi_1 .. psi_7 with eigenvalues 1, e^{-i theta}, e^{i theta}, -1, -1,
// -e^{i phi}, -e^{-i phi}. Requires l1 > 0.
std::vector<PerturbativeEigenpair> one_set_eigensystem(BipartiteInstance const &inst);

ExpansionCoefficients one_set_expansion_coeffs(BipartiteInstance const &inst, InitialState init);

// Large-N success probability. The uniform-start form carries a (-1)^t term;
// for non-integer t its sign is taken from the nearest integer.
double one_set_p_of_t(BipartiteInstance const &inst, InitialState init, double t);

// Weight on X that makes the stationary start reach p = 1: k n2 / (2 n1).
double optimal_l1(BipartiteInstance const &inst);

// Root x in (1, 1.5) of pi x = tan(pi x); x = sqrt(1 + l2 / k) at the best l2.
double optimal_l2_root();

// l2 = k (x^2 - 1) maximizing the uniform-start peak at l1 = optimal_l1.
double optimal_l2(double k);

// Uniform start: valid only at l1 = optimal_l1 (throws std::domain_error
// otherwise). Stationary start: any l1 >= 0, piecewise at l1 = k n2 / (6 n1).
SpectralPrediction one_set_peak(BipartiteInstance const &inst, InitialState init);

// n2 above which the uniform-start lackadaisical peak beats the loopless one.
double improvement_threshold(double n1);

// Lower bound (sqrt(n1) + sqrt(n2))^2 / (2 (n1 + n2)) on the uniform-start peak.
double uniform_peak_lower_bound(double n1, double n2);

struct LooplessBaseline
{
  double p_star = 0.0;
  double t_star = 0.0;
};

// Uniform: max(n1, n2) / (n1 + n2); stationary: 1/2. t_star = pi / (2 theta)
// with l1 = 0, i.e. (pi / (2 sqrt 2)) sqrt(N / k) on regular graphs.
LooplessBaseline loopless_baselines(BipartiteInstance const &inst, InitialState init);

// ---- symmetric both-sets problem ------------------------------------------
// n = n1 + n2 total vertices (n1 = n2 = n/2), k = k1 + k2 total marked
// (k1 = k2 = k/2), loop weight l on every vertex.

bool is_symmetric_both_sets(BipartiteInstance const &inst);

double symmetric_sin_theta(double n, double k, double l);
double symmetric_sin_phi(double n, double l);

// psi_1 .. psi_6 with eigenvalues e^{-i theta}, e^{i theta}, e^{-i phi},
// e^{i phi}, 1, 1. Requires l > 0 and k > 0.
std::vector<PerturbativeEigenpair> symmetric_eigensystem(double n, double k, double l);

// t_star = (pi / 2) sqrt(N / (k + l)), p_star = k (k + 2l) / (k + l)^2.
SpectralPrediction symmetric_peak(double n, double k, double l);
double symmetric_p_of_t(double n, double k, double l, double t);

// T = t_star / p_star is minimized at l = k / 2, where T = (3 pi / 8) sqrt(3N / 2k).
double symmetric_optimal_l(double k);
double symmetric_min_runtime(double n, double k);

// ---- verification helpers --------------------------------------------------

// || U psi - lambda psi ||_2 against an exact real model matrix.
double eigen_residual(Eigen::MatrixXd const &matrix, PerturbativeEigenpair const &pair);

} // namespace lackwalk
