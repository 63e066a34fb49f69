#include "lackwalk/analytics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lackwalk {

namespace {

using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;
constexpr cd I{0.0, 1.0};

struct OneSetParams
{
  double N1, N2, k, l1, l2;
};

OneSetParams one_set_params(BipartiteInstance const &inst)
{
  if (inst.k2 != 0 || inst.k1 < 1) { throw std::invalid_argument("one-set formulas need k1 >= 1 and k2 = 0"); }
  return {static_cast<double>(inst.n1), static_cast<double>(inst.n2), static_cast<double>(inst.k1), inst.l1, inst.l2};
}

double checked_asin(double s, char const *what)
{
  if (!(s >= 0.0 && s < 1.0)) {
    throw std::domain_error(std::string(what) + " out of range: instance is outside the large-N regime");
  }
  return std::asin(s);
}

Eigen::VectorXcd vec(std::initializer_list<cd> entries)
{
  Eigen::VectorXcd v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (cd e : entries) { v[i++] = e; }
  return v;
}

} // namespace

double one_set_sin_theta(BipartiteInstance const &inst)
{
  auto const [N1, N2, k, l1, l2] = one_set_params(inst);
  return std::sqrt((2 * l1 * N1 + k * N2) / (N1 * N2));
}

double one_set_sin_phi(BipartiteInstance const &inst)
{
  auto const [N1, N2, k, l1, l2] = one_set_params(inst);
  return std::sqrt((2 * l1 * N1 + k * N2 + 2 * l2 * N2) / (N1 * N2));
}

std::vector<PerturbativeEigenpair> one_set_eigensystem(BipartiteInstance const &inst)
{
  auto const [N1, N2, k, l1, l2] = one_set_params(inst);
  if (!(l1 > 0.0)) { throw std::domain_error("one-set eigensystem requires l1 > 0"); }
  double const theta = checked_asin(one_set_sin_theta(inst), "sin(theta)");
  double const phi = checked_asin(one_set_sin_phi(inst), "sin(phi)");

  double const r = l1 * N1 / (k * N2); // l1 N1 / k N2
  double const q = std::sqrt((2 * l1 * N1 + k * N2) / (4 * l1 * N1));
  double const h = std::sqrt(k * N2 / (4 * l1 * N1));
  double const w = std::sqrt((2 * l1 * N1 + (k + 2 * l2) * N2) / (2 * k * N2));
  double const n23 = 1.0 / std::sqrt(2 + 1 / r);
  double const n67 = 1.0 / std::sqrt(2 + 4 * (l1 * N1 + l2 * N2) / (k * N2));
  double const s2 = 1.0 / std::sqrt(2.0);
  double const m5 = std::sqrt(l2 * N2 / (l1 * N1));

  std::vector<PerturbativeEigenpair> out;
  out.push_back({vec({1, 0, 0, 0, -std::sqrt(r), -std::sqrt(r), 0}) / std::sqrt(1 + 2 * r), 1.0});
  out.push_back({vec({1, I * q, -I * q, 0, h, h, 0}) * n23, std::exp(-I * theta)});
  out.push_back({vec({1, -I * q, I * q, 0, h, h, 0}) * n23, std::exp(I * theta)});
  out.push_back({vec({0, 1, 1, 0, 0, 0, std::sqrt(1 / r)}) * n23, -1.0});
  out.push_back({vec({0, 0, 0, 1, 0, 0, m5}) / std::sqrt(1 + m5 * m5), -1.0});
  out.push_back({vec({0, s2, s2, std::sqrt(2 * l2 / k), -I * w, I * w, -std::sqrt(2 * r)}) * n67,
                 -std::exp(I * phi)});
  out.push_back({vec({0, s2, s2, std::sqrt(2 * l2 / k), I * w, -I * w, -std::sqrt(2 * r)}) * n67,
                 -std::exp(-I * phi)});
  return out;
}

ExpansionCoefficients one_set_expansion_coeffs(BipartiteInstance const &inst, InitialState init)
{
  auto const [N1, N2, k, l1, l2] = one_set_params(inst);
  if (!(l1 > 0.0)) { throw std::domain_error("expansion coefficients require l1 > 0"); }
  double const D = 2 * l1 * N1 + k * N2;
  ExpansionCoefficients c{};
  if (init == InitialState::Uniform) {
    double const r1 = std::sqrt(N1), r2 = std::sqrt(N2), S = N1 + N2;
    c[0] = -(r1 + r2) * std::sqrt(l1 * N1 / (S * D));
    c[1] = c[2] = (std::sqrt(k) * N2 + std::sqrt(k * N1 * N2)) / (2 * std::sqrt(S * D));
    c[5] = I * (r2 - r1) / (2 * std::sqrt(S));
    c[6] = I * (r1 - r2) / (2 * std::sqrt(S));
  } else {
    c[0] = -std::sqrt(2 * l1 * N1 / D);
    c[1] = c[2] = std::sqrt(k * N2 / (2 * D));
  }
  return c;
}

double one_set_p_of_t(BipartiteInstance const &inst, InitialState init, double t)
{
  auto const [N1, N2, k, l1, l2] = one_set_params(inst);
  double const theta = checked_asin(one_set_sin_theta(inst), "sin(theta)");
  double const D = 2 * l1 * N1 + k * N2;

  if (init == InitialState::Stationary) {
    double const half = std::sin(theta * t / 2);
    return k * N2 * (6 * l1 * N1 + k * N2 + (k * N2 - 2 * l1 * N1) * std::cos(theta * t)) / (D * D) * half * half;
  }

  double const phi = checked_asin(one_set_sin_phi(inst), "sin(phi)");
  double const r1 = std::sqrt(N1), r2 = std::sqrt(N2);
  double const parity = (std::llround(t) % 2 == 0) ? 1.0 : -1.0;
  double const a = std::sqrt(k * N2) * (r1 + r2) / (2 * std::sqrt(D)) * std::sin(theta * t);
  double const b = parity * std::sqrt(k * N2) * (r1 - r2) / (2 * std::sqrt(D + 2 * l2 * N2)) * std::sin(phi * t);
  double const c = std::sqrt(k * l1 * N1 * N2) * (r1 + r2) / D * (std::cos(theta * t) - 1);
  return ((a + b) * (a + b) + c * c) / (N1 + N2);
}

double optimal_l1(BipartiteInstance const &inst)
{
  auto const [N1, N2, k, l1, l2] = one_set_params(inst);
  return k * N2 / (2 * N1);
}

double optimal_l2_root()
{
  // g(x) = pi x - tan(pi x) is positive just above 1 and tends to -inf at 1.5.
  auto g = [](double x) { return pi * x - std::tan(pi * x); };
  double lo = 1.0 + 1e-9;
  double hi = 1.5 - 1e-9;
  while (hi - lo > 1e-12) {
    double const mid = 0.5 * (lo + hi);
    (g(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double optimal_l2(double k)
{
  if (!(k >= 1.0)) { throw std::invalid_argument("optimal_l2 requires k >= 1"); }
  double const x = optimal_l2_root();
  return k * (x * x - 1);
}

SpectralPrediction one_set_peak(BipartiteInstance const &inst, InitialState init)
{
  auto const [N1, N2, k, l1, l2] = one_set_params(inst);
  if (l1 < 0.0) { throw std::invalid_argument("l1 must be nonnegative"); }
  SpectralPrediction p;
  p.theta = checked_asin(one_set_sin_theta(inst), "sin(theta)");
  p.phi = checked_asin(one_set_sin_phi(inst), "sin(phi)");

  if (init == InitialState::Uniform) {
    double const best = k * N2 / (2 * N1);
    if (std::abs(l1 - best) > 1e-9 * std::max(1.0, best)) {
      throw std::domain_error("closed-form uniform-start peak requires l1 = k n2 / (2 n1)");
    }
    double const r1 = std::sqrt(N1), r2 = std::sqrt(N2);
    double const osc =
      std::sqrt(k) * (r1 - r2) / (2 * std::sqrt(2 * (k + l2))) * std::sin(pi * std::sqrt(1 + l2 / k));
    p.t_star = pi / p.theta;
    p.p_star = (osc * osc + (r1 + r2) * (r1 + r2) / 2) / (N1 + N2);
  } else {
    double const a = l1 * N1;
    double const b = k * N2;
    if (l1 <= b / (6 * N1)) {
      p.t_star = std::acos(4 * a / (2 * a - b)) / p.theta;
      p.p_star = b / (2 * b - 4 * a);
    } else {
      p.t_star = pi / p.theta;
      p.p_star = 8 * k * l1 * N1 * N2 / ((2 * a + b) * (2 * a + b));
    }
  }
  p.total_runtime = p.t_star / p.p_star;
  return p;
}

double improvement_threshold(double n1)
{
  if (!(n1 >= 1.0)) { throw std::invalid_argument("n1 must be >= 1"); }
  return (3 - 2 * std::sqrt(2.0)) * n1;
}

double uniform_peak_lower_bound(double n1, double n2)
{
  double const s = std::sqrt(n1) + std::sqrt(n2);
  return s * s / (2 * (n1 + n2));
}

LooplessBaseline loopless_baselines(BipartiteInstance const &inst, InitialState init)
{
  auto const [N1, N2, k, l1, l2] = one_set_params(inst);
  LooplessBaseline b;
  b.p_star = init == InitialState::Uniform ? std::max(N1, N2) / (N1 + N2) : 0.5;
  b.t_star = pi / (2 * checked_asin(std::sqrt(k / N1), "sin(theta)"));
  return b;
}

bool is_symmetric_both_sets(BipartiteInstance const &inst)
{
  return inst.n1 == inst.n2 && inst.k1 == inst.k2 && inst.k1 >= 1 && inst.k1 < inst.n1 && inst.l1 == inst.l2;
}

double symmetric_sin_theta(double n, double k, double l) { return 2 * std::sqrt(k + l) / std::sqrt(n); }

double symmetric_sin_phi(double n, double l) { return 2 * std::sqrt(l) / std::sqrt(n); }

std::vector<PerturbativeEigenpair> symmetric_eigensystem(double n, double k, double l)
{
  if (!(l > 0.0)) { throw std::domain_error("symmetric eigensystem requires l > 0"); }
  if (!(k > 0.0)) { throw std::domain_error("symmetric eigensystem requires k > 0"); }
  double const theta = checked_asin(symmetric_sin_theta(n, k, l), "sin(theta)");
  double const phi = checked_asin(symmetric_sin_phi(n, l), "sin(phi)");

  double const r = std::sqrt(k / (2 * l));
  double const u = std::sqrt(k + l) / std::sqrt(2 * l);
  double const n12 = 1.0 / std::sqrt(4 + 4 * k / l);
  double const s2 = 1.0 / std::sqrt(2.0);
  double const m = std::sqrt(2 * l / k);

  std::vector<PerturbativeEigenpair> out;
  out.push_back({vec({1, r, I * u, r, 1, I * u, -I * u, 0, r, -I * u, r, 0}) * n12, std::exp(-I * theta)});
  out.push_back({vec({1, r, -I * u, r, 1, -I * u, I * u, 0, r, I * u, r, 0}) * n12, std::exp(I * theta)});
  out.push_back({vec({1, 0, I * s2, 0, -1, -I * s2, I * s2, 0, 0, -I * s2, 0, 0}) * 0.5, std::exp(-I * phi)});
  out.push_back({vec({1, 0, -I * s2, 0, -1, I * s2, -I * s2, 0, 0, I * s2, 0, 0}) * 0.5, std::exp(I * phi)});
  out.push_back({vec({1, 0, 0, 0, 1, 0, 0, 0, -m, 0, -m, 0}) / std::sqrt(2 + 4 * l / k), 1.0});
  out.push_back({vec({0, s2, 0, s2, 0, 0, 0, 0, -s2, 0, -s2, 0}) * s2, 1.0});
  return out;
}

SpectralPrediction symmetric_peak(double n, double k, double l)
{
  if (!(k > 0.0) || l < 0.0) { throw std::invalid_argument("symmetric peak requires k > 0, l >= 0"); }
  SpectralPrediction p;
  p.theta = checked_asin(symmetric_sin_theta(n, k, l), "sin(theta)");
  p.phi = checked_asin(symmetric_sin_phi(n, l), "sin(phi)");
  p.t_star = pi / 2 * std::sqrt(n / (k + l));
  p.p_star = k * (k + 2 * l) / ((k + l) * (k + l));
  p.total_runtime = p.t_star / p.p_star;
  return p;
}

double symmetric_p_of_t(double n, double k, double l, double t)
{
  double const theta = checked_asin(symmetric_sin_theta(n, k, l), "sin(theta)");
  double const half = std::sin(theta * t / 2);
  return k / (2 * (k + l) * (k + l)) * (2 * k + 3 * l - l * std::cos(theta * t)) * half * half;
}

double symmetric_optimal_l(double k) { return k / 2; }

double symmetric_min_runtime(double n, double k) { return 3 * pi / 8 * std::sqrt(3 * n / (2 * k)); }

double eigen_residual(Eigen::MatrixXd const &matrix, PerturbativeEigenpair const &pair)
{
  Eigen::VectorXcd const applied = matrix.cast<cd>() * pair.coords;
  return (applied - pair.eigenvalue * pair.coords).norm();
}

} // namespace lackwalk
