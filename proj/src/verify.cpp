#include "lackwalk/verify.hpp"

#include "lackwalk/analytics.hpp"
#include "lackwalk/full_walk.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

namespace lackwalk {

namespace {

std::vector<BipartiteInstance> probe_instances()
{
  return {
    build_instance(6, 4, 1.5, 0.5, 2, 0), build_instance(5, 7, 0.3, 0.8, 1, 2), build_instance(3, 9, 0.0, 4.0, 0, 3),
    build_instance(8, 8, 2.0, 2.0, 2, 2), build_instance(4, 11, 0.0, 0.0, 1, 0), build_instance(10, 3, 7.5, 0.1, 4, 1),
  };
}

ArcStateD random_state(BipartiteInstance const &inst, std::mt19937_64 &rng)
{
  std::normal_distribution<double> gauss;
  ArcStateD psi(inst);
  for (Index i = 0; i < psi.amplitudes.size(); ++i) { psi.amplitudes[i] = {gauss(rng), gauss(rng)}; }
  psi.amplitudes.normalize();
  return psi;
}

CheckResult check(std::string name, double measured, double threshold)
{
  return {std::move(name), measured, threshold, measured <= threshold};
}

double max_trace_diff(EvolutionTrace const &a, EvolutionTrace const &b)
{
  double d = a.size() == b.size() ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < std::min(a.size(), b.size()); ++t) { d = std::max(d, std::abs(a[t] - b[t])); }
  return d;
}

double worst_residual(SubspaceModelD const &model, std::vector<PerturbativeEigenpair> const &pairs, std::size_t i)
{
  return eigen_residual(model.matrix, pairs[i]);
}

// min and max over eigenpairs of residual(N) / residual(4N).
std::pair<double, double> residual_decay(std::vector<double> const &coarse, std::vector<double> const &fine)
{
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    double const ratio = coarse[i] / fine[i];
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  return {lo, hi};
}

} // namespace

std::vector<CheckResult> run_verification(VerifyOptions const &options)
{
  std::vector<CheckResult> out;
  std::mt19937_64 rng(20190612);
  auto const probes = probe_instances();

  {
    double worst = 0.0;
    for (auto const &inst : probes) {
      for (auto init : {InitialState::Uniform, InitialState::Stationary}) {
        auto psi = initial_state<double>(inst, init);
        for (int t = 0; t < 200; ++t) {
          psi = apply_search_step(std::move(psi));
          worst = std::max(worst, std::abs(psi.norm() - 1.0));
        }
      }
    }
    out.push_back(check("unitarity |norm - 1| over 200 steps", worst, 1e-12));
  }

  {
    double s2 = 0.0, c2 = 0.0, q2 = 0.0;
    for (auto const &inst : probes) {
      auto const psi = random_state(inst, rng);
      s2 = std::max(s2, (apply_shift(apply_shift(psi)).amplitudes - psi.amplitudes).norm());
      c2 = std::max(c2, (apply_coin(apply_coin(psi)).amplitudes - psi.amplitudes).norm());
      q2 = std::max(q2, (apply_oracle(apply_oracle(psi)).amplitudes - psi.amplitudes).norm());
    }
    out.push_back(check("involution S^2 = I", s2, 1e-12));
    out.push_back(check("involution C^2 = I", c2, 1e-12));
    out.push_back(check("involution Q^2 = I", q2, 1e-12));
  }

  {
    double worst = 0.0;
    for (auto const &inst : probes) {
      auto const sigma = initial_stationary<double>(inst);
      worst = std::max(worst, (apply_walk_step(sigma).amplitudes - sigma.amplitudes).norm());
    }
    out.push_back(check("stationarity |U_walk sigma - sigma|", worst, 1e-12));
  }

  {
    std::uniform_int_distribution<Index> size(2, 5000);
    std::uniform_real_distribution<double> weight(0.0, 20.0);
    double worst = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
      Index const n1 = size(rng), n2 = size(rng);
      Index const k1 = std::uniform_int_distribution<Index>(1, std::min<Index>(n1 - 1, 10))(rng);
      Index const k2 = draw % 2 == 0 ? 0 : std::uniform_int_distribution<Index>(1, std::min<Index>(n2 - 1, 10))(rng);
      auto const m = build_model<double>(build_instance(n1, n2, weight(rng), weight(rng), k1, k2));
      auto const eye = Eigen::MatrixXd::Identity(m.dim(), m.dim());
      worst = std::max(worst, (m.matrix.transpose() * m.matrix - eye).cwiseAbs().maxCoeff());
    }
    out.push_back(check("model orthogonality |U^T U - I|_max (100 draws)", worst, 1e-12));
  }

  {
    double worst = 0.0;
    std::size_t cases = 0;
    for (Index n1 = 1; n1 <= options.max_set_size; ++n1) {
      for (Index n2 = 1; n2 <= options.max_set_size; ++n2) {
        for (Index k1 = 0; k1 <= 2; ++k1) {
          for (Index k2 = 0; k2 <= 2; ++k2) {
            for (double l1 : {0.0, 0.5, 2.0}) {
              for (double l2 : {0.0, 0.5, 2.0}) {
                auto const inst = build_instance(n1, n2, l1, l2, std::min(k1, n1), std::min(k2, n2));
                if (!has_subspace_model(inst) || inst.k1 != k1 || inst.k2 != k2) { continue; }
                auto model = build_model<double>(inst);
                if (options.perturb_model) { options.perturb_model(model); }
                for (auto init : {InitialState::Uniform, InitialState::Stationary}) {
                  worst = std::max(worst, max_trace_diff(evolve(initial_state<double>(inst, init), options.steps),
                                                         evolve_subspace(model, init, options.steps)));
                  ++cases;
                }
              }
            }
          }
        }
      }
    }
    out.push_back(check("full vs subspace trace (" + std::to_string(cases) + " cases)", worst, 1e-10));
  }

  {
    double worst = 0.0;
    for (auto const &inst : probes) {
      if (inst.k1 == 0) { continue; } // projection uses the unswapped labels
      auto const kind = inst.k2 == 0 ? SubspaceCase::OneSet : SubspaceCase::BothSets;
      for (auto init : {InitialState::Uniform, InitialState::Stationary}) {
        auto psi = initial_state<double>(inst, init);
        for (int t = 0; t <= 60; ++t) {
          worst = std::max(worst, std::abs(psi.amplitudes.squaredNorm() - project_to_subspace(psi, kind).squaredNorm()));
          psi = apply_search_step(std::move(psi));
        }
      }
    }
    out.push_back(check("subspace closure (norm lost by projection)", worst, 1e-12));
  }

  {
    double worst = 0.0;
    for (auto const &inst : probes) {
      if (inst.k2 != 0) { continue; }
      worst = std::max(worst, max_trace_diff(evolve(initial_stationary<double>(inst), 60),
                                             evolve(initial_stationary<double>(swap_sets(inst)), 60)));
    }
    out.push_back(check("set-swap symmetry of p(t)", worst, 1e-12));
  }

  {
    auto residuals = [](Index scale) {
      auto const inst = build_instance(1000 * scale, 800 * scale, 1.2, 0.7, 3, 0);
      auto const m = build_one_set_model<double>(inst);
      auto const pairs = one_set_eigensystem(inst);
      std::vector<double> r;
      for (std::size_t i = 0; i < pairs.size(); ++i) { r.push_back(worst_residual(m, pairs, i)); }
      return r;
    };
    auto const [lo, hi] = residual_decay(residuals(1), residuals(4));
    out.push_back({"one-set eigen-residual decay N -> 4N, min ratio", lo, 1.4, lo >= 1.4});
    out.push_back({"one-set eigen-residual decay N -> 4N, max ratio", hi, 2.8, hi <= 2.8});
  }

  {
    auto residuals = [](Index n) {
      auto const m = build_both_sets_model<double>(build_instance(n / 2, n / 2, 5.0, 5.0, 5, 5));
      auto const pairs = symmetric_eigensystem(static_cast<double>(n), 10.0, 5.0);
      std::vector<double> r;
      for (std::size_t i = 0; i < pairs.size(); ++i) { r.push_back(worst_residual(m, pairs, i)); }
      return r;
    };
    auto const [lo, hi] = residual_decay(residuals(400), residuals(1600));
    out.push_back({"symmetric eigen-residual decay N -> 4N, min ratio", lo, 1.4, lo >= 1.4});
    out.push_back({"symmetric eigen-residual decay N -> 4N, max ratio", hi, 2.8, hi <= 2.8});
  }

  return out;
}

bool all_passed(std::vector<CheckResult> const &results)
{
  return std::all_of(results.begin(), results.end(), [](CheckResult const &r) { return r.passed; });
}

void print_report(std::ostream &out, std::vector<CheckResult> const &results)
{
  for (auto const &r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(52) << r.name << "  measured "
        << std::scientific << std::setprecision(3) << r.measured << "  bound " << r.threshold << '\n';
  }
  out << std::defaultfloat;
}

} // namespace lackwalk
