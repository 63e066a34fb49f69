#include "lackwalk/experiments.hpp"

#include "lackwalk/analytics.hpp"
#include "lackwalk/full_walk.hpp"
#include "lackwalk/subspace.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace lackwalk {

std::vector<double> Range::values() const
{
  if (count < 1) { throw std::invalid_argument("range must contain at least one value"); }
  if (!(hi >= lo)) { throw std::invalid_argument("range upper bound below lower bound"); }
  std::vector<double> out(static_cast<std::size_t>(count));
  for (Index i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return out;
}

Index default_horizon(BipartiteInstance const &inst)
{
  return 10 * static_cast<Index>(std::ceil(std::sqrt(static_cast<double>(inst.vertex_count()))));
}

namespace {

EvolutionTrace analytic_trace(BipartiteInstance const &inst, InitialState init, Index steps)
{
  EvolutionTrace trace;
  trace.engine = Engine::Analytic;
  trace.probs.reserve(static_cast<std::size_t>(steps) + 1);
  if (is_symmetric_both_sets(inst)) {
    double const n = static_cast<double>(inst.vertex_count());
    double const k = static_cast<double>(inst.marked_count());
    for (Index t = 0; t <= steps; ++t) { trace.probs.push_back(symmetric_p_of_t(n, k, inst.l1, static_cast<double>(t))); }
    return trace;
  }
  BipartiteInstance one = inst;
  if (inst.k1 == 0 && inst.k2 > 0) { one = swap_sets(inst); }
  if (one.k2 != 0 || one.k1 < 1) {
    throw std::invalid_argument("no closed form for this marking; use the subspace engine");
  }
  if (!(one.l1 > 0.0)) { throw std::domain_error("closed forms need a positive loop weight on the marked set"); }
  for (Index t = 0; t <= steps; ++t) { trace.probs.push_back(one_set_p_of_t(one, init, static_cast<double>(t))); }
  return trace;
}

} // namespace

EvolutionTrace compute_trace(BipartiteInstance const &inst, InitialState init, Engine engine, Index steps)
{
  if (steps < 0) { throw std::invalid_argument("steps must be nonnegative"); }
  if (inst.marked_count() == 0) {
    return {std::vector<double>(static_cast<std::size_t>(steps) + 1, 0.0), engine};
  }
  switch (engine) {
  case Engine::Full: return evolve(initial_state<double>(inst, init), steps);
  case Engine::Subspace: return evolve_subspace(build_model<double>(inst), init, steps);
  case Engine::Analytic: return analytic_trace(inst, init, steps);
  }
  throw std::logic_error("unhandled engine");
}

PeakResult find_first_peak(EvolutionTrace const &trace)
{
  auto const &p = trace.probs;
  if (p.size() < 3) { throw std::invalid_argument("peak detection needs at least 3 samples"); }
  PeakResult out;
  if (std::all_of(p.begin(), p.end(), [](double v) { return v == 0.0; })) { return out; }

  std::size_t const n = p.size();
  auto q = [&](std::size_t t) { return std::max(p[t], p[t + 1]); };
  // Adjacent envelope samples share a raw sample, so q has flat runs; a run
  // only counts as a maximum if the next distinct value is lower.
  std::size_t peak = n;
  for (std::size_t t = 1; t + 2 < n; ++t) {
    double const qt = q(t);
    if (!(q(t - 1) < qt && qt > q(0))) { continue; }
    std::size_t u = t + 1;
    while (u + 1 < n && q(u) == qt) { ++u; }
    if (u + 1 < n && q(u) < qt) {
      peak = p[t + 1] > p[t] ? t + 1 : t;
      break;
    }
  }
  if (peak == n) { peak = static_cast<std::size_t>(std::max_element(p.begin(), p.end()) - p.begin()); }

  out.t_star = static_cast<Index>(peak);
  out.p_star = p[peak];
  out.total_runtime =
    out.p_star > 0.0 ? static_cast<double>(out.t_star) / out.p_star : std::numeric_limits<double>::infinity();
  return out;
}

std::vector<PeakResult> sweep_l1(BipartiteInstance const &base, InitialState init, std::vector<double> const &l1_values,
                                 Index horizon, Engine engine)
{
  if (horizon < 3) { throw std::invalid_argument("horizon must be at least 3 steps"); }
  std::vector<PeakResult> out;
  out.reserve(l1_values.size());
  for (double l1 : l1_values) {
    auto const inst = build_instance(base.n1, base.n2, l1, base.l2, base.k1, base.k2);
    out.push_back(find_first_peak(compute_trace(inst, init, engine, horizon)));
  }
  return out;
}

PeakResult loopless_reference(BipartiteInstance const &inst, InitialState init, Index horizon, Engine engine)
{
  auto const loopless = build_instance(inst.n1, inst.n2, 0.0, 0.0, inst.k1, inst.k2);
  return find_first_peak(compute_trace(loopless, init, engine, horizon));
}

HeatmapGrid heatmap(BipartiteInstance const &base, InitialState init, Range const &l1_range, Range const &l2_range,
                    HeatmapMetric metric, HeatmapOptions const &options)
{
  HeatmapGrid grid;
  grid.metric = metric;
  grid.l1_values = l1_range.values();
  grid.l2_values = l2_range.values();
  Index const horizon = options.horizon > 0 ? options.horizon : default_horizon(base);
  grid.loopless = loopless_reference(base, init, horizon, options.engine);

  std::size_t const ncol = grid.l2_values.size();
  std::size_t const ncells = grid.l1_values.size() * ncol;
  grid.cells.resize(ncells);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t c = next++; c < ncells; c = next++) {
        auto const inst =
          build_instance(base.n1, base.n2, grid.l1_values[c / ncol], grid.l2_values[c % ncol], base.k1, base.k2);
        grid.cells[c] = find_first_peak(compute_trace(inst, init, options.engine, horizon));
      }
    } catch (...) {
      std::scoped_lock lock(failure_mutex);
      if (!failure) { failure = std::current_exception(); }
      next = ncells;
    }
  };

  unsigned const nthreads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(ncells)));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) { pool.emplace_back(worker); }
  }
  if (failure) { std::rethrow_exception(failure); }
  return grid;
}

} // namespace lackwalk
