#pragma once

#include "lackwalk/instance.hpp"
#include "lackwalk/trace.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace lackwalk {

struct PeakResult
{
  Index t_star = 0;
  double p_star = 0.0;
  double total_runtime = std::numeric_limits<double>::infinity();
};

// Inclusive, evenly spaced values lo, ..., hi. count == 1 yields {lo}.
struct Range
{
  double lo = 0.0;
  double hi = 0.0;
  Index count = 41;

  std::vector<double> values() const;
};

enum class HeatmapMetric { PeakProbability, TotalRuntime };

struct HeatmapGrid
{
  std::vector<double> l1_values;
  std::vector<double> l2_values;
  std::vector<PeakResult> cells; // row-major: cell(i, j) = cells[i * l2_values.size() + j]
  HeatmapMetric metric = HeatmapMetric::TotalRuntime;
  PeakResult loopless;

  PeakResult const &cell(std::size_t i, std::size_t j) const { return cells[i * l2_values.size() + j]; }
  double value(std::size_t i, std::size_t j) const
  {
    auto const &c = cell(i, j);
    return metric == HeatmapMetric::PeakProbability ? c.p_star : c.total_runtime;
  }
};

// 10 * ceil(sqrt(n1 + n2)) steps.
Index default_horizon(BipartiteInstance const &inst);

// p(t), t = 0..steps, from the requested engine. Analytic traces need a
// one-set instance with l1 > 0 or the symmetric both-sets problem; subspace
// traces need a supported marking. Instances without marked vertices give an
// all-zero trace on every engine.
EvolutionTrace compute_trace(BipartiteInstance const &inst, InitialState init, Engine engine, Index steps);

// First peak of p(t) on the parity envelope q(t) = max(p(t), p(t+1)): the
// smallest t with q(t-1) < q(t) >= q(t+1) and q(t) > q(0), resolved to the
// larger raw sample of {t, t+1}. Falls back to the global maximum.
PeakResult find_first_peak(EvolutionTrace const &trace);

std::vector<PeakResult> sweep_l1(BipartiteInstance const &base, InitialState init, std::vector<double> const &l1_values,
                                 Index horizon, Engine engine = Engine::Subspace);

PeakResult loopless_reference(BipartiteInstance const &inst, InitialState init, Index horizon,
                              Engine engine = Engine::Subspace);

struct HeatmapOptions
{
  Index horizon = 0; // 0 -> default_horizon
  Engine engine = Engine::Subspace;
  unsigned threads = 1;
};

// Cells are independent; they are evaluated on `threads` workers and the
// result does not depend on scheduling.
HeatmapGrid heatmap(BipartiteInstance const &base, InitialState init, Range const &l1_range, Range const &l2_range,
                    HeatmapMetric metric, HeatmapOptions const &options = {});

} // namespace lackwalk
