#include "lackwalk/analytics.hpp"
#include "lackwalk/experiments.hpp"
#include "lackwalk/full_walk.hpp"

#include <doctest.h>

#include <cmath>

using namespace lackwalk;

namespace {

EvolutionTrace make_trace(std::vector<double> p)
{
  EvolutionTrace t;
  t.probs = std::move(p);
  return t;
}

} // namespace

TEST_CASE("range values")
{
  CHECK(Range{0, 1, 5}.values() == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
  CHECK(Range{3, 7, 1}.values() == std::vector<double>{3});
  auto const v = Range{0, 100, 41}.values();
  CHECK(v.size() == 41);
  CHECK(v.back() == 100);
  CHECK(v[6] == doctest::Approx(15));
}

TEST_CASE("first peak on a smooth rise and fall")
{
  auto const r = find_first_peak(make_trace({0.1, 0.3, 0.6, 0.8, 0.7, 0.4, 0.9}));
  CHECK(r.t_star == 3);
  CHECK(r.p_star == 0.8);
  CHECK(r.total_runtime == doctest::Approx(3 / 0.8));
}

TEST_CASE("first peak ignores the parity zigzag")
{
  // odd steps lag even steps on the way up, a pattern typical of bipartite walks
  auto const r = find_first_peak(make_trace({0.01, 0.01, 0.2, 0.2, 0.5, 0.5, 0.7, 0.69, 0.4, 0.4, 0.1, 0.1}));
  CHECK(r.t_star == 6);
  CHECK(r.p_star == 0.7);
}

TEST_CASE("first peak resolves to the larger sample of a pair")
{
  auto const r = find_first_peak(make_trace({0.0, 0.1, 0.3, 0.5, 0.45, 0.52, 0.2, 0.2, 0.1}));
  CHECK(r.t_star == 5);
  CHECK(r.p_star == 0.52);
}

TEST_CASE("first peak falls back to the global maximum")
{
  auto const r = find_first_peak(make_trace({0.1, 0.2, 0.3, 0.4}));
  CHECK(r.t_star == 3);
  CHECK(find_first_peak(make_trace({0, 0, 0})).p_star == 0);
}

TEST_CASE("compute_trace engines agree")
{
  auto const g = build_instance(8, 6, 0.5, 2.0, 1, 0);
  auto const full = compute_trace(g, InitialState::Uniform, Engine::Full, 50);
  auto const sub = compute_trace(g, InitialState::Uniform, Engine::Subspace, 50);
  CHECK(full.engine == Engine::Full);
  CHECK(sub.engine == Engine::Subspace);
  for (std::size_t t = 0; t < full.size(); ++t) { CHECK(full[t] == doctest::Approx(sub[t]).epsilon(1e-12)); }
}

TEST_CASE("compute_trace edge cases")
{
  auto const none = compute_trace(build_instance(4, 4, 1, 1, 0, 0), InitialState::Uniform, Engine::Full, 5);
  CHECK(none.size() == 6);
  for (double p : none.probs) { CHECK(p == 0); }
  CHECK(compute_trace(build_instance(4, 4, 1, 1, 1, 0), InitialState::Stationary, Engine::Subspace, 0).size() == 1);
  CHECK_THROWS(compute_trace(build_instance(40, 40, 1, 1, 1, 2), InitialState::Stationary, Engine::Analytic, 10));
  auto const a = compute_trace(build_instance(900, 700, 1, 1, 0, 3), InitialState::Stationary, Engine::Analytic, 10);
  CHECK(a.engine == Engine::Analytic);
}

TEST_CASE("symmetric analytic trace approaches the exact one")
{
  auto gap = [](Index n) {
    auto const g = build_instance(n / 2, n / 2, 5, 5, 5, 5);
    auto const a = compute_trace(g, InitialState::Uniform, Engine::Analytic, 60);
    auto const e = compute_trace(g, InitialState::Uniform, Engine::Subspace, 60);
    double worst = 0;
    for (std::size_t t = 0; t < a.size(); ++t) { worst = std::max(worst, std::abs(a[t] - e[t])); }
    return worst;
  };
  double const coarse = gap(2000), fine = gap(8000);
  CHECK(coarse < 0.07);
  CHECK(coarse / fine >= 1.4);
}

TEST_CASE("stationary peak lands near the closed form")
{
  auto const g = build_instance(1000, 800, 1.2, 0.0, 3, 0);
  auto const peak = find_first_peak(compute_trace(g, InitialState::Stationary, Engine::Subspace, default_horizon(g)));
  auto const pred = one_set_peak(g, InitialState::Stationary);
  CHECK(std::abs(static_cast<double>(peak.t_star) - pred.t_star) <= 1.0);
  CHECK(std::abs(peak.p_star - pred.p_star) <= 0.01);
}

TEST_CASE("exact peak barely depends on l2 at the optimal l1")
{
  double lo = 1, hi = 0;
  for (double l2 : {0.0, 1.0, 5.0, 10.0}) {
    auto const g = build_instance(1000, 800, 1.2, l2, 3, 0);
    double const p = find_first_peak(compute_trace(g, InitialState::Uniform, Engine::Subspace, 200)).p_star;
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  CHECK(hi - lo < 5e-3);
}

TEST_CASE("sweep_l1 and the loopless reference")
{
  auto const g = build_instance(500, 500, 0, 0, 1, 0);
  auto const r = sweep_l1(g, InitialState::Stationary, {0.0, 1.0}, 300);
  REQUIRE(r.size() == 2);
  auto const ref = loopless_reference(g, InitialState::Stationary, 300);
  CHECK(r[0].p_star == ref.p_star);
  CHECK(r[1].p_star > ref.p_star);
  CHECK_THROWS(sweep_l1(g, InitialState::Stationary, {1.0}, 2));
}

TEST_CASE("heatmap is independent of the thread count")
{
  auto const g = build_instance(300, 500, 0, 0, 2, 1);
  HeatmapOptions one, many;
  many.threads = 4;
  auto const a = heatmap(g, InitialState::Stationary, {0, 10, 5}, {0, 10, 4}, HeatmapMetric::TotalRuntime, one);
  auto const b = heatmap(g, InitialState::Stationary, {0, 10, 5}, {0, 10, 4}, HeatmapMetric::TotalRuntime, many);
  REQUIRE(a.cells.size() == 20);
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].t_star == b.cells[i].t_star);
    CHECK(a.cells[i].p_star == b.cells[i].p_star);
  }
  CHECK(a.loopless.p_star == a.cell(0, 0).p_star);
  CHECK(a.value(2, 3) == a.cell(2, 3).total_runtime);
}

TEST_CASE("heatmap reports worker failures")
{
  auto const g = build_instance(6, 6, 0, 0, 6, 0);
  HeatmapOptions opts;
  opts.threads = 2;
  CHECK_THROWS(heatmap(g, InitialState::Uniform, {0, 1, 2}, {0, 1, 2}, HeatmapMetric::PeakProbability, opts));
}
