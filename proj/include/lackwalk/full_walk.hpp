#pragma once

#include "lackwalk/instance.hpp"
#include "lackwalk/trace.hpp"

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <utility>

namespace lackwalk {

// State vector over every directed arc of K_{n1,n2} with its self-loops.
// Operators are structured O(arc count) kernels; no matrix is ever formed.
template <typename Real = double>
struct ArcState
{
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BipartiteInstance instance;
  Vector amplitudes;

  ArcState() = default;
  explicit ArcState(BipartiteInstance const &inst)
    : instance(inst), amplitudes(Vector::Zero(arc_count(inst)))
  {}

  Real norm() const { return amplitudes.norm(); }
};

using ArcStateD = ArcState<double>;

namespace detail {

// Visits every vertex block as (first arc, block length, loop weight).
template <typename Real, typename F>
void for_each_block(BipartiteInstance const &inst, F &&f)
{
  Index const nx = inst.n2 + 1;
  Index const ny = inst.n1 + 1;
  Index const ybase = y_block_base(inst);
  for (Index x = 0; x < inst.n1; ++x) { f(x * nx, nx, static_cast<Real>(inst.l1)); }
  for (Index y = 0; y < inst.n2; ++y) { f(ybase + y * ny, ny, static_cast<Real>(inst.l2)); }
}

} // namespace detail

// Eq. (1)-style uniform start: probability 1/(n1+n2) on each vertex, spread over
// its outgoing arcs in proportion to edge weight.
template <typename Real = double>
ArcState<Real> initial_uniform(BipartiteInstance const &inst)
{
  ArcState<Real> psi(inst);
  Real const vshare = Real(1) / std::sqrt(static_cast<Real>(inst.vertex_count()));
  detail::for_each_block<Real>(inst, [&](Index begin, Index len, Real l) {
    Real const deg = static_cast<Real>(len - 1) + l;
    Real const edge = vshare / std::sqrt(deg);
    psi.amplitudes.segment(begin, len - 1).setConstant(edge);
    psi.amplitudes[begin + len - 1] = edge * std::sqrt(l);
  });
  return psi;
}

// Stationary state of the walk without oracle: amplitude proportional to the
// square root of each arc weight.
template <typename Real = double>
ArcState<Real> initial_stationary(BipartiteInstance const &inst)
{
  ArcState<Real> psi(inst);
  Real const n1 = static_cast<Real>(inst.n1);
  Real const n2 = static_cast<Real>(inst.n2);
  Real const scale =
    Real(1) / std::sqrt(2 * n1 * n2 + static_cast<Real>(inst.l1) * n1 + static_cast<Real>(inst.l2) * n2);
  detail::for_each_block<Real>(inst, [&](Index begin, Index len, Real l) {
    psi.amplitudes.segment(begin, len - 1).setConstant(scale);
    psi.amplitudes[begin + len - 1] = scale * std::sqrt(l);
  });
  return psi;
}

template <typename Real = double>
ArcState<Real> initial_state(BipartiteInstance const &inst, InitialState init)
{
  return init == InitialState::Uniform ? initial_uniform<Real>(inst) : initial_stationary<Real>(inst);
}

// Q: negate every arc whose tail is marked. Marked vertices are block prefixes
// of each set, so the affected arcs form two contiguous ranges.
template <typename Real>
ArcState<Real> apply_oracle(ArcState<Real> psi)
{
  auto const &inst = psi.instance;
  psi.amplitudes.head(inst.k1 * (inst.n2 + 1)) *= Real(-1);
  psi.amplitudes.segment(y_block_base(inst), inst.k2 * (inst.n1 + 1)) *= Real(-1);
  return psi;
}

// C: per vertex, reflect the block about |s_u> = (1, ..., 1, sqrt(l)) / sqrt(deg).
template <typename Real>
ArcState<Real> apply_coin(ArcState<Real> psi)
{
  using Scalar = typename ArcState<Real>::Scalar;
  detail::for_each_block<Real>(psi.instance, [&](Index begin, Index len, Real l) {
    auto block = psi.amplitudes.segment(begin, len);
    Real const root_l = std::sqrt(l);
    Real const deg = static_cast<Real>(len - 1) + l;
    Scalar const proj = (block.head(len - 1).sum() + root_l * block[len - 1]) / deg;
    Scalar const twice = Real(2) * proj;
    block.head(len - 1) = (-block.head(len - 1).array() + twice).matrix();
    block[len - 1] = twice * root_l - block[len - 1];
  });
  return psi;
}

// S: |uv> <-> |vu>; loops are fixed.
template <typename Real>
ArcState<Real> apply_shift(ArcState<Real> psi)
{
  auto const &inst = psi.instance;
  Index const ybase = y_block_base(inst);
  for (Index x = 0; x < inst.n1; ++x) {
    for (Index y = 0; y < inst.n2; ++y) {
      std::swap(psi.amplitudes[x * (inst.n2 + 1) + y], psi.amplitudes[ybase + y * (inst.n1 + 1) + x]);
    }
  }
  return psi;
}

template <typename Real>
ArcState<Real> apply_walk_step(ArcState<Real> psi)
{
  return apply_shift(apply_coin(std::move(psi)));
}

// One search step U = S C Q.
template <typename Real>
ArcState<Real> apply_search_step(ArcState<Real> psi)
{
  return apply_shift(apply_coin(apply_oracle(std::move(psi))));
}

// Total probability on arcs whose tail is marked.
template <typename Real>
Real success_probability(ArcState<Real> const &psi)
{
  auto const &inst = psi.instance;
  return psi.amplitudes.head(inst.k1 * (inst.n2 + 1)).squaredNorm()
         + psi.amplitudes.segment(y_block_base(inst), inst.k2 * (inst.n1 + 1)).squaredNorm();
}

// p(t) for t = 0..steps. The caller's state is left untouched.
template <typename Real>
EvolutionTrace evolve(ArcState<Real> psi, Index steps)
{
  EvolutionTrace trace;
  trace.engine = Engine::Full;
  trace.probs.reserve(static_cast<std::size_t>(steps) + 1);
  trace.probs.push_back(static_cast<double>(success_probability(psi)));
  for (Index t = 0; t < steps; ++t) {
    psi = apply_search_step(std::move(psi));
    trace.probs.push_back(static_cast<double>(success_probability(psi)));
  }
  return trace;
}

} // namespace lackwalk
