#pragma once

#include "lackwalk/full_walk.hpp"
#include "lackwalk/instance.hpp"
#include "lackwalk/trace.hpp"

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace lackwalk {

enum class SubspaceCase { OneSet, BothSets };

// Reduced dynamics of the search on the span of class-uniform arc states.
// Labels name (tail class, head class); a = marked X, c = unmarked X, and for
// OneSet b = all of Y, for BothSets b = marked Y, d = unmarked Y.
template <typename Real = double>
struct SubspaceModel
{
  using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

  SubspaceCase kind = SubspaceCase::OneSet;
  std::vector<std::string> basis_labels;
  Matrix matrix;
  Vector s_coords;
  Vector sigma_coords;
  std::vector<int> marked_rows;

  Index dim() const { return matrix.rows(); }

  Vector const &coords(InitialState init) const
  {
    return init == InitialState::Uniform ? s_coords : sigma_coords;
  }

  Real success_probability(Vector const &v) const
  {
    Real p = 0;
    for (int r : marked_rows) { p += v[r] * v[r]; }
    return p;
  }
};

using SubspaceModelD = SubspaceModel<double>;

inline std::vector<std::string> one_set_labels() { return {"aa", "ab", "ba", "bb", "bc", "cb", "cc"}; }

inline std::vector<std::string> both_sets_labels()
{
  return {"aa", "ab", "ad", "ba", "bb", "bc", "cb", "cc", "cd", "da", "dc", "dd"};
}

// 7x7 model for k marked vertices, all in X.
template <typename Real = double>
SubspaceModel<Real> build_one_set_model(BipartiteInstance const &inst)
{
  if (inst.k2 != 0) { throw std::invalid_argument("one-set model requires k2 = 0"); }
  if (inst.k1 < 1 || inst.k1 >= inst.n1) { throw std::invalid_argument("one-set model requires 1 <= k1 < n1"); }

  Real const N1 = static_cast<Real>(inst.n1);
  Real const N2 = static_cast<Real>(inst.n2);
  Real const k = static_cast<Real>(inst.k1);
  Real const l1 = static_cast<Real>(inst.l1);
  Real const l2 = static_cast<Real>(inst.l2);
  Real const dx = N2 + l1; // degree in X
  Real const dy = N1 + l2; // degree in Y
  Real const c = N1 - k;
  using std::sqrt;

  SubspaceModel<Real> m;
  m.kind = SubspaceCase::OneSet;
  m.basis_labels = one_set_labels();
  m.marked_rows = {0, 1};
  m.matrix.setZero(7, 7);
  auto &U = m.matrix;

  U(0, 0) = (N2 - l1) / dx;
  U(0, 1) = -2 * sqrt(N2 * l1) / dx;

  U(1, 2) = (2 * k - N1 - l2) / dy;
  U(1, 3) = 2 * sqrt(l2 * k) / dy;
  U(1, 4) = 2 * sqrt(k * c) / dy;

  U(2, 0) = -2 * sqrt(N2 * l1) / dx;
  U(2, 1) = (l1 - N2) / dx;

  U(3, 2) = 2 * sqrt(l2 * k) / dy;
  U(3, 3) = (l2 - N1) / dy;
  U(3, 4) = 2 * sqrt(l2 * c) / dy;

  U(4, 5) = (N2 - l1) / dx;
  U(4, 6) = 2 * sqrt(N2 * l1) / dx;

  U(5, 2) = 2 * sqrt(k * c) / dy;
  U(5, 3) = 2 * sqrt(l2 * c) / dy;
  U(5, 4) = (N1 - 2 * k - l2) / dy;

  U(6, 5) = 2 * sqrt(N2 * l1) / dx;
  U(6, 6) = (l1 - N2) / dx;

  m.s_coords.resize(7);
  m.s_coords << sqrt(k * l1 / dx), sqrt(k * N2 / dx), sqrt(k * N2 / dy), sqrt(N2 * l2 / dy), sqrt(N2 * c / dy),
    sqrt(N2 * c / dx), sqrt(l1 * c / dx);
  m.s_coords /= sqrt(N1 + N2);

  m.sigma_coords.resize(7);
  m.sigma_coords << sqrt(k * l1), sqrt(k * N2), sqrt(k * N2), sqrt(l2 * N2), sqrt(N2 * c), sqrt(N2 * c),
    sqrt(l1 * c);
  m.sigma_coords /= sqrt(2 * N1 * N2 + l1 * N1 + l2 * N2);
  return m;
}

// 12x12 model with marked vertices in both sets, assembled from the nine 4x4
// blocks U1..U9 of the row-block layout [U1 U2 U3; U4 U5 U6; U7 U8 U9].
template <typename Real = double>
SubspaceModel<Real> build_both_sets_model(BipartiteInstance const &inst)
{
  if (inst.k1 < 1 || inst.k1 >= inst.n1) { throw std::invalid_argument("both-sets model requires 1 <= k1 < n1"); }
  if (inst.k2 < 1 || inst.k2 >= inst.n2) { throw std::invalid_argument("both-sets model requires 1 <= k2 < n2"); }

  Real const N1 = static_cast<Real>(inst.n1);
  Real const N2 = static_cast<Real>(inst.n2);
  Real const k1 = static_cast<Real>(inst.k1);
  Real const k2 = static_cast<Real>(inst.k2);
  Real const l1 = static_cast<Real>(inst.l1);
  Real const l2 = static_cast<Real>(inst.l2);
  Real const dx = N2 + l1;
  Real const dy = N1 + l2;
  Real const c = N1 - k1; // unmarked X
  Real const d = N2 - k2; // unmarked Y
  using std::sqrt;

  SubspaceModel<Real> m;
  m.kind = SubspaceCase::BothSets;
  m.basis_labels = both_sets_labels();
  m.marked_rows = {0, 1, 2, 3, 4, 5};
  m.matrix.setZero(12, 12);
  auto blk = [&](int bi, int bj) { return m.matrix.template block<4, 4>(4 * bi, 4 * bj); };

  // U1
  {
    auto B = blk(0, 0);
    B(0, 0) = (N2 - l1) / dx;
    B(0, 1) = -2 * sqrt(k2 * l1) / dx;
    B(0, 2) = -2 * sqrt(l1 * d) / dx;
    B(1, 3) = (N1 + l2 - 2 * k1) / dy;
    B(3, 0) = -2 * sqrt(k2 * l1) / dx;
    B(3, 1) = (N2 + l1 - 2 * k2) / dx;
    B(3, 2) = -2 * sqrt(k2 * d) / dx;
  }
  // U2
  {
    auto B = blk(0, 1);
    B(1, 0) = -2 * sqrt(k1 * l2) / dy;
    B(1, 1) = -2 * sqrt(k1 * c) / dy;
  }
  // U3
  {
    auto B = blk(0, 2);
    B(2, 1) = (2 * k1 - N1 - l2) / dy;
    B(2, 2) = 2 * sqrt(k1 * c) / dy;
    B(2, 3) = 2 * sqrt(k1 * l2) / dy;
  }
  // U4
  {
    auto B = blk(1, 0);
    B(0, 3) = -2 * sqrt(k1 * l2) / dy;
    B(2, 3) = -2 * sqrt(k1 * c) / dy;
  }
  // U5
  {
    auto B = blk(1, 1);
    B(0, 0) = (N1 - l2) / dy;
    B(0, 1) = -2 * sqrt(l2 * c) / dy;
    B(1, 2) = (2 * k2 - N2 - l1) / dx;
    B(1, 3) = 2 * sqrt(k2 * l1) / dx;
    B(2, 0) = -2 * sqrt(l2 * c) / dy;
    B(2, 1) = (2 * k1 + l2 - N1) / dy;
    B(3, 2) = 2 * sqrt(k2 * l1) / dx;
    B(3, 3) = (l1 - N2) / dx;
  }
  // U6
  {
    auto B = blk(1, 2);
    B(1, 0) = 2 * sqrt(k2 * d) / dx;
    B(3, 0) = 2 * sqrt(l1 * d) / dx;
  }
  // U7
  {
    auto B = blk(2, 0);
    B(1, 0) = -2 * sqrt(l1 * d) / dx;
    B(1, 1) = -2 * sqrt(k2 * d) / dx;
    B(1, 2) = (2 * k2 + l1 - N2) / dx;
  }
  // U8
  {
    auto B = blk(2, 1);
    B(2, 2) = 2 * sqrt(k2 * d) / dx;
    B(2, 3) = 2 * sqrt(l1 * d) / dx;
  }
  // U9
  {
    auto B = blk(2, 2);
    B(0, 1) = 2 * sqrt(k1 * c) / dy;
    B(0, 2) = (N1 - 2 * k1 - l2) / dy;
    B(0, 3) = 2 * sqrt(l2 * c) / dy;
    B(2, 0) = (N2 - 2 * k2 - l1) / dx;
    B(3, 1) = 2 * sqrt(k1 * l2) / dy;
    B(3, 2) = 2 * sqrt(l2 * c) / dy;
    B(3, 3) = (l2 - N1) / dy;
  }

  m.s_coords.resize(12);
  m.s_coords << sqrt(k1 * l1 / dx), sqrt(k1 * k2 / dx), sqrt(k1 * d / dx), sqrt(k1 * k2 / dy), sqrt(k2 * l2 / dy),
    sqrt(k2 * c / dy), sqrt(k2 * c / dx), sqrt(l1 * c / dx), sqrt(c * d / dx), sqrt(k1 * d / dy), sqrt(c * d / dy),
    sqrt(l2 * d / dy);
  m.s_coords /= sqrt(N1 + N2);

  m.sigma_coords.resize(12);
  m.sigma_coords << sqrt(k1 * l1), sqrt(k1 * k2), sqrt(k1 * d), sqrt(k1 * k2), sqrt(k2 * l2), sqrt(k2 * c),
    sqrt(k2 * c), sqrt(l1 * c), sqrt(c * d), sqrt(k1 * d), sqrt(c * d), sqrt(l2 * d);
  m.sigma_coords /= sqrt(2 * N1 * N2 + l1 * N1 + l2 * N2);
  return m;
}

// True when the instance has an exact reduced model (possibly after swapping
// the sets so that a one-set problem is marked in X).
inline bool has_subspace_model(BipartiteInstance const &inst)
{
  bool const x_ok = inst.k1 >= 1 && inst.k1 < inst.n1;
  bool const y_ok = inst.k2 >= 1 && inst.k2 < inst.n2;
  return (x_ok && inst.k2 == 0) || (y_ok && inst.k1 == 0) || (x_ok && y_ok);
}

// Picks the reduced model for any supported instance. Y-only marking is
// handled by relabeling the sets, which leaves p(t) unchanged.
template <typename Real = double>
SubspaceModel<Real> build_model(BipartiteInstance const &inst)
{
  if (inst.k1 == 0 && inst.k2 == 0) { throw std::invalid_argument("no marked vertices: no reduced model"); }
  if (inst.k2 == 0) { return build_one_set_model<Real>(inst); }
  if (inst.k1 == 0) { return build_one_set_model<Real>(swap_sets(inst)); }
  return build_both_sets_model<Real>(inst);
}

template <typename Real>
EvolutionTrace evolve_subspace(SubspaceModel<Real> const &model, InitialState init, Index steps)
{
  EvolutionTrace trace;
  trace.engine = Engine::Subspace;
  trace.probs.reserve(static_cast<std::size_t>(steps) + 1);
  typename SubspaceModel<Real>::Vector v = model.coords(init);
  typename SubspaceModel<Real>::Vector next(v.size());
  trace.probs.push_back(static_cast<double>(model.success_probability(v)));
  for (Index t = 0; t < steps; ++t) {
    next.noalias() = model.matrix * v;
    v.swap(next);
    trace.probs.push_back(static_cast<double>(model.success_probability(v)));
  }
  return trace;
}

// Coordinates of a full state on the class-uniform basis of the matching
// model. Each coordinate is the amplitude sum over its arc class divided by
// sqrt(class size). Requires the same marking the model was built for
// (no set swap).
template <typename Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> project_to_subspace(ArcState<Real> const &psi,
                                                                          SubspaceCase kind)
{
  auto const &inst = psi.instance;
  int const dim = kind == SubspaceCase::OneSet ? 7 : 12;
  std::vector<std::complex<Real>> sums(dim, std::complex<Real>(0));
  std::vector<Real> counts(dim, Real(0));

  auto label_of = [&](ArcIndex arc) -> int {
    bool const tx = in_x(inst, arc.tail);
    bool const tm = is_marked(inst, arc.tail);
    bool const hm = is_marked(inst, arc.head);
    if (kind == SubspaceCase::OneSet) {
      // aa ab ba bb bc cb cc
      if (tx) {
        if (arc.is_loop()) { return tm ? 0 : 6; }
        return tm ? 1 : 5;
      }
      if (arc.is_loop()) { return 3; }
      return hm ? 2 : 4;
    }
    // aa ab ad ba bb bc cb cc cd da dc dd
    if (tx) {
      if (arc.is_loop()) { return tm ? 0 : 7; }
      if (tm) { return hm ? 1 : 2; }
      return hm ? 6 : 8;
    }
    if (arc.is_loop()) { return tm ? 4 : 11; }
    if (tm) { return hm ? 3 : 5; }
    return hm ? 9 : 10;
  };

  for (Index i = 0; i < arc_count(inst); ++i) {
    int const lbl = label_of(index_to_arc(inst, i));
    sums[lbl] += psi.amplitudes[i];
    counts[lbl] += 1;
  }
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> out(dim);
  for (int i = 0; i < dim; ++i) { out[i] = counts[i] > 0 ? sums[i] / std::sqrt(counts[i]) : std::complex<Real>(0); }
  return out;
}

} // namespace lackwalk
