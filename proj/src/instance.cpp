#include "lackwalk/instance.hpp"

#include <cmath>

namespace lackwalk {

BipartiteInstance build_instance(Index n1, Index n2, double l1, double l2, Index k1, Index k2)
{
  if (n1 <= 0 || n2 <= 0) { throw std::invalid_argument("set sizes n1, n2 must be positive"); }
  if (!std::isfinite(l1) || !std::isfinite(l2) || l1 < 0.0 || l2 < 0.0) {
    throw std::invalid_argument("self-loop weights l1, l2 must be finite and nonnegative");
  }
  if (k1 < 0 || k2 < 0) { throw std::invalid_argument("marked counts k1, k2 must be nonnegative"); }
  if (k1 > n1) { throw std::invalid_argument("k1 exceeds n1"); }
  if (k2 > n2) { throw std::invalid_argument("k2 exceeds n2"); }
  return {n1, n2, l1, l2, k1, k2};
}

bool is_marked(BipartiteInstance const &inst, Index vertex)
{
  if (vertex < 0 || vertex >= inst.vertex_count()) {
    throw std::out_of_range("vertex id " + std::to_string(vertex) + " out of range");
  }
  return in_x(inst, vertex) ? vertex < inst.k1 : (vertex - inst.n1) < inst.k2;
}

Index arc_to_index(BipartiteInstance const &inst, ArcIndex arc)
{
  Index const nv = inst.vertex_count();
  if (arc.tail < 0 || arc.tail >= nv || arc.head < 0 || arc.head >= nv) {
    throw std::out_of_range("arc endpoint out of range");
  }
  bool const tail_x = in_x(inst, arc.tail);
  Index const base = block_begin(inst, arc.tail);
  if (arc.is_loop()) { return base + block_size(inst, arc.tail) - 1; }
  if (tail_x == in_x(inst, arc.head)) { throw std::invalid_argument("arc joins two vertices of the same set"); }
  return base + (tail_x ? arc.head - inst.n1 : arc.head);
}

ArcIndex index_to_arc(BipartiteInstance const &inst, Index index)
{
  if (index < 0 || index >= arc_count(inst)) { throw std::out_of_range("arc index out of range"); }
  Index const ybase = y_block_base(inst);
  if (index < ybase) {
    Index const x = index / (inst.n2 + 1);
    Index const j = index % (inst.n2 + 1);
    return {x, j == inst.n2 ? x : inst.n1 + j};
  }
  Index const y = (index - ybase) / (inst.n1 + 1);
  Index const j = (index - ybase) % (inst.n1 + 1);
  Index const vy = inst.n1 + y;
  return {vy, j == inst.n1 ? vy : j};
}

} // namespace lackwalk
