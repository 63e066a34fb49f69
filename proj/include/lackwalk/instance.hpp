#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lackwalk {

using Index = std::int64_t;

// Search instance on the complete bipartite graph K_{n1,n2}. Every vertex of X
// carries a self-loop of weight l1, every vertex of Y one of weight l2. The
// marked vertices are the first k1 ids of X and the first k2 ids of Y.
//
// Vertex ids: X = 0 .. n1-1, Y = n1 .. n1+n2-1.
struct BipartiteInstance
{
  Index n1 = 0;
  Index n2 = 0;
  double l1 = 0.0;
  double l2 = 0.0;
  Index k1 = 0;
  Index k2 = 0;

  Index vertex_count() const { return n1 + n2; }
  Index marked_count() const { return k1 + k2; }

  // Real-valued degrees: unweighted edges plus the loop weight.
  double degree_x() const { return static_cast<double>(n2) + l1; }
  double degree_y() const { return static_cast<double>(n1) + l2; }

  bool operator==(BipartiteInstance const &) const = default;
};

// Validates and returns the canonical instance. Throws std::invalid_argument.
BipartiteInstance build_instance(Index n1, Index n2, double l1, double l2, Index k1, Index k2);

// The same search problem with the two partite sets exchanged.
inline BipartiteInstance swap_sets(BipartiteInstance const &inst)
{
  return {inst.n2, inst.n1, inst.l2, inst.l1, inst.k2, inst.k1};
}

inline bool in_x(BipartiteInstance const &inst, Index vertex) { return vertex < inst.n1; }

bool is_marked(BipartiteInstance const &inst, Index vertex);

// A directed arc |tail, head>. Loops have head == tail.
struct ArcIndex
{
  Index tail = 0;
  Index head = 0;

  bool is_loop() const { return tail == head; }
  bool operator==(ArcIndex const &) const = default;
};

// Arcs are stored vertex-major: the n2 + 1 outgoing arcs of X-vertex x occupy
// [x (n2+1), (x+1)(n2+1)), ordered by head Y0 .. Y(n2-1) and then the loop.
// Y-vertex blocks follow with n1 + 1 arcs each, heads X0 .. X(n1-1) then loop.
inline Index arc_count(BipartiteInstance const &inst)
{
  return 2 * inst.n1 * inst.n2 + inst.n1 + inst.n2;
}

inline Index y_block_base(BipartiteInstance const &inst) { return inst.n1 * (inst.n2 + 1); }

inline Index block_begin(BipartiteInstance const &inst, Index vertex)
{
  return in_x(inst, vertex) ? vertex * (inst.n2 + 1)
                            : y_block_base(inst) + (vertex - inst.n1) * (inst.n1 + 1);
}

inline Index block_size(BipartiteInstance const &inst, Index vertex)
{
  return in_x(inst, vertex) ? inst.n2 + 1 : inst.n1 + 1;
}

Index arc_to_index(BipartiteInstance const &inst, ArcIndex arc);
ArcIndex index_to_arc(BipartiteInstance const &inst, Index index);

} // namespace lackwalk
