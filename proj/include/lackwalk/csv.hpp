#pragma once

#include "lackwalk/experiments.hpp"
#include "lackwalk/trace.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lackwalk::csv {

// All numbers are written with 17 significant digits, which round-trips any
// double exactly.
std::string format_double(double value);

// Header `t,p`, one row per step.
void write_trace(std::ostream &out, EvolutionTrace const &trace);
EvolutionTrace read_trace(std::istream &in);

// Header `l1,l2,t_star,p_star,T,loopless_T`, row-major over (l1, l2).
void write_heatmap(std::ostream &out, HeatmapGrid const &grid);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Header `key,value`.
void write_key_values(std::ostream &out, KeyValues const &rows);
KeyValues read_key_values(std::istream &in);

} // namespace lackwalk::csv
