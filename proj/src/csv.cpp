#include "lackwalk/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace lackwalk::csv {

namespace {

double parse_double(std::string const &field)
{
  if (field == "inf") { return std::numeric_limits<double>::infinity(); }
  std::size_t used = 0;
  double const v = std::stod(field, &used);
  if (used != field.size()) { throw std::runtime_error("malformed number '" + field + "'"); }
  return v;
}

std::vector<std::string> split(std::string const &line)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t const comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) { break; }
    start = comma + 1;
  }
  return out;
}

void strip_cr(std::string &line)
{
  if (!line.empty() && line.back() == '\r') { line.pop_back(); }
}

} // namespace

std::string format_double(double value)
{
  if (std::isinf(value)) { return value > 0 ? "inf" : "-inf"; }
  char buf[64];
  auto const res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return {buf, res.ptr};
}

void write_trace(std::ostream &out, EvolutionTrace const &trace)
{
  out << "t,p\n";
  for (std::size_t t = 0; t < trace.probs.size(); ++t) { out << t << ',' << format_double(trace.probs[t]) << '\n'; }
}

EvolutionTrace read_trace(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line)) { throw std::runtime_error("empty trace file"); }
  strip_cr(line);
  if (line != "t,p") { throw std::runtime_error("trace header must be 't,p'"); }
  EvolutionTrace trace;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) { continue; }
    auto const f = split(line);
    if (f.size() != 2) { throw std::runtime_error("trace row must have 2 fields"); }
    if (std::stoul(f[0]) != trace.probs.size()) { throw std::runtime_error("trace rows out of order"); }
    trace.probs.push_back(parse_double(f[1]));
  }
  return trace;
}

void write_heatmap(std::ostream &out, HeatmapGrid const &grid)
{
  out << "l1,l2,t_star,p_star,T,loopless_T\n";
  std::string const loopless = format_double(grid.loopless.total_runtime);
  for (std::size_t i = 0; i < grid.l1_values.size(); ++i) {
    for (std::size_t j = 0; j < grid.l2_values.size(); ++j) {
      auto const &c = grid.cell(i, j);
      out << format_double(grid.l1_values[i]) << ',' << format_double(grid.l2_values[j]) << ',' << c.t_star << ','
          << format_double(c.p_star) << ',' << format_double(c.total_runtime) << ',' << loopless << '\n';
    }
  }
}

void write_key_values(std::ostream &out, KeyValues const &rows)
{
  out << "key,value\n";
  for (auto const &[k, v] : rows) { out << k << ',' << v << '\n'; }
}

KeyValues read_key_values(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line)) { throw std::runtime_error("empty key-value file"); }
  KeyValues rows;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) { continue; }
    auto const comma = line.find(',');
    if (comma == std::string::npos) { throw std::runtime_error("key-value row without comma"); }
    rows.emplace_back(line.substr(0, comma), line.substr(comma + 1));
  }
  return rows;
}

} // namespace lackwalk::csv
