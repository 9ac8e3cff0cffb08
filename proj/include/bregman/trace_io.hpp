#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bregman/solver.hpp"

namespace bregman {

// Floats are printed with 17 significant digits so a re-parsed trace is
// bit-identical.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Header n,gamma,objective,displacement,bregman_ref; bregman_ref is blank
// when the run had no reference point. Block-resolved traces append one
// x<i> column per block.
inline void write_trace_csv(std::ostream& os, const IterateTrace& trace,
                            bool with_points = false) {
  os << "n,gamma,objective,displacement,bregman_ref";
  if (with_points && !trace.rows.empty())
    for (std::size_t i = 0; i < trace.rows.front().x.size(); ++i)
      os << ",x" << (i + 1);
  os << "\n";
  for (const TraceRow& r : trace.rows) {
    os << r.n << ',' << format_double(r.gamma) << ',' << format_double(r.objective)
       << ',' << format_double(r.displacement) << ',';
    if (trace.has_ref) os << format_double(r.bregman_ref);
    if (with_points)
      for (double xi : r.x) os << ',' << format_double(xi);
    os << "\n";
  }
}

struct ParsedTraceRow {
  std::size_t n;
  double gamma;
  double objective;
  double displacement;
  double bregman_ref;  // NaN when the column was blank
  std::vector<double> x;
};

inline std::vector<ParsedTraceRow> read_trace_csv(std::istream& is) {
  std::vector<ParsedTraceRow> rows;
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("trace: empty file");
  if (line.rfind("n,gamma,objective,displacement,bregman_ref", 0) != 0)
    throw std::runtime_error("trace: unexpected header: " + line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.push_back("");
    if (cells.size() < 5) throw std::runtime_error("trace: short row: " + line);
    ParsedTraceRow r;
    r.n = std::stoul(cells[0]);
    r.gamma = std::strtod(cells[1].c_str(), nullptr);
    r.objective = std::strtod(cells[2].c_str(), nullptr);
    r.displacement = std::strtod(cells[3].c_str(), nullptr);
    r.bregman_ref = cells[4].empty() ? std::numeric_limits<double>::quiet_NaN()
                                     : std::strtod(cells[4].c_str(), nullptr);
    for (std::size_t i = 5; i < cells.size(); ++i)
      r.x.push_back(std::strtod(cells[i].c_str(), nullptr));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace bregman
