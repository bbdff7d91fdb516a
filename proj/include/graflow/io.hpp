#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graflow/graph.hpp"
#include "graflow/types.hpp"

namespace graflow {

struct EdgeList {
  std::size_t num_vertices = 0;
  std::vector<WeightedEdge> edges;
};

struct MatrixMarketOptions {
  bool force_unit_weights = false;
  bool expand_symmetric = false;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses a Matrix Market `coordinate` file into an edge list. 1-based file
/// indices become 0-based vertex ids; `pattern` entries get weight 1.0;
/// `symmetric` files mirror every off-diagonal entry when expand_symmetric
/// is set (diagonal entries are emitted once). Rectangular matrices and
/// negative weights are rejected.
inline EdgeList parse_matrix_market(std::istream& in,
                                    const MatrixMarketOptions& options = {}) {
  std::size_t lineno = 0;
  std::string line;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(1, "empty input");

  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || object != "matrix" ||
      format != "coordinate")
    throw ParseError(lineno,
                     "malformed header, expected "
                     "'%%MatrixMarket matrix coordinate ...'");
  bool pattern = field == "pattern";
  if (field != "real" && field != "integer" && !pattern)
    throw ParseError(lineno, "unsupported field type '" + field + "'");
  bool symmetric = symmetry == "symmetric";
  if (symmetry != "general" && !symmetric)
    throw ParseError(lineno, "unsupported symmetry '" + symmetry + "'");

  // Size line, after comments.
  std::size_t rows = 0, cols = 0, declared = 0;
  for (;;) {
    if (!next_line()) throw ParseError(lineno + 1, "missing size line");
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ss(line);
    if (!(ss >> rows >> cols >> declared))
      throw ParseError(lineno, "malformed size line");
    break;
  }
  if (rows != cols)
    throw ParseError(lineno, "rectangular matrix (" + std::to_string(rows) +
                                 "x" + std::to_string(cols) +
                                 "), graphs must be square");

  EdgeList out;
  out.num_vertices = rows;
  out.edges.reserve(declared);

  std::size_t found = 0;
  while (next_line()) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ss(line);
    long long i = 0, j = 0;
    double w = 1.0;
    if (!(ss >> i >> j)) throw ParseError(lineno, "malformed entry");
    if (!pattern && !(ss >> w))
      throw ParseError(lineno, "entry missing value");
    if (i < 1 || static_cast<std::size_t>(i) > rows || j < 1 ||
        static_cast<std::size_t>(j) > cols)
      throw ParseError(lineno, "index out of declared bounds");
    if (options.force_unit_weights) w = 1.0;
    if (!std::isfinite(w)) throw ParseError(lineno, "non-finite weight");
    if (w < 0) throw ParseError(lineno, "negative weight");
    ++found;
    if (found > declared)
      throw ParseError(lineno, "entry count mismatch: header declares " +
                                   std::to_string(declared) +
                                   " entries, found more");
    vertex_t src = static_cast<vertex_t>(i - 1);
    vertex_t dst = static_cast<vertex_t>(j - 1);
    out.edges.push_back({src, dst, w});
    if (symmetric && options.expand_symmetric && src != dst)
      out.edges.push_back({dst, src, w});
  }
  if (found != declared)
    throw ParseError(lineno, "entry count mismatch: header declares " +
                                 std::to_string(declared) + " entries, found " +
                                 std::to_string(found));
  return out;
}

inline EdgeList parse_matrix_market(const std::string& text,
                                    const MatrixMarketOptions& options = {}) {
  std::istringstream in(text);
  return parse_matrix_market(in, options);
}

/// One line per vertex: `<vertex> <distance|"inf"> <predecessor|"-">`,
/// distances with 6 significant digits.
inline void write_distances(const std::vector<weight_t>& dist,
                            const std::vector<vertex_t>& pred,
                            std::ostream& sink) {
  if (dist.size() != pred.size())
    throw std::invalid_argument("write_distances: array length mismatch");
  for (std::size_t v = 0; v < dist.size(); ++v) {
    sink << v << ' ';
    if (dist[v] == unreachable) {
      sink << "inf";
    } else {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%g", dist[v]);
      sink << buf;
    }
    sink << ' ';
    if (pred[v] == no_predecessor)
      sink << '-';
    else
      sink << pred[v];
    sink << '\n';
  }
  if (!sink) throw std::runtime_error("write_distances: sink write failure");
}

}  // namespace graflow
