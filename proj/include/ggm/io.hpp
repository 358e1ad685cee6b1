#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ggm/errors.hpp"
#include "ggm/graph.hpp"
#include "ggm/linalg.hpp"

namespace ggm {

namespace detail {

inline std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

/// Parses a whole token as an integer; no trailing garbage.
inline bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  char* end = nullptr;
  out = std::strtoll(tok.c_str(), &end, 10);
  return end == tok.c_str() + tok.size();
}

}  // namespace detail

/// Edge-list format: the first non-comment line holds the order m, every
/// further line one edge "i j" (1-based). '#' starts a comment.
inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int m = -1;
  Graph g;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    std::istringstream fields(line);
    std::vector<std::string> toks;
    for (std::string t; fields >> t;) toks.push_back(t);
    if (m < 0) {
      long long v = 0;
      if (toks.size() != 1 || !detail::parse_int(toks[0], v)) throw parse_error(line_no, "expected the vertex count");
      if (v < 1 || v > max_order)
        throw parse_error(line_no, "vertex count must be between 1 and " + std::to_string(max_order));
      m = static_cast<int>(v);
      g = Graph(m);
      continue;
    }
    long long a = 0, b = 0;
    if (toks.size() != 2 || !detail::parse_int(toks[0], a) || !detail::parse_int(toks[1], b))
      throw parse_error(line_no, "expected an edge \"i j\"");
    if (a < 1 || a > m || b < 1 || b > m)
      throw parse_error(line_no, "vertex out of range 1.." + std::to_string(m));
    if (a == b) throw parse_error(line_no, "self-loop at vertex " + std::to_string(a));
    const int i = static_cast<int>(a) - 1, j = static_cast<int>(b) - 1;
    if (g.adjacent(i, j))
      throw parse_error(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    g.add_edge(i, j);
  }
  if (m < 0) throw parse_error(line_no + 1, "missing vertex count");
  return g;
}

inline std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [i, j] : g.edges()) out += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  return out;
}

/// Dense matrix from CSV: one row per line, comma-separated decimal floats,
/// no header. Blank lines and '#' comments are skipped.
inline Matrix parse_matrix_csv(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) {
      const auto first = cell.find_first_not_of(" \t\r");
      const auto last = cell.find_last_not_of(" \t\r");
      if (first == std::string::npos) throw parse_error(line_no, "empty field");
      const std::string tok = cell.substr(first, last - first + 1);
      char* end = nullptr;
      const double v = std::strtod(tok.c_str(), &end);
      if (end != tok.c_str() + tok.size()) throw parse_error(line_no, "not a number: \"" + tok + "\"");
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw parse_error(line_no, "expected " + std::to_string(rows.front().size()) + " fields");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Matrix(0, 0);
  Matrix x(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  return x;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ggm
