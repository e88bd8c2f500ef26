#pragma once

/**
 * @file io.hpp
 * @brief Text formats for complexes, cell sets, and vertex maps.
 *
 * Complex files (.cx):   lines `simplex v0 v1 ... vk`.  Maximal simplices
 *                        suffice; the closure under faces is taken on load.
 * Cell-set files (.cells): lines `cell v0 ... vk`, one open cell each.
 * Map files (.map):      lines `map v -> w` (also accepted: `v -> w` and
 *                        `map v w`); the assignment must be total.
 * Everywhere: `#` starts a comment, blank lines are ignored, tokens are
 * whitespace-separated.  Serialization is canonical, so loading and saving
 * is deterministic and diff-stable.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/core.hpp"

namespace lefschetz {

namespace io_detail {

/// Strips comments and splits a line into tokens.
inline std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line;
  if (auto hash = body.find('#'); hash != std::string::npos)
    body.resize(hash);
  std::istringstream in(body);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_parse("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace io_detail

/// Parses complex text: `simplex ...` lines.
inline ComplexPtr parse_complex(const std::vector<std::string>& lines,
                                const std::string& origin = "<input>") {
  std::vector<std::vector<std::string>> simplices;
  int number = 0;
  for (const std::string& line : lines) {
    ++number;
    auto tokens = io_detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] != "simplex")
      throw_parse(origin + ":" + std::to_string(number) +
                  ": expected 'simplex', got '" + tokens[0] + "'");
    if (tokens.size() < 2)
      throw_parse(origin + ":" + std::to_string(number) +
                  ": simplex needs at least one vertex");
    simplices.push_back({tokens.begin() + 1, tokens.end()});
  }
  if (simplices.empty())
    throw_parse(origin + ": no simplices found");
  return build_complex(simplices);
}

inline ComplexPtr parse_complex(const std::string& text,
                                const std::string& origin = "<input>") {
  return parse_complex(io_detail::split_lines(text), origin);
}

inline ComplexPtr load_complex(const std::string& path) {
  return parse_complex(io_detail::read_lines(path), path);
}

/// Parses cell-set text on a given complex: `cell ...` lines.
inline CellSet parse_cellset(const ComplexPtr& X,
                             const std::vector<std::string>& lines,
                             const std::string& origin = "<input>") {
  CellSet A(X);
  int number = 0;
  for (const std::string& line : lines) {
    ++number;
    auto tokens = io_detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] != "cell")
      throw_parse(origin + ":" + std::to_string(number) +
                  ": expected 'cell', got '" + tokens[0] + "'");
    if (tokens.size() < 2)
      throw_parse(origin + ":" + std::to_string(number) +
                  ": cell needs at least one vertex");
    const Simplex s =
        X->simplex_from_tokens({tokens.begin() + 1, tokens.end()});
    if (!X->contains(s))
      throw_parse(origin + ":" + std::to_string(number) +
                  ": cell is not a simplex of the complex: " + X->label(s));
    A.insert(s);
  }
  return A;
}

inline CellSet parse_cellset(const ComplexPtr& X, const std::string& text,
                             const std::string& origin = "<input>") {
  return parse_cellset(X, io_detail::split_lines(text), origin);
}

inline CellSet load_cellset(const ComplexPtr& X, const std::string& path) {
  return parse_cellset(X, io_detail::read_lines(path), path);
}

/// Parses vertex-map text: `map v -> w` / `v -> w` / `map v w` lines.
inline VertexSelfMap parse_map(const ComplexPtr& X,
                               const std::vector<std::string>& lines,
                               const std::string& origin = "<input>") {
  std::vector<std::pair<std::string, std::string>> pairs;
  int number = 0;
  for (const std::string& line : lines) {
    ++number;
    auto tokens = io_detail::tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "map") tokens.erase(tokens.begin());
    if (tokens.size() == 3 && tokens[1] == "->")
      pairs.emplace_back(tokens[0], tokens[2]);
    else if (tokens.size() == 2)
      pairs.emplace_back(tokens[0], tokens[1]);
    else
      throw_parse(origin + ":" + std::to_string(number) +
                  ": expected 'map v -> w'");
  }
  return VertexSelfMap::from_token_pairs(X, pairs);
}

inline VertexSelfMap parse_map(const ComplexPtr& X, const std::string& text,
                               const std::string& origin = "<input>") {
  return parse_map(X, io_detail::split_lines(text), origin);
}

inline VertexSelfMap load_map(const ComplexPtr& X, const std::string& path) {
  return parse_map(X, io_detail::read_lines(path), path);
}

/// Canonical complex text: every maximal simplex, in canonical order.
inline std::string serialize_complex(const SimplicialComplex& X) {
  std::string out;
  for (int p = 0; p <= X.dim(); ++p)
    for (const Simplex& s : X.cells(p)) {
      if (p < X.dim() && X.coface_count(s, p + 1) > 0) continue;
      out += "simplex";
      for (Vertex v : s) out += ' ' + X.token(v);
      out += '\n';
    }
  return out;
}

/// Canonical cell-set text: every member cell, in canonical order.
inline std::string serialize_cellset(const CellSet& A) {
  std::string out;
  const SimplicialComplex& X = A.complex();
  A.for_each([&](int /*p*/, int /*i*/, const Simplex& s) {
    out += "cell";
    for (Vertex v : s) out += ' ' + X.token(v);
    out += '\n';
  });
  return out;
}

/// Canonical map text: one line per vertex, in canonical vertex order.
inline std::string serialize_map(const VertexSelfMap& phi) {
  std::string out;
  const SimplicialComplex& X = phi.complex();
  for (int v = 0; v < X.num_vertices(); ++v)
    out += "map " + X.token(v) + " -> " + X.token(phi(v)) + '\n';
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw_parse("cannot write file: " + path);
  out << content;
}

}  // namespace lefschetz
