// Copyright 2026 The isoweight Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isoweight/io.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "isoweight/error.h"

namespace isoweight {
namespace {

// Parses a non-negative decimal that must fit in an int.
bool ParseCount(const std::string& token, int* out) {
  if (token.empty() || token.size() > 9) return false;
  int value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') return false;
    value = value * 10 + (ch - '0');
  }
  *out = value;
  return true;
}

}  // namespace

Multigraph ParseGraph(std::istream& in) {
  Multigraph g;
  std::string line;
  int line_no = 0;
  int n = -1;
  int m = -1;
  int header_line = 0;
  EdgeId next_id = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind)) continue;
    if (kind == "c") continue;
    std::vector<std::string> args;
    std::string tok;
    while (tokens >> tok) args.push_back(tok);
    if (kind == "p") {
      if (n >= 0) throw ParseError("duplicate header", line_no);
      if (args.size() != 2 || !ParseCount(args[0], &n) ||
          !ParseCount(args[1], &m)) {
        throw ParseError("expected 'p <n> <m>'", line_no);
      }
      header_line = line_no;
      for (VertexId v = 1; v <= n; ++v) g.AddVertex(v);
    } else if (kind == "e") {
      if (n < 0) throw ParseError("edge before header", line_no);
      int u = 0;
      int v = 0;
      if (args.size() != 2 || !ParseCount(args[0], &u) ||
          !ParseCount(args[1], &v)) {
        throw ParseError("expected 'e <u> <v>'", line_no);
      }
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError("vertex out of range 1.." + std::to_string(n),
                         line_no);
      }
      if (next_id > m) throw ParseError("more edges than declared", line_no);
      g.AddEdge(next_id++, u, v, EdgeTag::kReal);
    } else {
      throw ParseError("unknown line type '" + kind + "'", line_no);
    }
  }
  if (n < 0) throw ParseError("missing 'p' header", line_no + 1);
  if (next_id - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(next_id - 1),
                     header_line);
  }
  return g;
}

Multigraph ParseGraphString(const std::string& text) {
  std::istringstream in(text);
  return ParseGraph(in);
}

Multigraph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return ParseGraph(in);
}

void WriteGraph(std::ostream& out, const Multigraph& g) {
  int n = g.num_vertices();
  int m = g.num_edges();
  if (n > 0 && (*g.vertices().begin() != 1 || g.MaxVertexId() != n)) {
    throw PreconditionError("vertices must be 1..n");
  }
  if (m > 0 && (g.edges().begin()->first != 1 || g.MaxEdgeId() != m)) {
    throw PreconditionError("edge ids must be 1..m");
  }
  out << "p " << n << " " << m << "\n";
  for (const auto& [id, e] : g.edges()) out << "e " << e.u << " " << e.v << "\n";
}

std::string GraphToString(const Multigraph& g) {
  std::ostringstream out;
  WriteGraph(out, g);
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

}  // namespace isoweight
