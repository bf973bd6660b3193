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

// Text graph format:
//
//   c any comment
//   p <n> <m>
//   e <u> <v>      (m lines, vertices 1..n, edge ids 1..m in file order)

#ifndef ISOWEIGHT_IO_H_
#define ISOWEIGHT_IO_H_

#include <iosfwd>
#include <string>

#include "isoweight/graph.h"

namespace isoweight {

// Throws ParseError carrying the offending line number.
Multigraph ParseGraph(std::istream& in);
Multigraph ParseGraphString(const std::string& text);
Multigraph ReadGraphFile(const std::string& path);

// Requires vertices 1..n and edge ids 1..m.
void WriteGraph(std::ostream& out, const Multigraph& g);
std::string GraphToString(const Multigraph& g);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace isoweight

#endif  // ISOWEIGHT_IO_H_
