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

#ifndef ISOWEIGHT_ERROR_H_
#define ISOWEIGHT_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace isoweight {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text or JSON input. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A caller broke a documented precondition.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// The embedder found a Kuratowski subgraph.
class NonPlanarError : public Error {
 public:
  NonPlanarError(const std::string& what, std::vector<int> certificate_edges)
      : Error(what), certificate_edges_(std::move(certificate_edges)) {}
  const std::vector<int>& certificate_edges() const {
    return certificate_edges_;
  }

 private:
  std::vector<int> certificate_edges_;
};

// Decomposition met a piece that is neither planar nor an allowed constant
// graph. The piece is reported by its vertices and edge ids.
class OutOfClassError : public Error {
 public:
  OutOfClassError(const std::string& what, std::vector<int> vertices,
                  std::vector<int> edges)
      : Error(what), vertices_(std::move(vertices)), edges_(std::move(edges)) {}
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<int>& edges() const { return edges_; }

 private:
  std::vector<int> vertices_;
  std::vector<int> edges_;
};

// An in-process postcondition check failed.
class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& what) : Error(what) {}
};

}  // namespace isoweight

#endif  // ISOWEIGHT_ERROR_H_
