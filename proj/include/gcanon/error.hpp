// Copyright 2026 The gcanon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GCANON_ERROR_HPP_
#define GCANON_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcanon {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graphs on zero vertices are rejected everywhere.
class ZeroVertexError : public Error {
 public:
  ZeroVertexError() : Error("zero-vertex graphs are not supported") {}
};

// Mismatched vertex counts between a graph, permutation or colouring.
class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

// Vertex count above the configured cap (see max_vertices()).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A malformed Graph6/Sparse6 string. offset() is the byte position of the
// problem within the string.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t offset, const std::string& what)
      : Error("offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Bad filter specification (unknown key, type mismatch, ...).
class FilterSpecError : public Error {
 public:
  using Error::Error;
};

// Failure on one item of a sequence; index() is 0-based.
class ItemError : public Error {
 public:
  ItemError(std::size_t index, const std::string& what)
      : Error("item " + std::to_string(index) + ": " + what), index_(index) {}

  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace gcanon

#endif  // GCANON_ERROR_HPP_
