// Copyright 2026 The mincontrol Authors.
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

#ifndef MINCONTROL_STRUCTURE_H_
#define MINCONTROL_STRUCTURE_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mincontrol/numerics.h"

namespace mincontrol {

// Zero/nonzero pattern of a vector. Text form is a string over '0' and '*'.
class StructuralVector {
 public:
  // All-zero pattern of the given length (length must be positive).
  explicit StructuralVector(std::size_t length);

  static StructuralVector FromString(std::string_view text);
  static StructuralVector FromPositions(std::span<const std::size_t> positions,
                                       std::size_t length);

  std::size_t size() const { return stars_.size(); }
  bool is_star(std::size_t i) const { return stars_.at(i) != 0; }
  void set_star(std::size_t i, bool star = true) { stars_.at(i) = star ? 1 : 0; }

  // ||.||_0
  std::size_t count() const;
  std::vector<std::size_t> positions() const;
  std::string ToString() const;

  friend bool operator==(const StructuralVector&,
                         const StructuralVector&) = default;

 private:
  std::vector<unsigned char> stars_;
};

// Row-major zero/nonzero pattern of a matrix.
class StructuralMatrix {
 public:
  StructuralMatrix(std::size_t rows, std::size_t cols);

  // One string per row, e.g. {"**", "0*"}.
  static StructuralMatrix FromRows(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_star(std::size_t i, std::size_t j) const {
    return stars_.at(i * cols_ + j) != 0;
  }
  void set_star(std::size_t i, std::size_t j, bool star = true) {
    stars_.at(i * cols_ + j) = star ? 1 : 0;
  }
  std::vector<std::string> ToRows() const;

  friend bool operator==(const StructuralMatrix&,
                         const StructuralMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<unsigned char> stars_;
};

// Entry i is '*' iff |v_i| > zero_tol * max_j |v_j|. The zero vector maps to
// the all-zero pattern.
StructuralVector StructuralPattern(const ComplexVector& v, double zero_tol);

// Same rule applied to a matrix, relative to its largest entry.
StructuralMatrix StructuralPattern(const ComplexMatrix& m, double zero_tol);

// True iff some position is '*' in both.
bool StructuralInner(const StructuralVector& v, const StructuralVector& w);

// True iff every '*' of w is also a '*' of v.
bool StructuralGeq(const StructuralVector& v, const StructuralVector& w);

// Entries of v at the '*' positions of pattern, in order.
ComplexVector Restrict(const ComplexVector& v, const StructuralVector& pattern);

}  // namespace mincontrol

#endif  // MINCONTROL_STRUCTURE_H_
