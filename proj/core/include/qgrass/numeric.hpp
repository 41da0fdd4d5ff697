// Copyright 2026 The qgrass Authors
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

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace qgrass {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major integer matrix. Entries of exchange and quasi-commutation
/// matrices stay tiny, so 64-bit storage is enough.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix transpose() const;
  bool is_skew_symmetric() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// A value in (1/2)Z, stored as twice its value.
struct HalfInt {
  std::int64_t twice = 0;

  static HalfInt from_twice(std::int64_t t) { return HalfInt{t}; }
  bool is_integer() const { return twice % 2 == 0; }

  friend HalfInt operator+(HalfInt a, HalfInt b) {
    return HalfInt{a.twice + b.twice};
  }
  friend HalfInt operator-(HalfInt a) { return HalfInt{-a.twice}; }
  friend HalfInt operator-(HalfInt a, HalfInt b) {
    return HalfInt{a.twice - b.twice};
  }
  friend bool operator==(HalfInt a, HalfInt b) = default;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

}  // namespace qgrass
