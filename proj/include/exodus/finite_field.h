/* Copyright 2026 The Exodus Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Arithmetic in F_q for q in {2, 3, 4, 5} and dense matrices over it.
// A d2 x d1 matrix is a linear map F_q^d1 -> F_q^d2; entries are row-major.

#ifndef EXODUS_FINITE_FIELD_H_
#define EXODUS_FINITE_FIELD_H_

#include <cstdint>
#include <string>
#include <vector>

namespace exodus {

class FiniteField {
 public:
  // Throws InputError unless q is 2, 3, 4 or 5.
  explicit FiniteField(int q);

  int order() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  // Multiplicative inverse of a nonzero element.
  int inv(int a) const;

 private:
  int q_;
  std::vector<int> add_;
  std::vector<int> mul_;
};

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> e;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, 0) {}
  int& at(int r, int c) { return e[r * cols + c]; }
  int at(int r, int c) const { return e[r * cols + c]; }
  bool operator==(const Matrix&) const = default;
};

Matrix identity_matrix(int n);
Matrix matmul(const FiniteField& k, const Matrix& a, const Matrix& b);
Matrix matsub(const FiniteField& k, const Matrix& a, const Matrix& b);
bool is_invertible(const FiniteField& k, Matrix a);

// Row-major entries read as a base-q number (first entry most significant).
std::int64_t matrix_code(const FiniteField& k, const Matrix& a);
Matrix matrix_from_code(const FiniteField& k, int rows, int cols,
                        std::int64_t code);
// Entries as a digit string, e.g. "1001" for the 2 x 2 identity.
std::string matrix_digits(const Matrix& a);

}  // namespace exodus

#endif  // EXODUS_FINITE_FIELD_H_
