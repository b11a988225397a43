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

#include "exodus/finite_field.h"

#include "exodus/error.h"

namespace exodus {

FiniteField::FiniteField(int q) : q_(q), add_(q * q), mul_(q * q) {
  if (q != 2 && q != 3 && q != 4 && q != 5)
    throw InputError("field order must be 2, 3, 4 or 5, got " + std::to_string(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (q == 4) {
        // F_2[t]/(t^2 + t + 1); element a = a1 t + a0.
        add_[a * q + b] = a ^ b;
        int p = 0;
        for (int i = 0; i < 2; ++i)
          if (b >> i & 1) p ^= a << i;
        if (p & 4) p ^= 0b111;
        mul_[a * q + b] = p;
      } else {
        add_[a * q + b] = (a + b) % q;
        mul_[a * q + b] = (a * b) % q;
      }
    }
}

int FiniteField::neg(int a) const {
  for (int b = 0; b < q_; ++b)
    if (add(a, b) == 0) return b;
  return 0;
}

int FiniteField::inv(int a) const {
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw InputError("zero has no inverse");
}

Matrix identity_matrix(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix matmul(const FiniteField& k, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      int s = 0;
      for (int l = 0; l < a.cols; ++l) s = k.add(s, k.mul(a.at(i, l), b.at(l, j)));
      c.at(i, j) = s;
    }
  return c;
}

Matrix matsub(const FiniteField& k, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.e.size(); ++i) c.e[i] = k.sub(a.e[i], b.e[i]);
  return c;
}

bool is_invertible(const FiniteField& k, Matrix a) {
  if (a.rows != a.cols) return false;
  const int n = a.rows;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    for (int c = 0; c < n; ++c) std::swap(a.at(col, c), a.at(piv, c));
    const int s = k.inv(a.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      const int f = k.mul(a.at(r, col), s);
      for (int c = col; c < n; ++c)
        a.at(r, c) = k.sub(a.at(r, c), k.mul(f, a.at(col, c)));
    }
  }
  return true;
}

std::int64_t matrix_code(const FiniteField& k, const Matrix& a) {
  std::int64_t code = 0;
  for (int v : a.e) code = code * k.order() + v;
  return code;
}

Matrix matrix_from_code(const FiniteField& k, int rows, int cols,
                        std::int64_t code) {
  Matrix m(rows, cols);
  for (int i = static_cast<int>(m.e.size()) - 1; i >= 0; --i) {
    m.e[i] = static_cast<int>(code % k.order());
    code /= k.order();
  }
  return m;
}

std::string matrix_digits(const Matrix& a) {
  std::string s;
  for (int v : a.e) s += static_cast<char>('0' + v);
  return s;
}

}  // namespace exodus
