#pragma once

#include <vector>

#include "chromlag/rational.hpp"

namespace chromlag {

// Dense exact integer matrix. Small sizes only (lattice presentations of the
// graphs in scope), so the algorithms favor clarity over asymptotics.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a; // row-major

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Int(0)) {}

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static IntMat identity(int n);
  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool is_zero() const;
};

IntMat operator*(const IntMat& x, const IntMat& y);
IntMat operator-(const IntMat& x);
IntMat transpose(const IntMat& x);

// Exact determinant (square matrices) via fraction-free elimination.
Int det(const IntMat& x);

// Smith normal form: u * m * v == d with u, v unimodular and d diagonal with
// the divisibility chain d1 | d2 | ... (nonnegative). `factors` lists the
// nonzero diagonal entries; rank() is their count.
struct SmithForm {
  IntMat u, d, v;
  std::vector<Int> factors;
  int rank() const { return static_cast<int>(factors.size()); }
};

SmithForm smith_normal_form(const IntMat& m);

int rank(const IntMat& m);

// Exact inverse of a unimodular integer matrix (|det| = 1).
IntMat unimodular_inverse(const IntMat& m);

// Row vector * matrix and matrix * column vector conveniences.
std::vector<Int> mul_row(const std::vector<Int>& x, const IntMat& m);
std::vector<Int> mul_col(const IntMat& m, const std::vector<Int>& x);

// Antisymmetric pairing x^T m y.
Int pair_with(const IntMat& m, const std::vector<Int>& x, const std::vector<Int>& y);

} // namespace chromlag
