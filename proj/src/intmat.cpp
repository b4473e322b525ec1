#include "chromlag/intmat.hpp"

#include <algorithm>
#include <cstdlib>

#include "chromlag/errors.hpp"

namespace chromlag {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

IntMat operator*(const IntMat& x, const IntMat& y) {
  require(x.cols == y.rows, errc::bad_argument, "matrix product shape mismatch");
  IntMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xv = x.at(i, k);
      if (xv == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += xv * y.at(k, j);
    }
  return z;
}

IntMat operator-(const IntMat& x) {
  IntMat z = x;
  for (auto& v : z.a) v = -v;
  return z;
}

IntMat transpose(const IntMat& x) {
  IntMat z(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

Int det(const IntMat& x) {
  require(x.rows == x.cols, errc::bad_argument, "determinant needs a square matrix");
  int n = x.rows;
  if (n == 0) return Int(1);
  IntMat m = x;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return Int(0);
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  Int d = m.at(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

namespace {

// Pick the nonzero entry of smallest absolute value in m[t.., t..].
bool find_pivot(const IntMat& m, int t, int& pr, int& pc) {
  bool found = false;
  Int best;
  for (int i = t; i < m.rows; ++i)
    for (int j = t; j < m.cols; ++j) {
      const Int& v = m.at(i, j);
      if (v == 0) continue;
      Int av = abs(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pr = i;
        pc = j;
      }
    }
  return found;
}

void swap_rows(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMat& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row i -= q * row j
void row_axpy(IntMat& m, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(j, c);
}

// col i -= q * col j
void col_axpy(IntMat& m, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < m.rows; ++r) m.at(r, i) -= q * m.at(r, j);
}

void negate_row(IntMat& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

} // namespace

SmithForm smith_normal_form(const IntMat& m) {
  SmithForm s;
  s.d = m;
  s.u = IntMat::identity(m.rows);
  s.v = IntMat::identity(m.cols);
  IntMat& d = s.d;
  int t = 0;
  const int tmax = std::min(m.rows, m.cols);
  while (t < tmax) {
    int pr = 0, pc = 0;
    if (!find_pivot(d, t, pr, pc)) break;
    swap_rows(d, t, pr);
    swap_rows(s.u, t, pr);
    swap_cols(d, t, pc);
    swap_cols(s.v, t, pc);

    // Reduce row/column t until the pivot divides everything in them.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = d.at(i, t) / d.at(t, t); // C++ truncated division is fine: iterate
        row_axpy(d, i, t, q);
        row_axpy(s.u, i, t, q);
        if (d.at(i, t) != 0) {
          // Remainder smaller than pivot: swap up and restart this phase.
          swap_rows(d, t, i);
          swap_rows(s.u, t, i);
          dirty = true;
        }
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = d.at(t, j) / d.at(t, t);
        col_axpy(d, j, t, q);
        col_axpy(s.v, j, t, q);
        if (d.at(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(s.v, t, j);
          dirty = true;
        }
      }
      if (!dirty) {
        // Pivot clears its row and column; enforce divisibility of the rest.
        for (int i = t + 1; i < d.rows && !dirty; ++i)
          for (int j = t + 1; j < d.cols && !dirty; ++j)
            if (d.at(i, j) % d.at(t, t) != 0) {
              // Add row i to row t to pull the offending entry into row t.
              row_axpy(d, t, i, Int(-1));
              row_axpy(s.u, t, i, Int(-1));
              dirty = true;
            }
      }
    }
    if (d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(s.u, t);
    }
    ++t;
  }
  for (int i = 0; i < tmax; ++i)
    if (d.at(i, i) != 0) s.factors.push_back(d.at(i, i));
  return s;
}

int rank(const IntMat& m) { return smith_normal_form(m).rank(); }

IntMat unimodular_inverse(const IntMat& m) {
  require(m.rows == m.cols, errc::bad_argument, "inverse needs a square matrix");
  Int dm = det(m);
  require(dm == 1 || dm == -1, errc::bad_argument, "matrix is not unimodular");
  int n = m.rows;
  // Gauss-Jordan over the rationals, then read off the (integer) inverse.
  std::vector<Rat> w(static_cast<std::size_t>(n) * 2 * n, Rat(0));
  auto at = [&](int r, int c) -> Rat& { return w[static_cast<std::size_t>(r) * 2 * n + c]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = Rat(m.at(i, j));
    at(i, n + i) = 1;
  }
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (at(i, k) != 0) { piv = i; break; }
    require(piv >= 0, errc::bad_argument, "matrix is singular");
    if (piv != k)
      for (int j = 0; j < 2 * n; ++j) std::swap(at(k, j), at(piv, j));
    Rat inv = 1 / at(k, k);
    for (int j = 0; j < 2 * n; ++j) at(k, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == k || at(i, k) == 0) continue;
      Rat f = at(i, k);
      for (int j = 0; j < 2 * n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  IntMat z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = at(i, n + j);
      require(den(v) == 1, errc::bad_argument, "inverse of unimodular matrix must be integral");
      z.at(i, j) = num(v);
    }
  return z;
}

std::vector<Int> mul_row(const std::vector<Int>& x, const IntMat& m) {
  require(static_cast<int>(x.size()) == m.rows, errc::bad_argument, "row-vector product shape mismatch");
  std::vector<Int> z(static_cast<std::size_t>(m.cols), Int(0));
  for (int i = 0; i < m.rows; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < m.cols; ++j) z[static_cast<std::size_t>(j)] += x[static_cast<std::size_t>(i)] * m.at(i, j);
  }
  return z;
}

std::vector<Int> mul_col(const IntMat& m, const std::vector<Int>& x) {
  require(static_cast<int>(x.size()) == m.cols, errc::bad_argument, "column-vector product shape mismatch");
  std::vector<Int> z(static_cast<std::size_t>(m.rows), Int(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) z[static_cast<std::size_t>(i)] += m.at(i, j) * x[static_cast<std::size_t>(j)];
  return z;
}

Int pair_with(const IntMat& m, const std::vector<Int>& x, const std::vector<Int>& y) {
  std::vector<Int> my = mul_col(m, y);
  require(x.size() == my.size(), errc::bad_argument, "pairing shape mismatch");
  Int s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * my[i];
  return s;
}

} // namespace chromlag
