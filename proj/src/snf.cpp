#include "planeaut/snf.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace planeaut {

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat identity(size_t n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void swap_rows(Mat& a, Mat& u, size_t i, size_t j) {
  std::swap(a[i], a[j]);
  std::swap(u[i], u[j]);
}

void swap_cols(Mat& a, Mat& v, size_t i, size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
  for (auto& row : v) std::swap(row[i], row[j]);
}

// row[i] -= q * row[j]
void addmul_row(Mat& a, Mat& u, size_t i, size_t j, long long q) {
  for (size_t k = 0; k < a[i].size(); ++k) a[i][k] -= q * a[j][k];
  for (size_t k = 0; k < u[i].size(); ++k) u[i][k] -= q * u[j][k];
}

void addmul_col(Mat& a, Mat& v, size_t i, size_t j, long long q) {
  for (auto& row : a) row[i] -= q * row[j];
  for (auto& row : v) row[i] -= q * row[j];
}

void negate_row(Mat& a, Mat& u, size_t i) {
  for (auto& x : a[i]) x = -x;
  for (auto& x : u[i]) x = -x;
}

}  // namespace

SnfResult smith_normal_form(const std::vector<std::vector<long long>>& A) {
  const size_t rows = A.size();
  const size_t cols = rows ? A[0].size() : 0;
  Mat a = A;
  for (const auto& r : a)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  Mat u = identity(rows), v = identity(cols);

  size_t t = 0;
  const size_t lim = rows < cols ? rows : cols;
  while (t < lim) {
    // find a pivot in the submatrix starting at (t, t)
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows && !found; ++i)
      for (size_t j = t; j < cols && !found; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    swap_rows(a, u, t, pi);
    swap_cols(a, v, t, pj);
    // clear row t and column t; repeat until both are clean
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        long long q = a[i][t] / a[t][t];
        addmul_row(a, u, i, t, q);
        if (a[i][t] != 0) {  // remainder smaller than pivot: swap up and redo
          swap_rows(a, u, t, i);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        long long q = a[t][j] / a[t][t];
        addmul_col(a, v, j, t, q);
        if (a[t][j] != 0) {
          swap_cols(a, v, t, j);
          dirty = true;
        }
      }
    }
    // pivot must divide every entry of the remaining block
    for (size_t i = t + 1; i < rows; ++i) {
      bool fixed = false;
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[i][j] % a[t][t] != 0) {
          // add row i to row t, restart the cleaning loop
          addmul_row(a, u, t, i, -1);
          fixed = true;
          break;
        }
      }
      if (fixed) break;
    }
    bool divides_all = true;
    for (size_t i = t + 1; i < rows && divides_all; ++i)
      for (size_t j = t + 1; j < cols && divides_all; ++j)
        if (a[i][j] % a[t][t] != 0) divides_all = false;
    if (!divides_all || a[t][t] == 0) continue;  // redo this pivot position
    bool row_clean = true, col_clean = true;
    for (size_t i = t + 1; i < rows; ++i)
      if (a[i][t] != 0) col_clean = false;
    for (size_t j = t + 1; j < cols; ++j)
      if (a[t][j] != 0) row_clean = false;
    if (!row_clean || !col_clean) continue;
    if (a[t][t] < 0) negate_row(a, u, t);
    ++t;
  }

  SnfResult res;
  res.U = std::move(u);
  res.V = std::move(v);
  res.diag.assign(lim, 0);
  for (size_t i = 0; i < lim; ++i) {
    res.diag[i] = a[i][i];
    if (res.diag[i] != 0) ++res.rank;
  }
  return res;
}

}  // namespace planeaut
