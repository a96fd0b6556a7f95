#include "unigen/linalg.hpp"

namespace unigen {

int rref(QMat& a, std::vector<int>* pivots) {
  const int m = a.rows(), n = a.cols();
  if (pivots) pivots->clear();
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (a(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    a.swap_rows(r, piv);
    Rat inv = 1 / a(r, col);
    if (inv != 1) a.scale_row(r, inv);
    for (int i = 0; i < m; ++i) {
      if (i == r || a(i, col) == 0) continue;
      Rat f = -a(i, col);
      a.addmul_row(i, r, f);
    }
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return r;
}

int rank(QMat a) { return rref(a); }

QMat row_basis(QMat a) {
  int r = rref(a);
  QMat b(r, a.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < a.cols(); ++j) b(i, j) = a(i, j);
  return b;
}

QMat left_kernel(const QMat& a) {
  // v * A = 0  <=>  A^T v^T = 0; nullspace of A^T via RREF free variables.
  QMat at = transpose(a);
  std::vector<int> pivots;
  int r = rref(at, &pivots);
  const int m = a.rows();
  std::vector<bool> is_pivot(m, false);
  for (int p : pivots) is_pivot[p] = true;
  QMat k(m - r, m);
  int row = 0;
  for (int col = 0; col < m; ++col) {
    if (is_pivot[col]) continue;
    k(row, col) = 1;
    for (int i = 0; i < r; ++i) k(row, pivots[i]) = -at(i, col);
    ++row;
  }
  return k;
}

std::optional<QVec> solve_left(const QMat& a, const QVec& b) {
  // x * A = b  <=>  A^T x^T = b^T: row-reduce [A^T | b^T].
  if (int(b.size()) != a.cols()) throw invalid_input("solve_left: shape mismatch");
  const int m = a.rows(), n = a.cols();
  QMat aug(n, m + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) aug(i, j) = a(j, i);
    aug(i, m) = b[i];
  }
  std::vector<int> pivots;
  rref(aug, &pivots);
  QVec x(m);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m) return std::nullopt;  // pivot in the augmented column
    x[pivots[i]] = aug(int(i), m);
  }
  return x;
}

bool in_row_span(const QMat& a, const QVec& v) { return solve_left(a, v).has_value(); }

QMat inverse(const QMat& a) {
  if (!a.is_square()) throw invalid_input("inverse: not square");
  const int n = a.rows();
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> pivots;
  int r = rref(aug, &pivots);
  if (r < n || pivots[n - 1] >= n) throw invalid_input("inverse: singular matrix");
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Rat det(QMat a) {
  if (!a.is_square()) throw invalid_input("det: not square");
  const int n = a.rows();
  Rat d = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a(i, col) != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != col) { a.swap_rows(col, piv); d = -d; }
    d *= a(col, col);
    Rat inv = 1 / a(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Rat f = -a(i, col) * inv;
      a.addmul_row(i, col, f);
    }
  }
  return d;
}

}  // namespace unigen
