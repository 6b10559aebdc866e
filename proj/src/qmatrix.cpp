#include "pdcc/qmatrix.hpp"

#include <stdexcept>

namespace pdcc {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

bool operator==(const QMatrix& x, const QMatrix& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

QMatrix qm_mul(const QMatrix& x, const QMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("qm_mul shape mismatch");
  QMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; i++)
    for (int k = 0; k < x.cols; k++) {
      const Q& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; j++)
        if (y.at(k, j) != 0) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

Rref qm_rref(QMatrix m) {
  Rref out;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; c++) {
    int piv = -1;
    for (int i = r; i < m.rows; i++)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; j++) std::swap(m.at(piv, j), m.at(r, j));
    Q inv = Q(1) / m.at(r, c);
    for (int j = c; j < m.cols; j++) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; i++) {
      if (i == r || m.at(i, c) == 0) continue;
      Q f = m.at(i, c);
      for (int j = c; j < m.cols; j++) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivot_cols.push_back(c);
    r++;
  }
  out.m = std::move(m);
  return out;
}

int qm_rank(QMatrix m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; c++) {
    int piv = -1;
    for (int i = r; i < m.rows; i++)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < m.cols; j++) std::swap(m.at(piv, j), m.at(r, j));
    for (int i = r + 1; i < m.rows; i++) {
      if (m.at(i, c) == 0) continue;
      Q f = m.at(i, c) / m.at(r, c);
      m.at(i, c) = 0;
      for (int j = c + 1; j < m.cols; j++) m.at(i, j) -= f * m.at(r, j);
    }
    r++;
  }
  return r;
}

QMatrix qm_solve(const QMatrix& A, const QMatrix& B) {
  if (A.rows != B.rows) throw std::invalid_argument("qm_solve shape mismatch");
  QMatrix aug(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; i++) {
    for (int j = 0; j < A.cols; j++) aug.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; j++) aug.at(i, A.cols + j) = B.at(i, j);
  }
  Rref rr = qm_rref(std::move(aug));
  QMatrix x(A.cols, B.cols);
  for (std::size_t r = 0; r < rr.pivot_cols.size(); r++) {
    if (rr.pivot_cols[r] >= A.cols)
      throw std::domain_error("qm_solve: inconsistent system");
    for (int j = 0; j < B.cols; j++)
      x.at(rr.pivot_cols[r], j) = rr.m.at(static_cast<int>(r), A.cols + j);
  }
  return x;
}

QMatrix qm_nullspace(const QMatrix& m) {
  Rref rr = qm_rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : rr.pivot_cols) is_pivot[c] = true;
  int nullity = m.cols - static_cast<int>(rr.pivot_cols.size());
  QMatrix basis(m.cols, nullity);
  int col = 0;
  for (int f = 0; f < m.cols; f++) {
    if (is_pivot[f]) continue;
    basis.at(f, col) = 1;
    for (std::size_t r = 0; r < rr.pivot_cols.size(); r++)
      basis.at(rr.pivot_cols[r], col) = -rr.m.at(static_cast<int>(r), f);
    col++;
  }
  return basis;
}

}  // namespace pdcc
