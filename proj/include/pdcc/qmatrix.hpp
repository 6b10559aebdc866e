/* qmatrix.hpp
 *
 * Dense matrices over Q for the linear-algebra side of the engine:
 * symbol spaces, delta maps, Janet boards. Exact arithmetic throughout.
 */
#pragma once

#include <vector>

#include "pdcc/poly.hpp"

namespace pdcc {

struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Q> a;  // row-major

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Q(0)) {}

  Q& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Q& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static QMatrix identity(int n);
};

bool operator==(const QMatrix& x, const QMatrix& y);

QMatrix qm_mul(const QMatrix& x, const QMatrix& y);

// Rank by Gaussian elimination; argument consumed.
int qm_rank(QMatrix m);

// Reduced row echelon form with the list of pivot columns.
struct Rref {
  QMatrix m;
  std::vector<int> pivot_cols;
};
Rref qm_rref(QMatrix m);

// Basis of {x : m x = 0}, one column per basis vector (cols x nullity).
QMatrix qm_nullspace(const QMatrix& m);

// Solves A X = B exactly; throws std::domain_error when inconsistent.
// When A has a nontrivial kernel the pivot-column solution is returned.
QMatrix qm_solve(const QMatrix& A, const QMatrix& B);

}  // namespace pdcc
