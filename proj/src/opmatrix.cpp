#include "pdcc/opmatrix.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pdcc {

OpMatrix OpMatrix::identity(int n, int m) {
  OpMatrix A(n, m, m);
  for (int i = 0; i < m; i++) A.entry[i][i] = Poly::constant(n, 1);
  return A;
}

bool OpMatrix::is_zero() const {
  for (const auto& row : entry)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

bool operator==(const OpMatrix& a, const OpMatrix& b) {
  return a.n == b.n && a.rows == b.rows && a.cols == b.cols && a.entry == b.entry;
}

OpMatrix compose(const OpMatrix& A, const OpMatrix& B) {
  if (A.n != B.n) throw std::invalid_argument("compose: variable count mismatch");
  if (A.cols != B.rows) throw std::invalid_argument("compose: shape mismatch");
  OpMatrix C(A.n, A.rows, B.cols);
  for (int i = 0; i < A.rows; i++)
    for (int k = 0; k < A.cols; k++) {
      if (A.entry[i][k].is_zero()) continue;
      for (int j = 0; j < B.cols; j++)
        if (!B.entry[k][j].is_zero())
          C.entry[i][j] = poly_add(C.entry[i][j], poly_mul(A.entry[i][k], B.entry[k][j]));
    }
  return C;
}

OpMatrix adjoint(const OpMatrix& A) {
  OpMatrix T(A.n, A.cols, A.rows);
  for (int i = 0; i < A.rows; i++)
    for (int j = 0; j < A.cols; j++)
      T.entry[j][i] = negate_variables(A.entry[i][j]);
  return T;
}

int op_order(const OpMatrix& A) {
  int d = Poly::kDegZero;
  for (const auto& row : A.entry)
    for (const auto& p : row) d = std::max(d, p.degree());
  return d;
}

std::vector<ModuleElement> rows_of(const OpMatrix& A) {
  std::vector<ModuleElement> out;
  out.reserve(A.rows);
  for (int i = 0; i < A.rows; i++) {
    ModuleElement e(A.cols, A.n);
    e.c = A.entry[i];
    out.push_back(std::move(e));
  }
  return out;
}

OpMatrix from_rows(const std::vector<ModuleElement>& rows, int n, int cols) {
  OpMatrix A(n, static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); i++) {
    if (rows[i].m != cols) throw std::invalid_argument("from_rows width mismatch");
    A.entry[i] = rows[i].c;
  }
  return A;
}

namespace {

// Exact quotient a / b; returns false when b does not divide a.
bool poly_divide_exact(const Poly& a, const Poly& b, Poly& q) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  TermOrder ord = default_order();
  q = Poly::zero(a.n);
  Poly r = a;
  const std::size_t bl = leading_index(b, ord);
  while (!r.is_zero()) {
    std::size_t rl = leading_index(r, ord);
    const auto& [rex, rc] = r.terms[rl];
    const auto& [bex, bc] = b.terms[bl];
    if (!exp_divides(bex, rex)) return false;
    Exponent mu = exp_div(rex, bex);
    Q c = rc / bc;
    q = poly_add(q, Poly::term(a.n, mu, c));
    poly_add_scaled(r, -c, mu, b);
  }
  return true;
}

// Fraction-free elimination rank with full pivoting; divisions are exact.
int symbolic_rank(std::vector<std::vector<Poly>> a, int n) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  Poly prev = Poly::constant(n, 1);
  int r = 0;
  for (; r < std::min(rows, cols); r++) {
    int pi = -1, pj = -1;
    for (int i = r; i < rows && pi < 0; i++)
      for (int j = r; j < cols; j++)
        if (!a[i][j].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    std::swap(a[r], a[pi]);
    if (pj != r)
      for (int i = 0; i < rows; i++) std::swap(a[i][r], a[i][pj]);
    for (int i = r + 1; i < rows; i++) {
      for (int j = r + 1; j < cols; j++) {
        Poly num = poly_sub(poly_mul(a[r][r], a[i][j]), poly_mul(a[i][r], a[r][j]));
        Poly quot;
        if (!poly_divide_exact(num, prev, quot))
          throw std::logic_error("fraction-free elimination: inexact division");
        a[i][j] = std::move(quot);
      }
      a[i][r] = Poly::zero(n);
    }
    prev = a[r][r];
  }
  return r;
}

QMatrix evaluate_at(const OpMatrix& A, const std::vector<Q>& pt) {
  QMatrix M(A.rows, A.cols);
  for (int i = 0; i < A.rows; i++)
    for (int j = 0; j < A.cols; j++) M.at(i, j) = poly_eval(A.entry[i][j], pt);
  return M;
}

std::vector<Q> random_point(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> dist(-1000, 1000);
  std::vector<Q> pt(n);
  for (auto& q : pt) q = Q(dist(rng));
  return pt;
}

}  // namespace

RankReport generic_rank(const OpMatrix& A, std::uint64_t seed) {
  RankReport rep;
  if (A.rows == 0 || A.cols == 0) return rep;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Q> p1 = random_point(rng, A.n), p2 = random_point(rng, A.n);
  int r1 = qm_rank(evaluate_at(A, p1));
  int r2 = qm_rank(evaluate_at(A, p2));
  if (r1 == r2) {
    rep.rank = r1;
    rep.witness_point = p1;
    return rep;
  }
  rep.rank = symbolic_rank(A.entry, A.n);
  rep.confirmed_by_groebner = true;
  if (r1 == rep.rank) rep.witness_point = p1;
  else if (r2 == rep.rank) rep.witness_point = p2;
  else
    for (int attempt = 0; attempt < 64; attempt++) {
      std::vector<Q> pt = random_point(rng, A.n);
      if (qm_rank(evaluate_at(A, pt)) == rep.rank) {
        rep.witness_point = pt;
        break;
      }
    }
  return rep;
}

OpMatrix trim_rows(const OpMatrix& A) {
  TermOrder ord = default_order();
  std::vector<ModuleElement> kept;
  GroebnerBasis gb;
  gb.order = ord;
  for (const auto& row : rows_of(A)) {
    if (row.is_zero()) continue;
    if (!kept.empty() && module_membership(row, gb)) continue;
    kept.push_back(row);
    gb = buchberger(kept, ord);
  }
  return from_rows(kept, A.n, A.cols);
}

OpMatrix compatibility_conditions(const OpMatrix& A, const TermOrder& order) {
  if (A.rows == 0) return OpMatrix(A.n, 0, 0);
  if (A.cols == 0 || A.is_zero()) return OpMatrix::identity(A.n, A.rows);
  auto syz = syzygies(rows_of(A), order);
  return from_rows(syz, A.n, A.rows);
}

}  // namespace pdcc
