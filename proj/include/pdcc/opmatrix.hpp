/* opmatrix.hpp
 *
 * Matrices of scalar operators in D = Q[d1..dn]. A p x m matrix A acts on
 * unknown columns xi by (A xi)^tau = sum_k entry[tau][k](d) xi^k, and its
 * rows generate the submodule of D^(1xm) presenting the system's module
 * M = D^(1xm) / (D^(1xp) A). Both views share the same data.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "pdcc/groebner.hpp"
#include "pdcc/qmatrix.hpp"

namespace pdcc {

struct OpMatrix {
  int n = 0;  // ambient variables d1..dn
  int rows = 0, cols = 0;
  std::vector<std::vector<Poly>> entry;

  OpMatrix() = default;
  OpMatrix(int n_, int rows_, int cols_)
      : n(n_), rows(rows_), cols(cols_),
        entry(rows_, std::vector<Poly>(cols_, Poly::zero(n_))) {}

  static OpMatrix identity(int n, int m);

  bool is_zero() const;
};

bool operator==(const OpMatrix& a, const OpMatrix& b);

// Operator composition (A after B): the matrix product A B.
OpMatrix compose(const OpMatrix& A, const OpMatrix& B);

// Formal adjoint: transpose with d -> -d entrywise. ad(ad(A)) = A and
// ad(A B) = ad(B) ad(A).
OpMatrix adjoint(const OpMatrix& A);

// Max total degree over all entries (Poly::kDegZero for the zero matrix).
int op_order(const OpMatrix& A);

// Rows as module elements in D^(1xcols), and back.
std::vector<ModuleElement> rows_of(const OpMatrix& A);
OpMatrix from_rows(const std::vector<ModuleElement>& rows, int n, int cols);

struct RankReport {
  int rank = 0;
  std::vector<Q> witness_point;  // evaluation point realizing the rank
  bool confirmed_by_groebner = false;  // true when the symbolic path ran
};

// Rank of A over the fraction field Q(d1..dn). Two seeded random
// evaluations; on disagreement escalates to fraction-free elimination
// over the polynomial ring, which is exact.
RankReport generic_rank(const OpMatrix& A, std::uint64_t seed = 0);

// Drops rows lying in the module generated by the rows kept before them
// (forward sweep). The generated row module is unchanged.
OpMatrix trim_rows(const OpMatrix& A);

// Generating compatibility conditions: a matrix C with C A = 0 whose rows
// generate the full left kernel {lambda : lambda A = 0}, interreduced.
OpMatrix compatibility_conditions(const OpMatrix& A,
                                  const TermOrder& order = default_order());

}  // namespace pdcc
