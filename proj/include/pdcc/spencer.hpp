/* spencer.hpp
 *
 * Spencer delta-cohomology and Janet boards for symbols of linear
 * constant-coefficient PDE systems. A SymbolSystem stores the order-q
 * symbol equations a^{tau,mu}_k v^k_mu = 0 as an exact rational matrix;
 * prolongations, delta-maps, cohomology dimensions, characters, and the
 * involutivity test are all computed exactly over Q.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "pdcc/poly.hpp"
#include "pdcc/qmatrix.hpp"

namespace pdcc {

// Order-q symbol. Columns enumerate all jets (k, mu) with |mu| = q,
// k-major, mu running through monomials_of_degree(n, q).
struct SymbolSystem {
  int n = 0;      // number of independent variables
  int m = 0;      // fiber dimension of E
  int q = 0;      // order
  QMatrix eqns;   // one row per equation, m * #monomials columns
};

// Basis of g_{q+r}: columns are independent nullspace vectors of the
// prolonged equation matrix, in the (k, mu) jet layout at order q+r.
struct SymbolBasis {
  int r = 0;
  int dim = 0;
  QMatrix basis;
};

// Matrix of delta : Lambda^s T* (x) g_{q+r+1} -> Lambda^{s+1} T* (x) g_{q+r}
// in the chosen bases (strictly increasing form tuples, form-index-major,
// tensored with the SymbolBasis columns).
struct DeltaMap {
  int s = 0;
  int r = 0;
  QMatrix matrix;
};

struct CohomologyReport {
  int s = 0;
  int r = 0;
  int dim_B = 0;  // rank of the incoming delta
  int dim_Z = 0;  // nullity of the outgoing delta
  int dim_H = 0;  // dim_Z - dim_B
};

// One solved equation of the board: leading jet v^k_mu of class cls,
// multiplicative variables d_1..d_cls.
struct SolvedEquation {
  int cls = 0;
  int k = 0;
  Exponent mu;
};

struct JanetBoard {
  std::vector<SolvedEquation> solved_equations;
  std::vector<int> beta;      // beta[i-1] = beta^i_q, solved count per class
  std::vector<int> alpha;     // alpha[i-1] = alpha^i_q, the characters
  QMatrix coordinate_change;  // substitution d -> C d used; identity if none
  bool involutive = false;
  int attempts_used = 0;
};

// All multi-indices of total degree d in n variables, canonically ordered
// (degrevlex descending, matching Poly term storage).
std::vector<Exponent> monomials_of_degree(int n, int d);

// Exact nullspace basis of the r-th prolongation. r >= 0.
SymbolBasis prolong(const SymbolSystem& sys, int r);

// The prolonged equations themselves, as a symbol system of order q+r.
SymbolSystem prolong_system(const SymbolSystem& sys, int r);

DeltaMap delta_map(const SymbolSystem& sys, int s, int r);

CohomologyReport cohomology(const SymbolSystem& sys, int s, int r);

// True iff H^j at level q+r vanishes for 1 <= j <= s and all r >= 0.
// Decidable only for finite-type symbols: throws std::domain_error when
// no vanishing level g_{q+r0} = 0 is found with r0 <= r_max.
bool is_s_acyclic(const SymbolSystem& sys, int s, int r_max);

// Class-descending elimination board with characters. Seeded random
// invertible substitutions d -> C d are tried until the class counts
// (beta^n..beta^1) stabilize at their lexicographic maximum; the test
// dim g_{q+1} == sum_i i*alpha^i_q decides involutivity. Requires q >= 1.
JanetBoard janet_board(const SymbolSystem& sys, int attempts = 12,
                       std::uint64_t seed = 0);

// Closed-form dim g_{q+r} = sum_i binom(r+i-1, r) * alpha^i_q, valid for
// involutive boards only; throws std::domain_error otherwise.
long long dim_prediction(const SymbolSystem& sys, const JanetBoard& board,
                         int r);

// Ranks [dim E, dim F_0, dim F_1, ...] of the Janet sequence, computed by
// the dots rule: each compatibility condition comes from one dot, and a CC
// born at column i has class i. Requires board.involutive.
std::vector<int> janet_sequence(const SymbolSystem& sys,
                                const JanetBoard& board);

}  // namespace pdcc
