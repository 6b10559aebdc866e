/* resolution.hpp
 *
 * Iterated compatibility conditions assembled into free resolutions:
 * graded minimization, Betti numbers, per-step orders, Euler
 * characteristic, and re-verifiable exactness certificates.
 *
 * Chain convention: steps = [d1, d2, ...] with rows of d(i+1) the syzygies
 * of the rows of d(i), so compose(d(i+1), d(i)) = 0. betti[0] is the
 * presentation width (cols of d1), betti[k] the row count of d(k).
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdcc/opmatrix.hpp"

namespace pdcc {

// Exactness witness at one junction: rows of kernel_gens generate
// Syz(rows of step i), and the coefficient identities
//   kernel_gens = in_next . step(i+1),   step(i+1) = in_kernel . kernel_gens
// certify mutual containment by plain multiplication.
struct JunctionCertificate {
  OpMatrix kernel_gens;
  OpMatrix in_next;
  OpMatrix in_kernel;
};

struct FreeResolution {
  std::vector<OpMatrix> steps;
  std::vector<int> betti;
  std::vector<int> orders;
  bool minimized = false;
  std::vector<std::string> warnings;
  std::vector<JunctionCertificate> certificates;  // filled by certify()
};

// Free resolution of M = D^(1xm) / (rows of A). Step 1 is trim_rows(A),
// each later step the compatibility conditions of the previous one,
// minimal generators extracted per step when minimize is set (graded
// inputs only; inhomogeneous input downgrades to unminimized with a
// warning). Stops when a step has trivial syzygies; max_length < 0 means
// the Hilbert bound guard n+2.
FreeResolution resolve(const OpMatrix& A, bool minimize, int max_length = -1,
                       const TermOrder& order = default_order());

// One junction of graded minimization: cancels constant pivots of `step`,
// dropping the paired row of `prev` and fixing up `next`. Refuses (returns
// inputs, minimized = false) when a matrix is not homogeneous per row.
struct MinimizeStepResult {
  OpMatrix prev, step;
  std::optional<OpMatrix> next;
  bool minimized = false;
};
MinimizeStepResult minimize_step(const OpMatrix& prev, const OpMatrix& step,
                                 const std::optional<OpMatrix>& next);

// betti[0] - betti[1] + betti[2] - ...
int euler_characteristic(const FreeResolution& r);

// Fills r.certificates (one per junction, including the final injectivity
// junction with an empty kernel). Throws std::domain_error if the chain is
// not exact.
void certify(FreeResolution& r, const TermOrder& order = default_order());

struct ChainReport {
  struct Junction {
    bool composition_zero = true;
    bool exact = true;
  };
  bool pass = true;
  std::vector<Junction> junctions;
};

// Re-checks composition-zero at every junction and exactness: against the
// stored certificates by multiplication when present, else by a fresh
// syzygy computation and mutual membership.
ChainReport verify_chain(const FreeResolution& r, const TermOrder& order = default_order());

}  // namespace pdcc
