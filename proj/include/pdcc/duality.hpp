/* duality.hpp
 *
 * The inverse problem: double-duality parametrizability test and adjoint
 * sequences with per-junction exactness certificates. A presented module
 * is parametrizable (torsion-free) exactly when the re-adjointed
 * compatibility conditions of the adjoint reproduce the input rows.
 */
#pragma once

#include <optional>
#include <vector>

#include "pdcc/opmatrix.hpp"
#include "pdcc/resolution.hpp"

namespace pdcc {

struct DualityReport {
  OpMatrix input;
  OpMatrix adjoint_cc;  // B = CC(ad(input))
  OpMatrix candidate;   // D = ad(B), the parametrization candidate
  bool exact = false;   // input generates the CC of the candidate
  std::optional<OpMatrix> parametrization;  // set when exact
  // Generators of CC(candidate) outside the input row module (torsion
  // classes of the presented module), emitted when inexact.
  std::vector<ModuleElement> torsion_witnesses;
};

DualityReport double_duality_test(const OpMatrix& d1,
                                  const TermOrder& order = default_order());

struct AdjointSequenceReport {
  // ad of the resolution steps in reverse order; consecutive compositions
  // vanish by construction.
  std::vector<OpMatrix> steps;
  // Per junction: does steps[j+1] generate the CC of steps[j]?
  std::vector<bool> exact;
  // CC generators missing from steps[j+1]'s row module, when inexact.
  std::vector<std::vector<ModuleElement>> witnesses;
  bool all_exact = false;
};

AdjointSequenceReport adjoint_sequence(const FreeResolution& r,
                                       const TermOrder& order = default_order());

}  // namespace pdcc
