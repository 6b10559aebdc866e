/* duality.cpp
 *
 * Double-duality parametrizability test and adjoint sequences. Torsion
 * witnesses are compatibility conditions of the candidate parametrization
 * that the input rows fail to generate.
 */
#include "pdcc/duality.hpp"

#include <stdexcept>

namespace pdcc {

DualityReport double_duality_test(const OpMatrix& d1, const TermOrder& order) {
  DualityReport rep;
  rep.input = d1;
  rep.adjoint_cc = compatibility_conditions(adjoint(d1), order);
  rep.candidate = adjoint(rep.adjoint_cc);
  OpMatrix cc = compatibility_conditions(rep.candidate, order);
  // Input rows annihilate the candidate: d1 ad(B) = ad(B ad(d1)) = 0. The
  // test is whether they generate all of its compatibility conditions.
  rep.exact = module_equal(rows_of(cc), rows_of(d1), order);
  if (rep.exact) {
    rep.parametrization = rep.candidate;
  } else {
    GroebnerBasis gb = buchberger(rows_of(d1), order);
    for (const ModuleElement& row : rows_of(cc)) {
      if (!module_membership(row, gb)) rep.torsion_witnesses.push_back(row);
    }
  }
  return rep;
}

AdjointSequenceReport adjoint_sequence(const FreeResolution& r,
                                       const TermOrder& order) {
  if (r.steps.empty()) throw std::invalid_argument("adjoint_sequence: empty chain");
  AdjointSequenceReport rep;
  rep.steps.reserve(r.steps.size());
  for (auto it = r.steps.rbegin(); it != r.steps.rend(); ++it)
    rep.steps.push_back(adjoint(*it));
  rep.all_exact = true;
  for (std::size_t j = 0; j + 1 < rep.steps.size(); ++j) {
    // Junction j: rows of steps[j+1] are relations on steps[j] (adjoint of
    // the forward composition), so exactness is membership of every CC
    // generator in the steps[j+1] row module.
    std::vector<ModuleElement> cc = syzygies(rows_of(rep.steps[j]), order);
    GroebnerBasis gb = buchberger(rows_of(rep.steps[j + 1]), order);
    std::vector<ModuleElement> missing;
    for (const ModuleElement& gen : cc) {
      if (!module_membership(gen, gb)) missing.push_back(gen);
    }
    rep.exact.push_back(missing.empty());
    rep.all_exact = rep.all_exact && missing.empty();
    rep.witnesses.push_back(std::move(missing));
  }
  return rep;
}

}  // namespace pdcc
