/* groebner.hpp
 *
 * Buchberger-style Groebner bases for submodules of D^(1xm), normal forms,
 * membership, module equality and Schreyer syzygies. Every compatibility
 * condition in the engine reduces to these routines.
 *
 * Output contract: buchberger returns the reduced monic basis sorted by
 * ascending leading term, so results are deterministic for fixed inputs
 * and order. syzygies returns an interreduced (not minimal) generating
 * set of the full syzygy module, certified by Schreyer's theorem: every
 * same-component S-pair of the final basis is reduced with its quotients
 * recorded, product/chain shortcuts are disabled in that pass.
 */
#pragma once

#include "pdcc/poly.hpp"

namespace pdcc {

// Row vector in D^(1xm).
struct ModuleElement {
  int m = 0;
  std::vector<Poly> c;

  ModuleElement() = default;
  ModuleElement(int m_, int n) : m(m_), c(m_, Poly::zero(n)) {}

  bool is_zero() const;
  int dim() const;  // ambient n (0 if m == 0)
};

bool operator==(const ModuleElement& a, const ModuleElement& b);

ModuleElement me_add(const ModuleElement& a, const ModuleElement& b);
ModuleElement me_neg(const ModuleElement& a);
ModuleElement me_scale(const ModuleElement& a, const Q& c);
// a += c * d^mu * b
void me_add_scaled(ModuleElement& a, const Q& c, const Exponent& mu, const ModuleElement& b);
// row * A for a list of rows (used for matrix-level checks)
Poly me_dot(const ModuleElement& lambda, const std::vector<Poly>& column);

struct LeadTerm {
  int comp = -1;
  Exponent ex;
  Q coeff;
};
// Leading term under a module order; e must be nonzero.
LeadTerm leading_term(const ModuleElement& e, const TermOrder& order);

struct GroebnerBasis {
  TermOrder order;
  std::vector<ModuleElement> generators;
  bool reduced = false;
};

// Reduced Groebner basis of the submodule generated by gens.
GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, const TermOrder& order);

// Remainder of multivariate division by the basis; zero iff e is in the module.
ModuleElement normal_form(const ModuleElement& e, const GroebnerBasis& gb);

bool module_membership(const ModuleElement& e, const GroebnerBasis& gb);

// Mutual membership of generators.
bool module_equal(const std::vector<ModuleElement>& A, const std::vector<ModuleElement>& B,
                  const TermOrder& order);

// Generators of {lambda in D^(1xp) | sum lambda_i gens_i = 0}, interreduced.
std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens, const TermOrder& order);

// Coefficient rows X with rows[i] = X[i] . gens (as a D-linear combination).
// Throws std::domain_error if a row is not in the module generated by gens.
std::vector<ModuleElement> express_in(const std::vector<ModuleElement>& rows,
                                      const std::vector<ModuleElement>& gens,
                                      const TermOrder& order);

// Pairwise reduction sweeps until no generator's term is reducible by the
// leading term of another; preserves the generated module, drops zeros.
std::vector<ModuleElement> interreduce(std::vector<ModuleElement> gens, const TermOrder& order);

TermOrder default_order();

}  // namespace pdcc
