/* poly.hpp
 *
 * Exact rational arithmetic and sparse multivariate polynomials over
 * Q[d1..dn], the ring of constant-coefficient partial differential
 * operators. Monomial orders (degrevlex, lex) and their module
 * extensions live here too.
 */
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace pdcc {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator).
using Q = mpq_class;

// Multi-index mu = (mu_1..mu_n) with cached |mu|. Fixed capacity keeps
// monomials allocation-free; every built-in system needs n <= 5.
struct Exponent {
  static constexpr int kMaxVars = 8;

  int n = 0;
  int deg = 0;
  std::array<std::uint8_t, kMaxVars> e{};

  Exponent() = default;
  explicit Exponent(int n_);
  static Exponent unit(int n, int i);  // the multi-index 1_i

  int operator[](int i) const { return e[i]; }
  void set(int i, int v);

  bool operator==(const Exponent& o) const;
  bool operator!=(const Exponent& o) const { return !(*this == o); }
};

Exponent exp_mul(const Exponent& a, const Exponent& b);      // mu + nu
Exponent exp_div(const Exponent& a, const Exponent& b);      // mu - nu, needs divisibility
Exponent exp_lcm(const Exponent& a, const Exponent& b);
bool exp_divides(const Exponent& a, const Exponent& b);      // a | b componentwise

enum class MonoOrder { degrevlex, lex };
enum class ModuleOrder { pot, top, schreyer };

// Leading data of the rows inducing a Schreyer order.
struct SchreyerData {
  std::vector<std::pair<int, Exponent>> leads;  // (component, exponent) per row
  MonoOrder base = MonoOrder::degrevlex;
};

struct TermOrder {
  MonoOrder kind = MonoOrder::degrevlex;
  ModuleOrder module_extension = ModuleOrder::pot;
  std::shared_ptr<const SchreyerData> schreyer;  // set iff module_extension == schreyer
};

inline constexpr int LT = -1;
inline constexpr int EQ = 0;
inline constexpr int GT = 1;

// Total-order comparison of monomials; returns LT/EQ/GT.
int compare_monomials(const TermOrder& order, const Exponent& a, const Exponent& b);

// Module position comparison: (row position, exponent) pairs. Position-over-term
// puts lower row index smaller; Schreyer compares lead(m*g_i) in the base order.
int compare_module_terms(const TermOrder& order, int pos_a, const Exponent& a,
                         int pos_b, const Exponent& b);

// Sparse polynomial: terms sorted descending in canonical degrevlex order,
// no zero coefficients stored. The canonical storage order is independent
// of the TermOrder a computation runs under.
struct Poly {
  int n = 0;
  std::vector<std::pair<Exponent, Q>> terms;

  Poly() = default;
  explicit Poly(int n_) : n(n_) {}

  bool is_zero() const { return terms.empty(); }
  // degree(0) = kDegZero, the distinguished "minus infinity" sentinel.
  static constexpr int kDegZero = -1;
  int degree() const;
  bool is_homogeneous() const;  // zero poly counts as homogeneous
  bool is_constant() const;

  static Poly zero(int n);
  static Poly constant(int n, const Q& c);
  static Poly variable(int n, int i, int power = 1);  // d_{i+1}^power
  static Poly term(int n, const Exponent& ex, const Q& c);
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Q& c);
// a + c * d^mu * b, the reduction workhorse.
void poly_add_scaled(Poly& a, const Q& c, const Exponent& mu, const Poly& b);
// p(d) -> p(-d): term-wise sign flip by parity of |mu|.
Poly negate_variables(const Poly& p);
// Homogeneous component of given degree.
Poly homogeneous_part(const Poly& p, int deg);

// Evaluation at a rational point (point.size() == n).
Q poly_eval(const Poly& p, const std::vector<Q>& point);

bool operator==(const Poly& a, const Poly& b);
inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

// Index into p.terms of the leading term under `order` (p nonzero).
std::size_t leading_index(const Poly& p, const TermOrder& order);

// Canonical text form: sum of c*d1^a1*...*dn^an terms, degrevlex-descending.
std::string to_string(const Poly& p);
std::string to_string(const Q& c);
// Parses the same text form; accepts rational literals `num/den`, variables
// d1..d8, `^` powers, `*` products, and `+`/`-`. Throws std::invalid_argument
// with a character position on malformed input.
Poly parse_poly(const std::string& text, int n);

}  // namespace pdcc
