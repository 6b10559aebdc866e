/* systems.hpp
 *
 * Named generators for the operators under study: Killing and conformal
 * Killing systems over flat diagonal metrics, the worked catalog examples,
 * symbol extraction, and the closed-form dimension table. Tests reference
 * these constructors instead of hand-typed matrices.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdcc/opmatrix.hpp"
#include "pdcc/spencer.hpp"

namespace pdcc {

// Constant diagonal +-1 metric.
struct Metric {
  int n = 0;
  std::vector<int> diag;  // entries +-1
  std::string description;  // "euclidean", "minkowski", or "custom"
};

Metric euclidean_metric(int n);
Metric minkowski_metric(int n);  // diag(1, .., 1, -1)

enum class SystemName {
  killing,
  conformal_killing,
  example_3_9,
  example_3_13,
  example_3_13_involutive,
  example_4_15,
  gradient,
  triple_cc_3_14,
};

struct SystemDescriptor {
  SystemName name;
  std::optional<Metric> metric;  // required for killing / conformal_killing
  int n = 0;                     // required for gradient
};

// Accepts dashed or underscored spellings ("conformal-killing").
SystemName system_name_from_string(std::string name);

// Rows ordered lexicographically over pairs (i <= j); row (i,j) carries
// omega_jj d_i in column j plus omega_ii d_j in column i.
OpMatrix killing_operator(const Metric& metric);

// Killing rows minus (2/n) omega_ii sum_r d_r on the diagonal rows.
OpMatrix conformal_killing_operator(const Metric& metric);

OpMatrix builtin_system(const SystemDescriptor& desc);

// Extracts the degree-q homogeneous part of each entry; q must equal the
// operator order.
SymbolSystem symbol_of(const OpMatrix& op, int q);

struct DimensionFormulas {
  long long riemann_dim = 0;          // n^2 (n^2 - 1) / 12
  long long riemann_bianchi_dim = 0;  // n^2 (n^2 - 1)(n - 2) / 24
  long long conformal_F0_dim = 0;     // (n - 1)(n + 2) / 2
  long long weyl_dim = 0;             // n (n + 1)(n + 2)(n - 3) / 12
  long long weyl_bianchi_dim = 0;     // n (n^2 - 1)(n + 2)(n - 4) / 24
};

DimensionFormulas dimension_formulas(int n);

}  // namespace pdcc
