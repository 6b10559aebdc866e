#include "pdcc/systems.hpp"

#include <map>
#include <stdexcept>

namespace pdcc {

namespace {

void check_metric(const Metric& metric) {
  if (metric.n < 2 || static_cast<int>(metric.diag.size()) != metric.n)
    throw std::invalid_argument("metric: need n >= 2 and n diagonal entries");
  for (int d : metric.diag)
    if (d != 1 && d != -1)
      throw std::invalid_argument("metric: diagonal entries must be +-1");
}

// Single-unknown system given as one polynomial per row.
Poly parse_entry(int n, const std::string& text) {
  return parse_poly(text, n);
}

OpMatrix column_system(int n, const std::vector<std::string>& rows) {
  OpMatrix a(n, static_cast<int>(rows.size()), 1);
  for (std::size_t i = 0; i < rows.size(); i++)
    a.entry[i][0] = parse_entry(n, rows[i]);
  return a;
}

}  // namespace

Metric euclidean_metric(int n) {
  Metric m{n, std::vector<int>(n, 1), "euclidean"};
  check_metric(m);
  return m;
}

Metric minkowski_metric(int n) {
  Metric m{n, std::vector<int>(n, 1), "minkowski"};
  m.diag[n - 1] = -1;
  check_metric(m);
  return m;
}

OpMatrix killing_operator(const Metric& metric) {
  check_metric(metric);
  const int n = metric.n;
  OpMatrix a(n, n * (n + 1) / 2, n);
  int row = 0;
  for (int i = 0; i < n; i++)
    for (int j = i; j < n; j++) {
      a.entry[row][j] = poly_add(
          a.entry[row][j], poly_scale(Poly::variable(n, i), metric.diag[j]));
      a.entry[row][i] = poly_add(
          a.entry[row][i], poly_scale(Poly::variable(n, j), metric.diag[i]));
      row++;
    }
  return a;
}

OpMatrix conformal_killing_operator(const Metric& metric) {
  check_metric(metric);
  const int n = metric.n;
  OpMatrix a = killing_operator(metric);
  const Q trace_coeff = Q(-2) / n;
  int row = 0;
  for (int i = 0; i < n; i++)
    for (int j = i; j < n; j++) {
      if (i == j)
        for (int r = 0; r < n; r++)
          a.entry[row][r] =
              poly_add(a.entry[row][r],
                       poly_scale(Poly::variable(n, r),
                                  trace_coeff * metric.diag[i]));
      row++;
    }
  return a;
}

SystemName system_name_from_string(std::string name) {
  for (char& c : name)
    if (c == '_') c = '-';
  if (name == "killing") return SystemName::killing;
  if (name == "conformal-killing") return SystemName::conformal_killing;
  if (name == "example-3-9") return SystemName::example_3_9;
  if (name == "example-3-13") return SystemName::example_3_13;
  if (name == "example-3-13-involutive") return SystemName::example_3_13_involutive;
  if (name == "example-4-15") return SystemName::example_4_15;
  if (name == "gradient") return SystemName::gradient;
  if (name == "triple-cc-3-14") return SystemName::triple_cc_3_14;
  throw std::invalid_argument("unknown system '" + name + "'");
}

OpMatrix builtin_system(const SystemDescriptor& desc) {
  switch (desc.name) {
    case SystemName::killing:
      if (!desc.metric) throw std::invalid_argument("killing needs a metric");
      return killing_operator(*desc.metric);
    case SystemName::conformal_killing:
      if (!desc.metric)
        throw std::invalid_argument("conformal_killing needs a metric");
      return conformal_killing_operator(*desc.metric);
    case SystemName::example_3_9:
      return column_system(3, {"d3^2", "d2*d3 - d1^2", "d2^2"});
    case SystemName::example_3_13:
      return column_system(3, {"d1^2", "d1*d3 - d2"});
    case SystemName::example_3_13_involutive:
      return column_system(3, {"d3^2", "d2*d3", "d2^2", "d1*d3 - d2"});
    case SystemName::example_4_15:
      return column_system(2, {"d1*d2", "d2^2"});
    case SystemName::gradient: {
      if (desc.n < 1) throw std::invalid_argument("gradient needs n >= 1");
      OpMatrix a(desc.n, desc.n, 1);
      for (int i = 0; i < desc.n; i++)
        a.entry[i][0] = Poly::variable(desc.n, i);
      return a;
    }
    case SystemName::triple_cc_3_14: {
      // The pairwise commutator identities of P = d2^2, Q = d2 d3 - d1^2,
      // R = d3^2 acting on the three equations of example_3_9.
      OpMatrix a(3, 3, 3);
      const Poly p = parse_poly("d2^2", 3);
      const Poly q = parse_poly("d2*d3 - d1^2", 3);
      const Poly r = parse_poly("d3^2", 3);
      a.entry[0][0] = q;
      a.entry[0][1] = poly_neg(r);
      a.entry[1][0] = poly_neg(p);
      a.entry[1][2] = r;
      a.entry[2][1] = p;
      a.entry[2][2] = poly_neg(q);
      return a;
    }
  }
  throw std::invalid_argument("builtin_system: unknown descriptor");
}

SymbolSystem symbol_of(const OpMatrix& op, int q) {
  if (q != op_order(op))
    throw std::invalid_argument("symbol_of: q does not match operator order");
  SymbolSystem sys;
  sys.n = op.n;
  sys.m = op.cols;
  sys.q = q;
  const auto monos = monomials_of_degree(op.n, q);
  std::map<std::array<std::uint8_t, Exponent::kMaxVars>, int> midx;
  for (std::size_t i = 0; i < monos.size(); i++)
    midx[monos[i].e] = static_cast<int>(i);
  const int nm = static_cast<int>(monos.size());
  sys.eqns = QMatrix(op.rows, op.cols * nm);
  for (int tau = 0; tau < op.rows; tau++)
    for (int k = 0; k < op.cols; k++)
      for (const auto& [ex, c] : op.entry[tau][k].terms)
        if (ex.deg == q) sys.eqns.at(tau, k * nm + midx.at(ex.e)) = c;
  return sys;
}

DimensionFormulas dimension_formulas(int n) {
  if (n < 2) throw std::invalid_argument("dimension_formulas: n >= 2");
  const long long nn = n;
  DimensionFormulas f;
  f.riemann_dim = nn * nn * (nn * nn - 1) / 12;
  f.riemann_bianchi_dim = nn * nn * (nn * nn - 1) * (nn - 2) / 24;
  f.conformal_F0_dim = (nn - 1) * (nn + 2) / 2;
  f.weyl_dim = nn * (nn + 1) * (nn + 2) * (nn - 3) / 12;
  f.weyl_bianchi_dim = nn * (nn * nn - 1) * (nn + 2) * (nn - 4) / 24;
  return f;
}

}  // namespace pdcc
