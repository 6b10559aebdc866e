#include "pdcc/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace pdcc {

namespace {

// Row degrees under column twists; nullopt when some row mixes degrees.
// Zero rows get degree 0.
std::optional<std::vector<int>> twisted_row_degrees(const OpMatrix& M,
                                                    const std::vector<int>& twists) {
  std::vector<int> degs(M.rows, 0);
  for (int i = 0; i < M.rows; i++) {
    int d = Poly::kDegZero;
    for (int j = 0; j < M.cols; j++) {
      const Poly& p = M.entry[i][j];
      if (p.is_zero()) continue;
      if (!p.is_homogeneous()) return std::nullopt;
      int dj = p.degree() + twists[j];
      if (d == Poly::kDegZero) d = dj;
      else if (d != dj) return std::nullopt;
    }
    degs[i] = d == Poly::kDegZero ? 0 : d;
  }
  return degs;
}

// Greedy minimal generating set in weakly increasing degree: a row is kept
// iff it is not in the module generated by the rows kept before it. For
// graded input this realizes the graded Nakayama count per degree.
OpMatrix minimal_generators(const OpMatrix& M, const std::vector<int>& degs,
                            std::vector<int>& kept_degs, const TermOrder& order) {
  std::vector<int> idx(M.rows);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return degs[a] < degs[b]; });
  auto rows = rows_of(M);
  std::vector<ModuleElement> kept;
  kept_degs.clear();
  GroebnerBasis gb;
  gb.order = order;
  for (int i : idx) {
    if (rows[i].is_zero()) continue;
    if (!kept.empty() && module_membership(rows[i], gb)) continue;
    kept.push_back(rows[i]);
    kept_degs.push_back(degs[i]);
    gb = buchberger(kept, order);
  }
  return from_rows(kept, M.n, M.cols);
}

int step_order(const OpMatrix& M) {
  int d = op_order(M);
  return d == Poly::kDegZero ? 0 : d;
}

bool rows_plain_homogeneous(const OpMatrix& M) {
  std::vector<int> twists(M.cols, 0);
  return twisted_row_degrees(M, twists).has_value();
}

}  // namespace

FreeResolution resolve(const OpMatrix& A, bool minimize, int max_length,
                       const TermOrder& order) {
  FreeResolution res;
  const bool default_guard = max_length < 0;
  const int cap = default_guard ? A.n + 2 : max_length;

  OpMatrix cur = trim_rows(A);
  std::vector<int> cur_degs;
  bool grading = minimize;
  if (minimize) {
    std::vector<int> twists(A.cols, 0);
    auto degs = twisted_row_degrees(cur, twists);
    if (!degs) {
      grading = false;
      res.warnings.push_back("rows are not homogeneous; graded minimization skipped");
    } else {
      cur = minimal_generators(cur, *degs, cur_degs, order);
    }
  }
  res.minimized = grading;
  res.betti.push_back(A.cols);
  res.steps.push_back(cur);
  res.betti.push_back(cur.rows);
  res.orders.push_back(step_order(cur));

  while (cur.rows > 0) {
    if (!default_guard && static_cast<int>(res.steps.size()) >= cap) {
      res.warnings.push_back("resolution truncated at max length");
      break;
    }
    auto syz = syzygies(rows_of(cur), order);
    if (syz.empty()) break;
    if (static_cast<int>(res.steps.size()) >= cap)
      throw std::logic_error("resolution exceeded the syzygy bound");
    OpMatrix S = from_rows(syz, A.n, cur.rows);
    if (grading) {
      auto degs = twisted_row_degrees(S, cur_degs);
      if (!degs) {
        grading = false;
        res.minimized = false;
        res.warnings.push_back("syzygy step lost homogeneity; minimization disabled");
      } else {
        std::vector<int> kept;
        S = minimal_generators(S, *degs, kept, order);
        cur_degs = kept;
      }
    }
    res.steps.push_back(S);
    res.betti.push_back(S.rows);
    res.orders.push_back(step_order(S));
    cur = S;
  }
  return res;
}

MinimizeStepResult minimize_step(const OpMatrix& prev, const OpMatrix& step,
                                 const std::optional<OpMatrix>& next) {
  if (step.cols != prev.rows) throw std::invalid_argument("minimize_step: shape mismatch");
  if (next && next->cols != step.rows) throw std::invalid_argument("minimize_step: shape mismatch");
  if (!compose(step, prev).is_zero())
    throw std::invalid_argument("minimize_step: chain does not compose to zero");
  if (next && !compose(*next, step).is_zero())
    throw std::invalid_argument("minimize_step: chain does not compose to zero");

  MinimizeStepResult out{prev, step, next, false};
  if (!rows_plain_homogeneous(prev) || !rows_plain_homogeneous(step) ||
      (next && !rows_plain_homogeneous(*next)))
    return out;

  OpMatrix& P = out.prev;
  OpMatrix& S = out.step;
  while (true) {
    int pi = -1, pj = -1;
    for (int i = 0; i < S.rows && pi < 0; i++)
      for (int j = 0; j < S.cols; j++)
        if (!S.entry[i][j].is_zero() && S.entry[i][j].degree() == 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    Q c = S.entry[pi][pj].terms[0].second;
    std::vector<Poly> f(S.rows, Poly::zero(S.n));
    for (int r = 0; r < S.rows; r++) {
      if (r == pi || S.entry[r][pj].is_zero()) continue;
      f[r] = poly_scale(S.entry[r][pj], Q(1) / c);
      for (int k = 0; k < S.cols; k++)
        S.entry[r][k] = poly_sub(S.entry[r][k], poly_mul(f[r], S.entry[pi][k]));
    }
    if (out.next) {
      OpMatrix& N = *out.next;
      for (int s = 0; s < N.rows; s++) {
        for (int r = 0; r < S.rows; r++)
          if (r != pi && !f[r].is_zero())
            N.entry[s][pi] = poly_add(N.entry[s][pi], poly_mul(N.entry[s][r], f[r]));
        // composition-zero forces the pivot column of next to cancel
        if (!N.entry[s][pi].is_zero())
          throw std::logic_error("minimize_step: pivot column failed to cancel");
      }
      OpMatrix N2(N.n, N.rows, N.cols - 1);
      for (int s = 0; s < N.rows; s++) {
        int t = 0;
        for (int r = 0; r < N.cols; r++)
          if (r != pi) N2.entry[s][t++] = N.entry[s][r];
      }
      N = std::move(N2);
    }
    OpMatrix P2(P.n, P.rows - 1, P.cols);
    for (int r = 0, t = 0; r < P.rows; r++)
      if (r != pj) P2.entry[t++] = P.entry[r];
    P = std::move(P2);
    OpMatrix S2(S.n, S.rows - 1, S.cols - 1);
    for (int r = 0, t = 0; r < S.rows; r++) {
      if (r == pi) continue;
      int u = 0;
      for (int k = 0; k < S.cols; k++)
        if (k != pj) S2.entry[t][u++] = S.entry[r][k];
      t++;
    }
    S = std::move(S2);
  }
  out.minimized = true;
  return out;
}

int euler_characteristic(const FreeResolution& r) {
  int chi = 0, sign = 1;
  for (int b : r.betti) {
    chi += sign * b;
    sign = -sign;
  }
  return chi;
}

void certify(FreeResolution& r, const TermOrder& order) {
  r.certificates.clear();
  for (std::size_t i = 0; i < r.steps.size(); i++) {
    const OpMatrix& cur = r.steps[i];
    JunctionCertificate cert;
    auto syz = syzygies(rows_of(cur), order);
    cert.kernel_gens = from_rows(syz, cur.n, cur.rows);
    if (i + 1 < r.steps.size()) {
      const OpMatrix& next = r.steps[i + 1];
      auto X = express_in(rows_of(cert.kernel_gens), rows_of(next), order);
      cert.in_next = from_rows(X, cur.n, next.rows);
      auto Y = express_in(rows_of(next), syz, order);
      cert.in_kernel = from_rows(Y, cur.n, static_cast<int>(syz.size()));
    } else {
      if (!syz.empty()) throw std::domain_error("chain is not exact at the final step");
      cert.in_next = OpMatrix(cur.n, 0, 0);
      cert.in_kernel = OpMatrix(cur.n, 0, 0);
    }
    r.certificates.push_back(std::move(cert));
  }
}

ChainReport verify_chain(const FreeResolution& r, const TermOrder& order) {
  ChainReport rep;
  const std::size_t L = r.steps.size();
  const bool have_certs = r.certificates.size() == L;
  for (std::size_t i = 0; i < L; i++) {
    ChainReport::Junction j;
    if (i + 1 < L) j.composition_zero = compose(r.steps[i + 1], r.steps[i]).is_zero();
    if (have_certs) {
      const auto& c = r.certificates[i];
      bool ok = compose(c.kernel_gens, r.steps[i]).is_zero();
      if (i + 1 < L) {
        ok = ok && compose(c.in_next, r.steps[i + 1]) == c.kernel_gens;
        ok = ok && compose(c.in_kernel, c.kernel_gens) == r.steps[i + 1];
      } else {
        ok = ok && c.kernel_gens.rows == 0;
      }
      j.exact = ok;
    } else {
      auto syz = syzygies(rows_of(r.steps[i]), order);
      if (i + 1 < L) j.exact = module_equal(syz, rows_of(r.steps[i + 1]), order);
      else j.exact = syz.empty();
    }
    rep.pass = rep.pass && j.composition_zero && j.exact;
    rep.junctions.push_back(j);
  }
  return rep;
}

}  // namespace pdcc
