#include "pdcc/spencer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace pdcc {

namespace {

long long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; i++) r = r * (n - i) / (i + 1);
  return r;
}

// Strictly increasing s-tuples over {0..n-1}, lexicographic.
std::vector<std::vector<int>> form_tuples(int n, int s) {
  std::vector<std::vector<int>> out;
  if (s < 0 || s > n) return out;
  std::vector<int> t(s);
  for (int i = 0; i < s; i++) t[i] = i;
  while (true) {
    out.push_back(t);
    int i = s - 1;
    while (i >= 0 && t[i] == n - s + i) i--;
    if (i < 0) break;
    t[i]++;
    for (int j = i + 1; j < s; j++) t[j] = t[j - 1] + 1;
  }
  return out;
}

std::map<std::array<std::uint8_t, Exponent::kMaxVars>, int> index_of(
    const std::vector<Exponent>& monos) {
  std::map<std::array<std::uint8_t, Exponent::kMaxVars>, int> idx;
  for (std::size_t i = 0; i < monos.size(); i++)
    idx[monos[i].e] = static_cast<int>(i);
  return idx;
}

// Equations cutting out g_{q+r}: every nu-shift, |nu| = r, of every row.
QMatrix prolonged_eqns(const SymbolSystem& sys, int r) {
  const auto base = monomials_of_degree(sys.n, sys.q);
  const auto high = monomials_of_degree(sys.n, sys.q + r);
  const auto shifts = monomials_of_degree(sys.n, r);
  const auto hidx = index_of(high);
  const int nb = static_cast<int>(base.size());
  const int nh = static_cast<int>(high.size());
  QMatrix out(sys.eqns.rows * static_cast<int>(shifts.size()), sys.m * nh);
  int row = 0;
  for (int tau = 0; tau < sys.eqns.rows; tau++)
    for (const Exponent& nu : shifts) {
      for (int k = 0; k < sys.m; k++)
        for (int mi = 0; mi < nb; mi++) {
          const Q& c = sys.eqns.at(tau, k * nb + mi);
          if (c == 0) continue;
          int hi = hidx.at(exp_mul(base[mi], nu).e);
          out.at(row, k * nh + hi) += c;
        }
      row++;
    }
  return out;
}

// Basis of the level-`level` symbol space: full S_level (x) E below order q,
// exact nullspace at or above, empty below level 0.
QMatrix level_basis(const SymbolSystem& sys, int level) {
  if (level < 0) return QMatrix(0, 0);
  if (level < sys.q) {
    int dim = sys.m * static_cast<int>(monomials_of_degree(sys.n, level).size());
    return QMatrix::identity(dim);
  }
  return prolong(sys, level - sys.q).basis;
}

// Full delta : Lambda^s (x) S_level (x) E -> Lambda^{s+1} (x) S_{level-1} (x) E,
// (delta w)[J][k][mu] = sum_t (-1)^t w[J \ J_t][k][mu + 1_{J_t}].
QMatrix delta_full(int n, int m, int s, int level) {
  const auto src_forms = form_tuples(n, s);
  const auto tgt_forms = form_tuples(n, s + 1);
  const auto src_monos = monomials_of_degree(n, level);
  const auto tgt_monos = monomials_of_degree(n, level - 1);
  const auto sidx = index_of(src_monos);
  std::map<std::vector<int>, int> fidx;
  for (std::size_t i = 0; i < src_forms.size(); i++)
    fidx[src_forms[i]] = static_cast<int>(i);
  const int ns = m * static_cast<int>(src_monos.size());
  const int nt = m * static_cast<int>(tgt_monos.size());
  QMatrix d(static_cast<int>(tgt_forms.size()) * nt,
            static_cast<int>(src_forms.size()) * ns);
  for (std::size_t j = 0; j < tgt_forms.size(); j++) {
    const auto& J = tgt_forms[j];
    for (int t = 0; t <= s; t++) {
      std::vector<int> I = J;
      I.erase(I.begin() + t);
      const int ii = fidx.at(I);
      const int sign = (t % 2 == 0) ? 1 : -1;
      for (std::size_t mp = 0; mp < tgt_monos.size(); mp++) {
        const int mi = sidx.at(exp_mul(tgt_monos[mp], Exponent::unit(n, J[t])).e);
        for (int k = 0; k < m; k++)
          d.at(static_cast<int>(j) * nt + k * static_cast<int>(tgt_monos.size()) +
                   static_cast<int>(mp),
               ii * ns + k * static_cast<int>(src_monos.size()) + mi) += sign;
      }
    }
  }
  return d;
}

QMatrix block_diag(const QMatrix& b, int count) {
  QMatrix out(b.rows * count, b.cols * count);
  for (int c = 0; c < count; c++)
    for (int i = 0; i < b.rows; i++)
      for (int j = 0; j < b.cols; j++)
        out.at(c * b.rows + i, c * b.cols + j) = b.at(i, j);
  return out;
}

// Smallest index i (1-based) with mu_i != 0; the multiplicative variables
// of an equation solved for a class-i jet are d_1..d_i.
int class_of(const Exponent& mu) {
  for (int i = 0; i < mu.n; i++)
    if (mu[i] != 0) return i + 1;
  return 0;
}

struct BoardData {
  std::vector<SolvedEquation> solved;
  std::vector<int> beta;
};

// Class-descending elimination: maximize beta^n first, then beta^{n-1}, ...
BoardData board_of(const QMatrix& eqns, int n, int m,
                   const std::vector<Exponent>& monos) {
  const int nm = static_cast<int>(monos.size());
  std::vector<int> cols(eqns.cols);
  for (int c = 0; c < eqns.cols; c++) cols[c] = c;
  std::stable_sort(cols.begin(), cols.end(), [&](int a, int b) {
    int ca = class_of(monos[a % nm]), cb = class_of(monos[b % nm]);
    if (ca != cb) return ca > cb;
    if (a % nm != b % nm) return a % nm < b % nm;
    return a / nm < b / nm;
  });
  QMatrix perm(eqns.rows, eqns.cols);
  for (int i = 0; i < eqns.rows; i++)
    for (int c = 0; c < eqns.cols; c++) perm.at(i, c) = eqns.at(i, cols[c]);
  Rref rr = qm_rref(std::move(perm));
  BoardData bd;
  bd.beta.assign(n, 0);
  for (int pc : rr.pivot_cols) {
    int orig = cols[pc];
    SolvedEquation se;
    se.k = orig / nm;
    se.mu = monos[orig % nm];
    se.cls = class_of(se.mu);
    bd.solved.push_back(se);
    bd.beta[se.cls - 1]++;
  }
  return bd;
}

// Symbol rows after the substitution d -> C d, row tau and unknown k giving
// the polynomial sum_mu a^{tau,mu}_k d^mu composed with the linear change.
QMatrix substituted_eqns(const SymbolSystem& sys, const QMatrix& C,
                         const std::vector<Exponent>& monos) {
  const int nm = static_cast<int>(monos.size());
  std::vector<Poly> image(sys.n);
  for (int i = 0; i < sys.n; i++) {
    Poly li = Poly::zero(sys.n);
    for (int j = 0; j < sys.n; j++)
      li = poly_add(li, poly_scale(Poly::variable(sys.n, j), C.at(i, j)));
    image[i] = li;
  }
  std::vector<std::vector<Poly>> powers(sys.n);
  for (int i = 0; i < sys.n; i++) {
    powers[i].push_back(Poly::constant(sys.n, 1));
    for (int e = 1; e <= sys.q; e++)
      powers[i].push_back(poly_mul(powers[i].back(), image[i]));
  }
  const auto midx = index_of(monos);
  QMatrix out(sys.eqns.rows, sys.eqns.cols);
  for (int tau = 0; tau < sys.eqns.rows; tau++)
    for (int k = 0; k < sys.m; k++)
      for (int mi = 0; mi < nm; mi++) {
        const Q& c = sys.eqns.at(tau, k * nm + mi);
        if (c == 0) continue;
        Poly prod = Poly::constant(sys.n, c);
        for (int i = 0; i < sys.n; i++)
          if (monos[mi][i] > 0) prod = poly_mul(prod, powers[i][monos[mi][i]]);
        for (const auto& [ex, coeff] : prod.terms)
          out.at(tau, k * nm + midx.at(ex.e)) += coeff;
      }
  return out;
}

// Lexicographic comparison of (beta^n, ..., beta^1); true when a < b.
bool beta_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; i--) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(int n, int d) {
  std::vector<Exponent> out;
  if (n <= 0 || d < 0) return out;
  Exponent cur(n);
  TermOrder canon;
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      cur.set(var, remaining);
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; v++) {
      cur.set(var, v);
      self(self, var + 1, remaining - v);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&](const Exponent& a, const Exponent& b) {
    return compare_monomials(canon, a, b) == GT;
  });
  return out;
}

SymbolBasis prolong(const SymbolSystem& sys, int r) {
  if (r < 0) throw std::invalid_argument("prolong: negative level");
  SymbolBasis out;
  out.r = r;
  out.basis = qm_nullspace(prolonged_eqns(sys, r));
  out.dim = out.basis.cols;
  return out;
}

SymbolSystem prolong_system(const SymbolSystem& sys, int r) {
  if (r < 0) throw std::invalid_argument("prolong_system: negative level");
  SymbolSystem out;
  out.n = sys.n;
  out.m = sys.m;
  out.q = sys.q + r;
  out.eqns = prolonged_eqns(sys, r);
  return out;
}

DeltaMap delta_map(const SymbolSystem& sys, int s, int r) {
  DeltaMap out;
  out.s = s;
  out.r = r;
  const QMatrix b1 = level_basis(sys, sys.q + r + 1);
  const QMatrix b0 = level_basis(sys, sys.q + r);
  const int f1 = static_cast<int>(binom(sys.n, s));
  const int f0 = static_cast<int>(binom(sys.n, s + 1));
  const int src = f1 * b1.cols;
  const int tgt = f0 * b0.cols;
  if (src == 0 || tgt == 0) {
    out.matrix = QMatrix(tgt, src);
    return out;
  }
  QMatrix dfull = delta_full(sys.n, sys.m, s, sys.q + r + 1);
  QMatrix rhs = qm_mul(dfull, block_diag(b1, f1));
  out.matrix = qm_solve(block_diag(b0, f0), rhs);
  return out;
}

CohomologyReport cohomology(const SymbolSystem& sys, int s, int r) {
  CohomologyReport rep;
  rep.s = s;
  rep.r = r;
  const QMatrix g = level_basis(sys, sys.q + r);
  const int target_dim = static_cast<int>(binom(sys.n, s)) * g.cols;
  if (target_dim == 0) return rep;
  rep.dim_B = s >= 1 ? qm_rank(delta_map(sys, s - 1, r).matrix) : 0;
  rep.dim_Z = target_dim - qm_rank(delta_map(sys, s, r - 1).matrix);
  rep.dim_H = rep.dim_Z - rep.dim_B;
  return rep;
}

bool is_s_acyclic(const SymbolSystem& sys, int s, int r_max) {
  int vanish = -1;
  for (int r = 0; r <= r_max; r++)
    if (prolong(sys, r).dim == 0) {
      vanish = r;
      break;
    }
  if (vanish < 0)
    throw std::domain_error(
        "is_s_acyclic: symbol did not reach finite-type vanishing by r_max; "
        "the all-levels claim cannot be certified");
  for (int r = 0; r < vanish; r++)
    for (int j = 1; j <= s; j++)
      if (cohomology(sys, j, r).dim_H != 0) return false;
  return true;
}

JanetBoard janet_board(const SymbolSystem& sys, int attempts,
                       std::uint64_t seed) {
  if (sys.q < 1) throw std::invalid_argument("janet_board: order must be >= 1");
  if (attempts < 1) throw std::invalid_argument("janet_board: attempts < 1");
  const auto monos = monomials_of_degree(sys.n, sys.q);
  JanetBoard best;
  BoardData bd = board_of(sys.eqns, sys.n, sys.m, monos);
  best.solved_equations = bd.solved;
  best.beta = bd.beta;
  best.coordinate_change = QMatrix::identity(sys.n);
  best.attempts_used = 1;

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> dist(-3, 3);
  int stable = 1;
  for (int a = 2; a <= attempts && stable < 3; a++) {
    QMatrix c(sys.n, sys.n);
    do {
      for (int i = 0; i < sys.n; i++)
        for (int j = 0; j < sys.n; j++) c.at(i, j) = dist(rng);
    } while (qm_rank(c) < sys.n);
    SymbolSystem moved = sys;
    moved.eqns = substituted_eqns(sys, c, monos);
    BoardData cand = board_of(moved.eqns, sys.n, sys.m, monos);
    best.attempts_used = a;
    if (beta_less(best.beta, cand.beta)) {
      best.solved_equations = cand.solved;
      best.beta = cand.beta;
      best.coordinate_change = c;
      stable = 1;
    } else {
      stable++;
    }
  }

  best.alpha.assign(sys.n, 0);
  long long sum_mult = 0;
  for (int i = 1; i <= sys.n; i++) {
    long long full = static_cast<long long>(sys.m) *
                     binom(sys.q + sys.n - i - 1, sys.n - i);
    best.alpha[i - 1] = static_cast<int>(full) - best.beta[i - 1];
    sum_mult += static_cast<long long>(i) * best.alpha[i - 1];
  }
  best.involutive = prolong(sys, 1).dim == sum_mult;
  return best;
}

long long dim_prediction(const SymbolSystem& sys, const JanetBoard& board,
                         int r) {
  if (!board.involutive)
    throw std::domain_error("dim_prediction: board is not involutive");
  if (r < 0) throw std::invalid_argument("dim_prediction: negative level");
  long long dim = 0;
  for (int i = 1; i <= sys.n; i++)
    dim += binom(r + i - 1, r) * board.alpha[i - 1];
  return dim;
}

std::vector<int> janet_sequence(const SymbolSystem& sys,
                                const JanetBoard& board) {
  if (!board.involutive)
    throw std::domain_error("janet_sequence: board is not involutive");
  std::vector<int> ranks;
  ranks.push_back(sys.m);
  ranks.push_back(static_cast<int>(board.solved_equations.size()));
  std::vector<int> classes;
  for (const auto& se : board.solved_equations) classes.push_back(se.cls);
  while (true) {
    std::vector<int> next;
    for (int c : classes)
      for (int j = c + 1; j <= sys.n; j++) next.push_back(j);
    if (next.empty()) break;
    ranks.push_back(static_cast<int>(next.size()));
    classes = std::move(next);
  }
  return ranks;
}

}  // namespace pdcc
