#include "pdcc/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace pdcc {

TermOrder default_order() { return TermOrder{MonoOrder::degrevlex, ModuleOrder::pot, nullptr}; }

bool ModuleElement::is_zero() const {
  for (const auto& p : c)
    if (!p.is_zero()) return false;
  return true;
}

int ModuleElement::dim() const { return c.empty() ? 0 : c[0].n; }

bool operator==(const ModuleElement& a, const ModuleElement& b) {
  return a.m == b.m && a.c == b.c;
}

ModuleElement me_add(const ModuleElement& a, const ModuleElement& b) {
  if (a.m != b.m) throw std::invalid_argument("module element width mismatch");
  ModuleElement r = a;
  for (int i = 0; i < a.m; i++) r.c[i] = poly_add(r.c[i], b.c[i]);
  return r;
}

ModuleElement me_neg(const ModuleElement& a) {
  ModuleElement r = a;
  for (auto& p : r.c) p = poly_neg(p);
  return r;
}

ModuleElement me_scale(const ModuleElement& a, const Q& c) {
  ModuleElement r = a;
  for (auto& p : r.c) p = poly_scale(p, c);
  return r;
}

void me_add_scaled(ModuleElement& a, const Q& c, const Exponent& mu, const ModuleElement& b) {
  if (a.m != b.m) throw std::invalid_argument("module element width mismatch");
  for (int i = 0; i < a.m; i++) poly_add_scaled(a.c[i], c, mu, b.c[i]);
}

Poly me_dot(const ModuleElement& lambda, const std::vector<Poly>& column) {
  if (static_cast<std::size_t>(lambda.m) != column.size())
    throw std::invalid_argument("me_dot width mismatch");
  Poly r(lambda.dim() ? lambda.dim() : (column.empty() ? 0 : column[0].n));
  for (int i = 0; i < lambda.m; i++)
    if (!lambda.c[i].is_zero() && !column[i].is_zero())
      r = poly_add(r, poly_mul(lambda.c[i], column[i]));
  return r;
}

LeadTerm leading_term(const ModuleElement& e, const TermOrder& order) {
  LeadTerm best;
  for (int comp = 0; comp < e.m; comp++) {
    if (e.c[comp].is_zero()) continue;
    std::size_t idx = leading_index(e.c[comp], order);
    const auto& [ex, co] = e.c[comp].terms[idx];
    if (best.comp < 0 ||
        compare_module_terms(order, comp, ex, best.comp, best.ex) == GT) {
      best.comp = comp;
      best.ex = ex;
      best.coeff = co;
    }
  }
  if (best.comp < 0) throw std::domain_error("leading_term of zero element");
  return best;
}

namespace {

struct Tracked {
  ModuleElement g;   // basis element in D^(1xm)
  ModuleElement u;   // payload: g = u . original_gens, in D^(1xp)
  LeadTerm lt;
  bool single_component = false;  // all terms of g live in lt.comp
};

bool is_single_component(const ModuleElement& g, int comp) {
  for (int i = 0; i < g.m; i++)
    if (i != comp && !g.c[i].is_zero()) return false;
  return true;
}

// Full division: reduces every term of e. Returns remainder, accumulates
// polynomial quotients (one per basis element) when `quot` is non-null and
// subtracts q_j * u_j from `payload` when tracking.
ModuleElement divide_full(const ModuleElement& e, const std::vector<Tracked>& basis,
                          const TermOrder& order, std::vector<Poly>* quot,
                          ModuleElement* payload) {
  int n = e.dim();
  ModuleElement rem(e.m, n);
  ModuleElement work = e;
  while (!work.is_zero()) {
    LeadTerm lt = leading_term(work, order);
    bool reduced = false;
    for (std::size_t j = 0; j < basis.size(); j++) {
      const auto& bj = basis[j];
      if (bj.lt.comp != lt.comp || !exp_divides(bj.lt.ex, lt.ex)) continue;
      Exponent mu = exp_div(lt.ex, bj.lt.ex);
      Q coef = lt.coeff / bj.lt.coeff;
      me_add_scaled(work, -coef, mu, bj.g);
      if (quot) (*quot)[j] = poly_add((*quot)[j], Poly::term(n, mu, coef));
      if (payload) me_add_scaled(*payload, -coef, mu, bj.u);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.c[lt.comp] = poly_add(rem.c[lt.comp], Poly::term(n, lt.ex, lt.coeff));
      work.c[lt.comp] = poly_sub(work.c[lt.comp], Poly::term(n, lt.ex, lt.coeff));
    }
  }
  return rem;
}

struct PairKey {
  int deg;
  int i, j;
  bool operator<(const PairKey& o) const {
    return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j);
  }
};

// Shared Buchberger engine. When `track` is set, payloads are maintained and
// zero reductions contribute syzygies of the original generators.
struct Engine {
  TermOrder order;
  int m = 0, n = 0, p = 0;
  bool track = false;
  std::vector<Tracked> basis;
  std::vector<ModuleElement> zero_syzygies;
  std::set<PairKey> queue;
  std::set<std::pair<int, int>> done;

  void add_pairs(int jnew) {
    for (int i = 0; i < jnew; i++) {
      if (basis[i].lt.comp != basis[jnew].lt.comp) continue;
      Exponent l = exp_lcm(basis[i].lt.ex, basis[jnew].lt.ex);
      queue.insert(PairKey{l.deg, i, jnew});
    }
  }

  void push(ModuleElement g, ModuleElement u) {
    LeadTerm lt = leading_term(g, order);
    // monic normalization keeps reductions and outputs deterministic
    if (lt.coeff != 1) {
      Q inv = Q(1) / lt.coeff;
      g = me_scale(g, inv);
      u = me_scale(u, inv);
      lt.coeff = 1;
    }
    Tracked t{std::move(g), std::move(u), lt, false};
    t.single_component = is_single_component(t.g, lt.comp);
    basis.push_back(std::move(t));
    add_pairs(static_cast<int>(basis.size()) - 1);
  }

  bool chain_criterion(int i, int j, const Exponent& lcm) const {
    for (std::size_t k = 0; k < basis.size(); k++) {
      if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
      if (basis[k].lt.comp != basis[i].lt.comp) continue;
      if (!exp_divides(basis[k].lt.ex, lcm)) continue;
      auto pik = std::minmax(i, static_cast<int>(k));
      auto pjk = std::minmax(j, static_cast<int>(k));
      if (done.count({pik.first, pik.second}) && done.count({pjk.first, pjk.second}))
        return true;
    }
    return false;
  }

  void complete() {
    while (!queue.empty()) {
      PairKey pk = *queue.begin();
      queue.erase(queue.begin());
      int i = pk.i, j = pk.j;
      done.insert({i, j});
      const Exponent lcm = exp_lcm(basis[i].lt.ex, basis[j].lt.ex);
      // product criterion: only safe when both elements are confined to the
      // shared component (module tails break the polynomial argument)
      if (basis[i].single_component && basis[j].single_component &&
          lcm.deg == basis[i].lt.ex.deg + basis[j].lt.ex.deg)
        continue;
      if (chain_criterion(i, j, lcm)) continue;
      reduce_pair(i, j, lcm, nullptr);
    }
  }

  // Builds the S-element of pair (i,j), reduces it fully; if nonzero the
  // result joins the basis, if zero and tracking the payload is a syzygy.
  void reduce_pair(int i, int j, const Exponent& lcm, std::vector<ModuleElement>* syz_out) {
    Exponent mi = exp_div(lcm, basis[i].lt.ex);
    Exponent mj = exp_div(lcm, basis[j].lt.ex);
    ModuleElement s(m, n);
    me_add_scaled(s, Q(1) / basis[i].lt.coeff, mi, basis[i].g);
    me_add_scaled(s, Q(-1) / basis[j].lt.coeff, mj, basis[j].g);
    ModuleElement pay(p, n);
    if (track) {
      me_add_scaled(pay, Q(1) / basis[i].lt.coeff, mi, basis[i].u);
      me_add_scaled(pay, Q(-1) / basis[j].lt.coeff, mj, basis[j].u);
    }
    ModuleElement rem = divide_full(s, basis, order, nullptr, track ? &pay : nullptr);
    if (rem.is_zero()) {
      if (syz_out && track && !pay.is_zero()) syz_out->push_back(std::move(pay));
      return;
    }
    if (syz_out)
      throw std::logic_error("S-pair of a Groebner basis did not reduce to zero");
    push(std::move(rem), std::move(pay));
  }

  // Reduced basis: every element fully reduced against the others, monic,
  // sorted ascending by leading term. Dropped (zero) elements contribute
  // payload syzygies when tracking.
  void interreduce_basis() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < basis.size(); i++) {
        std::vector<Tracked> others;
        others.reserve(basis.size() - 1);
        for (std::size_t j = 0; j < basis.size(); j++)
          if (j != i) others.push_back(basis[j]);
        ModuleElement pay = basis[i].u;
        ModuleElement red = divide_full(basis[i].g, others, order, nullptr, track ? &pay : nullptr);
        if (red == basis[i].g) continue;
        changed = true;
        if (red.is_zero()) {
          if (track && !pay.is_zero()) zero_syzygies.push_back(pay);
          basis.erase(basis.begin() + i);
          i--;
          continue;
        }
        LeadTerm lt = leading_term(red, order);
        if (lt.coeff != 1) {
          Q inv = Q(1) / lt.coeff;
          red = me_scale(red, inv);
          pay = me_scale(pay, inv);
          lt.coeff = 1;
        }
        basis[i].g = std::move(red);
        basis[i].u = std::move(pay);
        basis[i].lt = lt;
        basis[i].single_component = is_single_component(basis[i].g, lt.comp);
      }
    }
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); i++) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return compare_module_terms(order, basis[a].lt.comp, basis[a].lt.ex,
                                  basis[b].lt.comp, basis[b].lt.ex) == LT;
    });
    std::vector<Tracked> sorted;
    sorted.reserve(basis.size());
    for (std::size_t i : idx) sorted.push_back(std::move(basis[i]));
    basis = std::move(sorted);
  }
};

Engine make_engine(const std::vector<ModuleElement>& gens, const TermOrder& order, bool track) {
  Engine eng;
  eng.order = order;
  eng.track = track;
  eng.p = static_cast<int>(gens.size());
  for (const auto& g : gens) {
    if (g.m != gens[0].m) throw std::invalid_argument("generator width mismatch");
    eng.m = g.m;
    if (g.dim() > 0) eng.n = g.dim();
  }
  for (int i = 0; i < eng.p; i++) {
    const auto& g = gens[i];
    if (g.is_zero()) {
      if (track) {
        ModuleElement e(eng.p, eng.n);
        e.c[i] = Poly::constant(eng.n, 1);
        eng.zero_syzygies.push_back(std::move(e));
      }
      continue;
    }
    ModuleElement u(track ? eng.p : 0, eng.n);
    if (track) u.c[i] = Poly::constant(eng.n, 1);
    eng.push(g, std::move(u));
  }
  return eng;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<ModuleElement>& gens, const TermOrder& order) {
  GroebnerBasis gb;
  gb.order = order;
  if (gens.empty()) {
    gb.reduced = true;
    return gb;
  }
  Engine eng = make_engine(interreduce(gens, order), order, false);
  eng.complete();
  eng.interreduce_basis();
  gb.generators.reserve(eng.basis.size());
  for (auto& t : eng.basis) gb.generators.push_back(std::move(t.g));
  gb.reduced = true;
  return gb;
}

ModuleElement normal_form(const ModuleElement& e, const GroebnerBasis& gb) {
  if (!gb.generators.empty() && e.m != gb.generators[0].m)
    throw std::invalid_argument("normal_form width mismatch");
  std::vector<Tracked> basis;
  basis.reserve(gb.generators.size());
  for (const auto& g : gb.generators)
    basis.push_back(Tracked{g, ModuleElement(), leading_term(g, gb.order), false});
  return divide_full(e, basis, gb.order, nullptr, nullptr);
}

bool module_membership(const ModuleElement& e, const GroebnerBasis& gb) {
  return normal_form(e, gb).is_zero();
}

bool module_equal(const std::vector<ModuleElement>& A, const std::vector<ModuleElement>& B,
                  const TermOrder& order) {
  GroebnerBasis ga = buchberger(A, order);
  GroebnerBasis gb = buchberger(B, order);
  for (const auto& a : A)
    if (!a.is_zero() && !module_membership(a, gb)) return false;
  for (const auto& b : B)
    if (!b.is_zero() && !module_membership(b, ga)) return false;
  return true;
}

std::vector<ModuleElement> interreduce(std::vector<ModuleElement> gens, const TermOrder& order) {
  std::vector<ModuleElement> cur;
  for (auto& g : gens)
    if (!g.is_zero()) cur.push_back(std::move(g));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.size(); i++) {
      std::vector<Tracked> others;
      others.reserve(cur.size() - 1);
      for (std::size_t j = 0; j < cur.size(); j++)
        if (j != i) others.push_back(Tracked{cur[j], ModuleElement(), leading_term(cur[j], order), false});
      ModuleElement red = divide_full(cur[i], others, order, nullptr, nullptr);
      if (red == cur[i]) continue;
      changed = true;
      if (red.is_zero()) {
        cur.erase(cur.begin() + i);
        i--;
      } else {
        cur[i] = std::move(red);
      }
    }
  }
  for (auto& g : cur) {
    LeadTerm lt = leading_term(g, order);
    if (lt.coeff != 1) g = me_scale(g, Q(1) / lt.coeff);
  }
  std::sort(cur.begin(), cur.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    LeadTerm la = leading_term(a, order), lb = leading_term(b, order);
    int c = compare_module_terms(order, la.comp, la.ex, lb.comp, lb.ex);
    if (c != EQ) return c == LT;
    return false;
  });
  return cur;
}

std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens, const TermOrder& order) {
  if (gens.empty()) return {};
  Engine eng = make_engine(gens, order, true);
  eng.complete();
  eng.interreduce_basis();

  std::vector<ModuleElement> syz = std::move(eng.zero_syzygies);

  // Schreyer pass: every same-component pair of the final basis, no shortcuts.
  std::set<PairKey> pairs;
  for (std::size_t i = 0; i < eng.basis.size(); i++)
    for (std::size_t j = i + 1; j < eng.basis.size(); j++) {
      if (eng.basis[i].lt.comp != eng.basis[j].lt.comp) continue;
      Exponent l = exp_lcm(eng.basis[i].lt.ex, eng.basis[j].lt.ex);
      pairs.insert(PairKey{l.deg, static_cast<int>(i), static_cast<int>(j)});
    }
  for (const auto& pk : pairs) {
    Exponent lcm = exp_lcm(eng.basis[pk.i].lt.ex, eng.basis[pk.j].lt.ex);
    eng.reduce_pair(pk.i, pk.j, lcm, &syz);
  }

  // Original generators re-expressed through the basis close the gap between
  // Syz(basis) and Syz(gens): rows of (I - V.U).
  int n = eng.n;
  for (int i = 0; i < eng.p; i++) {
    if (gens[i].is_zero()) continue;  // already covered
    ModuleElement pay(eng.p, n);
    pay.c[i] = Poly::constant(n, 1);
    ModuleElement rem = divide_full(gens[i], eng.basis, eng.order, nullptr, &pay);
    if (!rem.is_zero())
      throw std::logic_error("generator failed to reduce against its own basis");
    if (!pay.is_zero()) syz.push_back(std::move(pay));
  }

  return interreduce(std::move(syz), order);
}

std::vector<ModuleElement> express_in(const std::vector<ModuleElement>& rows,
                                      const std::vector<ModuleElement>& gens,
                                      const TermOrder& order) {
  Engine eng = make_engine(gens, order, true);
  eng.complete();
  eng.interreduce_basis();
  std::vector<ModuleElement> out;
  out.reserve(rows.size());
  int n = eng.n;
  for (const auto& r : rows) {
    ModuleElement pay(eng.p, n);
    ModuleElement rem = divide_full(r, eng.basis, eng.order, nullptr, &pay);
    if (!rem.is_zero()) throw std::domain_error("express_in: row not in module");
    // r - rem = -(pay . gens) by the payload invariant, so negate
    out.push_back(me_neg(pay));
  }
  return out;
}

}  // namespace pdcc
