#include "pdcc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pdcc {

Exponent::Exponent(int n_) : n(n_) {
  if (n_ < 0 || n_ > kMaxVars)
    throw std::invalid_argument("Exponent: dimension out of range (0..8)");
}

Exponent Exponent::unit(int n, int i) {
  Exponent ex(n);
  ex.set(i, 1);
  return ex;
}

void Exponent::set(int i, int v) {
  if (i < 0 || i >= n) throw std::out_of_range("Exponent::set index");
  if (v < 0 || v > 255) throw std::invalid_argument("Exponent::set value out of range");
  deg += v - e[i];
  e[i] = static_cast<std::uint8_t>(v);
}

bool Exponent::operator==(const Exponent& o) const {
  return n == o.n && deg == o.deg && e == o.e;
}

Exponent exp_mul(const Exponent& a, const Exponent& b) {
  Exponent r(a.n);
  for (int i = 0; i < a.n; i++) {
    int v = a.e[i] + b.e[i];
    if (v > 255) throw std::overflow_error("exponent overflow");
    r.e[i] = static_cast<std::uint8_t>(v);
  }
  r.deg = a.deg + b.deg;
  return r;
}

Exponent exp_div(const Exponent& a, const Exponent& b) {
  Exponent r(a.n);
  for (int i = 0; i < a.n; i++) {
    if (a.e[i] < b.e[i]) throw std::domain_error("exp_div: not divisible");
    r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  }
  r.deg = a.deg - b.deg;
  return r;
}

Exponent exp_lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.n);
  int d = 0;
  for (int i = 0; i < a.n; i++) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

bool exp_divides(const Exponent& a, const Exponent& b) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < a.n; i++)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

int compare_monomials(const TermOrder& order, const Exponent& a, const Exponent& b) {
  if (order.kind == MonoOrder::degrevlex) {
    if (a.deg != b.deg) return a.deg > b.deg ? GT : LT;
    // tie: last differing exponent, smaller one wins
    for (int i = a.n - 1; i >= 0; i--)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? GT : LT;
    return EQ;
  }
  for (int i = 0; i < a.n; i++)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? GT : LT;
  return EQ;
}

int compare_module_terms(const TermOrder& order, int pos_a, const Exponent& a,
                         int pos_b, const Exponent& b) {
  switch (order.module_extension) {
    case ModuleOrder::pot:
      // lower row index is smaller
      if (pos_a != pos_b) return pos_a > pos_b ? GT : LT;
      return compare_monomials(order, a, b);
    case ModuleOrder::top: {
      int c = compare_monomials(order, a, b);
      if (c != EQ) return c;
      if (pos_a != pos_b) return pos_a > pos_b ? GT : LT;
      return EQ;
    }
    case ModuleOrder::schreyer: {
      const auto& leads = order.schreyer->leads;
      TermOrder base{order.schreyer->base, ModuleOrder::pot, nullptr};
      const auto& [ca, ea] = leads.at(pos_a);
      const auto& [cb, eb] = leads.at(pos_b);
      // compare lead(a * g_{pos_a}) vs lead(b * g_{pos_b}) in the base order
      if (ca != cb) return ca > cb ? GT : LT;
      int c = compare_monomials(base, exp_mul(a, ea), exp_mul(b, eb));
      if (c != EQ) return c;
      if (pos_a != pos_b) return pos_a > pos_b ? GT : LT;
      return EQ;
    }
  }
  return EQ;
}

namespace {
// canonical storage comparison: degrevlex, descending
const TermOrder kCanonical{MonoOrder::degrevlex, ModuleOrder::pot, nullptr};
inline bool canon_greater(const Exponent& a, const Exponent& b) {
  return compare_monomials(kCanonical, a, b) == GT;
}
}  // namespace

int Poly::degree() const {
  if (terms.empty()) return kDegZero;
  int d = 0;
  for (const auto& [ex, c] : terms) d = std::max(d, ex.deg);
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& [ex, c] : terms)
    if (ex.deg != terms.front().first.deg) return false;
  return true;
}

bool Poly::is_constant() const {
  return terms.empty() || (terms.size() == 1 && terms[0].first.deg == 0);
}

Poly Poly::zero(int n) { return Poly(n); }

Poly Poly::constant(int n, const Q& c) {
  Poly p(n);
  if (c != 0) p.terms.emplace_back(Exponent(n), c);
  return p;
}

Poly Poly::variable(int n, int i, int power) {
  Exponent ex(n);
  ex.set(i, power);
  return term(n, ex, 1);
}

Poly Poly::term(int n, const Exponent& ex, const Q& c) {
  Poly p(n);
  if (c != 0) p.terms.emplace_back(ex, c);
  return p;
}

namespace {
void check_same_n(const Poly& a, const Poly& b) {
  if (a.n != b.n) throw std::invalid_argument("polynomial dimension mismatch");
}
}  // namespace

Poly poly_add(const Poly& a, const Poly& b) {
  check_same_n(a, b);
  Poly r(a.n);
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = compare_monomials(kCanonical, a.terms[i].first, b.terms[j].first);
    if (c == GT) {
      r.terms.push_back(a.terms[i++]);
    } else if (c == LT) {
      r.terms.push_back(b.terms[j++]);
    } else {
      Q s = a.terms[i].second + b.terms[j].second;
      if (s != 0) r.terms.emplace_back(a.terms[i].first, std::move(s));
      i++, j++;
    }
  }
  for (; i < a.terms.size(); i++) r.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); j++) r.terms.push_back(b.terms[j]);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_neg(const Poly& a) {
  Poly r = a;
  for (auto& [ex, c] : r.terms) c = -c;
  return r;
}

Poly poly_scale(const Poly& a, const Q& c) {
  if (c == 0) return Poly::zero(a.n);
  Poly r = a;
  for (auto& [ex, co] : r.terms) co *= c;
  return r;
}

void poly_add_scaled(Poly& a, const Q& c, const Exponent& mu, const Poly& b) {
  if (c == 0 || b.is_zero()) return;
  Poly shifted(b.n);
  shifted.terms.reserve(b.terms.size());
  for (const auto& [ex, co] : b.terms)
    shifted.terms.emplace_back(exp_mul(ex, mu), co * c);
  a = poly_add(a, shifted);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  check_same_n(a, b);
  std::map<Exponent, Q, bool (*)(const Exponent&, const Exponent&)> acc(canon_greater);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      auto [it, fresh] = acc.try_emplace(exp_mul(ea, eb), 0);
      it->second += ca * cb;
    }
  Poly r(a.n);
  for (auto& [ex, c] : acc)
    if (c != 0) r.terms.emplace_back(ex, std::move(c));
  return r;
}

Poly negate_variables(const Poly& p) {
  Poly r = p;
  for (auto& [ex, c] : r.terms)
    if (ex.deg % 2 != 0) c = -c;
  return r;
}

Poly homogeneous_part(const Poly& p, int deg) {
  Poly r(p.n);
  for (const auto& [ex, c] : p.terms)
    if (ex.deg == deg) r.terms.emplace_back(ex, c);
  return r;
}

Q poly_eval(const Poly& p, const std::vector<Q>& point) {
  if (static_cast<int>(point.size()) != p.n)
    throw std::invalid_argument("poly_eval point dimension mismatch");
  Q acc(0);
  for (const auto& [ex, c] : p.terms) {
    Q t = c;
    for (int i = 0; i < p.n; i++)
      for (int k = 0; k < ex.e[i]; k++) t *= point[i];
    acc += t;
  }
  return acc;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.n == b.n && a.terms == b.terms;
}

std::size_t leading_index(const Poly& p, const TermOrder& order) {
  if (p.is_zero()) throw std::domain_error("leading_index of zero polynomial");
  if (order.kind == MonoOrder::degrevlex) return 0;  // storage order
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.terms.size(); i++)
    if (compare_monomials(order, p.terms[i].first, p.terms[best].first) == GT) best = i;
  return best;
}

std::string to_string(const Q& c) { return c.get_str(); }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ex, c] : p.terms) {
    Q a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1) && ex.deg > 0;
    if (!unit) os << a.get_str();
    bool star = !unit;
    for (int i = 0; i < ex.n; i++) {
      if (ex.e[i] == 0) continue;
      if (star) os << "*";
      os << "d" << (i + 1);
      if (ex.e[i] > 1) os << "^" << int(ex.e[i]);
      star = true;
    }
  }
  return os.str();
}

namespace {
struct Parser {
  const std::string& s;
  int n;
  std::size_t pos = 0;

  void skip() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }

  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }

  bool eat(char c) {
    if (peek(c)) { pos++; return true; }
    return false;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
    if (pos == start) fail("expected integer");
    return mpz_class(s.substr(start, pos - start));
  }

  // factor := rational | d<i> [^k]
  Poly factor() {
    skip();
    if (pos >= s.size()) fail("expected factor");
    if (s[pos] == 'd') {
      pos++;
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected variable index");
      int idx = s[pos] - '0';
      pos++;
      if (idx < 1 || idx > n) fail("variable index out of range");
      int power = 1;
      if (eat('^')) {
        mpz_class p = integer();
        if (p < 0 || p > 255) fail("exponent out of range");
        power = static_cast<int>(p.get_si());
      }
      return Poly::variable(n, idx - 1, power);
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (eat('/')) den = integer();
      if (den == 0) fail("zero denominator");
      Q c(num, den);
      c.canonicalize();
      return Poly::constant(n, c);
    }
    fail("expected coefficient or variable");
  }

  // term := factor (* factor)*
  Poly term() {
    Poly r = factor();
    while (eat('*')) r = poly_mul(r, factor());
    return r;
  }

  Poly expr() {
    Poly r = Poly::zero(n);
    bool neg = false;
    skip();
    if (eat('-')) neg = true;
    else eat('+');
    while (true) {
      Poly t = term();
      r = neg ? poly_sub(r, t) : poly_add(r, t);
      skip();
      if (eat('-')) neg = true;
      else if (eat('+')) neg = false;
      else break;
    }
    skip();
    if (pos != s.size()) fail("trailing input");
    return r;
  }
};
}  // namespace

Poly parse_poly(const std::string& text, int n) {
  if (n < 0 || n > Exponent::kMaxVars)
    throw std::invalid_argument("parse_poly: dimension out of range (0..8)");
  Parser p{text, n};
  p.skip();
  if (p.pos == text.size()) return Poly::zero(n);  // empty input reads as 0
  return p.expr();
}

}  // namespace pdcc
