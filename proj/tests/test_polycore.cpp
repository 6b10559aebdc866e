/* test_polycore.cpp
 *
 * Exponent and polynomial arithmetic, term orders, parse/print round trips.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pdcc/poly.hpp"

using namespace pdcc;

static Exponent ex(std::initializer_list<int> v) {
  Exponent e(static_cast<int>(v.size()));
  int i = 0;
  for (int x : v) e.set(i++, x);
  return e;
}

TEST_CASE("exponent arithmetic") {
  Exponent a = ex({2, 1, 0});
  Exponent b = ex({1, 1, 3});
  CHECK(exp_mul(a, b) == ex({3, 2, 3}));
  CHECK(exp_mul(a, b).deg == 8);
  CHECK(exp_lcm(a, b) == ex({2, 1, 3}));
  CHECK(exp_divides(a, exp_mul(a, b)));
  CHECK(!exp_divides(b, a));
  CHECK(exp_div(exp_mul(a, b), b) == a);
}

TEST_CASE("degrevlex order") {
  TermOrder ord = TermOrder{MonoOrder::degrevlex, ModuleOrder::pot, nullptr};
  // degree first
  CHECK(compare_monomials(ord, ex({2, 0, 0}), ex({1, 1, 0})) == GT);
  CHECK(compare_monomials(ord, ex({0, 0, 1}), ex({1, 1, 0})) == LT);
  // classic degree-2 chain in 3 vars: d1^2 > d1 d2 > d2^2 > d1 d3 > d2 d3 > d3^2
  Exponent chain[] = {ex({2, 0, 0}), ex({1, 1, 0}), ex({0, 2, 0}),
                      ex({1, 0, 1}), ex({0, 1, 1}), ex({0, 0, 2})};
  for (int i = 0; i < 5; i++) {
    CHECK(compare_monomials(ord, chain[i], chain[i + 1]) == GT);
    CHECK(compare_monomials(ord, chain[i + 1], chain[i]) == LT);
  }
  CHECK(compare_monomials(ord, ex({1, 1, 0}), ex({1, 1, 0})) == EQ);
}

TEST_CASE("lex order") {
  TermOrder ord = TermOrder{MonoOrder::lex, ModuleOrder::pot, nullptr};
  CHECK(compare_monomials(ord, ex({1, 0, 0}), ex({0, 5, 3})) == GT);
  CHECK(compare_monomials(ord, ex({1, 2, 0}), ex({1, 1, 9})) == GT);
  CHECK(compare_monomials(ord, ex({0, 0, 2}), ex({0, 1, 0})) == LT);
}

TEST_CASE("order respects multiplication") {
  TermOrder ord = TermOrder{MonoOrder::degrevlex, ModuleOrder::pot, nullptr};
  Exponent a = ex({1, 1, 0}), b = ex({0, 2, 0}), m = ex({3, 0, 2});
  int c = compare_monomials(ord, a, b);
  CHECK(c == compare_monomials(ord, exp_mul(a, m), exp_mul(b, m)));
}

TEST_CASE("pot module order") {
  TermOrder ord = TermOrder{MonoOrder::degrevlex, ModuleOrder::pot, nullptr};
  // position dominates, higher component wins
  CHECK(compare_module_terms(ord, 1, ex({0, 0}), 0, ex({5, 5})) == GT);
  CHECK(compare_module_terms(ord, 0, ex({5, 5}), 1, ex({0, 0})) == LT);
  // same component falls back to the monomial order
  CHECK(compare_module_terms(ord, 1, ex({2, 0}), 1, ex({1, 0})) == GT);
  CHECK(compare_module_terms(ord, 1, ex({1, 0}), 1, ex({1, 0})) == EQ);
}

TEST_CASE("top module order") {
  TermOrder ord = TermOrder{MonoOrder::degrevlex, ModuleOrder::top, nullptr};
  // monomial dominates, position breaks ties (higher component wins)
  CHECK(compare_module_terms(ord, 0, ex({2, 0}), 1, ex({1, 0})) == GT);
  CHECK(compare_module_terms(ord, 1, ex({1, 0}), 0, ex({1, 0})) == GT);
  CHECK(compare_module_terms(ord, 0, ex({1, 0}), 1, ex({1, 0})) == LT);
}

TEST_CASE("poly arithmetic identities") {
  int n = 3;
  Poly a = parse_poly("d1^2*d2 - 2*d3 + 1/2", n);
  Poly b = parse_poly("d2*d3 + 4", n);
  Poly c = parse_poly("d1 - d2 + 5*d3^2", n);
  CHECK(poly_add(a, b) == poly_add(b, a));
  CHECK(poly_mul(a, b) == poly_mul(b, a));
  CHECK(poly_mul(poly_add(a, b), c) == poly_add(poly_mul(a, c), poly_mul(b, c)));
  CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
  CHECK(poly_sub(a, a).is_zero());
  CHECK(poly_add(a, poly_neg(a)).is_zero());
  CHECK(poly_mul(a, Poly::zero(n)).is_zero());
  CHECK(poly_mul(a, Poly::constant(n, 1)) == a);
}

TEST_CASE("poly_add_scaled matches explicit form") {
  int n = 2;
  Poly a = parse_poly("d1^2 + d2", n);
  Poly b = parse_poly("d1*d2 - 3", n);
  Poly acc = a;
  Exponent mu = ex({1, 1});
  poly_add_scaled(acc, Q(-2, 3), mu, b);
  Poly expect = poly_add(a, poly_mul(Poly::term(n, mu, Q(-2, 3)), b));
  CHECK(acc == expect);
}

TEST_CASE("degree and homogeneity") {
  int n = 2;
  Poly a = parse_poly("d1^3 + d1*d2 - 7", n);
  CHECK(a.degree() == 3);
  CHECK(!a.is_homogeneous());
  CHECK(parse_poly("d1*d2 + d2^2", n).is_homogeneous());
  CHECK(Poly::zero(n).degree() == Poly::kDegZero);
  Poly b = parse_poly("d2^2 - d1", n);
  CHECK(poly_mul(a, b).degree() == 5);
  // graded pieces sum back to the polynomial
  Poly sum = Poly::zero(n);
  for (int d = 0; d <= a.degree(); d++) {
    Poly part = homogeneous_part(a, d);
    CHECK((part.is_zero() || part.is_homogeneous()));
    sum = poly_add(sum, part);
  }
  CHECK(sum == a);
}

TEST_CASE("negate_variables is the adjoint involution on scalars") {
  int n = 3;
  Poly a = parse_poly("d1^2*d3 - 4/3*d2 + 6", n);
  Poly b = parse_poly("d2^3 + d1*d3", n);
  CHECK(negate_variables(negate_variables(a)) == a);
  CHECK(negate_variables(poly_mul(a, b)) == poly_mul(negate_variables(a), negate_variables(b)));
  CHECK(negate_variables(parse_poly("d1", n)) == parse_poly("-d1", n));
  CHECK(negate_variables(parse_poly("d1*d2", n)) == parse_poly("d1*d2", n));
}

TEST_CASE("parse and print round trip") {
  int n = 3;
  const char* samples[] = {
      "0",
      "1",
      "-5/3",
      "d1",
      "d1^2*d2 - 2*d3 + 1/2",
      "-d1*d2*d3 + 4/3*d2^5 - d1 + 17",
      "3*d3^2 - 3*d3 + 3",
  };
  for (const char* s : samples) {
    Poly p = parse_poly(s, n);
    CHECK(parse_poly(to_string(p), n) == p);
  }
  // whitespace and ordering insensitivity
  CHECK(parse_poly(" d2 + d1 ", n) == parse_poly("d1+d2", n));
  CHECK(parse_poly("2*d1 - d1", n) == parse_poly("d1", n));
  CHECK(parse_poly("d1 - d1", n).is_zero());
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS(parse_poly("d4", 3));
  CHECK_THROWS(parse_poly("d0", 3));
  CHECK_THROWS(parse_poly("d1 +", 3));
  CHECK_THROWS(parse_poly("1/0", 3));
  CHECK_THROWS(parse_poly("d1 d2", 3));  // missing '*'
  CHECK_THROWS(parse_poly("(d1)", 3));
}

TEST_CASE("to_string format") {
  int n = 2;
  CHECK(to_string(Poly::zero(n)) == "0");
  CHECK(to_string(parse_poly("d1^2", n)) == "d1^2");
  CHECK(to_string(parse_poly("-d1 + d2", n)) == "-d1 + d2");
  CHECK(to_string(parse_poly("1/2*d1*d2 - 2", n)) == "1/2*d1*d2 - 2");
}
