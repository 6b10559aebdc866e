/* test_resolution.cpp
 *
 * Free resolutions: Betti numbers and step orders for the named systems,
 * graded minimization, exactness certificates, fault detection.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pdcc/resolution.hpp"
#include "pdcc/systems.hpp"

using namespace pdcc;

static Poly pp(const std::string& text, int n) { return parse_poly(text, n); }

static Metric metric_for(int n) {
  return n == 4 ? minkowski_metric(4) : euclidean_metric(n);
}

TEST_CASE("conformal n=2 has no compatibility conditions") {
  FreeResolution r = resolve(conformal_killing_operator(euclidean_metric(2)), true);
  CHECK(r.betti == std::vector<int>{2, 2});
  CHECK(r.orders == std::vector<int>{1});
  CHECK(r.minimized);
  CHECK(verify_chain(r, default_order()).pass);
}

TEST_CASE("gradient resolves as the Koszul complex") {
  FreeResolution r = resolve(builtin_system({SystemName::gradient, std::nullopt, 3}), true);
  CHECK(r.betti == std::vector<int>{1, 3, 3, 1});
  CHECK(r.orders == std::vector<int>{1, 1, 1});
  CHECK(euler_characteristic(r) == 0);
  certify(r, default_order());
  CHECK(verify_chain(r, default_order()).pass);
}

TEST_CASE("killing n=2: single order-2 compatibility condition") {
  FreeResolution r = resolve(killing_operator(euclidean_metric(2)), true);
  REQUIRE(r.betti == std::vector<int>{2, 3, 1});
  CHECK(r.orders == std::vector<int>{1, 2});
  const OpMatrix& cc = r.steps[1];
  OpMatrix riemann(2, 1, 3);
  riemann.entry[0][0] = pp("d2^2", 2);
  riemann.entry[0][1] = pp("-2*d1*d2", 2);
  riemann.entry[0][2] = pp("d1^2", 2);
  CHECK(module_equal(rows_of(cc), rows_of(riemann), default_order()));
  CHECK(compose(cc, r.steps[0]).is_zero());
}

TEST_CASE("killing n=3: Riemann then Bianchi") {
  FreeResolution r = resolve(killing_operator(euclidean_metric(3)), true);
  CHECK(r.betti == std::vector<int>{3, 6, 6, 3});
  CHECK(r.orders == std::vector<int>{1, 2, 1});
  CHECK(r.minimized);
  CHECK(euler_characteristic(r) == 0);
  CHECK(verify_chain(r, default_order()).pass);
}

TEST_CASE("conformal n=3: third-order Weyl-type conditions") {
  FreeResolution r = resolve(conformal_killing_operator(euclidean_metric(3)), true);
  CHECK(r.betti == std::vector<int>{3, 5, 5, 3});
  CHECK(r.orders == std::vector<int>{1, 3, 1});
  CHECK(r.minimized);
  CHECK(euler_characteristic(r) == 0);
  certify(r, default_order());
  CHECK(verify_chain(r, default_order()).pass);
}

TEST_CASE("killing n=4: twenty Riemann and twenty first-order Bianchi rows") {
  FreeResolution r = resolve(killing_operator(minkowski_metric(4)), true);
  CHECK(r.betti == std::vector<int>{4, 10, 20, 20, 6});
  CHECK(r.orders == std::vector<int>{1, 2, 1, 1});
  CHECK(r.minimized);
  CHECK(euler_characteristic(r) == 0);
}

TEST_CASE("conformal n=4: second-order Weyl, second-order Bianchi") {
  FreeResolution r = resolve(conformal_killing_operator(minkowski_metric(4)), true);
  CHECK(r.betti == std::vector<int>{4, 9, 10, 9, 4});
  CHECK(r.orders == std::vector<int>{1, 2, 2, 1});
  CHECK(r.minimized);
  CHECK(euler_characteristic(r) == 0);
}

TEST_CASE("conformal n=5: first-order Bianchi pattern returns") {
  FreeResolution r = resolve(conformal_killing_operator(euclidean_metric(5)), true);
  CHECK(r.betti == std::vector<int>{5, 14, 35, 35, 14, 5});
  CHECK(r.orders == std::vector<int>{1, 2, 1, 2, 1});
  CHECK(r.minimized);
  CHECK(euler_characteristic(r) == 0);
}

TEST_CASE("example 3.9 resolves through the triple of commutators") {
  OpMatrix op = builtin_system({SystemName::example_3_9, std::nullopt, 0});
  FreeResolution r = resolve(op, true);
  REQUIRE(r.betti == std::vector<int>{1, 3, 3, 1});
  CHECK(r.orders == std::vector<int>{2, 2, 2});
  CHECK(euler_characteristic(r) == 0);
  OpMatrix cc = builtin_system({SystemName::triple_cc_3_14, std::nullopt, 0});
  CHECK(module_equal(rows_of(r.steps[1]), rows_of(cc), default_order()));
  CHECK(verify_chain(r, default_order()).pass);
}

TEST_CASE("example 3.13 resolves but skips graded minimization") {
  OpMatrix op = builtin_system({SystemName::example_3_13, std::nullopt, 0});
  FreeResolution r = resolve(op, true);
  CHECK_FALSE(r.minimized);
  REQUIRE_FALSE(r.warnings.empty());
  CHECK(r.betti == std::vector<int>{1, 2, 1});
  CHECK(r.orders == std::vector<int>{2, 2});
  CHECK(euler_characteristic(r) == 0);
  CHECK(verify_chain(r, default_order()).pass);
}

TEST_CASE("truncation honors the requested cap") {
  FreeResolution r = resolve(builtin_system({SystemName::gradient, std::nullopt, 3}), true, 1);
  CHECK(r.steps.size() == 1);
  CHECK(r.betti == std::vector<int>{1, 3});
  REQUIRE_FALSE(r.warnings.empty());
  CHECK(r.warnings.back() == "resolution truncated at max length");
}

TEST_CASE("minimize_step removes constant pivots") {
  // a presentation with a redundant generator: rows d1, d2, d1 + d2.
  OpMatrix a(2, 3, 1);
  a.entry[0][0] = pp("d1", 2);
  a.entry[1][0] = pp("d2", 2);
  a.entry[2][0] = pp("d1 + d2", 2);
  auto syz1 = syzygies(rows_of(a), default_order());
  OpMatrix s1 = from_rows(syz1, 2, 3);
  bool has_constant = false;
  for (int i = 0; i < s1.rows; i++)
    for (int j = 0; j < s1.cols; j++)
      if (!s1.entry[i][j].is_zero() && s1.entry[i][j].degree() == 0)
        has_constant = true;
  REQUIRE(has_constant);
  auto syz2 = syzygies(rows_of(s1), default_order());
  OpMatrix s2 = from_rows(syz2, 2, s1.rows);

  SUBCASE("with the following step") {
    MinimizeStepResult m = minimize_step(a, s1, s2);
    REQUIRE(m.minimized);
    CHECK(m.prev.rows == 2);
    CHECK(m.step.rows == s1.rows - 1);
    CHECK(compose(m.step, m.prev).is_zero());
    if (m.next) CHECK(compose(*m.next, m.step).is_zero());
    CHECK(module_equal(rows_of(m.prev), rows_of(a), default_order()));
    CHECK(module_equal(syzygies(rows_of(m.prev), default_order()),
                       rows_of(m.step), default_order()));
  }
  SUBCASE("without a following step") {
    MinimizeStepResult m = minimize_step(a, s1, std::nullopt);
    CHECK(m.minimized);
    CHECK(m.prev.rows == 2);
    CHECK_FALSE(m.next.has_value());
  }
  SUBCASE("agrees with the greedy minimal resolution") {
    FreeResolution r = resolve(a, true);
    MinimizeStepResult m = minimize_step(a, s1, s2);
    CHECK(r.betti[1] == m.prev.rows);
    CHECK(r.betti[2] == m.step.rows);
  }
}

TEST_CASE("minimize_step input validation") {
  OpMatrix a(2, 2, 1);
  a.entry[0][0] = pp("d1", 2);
  a.entry[1][0] = pp("d2", 2);
  OpMatrix bad(2, 1, 3);  // wrong shape
  CHECK_THROWS_AS(minimize_step(a, bad, std::nullopt), std::invalid_argument);
  OpMatrix nonsyz(2, 1, 2);
  nonsyz.entry[0][0] = pp("d1", 2);
  nonsyz.entry[0][1] = pp("d1", 2);
  CHECK_THROWS_AS(minimize_step(a, nonsyz, std::nullopt), std::invalid_argument);

  // non-homogeneous chains are refused, not mangled.
  OpMatrix nh(2, 2, 1);
  nh.entry[0][0] = pp("d1 + 1", 2);
  nh.entry[1][0] = pp("d2*d1 + d2", 2);
  OpMatrix nhs(2, 1, 2);
  nhs.entry[0][0] = pp("d2", 2);
  nhs.entry[0][1] = pp("-1", 2);
  REQUIRE(compose(nhs, nh).is_zero());
  MinimizeStepResult m = minimize_step(nh, nhs, std::nullopt);
  CHECK_FALSE(m.minimized);
  CHECK(m.step.rows == 1);
}

TEST_CASE("certificates detect a corrupted chain") {
  FreeResolution r = resolve(builtin_system({SystemName::gradient, std::nullopt, 3}), true);
  certify(r, default_order());
  CHECK(verify_chain(r, default_order()).pass);

  // drop the final step: compositions still hold, exactness is lost.
  FreeResolution broken = r;
  broken.certificates.clear();
  broken.steps.pop_back();
  ChainReport rep = verify_chain(broken, default_order());
  CHECK_FALSE(rep.pass);
  CHECK(rep.junctions[0].composition_zero);
  CHECK_FALSE(rep.junctions.back().exact);
  CHECK_THROWS_AS(certify(broken, default_order()), std::domain_error);

  // swap one generator for a non-kernel row: composition itself fails.
  FreeResolution wrong = r;
  wrong.certificates.clear();
  wrong.steps[1].entry[0][0] = pp("d3", 3);
  CHECK_FALSE(verify_chain(wrong, default_order()).pass);
}
