/* test_diffop.cpp
 *
 * Operator matrices: composition, formal adjoint, generic rank, row
 * trimming, compatibility conditions, JSON round trips.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pdcc/json_io.hpp"
#include "pdcc/opmatrix.hpp"

using namespace pdcc;

static OpMatrix mat(int n, int rows, int cols, std::initializer_list<const char*> entries) {
  OpMatrix A(n, rows, cols);
  REQUIRE(static_cast<int>(entries.size()) == rows * cols);
  auto it = entries.begin();
  for (int r = 0; r < rows; r++)
    for (int c = 0; c < cols; c++) A.entry[r][c] = parse_poly(*it++, n);
  return A;
}

TEST_CASE("compose follows matrix product") {
  int n = 2;
  OpMatrix A = mat(n, 1, 2, {"d1", "d2"});
  OpMatrix B = mat(n, 2, 1, {"d2", "-d1"});
  OpMatrix AB = compose(A, B);
  CHECK(AB.rows == 1);
  CHECK(AB.cols == 1);
  CHECK(AB.entry[0][0].is_zero());
  OpMatrix I = OpMatrix::identity(n, 2);
  CHECK(compose(I, B) == B);
  CHECK(compose(A, I) == A);
}

TEST_CASE("adjoint is an involutive antihomomorphism") {
  int n = 3;
  OpMatrix A = mat(n, 2, 3, {"d1^2 - d3", "2*d2", "0", "d1*d2*d3", "-1/2", "d3^3 + d1"});
  OpMatrix B = mat(n, 3, 2, {"d1", "0", "d2 - 1", "d3", "0", "d1*d2"});
  CHECK(adjoint(adjoint(A)) == A);
  CHECK(adjoint(compose(A, B)) == compose(adjoint(B), adjoint(A)));
  // first-order sign flip
  OpMatrix g = mat(1, 1, 1, {"d1"});
  CHECK(adjoint(g) == mat(1, 1, 1, {"-d1"}));
}

TEST_CASE("op_order") {
  CHECK(op_order(mat(2, 1, 2, {"d1^3", "d2"})) == 3);
  CHECK(op_order(mat(2, 1, 1, {"5"})) == 0);
  CHECK(op_order(OpMatrix(2, 1, 1)) == Poly::kDegZero);
}

TEST_CASE("generic_rank on known matrices") {
  int n = 2;
  SUBCASE("full rank") {
    RankReport r = generic_rank(mat(n, 2, 2, {"d1", "d2", "d2", "d1"}));
    CHECK(r.rank == 2);
    CHECK(r.witness_point.size() == 2);
  }
  SUBCASE("rank deficient") {
    CHECK(generic_rank(mat(n, 2, 2, {"d1", "d2", "d1", "d2"})).rank == 1);
    CHECK(generic_rank(mat(n, 2, 1, {"d1", "d2"})).rank == 1);
    CHECK(generic_rank(OpMatrix(n, 2, 2)).rank == 0);
  }
  SUBCASE("seed stability") {
    OpMatrix A = mat(n, 2, 2, {"d1", "d2", "d2", "d1"});
    CHECK(generic_rank(A, 7).rank == generic_rank(A, 99).rank);
  }
  SUBCASE("degenerate shapes") {
    CHECK(generic_rank(OpMatrix(n, 0, 3)).rank == 0);
    CHECK(generic_rank(OpMatrix(n, 3, 0)).rank == 0);
  }
}

TEST_CASE("trim_rows forward sweep") {
  int n = 2;
  OpMatrix A = mat(n, 3, 1, {"d1", "d1^2", "d2"});
  OpMatrix T = trim_rows(A);
  CHECK(T == mat(n, 2, 1, {"d1", "d2"}));
  // zero rows vanish
  OpMatrix B = mat(n, 3, 2, {"0", "0", "d1", "d2", "d1", "d2"});
  CHECK(trim_rows(B) == mat(n, 1, 2, {"d1", "d2"}));
}

TEST_CASE("compatibility conditions of gradient and curl") {
  int n = 3;
  OpMatrix grad = mat(n, 3, 1, {"d1", "d2", "d3"});
  OpMatrix cc = compatibility_conditions(grad);
  CHECK(cc.cols == 3);
  CHECK(cc.rows == 3);
  CHECK(compose(cc, grad).is_zero());
  // the left kernel of curl is generated by div
  OpMatrix curl = mat(n, 3, 3, {"0", "-d3", "d2", "d3", "0", "-d1", "-d2", "d1", "0"});
  OpMatrix div = compatibility_conditions(curl);
  CHECK(compose(div, curl).is_zero());
  CHECK(module_equal(rows_of(div), rows_of(mat(n, 1, 3, {"d1", "d2", "d3"})), default_order()));
}

TEST_CASE("compatibility conditions edge shapes") {
  int n = 2;
  // zero matrix: every row is a relation
  OpMatrix Z(n, 2, 1);
  OpMatrix cz = compatibility_conditions(Z);
  CHECK(cz == OpMatrix::identity(n, 2));
  // no rows
  OpMatrix E(n, 0, 2);
  OpMatrix ce = compatibility_conditions(E);
  CHECK(ce.rows == 0);
  // injective-with-trivial-kernel column
  OpMatrix g = mat(n, 1, 1, {"d1"});
  CHECK(compatibility_conditions(g).rows == 0);
}

TEST_CASE("json round trip is byte stable") {
  int n = 3;
  OpMatrix A = mat(n, 2, 2,
                   {"d1^2*d3 - 4/3*d2 + 6", "0", "-d2", "1208925819614629174706176*d1 - 1/3"});
  std::string text = opmatrix_to_string(A);
  OpMatrix B = opmatrix_from_string(text);
  CHECK(B == A);
  CHECK(opmatrix_to_string(B) == text);
  // shape sanity in the emitted document
  auto j = nlohmann::json::parse(text);
  CHECK(j["n"] == 3);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 2);
  CHECK(j["entries"].size() == 2);
}

TEST_CASE("json rejects malformed documents") {
  CHECK_THROWS(opmatrix_from_string("{\"n\":2,\"rows\":1,\"cols\":1,\"entries\":[]}"));
  CHECK_THROWS(opmatrix_from_string(
      "{\"n\":2,\"rows\":1,\"cols\":1,\"entries\":[[[[[1,0],[0,0]]]]]}"));
  CHECK_THROWS(opmatrix_from_string(
      "{\"n\":2,\"rows\":1,\"cols\":1,\"entries\":[[[[[1,1],[0]]]]]}"));
}
