/* acceptance_test.cpp
 *
 * Twelve go/no-go checks, one pass/fail line each, nonzero exit when any
 * fails. Optional arguments select a subset by number. All equalities are
 * exact; the printed budgets are the agreed per-criterion ceilings.
 */
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "pdcc/duality.hpp"
#include "pdcc/groebner.hpp"
#include "pdcc/json_io.hpp"
#include "pdcc/resolution.hpp"
#include "pdcc/spencer.hpp"
#include "pdcc/systems.hpp"
#include "pdcc/verify.hpp"

#ifndef PDCC_FIXTURES_DIR
#define PDCC_FIXTURES_DIR "data/fixtures"
#endif

using namespace pdcc;

namespace {

int g_failed = 0;

void note(std::string& notes, const std::string& what) {
  notes += notes.empty() ? what : ", " + what;
}

bool check(bool cond, const std::string& what, std::string& notes) {
  if (!cond) note(notes, what);
  return cond;
}

OpMatrix fix(const std::string& name) {
  return load_opmatrix(std::string(PDCC_FIXTURES_DIR) + "/" + name + ".json");
}

OpMatrix conformal(int n) {
  return conformal_killing_operator(n == 4 ? minkowski_metric(4)
                                           : euclidean_metric(n));
}

void criterion(int num, const std::string& label, const std::string& budget,
               const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string notes;
  try {
    notes = body();
  } catch (const std::exception& e) {
    notes = std::string("exception: ") + e.what();
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = notes.empty();
  if (!pass) g_failed++;
  std::printf("[%2d] %s  %-58s %8.2f s  (budget %s)\n", num,
              pass ? "PASS" : "FAIL", label.c_str(), dt, budget.c_str());
  if (!pass) std::printf("     %s\n", notes.c_str());
  std::fflush(stdout);
}

std::string junction(const std::string& from, const std::string& to,
                     const TermOrder& ord) {
  std::string notes;
  check(module_equal(syzygies(rows_of(fix(from)), ord), rows_of(fix(to)), ord),
        "syz(" + from + ") != <" + to + ">", notes);
  return notes;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; i++) only.insert(std::atoi(argv[i]));
  auto wanted = [&](int k) { return only.empty() || only.count(k); };
  TermOrder ord = default_order();

  if (wanted(1))
    criterion(1, "conformal n=2: full row rank, resolution 0->D2->D2->M->0", "1 s", [&] {
      std::string notes;
      OpMatrix r2 = trim_rows(conformal(2));
      check(r2.rows == 2, "trim_rows(W2) row count", notes);
      check(syzygies(rows_of(r2), ord).empty(), "syzygies not empty", notes);
      FreeResolution res = resolve(conformal(2), true);
      check(res.betti == std::vector<int>{2, 2}, "betti", notes);
      check(res.steps.size() == 1, "length", notes);
      return notes;
    });

  if (wanted(2))
    criterion(2, "conformal n=3: Betti [3,5,5,3], orders [1,3,1], S3/T3 modules", "30 s", [&] {
      std::string notes;
      FreeResolution res = resolve(conformal(3), true);
      check(res.betti == std::vector<int>{3, 5, 5, 3}, "betti", notes);
      check(res.orders == std::vector<int>{1, 3, 1}, "orders", notes);
      check(module_equal(rows_of(res.steps[1]), rows_of(fix("S3")), ord),
            "step 2 module != <S3>", notes);
      notes += junction("S3", "T3", ord);
      return notes;
    });

  if (wanted(3))
    criterion(3, "conformal n=4 (Minkowski): [4,9,10,9,4], S4/S4p/T4/U4, chi 0", "5 min", [&] {
      std::string notes;
      FreeResolution res = resolve(conformal(4), true);
      check(res.betti == std::vector<int>{4, 9, 10, 9, 4}, "betti", notes);
      check(res.orders == std::vector<int>{1, 2, 2, 1}, "orders", notes);
      check(euler_characteristic(res) == 0, "chi", notes);
      check(module_equal(rows_of(res.steps[1]), rows_of(fix("S4")), ord),
            "step 2 module != <S4>", notes);
      check(module_equal(rows_of(res.steps[1]), rows_of(fix("S4p")), ord),
            "step 2 module != <S4p>", notes);
      notes += junction("S4", "T4", ord);
      notes += junction("T4", "U4", ord);
      return notes;
    });

  if (wanted(4))
    criterion(4, "conformal n=5: [5,14,35,35,14,5], S5/T5/U5/V5, chi 0", "30 min", [&] {
      std::string notes;
      FreeResolution res = resolve(conformal(5), true);
      check(res.betti == std::vector<int>{5, 14, 35, 35, 14, 5}, "betti", notes);
      check(res.orders == std::vector<int>{1, 2, 1, 2, 1}, "orders", notes);
      check(euler_characteristic(res) == 0, "chi", notes);
      check(module_equal(rows_of(res.steps[1]), rows_of(fix("S5")), ord),
            "step 2 module != <S5>", notes);
      notes += junction("S5", "T5", ord);
      notes += junction("T5", "U5", ord);
      notes += junction("U5", "V5", ord);
      return notes;
    });

  if (wanted(5))
    criterion(5, "Killing n=2: single order-2 Airy compatibility condition", "1 s", [&] {
      std::string notes;
      OpMatrix cc = compatibility_conditions(killing_operator(euclidean_metric(2)));
      check(cc.rows == 1, "row count", notes);
      check(op_order(cc) == 2, "order", notes);
      OpMatrix airy(2, 1, 3);
      airy.entry[0][0] = parse_poly("d2^2", 2);
      airy.entry[0][1] = parse_poly("-2*d1*d2", 2);
      airy.entry[0][2] = parse_poly("d1^2", 2);
      check(module_equal(rows_of(cc), rows_of(airy), ord), "Airy module", notes);
      return notes;
    });

  if (wanted(6))
    criterion(6, "Killing n=3,4: Riemann/Bianchi ranks (6,3), (20,20), orders 2,1", "10 min", [&] {
      std::string notes;
      for (int n : {3, 4}) {
        DimensionFormulas f = dimension_formulas(n);
        FreeResolution res = resolve(killing_operator(euclidean_metric(n)), true);
        std::string tag = "n=" + std::to_string(n) + " ";
        check(res.betti.size() >= 4, tag + "length", notes);
        check(res.betti[2] == f.riemann_dim, tag + "Riemann rank", notes);
        check(res.betti[3] == f.riemann_bianchi_dim, tag + "Bianchi rank", notes);
        check(res.orders[1] == 2, tag + "Riemann order", notes);
        check(res.orders[2] == 1, tag + "Bianchi order", notes);
      }
      return notes;
    });

  if (wanted(7))
    criterion(7, "cohomology tables for g1 and ghat1 across n=2..5", "2 min", [&] {
      std::string notes;
      auto g1 = [](int n) {
        return symbol_of(killing_operator(euclidean_metric(n)), 1);
      };
      auto gh1 = [&](int n) { return symbol_of(conformal(n), 1); };
      check(cohomology(g1(2), 2, 0).dim_H == 1, "H2(g1) n=2", notes);
      check(cohomology(g1(3), 2, 0).dim_H == 6, "H2(g1) n=3", notes);
      check(cohomology(g1(4), 2, 0).dim_H == 20, "H2(g1) n=4", notes);
      check(cohomology(g1(3), 3, 0).dim_H == 3, "H3(g1) n=3", notes);
      check(cohomology(g1(4), 3, 0).dim_H == 20, "H3(g1) n=4", notes);
      check(cohomology(gh1(4), 2, 0).dim_H == 10, "H2(ghat1) n=4", notes);
      int h2_5 = cohomology(gh1(5), 2, 0).dim_H;
      check(h2_5 == 35 && h2_5 == dimension_formulas(5).weyl_dim, "H2(ghat1) n=5", notes);
      check(cohomology(gh1(4), 3, 0).dim_H == 0, "H3(ghat1) n=4", notes);
      check(cohomology(gh1(5), 3, 0).dim_H == 35, "H3(ghat1) n=5", notes);
      check(cohomology(gh1(5), 4, 0).dim_H == 0, "H4(ghat1) n=5", notes);
      return notes;
    });

  if (wanted(8))
    criterion(8, "ghat2 acyclicity: 2-acyclic iff n>=4, 3-acyclic iff n>=5", "1 min", [&] {
      std::string notes;
      auto gh2 = [&](int n) { return prolong_system(symbol_of(conformal(n), 1), 1); };
      check(!is_s_acyclic(gh2(3), 2, 3), "n=3 s=2", notes);
      check(is_s_acyclic(gh2(4), 2, 3), "n=4 s=2", notes);
      check(is_s_acyclic(gh2(5), 2, 3), "n=5 s=2", notes);
      check(!is_s_acyclic(gh2(4), 3, 3), "n=4 s=3", notes);
      check(is_s_acyclic(gh2(5), 3, 3), "n=5 s=3", notes);
      return notes;
    });

  if (wanted(9))
    criterion(9, "example_3_9: 3x3 delta isomorphism, chain 1,3,3,1 of orders 2", "5 s", [&] {
      std::string notes;
      OpMatrix op = builtin_system({SystemName::example_3_9, std::nullopt, 0});
      SymbolSystem s = symbol_of(op, 2);
      check(prolong(s, 1).dim == 1, "dim g3", notes);
      check(prolong(s, 2).dim == 0, "g4 = 0", notes);
      DeltaMap mid = delta_map(s, 2, 0);
      check(mid.matrix.rows == 3 && mid.matrix.cols == 3, "delta shape", notes);
      check(qm_rank(mid.matrix) == 3, "delta rank", notes);
      FreeResolution res = resolve(op, true);
      check(res.betti == std::vector<int>{1, 3, 3, 1}, "betti", notes);
      check(res.orders == std::vector<int>{2, 2, 2}, "orders", notes);
      check(euler_characteristic(res) == 0, "chi", notes);
      return notes;
    });

  if (wanted(10))
    criterion(10, "example_3_13: characters (2,0,0), Janet ranks 1,4,4,1, chi 0", "5 s", [&] {
      std::string notes;
      OpMatrix inv = builtin_system({SystemName::example_3_13_involutive, std::nullopt, 0});
      SymbolSystem s = symbol_of(inv, 2);
      JanetBoard b = janet_board(s);
      check(b.involutive, "involutive", notes);
      check(b.alpha == std::vector<int>{2, 0, 0}, "characters", notes);
      std::vector<int> seq = janet_sequence(s, b);
      check(seq == std::vector<int>{1, 4, 4, 1}, "Janet ranks", notes);
      int chi = 0, sign = 1;
      for (int v : seq) chi += sign * v, sign = -sign;
      check(chi == 0, "chi", notes);
      return notes;
    });

  if (wanted(11))
    criterion(11, "duality: 4.15 torsion witness, Airy parametrization, junctions", "30 min", [&] {
      std::string notes;
      OpMatrix e415 = builtin_system({SystemName::example_4_15, std::nullopt, 0});
      DualityReport d = double_duality_test(e415);
      check(!d.exact, "4.15 exactness", notes);
      check(!d.parametrization.has_value(), "4.15 parametrization", notes);
      check(d.torsion_witnesses.size() == 1, "4.15 witness count", notes);
      AdjointSequenceReport a = adjoint_sequence(resolve(e415, true));
      OpMatrix nuprime(2, 1, 2);
      nuprime.entry[0][0] = parse_poly("d1", 2);
      nuprime.entry[0][1] = parse_poly("d2", 2);
      check(a.exact.size() == 1 && !a.exact[0], "nu' junction", notes);
      check(a.witnesses.size() == 1 &&
                module_equal(a.witnesses[0], rows_of(nuprime), ord),
            "nu' witness module", notes);

      OpMatrix cauchy(2, 2, 3);
      cauchy.entry[0][0] = parse_poly("d1", 2);
      cauchy.entry[0][1] = parse_poly("d2", 2);
      cauchy.entry[1][1] = parse_poly("d1", 2);
      cauchy.entry[1][2] = parse_poly("d2", 2);
      DualityReport airy = double_duality_test(cauchy);
      check(airy.exact, "Airy exactness", notes);
      check(airy.parametrization.has_value() &&
                compose(cauchy, *airy.parametrization).is_zero(),
            "Airy composition", notes);

      for (int n = 2; n <= 5; n++) {
        if (!adjoint_sequence(resolve(killing_operator(euclidean_metric(n)), true)).all_exact)
          note(notes, "Killing n=" + std::to_string(n) + " junction");
        if (!adjoint_sequence(resolve(conformal(n), true)).all_exact)
          note(notes, "conformal n=" + std::to_string(n) + " junction");
      }
      return notes;
    });

  if (wanted(12))
    criterion(12, "seed-pinned property suites: ad, delta^2, lengths, ranks, orders", "5 min", [&] {
      std::string notes;
      VerifyReport rep = run_suite("formulas", VerifyOptions{});
      int seen = 0;
      for (const ClaimResult& c : rep.claims)
        if (c.id.rfind("properties/", 0) == 0) {
          seen++;
          check(c.status == "pass", c.id, notes);
        }
      check(seen == 4, "property claim count", notes);
      return notes;
    });

  std::printf("%s: %d criterion(s) failed\n", g_failed ? "FAIL" : "OK", g_failed);
  return g_failed ? 1 : 0;
}
