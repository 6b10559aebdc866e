"""Smoke tests for the python bindings: construction, compatibility
conditions, resolutions, cohomology, Janet boards and duality."""

import json

import pdcc


def test_airy_compatibility_condition():
    k2 = pdcc.builtin_system("killing", dim=2)
    assert (k2.rows, k2.cols, k2.n) == (3, 2, 2)
    cc = pdcc.compatibility_conditions(k2)
    assert (cc.rows, cc.cols) == (1, 3)
    assert pdcc.op_order(cc) == 2

    airy = pdcc.OpMatrix(2, 1, 3)
    airy.set_entry(0, 0, "d2^2")
    airy.set_entry(0, 1, "-2*d1*d2")
    airy.set_entry(0, 2, "d1^2")
    assert pdcc.same_row_module(cc, airy)


def test_resolution_and_adjoint():
    k3 = pdcc.builtin_system("killing", dim=3)
    res = pdcc.resolve(k3)
    assert res.betti == [3, 6, 6, 3]
    assert res.orders == [1, 2, 1]
    assert pdcc.euler_characteristic(res) == 0
    assert pdcc.verify_chain(res).pass_

    assert pdcc.adjoint(pdcc.adjoint(k3)) == k3
    assert pdcc.compose(res.steps[1], res.steps[0]).is_zero()


def test_json_round_trip():
    op = pdcc.builtin_system("example-3-9")
    text = op.to_json()
    back = pdcc.OpMatrix.from_json(text)
    assert back == op
    assert json.loads(text)["rows"] == 3


def test_spencer_cohomology_and_janet():
    g1 = pdcc.symbol_of(pdcc.builtin_system("killing", dim=3))
    assert (g1.n, g1.m, g1.q) == (3, 3, 1)
    assert pdcc.cohomology(g1, 2, 0).dim_H == 6
    assert pdcc.cohomology(g1, 3, 0).dim_H == 3

    sym = pdcc.symbol_of(pdcc.builtin_system("example-3-13-involutive"))
    board = pdcc.janet_board(sym)
    assert board.involutive
    assert board.alpha == [2, 0, 0]
    assert pdcc.janet_sequence(sym, board) == [1, 4, 4, 1]
    assert pdcc.dim_prediction(sym, board, 1) == 2


def test_duality_torsion_and_parametrization():
    torsion = pdcc.double_duality_test(pdcc.builtin_system("example-4-15"))
    assert not torsion.exact
    assert torsion.parametrization is None
    assert len(torsion.torsion_witnesses) == 1

    seq = pdcc.adjoint_sequence(pdcc.resolve(pdcc.builtin_system("killing", dim=2)))
    assert seq.all_exact
    assert seq.exact == [True]


def test_dimension_formulas_and_rank():
    f = pdcc.dimension_formulas(4)
    assert f.riemann_dim == 20
    assert f.riemann_bianchi_dim == 20
    assert pdcc.generic_rank(pdcc.builtin_system("killing", dim=3)).rank == 3


def test_verify_formulas_suite():
    report = pdcc.run_suite("formulas")
    assert report.ok()
    assert report.failed == 0
    assert any(c.id.startswith("properties/") for c in report.claims)
