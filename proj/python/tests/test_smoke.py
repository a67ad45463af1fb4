import pytest

import cyclicpow as cp


def test_ghost_is_z4():
    els = cp.witt_elements(2)
    assert len(els) == 4
    g = {u: cp.witt_ghost(2, u) for u in els}
    assert sorted(g.values()) == [0, 1, 2, 3]
    for u in els:
        for v in els:
            assert g[cp.witt_add(2, 1, u, v)] == (g[u] + g[v]) % 4
            assert g[cp.witt_mul(2, 1, u, v)] == (g[u] * g[v]) % 4


def test_examples():
    assert cp.witt_ghost(2, (0, 1)) == 2
    assert cp.witt_ghost(2, (1, 1)) == 3


def test_cyclic_power_of_a_line():
    out = cp.compute("cyclic", {"ring": {"p": 2}, "terms": {"0": 1}})
    assert out["homology"] == {"0": [1], "1": [1]}
    assert out["quasiexact"]


def test_splitting_of_f2_is_z4():
    out = cp.compute("splitting", {"ring": {"p": 2}, "terms": {"0": 1}})
    assert out["order"] == 4
    add = out["add"]
    orders = []
    for g in range(4):
        x, k = g, 1
        while x != 0:
            x, k = add[x][g], k + 1
        orders.append(k)
    assert 4 in orders


def test_tate_of_acyclic():
    out = cp.compute("tate", {"ring": {"p": 3}, "terms": {"0": 1, "1": 1}, "diff": {"1": [[1]]}})
    assert out["homology"] == {}


def test_bad_input():
    with pytest.raises(ValueError, match="/diff/1"):
        cp.compute("tate", {"ring": {"p": 2}, "terms": {"0": 1, "1": 1}, "diff": {"1": [[1, 0]]}})


def test_verify_witt():
    rep = cp.verify(["witt"], seed=1)
    assert rep["failed"] == 0
    assert rep["cases"] > 0


def test_verify_is_deterministic():
    a = cp.verify(["dg"], seed=7, sizes=4, ring="z9")
    b = cp.verify(["dg"], seed=7, sizes=4, ring="z9")
    assert a == b and a["failed"] == 0
