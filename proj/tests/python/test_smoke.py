import os
from pathlib import Path

import pytest

import leavitt

DATA = Path(os.environ.get("LEAVITT_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return leavitt.Quiver.load(str(DATA / "quivers" / f"{name}.quiver"))


def test_quiver_accessors():
    q = load("two_loop")
    assert q.vertices == ["1"]
    assert [a[0] for a in q.arrows] == ["a1", "a2"]
    assert q.special("1") == "a1"
    assert len(q.digest()) == 16


def test_reduce_and_degrees():
    q = load("two_loop")
    assert leavitt.reduce(q, "a1* . a1") == "e(1) - a2* . a2"
    assert leavitt.degrees(q, "a1 + a2* + e(1)") == {-1: "a2*", 0: "e(1)", 1: "a1"}
    assert leavitt.reduce(q, "3 a1", field="Fp:3") == "0"


def test_differential_golden():
    q = load("two_loop")
    out = leavitt.differential(q, "G(a1) zeta(a1 ; e(1))")
    assert out == "1 * E(1) zeta(e(1) ; e(1)) - 1 * E(1) zeta(a2 ; a2)"
    faulty = leavitt.differential(q, "G(a1) zeta(a1 ; e(1))", fault="drop-sum")
    assert faulty == "1 * E(1) zeta(e(1) ; e(1))"


def test_basis_one_loop():
    q = load("one_loop")
    for l in range(-4, 5):
        pairs = [x for n in range(0, 9) for x in leavitt.basis(q, "1", l, n)]
        assert len(pairs) == 1
        assert leavitt.witness(q, "1", l) == pairs[0]


def test_action():
    q = load("two_loop")
    assert leavitt.act(q, "E(1) zeta(e(1) ; e(1))", "a2* . a1") == "1 * E(1) zeta(a2 ; a1)"


def test_verify_small():
    q = load("two_cycle")
    records = leavitt.verify(q, nmax=3, lmin=-2, lmax=2, roundtrip_bound=2, trials=2)
    assert records and all(r["passed"] for r in records)
    bad = leavitt.verify(load("two_loop"), suite="complex", nmax=3, lmin=-1, lmax=1, fault="flip-hat-sign")
    assert any(not r["passed"] and r["counterexample"] for r in bad)


def test_errors():
    q = load("two_loop")
    with pytest.raises(ValueError):
        leavitt.reduce(q, "a3")
    with pytest.raises(ValueError):
        leavitt.Quiver.parse("vertices: 1 2\narrow a: 1 -> 2\n")
    with pytest.raises(ValueError):
        leavitt.verify(q, suite="nope")
