from math import factorial

import numpy as np
import pytest

from conftest import group
from ginv.catalog import GroupSpec, build, parse_spec, sylow_count
from ginv.group import GroupTooLarge, normalizer


@pytest.mark.parametrize("text, order", [
    ("S1", 1), ("S4", 24), ("S6", 720), ("A1", 1), ("A2", 1), ("A3", 3), ("A7", 2520),
    ("C1", 1), ("C12", 12), ("Ab[2,4,3]", 24), ("Ab[1]", 1), ("D1", 2), ("D2", 4), ("D4", 8),
    ("D7", 14), ("Q8", 8), ("M11", 7920), ("H27", 27), ("H125", 125), ("F21", 21),
    ("perm: (1 2 3)(4 5), (1 2)", 12),
])
def test_orders(text, order):
    assert build(text).order == order


@pytest.mark.parametrize("n", range(1, 8))
def test_symmetric_and_alternating(n):
    assert build(f"S{n}").order == factorial(n)
    assert build(f"A{n}").order == max(factorial(n) // 2, 1)


def test_presentations_hold_and_are_attached():
    for text in ["S5", "A6", "C5", "Ab[2,3]", "D4", "Q8", "M11", "H27", "F21"]:
        G = build(text)
        assert G.presentation
        for rel in G.presentation:
            assert int(G.evaluate(rel, list(G.gen_indices))) == 0
    assert build("perm: (1 2)").presentation is None


def test_spec_round_trip():
    for text in ["S5", "A6", "C12", "Ab[2,4,3]", "D4", "Q8", "M11", "H27", "F21",
                 "perm: (1 2 3)(4 5), (1 2)"]:
        assert str(parse_spec(text)) == text
    assert parse_spec("m11") == GroupSpec("mathieu11")
    assert parse_spec(" ab[ 2, 2 ] ") == GroupSpec("abelian", (2, 2))


@pytest.mark.parametrize("bad", ["X3", "S0", "H8", "H64", "Ab[]", "perm: (1 1)", "S", ""])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_spec(bad)


def test_invalid_params():
    with pytest.raises(ValueError):
        GroupSpec("heisenberg", (2,))
    with pytest.raises(ValueError):
        GroupSpec("cyclic", (0,))


def test_deterministic():
    assert np.array_equal(build("M11").perms, build("M11").perms)


def test_heisenberg_nonabelian_odd():
    G = group("H27")
    assert not G.is_abelian
    assert G.order % 2
    assert G.exponent == 3
    assert len(G.center) == 3


def test_frobenius_nonabelian():
    G = group("F21")
    assert not G.is_abelian and G.degree == 7


def test_m11():
    G = group("M11")
    assert G.order == 7920 == 2**4 * 3**2 * 5 * 11
    assert sylow_count(G, 11) == 144
    x = int(np.flatnonzero(G.orders == 11)[0])
    P = [int(G.power(x, k)) for k in range(11)]
    assert normalizer(G, P).order == 55 == G.order // 144


def test_sylow_examples():
    assert sylow_count(group("S3"), 3) == 1
    assert sylow_count(group("A5"), 5) == 6
    with pytest.raises(ValueError):
        sylow_count(group("S4"), 2)
    with pytest.raises(ValueError):
        sylow_count(group("S3"), 5)


def test_cap():
    with pytest.raises(GroupTooLarge):
        build("A8")
