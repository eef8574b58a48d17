import numpy as np
import pytest

import oracles
from conftest import SMALL, group
from ginv.group import (GroupTooLarge, _PermIndex, centralizer, conjugacy_classes,
                        element_order, generate_group, normalizer)
from ginv.perm import Perm, parse_cycles, parse_perm_list


def elements(G):
    return [G.element(i) for i in range(G.order)]


def test_s3_from_transposition_and_three_cycle():
    G = generate_group(parse_perm_list("(1 2), (1 2 3)"))
    assert G.order == 6
    assert G.element(0).is_identity()


def test_trivial_group():
    G = generate_group([], degree=1)
    assert G.order == 1
    assert conjugacy_classes(G).count == 1


def test_cap_names_the_cap():
    with pytest.raises(GroupTooLarge, match="120"):
        generate_group(parse_perm_list("(1 2), (1 2 3 4 5 6)"), max_order=120)


def test_mixed_degrees_rejected():
    with pytest.raises(ValueError):
        generate_group([parse_cycles("(1 2)"), parse_cycles("(1 2 3)")])


def test_false_relator_rejected():
    with pytest.raises(ValueError, match="does not hold"):
        generate_group(parse_perm_list("(1 2 3)"), presentation=["aa"])


def test_deterministic_order():
    a = generate_group(parse_perm_list("(1 2), (1 2 3 4 5)"))
    b = generate_group(parse_perm_list("(1 2), (1 2 3 4 5)"))
    assert np.array_equal(a.perms, b.perms)


@pytest.mark.parametrize("spec", SMALL)
def test_multiplication_matches_perms(spec):
    G = group(spec)
    rng = np.random.default_rng(1)
    a, b = rng.integers(0, G.order, 50), rng.integers(0, G.order, 50)
    prod = G.mul(a, b)
    for x, y, z in zip(a, b, prod):
        assert G.element(x) * G.element(y) == G.element(z)
    assert np.array_equal(G.mul(np.arange(G.order), G.inv), np.zeros(G.order))


def test_mul_without_table_matches_table():
    G = group("S5")
    H = generate_group(G.generators, table_cap=10)
    assert H.table is None and G.table is not None
    x = np.arange(G.order)
    assert np.array_equal(H.mul(x[:, None], x[None, :40]), G.mul(x[:, None], x[None, :40]))


def test_hash_index_agrees_with_dense(monkeypatch):
    G = group("A5")
    monkeypatch.setattr(_PermIndex, "DENSE_LIMIT", 1)
    idx = _PermIndex(G.perms)
    assert idx.base is None
    assert np.array_equal(idx.find(G.perms), np.arange(G.order))
    with pytest.raises(KeyError):
        idx.find(np.array([[1, 0, 2, 3, 4]], dtype=G.perms.dtype))
    with pytest.raises(KeyError):
        G.index_of(Perm.from_cycles([[0, 1]], 5))


def test_s3_classes():
    cl = conjugacy_classes(group("S3"))
    assert cl.count == 3
    assert sorted(cl.sizes.tolist()) == [1, 2, 3]


def test_s5_classes_match_partitions():
    assert conjugacy_classes(group("S5")).count == 7


@pytest.mark.parametrize("spec", SMALL)
def test_classes_against_brute_force(spec):
    G = group(spec)
    cl = G.classes
    ref = oracles.classes(elements(G))
    assert cl.count == len(ref)
    assert sorted(cl.sizes.tolist()) == sorted(len(c) for c in ref)
    for c in ref:
        idx = [G.index_of(x) for x in c]
        assert len(set(cl.class_of[idx])) == 1
        assert cl.reps[cl.class_of[idx[0]]] == min(idx)
    assert cl.sizes.sum() == G.order
    assert np.array_equal(cl.inverse_class[cl.inverse_class], np.arange(cl.count))
    assert np.array_equal(cl.inverse_class[cl.class_of], cl.class_of[G.inv])
    # conjugator really conjugates onto the representative
    x = np.arange(G.order)
    assert np.array_equal(G.conj(cl.conjugator, x), cl.reps[cl.class_of])


@pytest.mark.parametrize("spec", ["S3", "S4", "Q8", "A4", "H27"])
def test_centralizers(spec):
    G = group(spec)
    cl = G.classes
    elems = elements(G)
    for g in range(G.order):
        C = centralizer(G, g)
        assert C.order == oracles.centralizer_order(elems, G.element(g))
        assert cl.sizes[cl.class_of[g]] * C.order == G.order
        assert np.all(np.diff(C.ambient) > 0)
        assert np.array_equal(C.perms, G.perms[C.ambient])


def test_centralizer_examples():
    S3 = group("S3")
    assert centralizer(S3, 0).order == 6
    assert centralizer(S3, S3.index_of(parse_cycles("(1 2 3)"))).order == 3
    S5 = group("S5")
    assert centralizer(S5, S5.index_of(parse_cycles("(1 2)(3 4)", 5))).order == 8


def test_element_order():
    S3 = group("S3")
    assert element_order(S3, 0) == 1
    assert element_order(S3, S3.index_of(parse_cycles("(1 2 3)"))) == 3
    M = group("M11")
    eleven = np.flatnonzero(M.orders == 11)
    assert len(eleven) == 1440
    assert all(element_order(M, int(g)) == 11 for g in eleven[:5])


def test_normalizer_of_sylow():
    A5 = group("A5")
    g = A5.index_of(parse_cycles("(1 2 3 4 5)"))
    P = [int(A5.power(g, k)) for k in range(5)]
    assert normalizer(A5, P).order == 10
