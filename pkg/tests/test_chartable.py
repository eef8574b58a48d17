import numpy as np
import pytest

from conftest import SMALL, group
from ginv.automorphisms import is_ambivalent
from ginv.chartable import (CharacterTableError, all_characters_real, character_table,
                            class_mult_coefficients, dixon_prime)
from ginv.cyclo import conj_matrix, nf_mul
from ginv.group import generate_group
from ginv.perm import parse_cycles


def test_c2():
    T = character_table(group("C2"))
    assert [[int(v) for v in row] for row in T.chars] == [[1, 1], [1, -1]]


def test_s3():
    T = character_table(group("S3"))
    assert T.degrees == (1, 1, 2)
    assert [[int(v) for v in row] for row in T.chars] == [[1, 1, 1], [1, -1, 1], [2, 0, -1]]


def test_q8_all_real():
    T = character_table(group("Q8"))
    assert T.degrees == (1, 1, 1, 1, 2)
    assert all_characters_real(group("Q8"), T)


def test_reality_examples():
    assert all_characters_real(group("S4"))
    assert not all_characters_real(group("C3"))


def test_trivial_group():
    T = character_table(generate_group([], degree=1))
    assert T.degrees == (1,)
    assert class_mult_coefficients(generate_group([], degree=1))[0, 0, 0] == 1


def test_class_mult_s3_transpositions():
    G = group("S3")
    cl = G.classes
    t = cl.class_of[G.index_of(parse_cycles("(1 2)"))]
    a = class_mult_coefficients(G)
    assert a[t, t, cl.class_of[0]] == 3


@pytest.mark.parametrize("spec", SMALL + ["S5", "A6"])
def test_class_mult_counting_identity(spec):
    G = group(spec)
    a = class_mult_coefficients(G)
    s = G.classes.sizes
    assert np.array_equal(np.einsum("ijk,k->ij", a, s), np.outer(s, s))


def orthogonality(G, T):
    """Exact row and column orthogonality over Z[zeta_m]."""
    m, V = T.m, T.values
    C = V @ conj_matrix(m)
    sizes = G.classes.sizes
    r = T.count
    prod = nf_mul(V[:, None, :, :], C[None, :, :, :], m)  # (i, j, c, deg)
    rows = np.einsum("ijck,c->ijk", prod, sizes)
    cols = nf_mul(V[:, :, None, :], C[:, None, :, :], m).sum(axis=0)  # (c, c', deg)
    want_rows = np.zeros_like(rows)
    want_rows[np.arange(r), np.arange(r), 0] = G.order
    want_cols = np.zeros_like(cols)
    want_cols[np.arange(r), np.arange(r), 0] = G.order // sizes
    return np.array_equal(rows, want_rows), np.array_equal(cols, want_cols)


@pytest.mark.parametrize("spec", SMALL + ["S5", "D4", "A6"])
def test_orthogonality_and_inverse_classes(spec):
    G = group(spec)
    T = character_table(G)
    assert sum(d * d for d in T.degrees) == G.order
    assert T.count == G.classes.count
    assert orthogonality(G, T) == (True, True)
    inv = G.classes.inverse_class
    assert np.array_equal(T.values[:, inv], T.conj_values())
    assert all_characters_real(G, T) == is_ambivalent(G)
    assert T.degrees == tuple(sorted(T.degrees))
    assert all(int(v) == 1 for v in T.chars[0])


def test_m11_has_nonreal_characters():
    G = group("M11")
    T = character_table(G)
    assert T.degrees == (1, 10, 10, 10, 11, 16, 16, 44, 45, 55)
    assert not all_characters_real(G, T)


def test_prime_choice():
    p = dixon_prime(7920, 1320)
    assert p % 1320 == 1 and p > 2 * 7920 ** 0.5 and 7920 % p
    with pytest.raises(CharacterTableError, match="bound 100"):
        dixon_prime(7920, 1320, bound=100)


def test_prime_bound_propagates():
    with pytest.raises(CharacterTableError):
        character_table(group("S4"), prime_bound=20)


def test_complex_values_are_unitary_rows():
    G = group("A4")
    X = character_table(G).to_complex()
    gram = (X * G.classes.sizes) @ X.conj().T / G.order
    assert np.allclose(gram, np.eye(len(X)))
