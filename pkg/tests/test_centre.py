import numpy as np
import pytest

from conftest import group
from ginv.automorphisms import (automorphism_group, identity_automorphism, inner_automorphisms,
                                inversion_automorphism, is_double_class_inverting)
from ginv.catalog import build
from ginv.centre import (CentreTooLarge, apply_autoequivalence, centre, centre_character,
                         centre_simples, diagonal_physical, dual_simple,
                         is_permutation_matrix, modular_invariant_matrix, tensor_character)
from ginv.cyclo import Cyclo
from ginv.double_classes import double_classes
from ginv.perm import parse_cycles

CRIT7 = ["C2", "C3", "C6", "S3", "S4", "D4", "Q8", "A4", "F21", "H27"]


def idx(G, text):
    return G.index_of(parse_cycles(text, G.degree))


def test_counts():
    assert len(centre_simples(group("C1"))) == 1
    assert len(centre_simples(group("C2"))) == 4
    assert len(centre_simples(group("S3"))) == 8
    for spec in CRIT7:
        G = group(spec)
        assert centre(G).count == double_classes(G).count


def test_unit_simple():
    G = group("S3")
    unit = centre_simples(G)[0]
    one, zero = Cyclo.from_int(G.exponent, 1), Cyclo.from_int(G.exponent, 0)
    for f in range(G.order):
        for g in range(G.order):
            if G.mul_index(f, g) != G.mul_index(g, f):
                continue
            assert centre_character(G, unit, f, g) == (one if f == 0 else zero)
    assert dual_simple(G, unit) == unit


@pytest.mark.parametrize("spec", ["S3", "D4", "Q8", "A4"])
def test_degrees_at_identity(spec):
    G = group(spec)
    z = centre(G)
    for s in z.simples:
        a = int(z.dclasses.group.classes.reps[s.class_index])
        assert int(centre_character(G, s, a, 0)) == z.tables[s.class_index].degrees[s.irrep_index]
    dims = [int(centre_character(G, s, 0, 0)) for s in z.simples if s.class_index == 0]
    assert sum(d * d for d in dims) == G.order


def test_noncommuting_rejected():
    G = group("S3")
    s = centre_simples(G)[0]
    f, g = idx(G, "(1 2)"), idx(G, "(1 2 3)")
    with pytest.raises(ValueError):
        centre_character(G, s, f, g)
    with pytest.raises(ValueError):
        tensor_character(G, s, s, f, g)


@pytest.mark.parametrize("spec", ["S3", "D4", "Q8", "A4", "S4"])
def test_conjugator_independence(spec):
    G = group(spec)
    z = centre(G)
    cl = G.classes
    for s in z.simples:
        a = int(cl.reps[s.class_index])
        T = z.tables[s.class_index]
        H = z.dclasses.centralizers[s.class_index]
        for f in cl.members(s.class_index).tolist():
            xs = [x for x in range(G.order) if int(G.conj(x, a)) == f]
            assert len(xs) == H.order
            for g in range(G.order):
                if G.mul_index(f, g) != G.mul_index(g, f):
                    continue
                want = centre_character(G, s, f, g)
                for x in xs:
                    h = int(G.conj(G.inv[x], g))
                    local = int(np.searchsorted(H.ambient, h))
                    got = T.value(s.irrep_index, int(H.classes.class_of[local])).lift(z.m)
                    assert got == want


def test_character_vanishes_off_its_class():
    G = group("D4")
    z = centre(G)
    first = z.dclasses.reps[:, 0]
    for s in z.simples:
        off = G.classes.class_of[first] != s.class_index
        assert not z.chars[s.index][off].any()


def test_tensor_unit_and_dimensions():
    G = group("S3")
    z = centre(G)
    unit = z.simples[0]
    for s in z.simples:
        for f, g in z.dclasses.reps.tolist():
            assert tensor_character(G, s, unit, f, g) == centre_character(G, s, f, g)

    def dim(fn):
        return sum(int(fn(f)) for f in range(G.order))

    for s in z.simples:
        if s.class_index == 0:
            assert int(tensor_character(G, s, s, 0, 0)) == int(centre_character(G, s, 0, 0)) ** 2
        for t in z.simples:
            ds = dim(lambda f: centre_character(G, s, f, 0))
            dt = dim(lambda f: centre_character(G, t, f, 0))
            assert dim(lambda f: tensor_character(G, s, t, f, 0)) == ds * dt


def test_tensor_decomposes_on_s3():
    G = group("S3")
    z = centre(G)
    for s in z.simples:
        for t in z.simples:
            vals = np.array([tensor_character(G, s, t, f, g).array
                             for f, g in z.dclasses.reps.tolist()])
            mult = []
            for u in range(z.count):
                c = z.inner_product(vals, z.chars[u])
                assert c.is_rational() and int(c) >= 0
                mult.append(int(c))
            assert np.array_equal(np.tensordot(mult, z.chars, axes=1), vals)


@pytest.mark.parametrize("spec", CRIT7)
def test_independence_and_involution(spec):
    G = group(spec)
    z = centre(G)
    assert np.array_equal(z.gram(), np.eye(z.count, dtype=np.int64))
    d = z.dual_permutation
    assert np.array_equal(d[d], np.arange(z.count))
    inv = z.dclasses.inverse_dclass
    assert np.array_equal(z.chars[d], z.chars[:, inv])


def test_dual_in_c3():
    G = group("C3")
    z = centre(G)
    for s in z.simples:
        t = dual_simple(G, s)
        a = int(G.classes.reps[s.class_index])
        assert int(G.classes.reps[t.class_index]) == int(G.inv[a])
        row_s = z.tables[s.class_index].values[s.irrep_index]
        row_t = z.tables[t.class_index].values[t.irrep_index]
        conj = np.array([Cyclo(3, v).conj().array for v in row_s])
        assert np.array_equal(row_t, conj)


def test_autoequivalence_examples():
    G = group("S4")
    z = centre(G)
    for phi in inner_automorphisms(G):
        assert np.array_equal(z.autoequivalence_permutation(phi), np.arange(z.count))
    C3 = group("C3")
    inv = inversion_automorphism(C3)
    for s in centre_simples(C3):
        assert apply_autoequivalence(C3, inv, s) == dual_simple(C3, s)
        assert apply_autoequivalence(C3, identity_automorphism(C3), s) == s


def test_matrix_examples():
    C3, S3 = group("C3"), group("S3")
    assert np.array_equal(modular_invariant_matrix(C3, inversion_automorphism(C3)), np.eye(9))
    assert np.array_equal(modular_invariant_matrix(S3, identity_automorphism(S3)), np.eye(8))
    M = modular_invariant_matrix(C3, identity_automorphism(C3))
    assert is_permutation_matrix(M) and not np.array_equal(M, np.eye(9))
    # fixed points are exactly the self-dual simples
    z = centre(C3)
    assert np.array_equal(np.diag(M) == 1, z.dual_permutation == np.arange(9))
    assert int(np.trace(M)) == 1


@pytest.mark.parametrize("spec", CRIT7)
def test_theorem_per_automorphism(spec):
    G = group(spec)
    for phi in automorphism_group(G):
        M = modular_invariant_matrix(G, phi)
        assert is_permutation_matrix(M)
        assert np.array_equal(M, np.eye(len(M))) == is_double_class_inverting(G, phi)


def test_verdicts():
    v = diagonal_physical(group("S4"))
    assert v.physical == "yes" and v.witness.is_identity() and v.cross_check is True
    assert diagonal_physical(group("H27")).physical == "no"
    assert diagonal_physical(group("F21")).physical == "no"
    v = diagonal_physical(group("C5"))
    assert v.physical == "yes" and v.cross_check is True and not v.witness.is_identity()
    v = diagonal_physical(group("H27"), budget=3)
    assert v.physical == "unknown" and v.witness is None


def test_verdict_beyond_centre_cap_skips_cross_check():
    v = diagonal_physical(group("S6"))
    assert v.physical == "yes" and v.cross_check is None


def test_centre_cap():
    with pytest.raises(CentreTooLarge):
        centre(group("A6"))
    with pytest.raises(CentreTooLarge):
        centre_simples(group("S4"), cap=20)


def test_is_permutation_matrix():
    assert is_permutation_matrix(np.eye(3, dtype=int))
    assert not is_permutation_matrix(np.ones((2, 2), dtype=int))
    assert not is_permutation_matrix(np.array([[2, 0], [0, 1]]))
    assert not is_permutation_matrix(np.zeros((2, 3), dtype=int))


# A concrete model of the simple object (a, rho): the induced module
# Ind_{C(a)}^G W, graded by the conjugates of a.  W is the rho-isotypic part of
# the regular representation of C(a), which is d copies of rho, so traces come
# out multiplied by the degree d.

def induced_model(G, s):
    z = centre(G)
    cl = G.classes
    a = int(cl.reps[s.class_index])
    H = z.dclasses.centralizers[s.class_index]
    T = z.tables[s.class_index]
    chi = T.to_complex()[s.irrep_index][H.classes.class_of]  # per local element
    n = H.order
    amb = H.ambient

    def local(h):
        return int(np.searchsorted(amb, h))

    def L(h):
        R = np.zeros((n, n))
        for k in range(n):
            R[local(G.mul_index(h, int(amb[k]))), k] = 1
        return R

    d = T.degrees[s.irrep_index]
    P = sum(np.conj(chi[local(int(h))]) * L(int(h)) for h in amb) * d / n
    coset = cl.members(s.class_index).tolist()
    x = {f: int(G.inv[cl.conjugator[f]]) for f in coset}
    for f in coset:
        assert int(G.conj(x[f], a)) == f
    pos = {f: i for i, f in enumerate(coset)}
    dim = len(coset) * n

    def act(g):
        A = np.zeros((dim, dim), dtype=complex)
        for f in coset:
            f2 = int(G.conj(g, f))
            h = G.mul_index(G.mul_index(int(G.inv[x[f2]]), g), x[f])
            i, j = pos[f2], pos[f]
            A[i * n:(i + 1) * n, j * n:(j + 1) * n] = L(h)
        return A

    def grade(f):
        E = np.zeros((dim, dim))
        if f in pos:
            i = pos[f]
            E[i * n:(i + 1) * n, i * n:(i + 1) * n] = np.eye(n)
        return E

    Q = np.kron(np.eye(len(coset)), P)
    return act, grade, Q, d


@pytest.mark.parametrize("spec", ["C3", "S3"])
def test_brute_force_module_traces(spec):
    G = group(spec)
    z = centre(G)
    pairs = [(f, g) for f in range(G.order) for g in range(G.order)
             if G.mul_index(f, g) == G.mul_index(g, f)]
    for s in z.simples:
        act, grade, Q, d = induced_model(G, s)
        for g in range(G.order):
            for h in range(G.order):
                assert np.allclose(act(g) @ act(h), act(G.mul_index(g, h)))
            for f in range(G.order):
                assert np.allclose(act(g) @ grade(f), grade(int(G.conj(g, f))) @ act(g))
        t = dual_simple(G, s)
        for f, g in pairs:
            tr = np.trace(grade(f) @ act(g) @ Q) / d
            assert np.isclose(tr, complex(centre_character(G, s, f, g)))
            # V* in degree f is the dual of V in degree f^-1, with g acting by the
            # transpose of g^-1
            fi, gi = int(G.inv[f]), int(G.inv[g])
            tr_dual = np.trace(grade(fi) @ act(gi).T @ Q.T) / d
            assert np.isclose(tr_dual, complex(centre_character(G, t, f, g)))
