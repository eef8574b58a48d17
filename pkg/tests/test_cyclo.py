import cmath

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ginv.cyclo import Cyclo, cyclotomic_poly, lift_array, nf_mul


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert len(cyclotomic_poly(11)) - 1 == 10


def test_roots_sum_to_zero():
    for m in (2, 3, 5, 6, 8, 12):
        total = sum((Cyclo.root(m, j) for j in range(m)), Cyclo.from_int(m, 0))
        assert total == 0


def test_conjugation_and_reality():
    z = Cyclo.root(3)
    assert z.conj() == Cyclo.root(3, 2)
    assert (z + z.conj()) == -1
    assert not z.is_real()
    assert (z + z.conj()).is_real()
    assert int(z * z.conj()) == 1


def test_mixed_orders_lift():
    assert Cyclo.root(2) == -1
    assert Cyclo.root(4) * Cyclo.root(4) == Cyclo.root(2)
    assert (Cyclo.root(3) * Cyclo.root(4)).m == 12
    assert Cyclo.root(6, 2) == Cyclo.root(3).lift(6)


def test_divexact():
    assert Cyclo(3, [4, 2]).divexact(2) == Cyclo(3, [2, 1])
    with pytest.raises(ArithmeticError):
        Cyclo(3, [3, 2]).divexact(2)


def test_repr():
    assert repr(Cyclo(3, [1, -1])) == "1 - z3"
    assert repr(Cyclo.from_int(5, 0)) == "0"


ms = st.sampled_from([1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 15])


@st.composite
def cyclo(draw, m=None):
    m = draw(ms) if m is None else m
    deg = len(cyclotomic_poly(m)) - 1
    return Cyclo(m, draw(st.lists(st.integers(-5, 5), min_size=deg, max_size=deg)))


@given(ms.flatmap(lambda m: st.tuples(cyclo(m), cyclo(m))))
def test_ring_ops_match_complex(pair):
    a, b = pair
    for got, want in [(a + b, complex(a) + complex(b)), (a * b, complex(a) * complex(b)),
                      (a - b, complex(a) - complex(b)), (a.conj(), complex(a).conjugate())]:
        assert cmath.isclose(complex(got), want, abs_tol=1e-9)


@given(cyclo(), st.sampled_from([1, 2, 3]))
def test_lift_preserves_value(a, k):
    M = a.m * k
    assert cmath.isclose(complex(a.lift(M)), complex(a), abs_tol=1e-9)
    assert np.array_equal(lift_array(a.array[None], a.m, M)[0], a.lift(M).array)


@given(ms.flatmap(lambda m: st.tuples(cyclo(m), cyclo(m))))
def test_nf_mul_matches_scalar(pair):
    a, b = pair
    assert np.array_equal(nf_mul(a.array, b.array, a.m), (a * b).array)
