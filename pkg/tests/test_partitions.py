from itertools import product
from math import comb

import pytest

from fsquadric.partitions import (
    EMPTY,
    Partition,
    conjugate,
    drop_first,
    enumerate_B,
    enumerate_C,
    prepend,
    star,
)


def brute_box(p, q):
    """Every weakly decreasing p-tuple over 0..q, trailing zeros stripped."""
    out = set()
    for t in product(range(q + 1), repeat=p):
        if all(a >= b for a, b in zip(t, t[1:])):
            out.add(tuple(v for v in t if v))
    return out


def brute_conjugate(lam):
    # transpose of the Ferrers diagram as a set of cells
    cells = {(i, j) for i, row in enumerate(lam) for j in range(row)}
    cols = {}
    for i, j in cells:
        cols[j] = cols.get(j, 0) + 1
    return tuple(cols[j] for j in sorted(cols))


def test_partition_identification():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition(()) == EMPTY == Partition((0,))
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((1, -1))


def test_enumerate_B_examples():
    assert enumerate_B(1, 1) == [EMPTY, Partition((1,))]
    assert enumerate_B(2, 2) == [Partition(t) for t in [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]]
    assert enumerate_B(0, 5) == [EMPTY]


@pytest.mark.parametrize("p", range(0, 9))
@pytest.mark.parametrize("q", range(0, 9))
def test_enumerate_B_count(p, q):
    got = enumerate_B(p, q)
    assert len(got) == comb(p + q, p)
    assert len(set(got)) == len(got)
    assert all(lam.fits(p, q) for lam in got)


@pytest.mark.parametrize("p", range(0, 7))
@pytest.mark.parametrize("q", range(0, 7))
def test_enumerate_B_against_brute_force(p, q):
    assert {tuple(lam) for lam in enumerate_B(p, q)} == brute_box(p, q)


def test_enumerate_C_examples():
    assert enumerate_C(2, 1) == [Partition((1,)), Partition((1, 1))]
    assert enumerate_C(1, 0) == [EMPTY]
    assert enumerate_C(0, 3) == []
    assert enumerate_C(0, 0) == []


@pytest.mark.parametrize("p, q", [(p, q) for p in range(1, 7) for q in range(0, 7)])
def test_enumerate_C_is_filter(p, q):
    expected = {t for t in brute_box(p, q) if (t[0] if t else 0) == q}
    assert {tuple(lam) for lam in enumerate_C(p, q)} == expected


def test_conjugate_examples():
    assert conjugate((3, 1)) == Partition((2, 1, 1))
    assert conjugate(()) == EMPTY
    assert conjugate((2, 2)) == Partition((2, 2))


def test_conjugate_matches_diagram_transpose_and_is_involution():
    for p in range(0, 9):
        for lam in enumerate_B(p, 8 - p if p < 8 else 1):
            assert tuple(conjugate(lam)) == brute_conjugate(lam)
            assert conjugate(conjugate(lam)) == lam


def test_star_examples():
    assert star((1,), 2, 1) == Partition((1,))
    assert star((1, 1), 2, 1) == EMPTY
    assert star((2,), 1, 2) == EMPTY
    assert star((), 4, 0) == EMPTY
    with pytest.raises(ValueError):
        star((3,), 2, 2)


@pytest.mark.parametrize("p", range(0, 7))
@pytest.mark.parametrize("q", range(0, 7))
def test_star_lands_in_transposed_box_and_is_bijective(p, q):
    images = [star(lam, p, q) for lam in enumerate_B(p, q)]
    assert all(mu.fits(q, p) for mu in images)
    assert len(set(images)) == len(images) == comb(p + q, p)


def test_drop_first_examples():
    assert drop_first((1, 1)) == Partition((1,))
    assert drop_first((1,)) == EMPTY
    for q in range(4):
        for eta in enumerate_B(2, q):
            assert drop_first(prepend(eta, q)) == eta


@pytest.mark.parametrize("p", range(1, 7))
@pytest.mark.parametrize("q", range(0, 7))
def test_drop_first_lemma(p, q):
    """xi -> xi[1] maps C(p,q) onto B(p-1,q) bijectively and commutes with star."""
    C = enumerate_C(p, q)
    images = [drop_first(xi) for xi in C]
    assert sorted(images) == sorted(enumerate_B(p - 1, q))
    assert len(set(images)) == len(C)
    for xi, eta in zip(C, images):
        assert star(eta, p - 1, q) == star(xi, p, q)


@pytest.mark.parametrize("p, q", [(p, q) for p in range(7) for q in range(7) if p + q])
def test_star_complement_lemma(p, q):
    """lam -> lam*_{q,p} maps C(q,p) onto B(p,q) minus C(p,q), inverse mu -> mu*_{p,q}."""
    source = enumerate_C(q, p)
    target = set(enumerate_B(p, q)) - set(enumerate_C(p, q))
    images = [star(lam, q, p) for lam in source]
    assert set(images) == target and len(images) == len(target)
    for lam, mu in zip(source, images):
        assert star(mu, p, q) == lam
