import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meyersig.exact import SignatureTriple, SymmetricForm, kernel_basis, rank, signature


def test_signature_zero_form():
    assert signature([[0] * 3 for _ in range(3)]) == SignatureTriple(0, 0, 3)


def test_signature_diagonal_signs():
    assert signature(SymmetricForm.diagonal([2, -3])) == SignatureTriple(1, 1, 0)
    assert signature(SymmetricForm.diagonal([Fraction(1, 7), -2, 0, 5])) == SignatureTriple(2, 1, 1)


def test_signature_defect_form_example():
    # [[-2c, a-d], [a-d, 2b]] at (a, b, c, d) = (0, 1, -1, 0)
    assert signature([[2, 0], [0, 2]]) == SignatureTriple(2, 0, 0)


def test_signature_hyperbolic_block():
    assert signature([[0, 1], [1, 0]]) == SignatureTriple(1, 1, 0)
    assert signature([[0, 5], [5, 0]]) == SignatureTriple(1, 1, 0)
    # all-zero diagonal, two hyperbolic pairs
    form = [
        [0, 0, 3, 0],
        [0, 0, 0, -2],
        [3, 0, 0, 0],
        [0, -2, 0, 0],
    ]
    assert signature(form) == SignatureTriple(2, 2, 0)


def test_signature_value_and_dim():
    trip = signature(SymmetricForm.diagonal([1, 1, -1, 0]))
    assert trip.value == 1
    assert trip.dim == 4


def test_non_symmetric_rejected():
    with pytest.raises(ValueError, match="not symmetric"):
        signature([[0, 1], [2, 0]])
    with pytest.raises(ValueError, match="not symmetric"):
        SymmetricForm([[1, 2], [3, 4]])


def test_ragged_rejected():
    with pytest.raises(ValueError):
        SymmetricForm([[1, 0], [0]])


def test_empty_form():
    assert signature(SymmetricForm([])) == SignatureTriple(0, 0, 0)


def _random_symmetric(rng, n, bound=6):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = rng.randint(-bound, bound)
    return a


def _random_unimodular(rng, n, steps=12):
    m = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-3, 3)
        for k in range(n):
            m[i][k] += c * m[j][k]
    return m


def test_signature_congruence_invariance():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(1, 5)
        a = _random_symmetric(rng, n)
        p = _random_unimodular(rng, n)
        # P^T A P
        pa = [[sum(p[k][i] * a[k][l] for k in range(n)) for l in range(n)] for i in range(n)]
        pap = [[sum(pa[i][k] * p[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        assert signature(pap) == signature(a)


def test_signature_direct_sum_adds():
    rng = random.Random(23)
    for _ in range(80):
        a = SymmetricForm(_random_symmetric(rng, rng.randint(1, 4)))
        b = SymmetricForm(_random_symmetric(rng, rng.randint(1, 4)))
        sa, sb, sab = signature(a), signature(b), signature(a.direct_sum(b))
        assert sab == SignatureTriple(
            sa.positive + sb.positive, sa.negative + sb.negative, sa.null + sb.null
        )


def test_kernel_basis_examples():
    assert kernel_basis([[1, 0], [0, 1]]) == []
    assert kernel_basis([[0, 0], [0, 0]]) == [(1, 0), (0, 1)]
    assert kernel_basis([[1, 1]]) == [(1, -1)]


def test_kernel_basis_clears_denominators():
    basis = kernel_basis([[Fraction(1, 2), Fraction(1, 3)]])
    assert basis == [(2, -3)]


def test_kernel_basis_no_rows_needs_ncols():
    assert kernel_basis([], ncols=2) == [(1, 0), (0, 1)]
    with pytest.raises(ValueError):
        kernel_basis([])


@settings(max_examples=120, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=5),
        min_size=1,
        max_size=5,
    ).filter(lambda rows: len({len(r) for r in rows}) == 1)
)
def test_kernel_vectors_annihilate_and_count(rows):
    basis = kernel_basis(rows)
    ncols = len(rows[0])
    for vec in basis:
        assert all(sum(r * v for r, v in zip(row, vec)) == 0 for row in rows)
    assert len(basis) == ncols - rank(rows)


def _charpoly(rows):
    """Characteristic polynomial coefficients [1, c_1, ..., c_n] of a square
    matrix, by the Faddeev-LeVerrier recursion over Fractions."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    m = [[Fraction(0)] * n for _ in range(n)]
    coeffs = [Fraction(1)]
    c = Fraction(1)
    for k in range(1, n + 1):
        for i in range(n):
            m[i][i] += c
        m = [
            [sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        c = -sum(m[i][i] for i in range(n)) / k
        coeffs.append(c)
    return coeffs


def _inertia_by_descartes(rows):
    """Independent signature oracle: a symmetric matrix has an all-real
    spectrum, so Descartes' rule counts its positive eigenvalues exactly,
    trailing zero coefficients count the kernel, and the rest are negative."""
    coeffs = _charpoly(rows)
    n = len(rows)
    null = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        null += 1
    nonzero = [c for c in coeffs if c != 0]
    positive = sum(
        1 for x, y in zip(nonzero, nonzero[1:]) if (x > 0) != (y > 0)
    )
    return SignatureTriple(positive, n - positive - null, null)


def test_signature_against_charpoly_oracle():
    rng = random.Random(47)
    for _ in range(200):
        n = rng.randint(1, 5)
        a = _random_symmetric(rng, n)
        assert signature(a) == _inertia_by_descartes(a)


def test_signature_oracle_on_zero_diagonals():
    # forces the hyperbolic 2x2 block step through the same oracle
    rng = random.Random(48)
    for _ in range(200):
        n = rng.randint(2, 5)
        a = _random_symmetric(rng, n)
        for i in range(n):
            a[i][i] = 0
        assert signature(a) == _inertia_by_descartes(a)
