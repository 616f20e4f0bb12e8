"""Exact rational linear algebra: signatures of symmetric forms and kernels.

All arithmetic runs over :class:`fractions.Fraction` (arbitrary precision,
always in lowest terms), so results are exact; no floating point appears
anywhere in this package.  The signature routine performs symmetric
Gaussian congruence reduction: it diagonalizes by simultaneous row and
column operations, using a hyperbolic 2x2 block step when every diagonal
entry of the active block vanishes.  This avoids eigenvalues entirely,
which is what makes an exact answer possible.
"""

import math
from fractions import Fraction
from typing import NamedTuple, Sequence

Rational = int | Fraction


class SignatureTriple(NamedTuple):
    """Inertia of a symmetric form: counts of +, -, and zero diagonal entries
    after congruence diagonalization."""

    positive: int
    negative: int
    null: int

    @property
    def value(self) -> int:
        """The signature: positive count minus negative count."""
        return self.positive - self.negative

    @property
    def dim(self) -> int:
        return self.positive + self.negative + self.null


class SymmetricForm:
    """A square rational matrix validated to be exactly symmetric."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence[Rational]]):
        rows = tuple(tuple(Fraction(e) for e in row) for row in entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries in a {n}x{n} form")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(
                        f"not symmetric: entry ({i},{j})={rows[i][j]} != ({j},{i})={rows[j][i]}"
                    )
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SymmetricForm is immutable")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def diagonal(cls, values: Sequence[Rational]) -> "SymmetricForm":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def direct_sum(self, other: "SymmetricForm") -> "SymmetricForm":
        n, m = self.dim, other.dim
        rows = [list(row) + [Fraction(0)] * m for row in self.entries]
        rows += [[Fraction(0)] * n + list(row) for row in other.entries]
        return SymmetricForm(rows)

    def __eq__(self, other):
        return isinstance(other, SymmetricForm) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"SymmetricForm({[list(r) for r in self.entries]!r})"


def signature(form: SymmetricForm | Sequence[Sequence[Rational]]) -> SignatureTriple:
    """Inertia (p, q, z) of a symmetric rational form by exact congruence.

    Each step either clears a nonzero diagonal pivot (contributing one +1
    or -1 according to its sign) or, when the active block has an all-zero
    diagonal, clears a hyperbolic block [[0,b],[b,0]] contributing (1,1).
    Congruence transformations preserve inertia, so the tally is the
    signature decomposition of the input.
    """
    if not isinstance(form, SymmetricForm):
        form = SymmetricForm(form)
    n = form.dim
    a = [list(row) for row in form.entries]
    pos = neg = 0
    i = 0
    while i < n:
        k = next((k for k in range(i, n) if a[k][k] != 0), None)
        if k is not None:
            _sym_swap(a, i, k)
            d = a[i][i]
            if d > 0:
                pos += 1
            else:
                neg += 1
            coeff = [a[r][i] / d for r in range(i + 1, n)]
            for r in range(i + 1, n):
                fr = coeff[r - i - 1]
                if fr == 0:
                    continue
                for s in range(r, n):
                    fs = coeff[s - i - 1]
                    if fs != 0:
                        val = a[r][s] - fr * fs * d
                        a[r][s] = val
                        a[s][r] = val
                a[r][i] = a[i][r] = Fraction(0)
            i += 1
            continue
        off = next(
            ((k, l) for k in range(i, n) for l in range(k + 1, n) if a[k][l] != 0),
            None,
        )
        if off is None:
            break  # active block is zero; the rest is radical
        k, l = off
        _sym_swap(a, i, k)
        _sym_swap(a, i + 1, l)  # l > k >= i, so l lands past the first pivot
        b = a[i][i + 1]
        pos += 1
        neg += 1
        us = [a[r][i] for r in range(i + 2, n)]
        vs = [a[r][i + 1] for r in range(i + 2, n)]
        for r in range(i + 2, n):
            ur, vr = us[r - i - 2], vs[r - i - 2]
            for s in range(r, n):
                uss, vss = us[s - i - 2], vs[s - i - 2]
                val = a[r][s] - (ur * vss + vr * uss) / b
                a[r][s] = val
                a[s][r] = val
            a[r][i] = a[i][r] = Fraction(0)
            a[r][i + 1] = a[i + 1][r] = Fraction(0)
        i += 2
    return SignatureTriple(pos, neg, n - pos - neg)


def _sym_swap(a, i, k):
    if i == k:
        return
    a[i], a[k] = a[k], a[i]
    for row in a:
        row[i], row[k] = row[k], row[i]


def kernel_basis(
    rows: Sequence[Sequence[Rational]], ncols: int | None = None
) -> list[tuple[int, ...]]:
    """Basis of the right kernel {v : Mv = 0} as primitive integer vectors.

    The kernel is computed by exact reduced row echelon form; each basis
    vector is scaled by the lcm of its denominators and divided by the gcd
    of its entries, with the first nonzero entry made positive, so the
    output is deterministic.  Returns [] when the kernel is trivial.
    """
    mat = [[Fraction(e) for e in row] for row in rows]
    if mat:
        width = len(mat[0])
        if any(len(row) != width for row in mat):
            raise ValueError("ragged matrix")
        if ncols is not None and ncols != width:
            raise ValueError(f"ncols={ncols} but rows have {width} entries")
    else:
        if ncols is None:
            raise ValueError("ncols is required for a matrix with no rows")
        width = ncols
    reduced, pivots = _rref(mat, width)
    free = [j for j in range(width) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * width
        vec[f] = Fraction(1)
        for r, p in enumerate(pivots):
            vec[p] = -reduced[r][f]
        basis.append(_primitive(vec))
    return basis


def rank(rows: Sequence[Sequence[Rational]]) -> int:
    mat = [[Fraction(e) for e in row] for row in rows]
    if not mat:
        return 0
    _, pivots = _rref(mat, len(mat[0]))
    return len(pivots)


def _rref(mat: list[list[Fraction]], width: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pivot_row = next((k for k in range(r, len(mat)) if mat[k][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [e * inv for e in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][c] != 0:
                factor = mat[k][c]
                mat[k] = [e - factor * p for e, p in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def _primitive(vec: list[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with positive leading entry."""
    scale = math.lcm(*(e.denominator for e in vec))
    ints = [int(e * scale) for e in vec]
    content = math.gcd(*ints)
    if content:
        ints = [e // content for e in ints]
    lead = next((e for e in ints if e != 0), 0)
    if lead < 0:
        ints = [-e for e in ints]
    return tuple(ints)
