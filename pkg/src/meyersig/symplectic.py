"""Integer symplectic matrices Sp(2g;Z) and transvections.

Coordinates on first homology use the symplectic basis
A_1, ..., A_g, B_1, ..., B_g, in that order, so the intersection pairing
is <u, v> = u^T J v with J = [[0, I_g], [-I_g, 0]] and <A_i, B_i> = +1.
A homology class is simply a length-2g tuple of ints in this basis.

One global convention is frozen here: the right-handed Dehn twist along a
curve of class v acts on homology as x |-> x + TWIST_SIGN * <v, x> * v.
With TWIST_SIGN = +1 the twists along A_1 and B_1 at genus 1 map to
[[1,1],[0,1]] and [[1,0],[-1,1]], which is the normalization every shipped
data file and every twist-value identity in this package is validated
against.  Flipping the constant would invert all twists.
"""

import random
from typing import Sequence

from .matrix import IntMatrix

# Right-handed twist convention; see module docstring before touching this.
TWIST_SIGN = 1

_J_CACHE: dict[int, IntMatrix] = {}


def standard_j(g: int) -> IntMatrix:
    """The standard symplectic form J = [[0, I_g], [-I_g, 0]]."""
    if g < 1:
        raise ValueError(f"genus must be positive, got {g}")
    if g not in _J_CACHE:
        n = 2 * g
        rows = [[0] * n for _ in range(n)]
        for i in range(g):
            rows[i][g + i] = 1
            rows[g + i][i] = -1
        _J_CACHE[g] = IntMatrix(rows)
    return _J_CACHE[g]


def symplectic_pairing(u: Sequence[int], v: Sequence[int]) -> int:
    """<u, v> = u^T J v = sum_i (u_Ai * v_Bi - u_Bi * v_Ai)."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise ValueError(f"vector lengths differ: {len(u)} vs {len(v)}")
    if len(u) % 2 or not u:
        raise ValueError(f"homology classes have even positive length, got {len(u)}")
    g = len(u) // 2
    return sum(u[i] * v[g + i] - u[g + i] * v[i] for i in range(g))


def is_symplectic(entries, g: int) -> bool:
    """Whether the 2g x 2g integer matrix satisfies A^T J A = J exactly."""
    m = entries if isinstance(entries, IntMatrix) else IntMatrix(entries)
    n = 2 * g
    if m.nrows != n or m.ncols != n:
        raise ValueError(f"expected a {n}x{n} matrix, got {m.nrows}x{m.ncols}")
    j = standard_j(g)
    return m.transpose() * j * m == j


class SymplecticMatrix:
    """An element of Sp(2g;Z); the defining identity is checked on construction."""

    __slots__ = ("g", "mat")

    def __init__(self, entries, g: int | None = None):
        mat = entries if isinstance(entries, IntMatrix) else IntMatrix(entries)
        if not mat.is_square() or mat.nrows % 2:
            raise ValueError(f"symplectic matrices are 2g x 2g, got {mat.nrows}x{mat.ncols}")
        inferred = mat.nrows // 2
        if g is None:
            g = inferred
        elif g != inferred:
            raise ValueError(f"genus {g} does not match a {mat.nrows}x{mat.ncols} matrix")
        if not is_symplectic(mat, g):
            raise ValueError("not symplectic: A^T J A != J")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "mat", mat)

    def __setattr__(self, name, value):
        raise AttributeError("SymplecticMatrix is immutable")

    @classmethod
    def identity(cls, g: int) -> "SymplecticMatrix":
        return cls(IntMatrix.identity(2 * g), g)

    def __mul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        if not isinstance(other, SymplecticMatrix):
            return NotImplemented
        if self.g != other.g:
            raise ValueError(f"genus mismatch: {self.g} vs {other.g}")
        return _wrap(self.g, self.mat * other.mat)

    def inverse(self) -> "SymplecticMatrix":
        # A^T J A = J gives A^{-1} = -J A^T J, an integer computation.
        j = standard_j(self.g)
        return _wrap(self.g, -(j * self.mat.transpose() * j))

    def __pow__(self, k: int) -> "SymplecticMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = SymplecticMatrix.identity(self.g)
        for _ in range(k):
            result = result * self
        return result

    def apply(self, vector: Sequence[int]) -> tuple:
        return self.mat.apply(vector)

    def __eq__(self, other):
        return (
            isinstance(other, SymplecticMatrix)
            and self.g == other.g
            and self.mat == other.mat
        )

    def __hash__(self):
        return hash((self.g, self.mat))

    def __repr__(self):
        from .matrix import format_matrix

        return f"SymplecticMatrix({format_matrix(self.mat)!r})"


def _wrap(g: int, mat: IntMatrix) -> SymplecticMatrix:
    """Wrap a product of validated matrices without re-checking the identity."""
    obj = object.__new__(SymplecticMatrix)
    object.__setattr__(obj, "g", g)
    object.__setattr__(obj, "mat", mat)
    return obj


def transvection(v: Sequence[int]) -> SymplecticMatrix:
    """The twist map x |-> x + TWIST_SIGN * <v, x> * v as a matrix.

    Fixes v (since <v, v> = 0) and is always symplectic.
    """
    v = tuple(v)
    if all(entry == 0 for entry in v):
        raise ValueError("transvection along the zero class is undefined")
    n = len(v)
    cols = []
    for j in range(n):
        basis = tuple(int(t == j) for t in range(n))
        coeff = TWIST_SIGN * symplectic_pairing(v, basis)
        cols.append(tuple(basis[i] + coeff * v[i] for i in range(n)))
    return SymplecticMatrix(IntMatrix(tuple(zip(*cols))), n // 2)


def a_class(g: int, i: int) -> tuple:
    """The class A_i (1-based) as a coordinate vector."""
    if not 1 <= i <= g:
        raise ValueError(f"A_{i} out of range for genus {g}")
    return tuple(int(t == i - 1) for t in range(2 * g))


def b_class(g: int, i: int) -> tuple:
    """The class B_i (1-based) as a coordinate vector."""
    if not 1 <= i <= g:
        raise ValueError(f"B_{i} out of range for genus {g}")
    return tuple(int(t == g + i - 1) for t in range(2 * g))


def _generating_classes(g: int) -> list[tuple]:
    """Classes whose transvections generate a rich subgroup for testing.

    The basis classes alone leave each handle's 2x2 block invariant, so the
    adjacent sums A_i + A_{i+1} and B_i + B_{i+1} are added to mix handles.
    """
    classes = [a_class(g, i) for i in range(1, g + 1)]
    classes += [b_class(g, i) for i in range(1, g + 1)]
    for i in range(1, g):
        classes.append(tuple(x + y for x, y in zip(a_class(g, i), a_class(g, i + 1))))
        classes.append(tuple(x + y for x, y in zip(b_class(g, i), b_class(g, i + 1))))
    return classes


def random_symplectic(g: int, word_length: int, seed) -> SymplecticMatrix:
    """Deterministic pseudo-random product of word_length transvections.

    The factors are drawn (with a seeded RNG) from the transvections along
    the generating classes and their inverses, so the result is always
    symplectic and the same seed always gives the same matrix.
    """
    if word_length < 0:
        raise ValueError("word_length must be >= 0")
    rng = random.Random(seed)
    factors = []
    for cls in _generating_classes(g):
        t = transvection(cls)
        factors.append(t)
        factors.append(t.inverse())
    result = SymplecticMatrix.identity(g)
    for _ in range(word_length):
        result = result * rng.choice(factors)
    return result
