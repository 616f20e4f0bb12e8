"""Immutable dense integer matrices with arbitrary-precision entries.

Everything here is small (2g x 2g with g <= 3 in practice, 2g x 4g at
worst), so plain Python loops over tuples of ints are both exact and fast
enough.  Entries are never coerced to floats.
"""

import json

from .errors import ParseError


class IntMatrix:
    """A rectangular matrix of Python ints, hashable and immutable."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(entry for entry in row) for row in rows)
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValueError(f"row {i} has {len(row)} entries, expected {width}")
            for j, entry in enumerate(row):
                if not isinstance(entry, int) or isinstance(entry, bool):
                    raise ValueError(f"entry ({i},{j}) is not an integer: {entry!r}")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(tuple((0,) * ncols for _ in range(nrows)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        cols = tuple(zip(*other.rows))
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            )
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in row) for row in self.rows))

    def _same_shape(self, other: "IntMatrix") -> None:
        if not isinstance(other, IntMatrix):
            raise TypeError(f"expected IntMatrix, got {type(other).__name__}")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}"
            )

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    def apply(self, vector) -> tuple:
        """Matrix-vector product, returning a tuple of ints."""
        vec = tuple(vector)
        if len(vec) != self.ncols:
            raise ValueError(f"vector length {len(vec)} != {self.ncols} columns")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.rows)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        return IntMatrix(tuple(r + s for r, s in zip(self.rows, other.rows)))

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def trace(self) -> int:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        return sum(self.rows[i][i] for i in range(self.nrows))

    def __repr__(self):
        return f"IntMatrix({format_matrix(self)!r})"


def format_matrix(m: IntMatrix) -> str:
    """Render in the row-major text format: entries ',', rows ';'."""
    return ";".join(",".join(str(e) for e in row) for row in m.rows)


def parse_matrix(text: str) -> IntMatrix:
    """Parse ``"1,1;0,1"`` or a JSON array-of-arrays into an IntMatrix."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty matrix text")
    if stripped.startswith("["):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON matrix at offset {exc.pos}: {exc.msg}") from exc
        return matrix_from_json(data)
    rows = []
    for i, row_text in enumerate(stripped.split(";")):
        row = []
        for j, tok in enumerate(row_text.split(",")):
            tok = tok.strip()
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"bad integer {tok!r} at row {i}, column {j}") from None
        rows.append(row)
    try:
        return IntMatrix(rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def matrix_from_json(data) -> IntMatrix:
    """Build an IntMatrix from a decoded JSON array-of-arrays."""
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ParseError("matrix JSON must be an array of arrays")
    try:
        return IntMatrix(data)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
