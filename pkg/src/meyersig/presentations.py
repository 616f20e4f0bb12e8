"""Words, group presentations, and Meyer-function synthesis.

A presentation 1 -> R -> F -> G -> 1 with a matrix assigned to each
generator pulls the signature cocycle back to a 2-cocycle z on F.  The
1-cochain

    c(x_1 x_2 ... x_m) = sum_j z(pi(x_1 ... x_{j-1}), pi(x_j))

satisfies c(xy) = c(x) + c(y) + z(pi(x), pi(y)) and is a class function,
which turns the order of the cocycle's cohomology class into integer
linear algebra over the relators: n[z] = 0 exactly when the system
n*c(r_j) = sum_i m_i * exp_i(r_j) has an integer solution, where exp_i
counts the total exponent of generator i.  When every generator is
conjugate to every other (the Artin situation: braid and commutation
relations connect them), all m_i collapse to a single m, and

    phi(pi(x)) = -c(x) + (m/n) * (total exponent of x)

is a well-defined (1/n)Z-valued function on G whose coboundary is z.
This file implements both the Artin shortcut and the general lattice
computation, plus the shipped presentation data for genus 1 and 2.
"""

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .cocycle import tau_sp
from .errors import InfiniteOrderError, ParseError
from .matrix import format_matrix, matrix_from_json, parse_matrix
from .symplectic import SymplecticMatrix

Letter = tuple[int, int]  # (generator index, exponent sign)


class Word:
    """A word in a free group: a sequence of (generator index, +-1) letters.

    Words are stored exactly as given; free reduction is a separate
    operation, because invariance of the cochain under reduction is a
    theorem to be tested, not a normalization to be baked in.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        letters = tuple((int(i), int(s)) for i, s in letters)
        for i, s in letters:
            if i < 0:
                raise ValueError(f"negative generator index {i}")
            if s not in (1, -1):
                raise ValueError(f"exponent sign must be +-1, got {s}")
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        return Word(base.letters * abs(k))

    def inverse(self) -> "Word":
        return Word(tuple((i, -s) for i, s in reversed(self.letters)))

    def free_reduce(self) -> "Word":
        """Cancel adjacent inverse pairs until none remain."""
        stack: list[Letter] = []
        for letter in self.letters:
            if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
                stack.pop()
            else:
                stack.append(letter)
        return Word(stack)

    def __repr__(self):
        return f"Word({self.letters!r})"


def parse_word(text: str, generator_names: Sequence[str]) -> Word:
    """Parse a whitespace-separated word string.

    Token forms: a generator name, ``name^k`` for a nonzero integer k
    (expanded into |k| letters), and the single-letter shorthand where an
    uppercase token stands for the inverse of its lowercase generator.
    The empty string is the empty word.
    """
    index = {name: i for i, name in enumerate(generator_names)}
    letters: list[Letter] = []
    for pos, token in enumerate(text.split()):
        name, _, power_text = token.partition("^")
        if power_text:
            try:
                power = int(power_text)
            except ValueError:
                raise ParseError(
                    f"bad exponent {power_text!r} in token {pos}: {token!r}"
                ) from None
            if power == 0:
                raise ParseError(f"zero exponent in token {pos}: {token!r}")
        else:
            power = 1
        if name in index:
            i = index[name]
        elif len(name) == 1 and name.isupper() and name.lower() in index:
            i = index[name.lower()]
            power = -power
        else:
            raise ParseError(f"unknown generator {name!r} in token {pos}")
        sign = 1 if power > 0 else -1
        letters.extend([(i, sign)] * abs(power))
    return Word(letters)


def format_word(word: Word, generator_names: Sequence[str]) -> str:
    """Canonical word string: one ``name`` or ``name^-1`` token per letter."""
    tokens = []
    for i, s in word.letters:
        if i >= len(generator_names):
            raise ValueError(f"letter index {i} out of range")
        tokens.append(generator_names[i] if s > 0 else f"{generator_names[i]}^-1")
    return " ".join(tokens)


@dataclass(frozen=True)
class Presentation:
    """Generators with symplectic images, plus relators mapping to the identity.

    ``artin`` asserts that all generators are conjugate in the presented
    group via braid/commutation relations among the relators, which
    licenses the single-coefficient order criterion.
    """

    genus: int
    generator_names: tuple[str, ...]
    matrices: tuple[SymplecticMatrix, ...]
    relators: tuple[Word, ...]
    artin: bool

    def __post_init__(self):
        names = self.generator_names
        if len(set(names)) != len(names):
            raise ValueError("generator names must be distinct")
        for name in names:
            if not name or any(ch.isspace() for ch in name) or "^" in name:
                raise ValueError(f"bad generator name {name!r}")
        if len(self.matrices) != len(names):
            raise ValueError("need exactly one matrix per generator")
        for name, m in zip(names, self.matrices):
            if m.g != self.genus:
                raise ValueError(f"matrix for {name!r} has genus {m.g}, not {self.genus}")
        ident = SymplecticMatrix.identity(self.genus)
        for k, rel in enumerate(self.relators):
            image = evaluate_word(rel, self)
            if image != ident:
                raise ValueError(
                    f"relator {k} ({format_word(rel, names)!r}) does not map to the identity"
                )

    @cached_property
    def _inverses(self) -> tuple[SymplecticMatrix, ...]:
        return tuple(m.inverse() for m in self.matrices)

    def word(self, text: str) -> Word:
        return parse_word(text, self.generator_names)

    def format(self, word: Word) -> str:
        return format_word(word, self.generator_names)

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)


def evaluate_word(w: Word, p: Presentation) -> SymplecticMatrix:
    """Product of generator matrices in word order; the empty word gives I."""
    result = SymplecticMatrix.identity(p.genus)
    for i, s in w.letters:
        if i >= len(p.matrices):
            raise ValueError(f"letter index {i} out of range for {len(p.matrices)} generators")
        result = result * (p.matrices[i] if s > 0 else p._inverses[i])
    return result


def cochain_c(w: Word, p: Presentation) -> int:
    """c(w): the signature cocycle summed along the prefixes of w."""
    total = 0
    prefix = SymplecticMatrix.identity(p.genus)
    for i, s in w.letters:
        if i >= len(p.matrices):
            raise ValueError(f"letter index {i} out of range for {len(p.matrices)} generators")
        step = p.matrices[i] if s > 0 else p._inverses[i]
        total += tau_sp(prefix, step)
        prefix = prefix * step
    return total


def exponent_sum(w: Word, i: int) -> int:
    """Signed count of occurrences of generator i in w."""
    return sum(s for j, s in w.letters if j == i)


def total_exponent(w: Word) -> int:
    """Sum of all exponent signs: the image of w under alpha(e_i) = 1."""
    return sum(s for _, s in w.letters)


class Unbounded:
    """Marker: the signature class of the presentation has infinite order."""

    def __repr__(self):
        return "Unbounded"


UNBOUNDED = Unbounded()


@dataclass(frozen=True)
class ClassOrder:
    """Order n of the cocycle class with integer coefficients m_i such that
    n*c(r_j) = sum_i m_i * exp_i(r_j) over all relators r_j."""

    n: int
    coefficients: tuple[int, ...]

    @property
    def m(self) -> int:
        """The single Artin coefficient; defined when all m_i agree."""
        distinct = set(self.coefficients)
        if len(distinct) != 1:
            raise ValueError(f"coefficients are not uniform: {self.coefficients}")
        return distinct.pop()


def class_order(p: Presentation) -> ClassOrder | Unbounded:
    """Smallest n >= 1 killing the cocycle class, or UNBOUNDED.

    With ``artin`` set, solves n*c(r_j) = m*alpha(r_j) for a single
    integer m: the answer is the reduced fraction c(r)/alpha(r) = m/n,
    checked for consistency across relators.  Otherwise falls back to the
    per-generator lattice system.  Returns (n=1, m=0) when c vanishes on
    every relator and no relator has nonzero total exponent.
    """
    cs = [cochain_c(r, p) for r in p.relators]
    if p.artin:
        alphas = [total_exponent(r) for r in p.relators]
        ratio = None
        for c_j, a_j in zip(cs, alphas):
            if a_j == 0:
                if c_j != 0:
                    return UNBOUNDED
            else:
                q = Fraction(c_j, a_j)
                if ratio is None:
                    ratio = q
                elif ratio != q:
                    return UNBOUNDED
        if ratio is None:
            return ClassOrder(1, (0,) * p.generator_count)
        n, m = ratio.denominator, ratio.numerator
        if any(n * c_j != m * a_j for c_j, a_j in zip(cs, alphas)):
            raise ArithmeticError("reduced ratio fails the relator system")
        # The reduced denominator is provably minimal; confirm anyway.
        for d in range(1, n):
            if n % d == 0 and _admits_integer_m(d, cs, alphas):
                raise ArithmeticError(f"divisor {d} of {n} admits a solution")
        return ClassOrder(n, (m,) * p.generator_count)
    rows = [[exponent_sum(r, i) for i in range(p.generator_count)] for r in p.relators]
    return _lattice_order(rows, cs, p.generator_count)


def _admits_integer_m(n: int, cs: list[int], alphas: list[int]) -> bool:
    m = None
    for c_j, a_j in zip(cs, alphas):
        if a_j == 0:
            if c_j != 0:
                return False
            continue
        if (n * c_j) % a_j:
            return False
        candidate = (n * c_j) // a_j
        if m is None:
            m = candidate
        elif m != candidate:
            return False
    return True


def _lattice_order(rows: list[list[int]], cs: list[int], ngens: int) -> ClassOrder | Unbounded:
    """Minimal n >= 1 with n*cs in the column lattice of ``rows``.

    Column-reduces the exponent matrix over Z (tracking the unimodular
    transform), solves for the unique rational coordinates of cs in the
    resulting lattice basis, and clears denominators.  No rational
    solution at all means the class survives rationally: UNBOUNDED.
    """
    nrel = len(rows)
    cols = [[rows[r][j] for r in range(nrel)] for j in range(ngens)]
    trans = [[int(i == j) for i in range(ngens)] for j in range(ngens)]
    pivot_rows: list[int] = []
    npiv = 0
    for row in range(nrel):
        while True:
            nz = [j for j in range(npiv, ngens) if cols[j][row] != 0]
            if len(nz) <= 1:
                break
            jmin = min(nz, key=lambda j: abs(cols[j][row]))
            for j in nz:
                if j == jmin:
                    continue
                q = cols[j][row] // cols[jmin][row]
                if q:
                    cols[j] = [x - q * y for x, y in zip(cols[j], cols[jmin])]
                    trans[j] = [x - q * y for x, y in zip(trans[j], trans[jmin])]
        nz = [j for j in range(npiv, ngens) if cols[j][row] != 0]
        if nz:
            j = nz[0]
            cols[npiv], cols[j] = cols[j], cols[npiv]
            trans[npiv], trans[j] = trans[j], trans[npiv]
            pivot_rows.append(row)
            npiv += 1
    residual = [Fraction(c) for c in cs]
    coords: list[Fraction] = []
    for idx, prow in enumerate(pivot_rows):
        y = residual[prow] / cols[idx][prow]
        coords.append(y)
        if y:
            residual = [t - y * e for t, e in zip(residual, cols[idx])]
    if any(residual):
        return UNBOUNDED
    n = math.lcm(*(y.denominator for y in coords)) if coords else 1
    scaled = [int(y * n) for y in coords]
    coefficients = [
        sum(scaled[idx] * trans[idx][i] for idx in range(npiv)) for i in range(ngens)
    ]
    if any(
        n * c_j != sum(coefficients[i] * rows[j][i] for i in range(ngens))
        for j, c_j in enumerate(cs)
    ):
        raise ArithmeticError("lattice solution fails the relator system")
    return ClassOrder(n, tuple(coefficients))


class SynthesizedMeyerFunction:
    """phi(w) = -c(w) + (1/n) sum_i m_i * exp_i(w): a (1/n)Z-valued class
    function on the presented group whose coboundary is the pulled-back
    signature cocycle."""

    def __init__(self, presentation: Presentation, order: ClassOrder):
        self.presentation = presentation
        self.order = order

    @property
    def n(self) -> int:
        return self.order.n

    @property
    def m(self) -> int:
        return self.order.m

    def __call__(self, word: Word | str) -> Fraction:
        p = self.presentation
        if isinstance(word, str):
            word = p.word(word)
        counts = [0] * p.generator_count
        for i, s in word.letters:
            if i >= p.generator_count:
                raise ValueError(f"letter index {i} out of range")
            counts[i] += s
        numer = sum(m_i * k_i for m_i, k_i in zip(self.order.coefficients, counts))
        return -cochain_c(word, p) + Fraction(numer, self.order.n)

    def __repr__(self):
        return f"SynthesizedMeyerFunction(n={self.order.n}, coefficients={self.order.coefficients})"


def synthesize_meyer(p: Presentation) -> SynthesizedMeyerFunction:
    """Build the Meyer function of a presentation with finite class order."""
    order = class_order(p)
    if isinstance(order, Unbounded):
        raise InfiniteOrderError(
            "no Meyer function exists for this presentation: "
            "the signature class has infinite order"
        )
    return SynthesizedMeyerFunction(p, order)


# ---------------------------------------------------------------------------
# JSON interchange and shipped data


def presentation_to_dict(p: Presentation) -> dict:
    return {
        "genus": p.genus,
        "generators": list(p.generator_names),
        "matrices": {
            name: format_matrix(m.mat) for name, m in zip(p.generator_names, p.matrices)
        },
        "relators": [format_word(r, p.generator_names) for r in p.relators],
        "artin": p.artin,
    }


def presentation_from_dict(data: dict) -> Presentation:
    try:
        genus = data["genus"]
        generators = data["generators"]
        matrices = data["matrices"]
        relators = data["relators"]
        artin = data["artin"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"presentation data is missing field {exc}") from None
    if not isinstance(generators, list) or not all(isinstance(g, str) for g in generators):
        raise ParseError("'generators' must be a list of names")
    mats = []
    for name in generators:
        if name not in matrices:
            raise ParseError(f"no matrix for generator {name!r}")
        raw = matrices[name]
        try:
            m = parse_matrix(raw) if isinstance(raw, str) else matrix_from_json(raw)
            mats.append(SymplecticMatrix(m, genus))
        except ValueError as exc:
            raise ParseError(f"matrix for {name!r}: {exc}") from None
    words = [parse_word(text, generators) for text in relators]
    try:
        return Presentation(genus, tuple(generators), tuple(mats), tuple(words), bool(artin))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def dump_presentation(p: Presentation) -> str:
    return json.dumps(presentation_to_dict(p), indent=2) + "\n"


def load_presentation(source) -> Presentation:
    """Load from a dict, a JSON string, or a file path."""
    if isinstance(source, dict):
        return presentation_from_dict(source)
    if isinstance(source, str) and source.lstrip().startswith("{"):
        text = source
    else:
        text = Path(source).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad presentation JSON at offset {exc.pos}: {exc.msg}") from None
    return presentation_from_dict(data)


_SHIPPED_FILES = {1: "sl2z.json", 2: "genus2.json"}


def shipped_presentation(genus: int, data_dir=None) -> Presentation:
    """The packaged presentation for genus 1 or 2.

    ``data_dir`` overrides the embedded data files (used by the CLI).
    """
    if genus not in _SHIPPED_FILES:
        raise ValueError(f"no shipped presentation for genus {genus}")
    if data_dir is not None:
        return load_presentation(Path(data_dir) / _SHIPPED_FILES[genus])
    return _shipped_cached(genus)


@lru_cache(maxsize=None)
def _shipped_cached(genus: int) -> Presentation:
    text = resources.files("meyersig.data").joinpath(_SHIPPED_FILES[genus]).read_text()
    return load_presentation(text)


@lru_cache(maxsize=None)
def shipped_meyer_function(genus: int) -> SynthesizedMeyerFunction:
    """The synthesized Meyer function of the shipped presentation."""
    return synthesize_meyer(shipped_presentation(genus))
