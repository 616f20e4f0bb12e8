"""Signature bookkeeping for fibered 4-manifolds of fiber genus 1 and 2.

The local signature of a fiber germ is

    sigma_g(germ) = phi_g(boundary monodromy) + Sign(preimage of the disk)

where phi_g is the Meyer function (closed form at genus 1, synthesized
from the shipped presentation at genus 2) and the neighborhood signature
is caller-supplied data.  Local signatures vanish on general fibers and
sum to the signature of a closed total space, which is where all the
cross-checks in this module live.  Euler contributions, the hyperelliptic
Horikawa-index identities, and the Hirzebruch/Noether geography
conversions are included so that whole numerical budgets of a fibration
can be balanced exactly.

Genus 3 and up is refused outright: the signature class has infinite
order there, so no Meyer function exists.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import ParseError, UnsupportedGenusError
from .genus1 import phi1
from .matrix import parse_matrix
from .presentations import (
    Presentation,
    Word,
    evaluate_word,
    shipped_meyer_function,
    shipped_presentation,
    synthesize_meyer,
)
from .symplectic import SymplecticMatrix

SUPPORTED_GENERA = (1, 2)


@dataclass(frozen=True)
class FiberGerm:
    """A singular-fiber germ: boundary monodromy word (counter-clockwise),
    the signature of the fiber's disk neighborhood, and a display label."""

    monodromy: Word
    neighborhood_signature: int = 0
    label: str = ""


@dataclass(frozen=True)
class FibrationDescription:
    """A fibered 4-manifold over a closed base: fiber genus, base genus,
    and one germ per singular fiber."""

    genus: int
    base_genus: int
    germs: tuple[FiberGerm, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.genus not in SUPPORTED_GENERA:
            raise UnsupportedGenusError(_no_meyer_message(self.genus))
        if self.base_genus < 0:
            raise ValueError("base genus must be >= 0")


def _no_meyer_message(g: int) -> str:
    if g >= 3:
        return (
            f"no Meyer function exists at genus {g}: the signature class "
            "has infinite order for genus >= 3"
        )
    return f"unsupported fiber genus {g}: Meyer functions exist at genus 1 and 2 only"


def meyer_function(g: int, data_dir=None):
    """phi_g on monodromy words: closed form for g=1, synthesized for g=2."""
    if g not in SUPPORTED_GENERA:
        raise UnsupportedGenusError(_no_meyer_message(g))
    if g == 1:
        p = shipped_presentation(1, data_dir)
        return lambda w: phi1(evaluate_word(w, p))
    if data_dir is not None:
        return synthesize_meyer(shipped_presentation(2, data_dir))
    return shipped_meyer_function(2)


def signature_over_surface(g: int, boundary_monodromies, data_dir=None) -> Fraction:
    """Signature of a genus-g bundle over a compact surface with boundary:
    the sum of phi_g over the boundary monodromies (zero for no boundary)."""
    phi = meyer_function(g, data_dir)
    return sum((phi(w) for w in boundary_monodromies), Fraction(0))


def local_signature(germ: FiberGerm, g: int, data_dir=None) -> Fraction:
    """phi_g(monodromy) + neighborhood signature; conjugation-invariant."""
    phi = meyer_function(g, data_dir)
    return phi(germ.monodromy) + germ.neighborhood_signature


def total_signature(fd: FibrationDescription, data_dir=None) -> int:
    """Sum of local signatures over all germs of a closed fibration.

    Raises if the germs fail the closedness check (their product must be
    the identity over a sphere, or lie in the commutator subgroup of the
    symplectic group over a positive-genus base), or if the sum is not an
    integer, which signals inconsistent input data.
    """
    p = shipped_presentation(fd.genus, data_dir)
    product = SymplecticMatrix.identity(fd.genus)
    for germ in fd.germs:
        product = product * evaluate_word(germ.monodromy, p)
    if fd.base_genus == 0:
        if product != SymplecticMatrix.identity(fd.genus):
            raise ValueError(
                "closedness check failed: germ monodromies do not multiply "
                "to the identity over a sphere base"
            )
    elif not _in_commutator_subgroup(product):
        raise ValueError(
            "closedness check failed: the product of germ monodromies is "
            "not a product of commutators in Sp(2g;Z)"
        )
    total = sum(
        (local_signature(germ, fd.genus, data_dir) for germ in fd.germs), Fraction(0)
    )
    if total.denominator != 1:
        raise ValueError(f"total signature {total} is not an integer; germ data inconsistent")
    return int(total)


def euler_contribution(chi_singular_fiber: int, g: int) -> int:
    """chi of the singular fiber minus chi of a smooth genus-g fiber."""
    return chi_singular_fiber - (2 - 2 * g)


def total_euler(g: int, base_genus: int, contributions) -> int:
    """chi of the total space: (2-2g)(2-2g_B) plus the germ contributions."""
    return (2 - 2 * g) * (2 - 2 * base_genus) + sum(contributions)


def sigma_alg_hyperelliptic(h_index, eps: int, g: int) -> Fraction:
    """The algebro-geometric local signature of a hyperelliptic fiber germ:
    (g*H - (g+1)*eps) / (2g+1)."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    return Fraction(g * Fraction(h_index) - (g + 1) * eps, 2 * g + 1)


def horikawa_total(k_rel_sq: int, chi_f, g: int) -> Fraction:
    """Total Horikawa index of a hyperelliptic fibration:
    K^2_{E/B} - (4(g-1)/g) * chi_f."""
    if g < 2:
        raise ValueError("the Horikawa-index identity needs genus >= 2")
    return Fraction(k_rel_sq) - Fraction(4 * (g - 1), g) * Fraction(chi_f)


def geography_convert(k_sq, chi_struct) -> tuple[Fraction, Fraction]:
    """(Sign(E), chi_top(E)) from (K^2, chi(O)), via Hirzebruch and Noether:
    chi_top = 12 chi(O) - K^2 and Sign = K^2 - 8 chi(O)."""
    k_sq, chi_struct = Fraction(k_sq), Fraction(chi_struct)
    return k_sq - 8 * chi_struct, 12 * chi_struct - k_sq


def geography_invert(sign, chi_top) -> tuple[Fraction, Fraction]:
    """(K^2, chi(O)) from (Sign(E), chi_top(E)); inverse of geography_convert."""
    sign, chi_top = Fraction(sign), Fraction(chi_top)
    return 3 * sign + 2 * chi_top, Fraction(sign + chi_top, 4)


def hyperelliptic_twist_value(g: int, separating_h: int | None = None) -> Fraction:
    """Value of the hyperelliptic Meyer function on a right-handed twist.

    (g+1)/(2g+1) along a non-separating curve; -4h(g-h)/(2g+1) along a
    curve separating off a genus-h piece (1 <= h <= g-1).
    """
    if g < 1:
        raise ValueError("genus must be >= 1")
    if separating_h is None:
        return Fraction(g + 1, 2 * g + 1)
    if not 1 <= separating_h <= g - 1:
        raise ValueError(f"separating genus h={separating_h} must satisfy 1 <= h <= {g - 1}")
    return Fraction(-4 * separating_h * (g - separating_h), 2 * g + 1)


# ---------------------------------------------------------------------------
# Kodaira monodromy table (genus 1)

_KODAIRA_FILE = "kodaira.json"


@lru_cache(maxsize=None)
def _kodaira_table_default() -> dict:
    text = resources.files("meyersig.data").joinpath(_KODAIRA_FILE).read_text()
    return json.loads(text)


def _kodaira_table(data_dir=None) -> dict:
    if data_dir is None:
        return _kodaira_table_default()
    return json.loads((Path(data_dir) / _KODAIRA_FILE).read_text())


def kodaira_matrix(fiber_type: str, data_dir=None) -> SymplecticMatrix:
    """Monodromy matrix of a named Kodaira fiber type (I_n, I_n*, II, ..., IV*).

    The table is normalized to this package's twist convention, under
    which an I_1 germ has monodromy [[1,-1],[0,1]] and twelve of them
    close up to an elliptic surface of signature -8.
    """
    table = _kodaira_table(data_dir)
    name = fiber_type.strip()
    n = None
    key = name
    if name not in table:
        starred = name.endswith("*")
        stem = name[:-1] if starred else name
        if stem.startswith("I_"):
            try:
                n = int(stem[2:])
            except ValueError:
                raise ParseError(f"unknown Kodaira type {fiber_type!r}") from None
            if n < 0:
                raise ParseError(f"unknown Kodaira type {fiber_type!r}")
            key = "I_n*" if starred else "I_n"
        if key not in table:
            raise ParseError(f"unknown Kodaira type {fiber_type!r}")
    text = table[key]
    if n is not None:
        entries = [
            [_substitute_n(tok, n) for tok in row.split(",")] for row in text.split(";")
        ]
        return SymplecticMatrix(entries, 1)
    return SymplecticMatrix(parse_matrix(text), 1)


def _substitute_n(token: str, n: int) -> int:
    token = token.strip()
    if token == "n":
        return n
    if token == "-n":
        return -n
    return int(token)


def kodaira_word(fiber_type: str, data_dir=None) -> Word:
    """A monodromy word over the genus-1 generators for a Kodaira type."""
    return sl2_word(kodaira_matrix(fiber_type, data_dir), data_dir)


# ---------------------------------------------------------------------------
# SL(2;Z) words and the closedness check

# S and T generate SL(2;Z); in the shipped genus-1 presentation T is the
# generator a and S is (aba)^{-1}.
_T = (1, 1, 0, 1)
_S = (0, -1, 1, 0)


def _sl2_st_factors(m: SymplecticMatrix) -> list[tuple[str, int]]:
    """Factor a genus-1 matrix as an ordered product of powers of S and T.

    Euclidean reduction on the first column: left-multiplications by
    T^{-q} and S^{-1} strictly shrink |c| until the matrix is +-T^b,
    which is S^2 T^b up to recording.  The recorded inverses, in order,
    multiply back to the input.
    """
    if m.g != 1:
        raise ValueError(f"expected genus 1, got genus {m.g}")
    (a, b), (c, d) = m.mat.rows
    applied: list[tuple[str, int]] = []
    while c != 0:
        q = a // c
        if q:
            a, b = a - q * c, b - q * d
            applied.append(("T", -q))
        a, b, c, d = c, d, -a, -b
        applied.append(("S", -1))
    if a == 1:
        if b:
            applied.append(("T", -b))
    else:
        applied.append(("S", -2))
        if -b:
            applied.append(("T", b))
    return [(sym, -exp) for sym, exp in applied]


def sl2_word(m: SymplecticMatrix, data_dir=None) -> Word:
    """A word in the shipped genus-1 generators mapping to the matrix m."""
    p = shipped_presentation(1, data_dir)
    a_idx = p.generator_names.index("a")
    b_idx = p.generator_names.index("b")
    t_letter = ((a_idx, 1),)
    s_letters = ((a_idx, -1), (b_idx, -1), (a_idx, -1))  # S = (aba)^{-1}
    letters: list[tuple[int, int]] = []
    for sym, exp in _sl2_st_factors(m):
        base = t_letter if sym == "T" else s_letters
        if exp < 0:
            base = tuple((i, -s) for i, s in reversed(base))
        letters.extend(base * abs(exp))
    word = Word(letters)
    if evaluate_word(word, p) != m:
        raise ArithmeticError("SL(2;Z) word decomposition failed to reproduce the matrix")
    return word


def _sl2_abelianized(m: SymplecticMatrix) -> int:
    """Image in the abelianization SL(2;Z) -> Z/12 ([T] = 1, [S] = -3)."""
    total = 0
    for sym, exp in _sl2_st_factors(m):
        total += exp if sym == "T" else -3 * exp
    return total % 12


@lru_cache(maxsize=1)
def _odd_theta_forms() -> tuple[tuple[int, ...], ...]:
    """The six odd quadratic forms on F_2^4 refining the symplectic pairing.

    Each form is stored as its value table over the 16 vectors (bit i of
    the index is coordinate i in the basis A_1, A_2, B_1, B_2).
    """
    def pairing(x: int, y: int) -> int:
        total = 0
        for i in range(2):
            total += ((x >> i) & 1) * ((y >> (2 + i)) & 1)
            total += ((x >> (2 + i)) & 1) * ((y >> i) & 1)
        return total % 2

    forms = []
    for assignment in range(16):
        values = [0] * 16
        for vec in range(16):
            bits = [i for i in range(4) if (vec >> i) & 1]
            q = sum((assignment >> i) & 1 for i in bits)
            q += sum(
                pairing(1 << bits[s], 1 << bits[t])
                for s in range(len(bits))
                for t in range(s + 1, len(bits))
            )
            values[vec] = q % 2
        arf = (values[1] * values[4] + values[2] * values[8]) % 2
        if arf == 1:
            forms.append(tuple(values))
    if len(forms) != 6:
        raise ArithmeticError(f"expected 6 odd forms, found {len(forms)}")
    return tuple(sorted(forms))


def _sp4_parity(m: SymplecticMatrix) -> int:
    """Parity of the permutation of the six odd theta forms under q -> q(Mx).

    This is the unique nontrivial character Sp(4;Z) -> Z/2 (transvections
    act as transpositions), so parity 0 characterizes the commutator
    subgroup.
    """
    if m.g != 2:
        raise ValueError(f"expected genus 2, got genus {m.g}")
    rows = [[e % 2 for e in row] for row in m.mat.rows]
    image = [0] * 16
    for vec in range(16):
        coords = [(vec >> j) & 1 for j in range(4)]
        out = 0
        for i in range(4):
            if sum(rows[i][j] * coords[j] for j in range(4)) % 2:
                out |= 1 << i
        image[vec] = out
    forms = _odd_theta_forms()
    index = {f: k for k, f in enumerate(forms)}
    perm = [index[tuple(f[image[vec]] for vec in range(16))] for f in forms]
    seen = [False] * 6
    parity = 0
    for start in range(6):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _in_commutator_subgroup(m: SymplecticMatrix) -> bool:
    """Membership in [Sp(2g;Z), Sp(2g;Z)] for g = 1 or 2.

    A product of any number of commutators lies here; commutator length
    itself is not decided, so this is the symplectic-level relaxation of
    the closedness condition over a positive-genus base.
    """
    if m.g == 1:
        return _sl2_abelianized(m) == 0
    if m.g == 2:
        return _sp4_parity(m) == 0
    raise UnsupportedGenusError(_no_meyer_message(m.g))


# ---------------------------------------------------------------------------
# Fibration description files

_KODAIRA_PREFIX = "kodaira:"


def germ_from_dict(data: dict, presentation: Presentation, data_dir=None) -> FiberGerm:
    try:
        monodromy = data["monodromy"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"germ data is missing field {exc}") from None
    if isinstance(monodromy, str) and monodromy.startswith(_KODAIRA_PREFIX):
        if presentation.genus != 1:
            raise ParseError("Kodaira fiber references are only defined at genus 1")
        word = kodaira_word(monodromy[len(_KODAIRA_PREFIX):], data_dir)
    else:
        word = presentation.word(monodromy)
    return FiberGerm(
        monodromy=word,
        neighborhood_signature=int(data.get("neighborhood_signature", 0)),
        label=str(data.get("label", "")),
    )


def load_fibration(source, data_dir=None) -> FibrationDescription:
    """Load a fibration description from a dict, JSON string, or file path."""
    if isinstance(source, dict):
        data = source
    else:
        if isinstance(source, str) and source.lstrip().startswith("{"):
            text = source
        else:
            text = Path(source).read_text()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad fibration JSON at offset {exc.pos}: {exc.msg}") from None
    try:
        genus = data["genus"]
        base_genus = data["base_genus"]
        germs = data["germs"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"fibration data is missing field {exc}") from None
    if genus not in SUPPORTED_GENERA:
        raise UnsupportedGenusError(_no_meyer_message(genus))
    p = shipped_presentation(genus, data_dir)
    parsed = tuple(germ_from_dict(g, p, data_dir) for g in germs)
    return FibrationDescription(genus=genus, base_genus=int(base_genus), germs=parsed)
