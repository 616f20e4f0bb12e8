"""Quick invariant suites behind the CLI --selftest flag.

Each suite prints one PASS/FAIL line; the acceptance tests in the test
tree run the same identities at full size.
"""

import random
from fractions import Fraction
from math import gcd

from .cocycle import sigma_defect_via_tau, tau_sp
from .genus1 import SL2Element, dedekind_sum, phi1, signature_defect
from .presentations import Word, class_order, cochain_c, evaluate_word, shipped_meyer_function, shipped_presentation
from .symplectic import random_symplectic


def _random_word(p, rng: random.Random, max_len: int = 14) -> Word:
    length = rng.randint(0, max_len)
    return Word(
        (rng.randrange(p.generator_count), rng.choice((1, -1))) for _ in range(length)
    )


def _suite_cocycle_axioms(rng):
    for g in (1, 2):
        for _ in range(40):
            a = random_symplectic(g, rng.randint(0, 10), rng.random())
            b = random_symplectic(g, rng.randint(0, 10), rng.random())
            c = random_symplectic(g, rng.randint(0, 10), rng.random())
            if tau_sp(a * b, c) + tau_sp(a, b) != tau_sp(a, b * c) + tau_sp(b, c):
                return False
            if tau_sp(a, b) != tau_sp(b, a):
                return False
            if tau_sp(a.inverse(), b.inverse()) != -tau_sp(a, b):
                return False
            if tau_sp(c * a * c.inverse(), c * b * c.inverse()) != tau_sp(a, b):
                return False
    return True


def _suite_coboundary(rng):
    for _ in range(200):
        x = random_symplectic(1, rng.randint(0, 16), rng.random())
        y = random_symplectic(1, rng.randint(0, 16), rng.random())
        if tau_sp(x, y) != phi1(x) - phi1(x * y) + phi1(y):
            return False
    return True


def _suite_defect(rng):
    for _ in range(200):
        m = random_symplectic(1, rng.randint(0, 14), rng.random())
        if sigma_defect_via_tau(m) != signature_defect(SL2Element.from_matrix(m)):
            return False
    return True


def _suite_synthesized(rng):
    p1 = shipped_presentation(1)
    phi = shipped_meyer_function(1)
    for _ in range(100):
        w = _random_word(p1, rng)
        if phi(w) != phi1(evaluate_word(w, p1)):
            return False
    p2 = shipped_presentation(2)
    phi2 = shipped_meyer_function(2)
    if any(phi2(name) != Fraction(3, 5) for name in p2.generator_names):
        return False
    if phi2(" ".join(["c1 c2"] * 6)) != Fraction(-4, 5):
        return False
    for _ in range(60):
        if (5 * phi2(_random_word(p2, rng))).denominator != 1:
            return False
    return True


def _suite_orders(rng):
    return (
        class_order(shipped_presentation(1)).n == 3
        and class_order(shipped_presentation(2)).n == 5
    )


def _suite_dedekind(rng):
    for c in range(2, 61):
        for a in range(1, c):
            if gcd(a, c) != 1:
                continue
            lhs = dedekind_sum(a, c) + dedekind_sum(c, a)
            rhs = Fraction(-1, 4) + (Fraction(a, c) + Fraction(c, a) + Fraction(1, a * c)) / 12
            if lhs != rhs:
                return False
            if dedekind_sum(a + c, c) != dedekind_sum(a, c):
                return False
            if dedekind_sum(-a, c) != -dedekind_sum(a, c):
                return False
    return True


def _suite_free_reduction(rng):
    for g in (1, 2):
        p = shipped_presentation(g)
        phi = shipped_meyer_function(g)
        for _ in range(50):
            w = _random_word(p, rng)
            k = rng.randint(0, len(w))
            i = rng.randrange(p.generator_count)
            s = rng.choice((1, -1))
            padded = Word(w.letters[:k] + ((i, s), (i, -s)) + w.letters[k:])
            if cochain_c(padded, p) != cochain_c(w, p):
                return False
            if phi(padded) != phi(w):
                return False
            if evaluate_word(padded, p) != evaluate_word(w, p):
                return False
    return True


_SUITES = (
    ("class orders 3 and 5", _suite_orders),
    ("cocycle axioms", _suite_cocycle_axioms),
    ("coboundary of phi_1", _suite_coboundary),
    ("signature defect dual route", _suite_defect),
    ("synthesized Meyer functions", _suite_synthesized),
    ("Dedekind reciprocity", _suite_dedekind),
    ("free-reduction invariance", _suite_free_reduction),
)


def run(seed: int = 0) -> int:
    failures = 0
    for name, suite in _SUITES:
        ok = suite(random.Random(seed))
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failures += 0 if ok else 1
    return 1 if failures else 0
