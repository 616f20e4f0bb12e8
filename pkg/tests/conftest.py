import random

import pytest

from meyersig.presentations import Word, shipped_presentation


@pytest.fixture(scope="session")
def sl2z():
    return shipped_presentation(1)


@pytest.fixture(scope="session")
def genus2():
    return shipped_presentation(2)


@pytest.fixture
def rng():
    return random.Random(20240917)


def random_word(p, rng, max_len=14) -> Word:
    length = rng.randint(0, max_len)
    return Word(
        (rng.randrange(p.generator_count), rng.choice((1, -1))) for _ in range(length)
    )
