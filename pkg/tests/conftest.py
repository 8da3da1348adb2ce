import random

import pytest

from tanglecolor import build_rational, load_golden

GOLDEN_DIAGRAMS = ["trefoil.pd", "trefoil4.pd", "trefoil_mirror.pd", "figure8.pd",
                   "hopf.pd", "unknot.pd", "kink.pd", "unlink2.pd"]
GOLDEN_TANGLES = ["zero.tng", "inf.tng", "plus1.tng", "minus1.tng", "rational_3.tng",
                  "rational_1_2.tng", "rational_2_3_4.tng", "rational_m2_3.tng"]
PRIMES = [2, 3, 5, 7, 11, 13]


def random_word(rng, max_total=6):
    """Nonzero-ish Conway word with sum of |entries| <= max_total."""
    while True:
        k = rng.randint(1, 4)
        entries = [rng.randint(-max_total, max_total) for _ in range(k)]
        if sum(map(abs, entries)) > max_total:
            continue
        if k > 1 and not any(entries):
            continue
        return entries


def random_words(seed, count, max_total=6):
    rng = random.Random(seed)
    return [random_word(rng, max_total) for _ in range(count)]


@pytest.fixture(scope="session")
def golden():
    return load_golden


@pytest.fixture(scope="session")
def trefoil():
    return load_golden("trefoil.pd")


@pytest.fixture(scope="session")
def figure8():
    return load_golden("figure8.pd")


@pytest.fixture(scope="session")
def rational_corpus():
    return [build_rational(w) for w in random_words(2024, 60)]
