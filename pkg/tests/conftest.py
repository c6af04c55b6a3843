import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cayleykit import generated_mul_semigroup, new_table, zn_table  # noqa: E402
from oracles import transformation_semigroup  # noqa: E402

# transcribed from the printed mod-60 tables
SG_LABELS = [24, 12, 36, 48]
SG_ROWS = [
    [36, 48, 24, 12],
    [48, 24, 12, 36],
    [24, 12, 36, 48],
    [12, 36, 48, 24],
]
SS_LABELS = [18, 24, 12, 36, 48]
SS_ROWS = [
    [24, 12, 36, 48, 24],
    [12, 36, 48, 24, 12],
    [36, 48, 24, 12, 36],
    [48, 24, 12, 36, 48],
    [24, 12, 36, 48, 24],
]


@pytest.fixture
def sg():
    return new_table(SG_LABELS, SG_ROWS)


@pytest.fixture
def ss():
    return new_table(SS_LABELS, SS_ROWS)


@pytest.fixture
def implication():
    # x -> y on {0, 1}
    return new_table([0, 1], [[1, 1], [0, 1]])


@pytest.fixture
def left_zero():
    return new_table([0, 1], [[0, 0], [1, 1]])


def generated_corpus(max_n=30):
    return [((a, n), generated_mul_semigroup(a, n)) for n in range(1, max_n + 1) for a in range(n)]


def handcrafted_semigroups():
    out = [
        new_table([0, 1], [[0, 0], [1, 1]]),                # left zero
        new_table([0, 1], [[0, 1], [0, 1]]),                # right zero
        new_table([0, 1, 2], [[0, 0, 0], [0, 0, 0], [0, 0, 0]]),  # null
        zn_table(range(6), 6),
        zn_table(range(8), 8),
        zn_table([1, 18, 24, 12, 36, 48], 60),
        zn_table(range(12), 12),
    ]
    rng = random.Random(7)
    for _ in range(25):
        deg = rng.choice([2, 3])
        gens = [[rng.randrange(deg) for _ in range(deg)] for _ in range(rng.choice([1, 2]))]
        labels, rows = transformation_semigroup(gens, deg)
        out.append(new_table(labels, rows))
    return out


def random_tables(count, max_size=6, seed=1):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_size)
        labels = list(range(n))
        rows = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
        out.append(new_table(labels, rows))
    return out
