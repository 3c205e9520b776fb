"""Shared fixtures: toy stores and seeded random profile generators."""

import random
from pathlib import Path

import pytest

from distsim import ContextProfile, Semantics, build_windowed, ingest_triples

DATA = Path(__file__).parent / "data"
CORPUS_PATH = DATA / "toy_corpus.txt"
GOLD_PATH = DATA / "toy_gold.tsv"


def make_profile(strengths, semantics=Semantics.CP, target="t"):
    return ContextProfile(target=target, strengths=dict(strengths), semantics=semantics)


def _dyadic_weights(rng: random.Random, size: int, bits: int = 20) -> list[float]:
    """Positive strengths with a common power-of-two denominator.

    Each value and every partial sum is exactly representable, so the
    strengths sum to exactly 1.0 and unit-mass identities hold bitwise.
    """
    total = 1 << bits
    cuts = sorted(rng.sample(range(1, total), size - 1)) if size > 1 else []
    bounds = [0, *cuts, total]
    return [(b - a) / total for a, b in zip(bounds, bounds[1:])]


def random_cp_profile(rng: random.Random, pool=40, lo=3, hi=12):
    """Unrestricted conditional-probability profile: strengths sum to exactly 1."""
    support = rng.sample(range(pool), rng.randint(lo, hi))
    weights = _dyadic_weights(rng, len(support))
    return make_profile({(0, f): w for f, w in zip(support, weights)})


def random_pmi_profile(rng: random.Random, pool=40, lo=3, hi=12, allow_negative=False):
    support = rng.sample(range(pool), rng.randint(lo, hi))
    if allow_negative:
        values = [rng.uniform(-3.0, 5.0) for _ in support]
    else:
        values = [rng.uniform(0.05, 5.0) for _ in support]
    return make_profile(
        {(0, f): v for f, v in zip(support, values)}, semantics=Semantics.PMI
    )


def random_shared_cp_pair(rng: random.Random, size=8):
    """Two CP profiles over one support set, so strict divergences are defined."""
    support = rng.sample(range(40), size)

    def one():
        weights = _dyadic_weights(rng, size)
        return make_profile({(0, f): w for f, w in zip(support, weights)})

    return one(), one()


@pytest.fixture(scope="session")
def toy_store():
    with open(CORPUS_PATH, encoding="utf-8") as handle:
        return build_windowed((line.rstrip("\n") for line in handle), window=2)


TRIPLE_ROWS = [
    ("eat", "obj", "apple", 4),
    ("eat", "obj", "pear", 2),
    ("eat", "obj", "bread", 3),
    ("cut", "obj", "apple", 3),
    ("cut", "obj", "bread", 2),
    ("cut", "obj", "rope", 1),
    ("eat", "subj", "man", 3),
    ("eat", "subj", "dog", 2),
    ("cut", "subj", "man", 2),
    ("cut", "subj", "chef", 2),
    ("see", "obj", "apple", 2),
    ("see", "subj", "man", 1),
]


@pytest.fixture(scope="session")
def triple_store():
    return ingest_triples(TRIPLE_ROWS)
