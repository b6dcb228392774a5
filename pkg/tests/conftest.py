"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

import random

import pytest

from ppheap import (
    Alphabet,
    Builder,
    PPHIndex,
    PString,
    audit_index,
    augment,
    make_alphabet,
    parse_pstring,
)
from ppheap.augment import Augmentation


@pytest.fixture
def ab_uvxy() -> Alphabet:
    """Constants {a, b}, parameters {u, v, x, y}."""
    return make_alphabet(list("ab"), list("uvxy"))


@pytest.fixture
def a_xy() -> Alphabet:
    """Constants {a}, parameters {x, y}."""
    return make_alphabet(["a"], ["x", "y"])


def build_audited(raw, alphabet: Alphabet) -> PPHIndex:
    """Build an index from raw symbols, auditing its invariants."""
    text = parse_pstring(raw, alphabet)
    b = Builder(alphabet)
    for s in text:
        b.push(s)
    idx = b.finalize()
    audit_index(idx)
    return idx


def build_augmented(raw, alphabet: Alphabet) -> tuple[PPHIndex, Augmentation]:
    idx = build_audited(raw, alphabet)
    return idx, augment(idx)


def random_text(rng: random.Random, alphabet: Alphabet, max_n: int,
                min_n: int = 0) -> list[str]:
    syms = list(alphabet.constants + alphabet.parameters)
    n = rng.randint(min_n, max_n)
    return rng.choices(syms, k=n) if n else []


def pstring(raw, alphabet: Alphabet) -> PString:
    return parse_pstring(raw, alphabet)
