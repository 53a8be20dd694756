"""Shared example algebras and hypothesis strategies."""

from __future__ import annotations

import random
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

import oracles

from tpalg.algebra import AlgebraPresentation
from tpalg.tensor import LinearMap, as_tensor
from tpalg.yang_baxter import TwoTensor

settings.register_profile("tpalg", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("tpalg")


def exact(lists):
    return as_tensor(np.array(lists, dtype=object))


def truncated(n: int) -> AlgebraPresentation:
    """Q[t]/(t^n) with its dot product."""
    labels = tuple(["1", "t"] + [f"t{k}" for k in range(2, n)])[:n]
    return AlgebraPresentation(n, {"dot": exact(oracles.truncated_product(n))}, labels)


def euler_map(n: int) -> LinearMap:
    return LinearMap(exact(oracles.euler(n)))


def nilpotent_map(n: int) -> LinearMap:
    return LinearMap(exact(oracles.nilpotent(n)))


def derivation_algebra(n: int, P) -> AlgebraPresentation:
    """Q[t]/(t^n) with dot, the Witt bracket and the derived anti-pre-Lie product of ``P``."""
    P = oracles.to_lists(P.matrix if isinstance(P, LinearMap) else P)
    dot = oracles.truncated_product(n)
    return AlgebraPresentation(
        n,
        {"dot": exact(dot), "bracket": exact(oracles.witt_bracket(dot, P)), "circ": exact(oracles.derived_circ(dot, P))},
    )


def derivation_family():
    """Derivation algebras of Q[t]/(t^n), n = 2..4, for the Euler, nilpotent and mixed derivations."""
    out = []
    for n in (2, 3, 4):
        E, N = oracles.euler(n), oracles.nilpotent(n)
        mixed = [[E[i][j] + N[i][j] for j in range(n)] for i in range(n)]
        double_nil = [[2 * N[i][j] for j in range(n)] for i in range(n)]
        for P in (E, N, mixed, double_nil):
            out.append(derivation_algebra(n, exact(P)))
    return out


DERIVATION_FAMILY = derivation_family()


def random_two_tensor(rng: random.Random, n: int, density: float = 0.4, skew: bool = False) -> TwoTensor:
    m = [[Fraction(rng.choice([-2, -1, 1, 2, 3])) if rng.random() < density else Fraction(0) for _ in range(n)] for _ in range(n)]
    if skew:
        m = [[m[i][j] - m[j][i] for j in range(n)] for i in range(n)]
    return TwoTensor(exact(m))


small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def sparse_tensors(draw, shape, density=0.3):
    """Exact tensors with mostly zero entries and small rational values."""
    size = int(np.prod(shape))
    flat = [draw(small_rationals) if draw(st.floats(0, 1)) < density else Fraction(0) for _ in range(size)]
    return exact(np.array(flat, dtype=object).reshape(shape))


@st.composite
def two_tensors(draw, n, skew=False):
    m = draw(sparse_tensors((n, n), 0.4))
    if skew:
        m = as_tensor(m - m.T)
    return TwoTensor(m)


@pytest.fixture
def a3() -> AlgebraPresentation:
    return truncated(3)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)
