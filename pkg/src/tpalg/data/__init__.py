"""Shipped example workspace."""

from __future__ import annotations

from importlib import resources

from ..workspace import Workspace, loads

EXAMPLES_FILE = "examples.yaml"


def examples_text() -> str:
    return resources.files(__name__).joinpath(EXAMPLES_FILE).read_text(encoding="utf-8")


def load_examples() -> Workspace:
    """The desk examples: A3, its derivations and Frobenius form, Z2 and the half-shuffle algebras."""
    return loads(examples_text())
