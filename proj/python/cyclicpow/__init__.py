"""Cyclic powers, second Witt vectors and splittings over finite chain rings."""

import json

from ._core import (
    criterion_title,
    demo_witt,
    suite_criteria,
    witt_add,
    witt_elements,
    witt_ghost,
    witt_mul,
)

__all__ = [
    "compute",
    "criterion_title",
    "demo_witt",
    "suite_criteria",
    "verify",
    "witt_add",
    "witt_elements",
    "witt_ghost",
    "witt_mul",
]


def compute(kind, complex_):
    """kind is tate, cyclic or splitting; complex_ is a dict in the JSON complex format."""
    from ._core import _compute

    return json.loads(_compute(kind, json.dumps(complex_)))


def verify(suites=(), seed=42, sizes=0, ring="", ps=(), d=0):
    from ._core import _verify

    return json.loads(_verify(list(suites), seed, sizes, ring, list(ps), d))
