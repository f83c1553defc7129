"""Exact computations and property checks for vertex Lie algebras and their
enveloping vertex bialgebras.

Elements, modes and states use the same text syntax as the command-line tool,
e.g. ``"2·DL + 1/2·c"``, ``"L(-3)"`` and ``"L(-2)L(-1)|0⟩"``. Reports are
returned as dictionaries with the same layout as ``--format json``.
"""

import json

from ._core import Algebra, MalformedInput, MalformedPresentation, Presentation, Unsupported
from ._core import check as _check

__all__ = [
    "Algebra",
    "MalformedInput",
    "MalformedPresentation",
    "Presentation",
    "Unsupported",
    "check",
    "validate",
    "lie_axioms",
]


def validate(presentation, extra=2):
    """Axiom report of a presentation as a dict."""
    return json.loads(presentation.validate(extra))


def lie_axioms(presentation, window=4):
    """Antisymmetry and Jacobi report of the mode algebra as a dict."""
    return json.loads(presentation.check_lie_axioms(window))


def check(input, suite="all", *, max_weight=5, mode_window=4, torsion_bound=0, alpha_bound=2,
          sample=0, seed=0, threads=0):
    """Run a check suite on a file path or ``builtin:NAME``.

    ``threads=0`` reads VERTEXKERNEL_THREADS.
    """
    return json.loads(_check(str(input), suite, max_weight, mode_window, torsion_bound, alpha_bound,
                             sample, seed, threads))
