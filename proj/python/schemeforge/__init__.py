"""Exact association-scheme detection for lambda-doubly stochastic matrices.

Matrices are passed as square sequences of rows whose entries are ints,
``fractions.Fraction`` values or strings such as ``"3/4"`` or ``"0.25"``.
Every exact quantity comes back as a ``Fraction``; polynomials are lists of
coefficients in ascending degree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import _core
from ._core import (
    ConvergenceError,
    DimensionError,
    Error,
    HypothesisError,
    InvariantViolation,
    ParseError,
    PreconditionError,
    SchemeAxiomError,
)

Entry = Union[int, Fraction, str]
MatrixLike = Sequence[Sequence[Entry]]

__all__ = [
    "ConvergenceError",
    "DimensionError",
    "Error",
    "HypothesisError",
    "InvariantViolation",
    "ParseError",
    "PreconditionError",
    "SchemeAxiomError",
    "SchemeCertificate",
    "classify",
    "decompose",
    "detect_scheme",
    "hoffman",
    "load_matrix",
    "minimal_polynomial",
    "parse_matrix",
    "predistance",
    "random_lambda_ds",
    "run_cli",
    "serialize_matrix",
    "spectrum",
]


def _entry(value: Entry) -> str:
    if isinstance(value, float):
        raise TypeError("floats are inexact; pass a Fraction or a decimal string")
    if isinstance(value, str):
        return value.strip()
    return str(Fraction(value))


def _rows(matrix: MatrixLike) -> list[list[str]]:
    return [[_entry(v) for v in row] for row in matrix]


def _fractions(rows: Sequence[Sequence[str]]) -> list[list[Fraction]]:
    return [[Fraction(v) for v in row] for row in rows]


def _poly(coeffs: Sequence[str]) -> list[Fraction]:
    return [Fraction(c) for c in coeffs]


def _opt(value: Optional[str]) -> Optional[Fraction]:
    return None if value is None else Fraction(value)


def parse_matrix(text: str) -> list[list[Fraction]]:
    return _fractions(_core.parse_matrix(text))


def load_matrix(path: str) -> list[list[Fraction]]:
    return _fractions(_core.load_matrix(str(path)))


def serialize_matrix(matrix: MatrixLike) -> str:
    return _core.serialize_matrix(_rows(matrix))


def classify(matrix: MatrixLike) -> dict:
    c = json.loads(_core.classify(_rows(matrix)))
    c["lambda"] = _opt(c["lambda"])
    return c


def minimal_polynomial(matrix: MatrixLike) -> list[Fraction]:
    return _poly(_core.minimal_polynomial(_rows(matrix)))


def hoffman(matrix: MatrixLike) -> dict:
    """Hoffman polynomial h with h(B) = J, and q with (t - lambda) q = m."""
    h = json.loads(_core.hoffman(_rows(matrix)))
    return {"lambda": Fraction(h["lambda"]), "q": _poly(h["q"]), "h": _poly(h["h"])}


def predistance(matrix: MatrixLike) -> list[list[Fraction]]:
    return [_poly(p) for p in json.loads(_core.predistance(_rows(matrix)))["polynomials"]]


def decompose(matrix: MatrixLike) -> list[tuple[Fraction, list[list[int]]]]:
    """Distinct positive entries with their 0/1 position matrices."""
    d = json.loads(_core.decompose(_rows(matrix)))
    return [(Fraction(c), ind) for c, ind in zip(d["coefficients"], d["indicators"])]


@dataclass
class SchemeCertificate:
    accepted: bool
    reason: Optional[dict]
    lam: Optional[Fraction]
    d: Optional[int]
    diameter: Optional[int]
    hoffman: Optional[list[Fraction]]
    predistance: list[list[Fraction]] = field(default_factory=list)
    classes: list[list[list[int]]] = field(default_factory=list)
    intersection_numbers: list[list[list[Fraction]]] = field(default_factory=list)
    transpose_map: list[int] = field(default_factory=list)

    def p(self, h: int, i: int, j: int) -> Fraction:
        """Intersection number p^h_ij."""
        return self.intersection_numbers[h][i][j]


def detect_scheme(matrix: MatrixLike) -> SchemeCertificate:
    c = json.loads(_core.detect_scheme(_rows(matrix)))
    return SchemeCertificate(
        accepted=c["verdict"] == "accepted",
        reason=c["reason"],
        lam=_opt(c["lambda"]),
        d=c["d"],
        diameter=c["D"],
        hoffman=None if c["hoffman"] is None else _poly(c["hoffman"]),
        predistance=[_poly(p) for p in c["predistance"]],
        classes=c["classes"],
        intersection_numbers=[[[Fraction(v) for v in row] for row in layer] for layer in c["intersection_numbers"]],
        transpose_map=c["transpose_map"],
    )


def spectrum(matrix: MatrixLike, tol: float = 1e-12) -> tuple[list[complex], list[float]]:
    """Distinct eigenvalues, largest real part first, with their residuals."""
    return _core.spectrum(_rows(matrix), tol)


def random_lambda_ds(n: int, k: int, seed: int, lam: Entry = 1, normal: bool = False) -> list[list[Fraction]]:
    return _fractions(_core.random_lambda_ds(n, k, seed, _entry(lam), normal))


def run_cli(args: Sequence[str]) -> tuple[int, str, str]:
    """Runs the command-line tool in process; returns (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
