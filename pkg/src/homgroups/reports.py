from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class ShapeError(ValueError):
    """A table or matrix has the wrong shape or an out-of-range entry."""


class HypothesisUnmet(ValueError):
    """A theorem hypothesis (usually a beta-equivariance) fails.

    ``witness`` names the offending element(s).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    lhs: Any
    rhs: Any

    def to_doc(self):
        return {"axiom": self.axiom, "witness": list(self.witness),
                "lhs": _plain(self.lhs), "rhs": _plain(self.rhs)}


@dataclass
class AxiomReport:
    """Every violated axiom instance found by an exhaustive check.

    ``info`` carries computed side facts (equivariance flags, whether a
    morphism preserves the unit, ...) that are not axioms themselves.
    """

    subject: str
    violations: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, axiom, witness, lhs, rhs):
        self.violations.append(Violation(axiom, tuple(witness), lhs, rhs))

    @property
    def ok(self):
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def axioms(self):
        return sorted({v.axiom for v in self.violations})

    def by_axiom(self, axiom):
        return [v for v in self.violations if v.axiom == axiom]

    def to_doc(self):
        return {"subject": self.subject, "ok": self.ok,
                "violations": [v.to_doc() for v in self.violations],
                "info": {k: _plain(v) for k, v in sorted(self.info.items())}}


def _plain(x):
    from fractions import Fraction

    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if hasattr(x, "to_dense"):
        return [[_plain(y) for y in row] for row in x.to_dense()]
    return x
