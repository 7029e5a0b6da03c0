"""Exact scalar domains and dense matrices over them."""

from .interval import DEFAULT_PRECISION, CertInterval, ceil_dyadic, floor_dyadic
from .laurent import ONE, Q, T, ZERO, LaurentPoly
from .matrix import DOMAINS, DomainError, ExactMatrix

__all__ = [
    "DEFAULT_PRECISION",
    "CertInterval",
    "ceil_dyadic",
    "floor_dyadic",
    "LaurentPoly",
    "Q",
    "T",
    "ONE",
    "ZERO",
    "DOMAINS",
    "DomainError",
    "ExactMatrix",
    "poly_arith",
    "mat_mul",
    "specialize",
    "interval_ne_identity",
]


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a @ b


def specialize(p: LaurentPoly, q0, t0):
    return p.specialize(q0, t0)


def interval_ne_identity(a: ExactMatrix) -> bool:
    """True only when some entry certifiably differs from the identity entry.

    ``False`` means "not certified", never "equal".
    """
    if a.domain != "interval":
        raise DomainError("expected an interval matrix")
    return any(
        v.excludes(1 if i == j else 0) for i, r in enumerate(a.rows) for j, v in enumerate(r)
    )
