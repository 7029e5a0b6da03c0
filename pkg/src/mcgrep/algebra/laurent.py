"""Bivariate Laurent polynomials in ``q`` and ``t`` with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterator, Mapping, Union

Exponent = tuple[int, int]
Scalar = Union[int, Fraction]


class LaurentPoly:
    """Element of Q[q, 1/q, t, 1/t].

    Stored as a mapping ``(a, b) -> c`` for the monomial ``c * q**a * t**b``.
    Zero coefficients are never stored, so the empty mapping is the zero
    polynomial and equality is structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        clean: dict[Exponent, Scalar] = {}
        if terms:
            for (a, b), c in terms.items():
                if not isinstance(c, Rational):
                    raise TypeError(f"coefficient {c!r} is not rational")
                if c:
                    clean[(int(a), int(b))] = c
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, Scalar]) -> LaurentPoly:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> LaurentPoly:
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: Scalar = 1) -> LaurentPoly:
        return cls._raw({(a, b): c} if c else {})

    @property
    def terms(self) -> dict[Exponent, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Scalar]]:
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # -- ring operations ------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Rational):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        if not self._terms:
            return o
        out = dict(self._terms)
        for k, c in o._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return LaurentPoly._raw({})
        out: dict[Exponent, Scalar] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in o._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are units of the Laurent ring")
            ((a, b), c), = self._terms.items()
            return LaurentPoly._raw({(a * n, b * n): Fraction(c) ** n})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation -----------------------------------------------------

    def specialize(self, q0: Scalar, t0: Scalar) -> Fraction:
        """Evaluate exactly at ``q = q0``, ``t = t0``; both must be nonzero."""
        if q0 == 0 or t0 == 0:
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at q=0 or t=0")
        q0 = Fraction(q0)
        t0 = Fraction(t0)
        total = Fraction(0)
        for (a, b), c in self._terms.items():
            total += c * q0**a * t0**b
        return total

    # -- presentation ---------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("q", a), ("t", b)) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


Q = LaurentPoly.monomial(1, 0)
T = LaurentPoly.monomial(0, 1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly.const(0)
