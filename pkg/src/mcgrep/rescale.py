"""Rescaling the specialized Lawrence-Krammer representation so that it
descends to the sphere with g movable punctures and one fixed puncture.

The capping map B_g -> M(S_{0,g,1}) has kernel generated by the full twist
``z = (s1 ... s_{g-1})^g``; its LK image is the scalar ``t^2 q^{2g}``. With
``c`` the positive real satisfying ``c^{g(g-1)} = lambda_z`` the rescaled map
``L'(w) = c^{-e(w)} LK(w)`` (``e`` = exponent sum) kills ``z``.

The word ``tau = s1 ... s_{g-1} s_{g-1} ... s1`` is kept as a diagnostic: it
is not central in B_g, so its image is never scalar.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import gmpy2

from .algebra import CertInterval, DEFAULT_PRECISION, ExactMatrix
from .lk import LKGeneratorTable, build_lk_table, lk_eval_specialized
from .words import Alphabet, GroupWord, exponent_sum, sigma


class NotScalar(ArithmeticError):
    def __init__(self, name: str, witness):
        self.name = name
        self.witness = witness
        i, j, v = witness
        super().__init__(f"specialized image of {name} is not scalar: entry ({i},{j}) = {v}")


class Incompatible(ArithmeticError):
    pass


class PrecisionExhausted(ArithmeticError):
    pass


@dataclass(frozen=True)
class KernelWords:
    tau: GroupWord
    z: GroupWord


def kernel_words(g: int) -> KernelWords:
    up = [(sigma(i), 1) for i in range(1, g)]
    tau = GroupWord(Alphabet.BRAID, g, tuple(up + up[::-1]))
    z = GroupWord(Alphabet.BRAID, g, tuple(up * g))
    return KernelWords(tau, z)


def _specialized_product(table: LKGeneratorTable, w: GroupWord, q0, t0) -> ExactMatrix:
    gens = [m.specialize(q0, t0) for m in table.gens]
    out = ExactMatrix.identity(table.dim)
    for gen, e in w.expanded():
        if e < 0:
            raise ValueError("kernel words are positive")
        out = out @ gens[gen.index - 1]
    return out


@dataclass(frozen=True)
class Scalarity:
    lam_z: Fraction
    lam_tau: Fraction | None
    tau_witness: tuple | None

    @property
    def consistency(self) -> str:
        if self.lam_tau is None:
            i, j, v = self.tau_witness
            return f"tau not scalar (entry ({i},{j}) = {v}); only z constrains the unit"
        return f"tau scalar {self.lam_tau}"


def check_scalarity(
    table: LKGeneratorTable, q0, t0, require_tau: bool = False
) -> Scalarity:
    """Specialize the images of ``z`` (and ``tau``) and read off their scalars.

    Raises :class:`NotScalar` if ``z`` is not scalar, or if ``require_tau`` is
    set and ``tau`` is not.
    """
    q0, t0 = Fraction(q0), Fraction(t0)
    if q0 == 0 or t0 == 0:
        raise ZeroDivisionError("specialization point must be nonzero")
    kw = kernel_words(table.genus)
    zmat = _specialized_product(table, kw.z, q0, t0)
    wit = zmat.first_offscalar_entry()
    if wit is not None:
        raise NotScalar("z", wit)
    lam_z = Fraction(zmat[0, 0])
    tmat = _specialized_product(table, kw.tau, q0, t0)
    twit = tmat.first_offscalar_entry()
    if twit is not None:
        if require_tau:
            raise NotScalar("tau", twit)
        return Scalarity(lam_z, None, twit)
    return Scalarity(lam_z, Fraction(tmat[0, 0]), None)


def _exact_root(x: Fraction, n: int) -> Fraction | None:
    a, b = x.numerator, x.denominator
    ra, ea = gmpy2.iroot(a, n)
    rb, eb = gmpy2.iroot(b, n)
    if ea and eb:
        return Fraction(int(ra), int(rb))
    return None


def root_interval(x: Fraction, n: int, precision: int) -> CertInterval:
    """Certified enclosure of the positive real ``x^(1/n)`` of width ``2^-(precision+1)``."""
    if precision < 1:
        raise PrecisionExhausted(f"precision {precision} is too small")
    p = precision + 1
    m = int(gmpy2.iroot(x.numerator * (1 << (p * n)) // x.denominator, n)[0])
    lo, hi = Fraction(m, 1 << p), Fraction(m + 1, 1 << p)
    if not (lo**n <= x <= hi**n):
        raise PrecisionExhausted(f"root enclosure failed at {precision} bits")
    return CertInterval(lo, hi, precision)


@dataclass(frozen=True)
class RescaleUnit:
    """Positive real ``c`` with ``c^exponent = lam``; exact when rational."""

    genus: int
    q0: Fraction
    t0: Fraction
    lam: Fraction
    exponent: int
    exact: Fraction | None
    interval: CertInterval
    precision: int = DEFAULT_PRECISION

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def power(self, k: int, interval: bool = False):
        if self.exact is not None and not interval:
            return self.exact**k
        if self.exact is not None:
            return CertInterval.point(self.exact, self.precision) ** k
        return self.interval**k

    def __str__(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        return str(self.interval)


def solve_unit_root(lam, exponent: int, precision: int = DEFAULT_PRECISION) -> tuple[Fraction | None, CertInterval]:
    lam = Fraction(lam)
    if lam <= 0:
        raise Incompatible(f"scalar {lam} has no positive real root")
    exact = _exact_root(lam, exponent)
    if exact is not None:
        return exact, CertInterval.point(exact, precision)
    return None, root_interval(lam, exponent, precision)


def solve_rescale_unit(
    lam_z,
    g: int,
    precision: int = DEFAULT_PRECISION,
    lam_tau=None,
    q0=Fraction(0),
    t0=Fraction(0),
) -> RescaleUnit:
    """Positive ``c`` with ``c^{g(g-1)} = lam_z``.

    When ``lam_tau`` is given the same ``c`` must also satisfy
    ``c^{2(g-1)} = lam_tau``, otherwise :class:`Incompatible` is raised.
    """
    n = g * (g - 1)
    exact, iv = solve_unit_root(lam_z, n, precision)
    if lam_tau is not None:
        lam_tau = Fraction(lam_tau)
        k = 2 * (g - 1)
        if exact is not None:
            if exact**k != lam_tau:
                raise Incompatible(f"c^{k} = {exact ** k} != lambda_tau = {lam_tau}")
        elif not (iv**k).contains(lam_tau):
            raise Incompatible(f"lambda_tau = {lam_tau} outside the certified range of c^{k}")
    return RescaleUnit(g, Fraction(q0), Fraction(t0), Fraction(lam_z), n, exact, iv, precision)


@lru_cache(maxsize=None)
def unit_for(g: int, q0: Fraction, t0: Fraction, precision: int = DEFAULT_PRECISION) -> RescaleUnit:
    sc = check_scalarity(build_lk_table(g), q0, t0)
    return solve_rescale_unit(sc.lam_z, g, precision, q0=q0, t0=t0)


def wants_interval(unit: RescaleUnit, mode: str) -> bool:
    if mode == "interval":
        return True
    if mode == "exact":
        if not unit.is_exact:
            raise PrecisionExhausted(
                f"rescale unit is irrational at (q0, t0) = ({unit.q0}, {unit.t0}); use --mode interval"
            )
        return False
    return not unit.is_exact


def lprime_eval(w: GroupWord, unit: RescaleUnit, mode: str = "auto") -> ExactMatrix:
    """``c^{-e(w)} LK(w)`` at the unit's specialization point.

    Rational when the unit is rational (and ``mode`` is not ``interval``),
    otherwise a certified interval matrix.
    """
    if w.genus != unit.genus:
        raise ValueError(f"word genus {w.genus} != unit genus {unit.genus}")
    x = lk_eval_specialized(w, unit.q0, unit.t0)
    e = exponent_sum(w)
    if not wants_interval(unit, mode):
        s = unit.power(-e)
        return x if s == 1 else x * s
    s = unit.power(-e, interval=True)
    return x.map(lambda v: s * v, "interval")


def interval_contains_identity(m: ExactMatrix) -> bool:
    return all(
        v.contains(1 if i == j else 0) for i, r in enumerate(m.rows) for j, v in enumerate(r)
    )
