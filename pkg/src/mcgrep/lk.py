"""Lawrence-Krammer representation of the braid group B_g.

Basis vectors ``v[j,k]`` (1 <= j < k <= g) are ordered lexicographically.
Matrices act on column vectors, so column ``(j, k)`` of ``M_i`` is the image
of ``v[j,k]`` under ``sigma_i`` and a word ``w1 w2`` maps to ``M(w1) M(w2)``.

Convention (eigenvalues of every ``M_i`` are ``1``, ``-q`` and ``t q^2``)::

    sigma_i v[i,i+1] = t q^2 v[i,i+1]
    sigma_i v[i,k]   = (1-q) v[i,k] + q v[i+1,k] - (q-1)^2 v[i,i+1]      k > i+1
    sigma_i v[i+1,k] = v[i,k] + (q-1) v[i,i+1]                           k > i+1
    sigma_i v[j,i]   = v[j,i+1] + (q-1) v[i,i+1]                         j < i
    sigma_i v[j,i+1] = (1-q) v[j,i+1] + q v[j,i] - (q-1)^2 v[i,i+1]      j < i
    sigma_i v[j,k]   = v[j,k] - (q-1)^2 v[i,i+1]                         j < i, i+1 < k
    sigma_i v[j,k]   = v[j,k]                                            otherwise

Every ``M_i`` satisfies ``(M - 1)(M + q)(M - t q^2) = 0``, which gives the
inverse as a Laurent polynomial in ``M_i`` without any field division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .algebra import ExactMatrix, LaurentPoly
from .words import MIN_GENUS, Alphabet, GroupWord, WordError, sigma

q = LaurentPoly.monomial(1, 0)
t = LaurentPoly.monomial(0, 1)
_one = LaurentPoly.const(1)


def lk_basis(g: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, g + 1), 2))


def lk_dimension(g: int) -> int:
    return g * (g - 1) // 2


def _generator_columns(g: int, i: int) -> list[dict[int, LaurentPoly]]:
    basis = lk_basis(g)
    idx = {p: n for n, p in enumerate(basis)}
    qm1 = q - 1
    qm1_sq = qm1 * qm1
    adj = idx[(i, i + 1)]
    cols = []
    for j, k in basis:
        col: dict[int, LaurentPoly] = {}

        def put(pair, coeff):
            r = idx[pair]
            col[r] = col.get(r, LaurentPoly.const(0)) + coeff

        if j == i and k == i + 1:
            put((i, i + 1), t * q * q)
        elif j == i:
            put((i, k), 1 - q)
            put((i + 1, k), q)
            put((i, i + 1), -qm1_sq)
        elif j == i + 1:
            put((i, k), _one)
            put((i, i + 1), qm1)
        elif k == i:
            put((j, i + 1), _one)
            put((i, i + 1), qm1)
        elif k == i + 1:
            put((j, i + 1), 1 - q)
            put((j, i), q)
            put((i, i + 1), -qm1_sq)
        elif j < i and i + 1 < k:
            put((j, k), _one)
            put((i, i + 1), -qm1_sq)
        else:
            put((j, k), _one)
        cols.append({r: v for r, v in col.items() if v})
    assert adj in cols[adj]
    return cols


def _inverse_from_cubic(m: ExactMatrix) -> ExactMatrix:
    # (M-1)(M+q)(M-tq^2) = M^3 + a M^2 + b M + c with c = t q^3 a unit
    a = q - 1 - t * q * q
    b = -q + t * q * q - t * q**3
    c_inv = LaurentPoly.monomial(-3, -1, 1)
    n = m.dim
    ident = ExactMatrix.identity(n, "laurent")
    m2 = m @ m
    rows = []
    for r in range(n):
        rows.append([
            -(m2[r, s] + a * m[r, s] + b * ident[r, s]) * c_inv for s in range(n)
        ])
    return ExactMatrix(rows, "laurent")


@dataclass(frozen=True)
class LKGeneratorTable:
    genus: int
    basis: tuple[tuple[int, int], ...]
    gens: tuple[ExactMatrix, ...]
    gens_inv: tuple[ExactMatrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self, i: int, sign: int = 1) -> ExactMatrix:
        return (self.gens if sign > 0 else self.gens_inv)[i - 1]


@lru_cache(maxsize=None)
def build_lk_table(g: int) -> LKGeneratorTable:
    if g < MIN_GENUS:
        raise ValueError(f"genus must be >= {MIN_GENUS}, got {g}")
    gens = tuple(ExactMatrix.from_columns(_generator_columns(g, i), "laurent") for i in range(1, g))
    invs = tuple(_inverse_from_cubic(m) for m in gens)
    return LKGeneratorTable(g, tuple(lk_basis(g)), gens, invs)


@dataclass(frozen=True)
class SpecializedTable:
    genus: int
    q0: Fraction
    t0: Fraction
    gens: tuple[ExactMatrix, ...]
    gens_inv: tuple[ExactMatrix, ...]

    @property
    def dim(self) -> int:
        return self.gens[0].dim

    def matrix(self, i: int, sign: int = 1) -> ExactMatrix:
        return (self.gens if sign > 0 else self.gens_inv)[i - 1]


@lru_cache(maxsize=None)
def specialized_table(g: int, q0: Fraction, t0: Fraction) -> SpecializedTable:
    table = build_lk_table(g)
    q0, t0 = Fraction(q0), Fraction(t0)
    return SpecializedTable(
        g,
        q0,
        t0,
        tuple(m.specialize(q0, t0) for m in table.gens),
        tuple(m.specialize(q0, t0) for m in table.gens_inv),
    )


def _check_braid_word(table, w: GroupWord) -> None:
    if w.genus != table.genus:
        raise WordError(f"word genus {w.genus} does not match table genus {table.genus}")
    for gen, _ in w.letters:
        if gen.family != "s":
            raise WordError(f"{gen} is not a braid generator")


def eval_word(table, w: GroupWord, domain: str) -> ExactMatrix:
    """Product of generator matrices (Laurent or specialized table)."""
    _check_braid_word(table, w)
    result = ExactMatrix.identity(table.dim, domain)
    for gen, e in w.letters:
        m = table.matrix(gen.index, 1 if e > 0 else -1)
        for _ in range(abs(e)):
            result = result @ m
    return result


def lk_eval(table: LKGeneratorTable, w: GroupWord) -> ExactMatrix:
    return eval_word(table, w, "laurent")


def lk_eval_specialized(w: GroupWord, q0, t0) -> ExactMatrix:
    return eval_word(specialized_table(w.genus, Fraction(q0), Fraction(t0)), w, "rational")


def relation_failures(table: LKGeneratorTable) -> list[str]:
    """Names of failing exact checks: inverse pairs, braid relations, far commutations."""
    bad = []
    n = table.dim
    ident = ExactMatrix.identity(n, "laurent")
    m = table.gens
    for k, (a, ainv) in enumerate(zip(table.gens, table.gens_inv), start=1):
        if a @ ainv != ident or ainv @ a != ident:
            bad.append(f"inverse[{k}]")
    for k in range(len(m) - 1):
        if m[k] @ m[k + 1] @ m[k] != m[k + 1] @ m[k] @ m[k + 1]:
            bad.append(f"braid[{k + 1},{k + 2}]")
    for k in range(len(m)):
        for l in range(k + 2, len(m)):
            if m[k] @ m[l] != m[l] @ m[k]:
                bad.append(f"far[{k + 1},{l + 1}]")
    return bad


def braid_word(g: int, letters) -> GroupWord:
    return GroupWord(Alphabet.BRAID, g, tuple((sigma(i), e) for i, e in letters))
