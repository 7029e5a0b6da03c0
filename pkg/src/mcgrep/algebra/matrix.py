"""Dense square matrices over one exact scalar domain.

Domains are ``rational`` (int / Fraction entries), ``laurent``
(:class:`LaurentPoly`) and ``interval`` (:class:`CertInterval`). There is no
general inversion; callers supply inverses from group structure.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .interval import DEFAULT_PRECISION, CertInterval
from .laurent import LaurentPoly

DOMAINS = ("rational", "laurent", "interval")


class DomainError(ValueError):
    """Operands live in different scalar domains or shapes."""


def _zero(domain: str, precision: int = DEFAULT_PRECISION):
    if domain == "laurent":
        return LaurentPoly.const(0)
    if domain == "interval":
        return CertInterval.point(0, precision)
    return 0


def _one(domain: str, precision: int = DEFAULT_PRECISION):
    if domain == "laurent":
        return LaurentPoly.const(1)
    if domain == "interval":
        return CertInterval.point(1, precision)
    return 1


class ExactMatrix:
    __slots__ = ("dim", "domain", "rows", "_sparse")

    def __init__(self, rows: Sequence[Sequence], domain: str = "rational"):
        if domain not in DOMAINS:
            raise DomainError(f"unknown domain {domain!r}")
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DomainError("matrix must be square")
        self.dim = n
        self.domain = domain
        self.rows = rows
        self._sparse = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int, domain: str = "rational", precision: int = DEFAULT_PRECISION) -> ExactMatrix:
        z, o = _zero(domain, precision), _one(domain, precision)
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], domain)

    @classmethod
    def zeros(cls, n: int, domain: str = "rational", precision: int = DEFAULT_PRECISION) -> ExactMatrix:
        z = _zero(domain, precision)
        return cls([[z] * n for _ in range(n)], domain)

    @classmethod
    def from_columns(cls, columns: Sequence[dict[int, object]], domain: str) -> ExactMatrix:
        """Build from sparse column images ``{row: entry}``."""
        n = len(columns)
        z = _zero(domain)
        rows = [[z] * n for _ in range(n)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                rows[i][j] = rows[i][j] + v
        return cls(rows, domain)

    @classmethod
    def block_diag(cls, *blocks: ExactMatrix) -> ExactMatrix:
        domain = _common_domain(blocks)
        precision = _precision_of(blocks)
        n = sum(b.dim for b in blocks)
        z = _zero(domain, precision)
        rows = [[z] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i, r in enumerate(b.rows):
                rows[off + i][off : off + b.dim] = list(r)
            off += b.dim
        return cls(rows, domain)

    @classmethod
    def two_by_two(cls, blocks: Sequence[Sequence[ExactMatrix | None]]) -> ExactMatrix:
        """Assemble a 2x2 block matrix; ``None`` marks a zero block."""
        present = [b for row in blocks for b in row if b is not None]
        domain = _common_domain(present)
        precision = _precision_of(present)
        m = present[0].dim
        z = _zero(domain, precision)
        rows = [[z] * (2 * m) for _ in range(2 * m)]
        for bi in range(2):
            for bj in range(2):
                b = blocks[bi][bj]
                if b is None:
                    continue
                for i, r in enumerate(b.rows):
                    rows[bi * m + i][bj * m : bj * m + m] = list(r)
        return cls(rows, domain)

    # -- access ---------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.rows[i][j]

    def block(self, r0: int, c0: int, size: int) -> ExactMatrix:
        return ExactMatrix([row[c0 : c0 + size] for row in self.rows[r0 : r0 + size]], self.domain)

    def _sparse_rows(self) -> list[list[tuple[int, object]]]:
        if self._sparse is None:
            self._sparse = [[(j, v) for j, v in enumerate(r) if v] for r in self.rows]
        return self._sparse

    def map(self, f: Callable, domain: str | None = None) -> ExactMatrix:
        return ExactMatrix([[f(v) for v in r] for r in self.rows], domain or self.domain)

    def nonzero_pattern(self) -> list[list[bool]]:
        return [[bool(v) for v in r] for r in self.rows]

    # -- arithmetic -----------------------------------------------------

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise DomainError(f"dimension mismatch {self.dim} vs {other.dim}")
        if self.domain != other.domain:
            raise DomainError(f"domain mismatch {self.domain} vs {other.domain}")
        n = self.dim
        z = _zero(self.domain, _precision_of((self, other)))
        bsp = other._sparse_rows()
        out = []
        for row in self._sparse_rows():
            acc = [z] * n
            for k, a in row:
                for j, b in bsp[k]:
                    acc[j] = acc[j] + a * b
            out.append(acc)
        return ExactMatrix(out, self.domain)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.dim != other.dim or self.domain != other.domain:
            raise DomainError("addition needs matching shape and domain")
        return ExactMatrix([[x + y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)], self.domain)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + (-other)

    def __mul__(self, scalar) -> ExactMatrix:
        return self.map(lambda v: v * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> ExactMatrix:
        return self.map(lambda v: -v)

    def __pow__(self, k: int) -> ExactMatrix:
        if k < 0:
            raise ValueError("negative powers need an explicit inverse")
        result = ExactMatrix.identity(self.dim, self.domain, _precision_of((self,)))
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.domain == other.domain and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.domain, self.rows))

    def is_identity(self) -> bool:
        if self.domain == "interval":
            raise DomainError("interval matrices cannot be certified equal to the identity")
        return all(
            (v == 1) if i == j else (not v) for i, r in enumerate(self.rows) for j, v in enumerate(r)
        )

    def scalar_value(self):
        """The common diagonal entry if the matrix is scalar, else ``None``."""
        d = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, v in enumerate(r):
                if i == j:
                    if v != d:
                        return None
                elif v:
                    return None
        return d

    def first_offscalar_entry(self):
        """Witness ``(i, j, value)`` showing the matrix is not scalar, or ``None``."""
        d = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, v in enumerate(r):
                if (i == j and v != d) or (i != j and v):
                    return (i, j, v)
        return None

    def specialize(self, q0, t0) -> ExactMatrix:
        if self.domain != "laurent":
            raise DomainError("only Laurent matrices can be specialized")
        return self.map(lambda p: p.specialize(q0, t0), "rational")

    def to_interval(self, precision: int = DEFAULT_PRECISION) -> ExactMatrix:
        if self.domain == "interval":
            return self
        if self.domain != "rational":
            raise DomainError("only rational matrices embed into intervals")
        return self.map(lambda v: CertInterval.point(v, precision), "interval")

    def determinant(self):
        """Exact determinant of a rational matrix (fraction-free Bareiss on Fractions)."""
        if self.domain != "rational":
            raise DomainError("determinant is only provided for rational matrices")
        a = [[Fraction(v) for v in r] for r in self.rows]
        n = self.dim
        det = Fraction(1)
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            det *= a[c][c]
            for r in range(c + 1, n):
                f = a[r][c] / a[c][c]
                if f:
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return det

    def inverse(self) -> ExactMatrix:
        """Gauss-Jordan inverse; rational matrices only."""
        if self.domain != "rational":
            raise DomainError("inverse is only provided for rational matrices")
        n = self.dim
        a = [[Fraction(v) for v in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                raise ZeroDivisionError("matrix is singular")
            a[c], a[p] = a[p], a[c]
            piv = a[c][c]
            a[c] = [x / piv for x in a[c]]
            for r in range(n):
                if r != c and a[r][c]:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return ExactMatrix([[_norm(x) for x in r[n:]] for r in a], "rational")

    def __repr__(self) -> str:
        return f"ExactMatrix(dim={self.dim}, domain={self.domain!r})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in r) for r in self.rows)

    # -- serialization --------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "dim": self.dim,
            "domain": self.domain,
            "entries": [_encode(v, self.domain) for r in self.rows for v in r],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict, precision: int = DEFAULT_PRECISION) -> ExactMatrix:
        n = int(obj["dim"])
        domain = obj["domain"]
        flat = obj["entries"]
        if len(flat) != n * n:
            raise DomainError(f"expected {n * n} entries, got {len(flat)}")
        vals = [_decode(e, domain, precision) for e in flat]
        return cls([vals[i * n : (i + 1) * n] for i in range(n)], domain)

    @classmethod
    def from_json(cls, text: str) -> ExactMatrix:
        return cls.from_json_obj(json.loads(text))

    def to_csv(self) -> str:
        if self.domain != "rational":
            raise DomainError("csv export is restricted to rational matrices")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r in self.rows:
            w.writerow([_rat_str(v) for v in r])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> ExactMatrix:
        rows = [[_norm(Fraction(x)) for x in r] for r in csv.reader(io.StringIO(text)) if r]
        return cls(rows, "rational")


def _norm(x: Fraction):
    return x.numerator if x.denominator == 1 else x


def _rat_str(v) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def _encode(v, domain: str):
    if domain == "rational":
        return _rat_str(v)
    if domain == "laurent":
        return [[a, b, _rat_str(c)] for (a, b), c in v.items()]
    return [_rat_str(v.lo), _rat_str(v.hi)]


def _decode(e, domain: str, precision: int):
    if domain == "rational":
        return _norm(Fraction(e))
    if domain == "laurent":
        return LaurentPoly({(int(a), int(b)): _norm(Fraction(c)) for a, b, c in e})
    if domain == "interval":
        return CertInterval(Fraction(e[0]), Fraction(e[1]), precision)
    raise DomainError(f"unknown domain {domain!r}")


def _common_domain(mats: Iterable[ExactMatrix]) -> str:
    domains = {m.domain for m in mats}
    if len(domains) != 1:
        raise DomainError(f"mixed domains {sorted(domains)}")
    return domains.pop()


def _precision_of(mats: Iterable[ExactMatrix]) -> int:
    for m in mats:
        if m.domain == "interval" and m.dim:
            return m.rows[0][0].precision
    return DEFAULT_PRECISION
