"""Left-greedy Garside normal form for the braid group B_n.

A simple braid (positive permutation braid) is stored as a tuple ``p`` obtained
from ``(0, 1, ..., n-1)`` by swapping positions ``i, i+1`` for each letter
``sigma_{i+1}`` read left to right. Right-multiplying by ``sigma_{i+1}`` swaps
positions; left-multiplying swaps the values ``i`` and ``i+1``.

A braid is ``Delta^k x_1 ... x_r`` with each ``x_j`` a proper, non-identity
simple braid and every adjacent pair left-weighted: the starting set of
``x_{j+1}`` is contained in the finishing set of ``x_j``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import GroupWord, WordError

Perm = tuple[int, ...]


def _identity(n: int) -> Perm:
    return tuple(range(n))


def _delta(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def finishing_set(p: Perm) -> set[int]:
    """Right descents: ``p = p' sigma_{i+1}`` with ``p'`` shorter."""
    return {i for i in range(len(p) - 1) if p[i] > p[i + 1]}


def starting_set(p: Perm) -> set[int]:
    """Left descents: ``p = sigma_{i+1} p'`` with ``p'`` shorter."""
    pos = [0] * len(p)
    for k, v in enumerate(p):
        pos[v] = k
    return {i for i in range(len(p) - 1) if pos[i] > pos[i + 1]}


def _swap_positions(p: Perm, i: int) -> Perm:
    l = list(p)
    l[i], l[i + 1] = l[i + 1], l[i]
    return tuple(l)


def _swap_values(p: Perm, i: int) -> Perm:
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


def tau(p: Perm) -> Perm:
    """Conjugation by the half twist: ``sigma_i -> sigma_{n-i}``."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - k] for k in range(n))


def _left_weight(a: Perm, b: Perm) -> tuple[Perm, Perm, bool]:
    changed = False
    while True:
        moved = starting_set(b) - finishing_set(a)
        if not moved:
            return a, b, changed
        i = min(moved)
        a = _swap_positions(a, i)
        b = _swap_values(b, i)
        changed = True


@dataclass(frozen=True)
class GarsideNormalForm:
    n: int
    delta_power: int
    factors: tuple[Perm, ...]

    def is_trivial(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def __str__(self) -> str:
        parts = [f"Delta^{self.delta_power}"]
        parts.extend(perm_cycles(f) for f in self.factors)
        return " ".join(parts)


def perm_cycles(p: Perm) -> str:
    """One-line cycle notation (1-based) of the map ``k -> p[k]``."""
    seen: set[int] = set()
    out = []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc = [s]
        seen.add(s)
        x = p[s]
        while x != s:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        out.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(out) or "()"


def normalize_factors(n: int, delta_power: int, factors: list[Perm]) -> GarsideNormalForm:
    ident, delta = _identity(n), _delta(n)
    f = list(factors)
    changed = True
    while changed:
        changed = False
        for j in range(len(f) - 1):
            a, b, c = _left_weight(f[j], f[j + 1])
            if c:
                f[j], f[j + 1] = a, b
                changed = True
    lead = 0
    while lead < len(f) and f[lead] == delta:
        lead += 1
    f = [x for x in f[lead:] if x != ident]
    return GarsideNormalForm(n, delta_power + lead, tuple(f))


def normal_form_letters(n: int, letters) -> GarsideNormalForm:
    """Normal form of ``sigma_{i}^{e}`` letters (1-based ``i``, ``e`` = +-1) in B_n, any n >= 2."""
    delta = _delta(n)
    k = 0
    factors: list[Perm] = []
    for i, e in letters:
        if not 1 <= i <= n - 1:
            raise WordError(f"s{i} out of range for B_{n}")
        if e > 0:
            factors.append(_swap_positions(_identity(n), i - 1))
        else:
            # sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); move Delta^-1 to the front
            factors = [tau(x) for x in factors]
            factors.append(_swap_positions(delta, i - 1))
            k -= 1
    return normalize_factors(n, k, factors)


def normal_form(w: GroupWord) -> GarsideNormalForm:
    for gen, _ in w.letters:
        if gen.family != "s":
            raise WordError(f"{gen} is not a braid generator")
    return normal_form_letters(w.genus, [(gen.index, e) for gen, e in w.expanded()])


def is_trivial_braid(w: GroupWord) -> bool:
    return normal_form(w).is_trivial()


def same_braid(a: GroupWord, b: GroupWord) -> bool:
    return normal_form(a) == normal_form(b)
