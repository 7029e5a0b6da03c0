"""Index-2 induction from the braid quotient to the extended sphere group.

The extended group is modelled as a semidirect product: ``R`` is an
involution and ``R s_i R = s_i^-1``. With coset representatives ``{1, R}``::

    Ind(u)   = [[L'(u), 0], [0, L'(bar u)]]
    Ind(u R) = [[0, L'(u)], [L'(bar u), 0]]

where ``bar`` inverts every generator exponent in place.
"""

from __future__ import annotations

from .algebra import ExactMatrix
from .rescale import RescaleUnit, lprime_eval, wants_interval
from .words import Alphabet, GroupWord, WordError, project_to_sphere


def bar(u: GroupWord) -> GroupWord:
    return GroupWord(u.alphabet, u.genus, tuple((gen, -e) for gen, e in u.letters))


def split_by_orientation(w: GroupWord) -> tuple[GroupWord, int]:
    """Rewrite ``w`` as ``u R^eps`` by pushing every ``R`` to the right."""
    if w.alphabet is Alphabet.HYPER_MCG:
        raise WordError("project HyperMCG words to the sphere first")
    flipped = False
    out = []
    for gen, e in w.letters:
        if gen.family == "R":
            flipped ^= bool(e % 2)
        else:
            out.append((gen, -e if flipped else e))
    return GroupWord(Alphabet.BRAID, w.genus, tuple(out)), -1 if flipped else 1


def induced_eval(w: GroupWord, unit: RescaleUnit, mode: str = "auto") -> ExactMatrix:
    u, sign = split_by_orientation(w)
    top = lprime_eval(u, unit, mode)
    bottom = lprime_eval(bar(u), unit, mode)
    if sign > 0:
        return ExactMatrix.block_diag(top, bottom)
    return ExactMatrix.two_by_two([[None, top], [bottom, None]])


def l1_eval(w: GroupWord, unit: RescaleUnit, mode: str = "auto") -> ExactMatrix:
    """L1 on the hyperelliptic group: induce after killing ``Y``."""
    return induced_eval(project_to_sphere(w), unit, mode)


def block_structure(m: ExactMatrix) -> str:
    """``diagonal``, ``antidiagonal`` or ``mixed`` for a 2x2 block matrix."""
    h = m.dim // 2
    rows = m.rows
    off_diag = any(rows[i][j] for i in range(h) for j in range(h, 2 * h)) or any(
        rows[i][j] for i in range(h, 2 * h) for j in range(h)
    )
    diag = any(rows[i][j] for i in range(h) for j in range(h)) or any(
        rows[i][j] for i in range(h, 2 * h) for j in range(h, 2 * h)
    )
    if diag and not off_diag:
        return "diagonal"
    if off_diag and not diag:
        return "antidiagonal"
    return "mixed"


def is_interval_mode(unit: RescaleUnit, mode: str) -> bool:
    return wants_interval(unit, mode)
