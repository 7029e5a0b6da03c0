"""Presented-group model of the hyperelliptic mapping class group.

Generators ``T1 .. T{g-1}``, ``R``, ``Y``. Every relator of the extended
sphere group is lifted letterwise (``s_i -> T_i``) and multiplied by
``Y^eps``, where ``eps`` comes from the residue table. ``Y`` is a central
involution. Faithfulness claims are relative to this presentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .words import Alphabet, GroupWord, R, Y, project_to_sphere, twist

H = Alphabet.HYPER_MCG


def _w(g: int, letters) -> GroupWord:
    return GroupWord(H, g, tuple(letters))


def sphere_relator_lifts(g: int) -> list[tuple[str, GroupWord]]:
    """Lifts of the extended sphere relators, in a fixed order.

    braid[i]   T_i T_{i+1} T_i T_{i+1}^-1 T_i^-1 T_{i+1}^-1
    far[i,j]   T_i T_j T_i^-1 T_j^-1               (j >= i + 2)
    z          (T_1 ... T_{g-1})^g
    R2         R^2
    conj[i]    R T_i R^-1 T_i
    """
    out = []
    for i in range(1, g - 1):
        a, b = twist(i), twist(i + 1)
        out.append((f"braid[{i}]", _w(g, [(a, 1), (b, 1), (a, 1), (b, -1), (a, -1), (b, -1)])))
    for i in range(1, g):
        for j in range(i + 2, g):
            a, b = twist(i), twist(j)
            out.append((f"far[{i},{j}]", _w(g, [(a, 1), (b, 1), (a, -1), (b, -1)])))
    out.append(("z", _w(g, [(twist(i), 1) for i in range(1, g)] * g)))
    out.append(("R2", _w(g, [(R, 2)])))
    for i in range(1, g):
        out.append((f"conj[{i}]", _w(g, [(R, 1), (twist(i), 1), (R, -1), (twist(i), 1)])))
    return out


def y_relators(g: int) -> list[tuple[str, GroupWord]]:
    out = [("Y2", _w(g, [(Y, 2)]))]
    for i in range(1, g):
        out.append((f"YT[{i}]", _w(g, [(Y, 1), (twist(i), 1), (Y, -1), (twist(i), -1)])))
    out.append(("YR", _w(g, [(Y, 1), (R, 1), (Y, -1), (R, -1)])))
    return out


@dataclass(frozen=True)
class TaggedRelator:
    name: str
    lift: GroupWord
    residue: int | None
    word: GroupWord

    def __str__(self) -> str:
        eps = "-" if self.residue is None else str(self.residue)
        return f"{self.name}\t{eps}\t{self.word}"


@dataclass(frozen=True)
class PresentedGroup:
    genus: int
    relators: tuple[TaggedRelator, ...]
    residues: Mapping[str, int]


def relator_suite(g: int, residues: Mapping[str, int] | None = None) -> list[TaggedRelator]:
    """All defining relators, each tagged with its residue slot.

    ``residues`` defaults to the table derived from the default homology
    model for genus ``g``.
    """
    if residues is None:
        from .homology import default_model

        residues = default_model(g).residues
    out = []
    for name, lift in sphere_relator_lifts(g):
        eps = residues[name]
        word = lift * _w(g, [(Y, eps)]) if eps else lift
        out.append(TaggedRelator(name, lift, eps, word))
    for name, word in y_relators(g):
        out.append(TaggedRelator(name, word, None, word))
    return out


def presented_group(g: int, residues: Mapping[str, int] | None = None) -> PresentedGroup:
    rels = relator_suite(g, residues)
    table = {r.name: r.residue for r in rels if r.residue is not None}
    return PresentedGroup(g, tuple(rels), table)


def y_parity_defined(residues: Mapping[str, int]) -> bool:
    """The number of ``Y`` letters mod 2 is a homomorphism iff every residue is 0."""
    return not any(residues.values())


def y_parity(w: GroupWord) -> int:
    return sum(e for gen, e in w.letters if gen.family == "Y") % 2


def sphere_images(g: int) -> list[GroupWord]:
    return [project_to_sphere(r.word) for r in relator_suite(g)]
