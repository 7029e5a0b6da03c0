"""The (g-1)-dimensional homology representation L2.

Default model, in the basis of chain vectors ``c_1 .. c_{g-1}``:

* ``J`` is antisymmetric with ``J[i][i+1] = p``, ``J[i+1][i] = -p`` (``p`` is
  the configured consecutive pairing, +-1) and zero elsewhere;
* ``T_i`` acts by the transvection ``x -> x + (x^T J c_i) c_i``;
* ``R`` acts by ``diag(1, -1, 1, ...)``, which reverses ``J`` and fixes each
  chain line, so it conjugates every transvection to its inverse;
* ``Y`` acts by ``-Id``.

Any user-supplied model is accepted as long as :func:`residue_check` passes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .algebra import ExactMatrix
from .presentation import sphere_relator_lifts
from .report import CertReport
from .words import Alphabet, GroupWord, WordError


class InconsistentDefaults(ValueError):
    pass


@dataclass(frozen=True)
class HomologyModel:
    genus: int
    A: tuple[ExactMatrix, ...]
    B: ExactMatrix
    C: ExactMatrix
    J: ExactMatrix
    residues: Mapping[str, int] = field(default_factory=dict)
    chain: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        inv = {m: m.inverse() for m in (*self.A, self.B, self.C)}
        object.__setattr__(self, "_inv", inv)

    @property
    def dim(self) -> int:
        return self.genus - 1

    def generator(self, family: str, index: int, sign: int) -> ExactMatrix:
        if family == "T":
            m = self.A[index - 1]
        elif family == "R":
            m = self.B
        elif family == "Y":
            m = self.C
        else:
            raise WordError(f"{family}{index or ''} is not a HyperMCG generator")
        return m if sign > 0 else self._inv[m]

    def with_residues(self, residues: Mapping[str, int]) -> HomologyModel:
        return self.replace(residues=dict(residues))

    def replace(self, **kw) -> HomologyModel:
        d = dict(genus=self.genus, A=self.A, B=self.B, C=self.C, J=self.J, residues=self.residues, chain=self.chain)
        d.update(kw)
        return HomologyModel(**d)

    def __hash__(self) -> int:
        return hash((self.genus, self.A, self.B, self.C, self.J))


def l2_eval(model: HomologyModel, w: GroupWord) -> ExactMatrix:
    if w.alphabet is not Alphabet.HYPER_MCG:
        raise WordError("l2_eval expects a HyperMCG word")
    if w.genus != model.genus:
        raise WordError(f"word genus {w.genus} != model genus {model.genus}")
    out = ExactMatrix.identity(model.dim)
    for gen, e in w.letters:
        m = model.generator(gen.family, gen.index, 1 if e > 0 else -1)
        for _ in range(abs(e)):
            out = out @ m
    return out


def _transvection(J: list[list[int]], c: Sequence[int]) -> ExactMatrix:
    n = len(c)
    jc = [sum(J[r][s] * c[s] for s in range(n)) for r in range(n)]
    return ExactMatrix([[int(r == s) + c[r] * jc[s] for s in range(n)] for r in range(n)])


def _classify(m: ExactMatrix, C: ExactMatrix) -> int | None:
    if m.is_identity():
        return 0
    if m == C:
        return 1
    return None


@lru_cache(maxsize=None)
def default_model(g: int, pairing: int = 1) -> HomologyModel:
    if g < 4:
        raise ValueError(f"genus must be >= 4, got {g}")
    if pairing not in (1, -1):
        raise ValueError("consecutive pairing must be +1 or -1")
    d = g - 1
    J = [[0] * d for _ in range(d)]
    for i in range(d - 1):
        J[i][i + 1] = pairing
        J[i + 1][i] = -pairing
    chain = tuple(tuple(int(r == i) for r in range(d)) for i in range(d))
    A = tuple(_transvection(J, c) for c in chain)
    B = ExactMatrix([[(-1) ** r if r == s else 0 for s in range(d)] for r in range(d)])
    C = -ExactMatrix.identity(d)
    model = HomologyModel(g, A, B, C, ExactMatrix(J), {}, chain)
    residues = {}
    for name, lift in sphere_relator_lifts(g):
        eps = _classify(l2_eval(model, lift), C)
        if eps is None:
            raise InconsistentDefaults(f"genus {g}: relator {name} maps outside {{Id, -Id}}")
        residues[name] = eps
    return model.with_residues(residues)


def _witness_vs(m: ExactMatrix, target: ExactMatrix) -> str:
    for i in range(m.dim):
        for j in range(m.dim):
            if m[i, j] != target[i, j]:
                return f"entry ({i},{j}) = {m[i, j]}, expected {target[i, j]}"
    return ""


def residue_check(model: HomologyModel, genus_tag: int | None = None) -> CertReport:
    rep = CertReport()
    g = model.genus
    n = model.dim
    ident = ExactMatrix.identity(n)
    C = model.C

    rep.add("homology:C_involution", C @ C == ident, _witness_vs(C @ C, ident), genus_tag)
    wit = ""
    for k, a in enumerate((*model.A, model.B)):
        if C @ a != a @ C:
            wit = f"C does not commute with {'A' + str(k + 1) if k < len(model.A) else 'B'}"
            break
    rep.add("homology:C_central", not wit, wit, genus_tag)
    sep = _witness_vs(C, ident)
    rep.add("homology:separation", C != ident, sep or "C = Id, so Y lies in the kernel", genus_tag)
    bad_det = []
    for name, m in [(f"A{k + 1}", a) for k, a in enumerate(model.A)] + [("B", model.B), ("C", C)]:
        d = m.determinant()
        if d not in (1, -1):
            bad_det.append(f"det {name} = {d}")
    rep.add("homology:unimodular", not bad_det, "; ".join(bad_det), genus_tag)

    for name, lift in sphere_relator_lifts(g):
        img = l2_eval(model, lift)
        eps = model.residues.get(name)
        if eps is None:
            rep.add(f"homology:relator:{name}", False, "no residue recorded", genus_tag)
            continue
        target = C if eps else ident
        if img == target:
            rep.add(f"homology:relator:{name}", True, f"eps={eps}", genus_tag)
        elif _classify(img, C) is not None:
            rep.add(
                f"homology:relator:{name}",
                False,
                f"image is C^{_classify(img, C)} but residue table says {eps}",
                genus_tag,
            )
        else:
            rep.add(f"homology:relator:{name}", False, "image not in {Id, C}: " + _witness_vs(img, target), genus_tag)
    return rep


# -- override files ---------------------------------------------------------


def _mat(rows) -> ExactMatrix:
    return ExactMatrix([[_num(x) for x in r] for r in rows])


def _num(x):
    f = Fraction(str(x))
    return f.numerator if f.denominator == 1 else f


def _rows(m: ExactMatrix) -> list[list[str]]:
    return [[str(Fraction(v)) for v in r] for r in m.rows]


def model_from_json_obj(obj: dict) -> HomologyModel:
    g = int(obj["g"])
    A = tuple(_mat(a) for a in obj["A"])
    if len(A) != g - 1:
        raise ValueError(f"expected {g - 1} A matrices, got {len(A)}")
    for m in (*A, _mat(obj["B"]), _mat(obj["C"])):
        if m.dim != g - 1:
            raise ValueError(f"homology matrices must be {g - 1}x{g - 1}")
    J = _mat(obj["J"]) if "J" in obj else ExactMatrix.zeros(g - 1)
    residues = {str(k): int(v) for k, v in obj.get("residues", {}).items()}
    model = HomologyModel(g, A, _mat(obj["B"]), _mat(obj["C"]), J, residues)
    if not residues:
        computed = {}
        for name, lift in sphere_relator_lifts(g):
            eps = _classify(l2_eval(model, lift), model.C)
            if eps is not None:
                computed[name] = eps
        model = model.with_residues(computed)
    return model


def load_model(path: str) -> HomologyModel:
    with open(path, encoding="utf-8") as fh:
        return model_from_json_obj(json.load(fh))


def model_to_json_obj(model: HomologyModel) -> dict:
    return {
        "g": model.genus,
        "A": [_rows(a) for a in model.A],
        "B": _rows(model.B),
        "C": _rows(model.C),
        "J": _rows(model.J),
        "residues": dict(model.residues),
    }
