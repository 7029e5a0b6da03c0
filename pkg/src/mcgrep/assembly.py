"""The assembled representation L = L1 (+) L2 of the hyperelliptic group.

L1 has dimension g^2 - g (twice the Lawrence-Krammer dimension) and kills
exactly the hyperelliptic involution ``Y``; L2 has dimension g - 1 and sends
``Y`` to ``-Id``. Their sum has dimension g^2 - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import DEFAULT_PRECISION, ExactMatrix
from .config import RepConfig
from .homology import HomologyModel, default_model, l2_eval, load_model
from .induced import l1_eval
from .presentation import relator_suite
from .report import CertReport
from .rescale import RescaleUnit, interval_contains_identity, unit_for, wants_interval
from .words import MIN_GENUS, Y, Alphabet, GroupWord, WordError, project_to_sphere


def check_genus(g: int) -> None:
    if g < MIN_GENUS:
        raise ValueError(f"genus must be >= {MIN_GENUS}, got {g}")


@dataclass(frozen=True)
class AssembledRep:
    genus: int
    unit: RescaleUnit
    model: HomologyModel
    mode: str = "auto"
    precision: int = DEFAULT_PRECISION

    @property
    def l1_dim(self) -> int:
        return self.genus * (self.genus - 1)

    @property
    def l2_dim(self) -> int:
        return self.genus - 1

    @property
    def dim(self) -> int:
        return self.l1_dim + self.l2_dim

    @property
    def interval(self) -> bool:
        return wants_interval(self.unit, self.mode)


def homology_model_for(g: int, config: RepConfig) -> HomologyModel:
    """Default model, or the override file when it targets this genus; residue pins applied last."""
    model = None
    if config.homology_override:
        candidate = load_model(config.homology_override)
        if candidate.genus == g:
            model = candidate
    if model is None:
        model = default_model(g, config.consecutive_pairing)
    pins = config.residue_pins
    if pins:
        residues = dict(model.residues)
        residues.update(pins)
        model = model.with_residues(residues)
    return model


def assemble(g: int, config: RepConfig | None = None) -> AssembledRep:
    check_genus(g)
    config = config or RepConfig()
    unit = unit_for(g, config.q0, config.t0, config.precision)
    rep = AssembledRep(g, unit, homology_model_for(g, config), config.mode, config.precision)
    wants_interval(unit, config.mode)  # surface PrecisionExhausted early
    return rep


def _hyper(rep: AssembledRep, w: GroupWord) -> GroupWord:
    if w.alphabet is not Alphabet.HYPER_MCG:
        raise WordError(f"expected a HyperMCG word, got {w.alphabet.value}")
    if w.genus != rep.genus:
        raise WordError(f"word genus {w.genus} != representation genus {rep.genus}")
    return w


def l1_block(rep: AssembledRep, w: GroupWord) -> ExactMatrix:
    return l1_eval(_hyper(rep, w), rep.unit, rep.mode)


def l2_block(rep: AssembledRep, w: GroupWord) -> ExactMatrix:
    return l2_eval(rep.model, _hyper(rep, w))


def l_eval(rep: AssembledRep, w: GroupWord) -> ExactMatrix:
    a = l1_block(rep, w)
    b = l2_block(rep, w)
    if a.domain == "interval":
        b = b.to_interval(rep.precision)
    return ExactMatrix.block_diag(a, b)


def is_identity_image(m: ExactMatrix) -> bool:
    """Exact equality with Id, or certified containment for interval matrices."""
    if m.domain == "interval":
        return interval_contains_identity(m)
    return m.is_identity()


# -- comparison -------------------------------------------------------------

DISTINCT, EQUAL_EXACT, UNCERTIFIED = "distinct", "equal-exact", "uncertified"


@dataclass(frozen=True)
class Verdict:
    kind: str
    witness: str = ""

    def __str__(self) -> str:
        return f"{self.kind}\t{self.witness}" if self.witness else self.kind


def _first_difference(a: ExactMatrix, b: ExactMatrix):
    for i, (ra, rb) in enumerate(zip(a.rows, b.rows)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if a.domain == "interval":
                if not x.overlaps(y):
                    return i, j, x, y
            elif x != y:
                return i, j, x, y
    return None


def compare_words(rep: AssembledRep, a: GroupWord, b: GroupWord) -> Verdict:
    """Homology block first (cheap and always exact), then the L1 block."""
    ha, hb = l2_block(rep, a), l2_block(rep, b)
    d = _first_difference(ha, hb)
    if d:
        i, j, x, y = d
        return Verdict(DISTINCT, f"homology block entry ({i},{j}): {x} vs {y}")
    # equal projections give literally the same L1 computation
    if project_to_sphere(a) != project_to_sphere(b):
        d = _first_difference(l1_block(rep, a), l1_block(rep, b))
        if d:
            i, j, x, y = d
            return Verdict(DISTINCT, f"L1 block entry ({i},{j}): {x} vs {y}")
    if rep.interval:
        return Verdict(UNCERTIFIED, "all entries overlap at the working precision")
    return Verdict(EQUAL_EXACT)


def verify_word_maps(rep: AssembledRep, w: GroupWord, tag: int | None = None) -> CertReport:
    """Y insertions change L2 by a global sign and leave L1 unchanged."""
    out = CertReport()
    w = _hyper(rep, w)
    base1, base2 = l1_block(rep, w), l2_block(rep, w)
    letters = w.expanded()
    bad1, bad2 = [], []
    for pos in range(len(letters) + 1):
        v = GroupWord(w.alphabet, w.genus, tuple(letters[:pos]) + ((Y, 1),) + tuple(letters[pos:]))
        if l1_block(rep, v) != base1:
            bad1.append(pos)
        if l2_block(rep, v) != rep.model.C @ base2:
            bad2.append(pos)
    out.add("word_maps:l1_ignores_Y", not bad1, f"{w}: positions {bad1}" if bad1 else str(w), tag)
    out.add("word_maps:l2_sign", not bad2, f"{w}: positions {bad2}" if bad2 else str(w), tag)
    for rel in relator_suite(rep.genus, rep.model.residues):
        if rel.word == w:
            ok = is_identity_image(base1)
            out.add(f"word_maps:relator_l1:{rel.name}", ok, str(w) if ok else f"L1({w}) is not Id", tag)
    return out


# -- dimensions -------------------------------------------------------------


def _naive_sum(g):
    return 2 * g * comb(2 * g - 1, 2) + 2 * (g - 1)


def _naive_closed(g):
    return 2 * (g - 1) * (2 * g * g - g + 1)


def _poly_sum(g: Fraction) -> Fraction:
    # 2g * C(2g-1, 2) written as a polynomial so it can be sampled anywhere
    return 2 * g * (2 * g - 1) * (2 * g - 2) / 2 + 2 * (g - 1)


def naive_identity_holds() -> bool:
    """Both sides are cubics in g, so agreement at four points is a proof."""
    return all(_poly_sum(Fraction(x)) == _naive_closed(Fraction(x)) for x in range(4))


@dataclass(frozen=True)
class DimensionReport:
    genus: int
    main: int
    naive: int
    naive_sum: int
    identity_holds: bool

    @property
    def ok(self) -> bool:
        g = self.genus
        return (
            self.identity_holds
            and self.naive == self.naive_sum
            and self.main == (g * g - g) + (g - 1) == g * g - 1
        )

    def as_tuple(self) -> tuple[int, int]:
        return self.main, self.naive


def dimension_report(g: int) -> DimensionReport:
    check_genus(g)
    return DimensionReport(g, g * g - 1, _naive_closed(g), _naive_sum(g), naive_identity_holds())


# -- export -----------------------------------------------------------------

FORMATS = ("json", "csv")


def export_matrix(m: ExactMatrix, path: str, fmt: str = "json") -> None:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    text = m.to_json() + "\n" if fmt == "json" else m.to_csv()
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def import_matrix(path: str, fmt: str = "json") -> ExactMatrix:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    with open(path, encoding="utf-8", newline="") as fh:
        text = fh.read()
    return ExactMatrix.from_json(text) if fmt == "json" else ExactMatrix.from_csv(text)


def relator_images(rep: AssembledRep):
    """(relator, image) for every relator of the presented group."""
    for rel in relator_suite(rep.genus, rep.model.residues):
        yield rel, l_eval(rep, rel.word)
