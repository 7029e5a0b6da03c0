"""The certification suite behind ``mcgrep certify``.

Every check is a top-level function ``(g, config) -> list[CheckResult]`` with
its own RNG seeded from ``(seed, genus, check name)``, so results do not
depend on scheduling. With ``jobs > 1`` checks run in a process pool and are
reassembled in the fixed order of :data:`CHECKS`.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from .algebra import ExactMatrix, interval_ne_identity
from .assembly import (
    DISTINCT,
    assemble,
    check_genus,
    compare_words,
    dimension_report,
    homology_model_for,
    is_identity_image,
    l1_block,
    l2_block,
    l_eval,
    relator_images,
    verify_word_maps,
)
from .config import RepConfig
from .garside import normal_form
from .homology import residue_check
from .induced import block_structure, induced_eval, split_by_orientation
from .lk import build_lk_table, lk_eval, relation_failures
from .presentation import y_parity, y_parity_defined
from .report import FAIL, PASS, UNCERTIFIED, CertReport, CheckResult
from .rescale import (
    check_scalarity,
    interval_contains_identity,
    kernel_words,
    lprime_eval,
    wants_interval,
)
from .words import R, Y, Alphabet, GroupWord, invert, perm_orient, random_word, sigma

B = Alphabet.BRAID


def check_rng(config: RepConfig, g: int, name: str) -> random.Random:
    return random.Random(f"{config.seed}:{g}:{name}")


def _res(name: str, ok: bool, witness: str, g: int) -> CheckResult:
    return CheckResult(name, PASS if ok else FAIL, witness, g)


def _first_off_identity(m: ExactMatrix) -> str:
    for i, r in enumerate(m.rows):
        for j, v in enumerate(r):
            want = 1 if i == j else 0
            bad = v.excludes(want) if m.domain == "interval" else v != want
            if bad:
                return f"entry ({i},{j}) = {v}, expected {want}"
    return "interval enclosure does not certify the identity"


def _is_point_identity(m: ExactMatrix) -> bool:
    """Exact identity, including degenerate interval matrices."""
    if m.domain != "interval":
        return m.is_identity()
    return all(
        v.lo == v.hi == (1 if i == j else 0) for i, r in enumerate(m.rows) for j, v in enumerate(r)
    )


# -- samples ----------------------------------------------------------------


def braid_relators(g: int) -> list[GroupWord]:
    out = []
    for i in range(1, g - 1):
        a, b = sigma(i), sigma(i + 1)
        out.append(GroupWord(B, g, ((a, 1), (b, 1), (a, 1), (b, -1), (a, -1), (b, -1))))
    for i in range(1, g):
        for j in range(i + 2, g):
            a, b = sigma(i), sigma(j)
            out.append(GroupWord(B, g, ((a, 1), (b, 1), (a, -1), (b, -1))))
    return out


def agreement_sample(g: int, count: int, max_length: int, rng: random.Random) -> list[GroupWord]:
    """Alternates random braid words with conjugated relators ``u r u^-1``,
    so both sides of the word problem are exercised. Letter counts stay
    within ``max_length``."""
    rels = braid_relators(g)
    out = []
    for k in range(count):
        if k % 2 == 0:
            out.append(random_word(B, g, rng.randint(0, max_length), rng))
        else:
            r = rng.choice(rels)
            room = max(0, (max_length - len(r.expanded())) // 2)
            u = random_word(B, g, rng.randint(0, room), rng)
            out.append(u * r * invert(u))
    return out


def center_sample(g: int, count: int, rng: random.Random) -> list[GroupWord]:
    """Words ``u z^k r u^-1`` (``r`` a relator or empty) mixed with random words."""
    z = kernel_words(g).z
    rels = braid_relators(g) + [GroupWord(B, g, ())]
    out = []
    for k in range(count):
        if k % 3 == 0:
            out.append(random_word(B, g, rng.randint(1, 12), rng))
            continue
        u = random_word(B, g, rng.randint(0, 5), rng)
        zk = z ** rng.choice((-1, 1, 2)) if k % 3 == 1 else GroupWord(B, g, ())
        extra = random_word(B, g, 1, rng) if k % 6 == 2 else GroupWord(B, g, ())
        out.append(u * zk * rng.choice(rels) * extra * invert(u))
    return out


def _invariants(w: GroupWord, with_parity: bool):
    po = perm_orient(w)
    return (po.perm, po.orient, y_parity(w) if with_parity else None)


def separation_pairs(
    g: int, count: int, max_length: int, rng: random.Random, with_parity: bool
) -> list[tuple[GroupWord, GroupWord]]:
    """Random HyperMCG pairs whose cheap invariants differ."""
    H = Alphabet.HYPER_MCG
    out = []
    while len(out) < count:
        a = random_word(H, g, rng.randint(1, max_length), rng)
        b = random_word(H, g, rng.randint(1, max_length), rng)
        if _invariants(a, with_parity) != _invariants(b, with_parity):
            out.append((a, b))
    return out


# -- checks -----------------------------------------------------------------


def check_lk_relations(g: int, config: RepConfig) -> list[CheckResult]:
    bad = relation_failures(build_lk_table(g))
    return [_res("lk:relations", not bad, ", ".join(bad) or "inverse, braid and far relations exact", g)]


def check_garside(g: int, config: RepConfig) -> list[CheckResult]:
    table = build_lk_table(g)
    words = agreement_sample(g, config.garside_words, config.garside_max_length, check_rng(config, g, "garside"))
    trivial = 0
    for w in words:
        nf = normal_form(w)
        trivial += nf.is_trivial()
        if lk_eval(table, w).is_identity() != nf.is_trivial():
            return [_res("garside:agreement", False, f"{w}: normal form {nf}", g)]
    return [_res("garside:agreement", True, f"{len(words)} words, {trivial} trivial, 0 disagreements", g)]


def check_scalarity_and_unit(g: int, config: RepConfig) -> list[CheckResult]:
    out = []
    try:
        sc = check_scalarity(build_lk_table(g), config.q0, config.t0)
    except ArithmeticError as exc:
        return [_res("scalarity:z", False, str(exc), g)]
    out.append(_res("scalarity:z", True, f"lambda_z = {sc.lam_z}", g))
    # tau is not in the kernel of the capping map; confirm that its image is not scalar
    out.append(_res("scalarity:tau_excluded", sc.lam_tau is None, sc.consistency, g))

    rep = assemble(g, config)
    unit = rep.unit
    n = unit.exponent
    if unit.is_exact:
        ok = unit.exact**n == sc.lam_z
        wit = f"c = {unit.exact}, c^{n} = {unit.exact ** n}"
    else:
        ok = (unit.interval**n).contains(sc.lam_z)
        wit = f"c in {unit.interval} (width {float(unit.interval.width):.3g}), c^{n} encloses {sc.lam_z}"
    out.append(_res("rescale:unit", ok, wit, g))

    z = kernel_words(g).z
    m = lprime_eval(z, unit, config.mode)
    ok = is_identity_image(m)
    wit = ("L'(z) encloses Id" if m.domain == "interval" else "L'(z) = Id") if ok else _first_off_identity(m)
    out.append(_res("rescale:kernel_z", ok, wit, g))
    return out


def check_center(g: int, config: RepConfig) -> list[CheckResult]:
    """L'(w) = Id exactly when w is a power of the full twist."""
    rep = assemble(g, config)
    interval = wants_interval(rep.unit, config.mode)
    words = center_sample(g, config.center_words, check_rng(config, g, "center"))
    central = uncertified = 0
    for w in words:
        nf = normal_form(w)
        is_central = not nf.factors and nf.delta_power % 2 == 0
        central += is_central
        m = lprime_eval(w, rep.unit, config.mode)
        if interval:
            if is_central and not interval_contains_identity(m):
                return [_res("rescale:center", False, f"{w}: central but {_first_off_identity(m)}", g)]
            if not is_central and not interval_ne_identity(m):
                uncertified += 1
        elif m.is_identity() != is_central:
            return [_res("rescale:center", False, f"{w}: normal form {nf}, L' identity = {m.is_identity()}", g)]
    wit = f"{len(words)} words, {central} central"
    if uncertified:
        return [CheckResult("rescale:center", UNCERTIFIED, f"{wit}, {uncertified} not certified", g)]
    return [_res("rescale:center", True, wit, g)]


def check_induced(g: int, config: RepConfig) -> list[CheckResult]:
    rep = assemble(g, config)
    unit, mode = rep.unit, config.mode
    rng = check_rng(config, g, "induced")
    S = Alphabet.SPHERE_EXT
    out = []
    bad = ""
    for _ in range(config.induced_words):
        w = random_word(S, g, rng.randint(0, 12), rng)
        _, sign = split_by_orientation(w)
        shape = block_structure(induced_eval(w, unit, mode))
        if shape != ("diagonal" if sign > 0 else "antidiagonal"):
            bad = f"{w}: sign {sign:+d} but {shape}"
            break
    out.append(_res("induced:block_structure", not bad, bad or f"{config.induced_words} words", g))

    r = induced_eval(GroupWord(S, g, ((R, 1),)), unit, mode)
    sq = r @ r
    ok = _is_point_identity(sq)
    out.append(_res("induced:R_involution", ok, "Ind(R)^2 = Id" if ok else _first_off_identity(sq), g))

    bad = ""
    for _ in range(config.homomorphism_pairs):
        a = random_word(S, g, rng.randint(0, 8), rng)
        b = random_word(S, g, rng.randint(0, 8), rng)
        lhs = induced_eval(a * b, unit, mode)
        rhs = induced_eval(a, unit, mode) @ induced_eval(b, unit, mode)
        if lhs.domain == "interval":
            clash = any(not x.overlaps(y) for ra, rb in zip(lhs.rows, rhs.rows) for x, y in zip(ra, rb))
        else:
            clash = lhs != rhs
        if clash:
            bad = f"Ind({a} * {b}) != Ind({a}) Ind({b})"
            break
    out.append(_res("induced:homomorphism", not bad, bad or f"{config.homomorphism_pairs} pairs", g))
    return out


def check_homology(g: int, config: RepConfig) -> list[CheckResult]:
    return list(residue_check(homology_model_for(g, config), g).entries)


def check_relators(g: int, config: RepConfig) -> list[CheckResult]:
    rep = assemble(g, config)
    out = []
    for rel, img in relator_images(rep):
        ok = is_identity_image(img)
        out.append(_res(f"relator:{rel.name}", ok, str(rel.word) if ok else f"{rel.word}: {_first_off_identity(img)}", g))
    return out


def check_separation(g: int, config: RepConfig) -> list[CheckResult]:
    rep = assemble(g, config)
    y = GroupWord(Alphabet.HYPER_MCG, g, ((Y, 1),))
    a, b = l1_block(rep, y), l2_block(rep, y)
    full = l_eval(rep, y)
    a_ok = _is_point_identity(a)
    b_ok = b == -ExactMatrix.identity(rep.l2_dim)
    out = [
        _res("separation:l1_kills_Y", a_ok, "L1(Y) = Id" if a_ok else _first_off_identity(a), g),
        _res("separation:l2_Y", b_ok, "L2(Y) = -Id" if b_ok else f"L2(Y) = {b.rows}", g),
    ]
    wit = _first_off_identity(full)
    if full.domain == "interval":
        certified_ne = interval_ne_identity(full)
    else:
        certified_ne = not full.is_identity()
    out.append(_res("separation:L_Y_nontrivial", certified_ne, f"L(Y) {wit}" if certified_ne else "L(Y) = Id", g))
    sq = full @ full
    ok = is_identity_image(sq)
    out.append(_res("separation:L_Y_involution", ok, "L(Y)^2 = Id" if ok else _first_off_identity(sq), g))
    return out


def check_dimensions(g: int, config: RepConfig) -> list[CheckResult]:
    rep = assemble(g, config)
    d = dimension_report(g)
    m = l_eval(rep, GroupWord(Alphabet.HYPER_MCG, g, ()))
    ok = d.ok and m.dim == rep.dim == d.main
    wit = f"({g * g - g}) + ({g - 1}) = {d.main}; evaluated {m.dim}; naive {d.naive}"
    return [_res("dimension", ok, wit, g)]


def check_word_maps(g: int, config: RepConfig) -> list[CheckResult]:
    rep = assemble(g, config)
    rng = check_rng(config, g, "word_maps")
    bad: list[CheckResult] = []
    for _ in range(config.word_map_samples):
        w = random_word(Alphabet.HYPER_MCG, g, rng.randint(0, 8), rng)
        bad.extend(r for r in verify_word_maps(rep, w, g).entries if not r.ok)
    if bad:
        return bad[:2]
    return [_res("word_maps", True, f"{config.word_map_samples} words, every Y insertion", g)]


def check_invariant_separation(g: int, config: RepConfig) -> list[CheckResult]:
    rep = assemble(g, config)
    with_parity = y_parity_defined(rep.model.residues)
    pairs = separation_pairs(
        g, config.separation_pairs, config.separation_max_length, check_rng(config, g, "separation"), with_parity
    )
    for a, b in pairs:
        v = compare_words(rep, a, b)
        if v.kind != DISTINCT:
            return [_res("separation:invariant_pairs", False, f"({a}) vs ({b}): {v}", g)]
    inv = "permutation, orientation, Y-parity" if with_parity else "permutation, orientation"
    return [_res("separation:invariant_pairs", True, f"{len(pairs)} pairs with distinct ({inv}) all distinct", g)]


CHECKS: list[tuple[str, Callable[[int, RepConfig], list[CheckResult]]]] = [
    ("lk", check_lk_relations),
    ("garside", check_garside),
    ("scalarity", check_scalarity_and_unit),
    ("center", check_center),
    ("induced", check_induced),
    ("homology", check_homology),
    ("relators", check_relators),
    ("separation", check_separation),
    ("dimension", check_dimensions),
    ("word_maps", check_word_maps),
    ("invariants", check_invariant_separation),
]
_BY_NAME = dict(CHECKS)


def _run(task: tuple[int, str, RepConfig]) -> list[CheckResult]:
    g, name, config = task
    try:
        return _BY_NAME[name](g, config)
    except Exception as exc:  # a crash is a failing entry, not an abort
        return [CheckResult(f"{name}:error", FAIL, f"{type(exc).__name__}: {exc}", g)]


def certify(
    g_range: Sequence[int],
    config: RepConfig | None = None,
    jobs: int = 1,
    only: Sequence[str] | None = None,
) -> CertReport:
    config = config or RepConfig()
    for g in g_range:
        check_genus(g)
    names = [n for n, _ in CHECKS if only is None or n in only]
    unknown = set(only or ()) - set(_BY_NAME)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    tasks = [(g, n, config) for g in g_range for n in names]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run, tasks))
    else:
        results = [_run(t) for t in tasks]
    report = CertReport()
    for r in results:
        report.extend(r)
    return report
