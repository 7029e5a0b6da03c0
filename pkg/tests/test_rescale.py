from __future__ import annotations

import dataclasses
import random
from fractions import Fraction

import gmpy2
import pytest

from mcgrep.algebra import ExactMatrix, Q
from mcgrep.certify import braid_relators
from mcgrep.lk import build_lk_table
from mcgrep.rescale import (
    Incompatible,
    NotScalar,
    PrecisionExhausted,
    check_scalarity,
    interval_contains_identity,
    kernel_words,
    lprime_eval,
    root_interval,
    solve_rescale_unit,
    solve_unit_root,
    unit_for,
)
from mcgrep.words import Alphabet, GroupWord, exponent_sum, random_word

B = Alphabet.BRAID
HALF, QUARTER = Fraction(1, 2), Fraction(1, 4)


@pytest.mark.parametrize("g", [4, 5, 6])
def test_kernel_word_exponents(g):
    kw = kernel_words(g)
    assert exponent_sum(kw.tau) == 2 * (g - 1)
    assert exponent_sum(kw.z) == g * (g - 1)


def test_scalarity_at_defaults():
    sc = check_scalarity(build_lk_table(4), HALF, QUARTER)
    assert sc.lam_z == QUARTER**2 * HALF**8
    # tau is not central, so its image carries an off-diagonal witness
    assert sc.lam_tau is None
    i, j, v = sc.tau_witness
    assert i != j and v != 0


def test_scalarity_at_trivial_point():
    sc = check_scalarity(build_lk_table(4), 1, 1)
    assert sc.lam_z == 1 and sc.lam_tau == 1


def test_require_tau_raises():
    with pytest.raises(NotScalar) as exc:
        check_scalarity(build_lk_table(4), HALF, QUARTER, require_tau=True)
    assert exc.value.name == "tau"


def test_corrupted_table_not_scalar():
    table = build_lk_table(4)
    m = table.gens[0]
    rows = [list(r) for r in m.rows]
    rows[0][5] = rows[0][5] + Q
    bad = dataclasses.replace(table, gens=(ExactMatrix(rows, "laurent"),) + table.gens[1:])
    with pytest.raises(NotScalar) as exc:
        check_scalarity(bad, HALF, QUARTER)
    assert exc.value.name == "z"


def test_unit_root_examples():
    assert solve_unit_root(64, 6)[0] == 2
    assert solve_unit_root(1, 6)[0] == 1
    exact, iv = solve_unit_root(2, 6, 128)
    assert exact is None
    assert iv.width < Fraction(1, 2**128)
    assert iv.lo**6 <= 2 <= iv.hi**6
    # independent float cross-check
    ctx = gmpy2.get_context()
    ctx.precision = 200
    root = gmpy2.root(gmpy2.mpfr(2), 6)
    assert gmpy2.mpfr(iv.lo) <= root <= gmpy2.mpfr(iv.hi)


def test_root_interval_rejects_low_precision():
    with pytest.raises(PrecisionExhausted):
        root_interval(Fraction(2), 3, 0)


def test_solve_rescale_unit_compatibility():
    # c = 2 solves c^12 = 4096 and c^6 = 64
    u = solve_rescale_unit(4096, 4, lam_tau=64)
    assert u.exact == 2 and u.exponent == 12
    with pytest.raises(Incompatible):
        solve_rescale_unit(4096, 4, lam_tau=65)
    with pytest.raises(Incompatible):
        solve_rescale_unit(-1, 4)


def test_default_units():
    u4 = unit_for(4, HALF, QUARTER, 128)
    assert u4.exact == HALF
    u5 = unit_for(5, HALF, QUARTER, 128)
    assert not u5.is_exact
    assert (u5.interval**20).contains(u5.lam)


def test_lprime_kernel_words():
    u4 = unit_for(4, HALF, QUARTER, 128)
    kw = kernel_words(4)
    assert lprime_eval(kw.z, u4).is_identity()
    assert lprime_eval(GroupWord(B, 4), u4).is_identity()
    # tau is not in the kernel of the capping map
    assert not lprime_eval(kw.tau, u4).is_identity()
    u5 = unit_for(5, HALF, QUARTER, 128)
    m = lprime_eval(kernel_words(5).z, u5)
    assert m.domain == "interval" and interval_contains_identity(m)


def test_exact_mode_refuses_irrational_unit():
    u5 = unit_for(5, HALF, QUARTER, 128)
    with pytest.raises(PrecisionExhausted):
        lprime_eval(kernel_words(5).z, u5, "exact")


def _insert(w: GroupWord, r: GroupWord, k: int) -> GroupWord:
    letters = w.expanded()
    return GroupWord(w.alphabet, w.genus, tuple(letters[:k]) + r.letters + tuple(letters[k:]))


@pytest.mark.parametrize("g", [4, 5])
def test_relator_insertion(g):
    unit = unit_for(g, HALF, QUARTER, 128)
    rels = braid_relators(g) + [kernel_words(g).z]
    rng = random.Random(g)
    for _ in range(40):
        w = random_word(B, g, rng.randint(0, 10), rng)
        v = _insert(w, rng.choice(rels), rng.randint(0, len(w)))
        a, b = lprime_eval(w, unit), lprime_eval(v, unit)
        if unit.is_exact:
            assert a == b
        else:
            assert all(x.overlaps(y) for ra, rb in zip(a.rows, b.rows) for x, y in zip(ra, rb))


def test_precision_controls_width():
    u = unit_for(5, HALF, QUARTER, 64)
    assert u.interval.width <= Fraction(1, 2**64)
    assert u.interval.width > Fraction(1, 2**128)
