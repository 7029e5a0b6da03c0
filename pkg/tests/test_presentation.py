from __future__ import annotations

from mcgrep.presentation import (
    presented_group,
    relator_suite,
    sphere_relator_lifts,
    y_parity,
    y_parity_defined,
)
from mcgrep.words import Alphabet, GroupWord, Y, parse_word, project_to_sphere

H = Alphabet.HYPER_MCG


def test_g4_contents():
    rels = relator_suite(4)
    words = {str(r.word) for r in rels}
    assert "T1 T2 T1 T2^-1 T1^-1 T2^-1" in words
    z = next(r for r in rels if r.name == "z")
    assert z.lift == parse_word("(T1 T2 T3)^4", H, 4)
    assert z.word == z.lift * GroupWord(H, 4, ((Y, z.residue),))
    assert sum(r.name.startswith("far") for r in rels) == 1


def test_odd_genus_z_carries_y():
    z = next(r for r in relator_suite(5) if r.name == "z")
    assert z.residue == 1
    assert z.word.letters[-1] == (Y, 1)


def test_y_relators_present():
    names = {r.name for r in relator_suite(6)}
    assert {"Y2", "YR"} <= names
    assert all(f"YT[{i}]" in names for i in range(1, 6))


def test_projection_gives_sphere_relators():
    for g in (4, 5, 6):
        lifts = dict(sphere_relator_lifts(g))
        for r in relator_suite(g):
            p = project_to_sphere(r.word)
            if r.residue is None:
                # Y relators project to the trivial word
                assert p.letters == ()
            else:
                assert p == project_to_sphere(lifts[r.name])


def test_lift_indices_in_range():
    for name, w in sphere_relator_lifts(7):
        for gen, _ in w.letters:
            if gen.family == "T":
                assert 1 <= gen.index <= 6


def test_parity_helpers():
    assert y_parity(parse_word("Y T1 Y Y", H, 4)) == 1
    assert y_parity_defined({"z": 0, "R2": 0})
    assert not y_parity_defined({"z": 1})


def test_presented_group_table():
    pg = presented_group(5)
    assert pg.residues["z"] == 1
    assert len(pg.relators) == len(relator_suite(5))
