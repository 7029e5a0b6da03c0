from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import words
from mcgrep.algebra import DomainError, ExactMatrix, Q
from mcgrep.assembly import (
    DISTINCT,
    EQUAL_EXACT,
    UNCERTIFIED,
    assemble,
    compare_words,
    dimension_report,
    export_matrix,
    import_matrix,
    l_eval,
    naive_identity_holds,
    verify_word_maps,
)
from mcgrep.config import RepConfig, load_config, parse_config
from mcgrep.homology import default_model, model_to_json_obj
from mcgrep.presentation import relator_suite
from mcgrep.words import Alphabet, GroupWord, WordError, parse_word

H = Alphabet.HYPER_MCG
REP4 = assemble(4)
REP5 = assemble(5)


def test_l_eval_examples():
    assert l_eval(REP4, GroupWord(H, 4)).is_identity()
    m = l_eval(REP4, parse_word("Y", H, 4))
    expected = ExactMatrix.block_diag(ExactMatrix.identity(12), -ExactMatrix.identity(3))
    assert m == expected
    assert l_eval(REP5, GroupWord(H, 5)).dim == 24


def test_word_checks():
    with pytest.raises(WordError):
        l_eval(REP4, parse_word("s1", Alphabet.BRAID, 4))
    with pytest.raises(WordError):
        l_eval(REP4, parse_word("T1", H, 5))
    with pytest.raises(ValueError):
        assemble(3)


@given(words(H, 4, 10))
def test_no_cross_block_entries(w):
    m = l_eval(REP4, w)
    for i in range(12):
        for j in range(12, 15):
            assert not m[i, j] and not m[j, i]


def test_compare_examples():
    y = parse_word("Y", H, 4)
    v = compare_words(REP4, y, GroupWord(H, 4))
    assert v.kind == DISTINCT and "homology" in v.witness
    v = compare_words(REP4, parse_word("T1 T2 T1", H, 4), parse_word("T2 T1 T2", H, 4))
    assert v.kind == EQUAL_EXACT


def test_interval_mode_never_asserts_equality():
    a, b = parse_word("T1 T2 T1", H, 5), parse_word("T2 T1 T2", H, 5)
    assert compare_words(REP5, a, b).kind == UNCERTIFIED
    assert compare_words(REP5, a, a).kind == UNCERTIFIED
    forced = assemble(4, RepConfig(mode="interval"))
    assert compare_words(forced, parse_word("T1", H, 4), parse_word("T1", H, 4)).kind == UNCERTIFIED


def test_l1_witness_when_homology_agrees():
    # (T1 T2)^6 acts trivially on homology, so only L1 can separate it from 1
    a = parse_word("(T1 T2)^6", H, 4)
    v = compare_words(REP4, a, GroupWord(H, 4))
    assert v.kind == DISTINCT and v.witness.startswith("L1 block")
    v5 = compare_words(REP5, parse_word("(T1 T2)^6", H, 5), GroupWord(H, 5))
    assert v5.kind == DISTINCT and v5.witness.startswith("L1 block")


def test_verify_word_maps():
    rep = verify_word_maps(REP4, parse_word("T1", H, 4))
    assert rep.ok and len(rep) == 2
    assert verify_word_maps(REP4, GroupWord(H, 4)).ok
    rel = next(r for r in relator_suite(4) if r.name == "braid[1]")
    out = verify_word_maps(REP4, rel.word)
    assert out["word_maps:relator_l1:braid[1]"].ok


def test_relators_map_to_identity():
    from mcgrep.assembly import is_identity_image, relator_images

    for rep in (REP4, REP5):
        assert all(is_identity_image(m) for _, m in relator_images(rep))


def test_dimension_report():
    d = dimension_report(4)
    assert d.as_tuple() == (15, 174) and d.ok
    d5 = dimension_report(5)
    assert d5.as_tuple() == (24, 368) and d5.naive_sum == 368
    assert naive_identity_holds()
    with pytest.raises(ValueError):
        dimension_report(3)


@pytest.mark.parametrize("g", range(4, 13))
def test_dimension_identity_range(g):
    d = dimension_report(g)
    assert d.ok and d.main == g * g - 1


def test_export_round_trips(tmp_path):
    ident = ExactMatrix.identity(15)
    p = tmp_path / "id.json"
    export_matrix(ident, str(p), "json")
    assert import_matrix(str(p), "json") == ident
    m = l_eval(REP4, parse_word("T1 R T3^-1", H, 4))
    export_matrix(m, str(tmp_path / "m.csv"), "csv")
    assert import_matrix(str(tmp_path / "m.csv"), "csv") == m
    iv = l_eval(REP5, parse_word("T1 T2", H, 5))
    export_matrix(iv, str(tmp_path / "iv.json"))
    back = import_matrix(str(tmp_path / "iv.json"))
    assert back.rows == iv.rows
    with pytest.raises(DomainError):
        export_matrix(ExactMatrix([[Q]], "laurent"), str(tmp_path / "x.csv"), "csv")
    with pytest.raises(ValueError):
        export_matrix(ident, str(tmp_path / "x.txt"), "txt")


def test_shipped_config():
    cfg = load_config()
    assert cfg.q0 == Fraction(1, 2) and cfg.t0 == Fraction(1, 4)
    assert cfg.precision == 128 and cfg.mode == "auto"
    assert cfg == RepConfig()


def test_config_parsing_and_validation():
    cfg = parse_config("[parameters]\nq0 = 2/3\n[residues]\nz = 1\n[sampling]\nseed = 5\n")
    assert cfg.q0 == Fraction(2, 3) and cfg.residue_pins == {"z": 1} and cfg.seed == 5
    with pytest.raises(ValueError):
        parse_config("[evaluation]\nmode = fuzzy\n")
    with pytest.raises(ValueError):
        parse_config("[parameters]\nt0 = -1\n")


def test_override_applies_to_matching_genus(tmp_path):
    obj = model_to_json_obj(default_model(4))
    obj["C"] = [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    p = tmp_path / "m.json"
    p.write_text(json.dumps(obj))
    cfg = RepConfig(homology_override=str(p))
    assert assemble(4, cfg).model.C.is_identity()
    assert not assemble(5, cfg).model.C.is_identity()
