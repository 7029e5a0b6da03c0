from __future__ import annotations

import json

import pytest
from hypothesis import given

from conftest import words
from mcgrep.algebra import ExactMatrix
from mcgrep.homology import (
    default_model,
    l2_eval,
    load_model,
    model_from_json_obj,
    model_to_json_obj,
    residue_check,
)
from mcgrep.words import Alphabet, GroupWord, WordError, Y, parse_word

H = Alphabet.HYPER_MCG


def test_default_shape():
    m = default_model(4)
    assert m.dim == 3 and len(m.A) == 3
    assert all(a.determinant() == 1 for a in m.A)
    a1, a2 = m.A[0], m.A[1]
    assert a1 @ a2 @ a1 == a2 @ a1 @ a2
    with pytest.raises(ValueError):
        default_model(3)


def test_l2_examples():
    m = default_model(4)
    assert l2_eval(m, parse_word("Y", H, 4)) == -ExactMatrix.identity(3)
    assert l2_eval(m, GroupWord(H, 4)).is_identity()
    assert l2_eval(m, parse_word("Y Y", H, 4)).is_identity()
    with pytest.raises(WordError):
        l2_eval(m, parse_word("T1", H, 5))


@pytest.mark.parametrize("g", range(4, 13))
def test_residue_check_passes(g):
    rep = residue_check(default_model(g), g)
    assert rep.ok, rep.to_tsv()


def test_residue_table_values():
    # only the full twist picks up Y, and only for odd g
    for g in range(4, 10):
        res = default_model(g).residues
        assert {k for k, v in res.items() if v} == ({"z"} if g % 2 else set())


def test_residues_reproducible():
    a = default_model.__wrapped__(6)
    b = default_model.__wrapped__(6)
    assert dict(a.residues) == dict(b.residues)


def test_doubled_generator_fails():
    m = default_model(4)
    bad = m.replace(A=(m.A[0] * 2,) + m.A[1:])
    rep = residue_check(bad)
    names = {e.name for e in rep.failures()}
    assert "homology:unimodular" in names
    assert "homology:relator:braid[1]" in names
    assert all(e.witness for e in rep.failures())


def test_trivial_c_fails_separation():
    m = default_model(4)
    bad = m.replace(C=ExactMatrix.identity(3))
    entry = residue_check(bad)["homology:separation"]
    assert not entry.ok and entry.witness


@given(words(H, 5, 10))
def test_y_central(w):
    m = default_model(5)
    y = GroupWord(H, 5, ((Y, 1),))
    assert l2_eval(m, y * w) == l2_eval(m, w * y)


def test_determinants_unimodular():
    m = default_model(7)
    for x in (*m.A, m.B, m.C):
        assert x.determinant() in (1, -1)


def test_json_round_trip(tmp_path):
    m = default_model(5)
    p = tmp_path / "model.json"
    p.write_text(json.dumps(model_to_json_obj(m)))
    back = load_model(str(p))
    assert back.A == m.A and back.B == m.B and back.C == m.C
    assert dict(back.residues) == dict(m.residues)


def test_override_without_residues_computes_them():
    obj = model_to_json_obj(default_model(5))
    del obj["residues"]
    assert model_from_json_obj(obj).residues["z"] == 1


def test_override_shape_errors():
    obj = model_to_json_obj(default_model(4))
    obj["A"] = obj["A"][:2]
    with pytest.raises(ValueError):
        model_from_json_obj(obj)


def test_negative_pairing():
    m = default_model(6, -1)
    assert residue_check(m).ok
