from __future__ import annotations

import json
import random

import pytest

from mcgrep.certify import agreement_sample, center_sample, certify, separation_pairs
from mcgrep.config import RepConfig
from mcgrep.homology import default_model, model_to_json_obj
from mcgrep.report import CertReport

SMALL = RepConfig(
    garside_words=40, center_words=30, induced_words=30, homomorphism_pairs=10, separation_pairs=60, word_map_samples=4
)


def test_rejects_low_genus():
    with pytest.raises(ValueError):
        certify([3])
    with pytest.raises(ValueError):
        certify([4], only=["nonsense"])


def test_small_run_passes():
    rep = certify([4], SMALL)
    assert rep.ok, rep.to_tsv()
    names = [e.name for e in rep.entries]
    assert names.index("lk:relations") < names.index("garside:agreement") < names.index("dimension")


def test_corrupted_override_reports_witnesses(tmp_path):
    obj = model_to_json_obj(default_model(4))
    obj["A"][0][0][1] = "2"
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(obj))
    rep = certify([4], SMALL.with_(homology_override=str(p)), only=["homology", "relators"])
    bad = rep.failures()
    assert bad and all(e.witness for e in bad)
    assert any(e.name.startswith("homology:relator:") for e in bad)
    assert any(e.name.startswith("relator:") for e in bad)


def test_wrong_residue_pin_fails():
    rep = certify([4], SMALL.with_(residues=(("z", 1),)), only=["homology", "relators"])
    assert not rep["homology:relator:z"].ok
    assert not rep["relator:z"].ok


def test_parallel_matches_serial():
    a = certify([4], SMALL, jobs=1).to_tsv()
    b = certify([4], SMALL, jobs=3).to_tsv()
    assert a == b


def test_samples_are_seeded():
    a = agreement_sample(4, 30, 20, random.Random(1))
    assert a == agreement_sample(4, 30, 20, random.Random(1))
    assert all(len(w) <= 20 for w in a)
    assert center_sample(5, 12, random.Random(2)) == center_sample(5, 12, random.Random(2))
    pairs = separation_pairs(4, 20, 6, random.Random(3), True)
    assert len(pairs) == 20


def test_report_rules():
    rep = CertReport()
    rep.add("x", True)
    with pytest.raises(ValueError):
        rep.add("y", False, "")
    rep.add_uncertified("z", "width")
    assert not rep.ok and [e.name for e in rep.failures()] == ["z"]
    assert rep.to_tsv().splitlines()[0] == "genus\tcheck\tstatus\twitness"
