"""Run configuration: an INI file with sections for parameters, evaluation,
homology overrides, residue pins and sampling sizes."""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction
from importlib import resources

MODES = ("auto", "exact", "interval")


@dataclass(frozen=True)
class RepConfig:
    q0: Fraction = Fraction(1, 2)
    t0: Fraction = Fraction(1, 4)
    precision: int = 128
    mode: str = "auto"
    homology_override: str | None = None
    consecutive_pairing: int = 1
    residues: tuple[tuple[str, int], ...] = ()
    seed: int = 20170601
    garside_words: int = 500
    garside_max_length: int = 20
    center_words: int = 200
    induced_words: int = 200
    homomorphism_pairs: int = 60
    separation_pairs: int = 1000
    separation_max_length: int = 10
    word_map_samples: int = 20

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.q0 <= 0 or self.t0 <= 0:
            raise ValueError("q0 and t0 must be positive")
        if self.precision < 8:
            raise ValueError("precision must be at least 8 bits")

    def with_(self, **kw) -> RepConfig:
        kw = {k: v for k, v in kw.items() if v is not None}
        return replace(self, **kw)

    @property
    def residue_pins(self) -> dict[str, int]:
        return dict(self.residues)


_SAMPLING = [f.name for f in fields(RepConfig) if f.type == "int" and f.name not in ("precision", "consecutive_pairing")]


def parse_config(text: str) -> RepConfig:
    cp = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    cp.optionxform = str
    cp.read_string(text)
    kw: dict = {}
    if cp.has_section("parameters"):
        p = cp["parameters"]
        if "q0" in p:
            kw["q0"] = Fraction(p["q0"])
        if "t0" in p:
            kw["t0"] = Fraction(p["t0"])
    if cp.has_section("evaluation"):
        e = cp["evaluation"]
        if "precision" in e:
            kw["precision"] = int(e["precision"])
        if "mode" in e:
            kw["mode"] = e["mode"].strip()
    if cp.has_section("homology"):
        h = cp["homology"]
        if h.get("override", "").strip():
            kw["homology_override"] = h["override"].strip()
        if "consecutive_pairing" in h:
            kw["consecutive_pairing"] = int(h["consecutive_pairing"])
    if cp.has_section("residues"):
        kw["residues"] = tuple(sorted((k, int(v)) for k, v in cp["residues"].items()))
    if cp.has_section("sampling"):
        s = cp["sampling"]
        for name in _SAMPLING:
            if name in s:
                kw[name] = int(s[name])
    return RepConfig(**kw)


def default_config_text() -> str:
    return resources.files("mcgrep").joinpath("data/default.ini").read_text(encoding="utf-8")


def load_config(path: str | None = None) -> RepConfig:
    if path is None:
        return parse_config(default_config_text())
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
