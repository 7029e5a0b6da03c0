from __future__ import annotations

import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from mcgrep.words import R, Y, Alphabet, GroupWord, sigma, twist

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def _gens(alphabet: Alphabet, g: int):
    if alphabet is Alphabet.BRAID:
        return [sigma(i) for i in range(1, g)]
    if alphabet is Alphabet.SPHERE_EXT:
        return [sigma(i) for i in range(1, g)] + [R]
    return [twist(i) for i in range(1, g)] + [R, Y]


def words(alphabet: Alphabet, g: int = 4, max_size: int = 10):
    letter = st.tuples(st.sampled_from(_gens(alphabet, g)), st.sampled_from((1, -1)))
    return st.lists(letter, max_size=max_size).map(lambda ls: GroupWord(alphabet, g, tuple(ls)))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    order = [c[0] for c in mod.CRITERIA]
    for key in order:
        if key in results:
            terminalreporter.write_line(results[key])
