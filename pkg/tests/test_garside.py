from __future__ import annotations

import random

import pytest

from mcgrep.algebra import ExactMatrix, LaurentPoly, Q
from mcgrep.certify import braid_relators
from mcgrep.garside import (
    _delta,
    _identity,
    finishing_set,
    is_trivial_braid,
    normal_form,
    normal_form_letters,
    same_braid,
    starting_set,
)
from mcgrep.words import Alphabet, GroupWord, WordError, invert, parse_word, random_word

B = Alphabet.BRAID


def test_examples():
    assert normal_form(parse_word("s1 s1^-1", B, 4)).is_trivial()
    assert same_braid(parse_word("s1 s2 s1", B, 4), parse_word("s2 s1 s2", B, 4))
    nf = normal_form_letters(3, [(1, 1), (2, 1), (1, 1)])
    assert nf.delta_power == 1 and nf.factors == ()


def test_triviality_examples():
    assert is_trivial_braid(parse_word("s1 s3 s1^-1 s3^-1", B, 4))
    assert not is_trivial_braid(parse_word("s1", B, 4))
    assert is_trivial_braid(parse_word("s1 s2 s1 s2^-1 s1^-1 s2^-1", B, 4))


def test_rejects_non_braid_words():
    with pytest.raises(WordError):
        normal_form(parse_word("T1", Alphabet.HYPER_MCG, 4))
    with pytest.raises(WordError):
        normal_form_letters(3, [(3, 1)])


def _check_shape(nf):
    n = nf.n
    for f in nf.factors:
        assert f != _identity(n) and f != _delta(n)
    for a, b in zip(nf.factors, nf.factors[1:]):
        assert starting_set(b) <= finishing_set(a)


@pytest.mark.parametrize("g", [4, 5])
def test_normal_form_shape(g):
    rng = random.Random(g)
    for _ in range(300):
        _check_shape(normal_form(random_word(B, g, rng.randint(0, 20), rng)))


def test_full_twist_is_delta_squared():
    for g in (4, 5, 6):
        z = parse_word(f"({' '.join(f's{i}' for i in range(1, g))})^{g}", B, g)
        nf = normal_form(z)
        assert nf.delta_power == 2 and nf.factors == ()


def test_relator_insertion_invariance():
    rng = random.Random(5)
    rels = braid_relators(5)
    for _ in range(500):
        a = random_word(B, 5, rng.randint(0, 12), rng)
        b = a if rng.random() < 0.5 else random_word(B, 5, rng.randint(0, 12), rng)
        same = same_braid(a, b)
        letters = a.expanded()
        k = rng.randint(0, len(letters))
        r = rng.choice(rels)
        a2 = GroupWord(B, 5, tuple(letters[:k]) + r.letters + tuple(letters[k:]))
        assert normal_form(a2) == normal_form(a)
        assert same_braid(a2, b) == same


def _burau3(letters) -> ExactMatrix:
    # unreduced Burau, faithful on B_3; used only as an independent oracle
    one, zero = LaurentPoly.const(1), LaurentPoly()
    qi = Q**-1

    def gen(i, e):
        rows = [[one if r == c else zero for c in range(3)] for r in range(3)]
        blk = [[one - Q, Q], [one, zero]] if e > 0 else [[zero, one], [qi, one - qi]]
        for r in range(2):
            for c in range(2):
                rows[i - 1 + r][i - 1 + c] = blk[r][c]
        return ExactMatrix(rows, "laurent")

    out = ExactMatrix.identity(3, "laurent")
    for i, e in letters:
        out = out @ gen(i, e)
    return out


def test_b3_against_burau():
    rng = random.Random(9)
    rels = [[(1, 1), (2, 1), (1, 1), (2, -1), (1, -1), (2, -1)]]
    trivial = 0
    for k in range(400):
        u = [(rng.randint(1, 2), rng.choice((1, -1))) for _ in range(rng.randint(0, 8))]
        if k % 2:
            w = u + rels[0] + [(i, -e) for i, e in reversed(u)]
        else:
            w = u
        nf = normal_form_letters(3, w)
        trivial += nf.is_trivial()
        assert nf.is_trivial() == (_burau3(w) == ExactMatrix.identity(3, "laurent"))
    assert trivial >= 200


def test_inverse_word_cancels():
    rng = random.Random(2)
    for _ in range(100):
        w = random_word(B, 5, rng.randint(0, 15), rng)
        assert is_trivial_braid(w * invert(w))
