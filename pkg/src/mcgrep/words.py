"""Words over the three generator alphabets and the maps between them.

Alphabets
---------
``Braid``      sigma_1 .. sigma_{g-1}            (written ``s1`` ..)
``SphereExt``  sigma_i plus the reflection ``R``
``HyperMCG``   lifted twists ``T1`` .. ``T{g-1}``, ``R`` and the involution ``Y``

Words are kept freely reduced and run-length collapsed: ``s1 s1 s1`` is stored
as one letter with exponent 3. No group relation is ever applied here.
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

MIN_GENUS = 4


class Alphabet(enum.Enum):
    BRAID = "Braid"
    SPHERE_EXT = "SphereExt"
    HYPER_MCG = "HyperMCG"

    @classmethod
    def parse(cls, name: str) -> Alphabet:
        key = name.replace("-", "").replace("_", "").lower()
        for a in cls:
            if a.value.lower() == key or a.name.replace("_", "").lower() == key:
                return a
        aliases = {"braid": cls.BRAID, "sphere": cls.SPHERE_EXT, "hyper": cls.HYPER_MCG, "mcg": cls.HYPER_MCG}
        if key in aliases:
            return aliases[key]
        raise ValueError(f"unknown alphabet {name!r}")


_LEGAL = {
    Alphabet.BRAID: frozenset("s"),
    Alphabet.SPHERE_EXT: frozenset("sR"),
    Alphabet.HYPER_MCG: frozenset("TRY"),
}


class WordError(ValueError):
    pass


class Gen(NamedTuple):
    """A generator symbol. ``family`` is one of ``s``, ``T``, ``R``, ``Y``."""

    family: str
    index: int = 0

    def __str__(self) -> str:
        return f"{self.family}{self.index}" if self.index else self.family


R = Gen("R")
Y = Gen("Y")


def sigma(i: int) -> Gen:
    return Gen("s", i)


def twist(i: int) -> Gen:
    return Gen("T", i)


Letter = tuple[Gen, int]


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for gen, e in letters:
        if e == 0:
            continue
        if out and out[-1][0] == gen:
            s = out[-1][1] + e
            if s:
                out[-1] = (gen, s)
            else:
                out.pop()
        else:
            out.append((gen, e))
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    alphabet: Alphabet
    genus: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.genus < MIN_GENUS:
            raise WordError(f"genus must be >= {MIN_GENUS}, got {self.genus}")
        legal = _LEGAL[self.alphabet]
        for gen, _ in self.letters:
            if gen.family not in legal:
                raise WordError(f"{gen} is not a letter of the {self.alphabet.value} alphabet")
            if gen.family in "sT" and not 1 <= gen.index <= self.genus - 1:
                raise WordError(f"{gen}: index out of range 1..{self.genus - 1}")
        object.__setattr__(self, "letters", free_reduce(self.letters))

    @classmethod
    def empty(cls, alphabet: Alphabet, genus: int) -> GroupWord:
        return cls(alphabet, genus, ())

    @classmethod
    def from_letters(cls, alphabet: Alphabet, genus: int, letters: Iterable[Letter]) -> GroupWord:
        return cls(alphabet, genus, tuple(letters))

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return compose(self, other)

    def __pow__(self, k: int) -> GroupWord:
        base = self if k >= 0 else invert(self)
        return GroupWord(self.alphabet, self.genus, base.letters * abs(k))

    def expanded(self) -> list[Letter]:
        """Letters with unit exponents, in order."""
        return [(g, 1 if e > 0 else -1) for g, e in self.letters for _ in range(abs(e))]

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(str(g) if e == 1 else f"{g}^{e}" for g, e in self.letters)


def compose(a: GroupWord, b: GroupWord) -> GroupWord:
    if a.alphabet != b.alphabet or a.genus != b.genus:
        raise WordError(
            f"cannot compose {a.alphabet.value}(g={a.genus}) with {b.alphabet.value}(g={b.genus})"
        )
    return GroupWord(a.alphabet, a.genus, a.letters + b.letters)


def invert(w: GroupWord) -> GroupWord:
    return GroupWord(w.alphabet, w.genus, tuple((g, -e) for g, e in reversed(w.letters)))


def exponent_sum(w: GroupWord) -> int:
    return sum(e for _, e in w.letters)


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<gen>[sT]\d+|R|Y)|(?P<open>\()|(?P<close>\))|(?P<pow>\^\s*[+-]?\d+))")


def parse_word(text: str, alphabet: Alphabet | str, g: int) -> GroupWord:
    """Parse the whitespace-separated word grammar, e.g. ``"(s1 s2 s3)^4 s1^-1"``."""
    if isinstance(alphabet, str):
        alphabet = Alphabet.parse(alphabet)
    if g < MIN_GENUS:
        raise WordError(f"genus must be >= {MIN_GENUS}, got {g}")
    stripped = text.strip()
    if stripped in ("", "1", "e"):
        return GroupWord.empty(alphabet, g)

    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordError(f"syntax error at column {pos}: {text[pos:pos + 10]!r}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind).replace(" ", "")))
        pos = m.end()

    stack: list[list[Letter]] = [[]]
    i = 0
    while i < len(tokens):
        kind, val = tokens[i]
        i += 1
        if kind == "open":
            stack.append([])
            continue
        if kind == "pow":
            raise WordError(f"dangling exponent {val!r}")
        power = 1
        if i < len(tokens) and tokens[i][0] == "pow":
            power = int(tokens[i][1][1:])
            i += 1
        if kind == "gen":
            gen = Gen(val[0], int(val[1:])) if val[0] in "sT" else Gen(val)
            stack[-1].append((gen, power))
        else:
            if len(stack) == 1:
                raise WordError("unbalanced ')'")
            inner = stack.pop()
            if power < 0:
                inner = [(gen, -e) for gen, e in reversed(inner)]
            stack[-1].extend(inner * abs(power))
    if len(stack) != 1:
        raise WordError("unbalanced '('")
    return GroupWord(alphabet, g, tuple(stack[0]))


# -- invariants and maps ----------------------------------------------------


@dataclass(frozen=True)
class PuncturePermOrient:
    """Image in Sym(g) x {+1, -1}. ``perm[i]`` is the image of puncture ``i+1``
    (0-based storage, 1-based display)."""

    perm: tuple[int, ...]
    orient: int = 1

    @classmethod
    def identity(cls, g: int) -> PuncturePermOrient:
        return cls(tuple(range(g)), 1)

    def __mul__(self, other: PuncturePermOrient) -> PuncturePermOrient:
        # apply self first, then other
        return PuncturePermOrient(tuple(other.perm[p] for p in self.perm), self.orient * other.orient)

    def cycles(self) -> str:
        seen: set[int] = set()
        out = []
        for s in range(len(self.perm)):
            if s in seen or self.perm[s] == s:
                continue
            cyc = [s]
            seen.add(s)
            x = self.perm[s]
            while x != s:
                cyc.append(x)
                seen.add(x)
                x = self.perm[x]
            out.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
        return "".join(out) or "()"

    def __str__(self) -> str:
        return f"{self.cycles()} {'+' if self.orient > 0 else '-'}"


def _letter_perm_orient(gen: Gen, g: int) -> PuncturePermOrient:
    if gen.family in "sT":
        p = list(range(g))
        i = gen.index - 1
        p[i], p[i + 1] = p[i + 1], p[i]
        return PuncturePermOrient(tuple(p), 1)
    if gen.family == "R":
        return PuncturePermOrient(tuple(range(g)), -1)
    return PuncturePermOrient.identity(g)


def perm_orient(w: GroupWord) -> PuncturePermOrient:
    """Action on the punctures together with the orientation character."""
    g = w.genus
    acc = PuncturePermOrient.identity(g)
    for gen, e in w.letters:
        x = _letter_perm_orient(gen, g)
        # every letter's image is an involution, so only the parity matters
        if e % 2:
            acc = acc * x
    return acc


def project_to_sphere(w: GroupWord) -> GroupWord:
    """Quotient by the involution: ``T_i -> sigma_i``, ``R -> R``, ``Y -> 1``."""
    if w.alphabet is not Alphabet.HYPER_MCG:
        raise WordError("project_to_sphere expects a HyperMCG word")
    out = []
    for gen, e in w.letters:
        if gen.family == "T":
            out.append((sigma(gen.index), e))
        elif gen.family == "R":
            out.append((R, e))
    return GroupWord(Alphabet.SPHERE_EXT, w.genus, tuple(out))


def braid_to_hyper(w: GroupWord) -> GroupWord:
    """Letterwise lift ``sigma_i -> T_i``, ``R -> R`` (a section of the projection on words)."""
    out = []
    for gen, e in w.letters:
        out.append((twist(gen.index) if gen.family == "s" else gen, e))
    return GroupWord(Alphabet.HYPER_MCG, w.genus, tuple(out))


def as_alphabet(w: GroupWord, alphabet: Alphabet) -> GroupWord:
    """Reinterpret a word in a larger alphabet (e.g. a braid word as SphereExt)."""
    return GroupWord(alphabet, w.genus, w.letters)


def random_word(
    alphabet: Alphabet,
    g: int,
    length: int,
    rng: random.Random,
    gens: Sequence[Gen] | None = None,
) -> GroupWord:
    """Uniform random word of the given letter count (before free reduction)."""
    if gens is None:
        fams = {"s": [sigma(i) for i in range(1, g)], "T": [twist(i) for i in range(1, g)], "R": [R], "Y": [Y]}
        gens = [x for f in sorted(_LEGAL[alphabet]) for x in fams[f]]
    letters = [(rng.choice(gens), rng.choice((1, -1))) for _ in range(length)]
    return GroupWord(alphabet, g, tuple(letters))
