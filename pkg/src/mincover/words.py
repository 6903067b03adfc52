"""Words in the involutions a, b, c and presentations built from them.

Words are plain strings over ``"abc"`` (``a``, ``b``, ``c`` stand for
``r0``, ``r1``, ``r2``).  Every generator is an involution, so a word's
inverse is its reversal and negative powers never need inverse letters:
``(ab)^-4`` is ``(ba)^4``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Sequence

from .perm import Perm

LETTERS = "abc"


def parse_word(text: str) -> str:
    """Expand compact notation such as ``"c(ab)^2c(ab)^3"`` or ``"(ab)^-4"``.

    Exponents may follow a letter or a parenthesised group; a negative
    exponent repeats the reversed group.
    """
    tokens = re.findall(r"\s*(\^-?\d+|[abc()])", text)
    if "".join(tokens) != re.sub(r"\s+", "", text):
        raise ValueError(f"cannot parse word {text!r}")
    pos = 0

    def group():
        nonlocal pos
        out = []
        while pos < len(tokens) and tokens[pos] != ")":
            tok = tokens[pos]
            pos += 1
            if tok == "(":
                item = group()
                if pos >= len(tokens):
                    raise ValueError(f"unbalanced parenthesis in {text!r}")
                pos += 1
            elif tok in LETTERS:
                item = tok
            else:
                raise ValueError(f"unexpected {tok!r} in {text!r}")
            if pos < len(tokens) and tokens[pos].startswith("^"):
                k = int(tokens[pos][1:])
                pos += 1
                item = item * k if k >= 0 else item[::-1] * -k
            out.append(item)
        return "".join(out)

    word = group()
    if pos != len(tokens):
        raise ValueError(f"unbalanced parenthesis in {text!r}")
    return word


def free_reduce(w: str) -> str:
    """Cancel adjacent equal letters until none remain."""
    stack = []
    for x in w:
        if x not in LETTERS:
            raise ValueError(f"bad letter {x!r} in word {w!r}")
        if stack and stack[-1] == x:
            stack.pop()
        else:
            stack.append(x)
    return "".join(stack)


def word_inverse(w: str) -> str:
    return w[::-1]


def _gens_of(target) -> Sequence[Perm]:
    gens = getattr(target, "generators", target)
    if len(gens) != 3:
        raise ValueError("need exactly three generators r0, r1, r2")
    return gens


def evaluate(w: str, target) -> Perm:
    """The permutation of ``w`` acting on the right: letters applied left to right.

    ``target`` is a flag system, a monodromy group, or a triple ``(r0, r1, r2)``.
    """
    gens = [g.images for g in _gens_of(target)]
    images = list(range(len(gens[0])))
    for x in w:
        r = gens[LETTERS.index(x)]
        images = [r[i] for i in images]
    return Perm._raw(tuple(images))


@dataclass(frozen=True)
class Presentation:
    """Three involutory generators with the given relators.

    The relations a² = b² = c² = 1 are built in and never listed.
    ``p``/``q`` record Coxeter data when the presentation came from
    :func:`coxeter_plus`; ``extra`` holds the additional relators.
    """

    relators: tuple[str, ...]
    p: int | None = None
    q: int | None = None
    extra: tuple[str, ...] = ()

    def __post_init__(self):
        for r in self.relators:
            if not r or free_reduce(r) != r:
                raise ValueError(f"relator {r!r} is empty or not freely reduced")

    def to_json(self) -> str:
        if self.p is None:
            return json.dumps({"relators": list(self.relators)})
        return json.dumps({"p": self.p, "q": self.q, "extra_relators": list(self.extra)})

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        doc = json.loads(text)
        if "p" in doc:
            return coxeter_plus(doc["p"], doc["q"], doc.get("extra_relators", []))
        return cls(tuple(doc["relators"]))


def coxeter_plus(p: int, q: int, extras: Sequence[str] = ()) -> Presentation:
    """``[p, q]`` with relators a², b², c², (ab)^p, (bc)^q, (ac)², plus ``extras``."""
    if p < 2 or q < 2:
        raise ValueError("p and q must be at least 2")
    extras = tuple(free_reduce(parse_word(x)) for x in extras)
    base = ("ab" * p, "bc" * q, "acac")
    return Presentation(base + extras, p, q, extras)


PRISM_RELATOR = "(c(ab)^2c(ab)^3)^2"
ANTIPRISM_RELATOR = "(c(ab)^2cbc(ab)^2)^2"


def prism_relator() -> str:
    return parse_word(PRISM_RELATOR)


def antiprism_relator() -> str:
    return parse_word(ANTIPRISM_RELATOR)

