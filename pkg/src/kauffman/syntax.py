"""Concrete syntax for terms: parsing and canonical printing.

Grammar (factors separated by whitespace, with an optional '*' accepted
between factors):

    term   := factor*
    factor := "1" | "c" ("^" nat)? | "h" nat | "h[" nat "," nat "]"

"1" contributes the empty word, "c^k" is k circles, "hi" is the diapsis
h^i and "h[b,a]" the block with upper index b and lower index a.
"""

from __future__ import annotations

import re

from .terms import CIRCLE, Circle, DomainError, Generator, Term, make_block


class ParseError(ValueError):
    """Malformed term syntax; `position` is a 0-based character offset."""

    def __init__(self, position: int, message: str):
        super().__init__(f"offset {position}: {message}")
        self.position = position
        self.message = message


_TOKEN = re.compile(
    r"""
      (?P<sep>[\s*]+)
    | (?P<one>1(?!\d))
    | (?P<circle>c(?:\^(?P<power>\d+))?)
    | (?P<block>h\[\s*(?P<b>\d+)\s*,\s*(?P<a>\d+)\s*\])
    | (?P<diapsis>h(?P<i>\d+))
    """,
    re.VERBOSE,
)


def parse(text: str, n: int) -> Term:
    """Parse a term of K_n; raises ParseError or DomainError."""
    if n < 2:
        raise DomainError(f"monoid size must be >= 2, got {n}")
    word: list[Generator] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(pos, f"unexpected character {text[pos]!r}")
        if m.group("block"):
            b, a = int(m.group("b")), int(m.group("a"))
            try:
                word.append(make_block(n, b, a))
            except DomainError as e:
                raise DomainError(f"offset {pos}: {e}") from None
        elif m.group("diapsis"):
            i = int(m.group("i"))
            try:
                word.append(make_block(n, i, i))
            except DomainError as e:
                raise DomainError(f"offset {pos}: {e}") from None
        elif m.group("circle"):
            k = 1 if m.group("power") is None else int(m.group("power"))
            word.extend([CIRCLE] * k)
        # "1" and separators contribute nothing
        pos = m.end()
    return Term(n, tuple(word))


def format_word(word: tuple[Generator, ...]) -> str:
    """Canonical rendering of a bare word (no size attached)."""
    if not word:
        return "1"
    parts: list[str] = []
    run = 0
    for g in word:
        if isinstance(g, Circle):
            run += 1
            continue
        if run:
            parts.append("c" if run == 1 else f"c^{run}")
            run = 0
        if g.upper == g.lower:
            parts.append(f"h{g.upper}")
        else:
            parts.append(f"h[{g.upper},{g.lower}]")
    if run:
        parts.append("c" if run == 1 else f"c^{run}")
    return " ".join(parts)


def format_term(t: Term) -> str:
    """Canonical rendering: "1" for the unit, maximal circle runs contracted,
    singular blocks printed as diapsides."""
    return format_word(t.word)
