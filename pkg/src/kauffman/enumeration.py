"""Brute-force enumeration oracles for small sizes.

These generators exist to cross-check the rest of the package: planar
pairings are found by exhausting all perfect matchings, short terms and
small normal forms by direct recursion.  Orders are fixed so that golden
expectations stay stable: pairings come out lexicographically on their
canonical pair lists, normal forms sorted by (circles, blocks), and terms
stream by length and then alphabetically with h^1 < ... < h^{n-1} < c.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .diagrams import Diagram, is_planar_pairing
from .terms import CIRCLE, Block, DomainError, JonesNF, Term

OPEN, CLOSE = "(", ")"


def enumerate_pairings(n: int) -> list[Diagram]:
    """All circle-free planar diagrams on n strands (Catalan many).

    Exhausts every perfect matching of the 2n codes and keeps the planar
    ones; the generation order is already lexicographic on the canonical
    pair lists.
    """
    if n < 1:
        raise DomainError(f"diagram size must be >= 1, got {n}")
    codes = (*range(-n, 0), *range(1, n + 1))
    results: list[Diagram] = []
    chosen: list[tuple[int, int]] = []

    def build(remaining: tuple[int, ...]) -> None:
        if not remaining:
            if is_planar_pairing(chosen, n):
                results.append(Diagram(n, tuple(chosen)))
            return
        first = remaining[0]
        for idx in range(1, len(remaining)):
            chosen.append((first, remaining[idx]))
            build(remaining[1:idx] + remaining[idx + 1:])
            chosen.pop()

    build(codes)
    return results


def pairing_to_parenword(d: Diagram) -> str:
    """Read the pairing as a balanced bracket word in code order."""
    if d.circles != 0:
        raise DomainError("parenthetical words encode circle-free diagrams only")
    inv = d.involution
    return "".join(
        OPEN if inv[code] > code else CLOSE
        for code in (*range(-d.n, 0), *range(1, d.n + 1))
    )


def parenword_to_pairing(word: str, n: int) -> Diagram:
    """Inverse of pairing_to_parenword; the word must balance with 2n symbols."""
    if len(word) != 2 * n:
        raise DomainError(f"expected {2 * n} symbols, got {len(word)}")
    codes = (*range(-n, 0), *range(1, n + 1))
    stack: list[int] = []
    pairs: list[tuple[int, int]] = []
    for code, symbol in zip(codes, word):
        if symbol == OPEN:
            stack.append(code)
        elif symbol == CLOSE:
            if not stack:
                raise DomainError("unbalanced parenthetical word")
            pairs.append((stack.pop(), code))
        else:
            raise DomainError(f"not a parenthesis: {symbol!r}")
    if stack:
        raise DomainError("unbalanced parenthetical word")
    return Diagram(n, tuple(pairs))


def enumerate_terms(n: int, max_len: int) -> Iterator[Term]:
    """Stream all words over the diapsides and the circle, shortest first."""
    if n < 2:
        raise DomainError(f"monoid size must be >= 2, got {n}")
    alphabet = [Block(i, i) for i in range(1, n)] + [CIRCLE]
    for length in range(max_len + 1):
        for word in product(alphabet, repeat=length):
            yield Term(n, word)


def _block_sequences(n: int) -> list[tuple[tuple[int, int], ...]]:
    results: list[tuple[tuple[int, int], ...]] = []

    def extend(seq: tuple[tuple[int, int], ...], last_b: int, last_a: int) -> None:
        results.append(seq)
        for a in range(last_a + 1, n):
            for b in range(max(last_b + 1, a), n):
                extend(seq + ((b, a),), b, a)

    extend((), 0, 0)
    return results


def enumerate_normal_forms(n: int, max_circles: int) -> list[JonesNF]:
    """All Jones normal forms with at most the given number of circles."""
    if max_circles < 0:
        raise DomainError(f"circle bound must be >= 0, got {max_circles}")
    forms = [
        JonesNF(n, circles, blocks)
        for circles in range(max_circles + 1)
        for blocks in _block_sequences(n)
    ]
    forms.sort(key=lambda f: (f.circles, f.blocks))
    return forms
