"""Combinatorial n-diagrams: planar pairings with a circle count.

An n-diagram has n points on the top edge and n on the bottom edge of a
rectangle, joined pairwise by n non-crossing threads, plus some number of
closed circles.  Top point (i, a) is encoded as the code +i and bottom
point (i, 0) as -i, so a diagram is a perfect matching on
{-n..-1, 1..n} together with a circle count.  A matching is planar iff
the closed integer intervals spanned by its pairs are pairwise disjoint
or nested, equivalently iff the matching reads as a balanced bracket
sequence in code order -n .. -1, 1 .. n.

Because two diagrams are equal as equivalence classes exactly when their
pairings and circle counts agree, equality of `Diagram` values is plain
structural equality and no quotienting is needed.

Thread vocabulary: a *cup* joins two top codes, a *cap* two bottom codes,
a *transversal* one of each; a transversal is *vertical* when its
positions agree and *falling* when its top position is left of its bottom
position.  The *span* of a thread is the distance between its positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .terms import DomainError


def is_planar_pairing(pairs, n: int) -> bool:
    """Balanced-bracket check of a perfect matching on {-n..-1, 1..n}."""
    partner: dict[int, int] = {}
    for a, b in pairs:
        partner[a] = b
        partner[b] = a
    stack: list[int] = []
    for code in (*range(-n, 0), *range(1, n + 1)):
        mate = partner[code]
        if mate > code:
            stack.append(code)
        elif not stack or stack[-1] != mate:
            return False
        else:
            stack.pop()
    return True


@dataclass(frozen=True)
class Diagram:
    """A planar pairing of the 2n boundary codes plus a circle count."""

    n: int
    pairs: tuple[tuple[int, int], ...]
    circles: int = 0

    def __post_init__(self) -> None:
        n = self.n
        if n < 1:
            raise DomainError(f"diagram size must be >= 1, got {n}")
        if self.circles < 0:
            raise DomainError(f"circle count must be >= 0, got {self.circles}")
        canon = tuple(sorted((min(a, b), max(a, b)) for a, b in self.pairs))
        object.__setattr__(self, "pairs", canon)
        codes = sorted(c for p in canon for c in p)
        expected = sorted((*range(-n, 0), *range(1, n + 1)))
        if codes != expected:
            raise DomainError(
                f"pairs must match each of the codes -{n}..-1, 1..{n} exactly once"
            )
        if not is_planar_pairing(canon, n):
            raise DomainError("pairing has crossing threads")
        hook = _construction_hook
        if hook is not None:
            hook(self)

    @cached_property
    def involution(self) -> dict[int, int]:
        """Code -> partner code, for O(1) lookups."""
        inv: dict[int, int] = {}
        for a, b in self.pairs:
            inv[a] = b
            inv[b] = a
        return inv


# Test hook: called with every freshly validated Diagram when set.
_construction_hook = None


def set_construction_hook(fn) -> None:
    """Install fn(diagram) to observe every diagram constructed; None clears."""
    global _construction_hook
    _construction_hook = fn


@dataclass(frozen=True)
class ThreadClass:
    kind: str  # "cup" | "cap" | "transversal"
    vertical: bool = False
    falling: bool = False


def thread_class(pair: tuple[int, int]) -> ThreadClass:
    """Classify a thread from its two endpoint codes."""
    a, b = pair
    if a > 0 and b > 0:
        return ThreadClass("cup")
    if a < 0 and b < 0:
        return ThreadClass("cap")
    top, bottom = (a, -b) if a > 0 else (b, -a)
    return ThreadClass("transversal", vertical=top == bottom, falling=top < bottom)


def identity(n: int) -> Diagram:
    """All threads vertical, no circles."""
    return Diagram(n, tuple((-i, i) for i in range(1, n + 1)))


def diapsis_diagram(n: int, i: int) -> Diagram:
    """A cup at positions i, i+1 over the matching cap; verticals elsewhere."""
    if not 1 <= i <= n - 1:
        raise DomainError(f"diapsis index must be in 1..{n - 1}, got {i}")
    pairs = [(i, i + 1), (-(i + 1), -i)]
    pairs.extend((-m, m) for m in range(1, n + 1) if m not in (i, i + 1))
    return Diagram(n, tuple(pairs))


def circle_diagram(n: int) -> Diagram:
    """The identity pairing carrying a single circle."""
    return Diagram(n, identity(n).pairs, 1)


def compose(bottom: Diagram, top: Diagram) -> Diagram:
    """Stack `top` above `bottom` and glue them along n interface nodes.

    Each thread of the result is traced as an alternating path through the
    interface; paths with two free ends become threads, and closed loops
    confined to the interface each contribute one circle.  The result keeps
    the top codes of `top` and the bottom codes of `bottom`.
    """
    if bottom.n != top.n:
        raise DomainError(f"size mismatch: {bottom.n} vs {top.n}")
    n = bottom.n
    up = top.involution
    low = bottom.involution

    pairs: list[tuple[int, int]] = []
    seen: set[int] = set()
    crossed: set[int] = set()  # interface nodes used by open paths

    def follow(code: int, in_top: bool) -> int:
        while True:
            if in_top:
                code = up[code]
                if code > 0:
                    return code
                crossed.add(-code)
                code, in_top = -code, False
            else:
                code = low[code]
                if code < 0:
                    return code
                crossed.add(code)
                code, in_top = -code, True

    for start, in_top in [(i, True) for i in range(1, n + 1)] + \
                         [(-i, False) for i in range(1, n + 1)]:
        if start in seen:
            continue
        end = follow(start, in_top)
        seen.add(start)
        seen.add(end)
        pairs.append((start, end))

    loops = 0
    remaining = set(range(1, n + 1)) - crossed
    while remaining:
        start = m = min(remaining)
        while True:
            j = -up[-m]  # cap of `top` joins interface m to interface j
            k = low[j]   # cup of `bottom` continues from j to k
            remaining.discard(m)
            remaining.discard(j)
            m = k
            if m == start:
                break
        loops += 1

    return Diagram(n, tuple(pairs), bottom.circles + top.circles + loops)


def equivalent(d1: Diagram, d2: Diagram) -> bool:
    """Equal pairings and circle counts; sizes must agree."""
    if d1.n != d2.n:
        raise DomainError(f"size mismatch: {d1.n} vs {d2.n}")
    return d1 == d2


def span(d: Diagram) -> int:
    """Sum over threads of the distance between their endpoint positions."""
    return sum(abs(abs(a) - abs(b)) for a, b in d.pairs)


def covers(pair: tuple[int, int], m: int) -> bool:
    """Whether the thread reaches from position <= m across to position >= m+1."""
    lo, hi = sorted((abs(pair[0]), abs(pair[1])))
    return lo <= m and m + 1 <= hi


def slope_points(d: Diagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Ascending top and bottom slope sequences (T, B).

    A top code +i is a slope point when its partner lies strictly to its
    right; a bottom code -j contributes j-1 when its partner lies strictly
    to its left.  Reading T as lower indices and B as upper indices
    recovers the Jones normal form of the diagram.
    """
    inv = d.involution
    top = tuple(i for i in range(1, d.n + 1) if abs(inv[i]) > i)
    bottom = tuple(j - 1 for j in range(1, d.n + 1) if abs(inv[-j]) < j)
    return top, bottom


def to_json_dict(d: Diagram) -> dict:
    """Stable interchange form: pairs sorted by min code, min first."""
    return {"n": d.n, "pairs": [list(p) for p in d.pairs], "circles": d.circles}


def from_json_dict(obj) -> Diagram:
    if not isinstance(obj, dict):
        raise DomainError("diagram JSON must be an object")
    missing = {"n", "pairs", "circles"} - obj.keys()
    if missing:
        raise DomainError(f"diagram JSON lacks keys: {sorted(missing)}")
    n, pairs, circles = obj["n"], obj["pairs"], obj["circles"]
    if not isinstance(n, int) or not isinstance(circles, int):
        raise DomainError("diagram JSON: n and circles must be integers")
    try:
        pair_tuples = tuple(
            (int(a), int(b)) for a, b in pairs  # type: ignore[misc]
        )
    except (TypeError, ValueError):
        raise DomainError("diagram JSON: pairs must be a list of code pairs") from None
    return Diagram(n, pair_tuples, circles)
