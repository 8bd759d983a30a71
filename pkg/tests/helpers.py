"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import random
from collections import defaultdict

from hypothesis import strategies as st

from kauffman import (
    CIRCLE,
    Block,
    Diagram,
    JonesNF,
    Term,
    apply_rule,
    find_redex,
    nf_to_term,
)


def random_term(rng: random.Random, max_n: int = 12, max_len: int = 100,
                n: int | None = None) -> Term:
    """Random word mixing diapsides, circles and occasional wide blocks."""
    if n is None:
        n = rng.randint(2, max_n)
    word = []
    for _ in range(rng.randint(0, max_len)):
        r = rng.random()
        if r < 0.18:
            word.append(CIRCLE)
        elif r < 0.82 or n == 2:
            i = rng.randint(1, n - 1)
            word.append(Block(i, i))
        else:
            b = rng.randint(1, n - 1)
            word.append(Block(b, rng.randint(1, b)))
    return Term(n, tuple(word))


def random_nf(rng: random.Random, max_n: int = 10, max_circles: int = 3,
              n: int | None = None) -> JonesNF:
    """Random valid normal form built by an ascending walk over block indices."""
    if n is None:
        n = rng.randint(2, max_n)
    circles = rng.randint(0, max_circles)
    blocks = []
    prev_a = prev_b = 0
    while prev_a + 1 <= n - 1 and rng.random() > 0.25:
        a = rng.randint(prev_a + 1, n - 1)
        lo_b = max(prev_b + 1, a)
        if lo_b > n - 1:
            break
        b = rng.randint(lo_b, n - 1)
        blocks.append((b, a))
        prev_a, prev_b = a, b
    return JonesNF(n, circles, tuple(blocks))


def generators_st(n: int, wide_blocks: bool = True):
    options = [
        st.integers(1, n - 1).map(lambda i: Block(i, i)),
        st.just(CIRCLE),
    ]
    if wide_blocks and n > 2:
        options.append(
            st.tuples(st.integers(1, n - 1), st.integers(1, n - 1))
            .map(lambda ba: Block(max(ba), min(ba)))
        )
    return st.one_of(options)


@st.composite
def terms_st(draw, max_n: int = 6, max_len: int = 10, wide_blocks: bool = True):
    n = draw(st.integers(2, max_n))
    word = draw(st.lists(generators_st(n, wide_blocks), max_size=max_len))
    return Term(n, tuple(word))


@st.composite
def normal_forms_st(draw, max_n: int = 8, max_circles: int = 3):
    n = draw(st.integers(2, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_nf(random.Random(seed), n=n, max_circles=max_circles)


def compose_oracle(bottom: Diagram, top: Diagram) -> Diagram:
    """Compose by connected components of the glued boundary graph.

    Independent of the path-tracing implementation: nodes are the codes of
    both diagrams, edges are the threads plus the interface identifications,
    and each component either hits exactly two free boundary codes (a
    thread) or none (a loop).
    """
    assert bottom.n == top.n
    n = bottom.n
    adjacency = defaultdict(list)
    for a, b in top.pairs:
        adjacency[("t", a)].append(("t", b))
        adjacency[("t", b)].append(("t", a))
    for a, b in bottom.pairs:
        adjacency[("b", a)].append(("b", b))
        adjacency[("b", b)].append(("b", a))
    for i in range(1, n + 1):
        adjacency[("t", -i)].append(("b", i))
        adjacency[("b", i)].append(("t", -i))

    seen: set = set()
    pairs = []
    loops = 0
    for node in list(adjacency):
        if node in seen:
            continue
        component = []
        stack = [node]
        seen.add(node)
        while stack:
            u = stack.pop()
            component.append(u)
            for v in adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        free = [
            code for side, code in component
            if (side == "t" and code > 0) or (side == "b" and code < 0)
        ]
        if not free:
            loops += 1
        else:
            assert len(free) == 2
            pairs.append(tuple(sorted(free)))
    return Diagram(n, tuple(pairs), bottom.circles + top.circles + loops)


def naive_leftmost_steps(t: Term):
    """Reference reduction: rescan from the left after every firing."""
    steps = []
    current = t
    while True:
        redex = find_redex(current)
        if redex is None:
            return steps, current
        position, rule = redex
        steps.append((position, rule))
        current = apply_rule(current, position, rule)


def replay(trace) -> list[Term]:
    """Replay a trace, returning every intermediate term (input first).

    Asserts that each recorded step matches the word it is applied to.
    """
    word = list(trace.input.word)
    intermediates = [trace.input]
    for step in trace.steps:
        p = step.position
        assert tuple(word[p:p + len(step.before)]) == step.before, step
        word[p:p + len(step.before)] = list(step.after)
        intermediates.append(Term(trace.input.n, tuple(word)))
    assert intermediates[-1] == nf_to_term(trace.output)
    return intermediates


def is_jones_shape(t: Term) -> bool:
    """Normal-form shape check written directly from the definition."""
    word = t.word
    k = 0
    while k < len(word) and not isinstance(word[k], Block):
        k += 1
    blocks = word[k:]
    if not all(isinstance(g, Block) for g in blocks):
        return False
    uppers = [g.upper for g in blocks]
    lowers = [g.lower for g in blocks]
    return (sorted(set(uppers)) == uppers and sorted(set(lowers)) == lowers)
