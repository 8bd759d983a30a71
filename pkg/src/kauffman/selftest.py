"""Exhaustive small-size oracle suite, runnable from the CLI.

Each check prints one line; the suite passes only if every check does.
The checks duplicate the heart of the test suite at scales that finish in
a few seconds, so a deployed build can be probed without pytest.
"""

from __future__ import annotations

import random
import sys
from typing import Callable, TextIO

from .enumeration import (
    enumerate_normal_forms,
    enumerate_pairings,
    enumerate_terms,
    pairing_to_parenword,
    parenword_to_pairing,
)
from .rewrite import normal_form, normalize
from .semantics import delta, diagram_to_nf, peel
from .syntax import format_term, parse
from .terms import CIRCLE, Block, Term, measure_word, nf_to_term


def _random_term(rng: random.Random, max_n: int, max_len: int) -> Term:
    n = rng.randint(2, max_n)
    word = []
    for _ in range(rng.randint(0, max_len)):
        r = rng.random()
        if r < 0.2:
            word.append(CIRCLE)
        elif r < 0.85 or n == 2:
            i = rng.randint(1, n - 1)
            word.append(Block(i, i))
        else:
            b = rng.randint(1, n - 1)
            word.append(Block(b, rng.randint(1, b)))
    return Term(n, tuple(word))


def _check_catalan() -> None:
    expected = {2: 2, 3: 5, 4: 14, 5: 42}
    for n, count in expected.items():
        pairings = enumerate_pairings(n)
        assert len(pairings) == count, (n, len(pairings))
        assert len(enumerate_normal_forms(n, 0)) == count


def _check_parenwords() -> None:
    for n in range(1, 6):
        for d in enumerate_pairings(n):
            assert parenword_to_pairing(pairing_to_parenword(d), n) == d


def _check_word_problem() -> None:
    terms = list(enumerate_terms(3, 4))
    by_nf: dict = {}
    by_diagram: dict = {}
    for idx, t in enumerate(terms):
        by_nf.setdefault(normal_form(t), set()).add(idx)
        by_diagram.setdefault(delta(t), set()).add(idx)
    partition_nf = {frozenset(s) for s in by_nf.values()}
    partition_diag = {frozenset(s) for s in by_diagram.values()}
    assert partition_nf == partition_diag


def _check_nf_roundtrip() -> None:
    for f in enumerate_normal_forms(4, 2):
        assert diagram_to_nf(delta(nf_to_term(f))) == f


def _check_peel() -> None:
    for n in range(2, 5):
        for d in enumerate_pairings(n):
            assert normal_form(peel(d)) == diagram_to_nf(d)


def _check_rewriting(trials: int = 150) -> None:
    rng = random.Random(20240307)
    for _ in range(trials):
        t = _random_term(rng, 8, 40)
        trace = normalize(t)
        for before, after in zip(trace.measures, trace.measures[1:]):
            assert after < before, (before, after)
        assert normal_form(t, "rightmost") == trace.output
        assert measure_word(nf_to_term(trace.output).word) == trace.measures[-1]


def _check_parser(trials: int = 200) -> None:
    rng = random.Random(977)
    for _ in range(trials):
        t = _random_term(rng, 9, 30)
        assert parse(format_term(t), t.n) == t


CHECKS: tuple[tuple[str, Callable[[], None]], ...] = (
    ("catalan counts match normal-form counts (n <= 5)", _check_catalan),
    ("parenthetical-word bijection (n <= 5)", _check_parenwords),
    ("word problem: rewriting agrees with diagrams (n = 3, length <= 4)", _check_word_problem),
    ("normal form round trip through diagrams (n = 4)", _check_nf_roundtrip),
    ("peeling agrees with slope extraction (n <= 4)", _check_peel),
    ("measures decrease and strategies agree (150 random terms)", _check_rewriting),
    ("parser round trip (200 random terms)", _check_parser),
)


def run(out: TextIO = sys.stdout) -> bool:
    ok = True
    for name, check in CHECKS:
        try:
            check()
        except AssertionError as e:
            ok = False
            print(f"FAIL {name}: {e}", file=out)
        else:
            print(f"ok   {name}", file=out)
    return ok
