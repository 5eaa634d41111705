"""Shared strategies and generators for the suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from braidnf.braidword import BraidWord, Letter
from braidnf.gbase import SEPARATOR, GBaseWord, Link


def word_from_ints(strand_count: int, values: tuple[int, ...] | list[int]) -> BraidWord:
    return BraidWord(
        strand_count,
        tuple(Letter(abs(v), 1 if v > 0 else -1) for v in values),
    )


@st.composite
def braid_words(draw, min_strands=2, max_strands=8, max_length=16) -> BraidWord:
    n = draw(st.integers(min_strands, max_strands))
    length = draw(st.integers(0, max_length))
    values = [
        draw(st.integers(1, n - 1)) * draw(st.sampled_from((1, -1)))
        for _ in range(length)
    ]
    return word_from_ints(n, values)


def random_valid_gbase(rng: random.Random, max_strands=6) -> GBaseWord:
    """A structurally valid, usually unreduced, list: random walks with
    optional sentinel blocks after separators and debris after endpoints."""
    n = rng.randint(1, max_strands)
    endpoints = list(range(1, n + 1))
    rng.shuffle(endpoints)
    links = [SEPARATOR]
    for endpoint in endpoints:
        if rng.random() < 0.25:  # sentinel block, below-passes only
            links.append(Link(rng.choice((0, n + 1)), -1))
            for _ in range(rng.randint(0, 2)):
                links.append(Link(rng.randint(1, n), -1))
        for _ in range(rng.randint(0, 6)):
            links.append(Link(rng.randint(1, n), rng.choice((-1, 1))))
        links.append(Link(endpoint, 0))
        for _ in range(rng.randint(0, 3) if rng.random() < 0.3 else 0):  # debris
            links.append(Link(rng.randint(1, n), rng.choice((-1, 1))))
        links.append(SEPARATOR)
    return GBaseWord(n, tuple(links))


@st.composite
def valid_gbases(draw, max_strands=6) -> GBaseWord:
    return random_valid_gbase(random.Random(draw(st.integers(0, 2**48))), max_strands)


# -- independent fixpoint oracle: apply rules atomically in random order -----

def rule_matches(out: list[Link]) -> list[tuple[str, int]]:
    matches = []
    for c in range(len(out) - 1):
        here, nxt = out[c], out[c + 1]
        if here == nxt and here.position != 0:
            matches.append(("R1", c))
        if here.position != 0 and nxt == Link(here.point, 0):
            matches.append(("R2", c))
        if here.position == 0 and here != SEPARATOR and nxt != SEPARATOR:
            matches.append(("R3", c))
        if here == SEPARATOR and nxt.position == -1:
            matches.append(("R4", c))
    return matches


def apply_rule(out: list[Link], rule: str, c: int) -> None:
    if rule == "R1":
        del out[c:c + 2]
    elif rule == "R2":
        del out[c]
    elif rule == "R3":
        stop = c + 1
        while out[stop] != SEPARATOR:
            stop += 1
        del out[c + 1:stop]
    else:
        stop = c + 1
        while stop < len(out) and out[stop].position == -1:
            stop += 1
        del out[c + 1:stop]


def chaotic_reduce(seq, rng: random.Random) -> list[Link]:
    """Reduce by firing random applicable rules until none applies."""
    out = list(seq)
    while matches := rule_matches(out):
        rule, c = rng.choice(matches)
        apply_rule(out, rule, c)
    return out
