"""Normalization of g-base lists to their unique reduced form.

Four deletion rules, each a homotopy of the encoded paths:

  R1  two adjacent equal links: the path sidesteps a puncture and immediately
      retraces, so both links go;
  R2  (j,+-1) directly before (j,0): a near-pass right next to the endpoint;
  R3  anything strictly between an endpoint and the next separator is debris
      left behind by a twist connector;
  R4  a block of below-passes directly after a separator: a path leaving the
      basepoint may always start with the straight segment instead.

The scan is a single left-to-right pass over a growing output stack: each
incoming link is weighed against the stack top with the rules in the order
above, retrying after every R2 pop, so every newly adjacent pair is
re-examined before anything else happens. One step of retrace is enough and
each link is handled at most twice, which keeps the work linear. Separators
and endpoint links are never deleted, R1 refuses position-0 links outright,
and no rule matches across a separator. The fixpoint is the same whatever
order the rules are applied in (the test suite checks this against a
randomized applier), which is what makes list equality decide braid-word
equality.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

from . import engine
from .gbase import GBaseWord, Link, require_valid


@dataclasses.dataclass
class ReduceStats:
    links_visited: int = 0
    links_deleted: int = 0


def reduce_links(links: Sequence[Link], stats: ReduceStats | None = None) -> list[Link]:
    """Run the deletion rules to fixpoint on a raw link sequence.

    This is the core scanner; it trusts its input (any separator-delimited
    sequence of paths, also fragments of a full g-base list). Use reduce() for
    validated GBaseWord values.
    """
    out, visited, deleted = engine.reduce_codes(engine.pack(links))
    if stats is not None:
        stats.links_visited += visited
        stats.links_deleted += deleted
    return list(engine.unpack(out))


def reduce(gbase: GBaseWord) -> GBaseWord:
    """Reduce a structurally valid (possibly unreduced) g-base to normal form."""
    reduced, _ = reduce_with_stats(gbase)
    return reduced


def reduce_with_stats(gbase: GBaseWord) -> tuple[GBaseWord, ReduceStats]:
    require_valid(gbase)
    stats = ReduceStats()
    out = reduce_links(gbase.links, stats)
    return GBaseWord(gbase.strand_count, tuple(out)), stats


def find_forbidden_sequence(links: Sequence[Link]) -> int | None:
    """Index of the first (p-1,e)(p,+-1)(p,-+1)(p+1,e) window, or None.

    Reachable reduced lists never wrap a puncture with an above-below pair
    this way; the scan backs the uniqueness claim in the test suite.
    """
    for k in range(len(links) - 3):
        a, b, c, d = links[k:k + 4]
        if (
            b.point == c.point
            and b.position == -c.position
            and b.position != 0
            and a.point == b.point - 1
            and d.point == b.point + 1
            and a.position == d.position
        ):
            return k
    return None
