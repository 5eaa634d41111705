"""Action of one braid generator on a g-base list.

The generator with index i acts as a half-twist that rotates a small disk
around punctures i and i+1 by 180 degrees (positively or negatively). On the
link list the twist is local: only maximal runs of consecutive links whose
point is i or i+1 are affected. For each such run, in one left-to-right pass:

  1. If the link before the run is the basepoint separator, the path is first
     nudged off the basepoint: one or two below-pass links are inserted right
     after the separator so that the run is preceded by an ordinary link
     (six insertion patterns, one per way a path can leave the basepoint into
     the twisted region). For boundary generators this may create a link at
     the virtual point 0 or n+1; the reducer deletes it again.
  2. The run itself is rotated in place: each link's position flips sign and
     its point reflects across the twist center (i <-> i+1).
  3. Two-link connectors are spliced in before and after the rotated run to
     rejoin it with the rest of the path, passing below the twisted region
     when the neighbouring link lies to its left and above when it lies to
     its right (mirrored for a negative twist).

Runs are located against the input list and the scan resumes after each
run's connector, so links inserted by one run are never re-twisted. The
output is unreduced; callers normalize it afterwards.

The heavy lifting happens in the packed-integer engine; this module is the
typed boundary plus the run scanner.
"""

from __future__ import annotations

import dataclasses

from . import engine
from .braidword import Letter
from .gbase import GBaseWord, Link


@dataclasses.dataclass(frozen=True)
class LocalRun:
    """A maximal block links[start..end] with points in {i, i+1} and its neighbours."""
    start: int
    end: int
    before: int  # index of the link just before the run
    after: int   # index of the link just after the run


@dataclasses.dataclass
class TwistStats:
    """Work counters for one generator application.

    links_visited counts input links examined (the full scan), links_inserted
    the links added by steps 1-3, and pre_reduce_length the unreduced output
    length, so pre_reduce_length = input length + links_inserted. The reduce_*
    fields are filled in by the normalizer pass that follows each twist.
    """
    links_visited: int = 0
    links_inserted: int = 0
    pre_reduce_length: int = 0
    reduce_links_visited: int = 0
    reduce_links_deleted: int = 0


def find_local_runs(gbase: GBaseWord, index: int) -> list[LocalRun]:
    """Maximal runs of links with point in {index, index+1}, left to right."""
    if not 1 <= index <= gbase.strand_count - 1:
        raise ValueError(f"generator index {index} out of range for {gbase.strand_count} strands")
    runs = []
    points = (index, index + 1)
    start = None
    for k, link in enumerate(gbase.links):
        if link.point in points:
            if start is None:
                start = k
        elif start is not None:
            runs.append(LocalRun(start, k - 1, start - 1, k))
            start = None
    # the list ends with a separator, so a run never reaches the last index
    return runs


def twist_link(link: Link, index: int) -> Link:
    """Rotate one link by the half-twist at index: flip position, reflect point."""
    return engine.unpack_link(6 * index + 11 - engine.pack_link(link))


def separator_detach_links(first: Link, second: Link | None, index: int) -> list[Link]:
    """Links to insert after a separator that directly precedes a run.

    `first` is the run's first link and `second` the next link of the path.
    The returned links follow the separator in order; the first one becomes
    the run's new predecessor, and any further link (its point is always i or
    i+1) joins the run and is rotated with it.
    """
    codes = engine.detach_codes(
        engine.pack_link(first),
        engine.pack_link(second) if second is not None else None,
        index,
    )
    return [engine.unpack_link(code) for code in codes]


def prefix_links(index: int, sign: int, before_point: int) -> list[Link]:
    """Connector spliced between the run's predecessor and the rotated run."""
    codes = engine.prefix_codes(index, sign, before_point == index - 1)
    return [engine.unpack_link(code) for code in codes]


def postfix_links(index: int, sign: int, after_point: int) -> list[Link]:
    """Connector spliced between the rotated run and its successor."""
    codes = engine.postfix_codes(index, sign, after_point == index - 1)
    return [engine.unpack_link(code) for code in codes]


def apply_letter(gbase: GBaseWord, letter: Letter) -> tuple[GBaseWord, TwistStats]:
    """Apply one letter's half-twist to a reduced g-base; returns the unreduced result.

    The input must be reduced: the detachment patterns of step 1 assume the
    conventions that reduction enforces.
    """
    if not 1 <= letter.index <= gbase.strand_count - 1:
        raise ValueError(
            f"generator index {letter.index} out of range for "
            f"{gbase.strand_count} strands"
        )
    codes, inserted = engine.twist_codes(
        engine.pack(gbase.links), letter.index, letter.sign
    )
    stats = TwistStats(
        links_visited=len(gbase.links),
        links_inserted=inserted,
        pre_reduce_length=len(codes),
    )
    return GBaseWord(gbase.strand_count, engine.unpack(codes)), stats
