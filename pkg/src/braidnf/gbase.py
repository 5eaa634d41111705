"""Link-list encoding of g-bases of the punctured disk.

A g-base is an ordered free basis of the fundamental group of a disk with n
punctures, one loop per puncture, all attached at a basepoint on the boundary.
Each loop's path is encoded as a run of links (point, position): position +1
means "passes just above puncture `point`", -1 "just below", 0 "ends at".
The basepoint is written (-1, 0) and doubles as the separator between the n
paths; the whole g-base is one flat list that starts and ends with a
separator.

Conventions that make the encoding canonical:
  * a path never leaves the basepoint through a below-pass, so a separator is
    never directly followed by a (j, -1) link in reduced lists;
  * points 0 and n+1 do not exist in the disk; they are sentinels the twist
    engine may create next to a separator, always with position -1, and the
    reducer always deletes them.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator, NamedTuple

from .errors import MalformedGBaseError


class Link(NamedTuple):
    point: int     # -1 for the basepoint, else 0..n+1 (0 and n+1 are virtual)
    position: int  # +1 above, -1 below, 0 endpoint/basepoint

    def __str__(self) -> str:
        return f"({self.point},{self.position})"


SEPARATOR = Link(-1, 0)


@dataclasses.dataclass(frozen=True)
class GBaseWord:
    strand_count: int
    links: tuple[Link, ...]

    def __post_init__(self):
        if self.strand_count < 1:
            raise MalformedGBaseError(f"strand count must be >= 1, got {self.strand_count}")

    def __len__(self) -> int:
        return len(self.links)

    def paths(self) -> Iterator[tuple[Link, ...]]:
        """Yield the separator-delimited paths, in list order."""
        start = None
        for k, link in enumerate(self.links):
            if link != SEPARATOR:
                continue
            if start is not None:
                yield self.links[start:k]
            start = k + 1


class Violation(NamedTuple):
    index: int   # link index where the violation was detected
    reason: str

    def __str__(self) -> str:
        return f"link {self.index}: {self.reason}"


def standard_gbase(strand_count: int) -> GBaseWord:
    """The g-base of straight segments from the basepoint to each puncture.

    Straight segments approach their puncture from below; the below-passes
    they would record next to the separator are exactly what reduction rule 4
    deletes, so the reduced list is emitted directly: each path is the single
    endpoint link.
    """
    if strand_count < 1:
        raise MalformedGBaseError(f"strand count must be >= 1, got {strand_count}")
    links = [SEPARATOR]
    for point in range(1, strand_count + 1):
        links.append(Link(point, 0))
        links.append(SEPARATOR)
    return GBaseWord(strand_count, tuple(links))


def validate(gbase: GBaseWord, reduced_expected: bool = False) -> Violation | None:
    """Check the structural invariants; return the first violation, or None.

    Structural validity (either mode): separators bookend the list and number
    n+1; every path is nonempty and contains exactly one position-0 link,
    all other links have position +-1; the endpoint points are a permutation
    of 1..n; sentinel points (0 and n+1) carry position -1 and sit directly
    after a separator. Unreduced lists may carry links after the endpoint
    (twist debris that rule 3 deletes); in reduced mode the endpoint must be
    final, and no sentinels, post-separator below-passes, (j,+-1)(j,0) pairs,
    or adjacent equal links may remain.
    """
    n = gbase.strand_count
    links = gbase.links
    if not links or links[0] != SEPARATOR:
        return Violation(0, "list must start with the separator (-1,0)")
    if links[-1] != SEPARATOR:
        return Violation(len(links) - 1, "list must end with the separator (-1,0)")

    separators = 0
    endpoints: list[int] = []
    endpoint_seen = False
    for k, link in enumerate(links):
        if link.position not in (-1, 0, 1):
            return Violation(k, f"position {link.position} out of range")
        if link.point == -1:
            if link != SEPARATOR:
                return Violation(k, f"basepoint link must be (-1,0), got {link}")
            if separators and not endpoint_seen:
                return Violation(k, "path has no endpoint link")
            separators += 1
            endpoint_seen = False
            continue
        if separators == 0:
            return Violation(k, "link before the leading separator")
        if not 0 <= link.point <= n + 1:
            return Violation(k, f"point {link.point} out of range for {n} strands")
        if link.point in (0, n + 1):
            if link.position != -1:
                return Violation(k, f"virtual point {link.point} must have position -1")
            if links[k - 1] != SEPARATOR:
                return Violation(k, f"virtual point {link.point} not adjacent to a separator")
        if link.position == 0:
            if endpoint_seen:
                return Violation(k, "second position-0 link in one path")
            if not 1 <= link.point <= n:
                return Violation(k, f"endpoint point {link.point} out of range")
            endpoint_seen = True
            endpoints.append(link.point)

    if separators != n + 1:
        return Violation(len(links) - 1, f"expected {n + 1} separators, found {separators}")
    if sorted(endpoints) != list(range(1, n + 1)):
        return Violation(len(links) - 1, f"endpoints {endpoints} are not a permutation of 1..{n}")

    if reduced_expected:
        for k, link in enumerate(links[:-1]):
            succ = links[k + 1]
            if link.point in (0, n + 1):
                return Violation(k, "virtual point in reduced list")
            if link == SEPARATOR and succ.position == -1:
                return Violation(k + 1, "below-pass directly after a separator")
            if link.position != 0 and succ == Link(link.point, 0):
                return Violation(k, f"{link} directly before its endpoint {succ}")
            if link == succ:
                return Violation(k, f"adjacent equal links {link}{succ}")
            if link.position == 0 and link != SEPARATOR and succ != SEPARATOR:
                return Violation(k + 1, "link between an endpoint and the next separator")
    return None


def require_valid(gbase: GBaseWord, reduced_expected: bool = False) -> None:
    violation = validate(gbase, reduced_expected)
    if violation is not None:
        raise MalformedGBaseError(str(violation))


def endpoints_permutation(gbase: GBaseWord) -> tuple[int, ...]:
    """Map path ordinal k (1-based, in list order) to the point its path ends at."""
    require_valid(gbase)
    return tuple(next(l.point for l in path if l.position == 0) for path in gbase.paths())


def format_gbase(gbase: GBaseWord) -> str:
    """Emit the full list, "(p,q)" tokens joined by single spaces."""
    return " ".join(str(link) for link in gbase.links)


def parse_gbase(text: str, strand_count: int) -> GBaseWord:
    """Parse the text form and check structural validity."""
    links = []
    for token in text.split():
        if not (token.startswith("(") and token.endswith(")") and token.count(",") == 1):
            raise MalformedGBaseError(f"token {token!r} is not of the form (p,q)")
        left, right = token[1:-1].split(",")
        try:
            point, position = int(left), int(right)
        except ValueError:
            raise MalformedGBaseError(f"token {token!r} is not a pair of integers") from None
        if position not in (-1, 0, 1):
            raise MalformedGBaseError(f"token {token!r}: position {position} out of range")
        if point < -1:
            raise MalformedGBaseError(f"token {token!r}: point {point} out of range")
        links.append(Link(point, position))
    gbase = GBaseWord(strand_count, tuple(links))
    require_valid(gbase)
    return gbase
