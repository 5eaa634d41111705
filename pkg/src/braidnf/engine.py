"""Packed-integer core of the twist/reduce pipeline.

Lists routinely grow to hundreds of thousands of links on tangled words, so
the pipeline works on plain ints instead of Link tuples:

    code = 3 * (point + 1) + (position + 1)

Handy consequences, used throughout:

    separator (-1,0)            -> code 1
    position of a code          -> code % 3 - 1
    point of a code             -> code // 3 - 1
    endpoint code of same point -> code - code % 3 + 1
    half-twist at index i       -> code' = 6*i + 11 - code
                                   (point reflects across i, i+1; position
                                   flips sign; one subtraction does both)

The public modules pack, call in here, and unpack at the boundary; semantics
live in their docstrings. Counter meanings match TwistStats / ReduceStats.
"""

from __future__ import annotations

from .errors import InternalStateError
from .gbase import Link

SEPARATOR_CODE = 1


def pack_link(link: Link) -> int:
    return 3 * (link.point + 1) + link.position + 1


def unpack_link(code: int) -> Link:
    return Link(code // 3 - 1, code % 3 - 1)


def pack(links) -> list[int]:
    return [3 * (point + 1) + position + 1 for point, position in links]


def unpack(codes) -> tuple[Link, ...]:
    return tuple(Link(code // 3 - 1, code % 3 - 1) for code in codes)


def detach_codes(first: int, second: int | None, index: int) -> list[int]:
    """Links to insert after a separator that directly precedes a run.

    `first` is the run's first link, `second` the following link of the path.
    The first returned code becomes the run's new predecessor; any further
    code has a point inside the twisted region and joins the run. The six
    patterns are the only ways a reduced path can leave the basepoint into
    the region, so anything else is an engine bug.
    """
    base = 3 * index  # code(i,-1) = base+3, code(i+1,-1) = base+6, etc.
    if first == base + 4:  # (i,0)
        return [base]
    if first == base + 7:  # (i+1,0)
        return [base + 9]
    if first == base + 5 and second is not None:  # (i,1) then ...
        second_point = second // 3 - 1
        if second_point == index + 1:
            return [base]
        if second_point == index - 1:
            return [base, base + 3]
    if first == base + 8 and second is not None:  # (i+1,1) then ...
        second_point = second // 3 - 1
        if second_point == index + 2:
            return [base + 9, base + 6]
        if second_point == index:
            return [base + 9]
    raise InternalStateError(
        f"run after a separator starts {unpack_link(first)} -> "
        f"{unpack_link(second) if second is not None else None}, "
        f"which no detachment case covers"
    )


def prefix_codes(index: int, sign: int, to_left: bool) -> list[int]:
    base = 3 * index
    if to_left:
        return [base + 3, base + 6] if sign > 0 else [base + 5, base + 8]
    return [base + 8, base + 5] if sign > 0 else [base + 6, base + 3]


def postfix_codes(index: int, sign: int, to_left: bool) -> list[int]:
    base = 3 * index
    if to_left:
        return [base + 6, base + 3] if sign > 0 else [base + 8, base + 5]
    return [base + 5, base + 8] if sign > 0 else [base + 3, base + 6]


def twist_codes(codes: list[int], index: int, sign: int) -> tuple[list[int], int]:
    """Apply one half-twist; returns the unreduced list and the insert count.

    Single pass: links outside the twisted region are copied through, each
    maximal in-region run is detached from the basepoint if needed, rotated,
    and re-spliced with connectors. The scan walks the input only, so nothing
    inserted here is ever re-matched as a run.
    """
    lo = 3 * index + 3  # in-region codes are lo <= code < lo + 6
    hi = lo + 6
    mirror = 6 * index + 11
    left_point = index - 1
    pre_left = prefix_codes(index, sign, True)
    pre_right = prefix_codes(index, sign, False)
    post_left = postfix_codes(index, sign, True)
    post_right = postfix_codes(index, sign, False)

    out: list[int] = []
    inserted = 0
    total = len(codes)
    k = 0
    while k < total:
        code = codes[k]
        if not lo <= code < hi:
            out.append(code)
            k += 1
            continue
        start = k
        while k < total and lo <= codes[k] < hi:
            k += 1
        run = codes[start:k]
        before = codes[start - 1]
        if before == SEPARATOR_CODE:
            added = detach_codes(
                codes[start], codes[start + 1] if start + 1 < total else None, index
            )
            before = added[0]
            out.append(before)
            run = added[1:] + run
            inserted += len(added)
        out += pre_left if before // 3 - 1 == left_point else pre_right
        out += [mirror - c for c in run]
        out += post_left if codes[k] // 3 - 1 == left_point else post_right
        inserted += 4
    return out, inserted


def reduce_codes(codes: list[int]) -> tuple[list[int], int, int]:
    """Run the four deletion rules to fixpoint; returns (out, visited, deleted).

    One pass over a stack: each incoming link is weighed against the stack
    top (rules in priority order R1, R2, R3, R4), retrying after every pop so
    newly adjacent pairs are re-examined. Endpoint and separator links are
    never deleted.
    """
    out: list[int] = []
    visited = 0
    deleted = 0
    for code in codes:
        while True:
            visited += 1
            if not out:
                out.append(code)
                break
            top = out[-1]
            if top == code:  # R1: equal pair vanishes
                if top % 3 == 1:
                    raise InternalStateError(
                        f"adjacent equal position-0 links {unpack_link(top)}"
                    )
                out.pop()
                deleted += 2
                break
            top_position = top % 3
            if top_position != 1 and code == top - top_position + 1:  # R2
                out.pop()
                deleted += 1
                continue  # the endpoint may cancel further near-passes
            if top_position == 1 and top != SEPARATOR_CODE and code != SEPARATOR_CODE:
                if code % 3 == 1:  # R3 must never swallow an endpoint
                    raise InternalStateError(
                        f"position-0 link {unpack_link(code)} in endpoint debris"
                    )
                deleted += 1
                break
            if top == SEPARATOR_CODE and code % 3 == 0:  # R4
                deleted += 1
                break
            out.append(code)
            break
    return out, visited, deleted
