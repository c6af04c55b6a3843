"""Index-level closure machinery shared by the table modules.

Subsets of a carrier of size n are Python ints used as bitsets (bit i set
means element i is present). An "operation" is a row table: ``op[x][y]`` is
the index of x*y.
"""
from __future__ import annotations

from typing import Iterator, Sequence

Rows = Sequence[Sequence[int]]


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def to_mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def extend(closed: int, new: Sequence[int], ops: Sequence[Rows]) -> int:
    """Smallest superset of ``closed | new`` closed under every op.

    ``closed`` must already be closed; only products involving the new
    elements are formed.
    """
    members = bits(closed)
    mask = closed
    queue = []
    for x in new:
        if not (mask >> x) & 1:
            mask |= 1 << x
            members.append(x)
            queue.append(x)
    while queue:
        x = queue.pop()
        for op in ops:
            row = op[x]
            for y in members[:]:
                for p in (row[y], op[y][x]):
                    if not (mask >> p) & 1:
                        mask |= 1 << p
                        members.append(p)
                        queue.append(p)
    return mask


def closure(seed, ops: Sequence[Rows]) -> int:
    return extend(0, list(seed), ops)


def generating_set(op: Rows) -> list[int]:
    """Greedy generating set: scan in index order, keep anything not yet generated."""
    gens: list[int] = []
    mask = 0
    for x in range(len(op)):
        if not (mask >> x) & 1:
            gens.append(x)
            mask = extend(mask, [x], [op])
    return gens


def closed_subsets(ops: Sequence[Rows], n: int) -> Iterator[int]:
    """Every subset of range(n) closed under all ``ops`` (the empty set included).

    Walks the full include/exclude decision tree over the 2^n subsets.
    Including an element immediately adds everything it forces; a branch is
    cut only when a forced element was already excluded, so no closed subset
    is ever skipped. Each closed subset is yielded exactly once.
    """
    stack = [(0, 0, 0)]
    while stack:
        inside, outside, i = stack.pop()
        while i < n and (inside >> i) & 1:
            i += 1
        if i == n:
            yield inside
            continue
        stack.append((inside, outside | (1 << i), i + 1))
        grown = extend(inside, [i], ops)
        if not grown & outside:
            stack.append((grown, outside, i + 1))
