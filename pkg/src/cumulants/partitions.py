"""Integer partitions in multiplicity form and their combinatorial weights.

A partition of ``i`` is stored as ``((part, multiplicity), ...)`` with
strictly increasing parts.  The two numbers attached to a partition that
every transform needs are its length (total number of parts) and the block
count ``partition_coefficient`` -- the number of set partitions of an
``i``-element set whose block sizes realize it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby


@dataclass(frozen=True)
class Partition:
    """A partition of ``target`` with parts in multiplicity form."""

    target: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.target < 1:
            raise ValueError("partitions of 0 are not used here")
        total = 0
        last = 0
        for part, mult in self.parts:
            if part <= last or mult < 1:
                raise ValueError(f"bad multiplicity form: {self.parts}")
            total += part * mult
            last = part
        if total != self.target:
            raise ValueError(f"parts sum to {total}, not {self.target}")

    @property
    def length(self) -> int:
        """Number of parts counted with multiplicity."""
        return sum(mult for _, mult in self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(
            f"{p}^{m}" if m > 1 else str(p) for p, m in self.parts
        ) + ")"


def _descending_flat(i: int):
    # DFS over descending part lists with an explicit stack (no recursion);
    # children are pushed largest-first so the smallest next part pops first,
    # which yields ascending lexicographic order on the descending lists:
    # 4 -> [1,1,1,1], [2,1,1], [2,2], [3,1], [4]
    stack = [(i, i, ())]
    while stack:
        remaining, cap, prefix = stack.pop()
        if remaining == 0:
            yield prefix
            continue
        for part in range(min(remaining, cap), 0, -1):
            stack.append((remaining - part, part, prefix + (part,)))


@lru_cache(maxsize=None)
def enumerate_partitions(i: int) -> tuple[Partition, ...]:
    """All partitions of ``i`` in a fixed deterministic order.

    Memoized per process; the returned tuple is immutable and may be shared
    read-only across threads.
    """
    if i < 1:
        raise ValueError("need i >= 1")
    out = []
    for flat in _descending_flat(i):
        parts = tuple((part, len(list(grp))) for part, grp in groupby(reversed(flat)))
        out.append(Partition(i, parts))
    return tuple(out)


@lru_cache(maxsize=None)
def partition_coefficient(p: Partition) -> int:
    """Number of set partitions of a ``target``-set with this block-size shape.

    Equals ``i! / (prod r_j! * prod (part_j!)^{r_j})``.  Computed as products
    of binomials so intermediates stay integral; the one division per group
    of equal parts removes the ordering among its blocks and is always exact.
    """
    result = 1
    remaining = p.target
    for part, mult in p.parts:
        group = 1
        for _ in range(mult):
            group *= math.comb(remaining, part)
            remaining -= part
        q, r = divmod(group, math.factorial(mult))
        assert r == 0, (p, group, mult)
        result *= q
    return result


def composition_multiplicity(p: Partition) -> int:
    """Number of ordered compositions whose part multiset is this partition."""
    out = math.factorial(p.length)
    for _, mult in p.parts:
        out //= math.factorial(mult)
    return out
