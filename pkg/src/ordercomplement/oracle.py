"""Brute-force chain census.

Walks every strict chain ``x_0 < x_1 < ... < x_k`` depth-first, growing each
chain only upward from its current top.  Reads nothing but ``Poset.leq``;
no matrices are involved, so it is an independent check on the
matrix-power chain counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeGuardError
from .poset import Poset

DEFAULT_SIZE_GUARD = 14


@dataclass(frozen=True)
class OracleCensus:
    counts: tuple
    total: int

    @property
    def euler_characteristic(self) -> int:
        return sum(c if k % 2 == 0 else -c for k, c in enumerate(self.counts))


def enumerate_chains(p: Poset, size_guard: int = DEFAULT_SIZE_GUARD) -> OracleCensus:
    n = p.n
    if n > size_guard:
        raise SizeGuardError(
            f"chain enumeration is exponential; n = {n} exceeds the size guard {size_guard}"
        )
    above = [[j for j in range(n) if j != i and p.leq[i][j]] for i in range(n)]
    counts = [0] * n

    def extend(top, length):
        counts[length] += 1
        for nxt in above[top]:
            extend(nxt, length + 1)

    for start in range(n):
        extend(start, 0)
    return OracleCensus(tuple(counts), sum(counts))


def euler_char_oracle(p: Poset, size_guard: int = DEFAULT_SIZE_GUARD) -> int:
    return enumerate_chains(p, size_guard).euler_characteristic
