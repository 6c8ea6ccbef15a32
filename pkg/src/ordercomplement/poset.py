"""Finite posets: construction, validation, transforms and generators.

A :class:`Poset` is an immutable value holding element labels and the full
``<=`` relation table.  Everything downstream (matrices, chain counts, the
brute-force chain enumerator) reads only ``leq``.
"""

from __future__ import annotations

import heapq
import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    CycleError,
    DuplicateNameError,
    IndexOutOfRange,
    InvalidPermutation,
    ParseError,
    PosetError,
    SizeGuardError,
    UnknownLabelError,
)

MODES = ("covers", "relations")

#: identifier recorded in outputs of :func:`random_poset`
RNG_ALGORITHM = "python-random-mt19937"

MAX_LABELED_N = 5


@dataclass(frozen=True)
class PosetSpec:
    names: tuple
    pairs: tuple
    mode: str = "covers"

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "pairs", tuple(tuple(p) for p in self.pairs))
        if self.mode not in MODES:
            raise PosetError(f"mode must be one of {MODES}, got {self.mode!r}")
        for k, pair in enumerate(self.pairs):
            if len(pair) != 2:
                raise PosetError(f"pairs[{k}] must have exactly two labels, got {list(pair)!r}")


@dataclass(frozen=True)
class Poset:
    names: tuple
    leq: tuple = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(str(x) for x in self.names))
        object.__setattr__(self, "leq", tuple(tuple(bool(v) for v in row) for row in self.leq))
        _check_names(self.names)
        if len(self.leq) != len(self.names) or any(len(r) != len(self.names) for r in self.leq):
            raise PosetError("relation table must be n x n with n = number of names")
        validate(self)

    @property
    def n(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq[i][j]

    def comparable(self, i: int, j: int) -> bool:
        return self.leq[i][j] or self.leq[j][i]

    def up_masks(self) -> list:
        """Row ``i`` as an int bitmask of ``{j : x_i <= x_j}``."""
        return [_row_mask(row) for row in self.leq]

    def is_total(self) -> bool:
        return all(self.comparable(i, j) for i in range(self.n) for j in range(i + 1, self.n))

    def __str__(self):
        rels = [f"{self.names[i]}<{self.names[j]}" for i, j in cover_pairs(self)]
        return f"Poset(n={self.n}; {', '.join(rels) if rels else 'no relations'})"


def _check_names(names):
    seen = set()
    for x in names:
        if x in seen:
            raise DuplicateNameError(f"duplicate element label {x!r}")
        seen.add(x)


def _row_mask(row) -> int:
    m = 0
    for j, v in enumerate(row):
        if v:
            m |= 1 << j
    return m


def _table_from_masks(masks, n):
    return tuple(tuple(bool(m >> j & 1) for j in range(n)) for m in masks)


def validate(p: Poset) -> None:
    """Raise :class:`PosetError` unless ``p.leq`` is reflexive, antisymmetric and transitive."""
    n = len(p.leq)
    masks = [_row_mask(row) for row in p.leq]
    for i in range(n):
        if not p.leq[i][i]:
            raise PosetError(f"relation is not reflexive at {p.names[i]!r}")
    for i in range(n):
        for j in range(i + 1, n):
            if p.leq[i][j] and p.leq[j][i]:
                raise CycleError(f"antisymmetry violated: {p.names[i]!r} <= {p.names[j]!r} <= {p.names[i]!r}")
    for i in range(n):
        rest = masks[i]
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            rest ^= low
            if masks[j] & ~masks[i]:
                k = (masks[j] & ~masks[i]).bit_length() - 1
                raise PosetError(
                    f"relation is not transitive: {p.names[i]!r} <= {p.names[j]!r} <= {p.names[k]!r}"
                )


def closure_masks(n: int, strict_pairs: Iterable) -> list:
    """Reflexive-transitive closure (Warshall on bitmask rows)."""
    masks = [1 << i for i in range(n)]
    for i, j in strict_pairs:
        masks[i] |= 1 << j
    for k in range(n):
        bit = 1 << k
        mk = masks[k]
        for i in range(n):
            if masks[i] & bit:
                masks[i] |= mk
    return masks


def build(spec: PosetSpec) -> Poset:
    """Closure of the given pairs.  ``covers`` and ``relations`` modes are treated alike."""
    names = spec.names
    _check_names(names)
    index = {x: i for i, x in enumerate(names)}
    idx_pairs = []
    for k, (a, b) in enumerate(spec.pairs):
        for lab in (a, b):
            if lab not in index:
                raise UnknownLabelError(f"pairs[{k}] uses unknown label {lab!r}")
        if a == b:
            raise CycleError(f"pairs[{k}] relates {a!r} to itself", pair_index=k)
        idx_pairs.append((index[a], index[b]))
    n = len(names)
    masks = closure_masks(n, idx_pairs)
    for k, (i, j) in enumerate(idx_pairs):
        if masks[j] >> i & 1:
            raise CycleError(
                f"pairs[{k}] = [{names[i]!r}, {names[j]!r}] lies on a cycle: "
                f"{names[j]!r} <= {names[i]!r} also follows from the pairs",
                pair_index=k,
            )
    return Poset(names, _table_from_masks(masks, n))


def from_leq(leq: Sequence[Sequence[bool]], names: Optional[Sequence[str]] = None) -> Poset:
    n = len(leq)
    if names is None:
        names = [str(i) for i in range(n)]
    return Poset(tuple(names), tuple(tuple(r) for r in leq))


def parse_spec(text: str) -> PosetSpec:
    """Parse the JSON poset document ``{"names": [...], "mode": ..., "pairs": [[a, b], ...]}``."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(obj, dict):
        raise ParseError("poset document must be a JSON object")
    unknown = set(obj) - {"names", "mode", "pairs"}
    if unknown:
        raise ParseError(f"unknown fields: {sorted(unknown)}")
    names = obj.get("names")
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise ParseError('"names" must be a list of strings')
    pairs = obj.get("pairs", [])
    if not isinstance(pairs, list):
        raise ParseError('"pairs" must be a list of [lesser, greater] label pairs')
    for k, pr in enumerate(pairs):
        if not (isinstance(pr, list) and len(pr) == 2 and all(isinstance(x, str) for x in pr)):
            raise ParseError(f"pairs[{k}] must be a two-element list of labels, got {pr!r}")
    mode = obj.get("mode", "covers")
    if mode not in MODES:
        raise ParseError(f'"mode" must be one of {list(MODES)}, got {mode!r}')
    return PosetSpec(tuple(names), tuple(tuple(pr) for pr in pairs), mode)


def loads(text: str) -> Poset:
    return build(parse_spec(text))


def load(path) -> Poset:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def cover_pairs(p: Poset) -> list:
    """Hasse-diagram edges ``(i, j)`` with ``x_j`` covering ``x_i``."""
    n = p.n
    out = []
    for i in range(n):
        for j in range(n):
            if p.lt(i, j) and not any(p.lt(i, k) and p.lt(k, j) for k in range(n)):
                out.append((i, j))
    return out


def to_spec(p: Poset) -> PosetSpec:
    return PosetSpec(p.names, tuple((p.names[i], p.names[j]) for i, j in cover_pairs(p)), "covers")


def dumps(p: Poset) -> str:
    spec = to_spec(p)
    return json.dumps({"names": list(spec.names), "mode": spec.mode, "pairs": [list(x) for x in spec.pairs]})


# transforms ----------------------------------------------------------------

def linear_extension(p: Poset) -> list:
    """Kahn's algorithm, always emitting the smallest available original index."""
    n = p.n
    indeg = [sum(1 for i in range(n) if p.lt(i, j)) for j in range(n)]
    heap = [j for j in range(n) if indeg[j] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        i = heapq.heappop(heap)
        order.append(i)
        for j in range(n):
            if p.lt(i, j):
                indeg[j] -= 1
                if indeg[j] == 0:
                    heapq.heappush(heap, j)
    assert len(order) == n
    return order


def relabel(p: Poset, perm: Sequence[int]) -> Poset:
    """New poset whose element ``i`` is the old element ``perm[i]``."""
    perm = list(perm)
    if sorted(perm) != list(range(p.n)):
        raise InvalidPermutation(f"{perm!r} is not a permutation of 0..{p.n - 1}")
    names = tuple(p.names[k] for k in perm)
    leq = tuple(tuple(p.leq[a][b] for b in perm) for a in perm)
    return Poset(names, leq)


def remove_element(p: Poset, i: int) -> Poset:
    if not 0 <= i < p.n:
        raise IndexOutOfRange(f"index {i} out of range for poset of size {p.n}")
    keep = [k for k in range(p.n) if k != i]
    return Poset(tuple(p.names[k] for k in keep), tuple(tuple(p.leq[a][b] for b in keep) for a in keep))


def find_maximum(p: Poset) -> Optional[int]:
    for x in range(p.n):
        if all(p.leq[y][x] for y in range(p.n)):
            return x
    return None


def find_minimum(p: Poset) -> Optional[int]:
    for x in range(p.n):
        if all(p.leq[x][y] for y in range(p.n)):
            return x
    return None


# generators ----------------------------------------------------------------

def chain(n: int) -> Poset:
    _nonneg(n, "n")
    return Poset(tuple(f"x{i}" for i in range(n)), tuple(tuple(i <= j for j in range(n)) for i in range(n)))


def antichain(n: int) -> Poset:
    _nonneg(n, "n")
    return Poset(tuple(f"x{i}" for i in range(n)), tuple(tuple(i == j for j in range(n)) for i in range(n)))


def boolean_lattice(k: int) -> Poset:
    """Subsets of ``{1..k}`` by inclusion; element ``s`` is the subset with bitmask ``s``."""
    _nonneg(k, "k")
    size = 1 << k
    names = []
    for s in range(size):
        members = [str(b + 1) for b in range(k) if s >> b & 1]
        names.append("{" + ",".join(members) + "}")
    return Poset(tuple(names), tuple(tuple(s & t == s for t in range(size)) for s in range(size)))


def divisor_poset(m: int) -> Poset:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    divs = [d for d in range(1, m + 1) if m % d == 0]
    return Poset(tuple(str(d) for d in divs), tuple(tuple(b % a == 0 for b in divs) for a in divs))


def random_poset(n: int, density: float, seed: int) -> Poset:
    """Seeded random poset.

    Draws each strict pair ``i < j`` independently with probability
    ``density``, shuffles the labels with the same generator, then closes.
    Uses :class:`random.Random` (see :data:`RNG_ALGORITHM`).
    """
    _nonneg(n, "n")
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    perm = list(range(n))
    rng.shuffle(perm)
    # element i of the drawn order becomes position perm[i]
    masks = closure_masks(n, [(perm[i], perm[j]) for i, j in pairs])
    return Poset(tuple(f"x{i}" for i in range(n)), _table_from_masks(masks, n))


def all_labeled_posets(n: int) -> Iterator[Poset]:
    """Every partial order on ``{0..n-1}``, each exactly once.

    Each unordered pair ``{i, j}`` is assigned one of: incomparable,
    ``i < j``, ``j < i``; assignments are extended pair by pair and pruned as
    soon as transitivity fails on the pairs fixed so far.
    """
    _nonneg(n, "n")
    if n > MAX_LABELED_N:
        raise SizeGuardError(f"all_labeled_posets is limited to n <= {MAX_LABELED_N}, got {n}")
    names = tuple(f"x{i}" for i in range(n))
    slots = list(itertools.combinations(range(n), 2))
    lt = [[False] * n for _ in range(n)]

    def consistent(upto):
        # only triples whose three pairs are all decided
        decided = set(slots[:upto])
        i, j = slots[upto - 1]
        for k in range(n):
            if k in (i, j):
                continue
            if tuple(sorted((i, k))) not in decided or tuple(sorted((j, k))) not in decided:
                continue
            for a, b in ((i, j), (j, i)):
                if lt[a][b] and lt[b][k] and not lt[a][k]:
                    return False
                if lt[k][a] and lt[a][b] and not lt[k][b]:
                    return False
                if lt[a][k] and lt[k][b] and not lt[a][b]:
                    return False
        return True

    def rec(s):
        if s == len(slots):
            yield Poset(names, tuple(tuple(i == j or lt[i][j] for j in range(n)) for i in range(n)))
            return
        i, j = slots[s]
        for choice in (0, 1, 2):
            lt[i][j] = choice == 1
            lt[j][i] = choice == 2
            if consistent(s + 1):
                yield from rec(s + 1)
        lt[i][j] = lt[j][i] = False

    yield from rec(0)


def _nonneg(v, what):
    if v < 0:
        raise ValueError(f"{what} must be >= 0, got {v}")
