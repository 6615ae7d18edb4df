#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Integer partitions and the combinatorics around them.

- Partition / Composition / RPartitePartition value types and their text literals
- Boundary (0-1) words, hook lengths, rim hook removal
- Abacus (beta-set) configurations: r-cores, r-quotients and the hat map

Abacus convention: a partition is read with N beads, N the smallest multiple
of r with N >= l(lambda) and N >= r. The bead for beta number v sits on runner
v mod r at level v // r. Runner j of the abacus is quotient component j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import partitions as _sympy_partitions

EMPTY_LITERALS = ("", "0", "∅", "-")


class InvalidInputError(ValueError):
    """Malformed literal, inconsistent sizes or a violated precondition."""


# ---------------------------------------------------------------------------
# Value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise InvalidInputError(f"Partition parts must be positive integers, got {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InvalidInputError(f"Partition parts must be weakly decreasing, got {parts}")

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def part(self, i: int) -> int:
        """lambda_i (0-indexed) with zero beyond the length."""
        return self.parts[i] if i < len(self.parts) else 0

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "∅"

    def to_json(self) -> List[int]:
        return list(self.parts)


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of positive integers."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise InvalidInputError(f"Composition parts must be positive integers, got {parts}")

    @classmethod
    def of(cls, *parts: int) -> Composition:
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __len__(self) -> int:
        return len(self.parts)

    def sorted(self) -> Partition:
        return Partition(tuple(sorted(self.parts, reverse=True)))

    def scaled(self, factor: int) -> Composition:
        return Composition(tuple(factor * p for p in self.parts))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "∅"


def as_composition(weight: Sequence[int] | Partition | Composition) -> Composition:
    if isinstance(weight, Composition):
        return weight
    if isinstance(weight, Partition):
        return Composition(weight.parts)
    return Composition(tuple(weight))


@dataclass(frozen=True, order=True)
class RPartitePartition:
    """Ordered tuple of r >= 1 partitions; indexes Irr(G wr S_n) for |Irr(G)| = r."""

    components: Tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) < 1:
            raise InvalidInputError("An r-partite partition needs at least one component")
        for c in comps:
            if not isinstance(c, Partition):
                raise InvalidInputError(f"Components must be partitions, got {c!r}")

    @classmethod
    def of(cls, *components: Sequence[int]) -> RPartitePartition:
        return cls(tuple(Partition(tuple(c)) for c in components))

    @property
    def arity(self) -> int:
        return len(self.components)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(c.size for c in self.components)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def support(self) -> FrozenSet[int]:
        """Supp(lambda): indices of the nonempty components."""
        return frozenset(i for i, c in enumerate(self.components) if c)

    def padded(self, arity: int) -> RPartitePartition:
        if arity < self.arity:
            raise InvalidInputError(f"Cannot pad arity {self.arity} down to {arity}")
        return RPartitePartition(self.components + (Partition(),) * (arity - self.arity))

    def __getitem__(self, i: int) -> Partition:
        return self.components[i]

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.components)

    def __str__(self) -> str:
        return "[" + "|".join(str(c) for c in self.components) + "]"

    def to_json(self) -> List[List[int]]:
        return [c.to_json() for c in self.components]


# ---------------------------------------------------------------------------
# Literals
# ---------------------------------------------------------------------------

def parse_partition(text: str) -> Partition:
    """Parse "3,1,1"; "", "0", "∅" and "-" denote the empty partition."""
    raw = str(text).strip()
    if raw in EMPTY_LITERALS:
        return Partition()
    try:
        parts = tuple(int(p) for p in raw.split(","))
    except ValueError:
        raise InvalidInputError(f"Malformed partition literal {text!r}") from None
    return Partition(parts)


def parse_composition(text: str) -> Composition:
    raw = str(text).strip()
    if raw in EMPTY_LITERALS:
        return Composition()
    try:
        parts = tuple(int(p) for p in raw.split(","))
    except ValueError:
        raise InvalidInputError(f"Malformed composition literal {text!r}") from None
    return Composition(parts)


def parse_rpartite(text: str) -> RPartitePartition:
    """Parse "[3,1|∅|2]" (brackets optional, "-" or empty for empty components)."""
    raw = str(text).strip()
    if raw.startswith("[") and raw.endswith("]"):
        raw = raw[1:-1]
    elif raw.startswith("[") or raw.endswith("]"):
        raise InvalidInputError(f"Unbalanced brackets in {text!r}")
    return RPartitePartition(tuple(parse_partition(c) for c in raw.split("|")))


def parse_shape(text: str) -> Partition | RPartitePartition:
    """Straight shape unless the literal contains '|' or brackets."""
    raw = str(text).strip()
    if "|" in raw or raw.startswith("["):
        return parse_rpartite(raw)
    return parse_partition(raw)


# ---------------------------------------------------------------------------
# Basic operations
# ---------------------------------------------------------------------------

def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return Partition()
    return Partition(tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])))


def hook_lengths(lam: Partition) -> List[List[int]]:
    conj = conjugate(lam)
    return [
        [(row - j - 1) + (conj[j] - i - 1) + 1 for j in range(row)]
        for i, row in enumerate(lam.parts)
    ]


def degree(lam: Partition) -> int:
    """f^lambda = n! / prod(hooks): the number of standard Young tableaux."""
    denominator = math.prod(h for row in hook_lengths(lam) for h in row)
    return math.factorial(lam.size) // denominator


def odd_parts(lam: Partition) -> int:
    return sum(1 for p in lam.parts if p % 2)


def boundary_word(lam: Partition) -> str:
    """
    Southeast boundary walked from the bottom-left corner: a horizontal step
    is "1", a vertical step is "0". Nonempty partitions start with 1 and end with 0.
    """
    steps = []
    for i in range(lam.length - 1, -1, -1):
        steps.append("1" * (lam.parts[i] - lam.part(i + 1)))
        steps.append("0")
    return "".join(steps)


def from_boundary_word(word: str) -> Partition:
    """Inverse of boundary_word; leading 0s and trailing 1s are ignored."""
    width = 0
    rows: List[int] = []
    for ch in word:
        if ch == "1":
            width += 1
        elif ch == "0":
            if width:
                rows.append(width)
        else:
            raise InvalidInputError(f"Boundary words contain only 0 and 1, got {word!r}")
    return Partition(tuple(reversed(rows)))


# ---------------------------------------------------------------------------
# Rim hooks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RimHookRemoval:
    before: Partition
    after: Partition
    length: int
    height: int
    cells: FrozenSet[Tuple[int, int]]


def removable_rim_hooks(lam: Partition, k: int) -> List[RimHookRemoval]:
    """
    Every way to remove a rim hook of length k.

    Each cell (i, j) with hook length k determines one such hook: the rim
    running from the end of row i to the bottom of column j. Its height is
    the leg length of the cell, i.e. the number of rows met minus one.
    """
    if k < 1:
        raise InvalidInputError(f"Rim hook length must be positive, got {k}")
    conj = conjugate(lam)
    removals: List[RimHookRemoval] = []
    for i, row in enumerate(lam.parts):
        for j in range(row):
            arm = row - j - 1
            leg = conj[j] - i - 1
            if arm + leg + 1 != k:
                continue
            new_parts = list(lam.parts)
            for r in range(i, i + leg):
                new_parts[r] = lam.parts[r + 1] - 1
            new_parts[i + leg] = j
            cells = frozenset(
                (r, c)
                for r in range(i, i + leg + 1)
                for c in range(new_parts[r], lam.parts[r])
            )
            after = Partition(tuple(p for p in new_parts if p > 0))
            removals.append(RimHookRemoval(lam, after, k, leg, cells))
    return removals


# ---------------------------------------------------------------------------
# Abacus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BetaConfiguration:
    """Beads on r runners; runner j holds the levels of the beta numbers v = j + r*level."""

    runner_count: int
    runners: Tuple[Tuple[int, ...], ...]

    @property
    def total_beads(self) -> int:
        return sum(len(r) for r in self.runners)

    def beta_set(self) -> List[int]:
        return sorted(
            (j + self.runner_count * level for j, levels in enumerate(self.runners) for level in levels),
            reverse=True,
        )

    def to_partition(self) -> Partition:
        return partition_from_beta(self.beta_set())

    def slid(self) -> BetaConfiguration:
        """Every bead pushed to the lowest free level of its runner."""
        return BetaConfiguration(
            self.runner_count,
            tuple(tuple(range(len(levels))) for levels in self.runners),
        )


def beta_numbers(lam: Partition, beads: int) -> List[int]:
    """{lambda_i + N - i : 1 <= i <= N}, largest first."""
    if beads < lam.length:
        raise InvalidInputError(f"{beads} beads cannot encode a partition of length {lam.length}")
    return [lam.part(i) + beads - 1 - i for i in range(beads)]


def partition_from_beta(betas: Sequence[int]) -> Partition:
    ordered = sorted(betas, reverse=True)
    if len(set(ordered)) != len(ordered) or (ordered and ordered[-1] < 0):
        raise InvalidInputError(f"Beta numbers must be distinct and non-negative, got {list(betas)}")
    n = len(ordered)
    return Partition(tuple(p for p in (b - (n - 1 - i) for i, b in enumerate(ordered)) if p > 0))


def minimal_bead_count(length: int, r: int) -> int:
    return max(r, r * math.ceil(length / r))


def to_beta(lam: Partition, r: int, beads: Optional[int] = None) -> BetaConfiguration:
    """Abacus of lambda on r runners with the canonical (or an explicit, larger) bead count."""
    if r < 1:
        raise InvalidInputError(f"Runner count must be positive, got {r}")
    minimal = minimal_bead_count(lam.length, r)
    if beads is None:
        beads = minimal
    elif beads % r or beads < minimal:
        raise InvalidInputError(f"Bead count must be a multiple of {r} and at least {minimal}, got {beads}")
    runners: List[List[int]] = [[] for _ in range(r)]
    for v in sorted(beta_numbers(lam, beads)):
        runners[v % r].append(v // r)
    return BetaConfiguration(r, tuple(tuple(levels) for levels in runners))


def r_core(lam: Partition, r: int) -> Partition:
    if r < 2:
        raise InvalidInputError(f"Cores need r >= 2, got {r}")
    return to_beta(lam, r).slid().to_partition()


def r_core_by_peeling(lam: Partition, r: int) -> Partition:
    """Greedy removal of r-rim hooks, always taking the first one found."""
    if r < 2:
        raise InvalidInputError(f"Cores need r >= 2, got {r}")
    current = lam
    while True:
        hooks = removable_rim_hooks(current, r)
        if not hooks:
            return current
        current = hooks[0].after


def r_quotient(lam: Partition, r: int) -> RPartitePartition:
    if r < 2:
        raise InvalidInputError(f"Quotients need r >= 2, got {r}")
    config = to_beta(lam, r)
    return RPartitePartition(tuple(partition_from_beta(levels) for levels in config.runners))


def hat(lam: RPartitePartition) -> Partition:
    """The partition of r*n with empty r-core whose r-quotient is lambda."""
    r = lam.arity
    if r < 2:
        raise InvalidInputError(f"hat needs arity >= 2, got {r}")
    per_runner = max(1, max(c.length for c in lam.components))
    betas = [
        j + r * b
        for j, component in enumerate(lam.components)
        for b in beta_numbers(component, per_runner)
    ]
    return partition_from_beta(betas)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _partitions_of(n: int) -> Tuple[Partition, ...]:
    found = []
    for multiplicities in _sympy_partitions(n):
        parts: List[int] = []
        for part in sorted(multiplicities, reverse=True):
            parts.extend([part] * multiplicities[part])
        found.append(Partition(tuple(parts)))
    # Lexicographically decreasing: (n), (n-1,1), ...
    return tuple(sorted(found, reverse=True))


def enumerate_partitions(n: int) -> List[Partition]:
    if n < 0:
        raise InvalidInputError(f"Cannot partition a negative number, got {n}")
    if n == 0:
        return [Partition()]
    return list(_partitions_of(n))


def enumerate_compositions(n: int) -> Iterator[Composition]:
    """All compositions of n (2^(n-1) of them for n >= 1)."""
    if n == 0:
        yield Composition()
        return
    for cuts in product((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield Composition(tuple(parts))


def enumerate_rpartite(n: int, r: int) -> List[RPartitePartition]:
    """All r-partite partitions of n, ordered by component sizes then components."""
    if r < 1:
        raise InvalidInputError(f"Arity must be positive, got {r}")
    if n < 0:
        raise InvalidInputError(f"Cannot partition a negative number, got {n}")
    result: List[RPartitePartition] = []

    def size_vectors(remaining: int, slots: int) -> Iterator[Tuple[int, ...]]:
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining, -1, -1):
            for rest in size_vectors(remaining - first, slots - 1):
                yield (first,) + rest

    for sizes in size_vectors(n, r):
        for comps in product(*(enumerate_partitions(s) for s in sizes)):
            result.append(RPartitePartition(tuple(comps)))
    return result


def enumerate_empty_core(n: int, r: int) -> List[Partition]:
    """P_{rn}(empty): partitions of r*n with empty r-core."""
    return [lam for lam in enumerate_partitions(r * n) if not r_core(lam, r)]
