#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Border-strip tableaux of straight and r-partite shapes.

A tableau of shape lambda and weight mu = (mu_1, ..., mu_t) is recorded as the
peeling that produced it: strips of lengths mu_t, ..., mu_1 are removed in that
order until nothing is left. Steps are stored in ascending index order; step i
carries the component holding the strip, the strip length and its height.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, Optional, Sequence, Tuple, Union

from partitions import (
    Composition,
    InvalidInputError,
    Partition,
    RPartitePartition,
    as_composition,
    removable_rim_hooks,
)

Shape = Union[Partition, RPartitePartition]


@dataclass(frozen=True)
class BorderStripStep:
    index: int
    component: Optional[int]
    length: int
    height: int
    cells: FrozenSet[Tuple[int, int]]


@dataclass(frozen=True)
class BorderStripTableau:
    shape: Shape
    weight: Composition
    steps: Tuple[BorderStripStep, ...]

    @property
    def total_height(self) -> int:
        return sum(s.height for s in self.steps)

    @property
    def sign(self) -> int:
        return -1 if self.total_height % 2 else 1

    def component_of(self, i: int) -> Optional[int]:
        """f_T(i) for the 1-based step index i."""
        return self.steps[i - 1].component

    def height_of(self, i: int) -> int:
        return self.steps[i - 1].height


def _components(shape: Shape) -> Tuple[Partition, ...]:
    if isinstance(shape, Partition):
        return (shape,)
    if isinstance(shape, RPartitePartition):
        return shape.components
    raise InvalidInputError(f"Expected a partition or r-partite partition, got {shape!r}")


def _check_sizes(shape: Shape, weight: Composition) -> None:
    size = shape.size if isinstance(shape, Partition) else shape.total
    if size != weight.size:
        raise InvalidInputError(f"Shape {shape} has size {size} but weight {weight} has size {weight.size}")


def _peel(shape: Shape, weight: Composition) -> Iterator[BorderStripTableau]:
    straight = isinstance(shape, Partition)
    t = weight.length
    # (remaining components, next step index to peel, steps peeled so far)
    stack = [(_components(shape), t, ())]
    while stack:
        comps, i, peeled = stack.pop()
        if i == 0:
            yield BorderStripTableau(shape, weight, tuple(reversed(peeled)))
            continue
        k = weight[i - 1]
        branches = []
        for c, part in enumerate(comps):
            for hook in removable_rim_hooks(part, k):
                step = BorderStripStep(i, None if straight else c, k, hook.height, hook.cells)
                branches.append((comps[:c] + (hook.after,) + comps[c + 1:], i - 1, peeled + (step,)))
        stack.extend(reversed(branches))


def enumerate_bst(shape: Partition, weight: Sequence[int] | Composition) -> Iterator[BorderStripTableau]:
    """Stream BST(shape, weight) for a straight shape."""
    weight = as_composition(weight)
    if not isinstance(shape, Partition):
        raise InvalidInputError(f"Straight shape expected, got {shape!r}")
    _check_sizes(shape, weight)
    return _peel(shape, weight)


def enumerate_bst_rpartite(shape: RPartitePartition, weight: Sequence[int] | Composition) -> Iterator[BorderStripTableau]:
    """Stream BST(shape, weight) for an r-partite shape; each step records f_T(i)."""
    weight = as_composition(weight)
    if not isinstance(shape, RPartitePartition):
        raise InvalidInputError(f"r-partite shape expected, got {shape!r}")
    _check_sizes(shape, weight)
    return _peel(shape, weight)


@lru_cache(maxsize=65536)
def _totals(comps: Tuple[Partition, ...], weight: Tuple[int, ...]) -> Tuple[int, int]:
    """(number of peelings, signed number of peelings) removing weight[-1] first."""
    if not weight:
        return 1, 1
    k = weight[-1]
    count = signed = 0
    for c, part in enumerate(comps):
        for hook in removable_rim_hooks(part, k):
            sub_count, sub_signed = _totals(comps[:c] + (hook.after,) + comps[c + 1:], weight[:-1])
            count += sub_count
            signed += -sub_signed if hook.height % 2 else sub_signed
    return count, signed


def count_bst(shape: Shape, weight: Sequence[int] | Composition) -> int:
    weight = as_composition(weight)
    _check_sizes(shape, weight)
    return _totals(_components(shape), weight.parts)[0]


def signed_sum(shape: Shape, weight: Sequence[int] | Composition) -> int:
    """Sum over BST(shape, weight) of (-1)^ht(T)."""
    weight = as_composition(weight)
    _check_sizes(shape, weight)
    return _totals(_components(shape), weight.parts)[1]
