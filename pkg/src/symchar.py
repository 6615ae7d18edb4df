#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Irreducible characters of S_n by the Murnaghan-Nakayama recursion.

chi(lambda, mu) strips a rim hook of length mu_1 in every possible way and
recurses. Values depend only on the cycle type, so the memo key is the
remaining shape together with the remaining weight sorted into a partition.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from threading import Lock
from typing import Dict, List, Sequence, Tuple

from config import CHI_CACHE_LIMIT, debug
from partitions import (
    Composition,
    InvalidInputError,
    Partition,
    as_composition,
    degree,
    enumerate_partitions,
    r_core,
    removable_rim_hooks,
)
from tableaux import enumerate_bst


@dataclass(frozen=True)
class CharEvalKey:
    shape: Partition
    class_type: Partition

    def __post_init__(self):
        if self.shape.size != self.class_type.size:
            raise InvalidInputError(
                f"Shape {self.shape} and class {self.class_type} have different sizes"
            )


# -------------------------
# Memo
# -------------------------

_cache: Dict[CharEvalKey, int] = {}
_cache_lock = Lock()
_cache_limit = CHI_CACHE_LIMIT
_cache_stats = {"hits": 0, "misses": 0, "clears": 0}


def set_cache_limit(limit: int) -> None:
    """0 means unbounded; otherwise the whole cache is dropped once it exceeds the limit."""
    global _cache_limit
    _cache_limit = max(0, int(limit))


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def cache_info() -> Dict[str, int]:
    with _cache_lock:
        return {"size": len(_cache), "limit": _cache_limit, **_cache_stats}


def _lookup(key: CharEvalKey):
    with _cache_lock:
        value = _cache.get(key)
        if value is None:
            _cache_stats["misses"] += 1
        else:
            _cache_stats["hits"] += 1
        return value


def _store(key: CharEvalKey, value: int) -> None:
    with _cache_lock:
        if _cache_limit and len(_cache) >= _cache_limit:
            debug("CACHE", f"chi cache reached {len(_cache)} entries, clearing")
            _cache.clear()
            _cache_stats["clears"] += 1
        _cache[key] = value


# -------------------------
# Characters
# -------------------------

def _chi(key: CharEvalKey) -> int:
    lam, mu = key.shape, key.class_type
    if not mu:
        return 1
    if mu.length == mu.size:
        return degree(lam)
    cached = _lookup(key)
    if cached is not None:
        return cached
    k, rest = mu[0], Partition(mu.parts[1:])
    value = 0
    for hook in removable_rim_hooks(lam, k):
        sub = _chi(CharEvalKey(hook.after, rest))
        value += -sub if hook.height % 2 else sub
    _store(key, value)
    return value


def chi(lam: Partition, mu: Sequence[int] | Partition | Composition) -> int:
    """chi_lambda at a permutation of cycle type mu."""
    return _chi(CharEvalKey(lam, as_composition(mu).sorted()))


def centralizer_order(mu: Partition) -> int:
    """z_mu = prod_i i^{m_i} m_i!."""
    return math.prod(i ** m * math.factorial(m) for i, m in Counter(mu.parts).items())


def class_size(mu: Partition) -> int:
    return math.factorial(mu.size) // centralizer_order(mu)


def character_table(n: int) -> Tuple[List[Partition], List[Partition], List[List[int]]]:
    """(row labels, column labels, values); both label lists in lexicographically decreasing order."""
    if n < 1:
        raise InvalidInputError(f"Character tables need n >= 1, got {n}")
    labels = enumerate_partitions(n)
    return labels, labels, [[chi(lam, mu) for mu in labels] for lam in labels]


def sign_r(lam: Partition, r: int) -> int:
    """
    The height parity shared by every full peeling of lambda by strips of length r.

    Requires |lambda| divisible by r and an empty r-core.
    """
    if r < 1:
        raise InvalidInputError(f"r must be positive, got {r}")
    if lam.size % r:
        raise InvalidInputError(f"|{lam}| = {lam.size} is not divisible by {r}")
    if r > 1 and r_core(lam, r):
        raise InvalidInputError(f"{lam} has nonempty {r}-core {r_core(lam, r)}")
    eta = (r,) * (lam.size // r)
    first = next(iter(enumerate_bst(lam, eta)))
    return first.sign


def row_orthogonality(n: int) -> bool:
    """sum_mu |C_mu| chi_lambda(mu) chi_nu(mu) == n! delta_{lambda nu}."""
    rows, cols, values = character_table(n)
    sizes = [class_size(mu) for mu in cols]
    order = math.factorial(n)
    return all(
        sum(c * a * b for c, a, b in zip(sizes, values[i], values[j])) == (order if i == j else 0)
        for i in range(len(rows))
        for j in range(i, len(rows))
    )


def column_orthogonality(n: int) -> bool:
    """sum_lambda chi_lambda(mu) chi_lambda(nu) == z_mu delta_{mu nu}."""
    rows, cols, values = character_table(n)
    return all(
        sum(row[i] * row[j] for row in values) == (centralizer_order(cols[i]) if i == j else 0)
        for i in range(len(cols))
        for j in range(i, len(cols))
    )
