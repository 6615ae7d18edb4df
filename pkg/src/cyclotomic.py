#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exact arithmetic in Z[zeta_L].

An element is stored by its coefficients on 1, z, ..., z^(phi(L)-1) after
reduction modulo the L-th cyclotomic polynomial, so equality is coefficient
equality. Values at different levels are promoted to the lcm of the levels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath
from sympy import ImmutableMatrix, divisors, totient
from sympy.polys.densearith import dup_mul, dup_quo, dup_rem
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import ZZ

from partitions import InvalidInputError


@lru_cache(maxsize=None)
def cyclotomic_polynomial(level: int) -> Tuple[int, ...]:
    """Phi_L as dense coefficients (highest degree first): x^L - 1 divided by Phi_d for proper divisors d."""
    if level < 1:
        raise InvalidInputError(f"Cyclotomic level must be positive, got {level}")
    poly = [ZZ(1)] + [ZZ(0)] * (level - 1) + [ZZ(-1)]
    for d in divisors(level)[:-1]:
        poly = dup_quo(poly, [ZZ(c) for c in cyclotomic_polynomial(d)], ZZ)
    return tuple(int(c) for c in poly)


@lru_cache(maxsize=None)
def rank(level: int) -> int:
    return int(totient(level))


def _reduce(coeffs: Sequence[int], level: int) -> Tuple[int, ...]:
    """Low-degree-first coefficients of any length -> canonical vector of length phi(L)."""
    dense = dup_strip([ZZ(c) for c in reversed(coeffs)])
    phi = [ZZ(c) for c in cyclotomic_polynomial(level)]
    rem = dup_rem(dense, phi, ZZ)
    out = [int(c) for c in reversed(rem)]
    return tuple(out + [0] * (rank(level) - len(out)))


@lru_cache(maxsize=None)
def _embedding(sub: int, level: int) -> ImmutableMatrix:
    """Columns are the level-L coefficients of zeta_sub^j for j < phi(sub)."""
    step = level // sub
    columns = []
    for j in range(rank(sub)):
        vec = [0] * level
        vec[j * step] = 1
        columns.append(_reduce(vec, level))
    return ImmutableMatrix(rank(level), rank(sub), lambda i, j: columns[j][i])


@lru_cache(maxsize=65536)
def minimal_form(level: int, coeffs: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    """
    (L', coefficients at L') for the smallest divisor L' of level whose ring
    contains the value. Equal values at any two levels give the same pair.
    """
    target = ImmutableMatrix(len(coeffs), 1, list(coeffs))
    for sub in divisors(level)[:-1]:
        try:
            solution, _ = _embedding(sub, level).gauss_jordan_solve(target)
        except ValueError:
            continue
        # Z[zeta_L] meets Q(zeta_L') in Z[zeta_L'], so the solution is integral.
        return sub, tuple(int(c) for c in solution)
    return level, tuple(coeffs)


@dataclass(frozen=True, eq=False)
class CyclotomicInt:
    level: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.level < 1:
            raise InvalidInputError(f"Cyclotomic level must be positive, got {self.level}")
        object.__setattr__(self, "coeffs", _reduce(self.coeffs, self.level))

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_int(cls, m: int, level: int = 1) -> CyclotomicInt:
        return cls(level, (int(m),))

    @classmethod
    def zeta(cls, level: int, k: int = 1) -> CyclotomicInt:
        vec = [0] * level
        vec[k % level] = 1
        return cls(level, tuple(vec))

    @classmethod
    def from_exponent_counts(cls, level: int, counts: Sequence[int] | Dict[int, int]) -> CyclotomicInt:
        """sum_k counts[k] * zeta_L^k."""
        vec = [0] * level
        items = counts.items() if isinstance(counts, dict) else enumerate(counts)
        for k, c in items:
            vec[k % level] += c
        return cls(level, tuple(vec))

    @classmethod
    def from_json(cls, data: Dict) -> CyclotomicInt:
        try:
            level = int(data["level"])
            coeffs = tuple(int(c) for c in data["coeffs"])
        except (KeyError, TypeError, ValueError):
            raise InvalidInputError(f"Malformed cyclotomic value {data!r}") from None
        return cls(level, coeffs)

    # -- level handling ---------------------------------------------------

    def promote(self, level: int) -> CyclotomicInt:
        if level == self.level:
            return self
        if level % self.level:
            raise InvalidInputError(f"Cannot embed level {self.level} into level {level}")
        step = level // self.level
        vec = [0] * level
        for k, c in enumerate(self.coeffs):
            vec[k * step] += c
        return CyclotomicInt(level, tuple(vec))

    def _align(self, other) -> Tuple[CyclotomicInt, CyclotomicInt]:
        if isinstance(other, int):
            other = CyclotomicInt.from_int(other, self.level)
        if not isinstance(other, CyclotomicInt):
            raise TypeError(f"Cannot combine CyclotomicInt with {type(other).__name__}")
        level = math.lcm(self.level, other.level)
        return self.promote(level), other.promote(level)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (int, CyclotomicInt)):
            return NotImplemented
        a, b = self._align(other)
        return CyclotomicInt(a.level, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self.level, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, (int, CyclotomicInt)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        a, b = self._align(other)
        product = dup_mul(
            [ZZ(c) for c in reversed(a.coeffs)],
            [ZZ(c) for c in reversed(b.coeffs)],
            ZZ,
        )
        return CyclotomicInt(a.level, tuple(int(c) for c in reversed(product)))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CyclotomicInt:
        if exponent < 0:
            raise InvalidInputError("Negative powers are not defined in Z[zeta]")
        result = CyclotomicInt.from_int(1, self.level)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, m: int) -> CyclotomicInt:
        return CyclotomicInt(self.level, tuple(m * c for c in self.coeffs))

    def conjugate(self) -> CyclotomicInt:
        vec = [0] * self.level
        for k, c in enumerate(self.coeffs):
            vec[-k % self.level] += c
        return CyclotomicInt(self.level, tuple(vec))

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_integer(self) -> Optional[int]:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, (int, CyclotomicInt)) or isinstance(other, bool):
            return NotImplemented
        a, b = self._align(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # Hash the value at the smallest level holding it, so equal values at
        # different levels collide; integers land on level 1 and hash like ints.
        m = self.as_integer()
        if m is not None:
            return hash(m)
        return hash(minimal_form(self.level, self.coeffs))

    # -- output -----------------------------------------------------------

    def to_complex(self) -> mpmath.mpc:
        return mpmath.fsum(
            c * mpmath.expjpi(mpmath.mpf(2 * k) / self.level)
            for k, c in enumerate(self.coeffs)
        ) + mpmath.mpc(0)

    def to_json(self) -> Dict:
        return {"level": self.level, "coeffs": list(self.coeffs)}

    def pretty(self) -> str:
        terms: List[Tuple[int, str]] = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append((c, str(abs(c))))
                continue
            base = f"z{self.level}" if k == 1 else f"z{self.level}^{k}"
            terms.append((c, base if abs(c) == 1 else f"{abs(c)}*{base}"))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] < 0 else "") + terms[0][1]
        for c, text in terms[1:]:
            out += (" - " if c < 0 else " + ") + text
        return out

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"CyclotomicInt({self.level}, {self.coeffs})"


def zeta(level: int, k: int = 1) -> CyclotomicInt:
    return CyclotomicInt.zeta(level, k)


def from_int(m: int, level: int = 1) -> CyclotomicInt:
    return CyclotomicInt.from_int(m, level)
