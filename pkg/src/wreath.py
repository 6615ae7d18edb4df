#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Conjugacy types and irreducible characters of G wr S_n.

An element x = (g_1, ..., g_n, pi) acts on G x {0..n-1} by
    x . (h, i) = (g_{pi(i)} h, pi(i)),
which fixes the group law used by multiply/inverse/conjugate_by. Character
values follow the wreath-product Murnaghan-Nakayama rule: sum over
border-strip tableaux of lambda with weight given by the cycle lengths of pi,
each strip i contributing (-1)^ht * chi_{f_T(i)}(g_i(x)).
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, Iterator, List, Sequence, Tuple, Union

from sympy.combinatorics import Permutation

from cyclotomic import CyclotomicInt
from groups import Element, GroupModel, UnsupportedEvaluationError, alpha, fiber_partition
from partitions import (
    Composition,
    InvalidInputError,
    Partition,
    RPartitePartition,
    as_composition,
    degree,
)
from tableaux import BorderStripTableau, enumerate_bst_rpartite, signed_sum


@dataclass(frozen=True)
class ColoredPermutation:
    """colors[i] is g_i; perm[i] is pi(i) on 0-based points."""

    colors: Tuple[Element, ...]
    perm: Tuple[int, ...]

    def __post_init__(self):
        colors = tuple(tuple(c) for c in self.colors)
        perm = tuple(int(p) for p in self.perm)
        object.__setattr__(self, "colors", colors)
        object.__setattr__(self, "perm", perm)
        if len(colors) != len(perm):
            raise InvalidInputError(f"{len(colors)} colors for a permutation of {len(perm)} points")
        if sorted(perm) != list(range(len(perm))):
            raise InvalidInputError(f"{perm} is not a permutation of 0..{len(perm) - 1}")

    @property
    def n(self) -> int:
        return len(self.perm)

    def cycles(self) -> List[List[int]]:
        """Cycles (i_1, ..., i_t) with pi(i_s) = i_{s+1}, ordered by smallest point."""
        if not self.perm:
            return []
        return Permutation(list(self.perm)).full_cyclic_form

    def to_json(self) -> Dict:
        return {"colors": [list(c) for c in self.colors], "perm": list(self.perm)}


@dataclass(frozen=True)
class ConjugacyType:
    """ty(x): class label -> partition of the cycle lengths with that cycle product."""

    parts: Tuple[Tuple[Element, Partition], ...]

    @classmethod
    def from_mapping(cls, mapping: Dict[Element, Sequence[int]]) -> ConjugacyType:
        items = []
        for c, lengths in mapping.items():
            lam = Partition(tuple(sorted(lengths, reverse=True)))
            if lam:
                items.append((tuple(c), lam))
        return cls(tuple(sorted(items)))

    def __getitem__(self, c: Element) -> Partition:
        for label, lam in self.parts:
            if label == tuple(c):
                return lam
        return Partition()

    @property
    def size(self) -> int:
        return sum(lam.size for _, lam in self.parts)

    def to_json(self) -> List[Dict]:
        return [{"class": list(c), "partition": lam.to_json()} for c, lam in self.parts]


# ---------------------------------------------------------------------------
# Elements and the group law
# ---------------------------------------------------------------------------

def _product(model: GroupModel, elements: Sequence[Element]) -> Element:
    result = model.identity
    for g in elements:
        result = model.multiply(g, result)
    return result


def cycle_products(model: GroupModel, x: ColoredPermutation) -> List[Tuple[int, Element]]:
    """(length, g_{i_t} ... g_{i_1}) for every cycle of pi."""
    return [(len(cycle), _product(model, [x.colors[i] for i in cycle])) for cycle in x.cycles()]


def ty(model: GroupModel, x: ColoredPermutation) -> ConjugacyType:
    """Classes are elements: exact for abelian G."""
    lengths: Dict[Element, List[int]] = defaultdict(list)
    for length, g in cycle_products(model, x):
        lengths[g].append(length)
    return ConjugacyType.from_mapping(lengths)


def identity_element(model: GroupModel, n: int) -> ColoredPermutation:
    return ColoredPermutation((model.identity,) * n, tuple(range(n)))


def standard_element(
    model: GroupModel,
    color: Union[Element, Sequence[Element]],
    mu: Sequence[int] | Composition,
) -> ColoredPermutation:
    """
    (c_1, ..., c_n, pi_mu) where pi_mu cycles consecutive blocks of lengths mu_1, mu_2, ...

    color is either one element (constant coloring) or a sequence of n elements.
    """
    mu = as_composition(mu)
    n = mu.size
    perm: List[int] = []
    start = 0
    for k in mu:
        perm.extend(range(start + 1, start + k))
        perm.append(start)
        start += k
    color = tuple(color)
    if color and isinstance(color[0], (tuple, list)):
        colors = tuple(tuple(c) for c in color)
        if len(colors) != n:
            raise InvalidInputError(f"{len(colors)} colors given for n = {n}")
    else:
        colors = (tuple(color),) * n
    return ColoredPermutation(colors, tuple(perm))


def multiply(model: GroupModel, x: ColoredPermutation, y: ColoredPermutation) -> ColoredPermutation:
    """x * y, acting as y first."""
    if x.n != y.n:
        raise InvalidInputError(f"Cannot multiply elements of G wr S_{x.n} and G wr S_{y.n}")
    perm = tuple(x.perm[y.perm[i]] for i in range(x.n))
    inv_x = _inverse_perm(x.perm)
    colors = tuple(model.multiply(x.colors[j], y.colors[inv_x[j]]) for j in range(x.n))
    return ColoredPermutation(colors, perm)


def inverse(model: GroupModel, x: ColoredPermutation) -> ColoredPermutation:
    return ColoredPermutation(
        tuple(model.inverse(x.colors[x.perm[i]]) for i in range(x.n)),
        _inverse_perm(x.perm),
    )


def conjugate_by(model: GroupModel, x: ColoredPermutation, y: ColoredPermutation) -> ColoredPermutation:
    """y x y^-1."""
    return multiply(model, multiply(model, y, x), inverse(model, y))


def _inverse_perm(perm: Sequence[int]) -> Tuple[int, ...]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(inv)


def enumerate_elements(model: GroupModel, n: int) -> Iterator[ColoredPermutation]:
    """All |G|^n * n! elements; only models that list every element of G can do this."""
    elements = model.elements()
    if len(elements) != model.group_order:
        raise UnsupportedEvaluationError(
            f"{model.name} lists {len(elements)} of its {model.group_order} elements; cannot enumerate G wr S_{n}"
        )
    return (ColoredPermutation(colors, perm) for perm in permutations(range(n)) for colors in product(elements, repeat=n))


def group_order(model: GroupModel, n: int) -> int:
    return model.group_order ** n * math.factorial(n)


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------

def _check_shape(lam: RPartitePartition, model: GroupModel, n: int) -> None:
    if lam.arity != model.character_count:
        raise InvalidInputError(
            f"{lam} has {lam.arity} components but {model.name} has {model.character_count} characters"
        )
    if lam.total != n:
        raise InvalidInputError(f"|{lam}| = {lam.total} but the element lies in G wr S_{n}")


def _factor(model: GroupModel, j: int, g: Element) -> Tuple[int, int]:
    """chi_j(g) as (integer multiplier, exponent of zeta_level)."""
    # Nonlinear characters are only known at the identity, which a quotient
    # model reads as e itself rather than as the coset G'.
    if j < model.linear_count:
        return 1, model.char_exponent(j, g)
    if g == model.identity:
        return model.degree(j), 0
    raise UnsupportedEvaluationError(f"{model.name} cannot evaluate chi_{j} away from the identity")


def psi(lam: RPartitePartition, model: GroupModel, x: ColoredPermutation) -> CyclotomicInt:
    """psi_lambda(x) by the wreath-product Murnaghan-Nakayama rule, folding tableaux as they are produced."""
    _check_shape(lam, model, x.n)
    products = cycle_products(model, x)
    weight = Composition(tuple(length for length, _ in products))
    factors = {j: [_factor(model, j, g) for _, g in products] for j in lam.support()}
    counts: Dict[int, int] = defaultdict(int)
    for tableau in enumerate_bst_rpartite(lam, weight):
        multiplier, exponent = tableau.sign, 0
        for step in tableau.steps:
            m, e = factors[step.component][step.index - 1]
            multiplier *= m
            exponent += e
        counts[exponent % model.level] += multiplier
    return CyclotomicInt.from_exponent_counts(model.level, dict(counts))


def psi_constant_color(
    lam: RPartitePartition,
    model: GroupModel,
    a: Element,
    mu: Sequence[int] | Composition,
) -> CyclotomicInt:
    """psi_lambda(a, ..., a, pi) for pi of cycle type mu: zeta_r^alpha times the signed tableau count."""
    mu = as_composition(mu)
    _check_shape(lam, model, mu.size)
    fibers = fiber_partition(model, a)
    twist = CyclotomicInt.zeta(fibers.order, alpha(lam, fibers)).promote(model.level)
    return twist * signed_sum(lam, mu)


def psi_trivial_color(lam: RPartitePartition, degrees: Sequence[int], mu: Sequence[int] | Composition) -> int:
    """psi_lambda(e, ..., e, pi): sum over tableaux of (-1)^ht * prod of deg chi_{f_T(i)}."""
    mu = as_composition(mu)
    if len(degrees) != lam.arity:
        raise InvalidInputError(f"{len(degrees)} degrees given for {lam.arity} components")
    total = 0
    for tableau in enumerate_bst_rpartite(lam, mu):
        total += tableau.sign * math.prod(degrees[s.component] for s in tableau.steps)
    return total


def psi_degree(lam: RPartitePartition, degrees: Sequence[int]) -> int:
    """psi_lambda(1) = n!/prod n_i! * prod (deg lambda^i) * (deg chi_i)^{n_i}."""
    if len(degrees) != lam.arity:
        raise InvalidInputError(f"{len(degrees)} degrees given for {lam.arity} components")
    value = math.factorial(lam.total)
    for comp, d in zip(lam.components, degrees):
        value = value // math.factorial(comp.size) * degree(comp) * d ** comp.size
    return value


def tableau_color_products(
    lam: RPartitePartition,
    model: GroupModel,
    a: Element,
    mu: Sequence[int] | Composition,
) -> Iterator[Tuple[BorderStripTableau, CyclotomicInt]]:
    """R_T = prod_i chi_{f_T(i)}(a^{mu_i}) for each T in BST(lambda, mu)."""
    mu = as_composition(mu)
    _check_shape(lam, model, mu.size)
    powers = [model.power(a, k) for k in mu]
    for tableau in enumerate_bst_rpartite(lam, mu):
        exponent = sum(model.char_exponent(s.component, powers[s.index - 1]) for s in tableau.steps)
        yield tableau, CyclotomicInt.zeta(model.level, exponent)


def character_values(lam: RPartitePartition, model: GroupModel, n: int) -> List[CyclotomicInt]:
    """psi_lambda on every element, in enumerate_elements order."""
    return [psi(lam, model, x) for x in enumerate_elements(model, n)]


def inner_product(lam: RPartitePartition, nu: RPartitePartition, model: GroupModel, n: int) -> CyclotomicInt:
    """sum_x psi_lambda(x) * conj(psi_nu(x)); equals |G wr S_n| when lambda == nu and 0 otherwise."""
    total = CyclotomicInt.from_int(0, model.level)
    for x in enumerate_elements(model, n):
        total = total + psi(lam, model, x) * psi(nu, model, x).conjugate()
    return total
