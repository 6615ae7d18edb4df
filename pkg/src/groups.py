#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Color groups G and the character values the wreath product needs.

Two models:
  AbelianCharacterModel  - a finite abelian group given by invariant factors,
                           every irreducible character available
  QuotientLinearModel    - any finite group, known only through its
                           abelianization G/G'; evaluates the s = [G:G']
                           linear characters and knows the other degrees

Character labellings are explicit and echoed in every wreath-related output.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, FrozenSet, List, Optional, Protocol, Sequence, Tuple

from config import load_presets
from cyclotomic import CyclotomicInt
from partitions import InvalidInputError, RPartitePartition

Element = Tuple[int, ...]


class UnsupportedEvaluationError(ValueError):
    """A model was asked for a character value it does not carry."""


# ---------------------------------------------------------------------------
# Abelian groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbelianGroup:
    """Z/m_1 x ... x Z/m_k with every m_j >= 2 (no factors: the trivial group)."""

    invariant_factors: Tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for m in factors:
            if not isinstance(m, int) or m < 2:
                raise InvalidInputError(f"Invariant factors must be integers >= 2, got {factors}")

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.invariant_factors) if self.invariant_factors else 1

    @property
    def identity(self) -> Element:
        return (0,) * len(self.invariant_factors)

    def elements(self) -> List[Element]:
        return list(product(*(range(m) for m in self.invariant_factors)))

    def multiply(self, g: Element, h: Element) -> Element:
        return tuple((a + b) % m for a, b, m in zip(g, h, self.invariant_factors))

    def inverse(self, g: Element) -> Element:
        return tuple(-a % m for a, m in zip(g, self.invariant_factors))

    def power(self, g: Element, k: int) -> Element:
        return tuple(a * k % m for a, m in zip(g, self.invariant_factors))

    def order_of(self, g: Element) -> int:
        return math.lcm(1, *(m // math.gcd(a, m) for a, m in zip(g, self.invariant_factors)))

    def validate(self, g: Sequence[int]) -> Element:
        g = tuple(g)
        if len(g) != len(self.invariant_factors) or any(
            not 0 <= a < m for a, m in zip(g, self.invariant_factors)
        ):
            raise InvalidInputError(f"{g} is not an element of {self.name}")
        return g

    @property
    def name(self) -> str:
        return "x".join(f"Z{m}" for m in self.invariant_factors) or "Z1"

    def __str__(self) -> str:
        return self.name


def _character_exponent(group: AbelianGroup, label: Element, g: Element) -> int:
    """chi_label(g) = prod_t zeta_{m_t}^{label_t g_t}, as an exponent of zeta_e."""
    e = group.exponent
    return sum(j * a * (e // m) for j, a, m in zip(label, g, group.invariant_factors)) % e


def _check_labelling(group: AbelianGroup, labels: Sequence[Sequence[int]]) -> Tuple[Element, ...]:
    labels = tuple(tuple(int(x) for x in lab) for lab in labels)
    if sorted(labels) != group.elements():
        raise InvalidInputError(f"Labelling {labels} does not list every character of {group.name} once")
    if labels[0] != group.identity:
        raise InvalidInputError("chi_0 must be the trivial character")
    return labels


# ---------------------------------------------------------------------------
# Models
# ---------------------------------------------------------------------------

class GroupModel(Protocol):
    name: str

    @property
    def group_order(self) -> int: ...
    @property
    def degrees(self) -> Tuple[int, ...]: ...
    @property
    def character_count(self) -> int: ...
    @property
    def linear_count(self) -> int: ...
    @property
    def level(self) -> int: ...
    @property
    def identity(self) -> Element: ...
    def elements(self) -> List[Element]: ...
    def multiply(self, g: Element, h: Element) -> Element: ...
    def inverse(self, g: Element) -> Element: ...
    def power(self, g: Element, k: int) -> Element: ...
    def order_of(self, g: Element) -> int: ...
    def degree(self, j: int) -> int: ...
    def char_exponent(self, j: int, g: Element) -> int: ...
    def eval_char(self, j: int, g: Element) -> CyclotomicInt: ...
    def parse_element(self, text: str) -> Element: ...
    def labelling(self) -> Dict[str, Any]: ...


class _AbelianElements:
    """Element arithmetic delegated to an AbelianGroup held as self.elements_group."""

    elements_group: AbelianGroup

    @property
    def level(self) -> int:
        return self.elements_group.exponent

    @property
    def identity(self) -> Element:
        return self.elements_group.identity

    def elements(self) -> List[Element]:
        return self.elements_group.elements()

    def multiply(self, g: Element, h: Element) -> Element:
        return self.elements_group.multiply(g, h)

    def inverse(self, g: Element) -> Element:
        return self.elements_group.inverse(g)

    def power(self, g: Element, k: int) -> Element:
        return self.elements_group.power(g, k)

    def order_of(self, g: Element) -> int:
        return self.elements_group.order_of(g)

    def eval_char(self, j: int, g: Element) -> CyclotomicInt:
        return CyclotomicInt.zeta(self.level, self.char_exponent(j, g))

    def parse_element(self, text: str) -> Element:
        raw = str(text).strip()
        if raw in ("", "e") and not self.elements_group.invariant_factors:
            return ()
        try:
            values = tuple(int(x) for x in raw.split(","))
        except ValueError:
            raise InvalidInputError(f"Malformed group element {text!r}") from None
        if not self.elements_group.invariant_factors and values == (0,):
            return ()
        return self.elements_group.validate(values)


@dataclass(frozen=True)
class AbelianCharacterModel(_AbelianElements):
    group: AbelianGroup
    labels: Tuple[Element, ...] = ()
    name: str = ""

    def __post_init__(self):
        labels = self.labels or tuple(self.group.elements())
        object.__setattr__(self, "labels", _check_labelling(self.group, labels))
        object.__setattr__(self, "name", self.name or self.group.name)

    @property
    def elements_group(self) -> AbelianGroup:
        return self.group

    @property
    def group_order(self) -> int:
        return self.group.order

    @property
    def character_count(self) -> int:
        return self.group.order

    @property
    def linear_count(self) -> int:
        return self.group.order

    def degree(self, j: int) -> int:
        self._check_index(j)
        return 1

    @property
    def degrees(self) -> Tuple[int, ...]:
        return (1,) * self.character_count

    def char_exponent(self, j: int, g: Element) -> int:
        self._check_index(j)
        return _character_exponent(self.group, self.labels[j], g)

    def _check_index(self, j: int) -> None:
        if not 0 <= j < self.character_count:
            raise InvalidInputError(f"Character index {j} out of range for {self.name}")

    def labelling(self) -> Dict[str, Any]:
        return {
            "group": self.name,
            "invariant_factors": list(self.group.invariant_factors),
            "characters": [list(lab) for lab in self.labels],
            "convention": "chi_j(g) = prod_t exp(2*pi*i*j_t*g_t/m_t)",
        }


@dataclass(frozen=True)
class QuotientLinearModel(_AbelianElements):
    """
    G known through G/G'. Elements are elements of the abelianization; the
    first s characters are phi_i composed with G -> G/G'.
    """

    group_order: int
    abelianization: AbelianGroup
    linear_labels: Tuple[Element, ...] = ()
    nonlinear_degrees: Tuple[int, ...] = ()
    distinguished: Optional[Element] = None
    name: str = ""
    character_names: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        s = self.abelianization.order
        if self.group_order < 1 or self.group_order % s:
            raise InvalidInputError(f"[G:G'] = {s} must divide |G| = {self.group_order}")
        labels = self.linear_labels or tuple(self.abelianization.elements())
        object.__setattr__(self, "linear_labels", _check_labelling(self.abelianization, labels))
        degrees = tuple(int(d) for d in self.nonlinear_degrees)
        if any(d < 2 for d in degrees):
            raise InvalidInputError(f"Nonlinear degrees must be >= 2, got {degrees}")
        if degrees and s + sum(d * d for d in degrees) != self.group_order:
            raise InvalidInputError(
                f"Degrees do not fit: {s} linear + squares of {degrees} != {self.group_order}"
            )
        object.__setattr__(self, "nonlinear_degrees", degrees)
        if self.distinguished is not None:
            object.__setattr__(self, "distinguished", self.abelianization.validate(self.distinguished))
        object.__setattr__(self, "name", self.name or f"quot:d={self.group_order},s={s},ab={self.abelianization.name}")

    @property
    def elements_group(self) -> AbelianGroup:
        return self.abelianization

    @property
    def commutator_index(self) -> int:
        return self.abelianization.order

    @property
    def character_count(self) -> int:
        return self.commutator_index + len(self.nonlinear_degrees)

    @property
    def linear_count(self) -> int:
        return self.commutator_index

    def degree(self, j: int) -> int:
        if not 0 <= j < self.character_count:
            raise InvalidInputError(f"Character index {j} out of range for {self.name}")
        return 1 if j < self.commutator_index else self.nonlinear_degrees[j - self.commutator_index]

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(self.degree(j) for j in range(self.character_count))

    def char_exponent(self, j: int, g: Element) -> int:
        if not 0 <= j < self.commutator_index:
            raise UnsupportedEvaluationError(
                f"{self.name} only evaluates the linear characters 0..{self.commutator_index - 1}, got index {j}"
            )
        return _character_exponent(self.abelianization, self.linear_labels[j], g)

    def labelling(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "group": self.name,
            "group_order": self.group_order,
            "commutator_index": self.commutator_index,
            "abelianization": list(self.abelianization.invariant_factors),
            "linear_characters": [list(lab) for lab in self.linear_labels],
            "degrees": list(self.degrees),
            "convention": "chi_i = phi_i o tau for i < s; phi_j(g) = prod_t exp(2*pi*i*j_t*g_t/m_t)",
        }
        if self.character_names:
            out["character_names"] = list(self.character_names)
        return out


# ---------------------------------------------------------------------------
# Fibers and alpha
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiberPartition:
    """fibers[k]: indices of the linear characters restricting to theta_k : a -> zeta_r^k."""

    element: Element
    order: int
    fibers: Tuple[Tuple[int, ...], ...]

    def fiber_of(self, j: int) -> Optional[int]:
        for k, members in enumerate(self.fibers):
            if j in members:
                return k
        return None

    @property
    def indices(self) -> FrozenSet[int]:
        return frozenset(j for members in self.fibers for j in members)

    def to_json(self) -> Dict[str, Any]:
        return {"element": list(self.element), "order": self.order, "fibers": [list(f) for f in self.fibers]}


def fiber_partition(model: GroupModel, a: Element) -> FiberPartition:
    r = model.order_of(a)
    step = model.level // r
    fibers: List[List[int]] = [[] for _ in range(r)]
    for j in range(model.linear_count):
        exponent = model.char_exponent(j, a)
        if exponent % step:
            raise ValueError(f"chi_{j}(a) is not an {r}-th root of unity")
        fibers[exponent // step].append(j)
    return FiberPartition(tuple(a), r, tuple(tuple(f) for f in fibers))


def alpha(lam: RPartitePartition, fibers: FiberPartition) -> int:
    """sum_k k * (sizes of the components in fiber k), reduced mod r."""
    outside = lam.support() - fibers.indices
    if outside:
        raise InvalidInputError(f"Supp({lam}) meets indices {sorted(outside)} outside the linear characters")
    sizes = lam.sizes
    return sum(k * sizes[j] for k, members in enumerate(fibers.fibers) for j in members if j < len(sizes)) % fibers.order


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_PRODUCT_RE = re.compile(r"^Z\d+(?:xZ\d+)*$")


def _parse_abelian(spec: str) -> AbelianGroup:
    if spec in ("1", "Z1", "trivial"):
        return AbelianGroup(())
    if not _PRODUCT_RE.match(spec):
        raise InvalidInputError(f"Unknown group spec {spec!r} (expected e.g. Z6, Z2xZ2, quot:..., or a preset)")
    factors = tuple(int(f[1:]) for f in spec.split("x"))
    if any(m < 1 for m in factors):
        raise InvalidInputError(f"Cyclic factors must be positive in {spec!r}")
    return AbelianGroup(tuple(m for m in factors if m > 1))


def _parse_quotient(spec: str) -> QuotientLinearModel:
    fields: Dict[str, str] = {}
    for item in spec[len("quot:"):].split(","):
        if "=" not in item:
            raise InvalidInputError(f"Malformed quotient spec item {item!r} in {spec!r}")
        key, value = item.split("=", 1)
        fields[key.strip()] = value.strip()
    try:
        order = int(fields["d"])
        ab = _parse_abelian(fields["ab"])
    except KeyError as e:
        raise InvalidInputError(f"Quotient spec {spec!r} is missing {e.args[0]}=") from None
    except ValueError:
        raise InvalidInputError(f"Malformed quotient spec {spec!r}") from None
    if "s" in fields and int(fields["s"]) != ab.order:
        raise InvalidInputError(f"s={fields['s']} disagrees with |{ab.name}| = {ab.order}")
    nonlinear = tuple(int(x) for x in fields["nonlinear"].split("/")) if fields.get("nonlinear") else ()
    distinguished = None
    if "a" in fields:
        try:
            distinguished = ab.validate(int(x) for x in fields["a"].split("/"))
        except ValueError:
            raise InvalidInputError(f"Malformed distinguished element in {spec!r}") from None
    return QuotientLinearModel(order, ab, nonlinear_degrees=nonlinear, distinguished=distinguished, name=spec)


def _model_from_preset(name: str, preset: Dict[str, Any]) -> GroupModel:
    try:
        if "quotient" in preset:
            q = preset["quotient"]
            return QuotientLinearModel(
                group_order=int(q["order"]),
                abelianization=AbelianGroup(tuple(q["abelianization"])),
                linear_labels=tuple(tuple(lab) for lab in q.get("labelling", ())),
                nonlinear_degrees=tuple(q.get("nonlinear", ())),
                distinguished=tuple(q["distinguished"]) if q.get("distinguished") is not None else None,
                name=name,
                character_names=tuple(preset.get("character_names", ())),
            )
        return AbelianCharacterModel(
            AbelianGroup(tuple(preset["factors"])),
            tuple(tuple(lab) for lab in preset.get("labelling", ())),
            name=name,
        )
    except (KeyError, TypeError) as e:
        raise InvalidInputError(f"Malformed preset {name!r}: {e}") from None


def parse_group(spec: str, presets: Optional[Dict[str, Any]] = None) -> GroupModel:
    """Z6, Z2xZ2, Z1, quot:d=6,s=2,ab=Z2,a=1[,nonlinear=2], or a preset name."""
    spec = str(spec).strip()
    if presets is None:
        try:
            presets = load_presets()
        except ValueError as e:
            raise InvalidInputError(str(e)) from None
    if spec in presets:
        return _model_from_preset(spec, presets[spec])
    if spec.startswith("quot:"):
        return _parse_quotient(spec)
    return AbelianCharacterModel(_parse_abelian(spec), name=spec)
