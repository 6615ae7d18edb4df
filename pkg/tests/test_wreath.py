import math

import pytest
from hypothesis import given, settings, strategies as st

from cyclotomic import CyclotomicInt, zeta
from groups import UnsupportedEvaluationError, alpha, fiber_partition, parse_group
from partitions import (
    InvalidInputError,
    Partition,
    RPartitePartition,
    enumerate_compositions,
    enumerate_partitions,
    enumerate_rpartite,
)
from tableaux import signed_sum
from wreath import (
    ColoredPermutation,
    ConjugacyType,
    character_values,
    conjugate_by,
    cycle_products,
    enumerate_elements,
    group_order,
    identity_element,
    inner_product,
    inverse,
    multiply,
    psi,
    psi_constant_color,
    psi_degree,
    psi_trivial_color,
    standard_element,
    tableau_color_products,
    ty,
)

Z2 = parse_group("Z2", presets={})
Z3 = parse_group("Z3", presets={})


@st.composite
def element_strategy(draw, model, n):
    perm = draw(st.permutations(list(range(n))))
    colors = draw(st.lists(st.sampled_from(model.elements()), min_size=n, max_size=n))
    return ColoredPermutation(tuple(colors), tuple(perm))


@st.composite
def conjugation_strategy(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    return n, draw(element_strategy(Z3, n)), draw(element_strategy(Z3, n))


# -------------------------
# Elements and classes
# -------------------------

def test_colored_permutation_validation():
    with pytest.raises(InvalidInputError):
        ColoredPermutation(((0,), (0,)), (0, 0))
    with pytest.raises(InvalidInputError):
        ColoredPermutation(((0,),), (0, 1))


def test_cycle_products_and_type():
    x = ColoredPermutation(((1,), (2,), (0,)), (1, 0, 2))
    assert x.cycles() == [[0, 1], [2]]
    assert cycle_products(Z3, x) == [(2, (0,)), (1, (0,))]
    assert ty(Z3, x) == ConjugacyType.from_mapping({(0,): [2, 1]})
    y = ColoredPermutation(((1,), (1,), (2,)), (1, 2, 0))
    assert ty(Z3, y)[(1,)] == Partition((3,))
    assert ty(Z3, y)[(0,)] == Partition()
    assert ty(Z3, y).size == 3


def test_standard_element():
    x = standard_element(Z3, (1,), (2, 1))
    assert x.perm == (1, 0, 2)
    assert x.colors == ((1,), (1,), (1,))
    assert ty(Z3, x).to_json() == [
        {"class": [1], "partition": [1]},
        {"class": [2], "partition": [2]},
    ]
    mixed = standard_element(Z3, [(1,), (0,), (2,)], (3,))
    assert ty(Z3, mixed)[(0,)] == Partition((3,))
    with pytest.raises(InvalidInputError):
        standard_element(Z3, [(1,), (0,)], (3,))


def test_group_law():
    elements = list(enumerate_elements(Z2, 2))
    assert len(elements) == group_order(Z2, 2) == 8
    e = identity_element(Z2, 2)
    for x in elements:
        assert multiply(Z2, x, inverse(Z2, x)) == e
        assert multiply(Z2, inverse(Z2, x), x) == e
        assert multiply(Z2, e, x) == x
        for y in elements:
            for z in elements:
                assert multiply(Z2, multiply(Z2, x, y), z) == multiply(Z2, x, multiply(Z2, y, z))


def test_quotient_models_do_not_enumerate_elements(presets):
    s3 = parse_group("S3", presets)
    assert group_order(s3, 2) == 72
    with pytest.raises(UnsupportedEvaluationError):
        enumerate_elements(s3, 1)
    with pytest.raises(UnsupportedEvaluationError):
        character_values(RPartitePartition.of([1], [], []), s3, 1)


def test_group_is_nonabelian_for_n_at_least_2():
    x = standard_element(Z3, [(1,), (0,)], (1, 1))
    y = standard_element(Z3, (0,), (2,))
    assert multiply(Z3, x, y) != multiply(Z3, y, x)


@settings(deadline=None, max_examples=60)
@given(conjugation_strategy())
def test_type_and_character_are_class_functions(case):
    n, x, y = case
    conjugated = conjugate_by(Z3, x, y)
    assert ty(Z3, conjugated) == ty(Z3, x)
    for lam in enumerate_rpartite(n, 3)[:6]:
        assert psi(lam, Z3, conjugated) == psi(lam, Z3, x)


# -------------------------
# Characters
# -------------------------

def test_psi_examples():
    lam = RPartitePartition.of([], [1])
    assert psi(lam, Z2, ColoredPermutation(((1,),), (0,))) == -1
    assert psi(lam, Z2, identity_element(Z2, 1)) == 1
    swap = ColoredPermutation(((0,), (0,)), (1, 0))
    assert psi(RPartitePartition.of([1], [1]), Z2, swap) == 0
    assert psi(RPartitePartition.of([2], []), Z2, swap) == 1
    assert psi(RPartitePartition.of([1, 1], []), Z2, swap) == -1


def test_psi_shape_checks():
    with pytest.raises(InvalidInputError):
        psi(RPartitePartition.of([1], [], []), Z2, identity_element(Z2, 1))
    with pytest.raises(InvalidInputError):
        psi(RPartitePartition.of([1], []), Z2, identity_element(Z2, 2))


@pytest.mark.parametrize(
    "spec, n",
    [("Z2", n) for n in range(1, 6)] + [("Z3", n) for n in range(1, 5)] + [("Z4", 3), ("Z2xZ2", 3)],
)
def test_psi_at_identity_is_the_degree(spec, n):
    model = parse_group(spec, presets={})
    e = identity_element(model, n)
    for lam in enumerate_rpartite(n, model.character_count):
        assert psi(lam, model, e) == psi_degree(lam, model.degrees)


@pytest.mark.parametrize("n", range(1, 4))
def test_degrees_square_to_the_group_order(n, presets):
    assert sum(psi_degree(lam, Z3.degrees) ** 2 for lam in enumerate_rpartite(n, 3)) == group_order(Z3, n)
    s3 = parse_group("S3", presets)
    total = sum(psi_degree(lam, s3.degrees) ** 2 for lam in enumerate_rpartite(n, 3))
    assert total == s3.group_order ** n * math.factorial(n)


@pytest.mark.parametrize("n", range(1, 4))
def test_constant_color_shortcut_matches_the_tableau_sum(n):
    for lam in enumerate_rpartite(n, 3):
        for mu in enumerate_partitions(n):
            for a in Z3.elements():
                assert psi_constant_color(lam, Z3, a, mu) == psi(lam, Z3, standard_element(Z3, a, mu))


def test_constant_color_on_z6(presets):
    z6 = parse_group("Z6ex", presets)
    lam = RPartitePartition.of([1], [], [], [], [], [1])
    for a in z6.elements():
        for mu in ((1, 1), (2,)):
            assert psi_constant_color(lam, z6, a, mu) == psi(lam, z6, standard_element(z6, a, mu))


def test_color_products_do_not_depend_on_the_tableau(presets):
    z6 = parse_group("Z6ex", presets)
    lam = RPartitePartition.of([2], [1], [], [1], [], [])
    for a in z6.elements():
        fibers = fiber_partition(z6, a)
        expected = zeta(fibers.order, alpha(lam, fibers)).promote(6)
        for mu in ((2, 1, 1), (1, 1, 1, 1), (1, 2, 1)):
            products = list(tableau_color_products(lam, z6, a, mu))
            assert products
            assert {value for _, value in products} == {expected}
            total = sum((t.sign * value for t, value in products), CyclotomicInt.from_int(0, 6))
            assert total == expected * signed_sum(lam, mu)


@pytest.mark.parametrize(
    "spec, n",
    [("Z2", 4), ("Z3", 4), ("Z4", 4), ("Z2xZ2", 4), ("Z5", 3), ("Z6", 3)],
)
def test_color_products_are_constant_for_every_shape_and_weight(spec, n):
    model = parse_group(spec, presets={})
    for size in range(1, n + 1):
        shapes = enumerate_rpartite(size, model.character_count)
        weights = list(enumerate_compositions(size))
        for a in model.elements():
            fibers = fiber_partition(model, a)
            for lam in shapes:
                expected = zeta(fibers.order, alpha(lam, fibers)).promote(model.level)
                for mu in weights:
                    for tableau, value in tableau_color_products(lam, model, a, mu):
                        assert value == expected, (lam, mu, a, tableau.steps)


def test_trivial_color_matches_psi_on_abelian_groups():
    for lam in enumerate_rpartite(3, 2):
        for mu in enumerate_partitions(3):
            expected = psi(lam, Z2, standard_element(Z2, (0,), mu))
            assert psi_trivial_color(lam, Z2.degrees, mu) == expected


def test_nonlinear_characters(presets):
    s3 = parse_group("S3", presets)
    standard = RPartitePartition.of([], [], [1])
    assert psi(standard, s3, identity_element(s3, 1)) == 2
    assert psi_trivial_color(standard, s3.degrees, (1,)) == 2
    lam = RPartitePartition.of([1], [], [1, 1])
    assert psi_trivial_color(lam, s3.degrees, (1, 1, 1)) == psi_degree(lam, s3.degrees) == 12
    with pytest.raises(UnsupportedEvaluationError):
        psi(standard, s3, standard_element(s3, (1,), (1,)))
    assert psi(RPartitePartition.of([], [1], []), s3, standard_element(s3, (1,), (1,))) == -1


def test_degree_argument_must_match_arity():
    with pytest.raises(InvalidInputError):
        psi_degree(RPartitePartition.of([1], []), (1, 1, 1))
    with pytest.raises(InvalidInputError):
        psi_trivial_color(RPartitePartition.of([1], []), (1,), (1,))


@pytest.mark.parametrize("model, n", [(Z2, 1), (Z2, 2), (Z2, 3), (Z3, 2)])
def test_characters_are_orthonormal(model, n):
    shapes = enumerate_rpartite(n, model.character_count)
    elements = list(enumerate_elements(model, n))
    values = {lam: [psi(lam, model, x) for x in elements] for lam in shapes}
    order = group_order(model, n)
    for lam in shapes:
        for nu in shapes:
            total = sum(
                (u * v.conjugate() for u, v in zip(values[lam], values[nu])),
                CyclotomicInt.from_int(0, model.level),
            )
            assert total == (order if lam == nu else 0)


def test_inner_product_helper():
    lam, nu = RPartitePartition.of([1], [1]), RPartitePartition.of([2], [])
    assert inner_product(lam, lam, Z2, 2) == 8
    assert inner_product(lam, nu, Z2, 2) == 0


def test_character_values_follow_element_order():
    lam = RPartitePartition.of([1], [1])
    values = character_values(lam, Z2, 2)
    elements = list(enumerate_elements(Z2, 2))
    assert len(values) == len(elements) == 8
    assert values[0] == 2
    assert values == [psi(lam, Z2, x) for x in elements]
