import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from helpers import perturb, random_map
from polyadic.algebra import (
    Heteromorphism,
    PolyadicAlgebra,
    check_heteromorphism,
    check_medially_commutative,
    check_mediality,
    check_total_associativity_linear,
    check_unit,
    cyclic_group_algebra,
    derived_multiplication,
    find_unit,
    homomorphism,
    linear_map_from_images,
    matrix_algebra,
    quermap,
    tensor_product_algebras,
)
from polyadic.scalars import ONE
from polyadic.tensorkit import MultiLinearMap, ShapeError, TensorSum, reversal


def test_group_algebra_unit_and_associativity():
    A = cyclic_group_algebra(3)
    assert check_total_associativity_linear(A).passed
    assert check_unit(A, A.unit).passed
    res = find_unit(A)
    assert res.found and res.nullity == 0
    assert res.unit == A.unit


def test_matrix_algebra_is_associative_but_not_medial():
    A = matrix_algebra(2)
    assert check_total_associativity_linear(A).passed
    assert not check_mediality(A).passed
    assert not check_medially_commutative(A).passed


def test_derived_ternary_algebra():
    A = derived_multiplication(cyclic_group_algebra(2), 2)
    assert A.arity == 3
    assert check_total_associativity_linear(A).passed
    assert check_mediality(A).passed
    res = find_unit(A)
    assert res.found and res.nullity > 0
    g = A.basis(1)
    q = quermap(A, g)
    assert q.unique and q.value == g
    assert q.verified_positions == [0, 1, 2]


def test_ternary_twist_must_be_explicit():
    A = derived_multiplication(cyclic_group_algebra(2), 2)
    assert check_medially_commutative(A).status == "inadmissible"
    assert check_medially_commutative(A, reversal(3)).passed


def test_quermap_of_zero_divisor_is_not_unique_or_absent():
    A = cyclic_group_algebra(2)
    idem = (A.basis(0) + A.basis(1)).scale(ONE / 2)
    res = quermap(A, idem)
    assert not res.unique


def test_perturbed_algebra_fails_with_witness():
    A = cyclic_group_algebra(2)
    bad = PolyadicAlgebra(perturb(A.mult, 1))
    v = check_total_associativity_linear(bad)
    assert not v.passed and v.witness is not None


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([2, 3]))
def test_associativity_agrees_with_oracle(seed, n):
    rng = random.Random(seed)
    mult = random_map(rng, (2,) * n, (2,), density=0.3)
    A = PolyadicAlgebra(mult)
    assert check_total_associativity_linear(A).passed == oracles.associative(mult, 2, n)


def test_tensor_product_of_group_algebras():
    P = tensor_product_algebras([cyclic_group_algebra(2), cyclic_group_algebra(2)])
    assert P.dim == 4
    assert check_total_associativity_linear(P).passed


def test_homomorphisms():
    A = cyclic_group_algebra(3)
    assert check_heteromorphism(homomorphism(MultiLinearMap.identity((3,))), A, A).passed
    swap = linear_map_from_images(3, 3, {0: {0: 1}, 1: {2: 1}, 2: {1: 1}})
    assert check_heteromorphism(homomorphism(swap), A, A).passed
    shift = linear_map_from_images(3, 3, {0: {1: 1}, 1: {2: 1}, 2: {0: 1}})
    assert not check_heteromorphism(homomorphism(shift), A, A).passed


def test_two_place_heteromorphism_from_ternary_to_binary():
    binary = cyclic_group_algebra(2)
    ternary = derived_multiplication(binary, 2)
    h = Heteromorphism(2, binary.mult, 1)
    assert check_heteromorphism(h, ternary, binary).passed
    wrong = Heteromorphism(2, binary.mult.scale(2), 1)
    assert not check_heteromorphism(wrong, ternary, binary).passed


def test_heteromorphism_arity_mismatch_is_inadmissible():
    A = cyclic_group_algebra(2)
    h = Heteromorphism(2, A.mult, 1)
    assert check_heteromorphism(h, A, A).status == "inadmissible"
    with pytest.raises(ShapeError):
        check_heteromorphism(Heteromorphism(2, MultiLinearMap.identity((2,)), 0), A, A)


def test_unit_tensor_shape_enforced():
    A = cyclic_group_algebra(2)
    with pytest.raises(Exception):
        PolyadicAlgebra(A.mult, TensorSum.basis((2, 2), (0, 0)).as_map())
