import random

from hypothesis import given, settings, strategies as st

import oracles
from helpers import perturb, random_map
from polyadic.coalgebra import (
    PolyadicCoalgebra,
    check_coassociativity,
    check_comediality,
    check_counit,
    co_commutativity_class,
    coiterate,
    coiterate_all_nestings,
    d3_coalgebra,
    dual_algebra,
    find_binary_base,
    find_counit,
    find_grouplike,
    group_coalgebra,
    is_derived_comultiplication,
    matrix_coalgebra,
    tensor_product_coalgebras,
)
from polyadic.algebra import check_total_associativity_linear
from polyadic.tensorkit import reversal


def test_group_coalgebra():
    C = group_coalgebra(3)
    assert check_coassociativity(C).passed
    assert check_counit(C, C.counit).passed
    res = find_counit(C)
    assert res.found and res.counit == C.counit
    assert find_grouplike(C) == [0, 1, 2]
    assert co_commutativity_class(C)["class"] == "totally"
    assert check_comediality(C).passed


def test_matrix_coalgebra_is_not_cocommutative():
    C = matrix_coalgebra(2)
    assert check_coassociativity(C).passed
    assert check_counit(C, C.counit).passed
    assert co_commutativity_class(C)["class"] == "neither"


def test_d3_is_nonderived_and_has_no_counit():
    C = d3_coalgebra()
    assert C.arity == 3
    assert check_coassociativity(C).passed
    assert find_binary_base(C) == []
    assert not find_counit(C).found


def test_derived_coalgebra_recognised():
    base = group_coalgebra(2)
    C = PolyadicCoalgebra(coiterate(base, 2), None)
    assert is_derived_comultiplication(C, base, 2).passed
    bases = find_binary_base(C)
    assert bases and all(coiterate(b, 2) == C.comult for b in bases)


def test_all_nestings_agree_for_coassociative():
    C = matrix_coalgebra(2)
    nestings = coiterate_all_nestings(C, 2)
    assert all(n == nestings[0] for n in nestings)


def test_ternary_cocommutativity_needs_explicit_twist():
    C = PolyadicCoalgebra(coiterate(group_coalgebra(2), 2), None)
    assert co_commutativity_class(C)["class"] == "totally"
    assert co_commutativity_class(C, reversal(3))["medially"].passed


def test_perturbation_detected():
    C = group_coalgebra(2)
    bad = PolyadicCoalgebra(perturb(C.comult, 2))
    assert not check_coassociativity(bad).passed


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([2, 3]))
def test_coassociativity_agrees_with_oracle(seed, n_prime):
    rng = random.Random(seed)
    comult = random_map(rng, (2,), (2,) * n_prime, density=0.3)
    C = PolyadicCoalgebra(comult)
    assert check_coassociativity(C).passed == oracles.coassociative(comult, 2, n_prime)


def test_dual_algebra_is_associative():
    A = dual_algebra(group_coalgebra(3))
    assert check_total_associativity_linear(A).passed


def test_tensor_product_coalgebra():
    P = tensor_product_coalgebras([group_coalgebra(2), matrix_coalgebra(1)])
    assert check_coassociativity(P).passed
