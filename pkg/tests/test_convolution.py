import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from helpers import random_map
from polyadic.convolution import (
    ConvolutionContext,
    ConvolutionError,
    check_convolution_associativity,
    check_convolution_unit,
    check_exponent_laws,
    check_power_of_power,
    convolution_power,
    convolution_unit,
    convolve,
    coquerelement,
    heine_exponent,
    iterated_convolve,
    quer_iterate,
)
from polyadic.arity import Inadmissible
from polyadic.hopf import cyclic_group_bialgebra, derived_bialgebra, von_neumann_regular_bialgebra
from polyadic.tensorkit import MultiLinearMap

TABLE3 = oracles.cyclic_table(3)


def z3_context(ell=1):
    B = cyclic_group_bialgebra(3)
    return ConvolutionContext(B.alg, B.coalg, ell, ell)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3))
def test_convolution_matches_sweedler_oracle(seed, ell):
    rng = random.Random(seed)
    ctx = z3_context(ell)
    fs = [random_map(rng, (3,), (3,), density=0.5) for _ in range(ctx.n_star)]
    got = oracles.map_to_group_dict(convolve(ctx, fs))
    want = oracles.group_convolution(TABLE3, [oracles.map_to_group_dict(f) for f in fs])
    assert got == {g: c for g, c in want.items() if c}


def test_binary_unit_and_inverse():
    ctx = z3_context(1)
    e = convolution_unit(ctx)
    f = MultiLinearMap.identity((3,))
    assert check_convolution_unit(ctx, e, f).passed
    res = coquerelement(ctx, f)
    assert res.unique and convolve(ctx, [f, res.value]) == e


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000))
def test_ternary_associativity_random(seed):
    rng = random.Random(seed)
    ctx = z3_context(2)
    fs = [random_map(rng, (3,), (3,), density=0.5) for _ in range(5)]
    assert check_convolution_associativity(ctx, fs).passed


def test_nonderived_context_associativity():
    B = von_neumann_regular_bialgebra(3)
    ctx = ConvolutionContext(B.alg, B.coalg, 1, 1)
    assert ctx.n_star == 3
    rng = random.Random(3)
    fs = [random_map(rng, ctx.in_dims, ctx.out_dims, density=0.4) for _ in range(5)]
    assert check_convolution_associativity(ctx, fs).passed


def test_wrong_wiring_is_detected():
    B = derived_bialgebra(cyclic_group_bialgebra(2), 2, 2)
    rng = random.Random(7)
    good = ConvolutionContext(B.alg, B.coalg, 1, 1)
    bad = ConvolutionContext(B.alg, B.coalg, 1, 1, medial=False)
    fs = [random_map(rng, good.in_dims, good.out_dims, density=0.6) for _ in range(3)]
    assert convolve(good, fs) != convolve(bad, fs)


def test_arity_mismatch_raises():
    B = von_neumann_regular_bialgebra(3)
    A2 = cyclic_group_bialgebra(2)
    with pytest.raises(Inadmissible):
        ConvolutionContext(B.alg, A2.coalg, 1, 1)


def test_powers_and_heine_identity():
    ctx = z3_context(2)
    rng = random.Random(11)
    f = random_map(rng, (3,), (3,), density=1.0)
    assert coquerelement(ctx, f).unique
    for exps in [(0, 0, 0), (1, 0, 1), (1, 1, 1)]:
        assert check_exponent_laws(ctx, f, exps).passed
    assert check_power_of_power(ctx, f, 1, 2).passed
    assert convolution_power(ctx, f, 0) == f
    assert convolution_power(ctx, f, 1) == iterated_convolve(ctx, [f] * 3)
    for times in (1, 2, 3):
        assert quer_iterate(ctx, f, times) == convolution_power(ctx, f, heine_exponent(ctx, times))


def test_zero_map_in_ternary_context_is_underdetermined():
    ctx = z3_context(2)
    res = coquerelement(ctx, ctx.zero())
    assert res.consistent and not res.unique
    assert res.nullity == 9


def test_zero_map_has_no_binary_inverse():
    ctx = z3_context(1)
    assert not coquerelement(ctx, ctx.zero()).consistent
    with pytest.raises(ConvolutionError):
        quer_iterate(ctx, ctx.zero(), 1)
