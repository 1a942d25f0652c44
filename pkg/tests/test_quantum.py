import random

import pytest

from polyadic.arity import Inadmissible
from polyadic.corpus import sweedler_bialgebra, sweedler_rmatrix, z2_rmatrix
from polyadic.hopf import cyclic_group_bialgebra, derived_bialgebra, von_neumann_regular_bialgebra
from polyadic.quantum import (
    MMatrix,
    RMatrix,
    check_almost_cocommutativity,
    check_almost_comediality,
    check_braid_equation,
    check_medial_braid,
    check_medial_quasipolyangular,
    check_quasipolyangular,
    check_quasitriangular,
    check_r5,
    check_yang_baxter,
    m_from_r,
    search_solutions,
    unit_element,
)
from polyadic.scalars import ONE, Scalar
from polyadic.tensorkit import SlotPermutation, TensorSum, all_words, tensor_all

HALF = Scalar.coerce("1/2")
Z2_R = TensorSum((2, 2), {(0, 0): HALF, (0, 1): HALF, (1, 0): HALF, (1, 1): -HALF})


def test_z2_rmatrix_passes_every_binary_check():
    B = cyclic_group_bialgebra(2)
    R = z2_rmatrix()
    assert R.body == Z2_R
    assert check_yang_baxter(B, R).passed
    assert check_almost_cocommutativity(B, R).passed
    assert all(v.passed for v in check_quasitriangular(B, R))
    assert check_quasipolyangular(B, R).passed
    assert all(v.passed for v in check_braid_equation(B, R)[:1])


def test_quasitriangular_search_on_z2():
    B = cyclic_group_bialgebra(2)
    found = search_solutions(B, "quasitriangular", ["0", "1/2", "-1/2", "1"])
    nonzero = [T for T in found if not T.is_zero()]
    trivial = TensorSum((2, 2), {(0, 0): ONE})
    assert Z2_R in nonzero and trivial in nonzero


def test_ybe_alone_is_trivial_on_commutative_algebras():
    B = cyclic_group_bialgebra(2)
    rng = random.Random(5)
    T = TensorSum((2, 2), {w: Scalar(rng.randint(-3, 3)) for w in all_words((2, 2))})
    assert check_yang_baxter(B, RMatrix(T, "random")).passed


@pytest.mark.parametrize("t", [0, 1, "1/3", -2])
def test_sweedler_family(t):
    B = sweedler_bialgebra()
    R = sweedler_rmatrix(t)
    assert check_yang_baxter(B, R).passed
    assert check_almost_cocommutativity(B, R).passed
    assert all(v.passed for v in check_quasitriangular(B, R))


def test_sweedler_wrong_sign_fails():
    B = sweedler_bialgebra()
    body = sweedler_rmatrix(1).body
    flipped = body + TensorSum((4, 4), {(2, 3): ONE})  # -t/2 becomes +t/2
    verdicts = [check_almost_cocommutativity(B, RMatrix(flipped, "bad"))] + \
        check_quasitriangular(B, RMatrix(flipped, "bad"))
    assert not all(v.passed for v in verdicts)


def test_sweedler_x_tensor_one_is_not_almost_cocommutative():
    B = sweedler_bialgebra()
    R = RMatrix(TensorSum.basis((4, 4), (2, 0)), "x1")
    assert check_almost_cocommutativity(B, R).status == "fail"


def test_vn3_rmatrix_from_comultiplication():
    B = von_neumann_regular_bialgebra(3)
    body = B.coalg.delta(0) + B.coalg.delta(1)
    R = RMatrix(body, "D")
    assert check_almost_cocommutativity(B, R, SlotPermutation([2, 1, 0])).passed


def test_vn3_three_factor_cocommutativity_needs_a_twist():
    B = von_neumann_regular_bialgebra(3)
    R = RMatrix(B.coalg.delta(1), "D1")
    assert check_almost_cocommutativity(B, R).status == "inadmissible"


def test_r5_on_commutative_algebra_passes():
    B = derived_bialgebra(cyclic_group_bialgebra(2), 1, 2)
    rng = random.Random(2)
    T = TensorSum((2, 2, 2), {w: Scalar(rng.randint(-2, 2)) for w in all_words((2, 2, 2))})
    assert check_r5(B, RMatrix(T, "random")).passed


def test_r5_on_sweedler_fails_for_random_r():
    B = derived_bialgebra(sweedler_bialgebra(), 1, 2)
    rng = random.Random(1)
    T = TensorSum((4, 4, 4), {w: Scalar(rng.randint(-2, 2)) for w in all_words((4, 4, 4))})
    assert check_r5(B, RMatrix(T, "random")).status == "fail"


def test_r5_inadmissible_for_ternary_product():
    B = von_neumann_regular_bialgebra(3)
    T = B.coalg.delta(0)
    assert check_r5(B, RMatrix(T, "D0")).status == "inadmissible"


def test_medial_matrix_from_r():
    B = cyclic_group_bialgebra(2)
    MR, tau_r = m_from_r(RMatrix(Z2_R, "R"))
    assert tau_r.image == (1, 0, 3, 2)
    assert MR.body == tensor_all([Z2_R, Z2_R])
    assert check_almost_comediality(B, MR, twist=tau_r).passed


def test_medial_r_fails_medial_relations_on_z2():
    # Recorded behaviour: M_R is co-medial for tau_R but not for the medial
    # twist relations or the medial braid checks.
    B = cyclic_group_bialgebra(2)
    MR, _ = m_from_r(RMatrix(Z2_R, "R"))
    assert not check_medial_quasipolyangular(B, MR).passed
    assert not check_medial_braid(B, MR).passed


def test_unit_medial_matrix_passes_explicit_braids():
    B = cyclic_group_bialgebra(2)
    e = unit_element(B.alg)
    M = MMatrix(tensor_all([e] * 4), "e4")
    by_name = check_medial_braid(B, M).by_name()
    assert by_name["medial braid (long)"].passed
    assert by_name["medial braid (short)"].passed
    rel = check_medial_quasipolyangular(B, M)
    assert rel.passed and len(rel.verdicts) == 8


def test_search_rejects_unknown_target():
    with pytest.raises(ValueError):
        search_solutions(cyclic_group_bialgebra(2), "nonsense", ["0"])


def test_medial_braid_search_needs_binary_comultiplication():
    with pytest.raises(Inadmissible):
        search_solutions(von_neumann_regular_bialgebra(3), "medial_braid", ["0"])
