import pytest

from polyadic.nary import (
    Carrier,
    NaryOp,
    check_closure,
    check_commutativity,
    check_field,
    check_total_associativity,
    find_absorbing,
    find_units,
    find_units_and_neutral_sequences,
    find_zeros,
    formula_op,
    imaginary_line_sample,
    querelement,
    rational_sample,
    ternary_field_sample,
)
from polyadic.scalars import Scalar, rational


def test_ternary_sum_mod_is_a_group():
    op = formula_op("sum_mod", 3, modulus=5)
    assert check_total_associativity(op).passed
    assert check_commutativity(op).passed
    assert find_zeros(op) == [0]
    for x in range(5):
        assert querelement(op, x).solutions == [(-x) % 5]


def test_affine_sum_has_shifted_unit():
    op = formula_op("affine_sum_mod", 3, modulus=3, shift=1)
    assert check_total_associativity(op).passed
    assert find_units(op) == [1]


def test_nonassociative_formula_gives_witness():
    op = formula_op("affine_sum_mod", 3, modulus=5, coeffs=[1, 2, 1])
    v = check_total_associativity(op)
    assert not v.passed
    assert len(v.witness["word"]) == 5


def test_table_round_trip():
    op = formula_op("sum_mod", 3, modulus=3)
    table = op.table()
    again = NaryOp.from_table(3, op.carrier, table)
    assert again.table() == table
    assert check_total_associativity(again).passed
    assert querelement(again, 2).solutions == [1]


def test_table_querelement_scan_detects_ambiguity():
    carrier = Carrier([0, 1])
    const = NaryOp.from_table(2, carrier, [0, 0, 0, 0])
    res = querelement(const, 0)
    assert res.ambiguous and res.value is None
    assert not querelement(const, 1).exists


def test_rational_field_census():
    rep = check_field(rational_sample(3))
    assert rep.passed
    assert rep.classification == "unital zeroed"


def test_imaginary_line_census():
    rep = check_field(imaginary_line_sample(3))
    assert rep.passed
    assert rep.classification == "nonunital zeroed"


def test_ternary_field_has_neutral_sequences_without_unit():
    desc = ternary_field_sample(3)
    rep = find_units_and_neutral_sequences(desc.mul)
    assert rep.units == []
    assert rep.neutral_sequences
    for a, b in rep.neutral_sequences:
        assert a * b == Scalar(1)


def test_zero_is_absorbing_for_multiplication():
    desc = rational_sample(2)
    zeros = find_zeros(desc.add)
    assert zeros == [Scalar(0)]
    assert Scalar(0) in find_absorbing(desc.mul)


def test_closure_uses_membership():
    desc = ternary_field_sample(3)
    assert check_closure(desc.mul, sample=500).passed
    x = Scalar(0, rational(1, 3))
    assert desc.mul(x, x, x) == Scalar(0, rational(-1, 27))


def test_wrong_arity_call_raises():
    op = formula_op("sum_mod", 3, modulus=5)
    with pytest.raises(ValueError):
        op(1, 2)
