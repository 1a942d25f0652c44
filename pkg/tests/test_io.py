import json
import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_map
from polyadic.corpus import corpus_algebras, corpus_coalgebras, sweedler_bialgebra, sweedler_rmatrix
from polyadic.convolution import ConvolutionContext
from polyadic.hopf import cyclic_group_bialgebra
from polyadic.io import (
    FormatError,
    algebra_to_block,
    bialgebra_to_block,
    coalgebra_to_block,
    context_to_block,
    dumps,
    load_block,
    load_file,
    map_from_block,
    map_to_block,
    write_file,
)

EXAMPLES = Path(__file__).resolve().parent.parent / "samples"


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 2), st.integers(1, 2), st.booleans())
def test_map_round_trip(seed, k_in, k_out, gaussian):
    rng = random.Random(seed)
    f = random_map(rng, (2,) * k_in, (3,) * k_out, density=0.5, gaussian=gaussian)
    block = json.loads(dumps(map_to_block(f)))
    assert map_from_block(block) == f


@pytest.mark.parametrize("name", sorted(corpus_algebras()))
def test_algebra_round_trip(name):
    A = corpus_algebras()[name]
    back = load_block(json.loads(dumps(algebra_to_block(A)))).obj
    assert back.mult == A.mult and back.unit == A.unit and back.labels == A.labels


@pytest.mark.parametrize("name", sorted(corpus_coalgebras()))
def test_coalgebra_round_trip(name):
    C = corpus_coalgebras()[name]
    back = load_block(json.loads(dumps(coalgebra_to_block(C)))).obj
    assert back.comult == C.comult and back.counit == C.counit


def test_bialgebra_with_rmatrix_round_trip():
    B = sweedler_bialgebra()
    R = sweedler_rmatrix("1/2")
    loaded = load_block(json.loads(dumps(bialgebra_to_block(B, {"R": R}))))
    assert loaded.kind == "bialgebra"
    assert loaded.obj.alg.mult == B.alg.mult
    assert loaded.rmatrices["R"].body == R.body


def test_context_round_trip(tmp_path):
    B = cyclic_group_bialgebra(3)
    ctx = ConvolutionContext(B.alg, B.coalg, 2, 2)
    f = random_map(random.Random(1), (3,), (3,))
    path = tmp_path / "ctx.json"
    write_file(path, context_to_block(ctx, {"f": f}))
    loaded = load_file(path)
    assert loaded.obj.n_star == 3
    assert loaded.maps["f"] == f


@pytest.mark.parametrize("path", sorted(EXAMPLES.glob("*.json")), ids=lambda p: p.stem)
def test_examples_load(path):
    loaded = load_file(path)
    assert loaded.axioms or loaded.kind == "convolution_context"


@pytest.mark.parametrize("block", [
    [],
    {"name": "no kind"},
    {"kind": "spaceship"},
    {"kind": "algebra", "arity": 2},
    {"kind": "algebra", "dim": 2, "in": 2, "out": 1, "entries": [{"out_word": [0], "in_word": [0, 5], "coeff": "1"}]},
    {"kind": "algebra", "dim": 2, "in": 2, "out": 1, "entries": [{"out_word": [0], "in_word": [0, 0], "coeff": "1/0"}]},
    {"kind": "algebra", "dim": 2, "in": 2, "out": 1, "entries": [{"out_word": [0], "in_word": [0, 0], "coeff": 0.5}]},
    {"kind": "algebra", "arity": 3, "dim": 2, "in": 2, "out": 1, "entries": []},
    {"kind": "map", "in": 1, "out": 1, "entries": []},
    {"kind": "bialgebra", "algebra": {"kind": "algebra"}},
    {"kind": "nary_group", "carrier": {"type": "range", "size": 2}, "ops": []},
    {"kind": "polyadic_field", "carrier": {"type": "range", "size": 2}, "ops": [{"name": "add"}]},
], ids=lambda b: str(b)[:40])
def test_malformed_blocks_raise_format_error(block):
    with pytest.raises(FormatError):
        load_block(block)


def test_unreadable_and_invalid_files(tmp_path):
    with pytest.raises(FormatError):
        load_file(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(FormatError):
        load_file(bad)
