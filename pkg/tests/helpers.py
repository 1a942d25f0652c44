"""Shared builders for the test-suite."""
from __future__ import annotations

import contextlib
import io
import random
from fractions import Fraction

from polyadic.cli import main
from polyadic.scalars import Scalar
from polyadic.tensorkit import MultiLinearMap, word_to_flat, all_words

SMALL = [Fraction(v, d) for v in range(-3, 4) for d in (1, 2)]


def random_scalar(rng: random.Random, gaussian: bool = False) -> Scalar:
    re = rng.choice(SMALL)
    im = rng.choice(SMALL) if gaussian else 0
    return Scalar(re, im)


def random_map(rng: random.Random, in_dims, out_dims, density: float = 0.7, gaussian: bool = False) -> MultiLinearMap:
    entries = {}
    for i in all_words(in_dims):
        for o in all_words(out_dims):
            if rng.random() < density:
                c = random_scalar(rng, gaussian)
                if not c.is_zero():
                    entries[(word_to_flat(o, out_dims), word_to_flat(i, in_dims))] = c
    return MultiLinearMap(in_dims, out_dims, entries)


def run_cli(argv) -> tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main([str(a) for a in argv])
    return code, buf.getvalue()


def perturb(f: MultiLinearMap, index: int = 0, delta=1) -> MultiLinearMap:
    """Add ``delta`` to one coefficient (chosen deterministically)."""
    keys = sorted({(o, i) for o in range(f.out_size) for i in range(f.in_size)})
    key = keys[index % len(keys)]
    entries = dict(f.entries)
    entries[key] = entries.get(key, Scalar(0)) + Scalar(delta)
    if entries[key].is_zero():
        del entries[key]
    return MultiLinearMap(f.in_dims, f.out_dims, entries)
