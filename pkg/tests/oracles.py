"""Brute-force reference implementations used to cross-check the library.

Everything here works on plain dicts of ``fractions.Fraction`` pairs
(real, imaginary) and never calls the library's composition, solving or
permutation code.  Only raw structure constants are read from library
objects.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

ZERO = (Fraction(0), Fraction(0))


def gq(x) -> tuple:
    """Library scalar (or int/str) to an exact (re, im) pair."""
    if isinstance(x, tuple):
        return x
    if hasattr(x, "re"):
        return (Fraction(str(x.re)), Fraction(str(x.im)))
    return (Fraction(x), Fraction(0))


def gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def gadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def vec_add(u: dict, v: dict, scale=(Fraction(1), Fraction(0))) -> dict:
    out = dict(u)
    for k, c in v.items():
        out[k] = gadd(out.get(k, ZERO), gmul(scale, c))
    return {k: c for k, c in out.items() if c != ZERO}


def map_table(f) -> dict:
    """``{in_word: {out_word: coeff}}`` from a MultiLinearMap's raw entries."""
    table: dict = {}
    for out_word, in_word, c in f.triples():
        table.setdefault(tuple(in_word), {})[tuple(out_word)] = gq(c)
    return table


# ---------------------------------------------------------------------------
# products of basis words


def product(consts: dict, n: int, word: tuple) -> dict:
    """Value of ``mu`` on a word of n basis elements as ``{k: coeff}``."""
    return {k[0]: c for k, c in consts.get(tuple(word), {}).items()}


def product_linear(consts: dict, n: int, vectors: list) -> dict:
    """``mu`` on n vectors given as ``{basis: coeff}`` dicts."""
    out: dict = {}
    for combo in itertools.product(*[list(v.items()) for v in vectors]):
        coeff = (Fraction(1), Fraction(0))
        for _, c in combo:
            coeff = gmul(coeff, c)
        out = vec_add(out, product(consts, n, tuple(k for k, _ in combo)), coeff)
    return out


def associative(mult, dim: int, n: int) -> bool:
    """Every inner placement of a nested n-ary product agrees on basis words."""
    consts = map_table(mult)
    for word in itertools.product(range(dim), repeat=2 * n - 1):
        values = []
        for i in range(n):
            inner = product(consts, n, word[i:i + n])
            outer_args = [{w: (Fraction(1), Fraction(0))} for w in word[:i]] + [inner] + \
                         [{w: (Fraction(1), Fraction(0))} for w in word[i + n:]]
            values.append(product_linear(consts, n, outer_args))
        if any(v != values[0] for v in values[1:]):
            return False
    return True


def _apply_comult_at(images: dict, tensor: dict, slot: int) -> dict:
    out: dict = {}
    for word, c in tensor.items():
        for img, d in images.get((word[slot],), {}).items():
            new = word[:slot] + img + word[slot + 1:]
            out[new] = gadd(out.get(new, ZERO), gmul(c, d))
    return {k: v for k, v in out.items() if v != ZERO}


def coassociative(comult, dim: int, n_prime: int) -> bool:
    """Applying Delta to any one leg of Delta(b) gives the same tensor."""
    images = map_table(comult)
    for b in range(dim):
        first = images.get((b,), {})
        results = [_apply_comult_at(images, first, s) for s in range(n_prime)]
        if any(r != results[0] for r in results[1:]):
            return False
    return True


# ---------------------------------------------------------------------------
# groups and convolution


def cyclic_table(order: int) -> list:
    return [[(a + b) % order for b in range(order)] for a in range(order)]


def classical_antipode(table: list, identity: int = 0) -> dict:
    """``S(g) = g^{-1}`` read off the group table."""
    n = len(table)
    return {g: next(h for h in range(n) if table[g][h] == identity) for g in range(n)}


def group_convolution(table: list, fs: list) -> dict:
    """Sweedler expansion on a group algebra with ``Delta(g) = g (x) .. (x) g``.

    Each ``f`` is a dict ``{g: {h: coeff}}``.  The convolution of k maps
    sends ``g`` to the ordered product ``f_1(g) f_2(g) ... f_k(g)``.
    """
    out = {}
    for g in range(len(table)):
        acc = {0: (Fraction(1), Fraction(0))}
        for f in fs:
            nxt: dict = {}
            for a, ca in acc.items():
                for b, cb in f.get(g, {}).items():
                    k = table[a][b]
                    nxt[k] = gadd(nxt.get(k, ZERO), gmul(ca, cb))
            acc = {k: v for k, v in nxt.items() if v != ZERO}
        out[g] = acc
    return out


def map_to_group_dict(f) -> dict:
    """Degree-one map on a group algebra as ``{g: {h: coeff}}``."""
    return {i[0]: {o[0]: c for o, c in col.items()} for i, col in map_table(f).items()}
