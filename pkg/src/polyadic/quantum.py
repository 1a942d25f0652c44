"""R-matrices, M-matrices and the equations they are asked to satisfy.

An R-matrix of a bialgebra with n'-ary comultiplication is a fixed tensor in
``B^(x)n'``; an M-matrix lives in ``B^(x)n'^2``.  Everything here works with
exact ``TensorSum`` objects and componentwise products, so the checks never
build dense maps on ``B^(x)7``.

Slot lists are 0-based in the API.  ``slots_from_digits("1546")`` converts
the 1-based digit strings used when writing extended matrices by hand.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import isqrt
from typing import Callable, Sequence

from .algebra import PolyadicAlgebra, resolve_twist
from .arity import Inadmissible
from .coalgebra import coiterate
from .hopf import PolyadicBialgebra
from .runtime import check_budget, parallel_map
from .scalars import ONE, ZERO, Scalar
from .tensorkit import (
    MultiLinearMap,
    ShapeError,
    SlotPermutation,
    TensorSum,
    all_words,
    flat_to_word,
    medial_permutation,
    reversal,
    tensor_all,
)
from .verdict import INADMISSIBLE, Verdict


class MissingUnit(ValueError):
    """The algebra has no unit element to pad extended matrices with."""


# ---------------------------------------------------------------------------
# domain types


@dataclass
class RMatrix:
    body: TensorSum
    name: str = "R"

    @property
    def factors(self) -> int:
        return self.body.factors


@dataclass
class MMatrix:
    body: TensorSum
    name: str = "M"

    @property
    def factors(self) -> int:
        return self.body.factors

    @property
    def side(self) -> int:
        """The arity ``n'`` with ``n'^2`` factors."""
        s = isqrt(self.factors)
        if s * s != self.factors:
            raise ShapeError(f"an M-matrix needs a square number of factors, got {self.factors}")
        return s


@dataclass
class ExtendedMatrix:
    total_factors: int
    slots: tuple
    body: TensorSum


def _alg(B) -> PolyadicAlgebra:
    return B.alg if isinstance(B, PolyadicBialgebra) else B


def _body(X) -> TensorSum:
    return X.body if isinstance(X, (RMatrix, MMatrix, ExtendedMatrix)) else X


def slots_from_digits(digits: str) -> list[int]:
    return [int(ch) - 1 for ch in digits]


def trivial_matrix(B: PolyadicBialgebra, factors: int, kind: str = "r"):
    e = unit_element(B.alg)
    body = tensor_all([e] * factors)
    return RMatrix(body, "trivial") if kind == "r" else MMatrix(body, "trivial")


# ---------------------------------------------------------------------------
# products


def unit_element(alg: PolyadicAlgebra) -> TensorSum:
    """A single element ``e`` with ``mu[e, .., e, x, e, .., e] = x`` for all x and places.

    For binary algebras this is the declared unit.  For higher arity the
    basis elements are tried; a unit that is not a basis vector must be
    passed explicitly where the API allows it.
    """
    if alg.arity == 2 and alg.unit is not None:
        return alg.unit_tensor()
    for k in range(alg.dim):
        if _is_unit_element(alg, k):
            return alg.basis(k)
    raise MissingUnit(f"{alg!r} has no basis unit element")


def _is_unit_element(alg: PolyadicAlgebra, k: int) -> bool:
    n = alg.arity
    for x in range(alg.dim):
        for p in range(n):
            word = [k] * n
            word[p] = x
            if alg.basis_product(tuple(word)) != {x: ONE}:
                return False
    return True


def _check_length(alg: PolyadicAlgebra, count: int) -> int:
    if count < 1 or (count - 1) % (alg.arity - 1):
        raise Inadmissible(f"{count} factors cannot be multiplied by an iterated {alg.arity}-ary product")
    return (count - 1) // (alg.arity - 1)


def product_of(alg: PolyadicAlgebra, tensors: Sequence[TensorSum]) -> TensorSum:
    """Left-nested iterated product ``(mu)^(o l)`` applied componentwise."""
    _check_length(alg, len(tensors))
    n = alg.arity
    acc = alg.mul_tensors(*tensors[:n]) if len(tensors) > 1 else tensors[0]
    for start in range(n, len(tensors), n - 1):
        acc = alg.mul_tensors(acc, *tensors[start:start + n - 1])
    return acc


class _Letters:
    """Cached iterated products of basis letters, returned as ``{k: coeff}``."""

    def __init__(self, alg: PolyadicAlgebra):
        self.alg = alg
        self.cache: dict = {}

    def __call__(self, letters: tuple) -> dict:
        hit = self.cache.get(letters)
        if hit is not None:
            return hit
        alg = self.alg
        n = alg.arity
        _check_length(alg, len(letters))
        if len(letters) == 1:
            out = {letters[0]: ONE}
        else:
            acc = dict(alg.basis_product(letters[:n]))
            for start in range(n, len(letters), n - 1):
                chunk = letters[start:start + n - 1]
                nxt: dict = {}
                for a, ca in acc.items():
                    for o, co in alg.basis_product((a, *chunk)).items():
                        nxt[o] = nxt.get(o, ZERO) + ca * co
                acc = {k: v for k, v in nxt.items() if not v.is_zero()}
            out = acc
        self.cache[letters] = out
        return out


def apply_at(T: TensorSum, slot: int, image: Callable[[int], TensorSum]) -> TensorSum:
    """Replace factor ``slot`` of every word by ``image(letter)``."""
    pieces: dict = {}
    out_dims = None
    for w, c in T.terms.items():
        img = image(w[slot])
        if out_dims is None:
            out_dims = T.dims[:slot] + img.dims + T.dims[slot + 1:]
        for iw, ic in img.terms.items():
            key = w[:slot] + iw + w[slot + 1:]
            pieces[key] = pieces.get(key, ZERO) + c * ic
    if out_dims is None:
        img = image(0)
        out_dims = T.dims[:slot] + img.dims + T.dims[slot + 1:]
    return TensorSum(out_dims, pieces)


def double_delta(B: PolyadicBialgebra, b: int) -> TensorSum:
    """``(Delta^(x)n') o Delta (b)`` with ``n'^2`` factors."""
    out = B.coalg.delta(b)
    # expand from the right so earlier slot indices stay valid
    for slot in reversed(range(B.n_prime)):
        out = apply_at(out, slot, B.coalg.delta)
    return out


def _diff_witness(lhs: TensorSum, rhs: TensorSum, limit: int = 6) -> list:
    d = lhs - rhs
    return [[list(w), str(c)] for w, c in d.items()[:limit]]


def _tensor_verdict(name: str, lhs: TensorSum, rhs: TensorSum, **details) -> Verdict:
    if lhs == rhs:
        return Verdict.ok(name, **details)
    return Verdict.fail(name, {"difference": _diff_witness(lhs, rhs)}, **details)


def _inadmissible(name: str, exc: Exception) -> Verdict:
    return Verdict(name, INADMISSIBLE, None, {"reason": str(exc)})


# ---------------------------------------------------------------------------
# extended matrices


def extend_matrix(B: PolyadicBialgebra | PolyadicAlgebra, X, slots: Sequence[int], total: int,
                  unit: TensorSum | None = None) -> ExtendedMatrix:
    """Place component ``k`` of ``X`` at slot ``slots[k]`` and pad the rest with ``e_B``."""
    body = _body(X)
    slots = tuple(slots)
    if len(slots) != body.factors:
        raise ShapeError(f"{body.factors} components need {body.factors} slots, got {len(slots)}")
    if len(set(slots)) != len(slots) or any(s < 0 or s >= total for s in slots):
        raise ShapeError(f"slots {list(slots)} are not distinct places in 0..{total - 1}")
    alg = _alg(B)
    e = unit if unit is not None else unit_element(alg)
    free = [s for s in range(total) if s not in slots]
    pad = tensor_all([e] * len(free))
    dims = [alg.dim] * total
    out: dict = {}
    for w, c in body.terms.items():
        for pw, pc in pad.terms.items():
            word = [0] * total
            for s, letter in zip(slots, w):
                word[s] = letter
            for s, letter in zip(free, pw):
                word[s] = letter
            key = tuple(word)
            out[key] = out.get(key, ZERO) + c * pc
    return ExtendedMatrix(total, slots, TensorSum(dims, out))


def extended_product(B: PolyadicBialgebra | PolyadicAlgebra, X, slot_lists: Sequence, total: int,
                     unit: TensorSum | None = None) -> TensorSum:
    """Product of the extended matrices ``X_{slots}`` in written order."""
    e = unit if unit is not None else unit_element(_alg(B))
    parts = []
    for s in slot_lists:
        if isinstance(s, str):
            s = slots_from_digits(s)
        parts.append(extend_matrix(B, X, s, total, e).body)
    return product_of(_alg(B), parts)


# ---------------------------------------------------------------------------
# almost co-commutativity and co-mediality


def _placement_check(B: PolyadicBialgebra, name: str, block: Callable[[int], TensorSum],
                     twist: SlotPermutation, seq: list, all_placements: bool) -> Verdict:
    n = B.n
    for b in range(B.dim):
        D = block(b)
        first = product_of(B.alg, [D.permute(twist), *seq])
        positions = range(1, n) if all_placements else [n - 1]
        for p in positions:
            other = product_of(B.alg, [*seq[:p], D, *seq[p:]])
            if other != first:
                return Verdict.fail(name, {"basis": b, "label": B.labels[b], "placement": p,
                                           "difference": _diff_witness(first, other)})
    return Verdict.ok(name, basis_checked=B.dim)


def check_almost_cocommutativity(B: PolyadicBialgebra, R, tau: SlotPermutation | None = None,
                                 sequenced: Sequence | None = None, semi: bool = False) -> Verdict:
    """``mu[Delta_cop(b), R, .., R] = mu[R, .., R, Delta(b)]`` on every basis element.

    ``sequenced`` supplies ``n-1`` possibly different matrices; then every
    intermediate placement of ``Delta(b)`` is compared too unless ``semi``.
    """
    name = "almost co-commutativity"
    try:
        twist = resolve_twist(B.n_prime, tau)
    except Inadmissible as exc:
        return _inadmissible(name, exc)
    seq = [_body(x) for x in sequenced] if sequenced is not None else [_body(R)] * (B.n - 1)
    if len(seq) != B.n - 1:
        raise ShapeError(f"need {B.n - 1} matrices in the sequence")
    if any(s.factors != B.n_prime for s in seq):
        raise ShapeError(f"an R-matrix of this bialgebra has {B.n_prime} factors")
    return _placement_check(B, name, B.coalg.delta, twist, seq, sequenced is not None and not semi)


def medial_twist(nprime: int) -> SlotPermutation:
    return medial_permutation(nprime, nprime)


def check_almost_comediality(B: PolyadicBialgebra, M, twist: SlotPermutation | None = None,
                             sequenced: Sequence | None = None, semi: bool = False) -> Verdict:
    """``mu[tau o (Delta^(x)n') o Delta(b), M, .., M] = mu[M, .., M, (Delta^(x)n') o Delta(b)]``.

    ``twist`` defaults to the medial map on ``n'^2`` slots; passing the
    ``tau_R`` of :func:`m_from_r` gives the medial-like form.
    """
    name = "almost co-mediality" if twist is None else "almost co-mediality (custom twist)"
    k = B.n_prime
    tw = twist if twist is not None else medial_twist(k)
    if tw.size != k * k:
        raise ShapeError(f"twist must act on {k * k} slots")
    seq = [_body(x) for x in sequenced] if sequenced is not None else [_body(M)] * (B.n - 1)
    if any(s.factors != k * k for s in seq):
        raise ShapeError(f"an M-matrix of this bialgebra has {k * k} factors")
    return _placement_check(B, name, lambda b: double_delta(B, b), tw, seq,
                            sequenced is not None and not semi)


def m_from_r(R, nprime: int | None = None, tau: SlotPermutation | None = None) -> tuple:
    """``M_R = R^(x)n'`` together with ``tau_R = tau_op^(x)n'``."""
    body = _body(R)
    k = nprime or body.factors
    if body.factors != k:
        raise ShapeError(f"R has {body.factors} factors, expected {k}")
    twist = resolve_twist(k, tau)
    tau_R = twist
    for _ in range(k - 1):
        tau_R = tau_R.tensor(twist)
    return MMatrix(tensor_all([body] * k), "M_R"), tau_R


# ---------------------------------------------------------------------------
# binary Yang-Baxter and quasitriangularity


def _require_binary(B: PolyadicBialgebra, what: str) -> None:
    if B.n != 2 or B.n_prime != 2:
        raise Inadmissible(f"{what} is stated for binary bialgebras only")


def check_yang_baxter(B: PolyadicBialgebra | PolyadicAlgebra, R) -> Verdict:
    """``R12 R13 R23 = R23 R13 R12``; only the multiplication is involved."""
    name = "Yang-Baxter"
    if _alg(B).arity != 2 or _body(R).factors != 2:
        return _inadmissible(name, Inadmissible("the Yang-Baxter equation is stated for binary products of 2-factor R"))
    lhs = extended_product(B, R, ["12", "13", "23"], 3)
    rhs = extended_product(B, R, ["23", "13", "12"], 3)
    return _tensor_verdict(name, lhs, rhs)


def check_quasitriangular(B: PolyadicBialgebra, R) -> list[Verdict]:
    """``(Delta (x) id) R = R13 R23`` and ``(id (x) Delta) R = R13 R12``."""
    try:
        _require_binary(B, "quasitriangularity")
    except Inadmissible as exc:
        return [_inadmissible("quasitriangular (Delta x id)", exc),
                _inadmissible("quasitriangular (id x Delta)", exc)]
    body = _body(R)
    first = _tensor_verdict("quasitriangular (Delta x id)", apply_at(body, 0, B.coalg.delta),
                            extended_product(B, R, ["13", "23"], 3))
    second = _tensor_verdict("quasitriangular (id x Delta)", apply_at(body, 1, B.coalg.delta),
                             extended_product(B, R, ["13", "12"], 3))
    return [first, second]


def check_r5(B: PolyadicBialgebra, R) -> Verdict:
    """``R123 R145 R254 R345 = R345 R254 R145 R123`` for a ternary R-matrix.

    Four factors can only be multiplied when ``n`` is 2 or 4.
    """
    name = "ternary Yang-Baxter analog"
    if _body(R).factors != 3:
        raise ShapeError("this identity concerns 3-factor R-matrices")
    try:
        _check_length(B.alg, 4)
        lhs = extended_product(B, R, ["123", "145", "254", "345"], 5)
        rhs = extended_product(B, R, ["345", "254", "145", "123"], 5)
    except (Inadmissible, MissingUnit) as exc:
        return _inadmissible(name, exc)
    return _tensor_verdict(name, lhs, rhs)


# ---------------------------------------------------------------------------
# quasipolyangularity (componentwise)


@dataclass
class RelationReport:
    verdicts: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def by_name(self) -> dict:
        return {v.name: v for v in self.verdicts}


def _angular_rhs(B: PolyadicBialgebra, body: TensorSum, k: int, copies: int,
                 twist: SlotPermutation | None, letters: _Letters) -> TensorSum:
    """Sum over ``copies`` independent terms of ``body``.

    Components before ``k`` are multiplied after permuting the copies by
    ``twist``; component ``k`` stays unmultiplied; later ones are multiplied
    in order.
    """
    comps = body.factors
    terms = list(body.terms.items())
    check_budget(len(terms) ** copies, "polyangular expansion")
    out: dict = {}
    for combo in itertools.product(terms, repeat=copies):
        coeff = ONE
        for _, c in combo:
            coeff = coeff * c
        partial = [((), coeff)]
        for j in range(comps):
            seq = tuple(w[j] for w, _ in combo)
            if j == k:
                partial = [(pw + seq, pc) for pw, pc in partial]
                continue
            if j < k and twist is not None:
                seq = twist.apply(seq)
            col = letters(seq)
            if not col:
                partial = []
                break
            partial = [(pw + (o,), pc * c) for pw, pc in partial for o, c in col.items()]
        for w, c in partial:
            out[w] = out.get(w, ZERO) + c
    dims = (B.dim,) * (comps - 1 + copies)
    return TensorSum(dims, out)


def check_quasipolyangular(B: PolyadicBialgebra, R, tau: SlotPermutation | None = None) -> RelationReport:
    """The ``n'`` relations obtained by applying ``Delta`` to each component of R."""
    body = _body(R)
    k = B.n_prime
    if body.factors != k:
        raise ShapeError(f"R must have {k} factors")
    names = [f"quasipolyangular relation {i + 1}" for i in range(k)]
    if (k - 1) % (B.n - 1):
        exc = Inadmissible(f"n' = {k} is not l(n-1)+1 for n = {B.n}")
        return RelationReport([_inadmissible(nm, exc) for nm in names])
    letters = _Letters(B.alg)
    try:
        twist = resolve_twist(k, tau)
    except Inadmissible as exc:
        # only the first relation can be stated without a twist
        first = _relation(B, body, 0, k, None, letters, names[0], B.coalg.delta)
        return RelationReport([first] + [_inadmissible(nm, exc) for nm in names[1:]])
    return RelationReport([_relation(B, body, i, k, twist, letters, names[i], B.coalg.delta)
                           for i in range(k)])


def _relation(B, body, i, copies, twist, letters, name, block) -> Verdict:
    lhs = apply_at(body, i, block)
    rhs = _angular_rhs(B, body, i, copies, twist, letters)
    return _tensor_verdict(name, lhs, rhs, component=i + 1)


def check_medial_quasipolyangular(B: PolyadicBialgebra, M) -> RelationReport:
    """All ``n'^2`` componentwise relations; for binary bialgebras also the
    extended-matrix forms of the first and last relation and the two
    compatibility identities that follow from them."""
    body = _body(M)
    k = B.n_prime
    N = k * k
    if body.factors != N:
        raise ShapeError(f"M must have {N} factors")
    names = [f"medial quasipolyangular relation {i + 1}" for i in range(N)]
    if (N - 1) % (B.n - 1):
        exc = Inadmissible(f"n'^2 = {N} is not l(n-1)+1 for n = {B.n}")
        return RelationReport([_inadmissible(nm, exc) for nm in names])
    letters = _Letters(B.alg)
    twist = medial_twist(k)
    block = lambda b: double_delta(B, b)  # noqa: E731
    verdicts = [_relation(B, body, i, N, twist, letters, names[i], block) for i in range(N)]
    if k == 2:
        verdicts.extend(_binary_extended_relations(B, body, block))
    return RelationReport(verdicts)


def _binary_extended_relations(B, body, block) -> list[Verdict]:
    out = []
    try:
        e = unit_element(B.alg)
    except MissingUnit as exc:
        return [_inadmissible(nm, exc) for nm in ("extended relation 1", "extended relation 4",
                                                  "compatibility 1", "compatibility 2")]
    try:
        first = extended_product(B, body, ["1567", "2567", "3567", "4567"], 7, e)
        out.append(_tensor_verdict("extended relation 1", apply_at(body, 0, block), first))
        last = extended_product(B, body, ["1234", "1236", "1235", "1237"], 7, e)
        out.append(_tensor_verdict("extended relation 4", apply_at(body, 3, block), last))
    except Inadmissible as exc:
        out += [_inadmissible("extended relation 1", exc), _inadmissible("extended relation 4", exc)]
    for nm, lhs, rhs in (
        ("compatibility 1", ["1234", "1567", "2567", "3567", "4567"], ["1567", "3567", "2567", "4567", "1234"]),
        ("compatibility 2", ["4567", "1234", "1236", "1235", "1237"], ["1234", "1235", "1236", "1237", "4567"]),
    ):
        try:
            out.append(_tensor_verdict(nm, extended_product(B, body, lhs, 7, e),
                                       extended_product(B, body, rhs, 7, e)))
        except Inadmissible as exc:
            out.append(_inadmissible(nm, exc))
    return out


# ---------------------------------------------------------------------------
# braidings on V = B with the regular action


def _coiterated_delta(B: PolyadicBialgebra, size: int) -> Callable[[int], TensorSum]:
    if size == 1:
        return lambda b: B.alg.basis(b)
    k = B.n_prime - 1
    if (size - 1) % k:
        raise Inadmissible(f"a block of {size} modules is not reached by iterating Delta")
    cols = coiterate(B.coalg, (size - 1) // k).columns()
    dims = (B.dim,) * size
    return lambda b: TensorSum(dims, [(flat_to_word(o, dims), c) for o, c in cols.get(b, ())])


def braiding(B: PolyadicBialgebra, X, blocks: Sequence[int] | None = None,
             output: SlotPermutation | None = None) -> MultiLinearMap:
    """``c = tau_V o rho(X, .., X | v)`` with ``n-1`` copies of ``X``.

    ``blocks`` groups consecutive module slots into tensor-product modules on
    which ``B`` acts through the iterated comultiplication.  ``output``
    permutes the blocks afterwards; it defaults to reversing them.
    """
    body = _body(X)
    comps = body.factors
    blocks = list(blocks) if blocks is not None else [1] * comps
    if len(blocks) != comps:
        raise ShapeError(f"{comps} components need {comps} blocks")
    expanded = body
    offset = 0
    for size in blocks:
        if size > 1:
            expanded = apply_at(expanded, offset, _coiterated_delta(B, size))
        offset += size
    total = sum(blocks)
    out_perm = output if output is not None else reversal(comps)
    # block permutation -> slot permutation
    starts = [sum(blocks[:i]) for i in range(comps)]
    new_order = [None] * comps
    for j in range(comps):
        new_order[out_perm.image[j]] = j
    new_starts = {}
    pos = 0
    for j in new_order:
        new_starts[j] = pos
        pos += blocks[j]
    image = [0] * total
    for j in range(comps):
        for t in range(blocks[j]):
            image[starts[j] + t] = new_starts[j] + t
    slot_perm = SlotPermutation(image)
    copies = [expanded] * (B.n - 1)
    dims = (B.dim,) * total

    def column(word):
        v = TensorSum.basis(dims, word)
        return B.alg.mul_tensors(*copies, v).permute(slot_perm)

    return MultiLinearMap.from_function(dims, dims, column)


_COLUMN_CACHE: dict = {}


def _word_columns(c: MultiLinearMap) -> dict:
    """``{input_word: [(output_word, coeff)]}`` for a map on one tensor power."""
    hit = _COLUMN_CACHE.get(id(c))
    if hit is not None and hit[0] is c:
        return hit[1]
    cols = {flat_to_word(i, c.in_dims): [(flat_to_word(o, c.out_dims), v) for o, v in col]
            for i, col in c.columns().items()}
    if len(_COLUMN_CACHE) > 64:
        _COLUMN_CACHE.clear()
    _COLUMN_CACHE[id(c)] = (c, cols)
    return cols


def _apply_bracket(T: TensorSum, cols: dict, start: int, width: int) -> TensorSum:
    out: dict = {}
    end = start + width
    for w, coeff in T.terms.items():
        head, tail = w[:start], w[end:]
        for o, c in cols.get(w[start:end], ()):
            key = head + o + tail
            out[key] = out.get(key, ZERO) + coeff * c
    return TensorSum(T.dims, out)


def apply_brackets(T: TensorSum, brackets: Sequence[tuple], dim: int | None = None) -> TensorSum:
    """Apply ``(c, start)`` brackets written left to right; the rightmost acts first."""
    for c, start in reversed(list(brackets)):
        T = _apply_bracket(T, _word_columns(c), start, c.in_factors)
    return T


def _compare_on_basis(name: str, total: int, dim: int, lhs_fn, rhs_fn, **details) -> Verdict:
    dims = (dim,) * total
    check_budget(dim ** total, name)
    words = list(all_words(dims))

    def probe(word):
        x = TensorSum.basis(dims, word)
        a, b = lhs_fn(x), rhs_fn(x)
        return None if a == b else (list(word), _diff_witness(a, b))

    for res in parallel_map(probe, words):
        if res is not None:
            return Verdict.fail(name, {"input": res[0], "difference": res[1]}, **details)
    return Verdict.ok(name, inputs=len(words), **details)


def braid_positions(width: int) -> tuple[list[int], list[int]]:
    """Bracket starts of the generic braid relation on ``2*width - 1`` slots."""
    lhs = list(range(width)) + [0]
    rhs = [width - 1] + list(range(width - 1)) + [width - 1]
    return lhs, rhs


def check_braid_equation(B: PolyadicBialgebra, R, nprime: int | None = None) -> list[Verdict]:
    """The braid relation of the braiding built from R; for ``n' = 3`` the two
    compatibilities with tensor-product modules as well."""
    body = _body(R)
    k = nprime or body.factors
    if body.factors != k:
        raise ShapeError(f"R must have {k} factors")
    c = braiding(B, R)
    lp, rp = braid_positions(k)
    total = 2 * k - 1
    verdicts = [_compare_on_basis(
        "braid equation", total, B.dim,
        lambda x: apply_brackets(x, [(c, p) for p in lp], B.dim),
        lambda x: apply_brackets(x, [(c, p) for p in rp], B.dim),
    )]
    if k == 2:
        verdicts.extend(_module_compatibilities(B, R, c, 2))
    elif k == 3:
        verdicts.extend(_module_compatibilities(B, R, c, 3))
    return verdicts


def _module_compatibilities(B, R, c, k) -> list[Verdict]:
    """Braiding against a tensor-product module equals the product of braidings."""
    out = []
    dim = B.dim
    total = 2 * k - 1
    try:
        c_left = braiding(B, R, [k] + [1] * (k - 1))
        c_right = braiding(B, R, [1] * (k - 1) + [k])
    except Inadmissible as exc:
        return [_inadmissible("braiding compatibility 1", exc), _inadmissible("braiding compatibility 2", exc)]
    if k == 2:
        left_steps, right_steps = [0, 1], [1, 0]
    else:
        left_steps, right_steps = [0, 1, 2], [1, 2, 0]
    out.append(_compare_on_basis(
        "braiding compatibility 1", total, dim,
        lambda x: apply_brackets(x, [(c, p) for p in left_steps], dim),
        lambda x: apply_brackets(x, [(c_left, 0)], dim),
    ))
    out.append(_compare_on_basis(
        "braiding compatibility 2", total, dim,
        lambda x: apply_brackets(x, [(c, p) for p in right_steps], dim),
        lambda x: apply_brackets(x, [(c_right, 0)], dim),
    ))
    return out


# ---------------------------------------------------------------------------
# medial braid equations


MEDIAL_BRAID_LONG = (
    ["1546", "5643", "6342", "3247", "1653", "6352", "3254", "2457", "1362", "3264", "2465", "4567", "1234"],
    ["6237", "1546", "5642", "6243", "2347", "1652", "6253", "2354", "3457", "1263", "2364", "3465", "4567"],
)
MEDIAL_BRAID_SHORT = (
    ["5243", "2347", "1562", "5263", "2364", "3467", "1253", "2354", "3456"],
    ["6452", "4253", "2357", "1462", "4263", "2365", "3567", "1243", "2345"],
)
BRACKETS_LONG = ([0, 1, 2, 3] * 3 + [0], [3] + [0, 1, 2, 3] * 3)
BRACKETS_SHORT = ([2, 3, 0, 1, 2, 3, 0, 1, 2], [1, 2, 3, 0, 1, 2, 3, 0, 1])


def medial_braiding(B: PolyadicBialgebra, M) -> MultiLinearMap:
    """``c = tau_medial o rho(M, .., M | v)`` on ``n'^2`` module slots."""
    return _medial_c(B, M, B.n_prime)


def _medial_c(B, M, k) -> MultiLinearMap:
    body = _body(M)
    N = k * k
    if body.factors != N:
        raise ShapeError(f"M must have {N} factors")
    dims = (B.dim,) * N
    perm = medial_twist(k)
    copies = [body] * (B.n - 1)

    def column(word):
        return B.alg.mul_tensors(*copies, TensorSum.basis(dims, word)).permute(perm)

    return MultiLinearMap.from_function(dims, dims, column)


def check_medial_braid(B: PolyadicBialgebra, M) -> RelationReport:
    """Extended-matrix forms of the two binary medial braid relations, the
    module-level relations they come from, and the generic bracket pattern."""
    k = B.n_prime
    verdicts = []
    if k == 2:
        try:
            e = unit_element(B.alg)
            for nm, (lhs, rhs) in (("medial braid (long)", MEDIAL_BRAID_LONG),
                                   ("medial braid (short)", MEDIAL_BRAID_SHORT)):
                try:
                    verdicts.append(_tensor_verdict(nm, extended_product(B, M, lhs, 7, e),
                                                    extended_product(B, M, rhs, 7, e)))
                except Inadmissible as exc:
                    verdicts.append(_inadmissible(nm, exc))
        except MissingUnit as exc:
            verdicts += [_inadmissible("medial braid (long)", exc), _inadmissible("medial braid (short)", exc)]
    c = _medial_c(B, M, k)
    N = k * k
    total = 2 * N - 1
    patterns = []
    if k == 2:
        patterns += [("module braid (long)", BRACKETS_LONG), ("module braid (short)", BRACKETS_SHORT)]
    patterns.append(("module braid (generic)", braid_positions(N)))
    for nm, (lp, rp) in patterns:
        verdicts.append(_compare_on_basis(
            nm, total, B.dim,
            lambda x, lp=lp: apply_brackets(x, [(c, p) for p in lp], B.dim),
            lambda x, rp=rp: apply_brackets(x, [(c, p) for p in rp], B.dim),
        ))
    return RelationReport(verdicts)


# ---------------------------------------------------------------------------
# exhaustive search


SEARCH_TARGETS = ("ybe", "quasitriangular", "comedial", "medial_braid")


def _target_check(B: PolyadicBialgebra, target: str) -> tuple[int, Callable[[TensorSum], bool]]:
    k = B.n_prime
    if target == "ybe":
        return k, lambda T: check_yang_baxter(B, T).passed
    if target == "quasitriangular":
        def ok(T):
            return (check_almost_cocommutativity(B, T).passed and check_yang_baxter(B, T).passed
                    and all(v.passed for v in check_quasitriangular(B, T)))
        return k, ok
    if target == "comedial":
        return k * k, lambda T: check_almost_comediality(B, T).passed
    if target == "medial_braid":
        def ok(T):
            e = unit_element(B.alg)
            return all(_tensor_verdict("", extended_product(B, T, lhs, 7, e),
                                       extended_product(B, T, rhs, 7, e)).passed
                       for lhs, rhs in (MEDIAL_BRAID_LONG, MEDIAL_BRAID_SHORT))
        if k != 2:
            raise Inadmissible("medial braid search is implemented for binary comultiplication")
        return k * k, ok
    raise ValueError(f"unknown search target {target!r}; choose from {', '.join(SEARCH_TARGETS)}")


def search_solutions(B: PolyadicBialgebra, target: str, grid: Sequence, words: Sequence | None = None) -> list[TensorSum]:
    """Every tensor with coefficients from ``grid`` on ``words`` (default: all
    basis words) that passes the target, in lexicographic grid order."""
    factors, ok = _target_check(B, target)
    grid = [Scalar.coerce(g) for g in grid]
    if not grid:
        return []
    dims = (B.dim,) * factors
    words = [tuple(w) for w in words] if words is not None else list(all_words(dims))
    check_budget(len(grid) ** len(words), f"{target} search")

    def probe(coeffs):
        T = TensorSum(dims, list(zip(words, coeffs)))
        return T if ok(T) else None

    found = parallel_map(probe, list(itertools.product(grid, repeat=len(words))))
    return [T for T in found if T is not None]
