"""Polyadic coassociative coalgebras.

The comultiplication of an n'-ary coalgebra is a MultiLinearMap from one
factor to ``n'`` factors.  A counit maps ``n'-1`` factors to the scalars.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .algebra import PolyadicAlgebra
from .arity import Inadmissible, iterations_for_length
from .scalars import ONE, Scalar
from .tensorkit import (
    MultiLinearMap,
    ShapeError,
    SlotPermutation,
    TensorSum,
    insert_at,
    linear_solve_system,
    medial_permutation,
    permutation_to_map,
    tensor_maps,
    word_to_flat,
)
from .verdict import INADMISSIBLE, Verdict


class PolyadicCoalgebra:
    def __init__(self, comult: MultiLinearMap, counit: MultiLinearMap | None = None,
                 labels: Sequence[str] | None = None, name: str = ""):
        if comult.in_factors != 1 or comult.out_factors < 2 or comult.dim is None:
            raise ShapeError("comultiplication must map one factor to n' >= 2 factors")
        self.comult = comult
        self.dim = comult.dim
        self.arity = comult.out_factors
        if counit is not None and (counit.out_factors != 0 or counit.in_dims != (self.dim,) * (self.arity - 1)):
            raise ShapeError("counit must map n'-1 factors to the scalars")
        self.counit = counit
        self.labels = list(labels) if labels else [f"c{k + 1}" for k in range(self.dim)]
        self.name = name

    def __repr__(self):
        return f"PolyadicCoalgebra({self.name or 'unnamed'}, n'={self.arity}, dim={self.dim})"

    def delta(self, k: int) -> TensorSum:
        """Sweedler expansion of basis element ``k``."""
        return self.comult.column((k,))


def coalgebra_from_images(images: dict, dim: int, arity: int, counit: dict | None = None,
                          **kwargs) -> PolyadicCoalgebra:
    """``images[k]`` is a TensorSum or ``{word: coeff}`` for the image of basis k.

    ``counit`` maps ``(n'-1)``-words to scalars; unlisted words give zero.
    """
    out_dims = (dim,) * arity
    entries = {}
    for k, img in images.items():
        terms = img.terms if isinstance(img, TensorSum) else img
        for w, c in terms.items():
            entries[(word_to_flat(w, out_dims), k)] = Scalar.coerce(c)
    eps = None
    if counit is not None:
        eps = MultiLinearMap.counit_like((dim,) * (arity - 1), counit)
    return PolyadicCoalgebra(MultiLinearMap((dim,), out_dims, entries), eps, **kwargs)


def group_coalgebra(order: int, name: str = "") -> PolyadicCoalgebra:
    """``Delta(g) = g (x) g``, ``eps(g) = 1`` on ``order`` basis elements."""
    return coalgebra_from_images(
        {g: {(g, g): ONE} for g in range(order)}, order, 2, {(g,): ONE for g in range(order)},
        labels=[f"g{k}" for k in range(order)], name=name or f"Z{order}",
    )


def matrix_coalgebra(size: int) -> PolyadicCoalgebra:
    """``Delta(e_ij) = sum_k e_ik (x) e_kj``, ``eps(e_ij) = delta_ij``."""
    idx = lambda i, j: i * size + j  # noqa: E731
    images = {idx(i, j): {(idx(i, k), idx(k, j)): ONE for k in range(size)} for i in range(size) for j in range(size)}
    return coalgebra_from_images(images, size * size, 2, {(idx(i, i),): ONE for i in range(size)},
                                 labels=[f"e{i + 1}{j + 1}" for i in range(size) for j in range(size)],
                                 name=f"Mc{size}")


def d3_coalgebra() -> PolyadicCoalgebra:
    """Ternary ``Delta(a) = a (x) b (x) a``, ``Delta(b) = b (x) a (x) b``."""
    return coalgebra_from_images({0: {(0, 1, 0): ONE}, 1: {(1, 0, 1): ONE}}, 2, 3, labels=["a", "b"], name="d3")


# ---------------------------------------------------------------------------
# coassociativity and coiteration


def nested_comult(C: PolyadicCoalgebra, left: int) -> MultiLinearMap:
    """``(id^left (x) Delta (x) id^(n'-1-left)) o Delta``."""
    outer = insert_at(C.comult, left, C.arity, C.dim)
    return outer.compose(C.comult)


def check_coassociativity(C: PolyadicCoalgebra) -> Verdict:
    ref = nested_comult(C, 0)
    for p in range(1, C.arity):
        other = nested_comult(C, p)
        if other != ref:
            in_w, out_w = ref.difference_witness(other)
            return Verdict.fail("coassociativity", {"element": in_w[0], "placements": [0, p], "word": list(out_w)})
    return Verdict.ok("coassociativity")


def coiterate(C: PolyadicCoalgebra, ell_prime: int) -> MultiLinearMap:
    """``ell'``-fold comultiplication, each new Delta applied to the last factor."""
    if ell_prime < 0:
        raise ValueError("ell' must be >= 0")
    if ell_prime == 0:
        return MultiLinearMap.identity((C.dim,))
    out = C.comult
    for _ in range(ell_prime - 1):
        k = out.out_factors
        out = insert_at(C.comult, k - 1, k, C.dim).compose(out)
    return out


def coiterate_all_nestings(C: PolyadicCoalgebra, ell_prime: int) -> list[MultiLinearMap]:
    """Every nesting of ``ell'`` comultiplications (for nesting-independence checks)."""
    level = [C.comult] if ell_prime >= 1 else [MultiLinearMap.identity((C.dim,))]
    for _ in range(ell_prime - 1):
        nxt = []
        for m in level:
            k = m.out_factors
            for p in range(k):
                cand = insert_at(C.comult, p, k, C.dim).compose(m)
                if cand not in nxt:
                    nxt.append(cand)
        level = nxt
    return level


def is_derived_comultiplication(C: PolyadicCoalgebra, base: PolyadicCoalgebra, ell_d: int) -> Verdict:
    if C.dim != base.dim:
        return Verdict("derived", INADMISSIBLE, None, {"reason": "dimensions differ"})
    if C.arity != ell_d * (base.arity - 1) + 1:
        return Verdict("derived", INADMISSIBLE, None,
                       {"reason": f"n'={C.arity} is not {ell_d}({base.arity}-1)+1"})
    it = coiterate(base, ell_d)
    if it == C.comult:
        return Verdict.ok("derived", ell_d=ell_d)
    in_w, out_w = it.difference_witness(C.comult)
    return Verdict.fail("derived", {"element": in_w[0], "word": list(out_w)})


def find_binary_base(C: PolyadicCoalgebra) -> list[PolyadicCoalgebra]:
    """Search for a binary comultiplication whose coiteration gives ``C``.

    Only coassociative bases whose images are single 0/1 terms are scanned;
    this is the witness search behind the "nonderived" verdict for small cases.
    """
    ell = iterations_for_length(2, C.arity)
    N = C.dim
    words = list(itertools.product(range(N), repeat=2))
    found = []
    for choice in itertools.product(words, repeat=N):
        base = coalgebra_from_images({k: {choice[k]: ONE} for k in range(N)}, N, 2)
        if check_coassociativity(base).passed and coiterate(base, ell) == C.comult:
            found.append(base)
    return found


# ---------------------------------------------------------------------------
# counits


def _counit_at(eps: MultiLinearMap, pos: int, arity: int, dim: int) -> MultiLinearMap:
    """``C^(x)n' -> C``: apply eps to every slot except ``pos``."""
    img = [j if j < pos else j - 1 for j in range(arity)]
    img[pos] = arity - 1
    move = permutation_to_map(SlotPermutation(img), dim)
    return eps.tensor(MultiLinearMap.identity((dim,))).compose(move)


def as_counit(C: PolyadicCoalgebra, eps) -> MultiLinearMap:
    if isinstance(eps, MultiLinearMap) and eps.in_factors == C.arity - 1:
        return eps
    parts = list(eps)
    return tensor_maps(parts)


def check_counit(C: PolyadicCoalgebra, eps) -> Verdict:
    """``(eps (x) id) o Delta = id`` with ``id`` in every slot."""
    eps = as_counit(C, eps)
    ident = MultiLinearMap.identity((C.dim,))
    failed = [p for p in range(C.arity) if _counit_at(eps, p, C.arity, C.dim).compose(C.comult) != ident]
    return Verdict.check("counit", not failed, {"failed_positions": failed}, positions=C.arity)


@dataclass
class CounitSearch:
    found: bool
    counit: MultiLinearMap | None
    nullity: int


def find_counit(C: PolyadicCoalgebra) -> CounitSearch:
    ident = MultiLinearMap.identity((C.dim,))
    eqs = [(lambda X, p=p: _counit_at(X, p, C.arity, C.dim).compose(C.comult), ident) for p in range(C.arity)]
    rep = linear_solve_system((C.dim,) * (C.arity - 1), (), eqs)
    return CounitSearch(rep.consistent, rep.solution, rep.nullity)


# ---------------------------------------------------------------------------
# co-commutativity and co-mediality


def check_total_cocommutativity(C: PolyadicCoalgebra) -> Verdict:
    for img in itertools.permutations(range(C.arity)):
        perm = SlotPermutation(img)
        if perm.is_identity():
            continue
        if permutation_to_map(perm, C.dim).compose(C.comult) != C.comult:
            return Verdict.fail("totally co-commutative", {"permutation": list(img)})
    return Verdict.ok("totally co-commutative")


def check_medial_cocommutativity(C: PolyadicCoalgebra, twist: SlotPermutation | None = None) -> Verdict:
    from .algebra import resolve_twist

    try:
        tau = resolve_twist(C.arity, twist)
    except Inadmissible as exc:
        return Verdict("medially co-commutative", INADMISSIBLE, None, {"reason": str(exc)})
    ok = permutation_to_map(tau, C.dim).compose(C.comult) == C.comult
    return Verdict.check("medially co-commutative", ok, {"twist": list(tau.image)}, twist=list(tau.image))


def co_commutativity_class(C: PolyadicCoalgebra, twist: SlotPermutation | None = None) -> dict:
    total = check_total_cocommutativity(C)
    medial = check_medial_cocommutativity(C, twist)
    if total.passed:
        cls = "totally"
    elif medial.passed:
        cls = "medially"
    else:
        cls = "neither"
    return {"class": cls, "totally": total, "medially": medial}


def check_comediality(C: PolyadicCoalgebra) -> Verdict:
    n = C.arity
    lhs = tensor_maps([C.comult] * n).compose(C.comult)
    rhs = permutation_to_map(medial_permutation(n, n), C.dim).compose(lhs)
    if lhs == rhs:
        return Verdict.ok("co-mediality")
    in_w, out_w = lhs.difference_witness(rhs)
    return Verdict.fail("co-mediality", {"element": in_w[0], "word": list(out_w)})


# ---------------------------------------------------------------------------
# group-like and primitive elements


def find_grouplike(C: PolyadicCoalgebra) -> list[int]:
    """Basis elements with ``Delta(g) = g^(x)n'`` (and ``eps(g,...,g) = 1`` when a counit exists)."""
    out = []
    for g in range(C.dim):
        if C.delta(g) != TensorSum.basis((C.dim,) * C.arity, (g,) * C.arity):
            continue
        if C.counit is not None and C.counit.coeff((), (g,) * (C.arity - 1)) != ONE:
            continue
        out.append(g)
    return out


def skew_primitive_image(dim: int, n_prime: int, kp: int, x: int, gs: Sequence[int]) -> TensorSum:
    """The n'-summand ansatz for a skew primitive element.

    ``kp = n'-1`` is the linear form: summand j has x in slot ``n'-1-j``.
    ``kp = 1`` is the nonlinear form: summand j has a group-like in slot j
    and x elsewhere.  ``gs`` lists the group-likes in reading order.
    """
    if kp not in (1, n_prime - 1):
        raise ValueError("only kp = 1 and kp = n'-1 are implemented")
    terms = []
    it = iter(gs)
    for j in range(n_prime):
        if kp == n_prime - 1:
            xpos = {n_prime - 1 - j}
        else:
            xpos = set(range(n_prime)) - {j}
        word = tuple(x if s in xpos else next(it) for s in range(n_prime))
        terms.append((word, ONE))
    return TensorSum((dim,) * n_prime, terms)


def primitive_image(dim: int, n_prime: int, x: int, g1: int, g2: int) -> TensorSum:
    """``sum_j g1^(n'-1-j) (x) x (x) g2^j``."""
    gs = []
    for j in range(n_prime):
        gs += [g1] * (n_prime - 1 - j) + [g2] * j
    return skew_primitive_image(dim, n_prime, n_prime - 1, x, gs)


@dataclass
class GrouplikeReport:
    grouplike: list
    primitives: list  # (x, g1, g2)
    note: str = ""


def find_grouplike_and_primitive(C: PolyadicCoalgebra, kp: int | None = None) -> GrouplikeReport:
    kp = C.arity - 1 if kp is None else kp
    gl = find_grouplike(C)
    if kp < C.arity - 1:
        return GrouplikeReport(gl, [], "nonlinear primitives (kp < n'-1) admit no coassociative solution")
    prims = []
    for x in range(C.dim):
        if x in gl:
            continue
        for g1 in gl:
            for g2 in gl:
                if C.delta(x) == primitive_image(C.dim, C.arity, x, g1, g2):
                    prims.append((x, g1, g2))
    return GrouplikeReport(gl, prims)


def validate_summand_counts(C: PolyadicCoalgebra, m: int) -> Verdict:
    """Each Sweedler expansion must have ``l(m-1)+1`` summands."""
    bad = {}
    for k in range(C.dim):
        N = len(C.delta(k).terms)
        if N and (N - 1) % (m - 1):
            bad[k] = N
    return Verdict.check("summand counts", not bad, {"elements": bad})


# ---------------------------------------------------------------------------
# duality, homomorphisms, tensor products


def dual_algebra(C: PolyadicCoalgebra, ell_prime: int = 1, ell_k: int | None = None) -> PolyadicAlgebra:
    """Dual-basis algebra with ``mu*[f_1..f_n*](c) = sum prod f_i(c_[i])``."""
    n_star = ell_prime * (C.arity - 1) + 1
    if ell_k is not None and ell_k + 1 != n_star:
        raise Inadmissible(f"field iterations l_k={ell_k} give n*={ell_k + 1}, coiteration gives {n_star}")
    D = coiterate(C, ell_prime)
    entries = {(i, o): c for (o, i), c in D.entries.items()}
    mult = MultiLinearMap(D.out_dims, D.in_dims, entries)
    return PolyadicAlgebra(mult, None, [f"{l}*" for l in C.labels], None, f"{C.name or 'C'}*")


def check_coalgebra_homomorphism(psi: MultiLinearMap, C1: PolyadicCoalgebra, C2: PolyadicCoalgebra) -> Verdict:
    if C1.arity != C2.arity:
        return Verdict("coalgebra homomorphism", INADMISSIBLE, None, {"reason": "arities differ"})
    lhs = tensor_maps([psi] * C1.arity).compose(C1.comult)
    rhs = C2.comult.compose(psi)
    if lhs != rhs:
        in_w, out_w = lhs.difference_witness(rhs)
        return Verdict.fail("coalgebra homomorphism", {"element": in_w[0], "word": list(out_w)})
    if C1.counit is not None and C2.counit is not None:
        if C2.counit.compose(tensor_maps([psi] * (C1.arity - 1))) != C1.counit:
            return Verdict.fail("coalgebra homomorphism", {"reason": "counits not preserved"})
    return Verdict.ok("coalgebra homomorphism")


def tensor_product_coalgebras(Cs: Sequence[PolyadicCoalgebra]) -> PolyadicCoalgebra:
    """``tau_medial^(n',n') o (Delta_1 (x) ... (x) Delta_n')``.

    The counit multiplies the factor counits; for scalars this product is
    defined for any number of factors.
    """
    n = Cs[0].arity
    if len(Cs) != n or any(c.arity != n for c in Cs):
        raise ShapeError(f"need exactly {n} coalgebras of arity {n}")
    dims = tuple(c.dim for c in Cs)
    D = prod(dims)
    stacked = tensor_maps([c.comult for c in Cs])
    out_slot_dims = tuple(d for d in dims for _ in range(n))
    comult = permutation_to_map(medial_permutation(n, n), out_slot_dims).compose(stacked)
    comult = comult.reshape((D,), (D,) * n)
    counit = None
    if all(c.counit is not None for c in Cs):
        in_slot_dims = dims * (n - 1)
        regroup = permutation_to_map(medial_permutation(n, n - 1), in_slot_dims)
        counit = tensor_maps([c.counit for c in Cs]).compose(regroup).reshape((D,) * (n - 1), ())
    labels = ["".join(p) for p in itertools.product(*[c.labels for c in Cs])]
    return PolyadicCoalgebra(comult, counit, labels, "(x)".join(c.name or "C" for c in Cs))
