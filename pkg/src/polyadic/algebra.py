"""Polyadic associative algebras given by structure constants.

The multiplication of an n-ary algebra of dimension N is a MultiLinearMap
from ``A^(x)n`` to ``A``.  A unit is stored as a tensor in ``A^(x)(n-1)``
(a map from zero factors), already evaluated at the field unit.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .arity import Inadmissible, is_admissible_dimension, structure_constant_count, word_length
from .scalars import ONE, ZERO, Scalar
from .tensorkit import (
    MultiLinearMap,
    ShapeError,
    SlotPermutation,
    TensorSum,
    all_words,
    default_twist,
    insert_at,
    linear_solve_system,
    medial_permutation,
    permutation_to_map,
    solve_vector,
    tensor_all,
    tensor_maps,
    word_to_flat,
)
from .verdict import INADMISSIBLE, Verdict


class PolyadicAlgebra:
    def __init__(self, mult: MultiLinearMap, unit: MultiLinearMap | None = None,
                 labels: Sequence[str] | None = None, addition_arity: int | None = None, name: str = ""):
        if mult.out_factors != 1 or mult.in_factors < 2:
            raise ShapeError("multiplication must map n >= 2 factors to one")
        if mult.dim is None:
            raise ShapeError("multiplication must be homogeneous")
        self.mult = mult
        self.dim = mult.dim
        self.arity = mult.in_factors
        if unit is not None and (unit.in_factors != 0 or unit.out_dims != (self.dim,) * (self.arity - 1)):
            raise ShapeError("unit must be a tensor with n-1 factors")
        self.unit = unit
        self.labels = list(labels) if labels else [f"e{k + 1}" for k in range(self.dim)]
        self.addition_arity = addition_arity
        self.name = name
        self._columns = None

    def __repr__(self):
        return f"PolyadicAlgebra({self.name or 'unnamed'}, n={self.arity}, dim={self.dim})"

    # evaluation helpers
    def vector(self, coeffs: Sequence) -> TensorSum:
        return TensorSum((self.dim,), [((k,), c) for k, c in enumerate(coeffs)])

    def basis(self, k: int) -> TensorSum:
        return TensorSum.basis((self.dim,), (k,))

    def mul(self, *xs: TensorSum) -> TensorSum:
        """Product of n one-factor elements."""
        return self.mult.apply(tensor_all(xs))

    def basis_product(self, word) -> dict:
        """``{k: coeff}`` of the product of basis elements ``word``."""
        if self._columns is None:
            cols: dict = {}
            for (o, i), c in self.mult.entries.items():
                cols.setdefault(i, {})[o] = c
            self._columns = cols
        return self._columns.get(word_to_flat(word, (self.dim,) * self.arity), {})

    def mul_tensors(self, *Ts: TensorSum) -> TensorSum:
        """Componentwise product of n tensors in ``A^(x)k``."""
        if len(Ts) != self.arity:
            raise ShapeError(f"need {self.arity} tensors")
        k = Ts[0].factors
        dims = (self.dim,) * k
        acc: dict = {}
        for combo in _product_terms(Ts):
            coeff = ONE
            for _, c in combo:
                coeff = coeff * c
            partial = [((), coeff)]
            for j in range(k):
                col = self.basis_product(tuple(w[j] for w, _ in combo))
                if not col:
                    partial = []
                    break
                partial = [(pw + (o,), pc * c) for pw, pc in partial for o, c in col.items()]
            for w, c in partial:
                acc[w] = acc.get(w, ZERO) + c
        return TensorSum(dims, acc)

    def unit_tensor(self) -> TensorSum | None:
        if self.unit is None:
            return None
        return TensorSum(self.unit.out_dims, [(o, c) for o, _, c in self.unit.triples()])


def _product_terms(Ts):
    import itertools

    return itertools.product(*[list(T.terms.items()) for T in Ts])


def algebra_from_constants(constants, n: int, dim: int, **kwargs) -> PolyadicAlgebra:
    """Build from ``{input_word: [c_1, ..., c_N]}`` covering every basis word."""
    entries = {}
    count = 0
    for w in all_words((dim,) * n):
        if w not in constants:
            raise ValueError(f"structure constants missing for word {list(w)}")
        vec = constants[w]
        if len(vec) != dim:
            raise ValueError(f"word {list(w)} needs {dim} constants")
        count += len(vec)
        fi = word_to_flat(w, (dim,) * n)
        for k, c in enumerate(vec):
            entries[(k, fi)] = Scalar.coerce(c)
    assert count == structure_constant_count(1, dim, n)
    return PolyadicAlgebra(MultiLinearMap((dim,) * n, (dim,), entries), **kwargs)


def algebra_from_basis_products(products: dict, n: int, dim: int, **kwargs) -> PolyadicAlgebra:
    """Build from ``{input_word: {k: coeff}}``; unlisted words map to zero."""
    entries = {}
    for w, out in products.items():
        fi = word_to_flat(w, (dim,) * n)
        for k, c in out.items():
            entries[(k, fi)] = Scalar.coerce(c)
    return PolyadicAlgebra(MultiLinearMap((dim,) * n, (dim,), entries), **kwargs)


def group_algebra(table: Sequence[Sequence[int]], identity: int = 0, name: str = "") -> PolyadicAlgebra:
    """Binary group algebra from a Cayley table ``table[a][b] = ab``."""
    N = len(table)
    prods = {(a, b): {table[a][b]: ONE} for a in range(N) for b in range(N)}
    alg = algebra_from_basis_products(prods, 2, N, name=name, labels=[f"g{k}" for k in range(N)])
    alg.unit = TensorSum.basis((N,), (identity,)).as_map()
    return alg


def cyclic_group_algebra(order: int) -> PolyadicAlgebra:
    return group_algebra([[(a + b) % order for b in range(order)] for a in range(order)], 0, f"Z{order}")


def matrix_algebra(size: int) -> PolyadicAlgebra:
    """Binary algebra of ``size x size`` matrices in the matrix-unit basis."""
    N = size * size
    prods = {}
    for i in range(size):
        for j in range(size):
            for k in range(size):
                for l in range(size):
                    prods[(i * size + j, k * size + l)] = {i * size + l: ONE} if j == k else {}
    alg = algebra_from_basis_products(prods, 2, N, name=f"M{size}",
                                      labels=[f"e{i + 1}{j + 1}" for i in range(size) for j in range(size)])
    alg.unit = TensorSum((N,), [((i * size + i,), ONE) for i in range(size)]).as_map()
    return alg


# ---------------------------------------------------------------------------
# associativity


def nested_mult(alg: PolyadicAlgebra, left: int) -> MultiLinearMap:
    """``mu o (id^left (x) mu (x) id^(n-1-left))`` on ``2n-1`` factors."""
    n = alg.arity
    inner = insert_at(alg.mult, left, 2 * n - 1, alg.dim)
    return alg.mult.compose(inner)


def iterated_mult(alg: PolyadicAlgebra, ell: int) -> MultiLinearMap:
    """``mu^(o ell)`` on ``ell(n-1)+1`` factors, nested to the left."""
    n, N = alg.arity, alg.dim
    if ell == 0:
        return MultiLinearMap.identity((N,))
    out = alg.mult
    for _ in range(ell - 1):
        out = alg.mult.compose(tensor_maps([out, MultiLinearMap.identity((N,) * (n - 1))]))
    return out


def check_total_associativity_linear(alg: PolyadicAlgebra) -> Verdict:
    n = alg.arity
    ref = nested_mult(alg, 0)
    for p in range(1, n):
        other = nested_mult(alg, p)
        if other != ref:
            in_w, out_w = ref.difference_witness(other)
            return Verdict.fail("associativity", {"word": list(in_w), "placements": [0, p], "component": list(out_w)})
    return Verdict.ok("associativity")


def check_dimension(alg: PolyadicAlgebra) -> Verdict:
    if alg.addition_arity is None:
        return Verdict.ok("dimension", note="no addition arity declared")
    ok = is_admissible_dimension(alg.dim, alg.addition_arity)
    return Verdict.check("dimension", ok, {"dim": alg.dim, "addition_arity": alg.addition_arity})


def derived_multiplication(base: PolyadicAlgebra, ell_mu: int) -> PolyadicAlgebra:
    """Iterate a base multiplication ``ell_mu`` times; units become tensor powers."""
    if ell_mu < 1:
        raise ValueError("ell_mu must be >= 1")
    mult = iterated_mult(base, ell_mu)
    unit = None
    if base.unit is not None:
        unit = tensor_maps([base.unit] * ell_mu)
    return PolyadicAlgebra(mult, unit, base.labels, base.addition_arity,
                           f"{base.name or 'A'}^der({word_length(base.arity, ell_mu)})")


# ---------------------------------------------------------------------------
# units


def _insertion_map(eta: MultiLinearMap, pos: int, dim: int) -> MultiLinearMap:
    """``A -> A^(x)n``: x lands in slot ``pos``, the unit tensor fills the others."""
    k = eta.out_factors
    base = eta.tensor(MultiLinearMap.identity((dim,)))  # slots: eta_0..eta_{k-1}, x
    # move the last slot to pos, shift the rest
    img = [j if j < pos else j + 1 for j in range(k)] + [pos]
    return permutation_to_map(SlotPermutation(img), dim).compose(base)


def as_unit_tensor(alg: PolyadicAlgebra, eta) -> MultiLinearMap:
    """Accept a single tensor map, a TensorSum, or a neutral sequence of vectors."""
    if isinstance(eta, MultiLinearMap):
        return eta
    if isinstance(eta, TensorSum):
        return eta.as_map()
    parts = [e if isinstance(e, TensorSum) else alg.vector(e) for e in eta]
    return tensor_all(parts).as_map()


def check_unit(alg: PolyadicAlgebra, eta) -> Verdict:
    """``mu[eta with x inserted at any place] = x`` for every place."""
    eta = as_unit_tensor(alg, eta)
    n, N = alg.arity, alg.dim
    if eta.out_dims != (N,) * (n - 1):
        return Verdict.fail("unit", {"reason": "unit must have n-1 factors"})
    ident = MultiLinearMap.identity((N,))
    failed = []
    for p in range(n):
        if alg.mult.compose(_insertion_map(eta, p, N)) != ident:
            failed.append(p)
    return Verdict.check("unit", not failed, {"failed_positions": failed}, positions=n)


@dataclass
class UnitSearch:
    found: bool
    unit: MultiLinearMap | None
    nullity: int


def find_unit(alg: PolyadicAlgebra) -> UnitSearch:
    """Solve for a tensor ``T`` in ``A^(x)(n-1)`` acting as a unit at every place."""
    n, N = alg.arity, alg.dim
    ident = MultiLinearMap.identity((N,))
    eqs = [(lambda X, p=p: alg.mult.compose(_insertion_map(X, p, N)), ident) for p in range(n)]
    rep = linear_solve_system((), (N,) * (n - 1), eqs)
    return UnitSearch(rep.consistent, rep.solution, rep.nullity)


# ---------------------------------------------------------------------------
# quermaps


@dataclass
class QuermapResult:
    consistent: bool
    value: TensorSum | None
    nullity: int
    verified_positions: list = field(default_factory=list)

    @property
    def unique(self) -> bool:
        return self.consistent and self.nullity == 0


def quermap(alg: PolyadicAlgebra, x: TensorSum) -> QuermapResult:
    """Multiplicative quermap: solve ``mu[x, ..., x, q] = x``, then check every place of q."""
    n = alg.arity
    sol, nullity, ok = solve_vector((alg.dim,), lambda q: alg.mul(*([x] * (n - 1) + [q])), x)
    if not ok:
        return QuermapResult(False, None, 0)
    verified = [p for p in range(n) if alg.mul(*([x] * p + [sol] + [x] * (n - 1 - p))) == x]
    if len(verified) != n:
        return QuermapResult(False, sol, nullity, verified)
    return QuermapResult(True, sol, nullity, verified)


def additive_quermap(x: TensorSum, m: int) -> TensorSum:
    """Querelement for m-ary vector addition: ``(m-1) x + q = x`` gives ``q = (2-m) x``."""
    return x.scale(2 - m)


# ---------------------------------------------------------------------------
# mediality, twists, opposite algebra


def check_mediality(alg: PolyadicAlgebra) -> Verdict:
    n, N = alg.arity, alg.dim
    lhs = alg.mult.compose(tensor_maps([alg.mult] * n))
    rhs = lhs.compose(permutation_to_map(medial_permutation(n, n), N))
    if lhs == rhs:
        return Verdict.ok("mediality")
    in_w, out_w = lhs.difference_witness(rhs)
    return Verdict.fail("mediality", {"word": list(in_w), "component": list(out_w)})


def resolve_twist(places: int, twist: SlotPermutation | None = None) -> SlotPermutation:
    if twist is not None:
        if twist.size != places:
            raise ShapeError(f"twist acts on {twist.size} slots, need {places}")
        return twist
    try:
        return default_twist(places)
    except ValueError as exc:
        raise Inadmissible(f"{exc}; no entry of the twist table equals {places}") from exc


def opposite_algebra(alg: PolyadicAlgebra, twist: SlotPermutation | None = None) -> PolyadicAlgebra:
    tau = resolve_twist(alg.arity, twist)
    mult = alg.mult.compose(permutation_to_map(tau, alg.dim))
    return PolyadicAlgebra(mult, alg.unit, alg.labels, alg.addition_arity, f"{alg.name or 'A'}^op")


def check_medially_commutative(alg: PolyadicAlgebra, twist: SlotPermutation | None = None) -> Verdict:
    try:
        tau = resolve_twist(alg.arity, twist)
    except Inadmissible as exc:
        return Verdict("medially commutative", INADMISSIBLE, None, {"reason": str(exc)})
    other = alg.mult.compose(permutation_to_map(tau, alg.dim))
    if other == alg.mult:
        return Verdict.ok("medially commutative", twist=list(tau.image))
    in_w, _ = alg.mult.difference_witness(other)
    return Verdict.fail("medially commutative", {"word": list(in_w)})


# ---------------------------------------------------------------------------
# tensor products and heteromorphisms


def tensor_product_algebras(algs: Sequence[PolyadicAlgebra]) -> PolyadicAlgebra:
    """``(mu_1 (x) ... (x) mu_n) o tau_medial^(n,n)`` on ``A_1 (x) ... (x) A_n``."""
    n = algs[0].arity
    if any(a.arity != n for a in algs) or len(algs) != n:
        raise ShapeError(f"need exactly {n} algebras of arity {n}")
    dims = tuple(a.dim for a in algs)
    grid_in = dims * n  # n elements, each with one slot per factor algebra
    perm = permutation_to_map(medial_permutation(n, n), grid_in)
    mult = tensor_maps([a.mult for a in algs]).compose(perm)
    from math import prod

    D = prod(dims)
    mult = mult.reshape((D,) * n, (D,))
    unit = None
    if all(a.unit is not None for a in algs):
        # units are n rows (one per factor) of n-1 slots; regroup into n-1 rows of n
        u = tensor_maps([a.unit for a in algs])
        slot_dims = tuple(d for d in dims for _ in range(n - 1))
        u = permutation_to_map(medial_permutation(n - 1, n), slot_dims).compose(u)
        unit = u.reshape((), (D,) * (n - 1))
    labels = ["".join(parts) for parts in _label_words(algs)]
    return PolyadicAlgebra(mult, unit, labels, None, "(x)".join(a.name or "A" for a in algs))


def _label_words(algs):
    import itertools

    return itertools.product(*[a.labels for a in algs])


@dataclass
class Heteromorphism:
    s: int
    map: MultiLinearMap
    ell_id: int


def check_heteromorphism(h: Heteromorphism, src: PolyadicAlgebra, dst: PolyadicAlgebra) -> Verdict:
    """``Phi o (mu_1^(x)(s-l_id) (x) id^l_id) = mu_2 o Phi^(x)n_2``."""
    from .arity import heteromorphism_arity

    s, l_id = h.s, h.ell_id
    if h.map.in_dims != (src.dim,) * s or h.map.out_dims != (dst.dim,):
        raise ShapeError(f"an {s}-place heteromorphism maps {s} copies of the source to one target factor")
    try:
        n2 = heteromorphism_arity(s, src.arity, l_id)
    except Inadmissible as exc:
        return Verdict("heteromorphism", INADMISSIBLE, None, {"reason": str(exc)})
    if n2 != dst.arity:
        return Verdict("heteromorphism", INADMISSIBLE, None,
                       {"reason": f"arity relation gives n2={n2}, target has {dst.arity}"})
    parts = [src.mult] * (s - l_id)
    if l_id:
        parts.append(MultiLinearMap.identity((src.dim,) * l_id))
    lhs = h.map.compose(tensor_maps(parts))
    rhs = dst.mult.compose(tensor_maps([h.map] * n2))
    if lhs == rhs:
        return Verdict.ok("heteromorphism", n2=n2)
    in_w, out_w = lhs.difference_witness(rhs)
    return Verdict.fail("heteromorphism", {"word": list(in_w), "component": list(out_w)})


def homomorphism(phi: MultiLinearMap) -> Heteromorphism:
    return Heteromorphism(1, phi, 0)


def linear_map_from_images(dim_in: int, dim_out: int, images: dict) -> MultiLinearMap:
    """One-factor map from ``{basis index: {target index: coeff}}``."""
    return MultiLinearMap((dim_in,), (dim_out,),
                          {(o, i): Scalar.coerce(c) for i, col in images.items() for o, c in col.items()})
