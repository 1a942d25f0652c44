"""Polyadic bialgebras, the von Neumann regular family and querantipodes."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .algebra import (
    PolyadicAlgebra,
    algebra_from_basis_products,
    check_medially_commutative,
    check_unit,
    cyclic_group_algebra,
    derived_multiplication,
    group_algebra,
    iterated_mult,
)
from .arity import Inadmissible
from .coalgebra import (
    PolyadicCoalgebra,
    check_counit,
    check_medial_cocommutativity,
    check_total_cocommutativity,
    coalgebra_from_images,
    coiterate,
)
from .convolution import ConvolutionContext, convolution_unit, convolve, coquerelement
from .scalars import ONE, ZERO
from .tensorkit import (
    MultiLinearMap,
    ShapeError,
    SlotPermutation,
    TensorSum,
    medial_permutation,
    permutation_to_map,
    polyadic_twist,
    tensor_all,
    tensor_maps,
    twist_grids,
)
from .verdict import INADMISSIBLE, Verdict


class NotABialgebra(ValueError):
    """Raised when a Hopf-level operation is requested on incompatible data."""


class PolyadicBialgebra:
    def __init__(self, alg: PolyadicAlgebra, coalg: PolyadicCoalgebra, name: str = ""):
        if alg.dim != coalg.dim:
            raise ShapeError("algebra and coalgebra must share the basis")
        self.alg = alg
        self.coalg = coalg
        self.dim = alg.dim
        self.name = name or alg.name
        self._compatible = None

    @property
    def n(self) -> int:
        return self.alg.arity

    @property
    def n_prime(self) -> int:
        return self.coalg.arity

    @property
    def labels(self):
        return self.alg.labels

    def __repr__(self):
        return f"PolyadicBialgebra({self.name or 'unnamed'}, n={self.n}, n'={self.n_prime}, dim={self.dim})"

    def require_compatible(self) -> None:
        if self._compatible is None:
            self._compatible = check_compatibility(self).passed
        if not self._compatible:
            raise NotABialgebra("multiplication and comultiplication are not compatible")


# ---------------------------------------------------------------------------
# canned bialgebras


def group_bialgebra(table: Sequence[Sequence[int]], identity: int = 0, name: str = "") -> PolyadicBialgebra:
    alg = group_algebra(table, identity, name)
    N = len(table)
    coalg = coalgebra_from_images({g: {(g, g): ONE} for g in range(N)}, N, 2,
                                  {(g,): ONE for g in range(N)}, labels=alg.labels, name=name)
    return PolyadicBialgebra(alg, coalg, name)


def cyclic_group_bialgebra(order: int) -> PolyadicBialgebra:
    alg = cyclic_group_algebra(order)
    table = [[(a + b) % order for b in range(order)] for a in range(order)]
    B = group_bialgebra(table, 0, f"Z{order}")
    B.alg.labels = alg.labels
    B.coalg.labels = alg.labels
    return B


def derived_bialgebra(base: PolyadicBialgebra, ell_mu: int, ell_delta: int) -> PolyadicBialgebra:
    """Iterate both operations of a binary bialgebra; units and counits become tensor powers."""
    alg = derived_multiplication(base.alg, ell_mu)
    comult = coiterate(base.coalg, ell_delta)
    counit = None
    if base.coalg.counit is not None:
        counit = tensor_maps([base.coalg.counit] * ell_delta)
    coalg = PolyadicCoalgebra(comult, counit, base.coalg.labels, f"{base.coalg.name}^der")
    return PolyadicBialgebra(alg, coalg, f"{base.name}^der({alg.arity},{coalg.arity})")


def von_neumann_regular_bialgebra(n: int) -> PolyadicBialgebra:
    """Basis ``b_1..b_(n-1)``; the cyclic word of length n starting at ``b_i``
    multiplies to ``b_i`` and is the coproduct of ``b_i``.

    Products of any other word are zero.
    """
    if n < 3:
        raise ValueError("the von Neumann regular bialgebra needs n >= 3")
    N = n - 1
    words = {i: tuple((i + k) % N for k in range(n)) for i in range(N)}
    alg = algebra_from_basis_products({w: {i: ONE} for i, w in words.items()}, n, N,
                                      labels=[f"b{i + 1}" for i in range(N)], name=f"vn{n}")
    coalg = coalgebra_from_images({i: {w: ONE} for i, w in words.items()}, N, n,
                                  labels=[f"b{i + 1}" for i in range(N)], name=f"vn{n}")
    return PolyadicBialgebra(alg, coalg, f"vn{n}")


# ---------------------------------------------------------------------------
# axioms


def check_compatibility(B: PolyadicBialgebra) -> Verdict:
    """``Delta(mu[b_1..b_n]) = mu[Delta(b_1), .., Delta(b_n)]`` on every basis word."""
    n, N = B.n, B.dim
    deltas = [B.coalg.delta(k) for k in range(N)]
    out_dims = (N,) * B.n_prime
    for word in itertools.product(range(N), repeat=n):
        prod_terms = B.alg.basis_product(word)
        lhs = TensorSum(out_dims)
        for k, c in prod_terms.items():
            lhs = lhs + deltas[k].scale(c)
        rhs = B.alg.mul_tensors(*[deltas[b] for b in word])
        if lhs != rhs:
            diff = sorted((lhs - rhs).terms)[0]
            return Verdict.fail("compatibility", {"word": list(word), "component": list(diff)})
    return Verdict.ok("compatibility", words=N ** n)


def compatibility_map_check(B: PolyadicBialgebra) -> Verdict:
    """The same axiom evaluated as a map identity with the medial regrouping."""
    n, n_p, N = B.n, B.n_prime, B.dim
    lhs = B.coalg.comult.compose(B.alg.mult)
    rhs = tensor_maps([B.alg.mult] * n_p).compose(
        permutation_to_map(medial_permutation(n_p, n), N)).compose(tensor_maps([B.coalg.comult] * n))
    return Verdict.check("compatibility (map form)", lhs == rhs)


def check_unit_axiom(B: PolyadicBialgebra) -> Verdict:
    """``(Delta^(x)(n-1)) o eta`` equals ``eta^(x)n'`` after regrouping."""
    eta = B.alg.unit
    if eta is None:
        return Verdict("unit axiom", INADMISSIBLE, None, {"reason": "algebra has no unit"})
    lhs = tensor_maps([B.coalg.comult] * (B.n - 1)).compose(eta)
    lhs = permutation_to_map(medial_permutation(B.n_prime, B.n - 1), B.dim).compose(lhs)
    rhs = tensor_maps([eta] * B.n_prime)
    return Verdict.check("unit axiom", lhs == rhs)


def check_counit_axiom(B: PolyadicBialgebra) -> Verdict:
    """``eps o mu^(x)(n'-1)`` equals ``eps^(x)n`` after regrouping the inputs."""
    eps = B.coalg.counit
    if eps is None:
        return Verdict("counit axiom", INADMISSIBLE, None, {"reason": "coalgebra has no counit"})
    lhs = eps.compose(tensor_maps([B.alg.mult] * (B.n_prime - 1)))
    regroup = permutation_to_map(medial_permutation(B.n, B.n_prime - 1), B.dim)
    rhs = tensor_maps([eps] * B.n).compose(regroup)
    return Verdict.check("counit axiom", lhs == rhs)


def check_unit_counit(B: PolyadicBialgebra) -> Verdict:
    eta, eps = B.alg.unit, B.coalg.counit
    if eta is None or eps is None:
        return Verdict("unit-counit", INADMISSIBLE, None, {"reason": "needs both unit and counit"})
    lifted = tensor_maps([eta] * (B.n_prime - 1))
    regroup = permutation_to_map(medial_permutation(B.n_prime - 1, B.n - 1), B.dim)
    value = tensor_maps([eps] * (B.n - 1)).compose(regroup).compose(lifted)
    scalar = value.coeff((), ())
    return Verdict.check("unit-counit", scalar == ONE, {"value": str(scalar)})


@dataclass
class BialgebraReport:
    verdicts: list
    kind: str

    @property
    def passed(self) -> bool:
        return all(v.status != "fail" for v in self.verdicts)


def bialgebra_kind(B: PolyadicBialgebra) -> str:
    unital = B.alg.unit is not None and check_unit(B.alg, B.alg.unit).passed
    counital = B.coalg.counit is not None and check_counit(B.coalg, B.coalg.counit).passed
    return f"{'unital' if unital else 'nonunital'}-{'counital' if counital else 'noncounital'}"


def check_bialgebra(B: PolyadicBialgebra) -> BialgebraReport:
    verdicts = [check_compatibility(B)]
    kind = bialgebra_kind(B)
    if B.alg.unit is not None:
        verdicts.append(check_unit_axiom(B))
    if B.coalg.counit is not None:
        verdicts.append(check_counit_axiom(B))
    if B.alg.unit is not None and B.coalg.counit is not None:
        verdicts.append(check_unit_counit(B))
    return BialgebraReport(verdicts, kind)


def check_total_commutativity(alg: PolyadicAlgebra) -> Verdict:
    for img in itertools.permutations(range(alg.arity)):
        perm = SlotPermutation(img)
        if perm.is_identity():
            continue
        if alg.mult.compose(permutation_to_map(perm, alg.dim)) != alg.mult:
            return Verdict.fail("totally commutative", {"permutation": list(img)})
    return Verdict.ok("totally commutative")


def cocommutativity_class_bialgebra(B: PolyadicBialgebra, twist_mult: SlotPermutation | None = None,
                                    twist_comult: SlotPermutation | None = None) -> dict:
    return {
        "totally commutative": check_total_commutativity(B.alg),
        "medially commutative": check_medially_commutative(B.alg, twist_mult),
        "totally co-commutative": check_total_cocommutativity(B.coalg),
        "medially co-commutative": check_medial_cocommutativity(B.coalg, twist_comult),
    }


# ---------------------------------------------------------------------------
# querantipodes


@dataclass
class Querantipode:
    kind: str  # "symmetric" or "singular"
    map: object  # MultiLinearMap for symmetric, {basis: TensorSum} for singular
    nullity: int = 0
    verified_positions: list = field(default_factory=list)


@dataclass
class QuerantipodeReport:
    consistent: bool
    querantipode: Querantipode | None
    n_star: int
    note: str = ""


def symmetric_context(B: PolyadicBialgebra, ell: int) -> ConvolutionContext:
    if B.n != B.n_prime:
        raise Inadmissible("symmetric querantipodes need n = n'")
    return ConvolutionContext(B.alg, B.coalg, ell, ell)


def polyadic_identity(B: PolyadicBialgebra) -> MultiLinearMap:
    return MultiLinearMap.identity((B.dim,) * (B.n - 1))


def solve_symmetric_querantipode(B: PolyadicBialgebra, ell: int = 1) -> QuerantipodeReport:
    """Coquerelement of the polyadic identity in the symmetric convolution algebra."""
    B.require_compatible()
    ctx = symmetric_context(B, ell)
    res = coquerelement(ctx, polyadic_identity(B))
    if not res.consistent:
        return QuerantipodeReport(False, None, ctx.n_star, "no querantipode: the defining system is inconsistent")
    q = Querantipode("symmetric", res.value, res.nullity, res.verified_positions)
    note = "" if res.nullity == 0 else f"solution space has dimension {res.nullity}; canonical solution returned"
    return QuerantipodeReport(True, q, ctx.n_star, note)


def diagonal(B: PolyadicBialgebra, k: int) -> TensorSum:
    """Pointwise polyadic identity ``b -> b (x) .. (x) b`` with n-1 factors."""
    return TensorSum.basis((B.dim,) * (B.n - 1), (k,) * (B.n - 1))


def verify_singular_querantipode(B: PolyadicBialgebra, Q0: dict | Callable[[int], TensorSum], ell: int = 1) -> Verdict:
    """Check the singular querantipode equation on every basis element and place.

    ``Q0`` maps a basis index to a tensor with n-1 factors.  The diagonal
    is not linear, so each Sweedler leg is treated as a basis element.  With
    a binary convolution product the querelement notion degenerates and the
    classical right side ``eta(eps(b))`` is used instead of the diagonal.
    """
    if B.n_prime != 2:
        return Verdict("singular querantipode", INADMISSIBLE, None, {"reason": "needs a binary comultiplication"})
    n, N = B.n, B.dim
    n_star = ell * (n - 1) + 1
    getq = Q0 if callable(Q0) else Q0.__getitem__
    spread = coiterate(B.coalg, n_star - 1)
    mu_l = iterated_mult(B.alg, ell)
    mu_cols = {}
    for (o, i), c in mu_l.entries.items():
        mu_cols.setdefault(i, []).append((o, c))
    regroup = medial_permutation(n - 1, n_star)
    classical = n_star == 2
    if classical:
        if B.alg.unit is None or B.coalg.counit is None:
            return Verdict("singular querantipode", INADMISSIBLE, None, {"reason": "binary case needs unit and counit"})
        unit_t = B.alg.unit_tensor()
    failed = []
    for b in range(N):
        if classical:
            eps_b = B.coalg.counit.coeff((), (b,))
            target = unit_t.scale(eps_b)
        else:
            target = diagonal(B, b)
        for p in range(n_star):
            total = TensorSum((N,) * (n - 1))
            for legs, c in spread.column((b,)).items():
                parts = [getq(x) if i == p else diagonal(B, x) for i, x in enumerate(legs)]
                stacked = tensor_all(parts).permute(regroup)
                total = total + _apply_blocks(stacked, mu_cols, n - 1, n_star, N).scale(c)
            if total != target:
                failed.append({"element": b, "position": p})
    return Verdict.check("singular querantipode", not failed, failed[:1], positions=n_star)


def _apply_blocks(T: TensorSum, mu_cols: dict, blocks: int, size: int, N: int) -> TensorSum:
    """Apply ``mu^l`` to each consecutive block of ``size`` factors."""
    from .tensorkit import word_to_flat

    acc: dict = {}
    dims = (N,) * size
    for word, c in T.items():
        partial = [((), c)]
        for j in range(blocks):
            col = mu_cols.get(word_to_flat(word[j * size:(j + 1) * size], dims))
            if not col:
                partial = []
                break
            partial = [(pw + (o,), pc * oc) for pw, pc in partial for o, oc in col]
        for w, pc in partial:
            acc[w] = acc.get(w, ZERO) + pc
    return TensorSum((N,) * blocks, acc)


# ---------------------------------------------------------------------------
# properties of the querantipode


def default_querantipode_twist(n: int, n_star: int) -> SlotPermutation:
    """Twist used in the antimultiplicativity identities.

    ``l_tau = (n-1) n_star`` places; the binary case is the flip, and the
    ternary case reproduces the displayed component identities.
    """
    places = (n - 1) * n_star
    if places == 2:
        return SlotPermutation([1, 0])
    if (n, n_star) == (3, 3):
        return polyadic_twist(4, 2)
    grids = twist_grids(places)
    if not grids:
        raise Inadmissible(f"no polyadic twist on {places} places")
    return polyadic_twist(*grids[0])


def check_antimultiplicativity(B: PolyadicBialgebra, Q: MultiLinearMap, ell: int = 1,
                               twist: SlotPermutation | None = None) -> Verdict:
    n, N = B.n, B.dim
    n_star = ell * (n - 1) + 1
    try:
        tau = twist or default_querantipode_twist(n, n_star)
    except Inadmissible as exc:
        return Verdict("antimultiplicativity", INADMISSIBLE, None, {"reason": str(exc)})
    mu_l = tensor_maps([iterated_mult(B.alg, ell)] * (n - 1))
    lhs = Q.compose(mu_l)
    rhs = (mu_l.compose(permutation_to_map(tau, N)).compose(tensor_maps([Q] * n_star))
           .compose(permutation_to_map(medial_permutation(n_star, n - 1), N)))
    return _map_verdict("antimultiplicativity", lhs, rhs, twist=list(tau.image))


def check_anticomultiplicativity(B: PolyadicBialgebra, Q: MultiLinearMap, ell: int = 1,
                                 twist: SlotPermutation | None = None) -> Verdict:
    n, N = B.n, B.dim
    n_star = ell * (n - 1) + 1
    try:
        tau = twist or default_querantipode_twist(n, n_star)
    except Inadmissible as exc:
        return Verdict("anticomultiplicativity", INADMISSIBLE, None, {"reason": str(exc)})
    delta_l = tensor_maps([coiterate(B.coalg, ell)] * (n - 1))
    lhs = delta_l.compose(Q)
    rhs = (permutation_to_map(tau, N).compose(tensor_maps([Q] * n_star))
           .compose(permutation_to_map(medial_permutation(n_star, n - 1), N)).compose(delta_l))
    return _map_verdict("anticomultiplicativity", lhs, rhs, twist=list(tau.image))


def _map_verdict(name, lhs, rhs, **details) -> Verdict:
    if lhs == rhs:
        return Verdict.ok(name, **details)
    in_w, out_w = lhs.difference_witness(rhs)
    return Verdict.fail(name, {"input": list(in_w), "output": list(out_w)}, **details)


def check_ternary_component_identities(B: PolyadicBialgebra, Q: MultiLinearMap) -> Verdict:
    """The two displayed component identities for n = 3, l = 1, evaluated literally.

    ``Q_1(mu[a1,a2,a3], mu[b1,b2,b3]) = mu[Q_2(a2,b2), Q_1(a1,b1), Q_1(a3,b3)]`` and
    ``Q_2(..) = mu[Q_2(a1,b1), Q_2(a3,b3), Q_1(a2,b2)]``, as tensors in ``B (x) B``.
    """
    if B.n != 3:
        return Verdict("ternary component identities", INADMISSIBLE, None, {"reason": "needs n = 3"})
    N = B.dim

    def qpair(x, y) -> TensorSum:
        return Q.apply(TensorSum.basis((N, N), (x, y)))

    for a in itertools.product(range(N), repeat=3):
        for b in itertools.product(range(N), repeat=3):
            left_in = B.alg.mul_tensors(*[TensorSum.basis((N, N), (a[k], b[k])) for k in range(3)])
            lhs = Q.apply(left_in)
            q = [qpair(a[k], b[k]) for k in range(3)]
            # component 1 uses Q_2(a2,b2), Q_1(a1,b1), Q_1(a3,b3); component 2 uses Q_2(a1,b1), Q_2(a3,b3), Q_1(a2,b2)
            stacked = tensor_all(q)  # slots: Q1(1) Q2(1) Q1(2) Q2(2) Q1(3) Q2(3)
            arranged = stacked.permute(SlotPermutation([1, 3, 5, 0, 2, 4]))
            rhs = _apply_blocks(arranged, _columns(B.alg.mult), 2, 3, N)
            if lhs != rhs:
                return Verdict.fail("ternary component identities", {"a": list(a), "b": list(b)})
    return Verdict.ok("ternary component identities")


def _columns(m: MultiLinearMap) -> dict:
    cols: dict = {}
    for (o, i), c in m.entries.items():
        cols.setdefault(i, []).append((o, c))
    return cols


def check_involution_analog(B: PolyadicBialgebra, Q: MultiLinearMap, ell: int = 1) -> dict:
    """``mu_star[Q, .., Q, Q o Q] = Q`` at every place and ``q_star(Q) = Q o Q``.

    For a binary product the right side of the first identity is the
    convolution unit, matching the classical ``S * S^2 = eta eps``.
    """
    ctx = symmetric_context(B, ell)
    QQ = Q.compose(Q)
    target = convolution_unit(ctx) if ctx.n_star == 2 else Q
    failed = []
    for p in range(ctx.n_star):
        args = [Q] * ctx.n_star
        args[p] = QQ
        if convolve(ctx, args) != target:
            failed.append(p)
    quer = coquerelement(ctx, Q)
    return {
        "twisted involution": Verdict.check("twisted involution", not failed, {"failed_positions": failed}),
        "quer of querantipode": Verdict.check("quer of querantipode", quer.consistent and quer.value == QQ,
                                              None if quer.consistent else {"reason": "Q not coquerable"},
                                              nullity=quer.nullity),
    }


def check_querantipode_properties(B: PolyadicBialgebra, Q: Querantipode, ell: int = 1,
                                  twist: SlotPermutation | None = None) -> dict:
    if Q.kind != "symmetric":
        raise ValueError("properties are defined for symmetric querantipodes")
    M = Q.map
    out = {
        "antimultiplicativity": check_antimultiplicativity(B, M, ell, twist),
        "anticomultiplicativity": check_anticomultiplicativity(B, M, ell, twist),
    }
    if B.n == 3 and ell == 1:
        out["ternary component identities"] = check_ternary_component_identities(B, M)
    if B.alg.unit is not None:
        out["preserves unit"] = Verdict.check("preserves unit", M.compose(B.alg.unit) == B.alg.unit)
    if B.coalg.counit is not None:
        out["preserves counit"] = Verdict.check("preserves counit", B.coalg.counit.compose(M) == B.coalg.counit)
    invariant = check_total_commutativity(B.alg).passed or check_total_cocommutativity(B.coalg).passed
    if invariant:
        out.update(check_involution_analog(B, M, ell))
    return out
