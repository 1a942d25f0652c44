"""The polyadic convolution algebra on maps ``C^(x)(n'-1) -> A^(x)(n-1)``.

The product of ``n_star`` maps is

    (mu^l)^(x)(n-1) o P_A o (f_1 (x) ... (x) f_nstar) o P_C o (Delta^l')^(x)(n'-1)

where ``P_C`` regroups the coiterated coproduct so that every ``f_i``
receives one Sweedler leg from each input factor, and ``P_A`` regroups the
outputs so that each ``mu^l`` receives the ``j``-th output of every map.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Sequence

from .algebra import PolyadicAlgebra, iterated_mult
from .arity import Inadmissible, convolution_arity, heine_number
from .coalgebra import PolyadicCoalgebra, coiterate
from .tensorkit import (
    MultiLinearMap,
    ShapeError,
    linear_solve_system,
    medial_permutation,
    permutation_to_map,
    tensor_maps,
)
from .scalars import ZERO
from .verdict import Verdict


class ConvolutionError(ValueError):
    pass


@dataclass
class ConvolutionContext:
    """Algebra ``A`` (arity n, ``ell`` iterations) and coalgebra ``C`` (arity n', ``ell_prime``).

    ``medial=False`` replaces both regrouping permutations by the identity;
    it exists only to demonstrate that the checks catch a wrong wiring.
    """

    A: PolyadicAlgebra
    C: PolyadicCoalgebra
    ell: int = 1
    ell_prime: int = 1
    medial: bool = True

    def __post_init__(self):
        self.n_star = convolution_arity(self.A.arity, self.ell, self.C.arity, self.ell_prime)

    @property
    def in_dims(self) -> tuple:
        return (self.C.dim,) * (self.C.arity - 1)

    @property
    def out_dims(self) -> tuple:
        return (self.A.dim,) * (self.A.arity - 1)

    @cached_property
    def left(self) -> MultiLinearMap:
        """``P_C o (Delta^l')^(x)(n'-1)``: ``C^(x)(n'-1) -> (C^(x)(n'-1))^(x)n_star``."""
        rows = self.C.arity - 1
        spread = tensor_maps([coiterate(self.C, self.ell_prime)] * rows)
        if not self.medial or rows == 1:
            return spread
        return permutation_to_map(medial_permutation(self.n_star, rows), self.C.dim).compose(spread)

    @cached_property
    def right(self) -> MultiLinearMap:
        """``(mu^l)^(x)(n-1) o P_A``."""
        cols = self.A.arity - 1
        gather = tensor_maps([iterated_mult(self.A, self.ell)] * cols)
        if not self.medial or cols == 1:
            return gather
        return gather.compose(permutation_to_map(medial_permutation(cols, self.n_star), self.A.dim))

    def zero(self) -> MultiLinearMap:
        return MultiLinearMap.zero(self.in_dims, self.out_dims)

    def check_shape(self, f: MultiLinearMap) -> None:
        if f.in_dims != self.in_dims or f.out_dims != self.out_dims:
            raise ShapeError(f"convolution map must be {self.in_dims} -> {self.out_dims}, got {f.in_dims} -> {f.out_dims}")


def convolve(ctx: ConvolutionContext, fs: Sequence[MultiLinearMap]) -> MultiLinearMap:
    if len(fs) != ctx.n_star:
        raise ShapeError(f"convolution takes {ctx.n_star} maps, got {len(fs)}")
    for f in fs:
        ctx.check_shape(f)
    # Equivalent to right o (f_1 (x) .. (x) f_nstar) o left, evaluated column by
    # column so the tensor product of the f_i is never materialised.
    chunk_in = prod(ctx.in_dims)
    chunk_out = prod(ctx.out_dims)
    f_cols = [f.columns() for f in fs]
    right_cols = ctx.right.columns()
    entries: dict = {}
    for i_flat, left_col in ctx.left.columns().items():
        staged: dict = {}
        for mid_flat, c in left_col:
            chunks = []
            rest = mid_flat
            for _ in range(ctx.n_star):
                rest, r = divmod(rest, chunk_in)
                chunks.append(r)
            chunks.reverse()
            acc = {0: c}
            for f_col, chunk in zip(f_cols, chunks):
                col = f_col.get(chunk)
                if not col:
                    acc = {}
                    break
                nxt: dict = {}
                for a, ca in acc.items():
                    base = a * chunk_out
                    for o, co in col:
                        key = base + o
                        nxt[key] = nxt.get(key, ZERO) + ca * co
                acc = nxt
            for a, ca in acc.items():
                staged[a] = staged.get(a, ZERO) + ca
        for a, ca in staged.items():
            if ca.is_zero():
                continue
            for o, co in right_cols.get(a, ()):
                key = (o, i_flat)
                entries[key] = entries.get(key, ZERO) + ca * co
    return MultiLinearMap(ctx.in_dims, ctx.out_dims, entries)


def iterated_convolve(ctx: ConvolutionContext, fs: Sequence[MultiLinearMap]) -> MultiLinearMap:
    """``(mu_star)^(o l)`` applied left-nested to ``l(n_star - 1) + 1`` maps."""
    k = ctx.n_star - 1
    if len(fs) < 1 or (len(fs) - 1) % k:
        raise Inadmissible(f"{len(fs)} maps is not l({ctx.n_star}-1)+1 for any l")
    acc = fs[0]
    for start in range(1, len(fs), k):
        acc = convolve(ctx, [acc, *fs[start:start + k]])
    return acc


def convolution_unit(ctx: ConvolutionContext) -> MultiLinearMap:
    """``e_star = eta o eps``."""
    if ctx.A.unit is None:
        raise ConvolutionError("algebra has no unit")
    if ctx.C.counit is None:
        raise ConvolutionError("coalgebra has no counit")
    eta = ctx.A.unit
    eps = ctx.C.counit
    if eta.out_dims != ctx.out_dims:
        raise ConvolutionError("unit shape does not match A^(x)(n-1)")
    return eta.compose(eps)


def check_convolution_unit(ctx: ConvolutionContext, e: MultiLinearMap, f: MultiLinearMap) -> Verdict:
    """``mu_star[e, .., f at p, .., e] = f`` for every position ``p``."""
    failed = []
    for p in range(ctx.n_star):
        args = [e] * ctx.n_star
        args[p] = f
        if convolve(ctx, args) != f:
            failed.append(p)
    return Verdict.check("convolution unit", not failed, {"failed_positions": failed}, positions=ctx.n_star)


def check_convolution_associativity(ctx: ConvolutionContext, fs: Sequence[MultiLinearMap]) -> Verdict:
    n = ctx.n_star
    if len(fs) != 2 * n - 1:
        raise ShapeError(f"need {2 * n - 1} maps")
    results = []
    for p in range(n):
        inner = convolve(ctx, fs[p:p + n])
        results.append(convolve(ctx, [*fs[:p], inner, *fs[p + n:]]))
    for p in range(1, n):
        if results[p] != results[0]:
            in_w, out_w = results[0].difference_witness(results[p])
            return Verdict.fail("convolution associativity", {"placements": [0, p], "input": list(in_w), "output": list(out_w)})
    return Verdict.ok("convolution associativity", placements=n)


@dataclass
class CoquerResult:
    consistent: bool
    value: MultiLinearMap | None
    nullity: int
    verified_positions: list = field(default_factory=list)
    witness: object = None

    @property
    def unique(self) -> bool:
        return self.consistent and self.nullity == 0


def coquerelement(ctx: ConvolutionContext, f: MultiLinearMap) -> CoquerResult:
    """Solve ``mu_star[f, .., f, q] = f`` and verify every place of ``q``.

    For a binary product the querelement notion degenerates, so the classical
    convolution inverse (``f * q = q * f = e_star``) is solved instead.
    """
    ctx.check_shape(f)
    n = ctx.n_star
    if n == 2:
        e = convolution_unit(ctx)
        rep = linear_solve_system(ctx.in_dims, ctx.out_dims, [
            (lambda X: convolve(ctx, [f, X]), e),
            (lambda X: convolve(ctx, [X, f]), e),
        ])
        if not rep.consistent:
            return CoquerResult(False, None, 0, [], rep.witness)
        return CoquerResult(True, rep.solution, rep.nullity, [0, 1])
    rep = linear_solve_system(ctx.in_dims, ctx.out_dims, [(lambda X: convolve(ctx, [f] * (n - 1) + [X]), f)])
    if not rep.consistent:
        return CoquerResult(False, None, 0, [], rep.witness)
    q = rep.solution
    verified = []
    for p in range(n):
        args = [f] * n
        args[p] = q
        if convolve(ctx, args) == f:
            verified.append(p)
    return CoquerResult(len(verified) == n, q, rep.nullity, verified)


def convolution_power(ctx: ConvolutionContext, f: MultiLinearMap, ell_star: int) -> MultiLinearMap:
    """``f^<l>``: positive powers multiply ``l(n_star-1)+1`` copies; ``f^<0> = f``.

    A negative power ``f^<-l>`` is the solution ``X`` of
    ``(mu_star)^(o l)[f, .., f, X] = f`` with ``l(n_star-1)`` copies of ``f``.
    """
    ctx.check_shape(f)
    k = ctx.n_star - 1
    if ell_star >= 0:
        return iterated_convolve(ctx, [f] * (ell_star * k + 1))
    ell = -ell_star
    rep = linear_solve_system(ctx.in_dims, ctx.out_dims,
                              [(lambda X: iterated_convolve(ctx, [f] * (ell * k) + [X]), f)])
    if not rep.consistent:
        raise ConvolutionError(f"f^<{ell_star}> does not exist (f is not coquerable)")
    return rep.solution


def quer_iterate(ctx: ConvolutionContext, f: MultiLinearMap, times: int) -> MultiLinearMap:
    """Apply the coquermap ``times`` times."""
    g = f
    for _ in range(times):
        res = coquerelement(ctx, g)
        if not res.consistent:
            raise ConvolutionError("intermediate map is not coquerable")
        g = res.value
    return g


def heine_exponent(ctx: ConvolutionContext, times: int) -> int:
    """The power ``-[[times]]_(2 - n_star)`` reached by ``times`` coquermaps."""
    return -heine_number(times, 2 - ctx.n_star)


def check_exponent_laws(ctx: ConvolutionContext, f: MultiLinearMap, exps: Sequence[int]) -> Verdict:
    """``mu_star[f^<a_1>, .., f^<a_nstar>] = f^<sum a_i + 1>`` for non-negative exponents."""
    if len(exps) != ctx.n_star:
        raise ShapeError(f"need {ctx.n_star} exponents")
    lhs = convolve(ctx, [convolution_power(ctx, f, a) for a in exps])
    rhs = convolution_power(ctx, f, sum(exps) + 1)
    return Verdict.check("exponent law", lhs == rhs, {"exponents": list(exps)})


def check_power_of_power(ctx: ConvolutionContext, f: MultiLinearMap, a: int, b: int) -> Verdict:
    """``(f^<a>)^<b> = f^<ab(n_star-1)+a+b>``."""
    lhs = convolution_power(ctx, convolution_power(ctx, f, a), b)
    rhs = convolution_power(ctx, f, a * b * (ctx.n_star - 1) + a + b)
    return Verdict.check("power of power", lhs == rhs, {"a": a, "b": b})

