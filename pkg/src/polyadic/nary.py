"""Element-level n-ary structures: carriers, operations, axiom checkers,
zeros, units, neutral sequences and querelements.

Finite carriers are checked exhaustively.  Infinite carriers such as the
imaginary odd fractions ``{ip/q}`` are represented by a finite sample plus a
membership predicate, and their operations by exact formula plugins that
can solve for one missing argument.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .arity import Inadmissible, iterations_for_length
from .runtime import BudgetExceeded, check_budget, current_budget
from .scalars import ONE, ZERO, Scalar, rational
from .verdict import BUDGET, Verdict


class Carrier:
    """Ordered sample or enumeration of a set.

    ``member`` decides membership for values outside ``elements``; when it is
    omitted the carrier is finite and ``elements`` is all of it.
    """

    def __init__(self, elements: Sequence, member: Callable | None = None, name: str = ""):
        elements = list(elements)
        if len(set(elements)) != len(elements):
            raise ValueError("carrier elements must be unique")
        self.elements = elements
        self.member = member
        self.name = name
        self._index = {e: k for k, e in enumerate(elements)}

    @property
    def finite(self) -> bool:
        return self.member is None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        if self.member is not None:
            return bool(self.member(x))
        return x in self._index

    def index(self, x) -> int:
        return self._index[x]


# ---------------------------------------------------------------------------
# operations


class NaryOp:
    """A k-ary operation given by a table or by a formula.

    ``solver(args, pos, target)`` returns all values ``x`` with
    ``op(args with x at pos) == target``; formula plugins provide it exactly,
    tables fall back to scanning the carrier.
    """

    def __init__(self, arity: int, carrier: Carrier, fn: Callable, solver: Callable | None = None,
                 name: str = "", spec: dict | None = None):
        if arity < 2:
            raise ValueError("arity must be >= 2")
        self.arity = arity
        self.carrier = carrier
        self._fn = fn
        self._solver = solver
        self.name = name
        self.spec = spec or {}

    def __call__(self, *args):
        if len(args) != self.arity:
            raise ValueError(f"{self.name or 'op'} takes {self.arity} arguments, got {len(args)}")
        return self._fn(args)

    def solve(self, args: Sequence, pos: int, target) -> list:
        if self._solver is not None:
            sols = self._solver(list(args), pos, target)
            return [x for x in sols if x in self.carrier]
        out = []
        for x in self.carrier:
            trial = list(args)
            trial[pos] = x
            if self._fn(tuple(trial)) == target:
                out.append(x)
        return out

    @classmethod
    def from_table(cls, arity: int, carrier: Carrier, table: Sequence, name: str = "") -> "NaryOp":
        """``table`` is flat row-major over carrier indices, holding result indices."""
        size = len(carrier) ** arity
        if len(table) != size:
            raise ValueError(f"table needs {size} entries, got {len(table)}")
        N = len(carrier)
        for t in table:
            if not 0 <= int(t) < N:
                raise ValueError(f"table entry {t} is not a carrier index")
        elems = carrier.elements
        tab = [int(t) for t in table]

        def fn(args):
            flat = 0
            for a in args:
                flat = flat * N + carrier.index(a)
            return elems[tab[flat]]

        return cls(arity, carrier, fn, None, name, {"table": tab})

    def table(self) -> list[int]:
        """Flat result table over carrier indices (finite carriers only)."""
        if not self.carrier.finite:
            raise ValueError("infinite carrier has no table")
        return [self.carrier.index(self._fn(w)) for w in itertools.product(self.carrier.elements, repeat=self.arity)]


def _sum_mod(arity, modulus, shift=0, coeffs=None):
    coeffs = list(coeffs) if coeffs is not None else [1] * arity
    carrier = Carrier(list(range(modulus)), name=f"Z_{modulus}")

    def fn(args):
        return (sum(c * a for c, a in zip(coeffs, args)) + shift) % modulus

    def solver(args, pos, target):
        rest = sum(c * a for k, (c, a) in enumerate(zip(coeffs, args)) if k != pos) + shift
        c = coeffs[pos] % modulus
        return [x for x in range(modulus) if (c * x + rest - target) % modulus == 0]

    return carrier, fn, solver


def _gauss_mul(arity):
    def fn(args):
        out = ONE
        for a in args:
            out = out * a
        return out

    def solver(args, pos, target):
        rest = ONE
        for k, a in enumerate(args):
            if k != pos:
                rest = rest * a
        if rest.is_zero():
            return []  # either no solution or every value; not a unique querelement
        return [target / rest]

    return fn, solver


def _gauss_sum(arity):
    def fn(args):
        out = ZERO
        for a in args:
            out = out + a
        return out

    def solver(args, pos, target):
        rest = ZERO
        for k, a in enumerate(args):
            if k != pos:
                rest = rest + a
        return [target - rest]

    return fn, solver


def pair_antidiag_value(args):
    """``[(a1,a1'), (a2,a2'), ...] -> (a1 a2' a3 ..., a1' a2 a3' ...)``."""
    first, second = ONE, ONE
    for k, (a, b) in enumerate(args):
        if k % 2 == 0:
            first, second = first * a, second * b
        else:
            first, second = first * b, second * a
    return (first, second)


def _pair_antidiag(arity):
    def fn(args):
        return pair_antidiag_value(args)

    def solver(args, pos, target):
        first, second = ONE, ONE
        for k, pair in enumerate(args):
            if k == pos:
                continue
            a, b = pair
            if k % 2 == 0:
                first, second = first * a, second * b
            else:
                first, second = first * b, second * a
        if first.is_zero() or second.is_zero():
            return []
        u, v = target[0] / first, target[1] / second
        # slot parity decides which component feeds the first output
        return [(u, v) if pos % 2 == 0 else (v, u)]

    return fn, solver


def _pair_sum(arity):
    def fn(args):
        return (sum((a for a, _ in args), ZERO), sum((b for _, b in args), ZERO))

    def solver(args, pos, target):
        ra = sum((p[0] for k, p in enumerate(args) if k != pos), ZERO)
        rb = sum((p[1] for k, p in enumerate(args) if k != pos), ZERO)
        return [(target[0] - ra, target[1] - rb)]

    return fn, solver


FORMULAS = ("sum_mod", "affine_sum_mod", "gauss_mul", "gauss_sum", "pair_antidiag", "pair_sum")


def formula_op(name: str, arity: int, carrier: Carrier | None = None, **params) -> NaryOp:
    """Build a named formula plugin.

    Modular plugins create their own carrier when none is given.
    """
    spec = {"formula": name, "params": dict(params)}
    if name in ("sum_mod", "affine_sum_mod"):
        c, fn, solver = _sum_mod(arity, int(params["modulus"]), int(params.get("shift", 0)), params.get("coeffs"))
        return NaryOp(arity, carrier or c, fn, solver, name, spec)
    if carrier is None:
        raise ValueError(f"formula {name!r} needs an explicit carrier")
    makers = {"gauss_mul": _gauss_mul, "gauss_sum": _gauss_sum, "pair_antidiag": _pair_antidiag, "pair_sum": _pair_sum}
    if name not in makers:
        raise ValueError(f"unknown formula plugin {name!r}")
    fn, solver = makers[name](arity)
    return NaryOp(arity, carrier, fn, solver, name, spec)


# ---------------------------------------------------------------------------
# iteration and associativity


def iterate_op(op: NaryOp, args: Sequence):
    """Left-nested evaluation of an admissible word."""
    args = list(args)
    k = op.arity
    if len(args) == 1:
        return args[0]
    iterations_for_length(k, len(args))
    acc = op(*args[:k])
    pos = k
    while pos < len(args):
        acc = op(acc, *args[pos:pos + k - 1])
        pos += k - 1
    return acc


def nest_at(op: NaryOp, word: Sequence, i: int):
    """``op[w_0..w_{i-1}, op[w_i..w_{i+k-1}], ...]`` for a word of length 2k-1."""
    k = op.arity
    inner = op(*word[i:i + k])
    return op(*word[:i], inner, *word[i + k:])


def _words(elements, length, budget, sample, seed):
    """Exhaustive words when affordable, otherwise a seeded sample."""
    total = len(elements) ** length
    if total <= budget:
        return itertools.product(elements, repeat=length), True
    if not sample:
        raise BudgetExceeded(f"{total} words exceed budget {budget}")
    rng = random.Random(seed)
    return ([rng.choice(elements) for _ in range(length)] for _ in range(sample)), False


def check_total_associativity(op: NaryOp, budget: int | None = None, sample: int = 0, seed: int = 0) -> Verdict:
    """All inner placements of a nested product agree on every word."""
    k = op.arity
    budget = current_budget() if budget is None else budget
    try:
        words, exhaustive = _words(op.carrier.elements, 2 * k - 1, budget, sample, seed)
    except BudgetExceeded as exc:
        return Verdict("associativity", BUDGET, None, {"reason": str(exc)})
    count = 0
    for w in words:
        count += 1
        first = nest_at(op, w, 0)
        for i in range(1, k):
            other = nest_at(op, w, i)
            if other != first:
                return Verdict.fail("associativity", {"word": list(w), "positions": [0, i], "values": [first, other]})
    return Verdict.ok("associativity", words=count, exhaustive=exhaustive)


def check_commutativity(op: NaryOp, budget: int | None = None, sample: int = 0, seed: int = 0) -> Verdict:
    """Invariance under a transposition and a full cycle, which generate all permutations."""
    k = op.arity
    budget = current_budget() if budget is None else budget
    try:
        words, exhaustive = _words(op.carrier.elements, k, budget, sample, seed)
    except BudgetExceeded as exc:
        return Verdict("commutativity", BUDGET, None, {"reason": str(exc)})
    for w in words:
        w = list(w)
        v = op(*w)
        for other in ([w[1], w[0]] + w[2:], w[1:] + w[:1]):
            if op(*other) != v:
                return Verdict.fail("commutativity", {"word": w, "permuted": other})
    return Verdict.ok("commutativity", exhaustive=exhaustive)


def check_closure(op: NaryOp, budget: int | None = None, sample: int = 0, seed: int = 0) -> Verdict:
    budget = current_budget() if budget is None else budget
    try:
        words, exhaustive = _words(op.carrier.elements, op.arity, budget, sample, seed)
    except BudgetExceeded as exc:
        return Verdict("closure", BUDGET, None, {"reason": str(exc)})
    for w in words:
        v = op(*w)
        if v not in op.carrier:
            return Verdict.fail("closure", {"word": list(w), "value": v})
    return Verdict.ok("closure", exhaustive=exhaustive)


# ---------------------------------------------------------------------------
# zeros, units, neutral sequences, querelements


def _with(x, pos, rest):
    out = list(rest)
    out.insert(pos, x)
    return out


def find_zeros(op: NaryOp) -> list:
    """Zeros of an addition-like operation: neutral elements of the addition.

    The field zero is the element that is neutral for the addition and
    absorbing for the multiplication; :func:`find_absorbing` checks the
    latter on the multiplication.
    """
    return find_units(op)


def find_absorbing(op: NaryOp, budget: int | None = None) -> list:
    """Elements ``z`` with ``op[polyad, z] = z`` for every polyad and every place of ``z``."""
    budget = current_budget() if budget is None else budget
    k = op.arity
    elems = op.carrier.elements
    check_budget(len(elems) ** k, "absorbing-element search", budget)
    found = []
    for z in elems:
        ok = True
        for rest in itertools.product(elems, repeat=k - 1):
            if any(op(*_with(z, p, rest)) != z for p in range(k)):
                ok = False
                break
        if ok:
            found.append(z)
    return found


def is_unit(op: NaryOp, e) -> bool:
    k = op.arity
    rest = [e] * (k - 1)
    return all(op(*_with(x, p, rest)) == x for x in op.carrier.elements for p in range(k))


def find_units(op: NaryOp) -> list:
    return [e for e in op.carrier.elements if is_unit(op, e)]


@dataclass
class NeutralReport:
    units: list
    neutral_sequences: list
    complete: bool


def find_units_and_neutral_sequences(op: NaryOp, max_seq: int | None = None) -> NeutralReport:
    """Units, and polyads ``e`` of length k-1 with ``op[e, x] = x`` for all x."""
    k = op.arity
    elems = op.carrier.elements
    units = find_units(op)
    limit = current_budget() if max_seq is None else max_seq
    seqs = []
    complete = True
    for count, seq in enumerate(itertools.product(elems, repeat=k - 1)):
        if count >= limit:
            complete = False
            break
        if all(op(*seq, x) == x for x in elems):
            seqs.append(list(seq))
    return NeutralReport(units, seqs, complete)


@dataclass
class QuerResult:
    element: object
    solutions: list
    verified_positions: list = field(default_factory=list)

    @property
    def value(self):
        return self.solutions[0] if len(self.solutions) == 1 else None

    @property
    def ambiguous(self) -> bool:
        return len(self.solutions) > 1

    @property
    def exists(self) -> bool:
        return bool(self.solutions)


def querelement(op: NaryOp, x) -> QuerResult:
    """Solve ``op[x, ..., x, q] = x`` and keep solutions valid at every place of ``q``."""
    k = op.arity
    base = [x] * k
    cands = op.solve(base, k - 1, x)
    good = []
    for q in cands:
        if all(op(*_with(q, p, [x] * (k - 1))) == x for p in range(k)):
            good.append(q)
    return QuerResult(x, good, list(range(k)) if good else [])


# ---------------------------------------------------------------------------
# polyadic fields


@dataclass
class PolyadicFieldDesc:
    carrier: Carrier
    add: NaryOp
    mul: NaryOp
    name: str = ""

    @property
    def m(self) -> int:
        return self.add.arity

    @property
    def n(self) -> int:
        return self.mul.arity


def check_distributivity(desc: PolyadicFieldDesc, budget: int | None = None, sample: int = 0, seed: int = 0) -> Verdict:
    """``mul[.., add[a_1..a_m], ..] = add[mul[.., a_1, ..], ..., mul[.., a_m, ..]]`` at every place."""
    m, n = desc.m, desc.n
    budget = current_budget() if budget is None else budget
    try:
        words, exhaustive = _words(desc.carrier.elements, m + n - 1, budget, sample, seed)
    except BudgetExceeded as exc:
        return Verdict("distributivity", BUDGET, None, {"reason": str(exc)})
    for w in words:
        summands, others = list(w[:m]), list(w[m:])
        for p in range(n):
            lhs = desc.mul(*_with(desc.add(*summands), p, others))
            rhs = desc.add(*[desc.mul(*_with(a, p, others)) for a in summands])
            if lhs != rhs:
                return Verdict.fail("distributivity", {"word": list(w), "position": p})
    return Verdict.ok("distributivity", exhaustive=exhaustive)


def classify(zeros: list, units: list) -> str:
    return f"{'unital' if units else 'nonunital'} {'zeroed' if zeros else 'zeroless'}"


@dataclass
class FieldReport:
    verdicts: list
    zeros: list
    units: list
    classification: str
    add_quer: dict
    mul_quer: dict

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


def check_field(desc: PolyadicFieldDesc, budget: int | None = None, sample: int = 20000, seed: int = 0) -> FieldReport:
    """Run every field axiom on the carrier (sampled when it is large)."""
    verdicts = []
    for tag, op in (("add", desc.add), ("mul", desc.mul)):
        for fn in (check_commutativity, check_total_associativity, check_closure):
            v = fn(op, budget, sample, seed)
            v.name = f"{tag} {v.name}"
            verdicts.append(v)
    verdicts.append(check_distributivity(desc, budget, sample, seed))
    zeros = find_zeros(desc.add)
    units = find_units(desc.mul)
    absorbing = find_absorbing(desc.mul, budget=max(current_budget(), len(desc.carrier) ** desc.n))
    verdicts.append(Verdict.check("zero absorbs", set(zeros) <= set(absorbing), {"zeros": zeros}))
    add_quer, mul_quer = {}, {}
    bad_add, bad_mul = [], []
    for x in desc.carrier.elements:
        qa = querelement(desc.add, x)
        add_quer[x] = qa.solutions
        if not qa.exists:
            bad_add.append(x)
        if x in zeros:
            continue  # an additive zero is never multiplicatively querable
        qm = querelement(desc.mul, x)
        mul_quer[x] = qm.solutions
        if not qm.exists:
            bad_mul.append(x)
    verdicts.append(Verdict.check("add querability", not bad_add, {"elements": bad_add}))
    verdicts.append(Verdict.check("mul querability", not bad_mul, {"elements": bad_mul}))
    return FieldReport(verdicts, zeros, units, classify(zeros, units), add_quer, mul_quer)


# ---------------------------------------------------------------------------
# convolution of multi-place functions on an n-ary group


def group_function_convolution(G: NaryOp, K: PolyadicFieldDesc, s: int, ell_id: int, fs: Sequence[dict]) -> dict:
    """Convolve ``n_k`` functions ``G^s -> K`` given as dicts keyed by s-tuples.

    The variables ``h_1 .. h_{s n_k}`` are constrained so that the first
    ``s - ell_id`` consecutive groups of ``n_g`` of them multiply to
    ``g_1, g_2, ...`` and the remaining ``ell_id`` equal the trailing g's.
    Function ``f_j`` is evaluated on the j-th consecutive block of ``s``.
    """
    from .arity import group_function_arity

    n_g, n_k = G.arity, K.n
    if group_function_arity(s, n_g, ell_id) != n_k:
        raise Inadmissible(f"s={s}, n_g={n_g}, l_id={ell_id} does not give n_k={n_k}")
    if len(fs) != n_k:
        raise ValueError(f"need {n_k} functions")
    elems = G.carrier.elements
    pre: dict = {g: [] for g in elems}
    for w in itertools.product(elems, repeat=n_g):
        pre[G(*w)].append(w)
    zeros = find_zeros(K.add) if K.carrier.finite else ([ZERO] if ZERO in K.carrier else [])
    out = {}
    for gs in itertools.product(elems, repeat=s):
        groups = [pre[g] for g in gs[: s - ell_id]]
        tail = list(gs[s - ell_id:])
        values = []
        for choice in itertools.product(*groups):
            h = [x for grp in choice for x in grp] + tail
            args = [fs[j][tuple(h[j * s:(j + 1) * s])] for j in range(n_k)]
            values.append(K.mul(*args))
        if not values:
            if not zeros:
                raise Inadmissible("sum inadmissible in zeroless field")
            out[gs] = zeros[0]
            continue
        try:
            out[gs] = iterate_op(K.add, values)
        except Inadmissible as exc:
            raise Inadmissible(f"{len(values)} summands is not an admissible word for the field addition") from exc
    return out


# ---------------------------------------------------------------------------
# canned carriers


def imaginary_odd_member(x) -> bool:
    """Membership in ``{ip/q : p, q odd}``."""
    return (
        isinstance(x, Scalar)
        and x.re == 0
        and x.im.numerator % 2 == 1
        and x.im.denominator % 2 == 1
    )


def imaginary_member(x) -> bool:
    return isinstance(x, Scalar) and x.re == 0


def rational_member(x) -> bool:
    return isinstance(x, Scalar) and x.im == 0


def odd_values(bound: int) -> list[int]:
    return [v for v in range(1, bound + 1, 2)]


def imaginary_odd_pairs(bound: int = 9) -> list[tuple[int, int]]:
    """All ``(p, q)`` with odd nonzero ``|p|, |q| <= bound``, signs included."""
    odds = odd_values(bound)
    signed = [s * v for v in odds for s in (1, -1)]
    return [(p, q) for p in signed for q in signed]


def ternary_field_sample(bound: int = 9) -> PolyadicFieldDesc:
    """The (3,3)-field ``{ip/q}`` sampled on odd ``|p|, |q| <= bound``."""
    vals = []
    seen = set()
    for p, q in imaginary_odd_pairs(bound):
        x = Scalar(0, rational(p, q))
        if x not in seen:
            seen.add(x)
            vals.append(x)
    vals.sort(key=lambda s: s.im)
    carrier = Carrier(vals, imaginary_odd_member, "{ip/q : p, q odd}")
    return PolyadicFieldDesc(carrier, formula_op("gauss_sum", 3, carrier), formula_op("gauss_mul", 3, carrier), "k(3,3)")


def imaginary_line_sample(bound: int = 3) -> PolyadicFieldDesc:
    """The (2,3)-field ``iQ`` sampled on ``i a/b`` with ``|a| <= bound``, ``1 <= b <= bound``."""
    vals = sorted({Scalar(0, rational(a, b)) for a in range(-bound, bound + 1) for b in range(1, bound + 1)},
                  key=lambda s: s.im)
    carrier = Carrier(vals, imaginary_member, "iQ")
    return PolyadicFieldDesc(carrier, formula_op("gauss_sum", 2, carrier), formula_op("gauss_mul", 3, carrier), "k(2,3)")


def rational_sample(bound: int = 3) -> PolyadicFieldDesc:
    vals = sorted({Scalar(rational(a, b)) for a in range(-bound, bound + 1) for b in range(1, bound + 1)},
                  key=lambda s: s.re)
    carrier = Carrier(vals, rational_member, "Q")
    return PolyadicFieldDesc(carrier, formula_op("gauss_sum", 2, carrier), formula_op("gauss_mul", 2, carrier), "Q")


def pair_member(x) -> bool:
    return isinstance(x, tuple) and len(x) == 2 and all(imaginary_odd_member(c) for c in x)


def ternary_pair_algebra(bound: int = 9) -> PolyadicFieldDesc:
    """Pairs of the (3,3)-field with ternary sum and anti-diagonal ternary product.

    ``mu[(a1,a1'),(a2,a2'),(a3,a3')] = (a1 a2' a3, a1' a2 a3')`` and the sum
    is componentwise.  Neither operation has a neutral element, yet both are
    ternary groups.  The ring-like description reuses the field record.
    """
    base = ternary_field_sample(bound).carrier.elements
    carrier = Carrier([(a, b) for a in base for b in base], pair_member, "pairs of {ip/q}")
    return PolyadicFieldDesc(carrier, formula_op("pair_sum", 3, carrier), formula_op("pair_antidiag", 3, carrier),
                             "A(3,3;3,3;2)")
