"""Tensor-slot combinatorics and exact multilinear maps.

Basis words are tuples of basis indices, one per tensor factor.  Flat
indices are row-major over words, the same ordering as a Kronecker product,
so the map ``f (x) g`` has coefficient ``f[o1, i1] * g[o2, i2]`` at flat
position ``(o1 * |out g| + o2, i1 * |in g| + i2)``.

Maps carry a dimension per slot.  Most structures are homogeneous, but the
convolution product routes factors of a coalgebra and an algebra of
different dimensions through the same permutations.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import prod
from typing import Callable, Iterable, Sequence

from .runtime import check_budget
from .scalars import ONE, ZERO, Scalar


class ShapeError(ValueError):
    """Incompatible factor counts or dimensions."""


# ---------------------------------------------------------------------------
# slot permutations


class SlotPermutation:
    """Bijection of tensor slots.  Source slot ``j`` moves to ``image[j]``."""

    __slots__ = ("image",)

    def __init__(self, image: Sequence[int]):
        image = tuple(int(x) for x in image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation: {image}")
        self.image = image

    @property
    def size(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, size: int) -> "SlotPermutation":
        return cls(range(size))

    def compose(self, other: "SlotPermutation") -> "SlotPermutation":
        """``self o other``: apply ``other`` first."""
        if self.size != other.size:
            raise ShapeError("permutation sizes differ")
        return SlotPermutation(self.image[other.image[j]] for j in range(self.size))

    def inverse(self) -> "SlotPermutation":
        inv = [0] * self.size
        for j, t in enumerate(self.image):
            inv[t] = j
        return SlotPermutation(inv)

    def apply(self, word: Sequence) -> tuple:
        out = [None] * self.size
        for j, t in enumerate(self.image):
            out[t] = word[j]
        return tuple(out)

    def fixed_points(self) -> list[int]:
        return [j for j, t in enumerate(self.image) if j == t]

    def moved(self) -> list[int]:
        return [j for j, t in enumerate(self.image) if j != t]

    def is_identity(self) -> bool:
        return all(j == t for j, t in enumerate(self.image))

    def is_involution(self) -> bool:
        return self.compose(self).is_identity()

    def matrix(self) -> list[list[int]]:
        """0/1 matrix with a one at row ``image[j]``, column ``j``."""
        m = [[0] * self.size for _ in range(self.size)]
        for j, t in enumerate(self.image):
            m[t][j] = 1
        return m

    def tensor(self, other: "SlotPermutation") -> "SlotPermutation":
        k = self.size
        return SlotPermutation(list(self.image) + [k + t for t in other.image])

    def __eq__(self, other):
        return isinstance(other, SlotPermutation) and self.image == other.image

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"SlotPermutation({list(self.image)})"


def medial_permutation(n: int, m: int) -> SlotPermutation:
    """Transpose an ``m x n`` grid of slots (m rows, n columns).

    Row-major slot ``i*n + j`` goes to row-major slot ``j*m + i`` of the
    ``n x m`` grid.
    """
    if n < 1 or m < 1:
        raise ValueError("grid sides must be positive")
    return SlotPermutation(
        [j * m + i for i in range(m) for j in range(n)]
    )


def polyadic_twist(n: int, m: int) -> SlotPermutation:
    """The medial permutation restricted to its moved slots.

    Moved slots are relabelled 0..k-1 in ascending order of the original slot.
    """
    if n < 2 or m < 2:
        raise ValueError("twist needs a grid of at least 2 x 2")
    full = medial_permutation(n, m)
    moved = full.moved()
    pos = {s: k for k, s in enumerate(moved)}
    return SlotPermutation([pos[full.image[s]] for s in moved])


def twist_grids(places: int, max_side: int | None = None) -> list[tuple[int, int]]:
    """All grids whose twist moves exactly ``places`` slots.

    Pairs are ``(n cols, m rows)``, ready for :func:`polyadic_twist`, ordered
    by rows then columns.
    """
    bound = max_side if max_side is not None else places + 1
    found = []
    for m in range(2, bound + 1):
        for n in range(2, bound + 1):
            if len(medial_permutation(n, m).moved()) == places:
                found.append((n, m))
    return found


def default_twist(places: int) -> SlotPermutation:
    """The twist of the first grid (fewest rows) moving ``places`` slots.

    Two places give the ordinary flip.  Raises ``ValueError`` when no grid
    moves exactly that many slots, e.g. for three places.
    """
    grids = twist_grids(places)
    if not grids:
        raise ValueError(f"no polyadic twist moves exactly {places} slots")
    return polyadic_twist(*grids[0])


def swap() -> SlotPermutation:
    return SlotPermutation([1, 0])


def reversal(k: int) -> SlotPermutation:
    return SlotPermutation([k - 1 - j for j in range(k)])


# ---------------------------------------------------------------------------
# word indexing


def _strides(dims: Sequence[int]) -> list[int]:
    st = [1] * len(dims)
    for k in range(len(dims) - 2, -1, -1):
        st[k] = st[k + 1] * dims[k + 1]
    return st


def word_to_flat(word: Sequence[int], dims: Sequence[int]) -> int:
    flat = 0
    for w, d in zip(word, dims):
        if not 0 <= w < d:
            raise ShapeError(f"basis index {w} out of range for dimension {d}")
        flat = flat * d + w
    return flat


def flat_to_word(flat: int, dims: Sequence[int]) -> tuple:
    out = []
    for d in reversed(dims):
        flat, r = divmod(flat, d)
        out.append(r)
    return tuple(reversed(out))


def all_words(dims: Sequence[int]):
    return itertools.product(*[range(d) for d in dims])


def _dims(d, k: int | None = None) -> tuple:
    if isinstance(d, int):
        if k is None:
            raise ShapeError("factor count required for homogeneous dims")
        return (d,) * k
    return tuple(d)


# ---------------------------------------------------------------------------
# tensor sums


class TensorSum:
    """Formal linear combination of basis words in a tensor power."""

    __slots__ = ("dims", "terms")

    def __init__(self, dims: Sequence[int], terms=None):
        self.dims = tuple(dims)
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for word, c in items:
                word = tuple(word)
                if len(word) != len(self.dims):
                    raise ShapeError(f"word {word} has wrong length for {self.dims}")
                c = Scalar.coerce(c)
                acc = clean.get(word, ZERO) + c
                if acc.is_zero():
                    clean.pop(word, None)
                else:
                    clean[word] = acc
        self.terms = clean

    @classmethod
    def basis(cls, dims: Sequence[int], word: Sequence[int], coeff=ONE) -> "TensorSum":
        return cls(dims, {tuple(word): coeff})

    @classmethod
    def scalar(cls, c=ONE) -> "TensorSum":
        return cls((), {(): c})

    @property
    def factors(self) -> int:
        return len(self.dims)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        """Terms in canonical (sorted-word) order."""
        return sorted(self.terms.items())

    def coeff(self, word) -> Scalar:
        return self.terms.get(tuple(word), ZERO)

    def _check(self, other):
        if self.dims != other.dims:
            raise ShapeError(f"tensor shapes differ: {self.dims} vs {other.dims}")

    def __add__(self, other: "TensorSum") -> "TensorSum":
        self._check(other)
        return TensorSum(self.dims, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "TensorSum") -> "TensorSum":
        return self + other.scale(-ONE)

    def __neg__(self):
        return self.scale(-ONE)

    def scale(self, c) -> "TensorSum":
        c = Scalar.coerce(c)
        return TensorSum(self.dims, [(w, v * c) for w, v in self.terms.items()])

    def tensor(self, other: "TensorSum") -> "TensorSum":
        return TensorSum(
            self.dims + other.dims,
            [(w1 + w2, c1 * c2) for w1, c1 in self.terms.items() for w2, c2 in other.terms.items()],
        )

    def permute(self, perm: SlotPermutation) -> "TensorSum":
        if perm.size != self.factors:
            raise ShapeError("permutation size does not match factor count")
        return TensorSum(perm.apply(self.dims), [(perm.apply(w), c) for w, c in self.terms.items()])

    def __eq__(self, other):
        return isinstance(other, TensorSum) and self.dims == other.dims and self.terms == other.terms

    def __hash__(self):
        return hash((self.dims, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "TensorSum(0)"
        body = " + ".join(f"({c})*{list(w)}" for w, c in self.items())
        return f"TensorSum({body})"

    def as_map(self) -> "MultiLinearMap":
        """View as a map from the scalars (zero input factors)."""
        st = self.dims
        return MultiLinearMap((), st, {(word_to_flat(w, st), 0): c for w, c in self.terms.items()})


def tensor_all(parts: Iterable[TensorSum]) -> TensorSum:
    out = TensorSum.scalar()
    for p in parts:
        out = out.tensor(p)
    return out


# ---------------------------------------------------------------------------
# multilinear maps


class MultiLinearMap:
    """Exact linear map between tensor powers, stored sparsely.

    ``entries`` maps ``(out_flat, in_flat)`` to a nonzero Scalar.
    """

    __slots__ = ("in_dims", "out_dims", "entries")

    def __init__(self, in_dims: Sequence[int], out_dims: Sequence[int], entries=None):
        self.in_dims = tuple(in_dims)
        self.out_dims = tuple(out_dims)
        clean = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for key, c in items:
                c = Scalar.coerce(c)
                if not c.is_zero():
                    clean[key] = clean.get(key, ZERO) + c
                    if clean[key].is_zero():
                        del clean[key]
        self.entries = clean

    # shape
    @property
    def in_factors(self) -> int:
        return len(self.in_dims)

    @property
    def out_factors(self) -> int:
        return len(self.out_dims)

    @property
    def in_size(self) -> int:
        return prod(self.in_dims)

    @property
    def out_size(self) -> int:
        return prod(self.out_dims)

    @property
    def dim(self):
        ds = set(self.in_dims) | set(self.out_dims)
        return ds.pop() if len(ds) == 1 else None

    # constructors
    @classmethod
    def zero(cls, in_dims, out_dims) -> "MultiLinearMap":
        return cls(in_dims, out_dims)

    @classmethod
    def identity(cls, dims: Sequence[int]) -> "MultiLinearMap":
        dims = tuple(dims)
        return cls(dims, dims, {(k, k): ONE for k in range(prod(dims))})

    @classmethod
    def from_words(cls, in_dims, out_dims, triples) -> "MultiLinearMap":
        """Build from ``(out_word, in_word, coeff)`` triples."""
        in_dims, out_dims = tuple(in_dims), tuple(out_dims)
        return cls(
            in_dims,
            out_dims,
            [((word_to_flat(o, out_dims), word_to_flat(i, in_dims)), c) for o, i, c in triples],
        )

    @classmethod
    def from_function(cls, in_dims, out_dims, fn: Callable[[tuple], TensorSum]) -> "MultiLinearMap":
        """Build from the image of every input basis word."""
        in_dims, out_dims = tuple(in_dims), tuple(out_dims)
        entries = []
        for iw in all_words(in_dims):
            img = fn(iw)
            if img.dims != out_dims:
                raise ShapeError(f"image dims {img.dims} differ from {out_dims}")
            fi = word_to_flat(iw, in_dims)
            for ow, c in img.terms.items():
                entries.append(((word_to_flat(ow, out_dims), fi), c))
        return cls(in_dims, out_dims, entries)

    @classmethod
    def counit_like(cls, in_dims, values: dict) -> "MultiLinearMap":
        """Map to the scalars from ``{in_word: coeff}``."""
        in_dims = tuple(in_dims)
        return cls(in_dims, (), [((0, word_to_flat(w, in_dims)), c) for w, c in values.items()])

    # element access
    def coeff(self, out_word, in_word) -> Scalar:
        return self.entries.get(
            (word_to_flat(out_word, self.out_dims), word_to_flat(in_word, self.in_dims)), ZERO
        )

    def triples(self):
        """Sorted ``(out_word, in_word, coeff)`` triples."""
        out = []
        for (o, i), c in sorted(self.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            out.append((flat_to_word(o, self.out_dims), flat_to_word(i, self.in_dims), c))
        return out

    def column(self, in_word) -> TensorSum:
        fi = word_to_flat(in_word, self.in_dims)
        return TensorSum(
            self.out_dims,
            [(flat_to_word(o, self.out_dims), c) for (o, i), c in self.entries.items() if i == fi],
        )

    def columns(self) -> dict:
        cols: dict = {}
        for (o, i), c in self.entries.items():
            cols.setdefault(i, []).append((o, c))
        return cols

    # algebra of maps
    def compose(self, other: "MultiLinearMap") -> "MultiLinearMap":
        """``self o other``."""
        if other.out_dims != self.in_dims:
            raise ShapeError(f"cannot compose: {other.out_dims} into {self.in_dims}")
        check_budget(max(self.out_size, other.in_size), "map composition")
        by_in = self.columns()
        acc: dict = {}
        for (o, i), c in other.entries.items():
            col = by_in.get(o)
            if not col:
                continue
            for o2, c2 in col:
                key = (o2, i)
                acc[key] = acc.get(key, ZERO) + c2 * c
        return MultiLinearMap(other.in_dims, self.out_dims, acc)

    def __matmul__(self, other):
        return self.compose(other)

    def tensor(self, other: "MultiLinearMap") -> "MultiLinearMap":
        check_budget(max(self.out_size * other.out_size, self.in_size * other.in_size), "map tensor product")
        so, si = other.out_size, other.in_size
        entries = {}
        for (o1, i1), c1 in self.entries.items():
            for (o2, i2), c2 in other.entries.items():
                entries[(o1 * so + o2, i1 * si + i2)] = c1 * c2
        return MultiLinearMap(self.in_dims + other.in_dims, self.out_dims + other.out_dims, entries)

    def _same_shape(self, other):
        if self.in_dims != other.in_dims or self.out_dims != other.out_dims:
            raise ShapeError("map shapes differ")

    def __add__(self, other: "MultiLinearMap") -> "MultiLinearMap":
        self._same_shape(other)
        return MultiLinearMap(self.in_dims, self.out_dims, list(self.entries.items()) + list(other.entries.items()))

    def __sub__(self, other: "MultiLinearMap") -> "MultiLinearMap":
        return self + other.scale(-ONE)

    def __neg__(self):
        return self.scale(-ONE)

    def scale(self, c) -> "MultiLinearMap":
        c = Scalar.coerce(c)
        return MultiLinearMap(self.in_dims, self.out_dims, {k: v * c for k, v in self.entries.items()})

    def apply(self, x: TensorSum) -> TensorSum:
        if x.dims != self.in_dims:
            raise ShapeError(f"argument dims {x.dims} differ from {self.in_dims}")
        by_in = self.columns()
        out = []
        for w, c in x.terms.items():
            for o, c2 in by_in.get(word_to_flat(w, self.in_dims), ()):
                out.append((flat_to_word(o, self.out_dims), c2 * c))
        return TensorSum(self.out_dims, out)

    def permute_outputs(self, perm: SlotPermutation) -> "MultiLinearMap":
        return permutation_to_map(perm, self.out_dims).compose(self)

    def is_zero(self) -> bool:
        return not self.entries

    def reshape(self, in_dims: Sequence[int], out_dims: Sequence[int]) -> "MultiLinearMap":
        """Regroup slots without moving coefficients (row-major flat indices are kept)."""
        in_dims, out_dims = tuple(in_dims), tuple(out_dims)
        if prod(in_dims) != self.in_size or prod(out_dims) != self.out_size:
            raise ShapeError("reshape must preserve total sizes")
        return MultiLinearMap(in_dims, out_dims, self.entries)

    def difference_witness(self, other: "MultiLinearMap"):
        """First (in_word, out_word) where the maps differ, or None."""
        self._same_shape(other)
        keys = sorted(set(self.entries) | set(other.entries), key=lambda k: (k[1], k[0]))
        for k in keys:
            if self.entries.get(k, ZERO) != other.entries.get(k, ZERO):
                return flat_to_word(k[1], self.in_dims), flat_to_word(k[0], self.out_dims)
        return None

    def __eq__(self, other):
        return (
            isinstance(other, MultiLinearMap)
            and self.in_dims == other.in_dims
            and self.out_dims == other.out_dims
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.in_dims, self.out_dims, frozenset(self.entries.items())))

    def __repr__(self):
        return f"MultiLinearMap(in={list(self.in_dims)}, out={list(self.out_dims)}, nnz={len(self.entries)})"

    def dense(self) -> list[list[Scalar]]:
        check_budget(self.out_size * self.in_size, "dense view")
        rows = [[ZERO] * self.in_size for _ in range(self.out_size)]
        for (o, i), c in self.entries.items():
            rows[o][i] = c
        return rows


def map_compose(f: MultiLinearMap, g: MultiLinearMap) -> MultiLinearMap:
    return f.compose(g)


def map_tensor(f: MultiLinearMap, g: MultiLinearMap) -> MultiLinearMap:
    return f.tensor(g)


def tensor_maps(maps: Iterable[MultiLinearMap]) -> MultiLinearMap:
    maps = list(maps)
    if not maps:
        return MultiLinearMap((), (), {(0, 0): ONE})
    out = maps[0]
    for m in maps[1:]:
        out = out.tensor(m)
    return out


def compose_all(*maps: MultiLinearMap) -> MultiLinearMap:
    """``maps[0] o maps[1] o ...``."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = m.compose(out)
    return out


def apply_map(f: MultiLinearMap, x: TensorSum) -> TensorSum:
    return f.apply(x)


def identity_map(dim: int, factors: int = 1) -> MultiLinearMap:
    return MultiLinearMap.identity((dim,) * factors)


def permutation_to_map(p: SlotPermutation, dims) -> MultiLinearMap:
    """Map sending a basis word ``w`` to ``p.apply(w)``.

    ``dims`` gives the dimension of each source slot (an int means all equal).
    """
    dims = _dims(dims, p.size)
    if len(dims) != p.size:
        raise ShapeError("dims length differs from permutation size")
    out_dims = p.apply(dims)
    entries = {}
    for w in all_words(dims):
        entries[(word_to_flat(p.apply(w), out_dims), word_to_flat(w, dims))] = ONE
    return MultiLinearMap(dims, out_dims, entries)


def insert_at(f: MultiLinearMap, position: int, total_in: int, dim: int) -> MultiLinearMap:
    """``id^(total_in - position - k) (x) f (x) id^position`` style placement.

    ``position`` counts the identity factors to the left of ``f``.
    """
    k = f.in_factors
    right = total_in - position - k
    if right < 0 or position < 0:
        raise ShapeError("placement out of range")
    parts = []
    if position:
        parts.append(MultiLinearMap.identity((dim,) * position))
    parts.append(f)
    if right:
        parts.append(MultiLinearMap.identity((dim,) * right))
    return tensor_maps(parts)


# ---------------------------------------------------------------------------
# exact linear solving


@dataclass
class LinearSolution:
    consistent: bool
    values: list = field(default_factory=list)
    nullity: int = 0
    rank: int = 0
    witness: dict | None = None  # inconsistent row after elimination
    free_vars: list = field(default_factory=list)


def solve_affine(rows: Sequence[tuple[dict, Scalar]], nvars: int) -> LinearSolution:
    """Solve ``sum_k row[k] * x_k = rhs`` for every ``(row, rhs)`` exactly.

    Gauss-Jordan elimination over Scalars with sparse rows.  Free variables
    are set to zero in the returned canonical solution.  An inconsistent
    system returns ``consistent=False`` and the offending reduced row.
    """
    pivots: dict[int, tuple[dict, Scalar]] = {}  # pivot var -> (row, rhs), row[var] == 1
    order: list[int] = []
    for raw_row, raw_rhs in rows:
        row = {k: Scalar.coerce(v) for k, v in raw_row.items() if not Scalar.coerce(v).is_zero()}
        rhs = Scalar.coerce(raw_rhs)
        # reduce by existing pivots
        for p in order:
            c = row.get(p)
            if c is None:
                continue
            prow, prhs = pivots[p]
            for k, v in prow.items():
                nv = row.get(k, ZERO) - c * v
                if nv.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = nv
            rhs = rhs - c * prhs
        if not row:
            if not rhs.is_zero():
                return LinearSolution(False, witness={"row": {}, "rhs": rhs}, rank=len(order))
            continue
        p = min(row)
        inv = row[p].inverse()
        row = {k: v * inv for k, v in row.items()}
        rhs = rhs * inv
        # eliminate new pivot from earlier rows
        for q in order:
            qrow, qrhs = pivots[q]
            c = qrow.get(p)
            if c is None:
                continue
            for k, v in row.items():
                nv = qrow.get(k, ZERO) - c * v
                if nv.is_zero():
                    qrow.pop(k, None)
                else:
                    qrow[k] = nv
            pivots[q] = (qrow, qrhs - c * rhs)
        pivots[p] = (row, rhs)
        order.append(p)
    values = [ZERO] * nvars
    for p in order:
        values[p] = pivots[p][1]
    free = [k for k in range(nvars) if k not in pivots]
    return LinearSolution(True, values, nullity=len(free), rank=len(order), free_vars=free)


@dataclass
class MapSolveReport:
    consistent: bool
    solution: MultiLinearMap | None
    nullity: int
    witness: object = None


def linear_solve(
    in_dims: Sequence[int],
    out_dims: Sequence[int],
    equation: Callable[[MultiLinearMap], MultiLinearMap],
    target: MultiLinearMap,
) -> MapSolveReport:
    """Solve ``equation(X) = target`` for an unknown map ``X``.

    ``equation`` must be affine in ``X``.  It is probed on the zero map and
    on every elementary map, which yields one exact linear equation per
    coefficient of the target space.
    """
    nvars = prod(in_dims) * prod(out_dims)
    check_budget(nvars * max(1, target.in_size * target.out_size), "linear solve")  # dense system size
    return linear_solve_system(in_dims, out_dims, [(equation, target)])


def linear_solve_system(
    in_dims: Sequence[int],
    out_dims: Sequence[int],
    equations: Sequence[tuple[Callable[[MultiLinearMap], MultiLinearMap], MultiLinearMap]],
) -> MapSolveReport:
    """Solve several affine map equations ``eq(X) = target`` jointly."""
    in_dims, out_dims = tuple(in_dims), tuple(out_dims)
    n_in, n_out = prod(in_dims), prod(out_dims)
    var_keys = [(o, i) for i in range(n_in) for o in range(n_out)]
    zero = MultiLinearMap(in_dims, out_dims)
    rows = []
    for block, (equation, target) in enumerate(equations):
        base = equation(zero)
        cols = [(equation(MultiLinearMap(in_dims, out_dims, {key: ONE})) - base).entries for key in var_keys]
        rhs_map = target - base
        eq_keys = set(rhs_map.entries)
        for col in cols:
            eq_keys.update(col)
        for ek in sorted(eq_keys, key=lambda k: (k[1], k[0])):
            rows.append(({v: col[ek] for v, col in enumerate(cols) if ek in col}, rhs_map.entries.get(ek, ZERO)))
    sol = solve_affine(rows, len(var_keys))
    if not sol.consistent:
        return MapSolveReport(False, None, 0, sol.witness)
    X = MultiLinearMap(in_dims, out_dims, {var_keys[v]: c for v, c in enumerate(sol.values)})
    return MapSolveReport(True, X, sol.nullity)


def solve_vector(dims: Sequence[int], equation: Callable[[TensorSum], TensorSum], target: TensorSum) -> tuple:
    """Solve ``equation(x) = target`` for a tensor ``x`` (affine equation).

    Returns ``(solution or None, nullity, consistent)``.
    """
    dims = tuple(dims)
    words = list(all_words(dims))
    base = equation(TensorSum(dims))
    cols = [(equation(TensorSum.basis(dims, w)) - base).terms for w in words]
    rhs = target - base
    keys = set(rhs.terms)
    for c in cols:
        keys.update(c)
    rows = [({v: c[k] for v, c in enumerate(cols) if k in c}, rhs.coeff(k)) for k in sorted(keys)]
    sol = solve_affine(rows, len(words))
    if not sol.consistent:
        return None, 0, False
    return TensorSum(dims, zip(words, sol.values)), sol.nullity, True
