"""Canned structures used by the CLI generator, the sample files and the tests."""
from __future__ import annotations

from .algebra import (
    PolyadicAlgebra,
    algebra_from_basis_products,
    cyclic_group_algebra,
    derived_multiplication,
    matrix_algebra,
)
from .coalgebra import PolyadicCoalgebra, coiterate, d3_coalgebra, group_coalgebra, matrix_coalgebra
from .convolution import ConvolutionContext
from .hopf import (
    PolyadicBialgebra,
    cyclic_group_bialgebra,
    derived_bialgebra,
    von_neumann_regular_bialgebra,
)
from .quantum import RMatrix, check_yang_baxter, search_solutions
from .scalars import ONE, Scalar
from .tensorkit import MultiLinearMap, TensorSum, tensor_maps

HALF = Scalar.coerce("1/2")
GRID_HALVES = ("0", "1/2", "-1/2")


def derived_matrix_coalgebra(size: int = 2, ell: int = 2) -> PolyadicCoalgebra:
    """The matrix coalgebra with its comultiplication iterated ``ell`` times."""
    base = matrix_coalgebra(size)
    counit = tensor_maps([base.counit] * ell)
    return PolyadicCoalgebra(coiterate(base, ell), counit, base.labels, f"Mc{size}^der{ell + 1}")


def sweedler_bialgebra() -> PolyadicBialgebra:
    """Four-dimensional Hopf algebra on ``1, g, x, gx`` with ``g^2 = 1``, ``x^2 = 0``, ``xg = -gx``.

    ``Delta(g) = g (x) g`` and ``Delta(x) = x (x) 1 + g (x) x``.  It is
    neither commutative nor cocommutative.
    """
    def idx(a, b):
        return a + 2 * b

    prods = {}
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    key = (idx(a, b), idx(c, d))
                    prods[key] = {} if b + d > 1 else {idx((a + c) % 2, b + d): Scalar((-1) ** (b * c))}
    labels = ["1", "g", "x", "gx"]
    A = algebra_from_basis_products(prods, 2, 4, labels=labels, name="H4")
    A.unit = TensorSum.basis((4,), (0,)).as_map()
    from .coalgebra import coalgebra_from_images

    C = coalgebra_from_images({0: {(0, 0): ONE}, 1: {(1, 1): ONE}, 2: {(2, 0): ONE, (1, 2): ONE},
                               3: {(3, 1): ONE, (0, 3): ONE}}, 4, 2, {(0,): ONE, (1,): ONE},
                              labels=labels, name="H4")
    return PolyadicBialgebra(A, C, "H4")


def _z2_part(dim: int) -> dict:
    return {(0, 0): HALF, (0, 1): HALF, (1, 0): HALF, (1, 1): -HALF}


def sweedler_rmatrix(t) -> RMatrix:
    """``R_t = R_0 + t/2 (x(x)x - x(x)gx + gx(x)x + gx(x)gx)`` in the basis ``1, g, x, gx``."""
    t = Scalar.coerce(t) * HALF
    terms = _z2_part(4)
    terms.update({(2, 2): t, (2, 3): -t, (3, 2): t, (3, 3): t})
    return RMatrix(TensorSum((4, 4), terms), f"R_{t * 2}")


def z2_rmatrix() -> RMatrix:
    """The non-trivial quasitriangular R-matrix of the group bialgebra of Z_2,
    recovered by scanning the grid {0, 1/2, -1/2}."""
    B = cyclic_group_bialgebra(2)
    found = [T for T in search_solutions(B, "quasitriangular", GRID_HALVES) if not T.is_zero()]
    trivial = TensorSum((2, 2), {(0, 0): ONE})
    found = [T for T in found if T != trivial]
    if len(found) != 1:
        raise RuntimeError(f"expected one non-trivial grid solution, found {len(found)}")
    R = RMatrix(found[0], "R_Z2")
    if not check_yang_baxter(B, R).passed:
        raise RuntimeError("grid solution fails the Yang-Baxter equation")
    return R


def trivial_rmatrix(B: PolyadicBialgebra | PolyadicAlgebra, factors: int = 2) -> RMatrix:
    from .quantum import unit_element
    from .tensorkit import tensor_all

    alg = B.alg if isinstance(B, PolyadicBialgebra) else B
    return RMatrix(tensor_all([unit_element(alg)] * factors), "trivial")


def identity_map(dim: int, factors: int = 1) -> MultiLinearMap:
    return MultiLinearMap.identity((dim,) * factors)


def z3_context(ell: int = 2) -> ConvolutionContext:
    """Symmetric context on the group bialgebra of Z_3 with ``l = l' = ell``."""
    B = cyclic_group_bialgebra(3)
    return ConvolutionContext(B.alg, B.coalg, ell, ell)


def corpus_algebras() -> dict:
    """Algebras of dimension at most 4 used for cross-checks."""
    z2 = cyclic_group_algebra(2)
    z3 = cyclic_group_algebra(3)
    return {
        "Z2": z2,
        "Z3": z3,
        "Z2 ternary": derived_multiplication(z2, 2),
        "Z3 ternary": derived_multiplication(z3, 2),
        "Z2 quaternary": derived_multiplication(z2, 3),
        "vn3": von_neumann_regular_bialgebra(3).alg,
        "vn4": von_neumann_regular_bialgebra(4).alg,
        "H4": sweedler_bialgebra().alg,
        "M2": matrix_algebra(2),
    }


def corpus_coalgebras() -> dict:
    z2 = group_coalgebra(2)
    return {
        "Z2": z2,
        "Z3": group_coalgebra(3),
        "Z2 ternary": PolyadicCoalgebra(coiterate(z2, 2), None, z2.labels, "Z2^der3"),
        "d3": d3_coalgebra(),
        "vn3": von_neumann_regular_bialgebra(3).coalg,
        "vn4": von_neumann_regular_bialgebra(4).coalg,
        "H4": sweedler_bialgebra().coalg,
        "Mc2": matrix_coalgebra(2),
        "Mc2 ternary": derived_matrix_coalgebra(2, 2),
    }


def corpus_bialgebras() -> dict:
    z2 = cyclic_group_bialgebra(2)
    return {
        "Z2": z2,
        "Z3": cyclic_group_bialgebra(3),
        "Z2 (3,3)": derived_bialgebra(z2, 2, 2),
        "vn3": von_neumann_regular_bialgebra(3),
        "vn4": von_neumann_regular_bialgebra(4),
        "H4": sweedler_bialgebra(),
    }
