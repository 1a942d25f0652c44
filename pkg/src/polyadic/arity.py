"""Integer arithmetic of arities: word lengths, admissible dimensions,
twist place counts, convolution arities and shape constraints.

Every solver raises :class:`Inadmissible` rather than rounding.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class Inadmissible(ValueError):
    """An arity relation has no integral solution."""


def word_length(n: int, ell: int) -> int:
    """Length of a word consumed by ``ell`` applications of an n-ary operation."""
    if n < 2 or ell < 0:
        raise ValueError("need n >= 2 and ell >= 0")
    return ell * (n - 1) + 1


def iterations_for_length(n: int, length: int) -> int:
    """Inverse of :func:`word_length`; raises if the length is not admissible."""
    if length < 1 or (length - 1) % (n - 1):
        raise Inadmissible(f"word length {length} is not l({n}-1)+1 for any l")
    return (length - 1) // (n - 1)


def admissible_dimensions(m: int, max_ell: int) -> list[int]:
    if m < 2:
        raise ValueError("addition arity must be >= 2")
    return [ell * (m - 1) + 1 for ell in range(max_ell + 1)]


def is_admissible_dimension(N: int, m: int) -> bool:
    return N >= 1 and (N - 1) % (m - 1) == 0


def structure_constant_count(r: int, N: int, n: int) -> int:
    return r * N ** (n + 1)


def twist_places(m: int, n: int, mode: str = "paper") -> int:
    """Number of slots moved by the twist on an ``m x n`` grid.

    ``paper`` mode is the tabulated rule (``mn - 2`` off the diagonal,
    ``n(n-1)`` on it).  ``exact`` mode counts the moved slots of the grid
    transposition, whose fixed points number ``gcd(m-1, n-1) + 1``.
    """
    if m < 2 or n < 2:
        raise ValueError("grid sides must be >= 2")
    if mode == "paper":
        return n * (n - 1) if m == n else m * n - 2
    if mode == "exact":
        return m * n - gcd(m - 1, n - 1) - 1
    raise ValueError(f"unknown mode {mode!r}")


def twist_table(max_side: int, mode: str = "paper") -> list[list[int]]:
    """Rows m = 2..max_side, columns n = 2..max_side."""
    return [[twist_places(m, n, mode) for n in range(2, max_side + 1)] for m in range(2, max_side + 1)]


def convolution_arity(n: int, ell: int, n_prime: int, ell_prime: int) -> int:
    if min(ell, ell_prime) < 1 or min(n, n_prime) < 2:
        raise ValueError("need n, n' >= 2 and ell, ell' >= 1")
    if ell * (n - 1) != ell_prime * (n_prime - 1):
        raise Inadmissible(
            f"l(n-1) = {ell * (n - 1)} differs from l'(n'-1) = {ell_prime * (n_prime - 1)}"
        )
    return ell * (n - 1) + 1


def nstar_table(max_arity: int, max_ell: int = 3) -> dict:
    """All ``(n', l') -> {(n, l): n_star}`` with arities up to ``max_arity``
    and iteration counts up to ``max_ell``.

    Only consistent pairs are listed, which is exactly the populated part of
    the arity table for the convolution product.
    """
    table: dict = {}
    for n_p in range(2, max_arity + 1):
        for l_p in range(1, max_ell + 1):
            row = {}
            for n in range(2, max_arity + 1):
                for ell in range(1, max_ell + 1):
                    if ell * (n - 1) == l_p * (n_p - 1):
                        row[(n, ell)] = convolution_arity(n, ell, n_p, l_p)
            if row:
                table[(n_p, l_p)] = row
    return table


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise Inadmissible(f"{what} = {value} is not an integer")
    return value.numerator


def heteromorphism_arity(s: int, n1: int, ell_id: int) -> int:
    """Target arity ``n2`` with ``s * n2 = n1 (s - ell_id) + ell_id``."""
    if not 0 <= ell_id <= s - 1:
        raise ValueError("need 0 <= ell_id <= s - 1")
    return _integral(Fraction(n1 * (s - ell_id) + ell_id, s), "n2")


def unital_heteromorphism_arity(s: int, n1: int) -> int:
    """Arity forced when the intact count takes its maximum ``s - 1``."""
    return _integral(Fraction(n1 - 1, s) + 1, "n2")


def group_function_arity(s: int, n_g: int, ell_id: int) -> int:
    """Field arity ``n_k`` with ``s * n_k = (s - ell_id) n_g + ell_id``."""
    if not 0 <= ell_id <= s:
        raise ValueError("need 0 <= ell_id <= s")
    return _integral(Fraction((s - ell_id) * n_g + ell_id, s), "n_k")


def heine_number(l: int, q: int) -> int:
    if l < 0:
        raise ValueError("l must be >= 0")
    if q == 1:
        return l
    return (q ** l - 1) // (q - 1)


def quasipolyangular_shape(n: int, n_prime: int, medial: bool = False) -> int:
    target = n_prime * n_prime if medial else n_prime
    if (target - 1) % (n - 1):
        kind = "n'^2" if medial else "n'"
        raise Inadmissible(f"{kind} = {target} is not l({n}-1)+1 for any integer l")
    return (target - 1) // (n - 1)


@dataclass(frozen=True)
class ArityShape:
    """Arities of an algebra (m_a, n_a) over a field (m_k, n_k) with r_a places."""

    m_a: int
    n_a: int
    m_k: int
    n_k: int
    r_a: int
    n_rho: int | None = None

    def problems(self, ell: int, ell_prime: int, ell_dprime: int | None = None) -> list[str]:
        out = []
        for name, v in (("m_a", self.m_a), ("n_a", self.n_a), ("m_k", self.m_k), ("n_k", self.n_k)):
            if v < 2:
                out.append(f"{name} must be >= 2")
        if self.r_a < 1:
            out.append("r_a must be >= 1")
        if not 2 <= self.n_a <= self.n_k:
            out.append("need 2 <= n_a <= n_k")
        if not 2 <= self.m_a <= self.m_k:
            out.append("need 2 <= m_a <= m_k")
        if ell * (self.n_k - 1) != self.r_a * (self.n_a - 1):
            out.append("l(n_k-1) must equal r_a(n_a-1)")
        if not ell <= self.r_a <= ell * (self.n_k - 1):
            out.append("need l <= r_a <= l(n_k-1)")
        if ell_prime * (self.m_k - 1) != self.r_a * (self.m_a - 1):
            out.append("l'(m_k-1) must equal r_a(m_a-1)")
        n_rho = self.n_rho if self.n_rho is not None else self.n_a
        if ell_dprime is not None and ell_dprime * (self.n_k - 1) != self.r_a * (n_rho - 1):
            out.append("l''(n_k-1) must equal r_a(n_rho-1)")
        return out

    def ell_shape(self) -> "EllShape":
        """Solve for the iteration counts; raise if any is non-integral."""
        ell = _integral(Fraction(self.r_a * (self.n_a - 1), self.n_k - 1), "l")
        ell_p = _integral(Fraction(self.r_a * (self.m_a - 1), self.m_k - 1), "l'")
        n_rho = self.n_rho if self.n_rho is not None else self.n_a
        ell_pp = _integral(Fraction(self.r_a * (n_rho - 1), self.n_k - 1), "l''")
        probs = self.problems(ell, ell_p, ell_pp)
        if probs:
            raise Inadmissible("; ".join(probs))
        return EllShape(ell, ell_p, ell_pp)

    def is_valid(self) -> bool:
        try:
            self.ell_shape()
        except Inadmissible:
            return False
        return True


@dataclass(frozen=True)
class EllShape:
    ell: int
    ell_prime: int
    ell_dprime: int


def maximal_shape(m: int, n: int, r: int) -> ArityShape:
    """Limiting shape with ``l = r``: the algebra inherits the field arities."""
    return ArityShape(m, n, m, n, r)


def minimal_shape(m_k: int, n_k: int, r: int) -> ArityShape:
    """Limiting shape with ``l = 1``; requires ``r`` to divide both ``m_k-1`` and ``n_k-1``."""
    if (m_k - 1) % r or (n_k - 1) % r:
        raise Inadmissible(f"r = {r} must divide both m_k-1 = {m_k - 1} and n_k-1 = {n_k - 1}")
    return ArityShape(1 + (m_k - 1) // r, 1 + (n_k - 1) // r, m_k, n_k, r)
