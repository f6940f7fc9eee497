"""Exact divisor arithmetic on the exceptional lattice.

All decisions here are sign decisions on exact integers or rationals;
boundary cases (a pairing that is exactly zero) are meaningful, so no
floating point is allowed anywhere in this module.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InternalInvariantError
from .graph import IntersectionMatrix, ResolutionGraph

__all__ = [
    "Divisor",
    "RationalMatrix",
    "ConeStatus",
    "pair",
    "neg_inverse",
    "lipman_status",
    "fundamental_cycle",
    "strict_interior_divisor",
    "clear_denominators",
]


@dataclass(frozen=True)
class Divisor:
    """Integer cycle supported on the exceptional components."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("divisor needs at least one coefficient")

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "Divisor") -> "Divisor":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return Divisor(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, k: int) -> "Divisor":
        return Divisor(tuple(k * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def is_effective(self) -> bool:
        return all(a >= 0 for a in self.coeffs)


@dataclass(frozen=True)
class RationalMatrix:
    """Square matrix of exact rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, k: int) -> tuple[Fraction, ...]:
        return tuple(row[k] for row in self.entries)

    def mulvec(self, v) -> tuple[Fraction, ...]:
        if len(v) != self.n:
            raise ValueError("dimension mismatch")
        return tuple(sum(row[j] * v[j] for j in range(self.n)) for row in self.entries)


class ConeStatus(enum.Enum):
    """Position of a divisor relative to the anti-nef (Lipman) cone."""

    NOT_IN_CONE = "not_in_cone"
    LIPMAN_BOUNDARY = "lipman_boundary"
    STRICT_LIPMAN = "strict_lipman"


def pair(d1: Divisor, d2: Divisor, M: IntersectionMatrix) -> int:
    """Intersection pairing d1 . d2, the bilinear extension of E_i . E_j."""
    if d1.n != M.n or d2.n != M.n:
        raise ValueError("dimension mismatch")
    Md2 = M.mulvec(d2.coeffs)
    return sum(d1[i] * Md2[i] for i in range(M.n))


def neg_inverse(M: IntersectionMatrix) -> RationalMatrix:
    """-M^-1 by exact Gauss-Jordan elimination.

    Column k is the rational divisor pairing to -1 with E_k and 0 with the
    others; on a connected negative-definite graph every entry is positive
    and the columns generate the closed anti-nef cone.
    """
    n = M.n
    a = [
        [Fraction(M[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            raise InternalInvariantError("singular intersection matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return RationalMatrix(tuple(tuple(-a[i][n + j] for j in range(n)) for i in range(n)))


def lipman_status(D: Divisor, M: IntersectionMatrix) -> ConeStatus:
    """Classify D against the anti-nef cone by the signs of M.D."""
    if D.n != M.n:
        raise ValueError("dimension mismatch")
    if D.is_zero():
        return ConeStatus.NOT_IN_CONE
    s = M.mulvec(D.coeffs)
    if all(x < 0 for x in s):
        return ConeStatus.STRICT_LIPMAN
    if all(x <= 0 for x in s):
        return ConeStatus.LIPMAN_BOUNDARY
    return ConeStatus.NOT_IN_CONE


def fundamental_cycle(g: ResolutionGraph) -> Divisor:
    """Smallest nonzero anti-nef cycle, by the incremental computation
    sequence: start at the reduced cycle and bump the lowest component that
    still pairs positively. Terminates because the form is negative definite;
    the result is independent of the tie-break (property-tested).
    """
    M = g.intersection_matrix()
    z = [1] * g.n
    s = list(M.mulvec(z))
    while True:
        bad = next((i for i in range(g.n) if s[i] > 0), None)
        if bad is None:
            return Divisor(tuple(z))
        z[bad] += 1
        for l in range(g.n):
            s[l] += M[l][bad]


def clear_denominators(v) -> tuple[int, ...]:
    """Scale a rational vector by the lcm of its denominators."""
    fracs = [Fraction(x) for x in v]
    m = lcm(*(x.denominator for x in fracs))
    return tuple(int(x * m) for x in fracs)


def strict_interior_divisor(g: ResolutionGraph) -> Divisor:
    """An integer divisor in the strict interior of the anti-nef cone.

    Clearing denominators of (-M^-1).(1,...,1) gives D with
    M.D = -s.(1,...,1) for the clearing factor s, so every pairing is
    strictly negative.
    """
    C = neg_inverse(g.intersection_matrix())
    interior = tuple(sum(row) for row in C.entries)
    return Divisor(clear_denominators(interior))
