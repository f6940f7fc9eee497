"""The two intersection-matrix conditions behind the bijectivity criterion.

Condition (**): the reduced cycle pairs strictly negatively with every
component. Condition (*): every fundamental half-space {a_i < a_j} meets
the strict interior of the anti-nef cone. Both depend only on the
intersection matrix.

Decision procedure for (*): the closed anti-nef cone is the non-negative
span of the columns of C = -M^-1, so the pair (i, j) admits a witness
exactly when some column has C[i][k] < C[j][k]. Witnesses are synthesized
from that column, pushed into the strict interior, and re-verified before
they are returned; the generator fact itself is cross-checked against a
brute-force box search in the test suite rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cone import ConeStatus, Divisor, clear_denominators, lipman_status, neg_inverse
from .errors import InternalInvariantError
from .graph import ResolutionGraph

__all__ = [
    "StarStarReport",
    "StarCertificate",
    "check_star_star",
    "check_star",
    "star_witness",
    "halfspace_coverage",
]


@dataclass(frozen=True)
class StarStarReport:
    """Condition (**): E . E_i < 0 for every component. 0-based indices."""

    holds: bool
    violations: tuple[int, ...]


@dataclass(frozen=True)
class StarCertificate:
    """Condition (*), with an explicit witness divisor per ordered pair.

    ``witnesses[(i, j)]`` is a strictly anti-nef integer divisor with
    strictly smaller coefficient at i than at j; it exists for every
    ordered pair exactly when the condition holds. ``failing_pairs`` lists
    the pairs whose half-space misses the whole cone. 0-based indices.
    """

    holds: bool
    witnesses: dict[tuple[int, int], Divisor]
    failing_pairs: tuple[tuple[int, int], ...]


def check_star_star(g: ResolutionGraph) -> StarStarReport:
    """Evaluate M.(1,...,1) and report the components pairing >= 0."""
    M = g.intersection_matrix()
    s = M.mulvec([1] * g.n)
    violations = tuple(i for i in range(g.n) if s[i] >= 0)
    return StarStarReport(holds=not violations, violations=violations)


def _synthesize_witness(g: ResolutionGraph, C, i: int, j: int) -> Divisor | None:
    """Integer witness for the ordered pair (i, j), or None if none exists.

    Uses the smallest generator column with C[i][k] < C[j][k], perturbed by
    eps times the interior vector C.(1,...,1) to make every pairing strictly
    negative; eps is halved until the perturbation keeps coefficient i below
    coefficient j, which must happen since the column gap is positive.
    """
    n = g.n
    k = next((k for k in range(n) if C[i][k] < C[j][k]), None)
    if k is None:
        return None
    column = C.column(k)
    interior = tuple(sum(row) for row in C.entries)
    eps = Fraction(1)
    while True:
        v = [column[r] + eps * interior[r] for r in range(n)]
        if v[i] < v[j]:
            break
        eps /= 2
    witness = Divisor(clear_denominators(v))
    M = g.intersection_matrix()
    if lipman_status(witness, M) is not ConeStatus.STRICT_LIPMAN or not witness[i] < witness[j]:
        raise InternalInvariantError(
            f"synthesized witness {witness.coeffs} failed re-verification for pair ({i}, {j})"
        )
    return witness


def check_star(g: ResolutionGraph) -> StarCertificate:
    """Decide condition (*) and collect one verified witness per pair.

    A single vertex has no ordered pairs, so the condition holds vacuously.
    """
    C = neg_inverse(g.intersection_matrix())
    witnesses: dict[tuple[int, int], Divisor] = {}
    failing: list[tuple[int, int]] = []
    for i in range(g.n):
        for j in range(g.n):
            if i == j:
                continue
            w = _synthesize_witness(g, C, i, j)
            if w is None:
                failing.append((i, j))
            else:
                witnesses[(i, j)] = w
    return StarCertificate(
        holds=not failing,
        witnesses=witnesses,
        failing_pairs=tuple(failing),
    )


def star_witness(g: ResolutionGraph, i: int, j: int) -> Divisor | None:
    """Witness for one ordered pair (0-based), or None if the pair fails."""
    if i == j:
        raise ValueError("witness pair needs two distinct vertices")
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise ValueError("vertex index out of range")
    C = neg_inverse(g.intersection_matrix())
    return _synthesize_witness(g, C, i, j)


def halfspace_coverage(divisors) -> set[tuple[int, int]]:
    """Ordered pairs (i, j) with some listed divisor satisfying D[i] < D[j]."""
    divisors = list(divisors)
    if not divisors:
        return set()
    n = divisors[0].n
    if any(d.n != n for d in divisors):
        raise ValueError("dimension mismatch")
    return {
        (i, j)
        for d in divisors
        for i in range(n)
        for j in range(n)
        if i != j and d[i] < d[j]
    }
