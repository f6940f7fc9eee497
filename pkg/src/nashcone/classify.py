"""Top-level classification and example machinery.

Pulls the pieces together: rationality decided two ways (Artin's
fundamental-cycle genus test, and the structural tree/genus/weight
characterization), a three-state bijectivity verdict for the Nash map,
constructors for the named graph families used in tests and docs, and an
exhaustive small-graph enumerator with isomorphism rejection.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations, product

from .cone import ConeStatus, Divisor, fundamental_cycle, lipman_status, pair
from .conditions import StarCertificate, StarStarReport, check_star, check_star_star
from .errors import InternalInvariantError
from .graph import (
    IntersectionMatrix,
    ResolutionGraph,
    ValidationReport,
    _leading_minors_negdef,
    canonical_intersections,
    validate,
)

__all__ = [
    "NashVerdict",
    "StructuralReport",
    "ClassificationReport",
    "arithmetic_genus",
    "is_rational_artin",
    "structural_rationality",
    "nash_verdict",
    "an_witness_divisors",
    "make_family",
    "enumerate_graphs",
]


class NashVerdict(enum.Enum):
    """What the sufficient conditions allow us to conclude.

    The conditions are one-directional: when both fail the honest answer
    is Inconclusive, never "not bijective".
    """

    BIJECTIVE_BY_STAR_STAR = "BijectiveByStarStar"
    BIJECTIVE_BY_STAR = "BijectiveByStar"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class StructuralReport:
    """Tree / genus-0 / weight-vs-valency characterization of rationality.

    gamma_i is the number of edge-ends at vertex i, i.e. the sum of the
    off-diagonal intersection numbers in row i; iii_holds means
    |weights[i]| > gamma_i everywhere, which is the same inequality as
    condition (**) rearranged.
    """

    tree: bool
    all_genus_zero: bool
    iii_holds: bool
    verdict: bool


@dataclass(frozen=True)
class ClassificationReport:
    graph: ResolutionGraph
    validation: ValidationReport
    star_star: StarStarReport
    star: StarCertificate
    fundamental_cycle: Divisor
    pa_fundamental: int
    artin_rational: bool
    structural: StructuralReport
    nash_verdict: NashVerdict
    notes: tuple[str, ...]


def arithmetic_genus(g: ResolutionGraph, D: Divisor) -> int:
    """p_a(D) = 1 + (D.D + K.D)/2, exact.

    Adjunction makes D.D + K.D even for every integral cycle; a failed
    parity check means corrupted inputs, not a domain condition.
    """
    if D.n != g.n:
        raise ValueError(f"divisor has {D.n} coefficients, graph has {g.n} vertices")
    if D.is_zero():
        raise ValueError("arithmetic genus of the zero divisor is undefined here")
    M = g.intersection_matrix()
    k = canonical_intersections(g)
    total = pair(D, D, M) + sum(D[i] * k[i] for i in range(g.n))
    if total % 2 != 0:
        raise InternalInvariantError(f"D.D + K.D = {total} is odd; adjunction parity broken")
    return 1 + total // 2


def is_rational_artin(g: ResolutionGraph) -> bool:
    """Artin's test: the fundamental cycle has arithmetic genus zero."""
    return arithmetic_genus(g, fundamental_cycle(g)) == 0


def structural_rationality(g: ResolutionGraph) -> StructuralReport:
    """Check tree shape, vanishing genera, and |E_i^2| > gamma(E_i)."""
    n = g.n
    edges = g.edges()
    simple = all(m == 1 for _, _, m in edges)
    connected = validate(g).connected
    tree = connected and simple and len(edges) == n - 1
    all_genus_zero = all(gi == 0 for gi in g.genera)
    iii = all(-g.weights[i] > sum(g.mult[i]) for i in range(n))
    return StructuralReport(
        tree=tree,
        all_genus_zero=all_genus_zero,
        iii_holds=iii,
        verdict=tree and all_genus_zero and iii,
    )


_GENUS_NOTE = "component smoothness is inferred from arithmetic genus zero in the structural check"
_INCONCLUSIVE_NOTE = (
    "condition (*) fails; the criteria here are sufficient only and make no claim either way"
)


def nash_verdict(g: ResolutionGraph) -> ClassificationReport:
    """Full report for one graph.

    Raises ValueError when the graph is disconnected or the intersection
    matrix is not negative definite; a non-minimal graph only produces a
    warning note and the analysis proceeds.
    """
    report = validate(g)
    if not report.analyzable:
        problems = [m for m in report.messages if not m.startswith("warning")]
        raise ValueError("; ".join(problems) or "graph cannot be analyzed")

    star_star = check_star_star(g)
    star = check_star(g)
    Z = fundamental_cycle(g)
    pa = arithmetic_genus(g, Z)
    structural = structural_rationality(g)

    if star_star.holds:
        verdict = NashVerdict.BIJECTIVE_BY_STAR_STAR
    elif star.holds:
        verdict = NashVerdict.BIJECTIVE_BY_STAR
    else:
        verdict = NashVerdict.INCONCLUSIVE

    notes = [m for m in report.messages if m.startswith("warning")]
    if structural.all_genus_zero:
        notes.append(_GENUS_NOTE)
    if verdict is NashVerdict.INCONCLUSIVE:
        notes.append(_INCONCLUSIVE_NOTE)

    return ClassificationReport(
        graph=g,
        validation=report,
        star_star=star_star,
        star=star,
        fundamental_cycle=Z,
        pa_fundamental=pa,
        artin_rational=pa == 0,
        structural=structural,
        nash_verdict=verdict,
        notes=tuple(notes),
    )


def an_witness_divisors(n: int) -> tuple[Divisor, Divisor]:
    """The classical pair of strict anti-nef divisors on the A_n chain.

    alpha_k = n*k - k*(k-1)/2 gives one divisor; its reversal gives the
    other. Together their coefficient orderings cover every fundamental
    half-space. Both are re-verified strict before being returned.
    """
    if n < 1:
        raise ValueError("chain length must be at least 1")
    alphas = tuple(n * k - k * (k - 1) // 2 for k in range(1, n + 1))
    d1 = Divisor(alphas)
    d2 = Divisor(alphas[::-1])
    M = make_family("an", n).intersection_matrix()
    for d in (d1, d2):
        if lipman_status(d, M) is not ConeStatus.STRICT_LIPMAN:
            raise InternalInvariantError(f"chain divisor {d.coeffs} is not strictly anti-nef")
    return d1, d2


def _path_mult(n: int) -> list[list[int]]:
    mult = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        mult[i][i + 1] = mult[i + 1][i] = 1
    return mult


def make_family(kind: str, *params: int) -> ResolutionGraph:
    """Construct a named example graph.

    Kinds: "an" (chain of n (-2)-curves, n >= 1), "dn" (the chain with a
    fork at one end, n >= 4), "star3" (three arms of weight -n on a -2
    center, n >= 5), "vertex" (single vertex, params genus >= 0 and
    weight <= -1), "cycle" (m genus-0 vertices in a cycle of weight w,
    m >= 3 and w <= -3 so the cycle stays negative definite).
    """
    arity = {"an": 1, "dn": 1, "star3": 1, "vertex": 2, "cycle": 2}
    if kind not in arity:
        raise ValueError(f"unknown family kind: {kind!r}")
    if len(params) != arity[kind]:
        raise ValueError(f"family {kind!r} takes {arity[kind]} parameter(s), got {len(params)}")
    if kind == "an":
        (n,) = params
        if n < 1:
            raise ValueError("an: n must be >= 1")
        return ResolutionGraph(
            weights=(-2,) * n, genera=(0,) * n, mult=tuple(map(tuple, _path_mult(n)))
        )
    if kind == "dn":
        (n,) = params
        if n < 4:
            raise ValueError("dn: n must be >= 4")
        mult = _path_mult(n)
        # fork: drop the chain's last link, hang both E_{n-1} and E_n on E_{n-2}
        mult[n - 2][n - 1] = mult[n - 1][n - 2] = 0
        mult[n - 3][n - 1] = mult[n - 1][n - 3] = 1
        return ResolutionGraph(
            weights=(-2,) * n, genera=(0,) * n, mult=tuple(map(tuple, mult))
        )
    if kind == "star3":
        (n,) = params
        if n < 5:
            raise ValueError("star3: n must be >= 5")
        mult = [[0] * 4 for _ in range(4)]
        for arm in range(3):
            mult[arm][3] = mult[3][arm] = 1
        return ResolutionGraph(
            weights=(-n, -n, -n, -2), genera=(0, 0, 0, 0), mult=tuple(map(tuple, mult))
        )
    if kind == "vertex":
        genus, weight = params
        if genus < 0:
            raise ValueError("vertex: genus must be >= 0")
        if weight > -1:
            raise ValueError("vertex: weight must be <= -1")
        return ResolutionGraph(weights=(weight,), genera=(genus,), mult=((0,),))
    m, weight = params  # remaining kind: cycle
    if m < 3:
        raise ValueError("cycle: length must be >= 3")
    if weight > -3:
        raise ValueError("cycle: weight must be <= -3")
    mult = [[0] * m for _ in range(m)]
    for i in range(m):
        j = (i + 1) % m
        mult[i][j] = mult[j][i] = 1
    return ResolutionGraph(
        weights=(weight,) * m, genera=(0,) * m, mult=tuple(map(tuple, mult))
    )


def _connected_mult(mult: tuple[tuple[int, ...], ...], n: int) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in range(n):
            if mult[v][u] > 0 and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def _upper_encoding(mult, n: int) -> tuple[int, ...]:
    return tuple(mult[i][j] for i in range(n) for j in range(i + 1, n))


def _apply_perm_mult(mult, sigma, n: int) -> tuple[int, ...]:
    return tuple(mult[sigma[i]][sigma[j]] for i in range(n) for j in range(i + 1, n))


def enumerate_graphs(max_vertices: int, min_weight: int, max_genus: int, max_mult: int = 1):
    """Yield every connected negative-definite graph within the bounds,
    one representative per isomorphism class, in a deterministic order.

    Bounds: vertex count 1..max_vertices, weights min_weight..-1, genera
    0..max_genus, edge multiplicities 0..max_mult. Vertices are
    interchangeable, so a class representative is the lexicographically
    least (structure, weights, genera) triple under relabeling; weights
    are reduced by the structure's automorphisms, genera by the
    stabilizer of the chosen weights.
    """
    if max_vertices < 1:
        raise ValueError("max_vertices must be >= 1")
    if min_weight > -1:
        raise ValueError("min_weight must be <= -1")
    if max_genus < 0:
        raise ValueError("max_genus must be >= 0")
    if max_mult < 1:
        raise ValueError("max_mult must be >= 1")

    weight_range = range(min_weight, 0)
    genus_range = range(max_genus + 1)

    for n in range(1, max_vertices + 1):
        npairs = n * (n - 1) // 2
        perms = list(permutations(range(n)))
        for enc in product(range(max_mult + 1), repeat=npairs):
            mult = [[0] * n for _ in range(n)]
            pos = 0
            for i in range(n):
                for j in range(i + 1, n):
                    mult[i][j] = mult[j][i] = enc[pos]
                    pos += 1
            mult_t = tuple(map(tuple, mult))
            if not _connected_mult(mult_t, n):
                continue
            if any(_apply_perm_mult(mult_t, s, n) < enc for s in perms):
                continue  # not the canonical labeling of its class
            aut = [s for s in perms if _apply_perm_mult(mult_t, s, n) == enc]
            for weights in product(weight_range, repeat=n):
                if any(tuple(weights[s[i]] for i in range(n)) < weights for s in aut):
                    continue
                rows = [
                    [weights[i] if i == j else mult[i][j] for j in range(n)]
                    for i in range(n)
                ]
                if not _leading_minors_negdef(rows):
                    continue
                stab = [s for s in aut if tuple(weights[s[i]] for i in range(n)) == weights]
                for genera in product(genus_range, repeat=n):
                    if any(tuple(genera[s[i]] for i in range(n)) < genera for s in stab):
                        continue
                    yield ResolutionGraph(weights=weights, genera=genera, mult=mult_t)
