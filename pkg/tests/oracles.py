"""Brute-force reference implementations used only by the tests.

Everything here is deliberately independent of the library's decision
procedures: box search with interval propagation for witness existence,
naive quadratic-form scans for definiteness, and a reorderable variant
of the fundamental-cycle sequence.
"""

from itertools import permutations, product


def ceil_div(a: int, b: int) -> int:
    if b < 0:
        a, b = -a, -b
    return -((-a) // b)


def find_strict_witness(M, i, j, bound):
    """Search [1,bound]^n for integer D with M.D <= -1 rowwise and D[i] < D[j].

    Interval propagation to a fixpoint, then branch on the tightest
    undecided coordinate. Complete within the box: returns a verified
    witness tuple, or None when the box contains none.
    """
    n = M.n

    def propagate(lo, hi):
        changed = True
        while changed:
            changed = False
            if lo[j] < lo[i] + 1:
                lo[j] = lo[i] + 1
                changed = True
            if hi[i] > hi[j] - 1:
                hi[i] = hi[j] - 1
                changed = True
            for l in range(n):
                row = M[l]
                mins = [row[k] * (lo[k] if row[k] > 0 else hi[k]) for k in range(n)]
                total = sum(mins)
                if total > -1:
                    return False
                for k in range(n):
                    c = row[k]
                    if c == 0:
                        continue
                    limit = -1 - (total - mins[k])
                    if c > 0:
                        b = limit // c
                        if b < hi[k]:
                            hi[k] = b
                            changed = True
                    else:
                        b = ceil_div(limit, c)
                        if b > lo[k]:
                            lo[k] = b
                            changed = True
            if any(lo[k] > hi[k] for k in range(n)):
                return False
        return True

    def search(lo, hi):
        if not propagate(lo, hi):
            return None
        free = [k for k in range(n) if lo[k] < hi[k]]
        if not free:
            D = tuple(lo)
            if all(x <= -1 for x in M.mulvec(D)) and D[i] < D[j]:
                return D
            return None
        k = min(free, key=lambda k: hi[k] - lo[k])
        for v in range(lo[k], hi[k] + 1):
            nlo, nhi = list(lo), list(hi)
            nlo[k] = nhi[k] = v
            got = search(nlo, nhi)
            if got is not None:
                return got
        return None

    return search([1] * n, [bound] * n)


def naive_find_witness(M, i, j, bound):
    """Same question as find_strict_witness by full product scan. n <= 3 only."""
    for D in product(range(1, bound + 1), repeat=M.n):
        if D[i] < D[j] and all(x <= -1 for x in M.mulvec(D)):
            return D
    return None


def negdef_brute(M, box=5):
    """x^T M x < 0 for every nonzero integer x with entries in [-box, box]."""
    n = M.n
    for x in product(range(-box, box + 1), repeat=n):
        if all(v == 0 for v in x):
            continue
        q = sum(M[a][b] * x[a] * x[b] for a in range(n) for b in range(n))
        if q >= 0:
            return False
    return True


def laufer_with_order(M, order):
    """Fundamental-cycle sequence with an arbitrary tie-break priority."""
    n = M.n
    Z = [1] * n
    s = list(M.mulvec(Z))
    while True:
        bad = next((idx for idx in order if s[idx] > 0), None)
        if bad is None:
            return tuple(Z)
        Z[bad] += 1
        for l in range(n):
            s[l] += M[l][bad]


def all_orders_fundamental_cycles(M):
    """Set of cycles the sequence can reach under every tie-break order."""
    return {laufer_with_order(M, order) for order in permutations(range(M.n))}


def graphs_isomorphic(g1, g2) -> bool:
    """Exact isomorphism test by permutation search; fine for n <= 5."""
    if g1.n != g2.n:
        return False
    n = g1.n
    for sigma in permutations(range(n)):
        if any(g1.weights[sigma[i]] != g2.weights[i] for i in range(n)):
            continue
        if any(g1.genera[sigma[i]] != g2.genera[i] for i in range(n)):
            continue
        if all(
            g1.mult[sigma[i]][sigma[j]] == g2.mult[i][j]
            for i in range(n)
            for j in range(n)
        ):
            return True
    return False
