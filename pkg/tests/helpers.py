"""Independent brute-force oracles the tests check the library against.

Everything here is deliberately naive: exhaustive enumeration and dense
Fraction arithmetic, sharing no code with the implementations under test.
"""

from fractions import Fraction
from itertools import combinations


# ---------------------------------------------------------------------------
# graph oracles

def brute_longest_induced_path(g):
    """(length, lexicographically least sequence) by enumerating every
    injective vertex sequence."""
    best = (0, (0,))

    def is_induced_path(seq):
        for i, a in enumerate(seq):
            for j in range(i + 1, len(seq)):
                adjacent = g.has_edge(a, seq[j])
                if j == i + 1 and not adjacent:
                    return False
                if j > i + 1 and adjacent:
                    return False
        return True

    def extend(seq):
        nonlocal best
        cand = (len(seq) - 1, seq)
        if cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
            best = cand
        for v in range(g.n):
            if v not in seq and is_induced_path(seq + (v,)):
                extend(seq + (v,))

    for s in range(g.n):
        extend((s,))
    return best


def brute_maximal_cliques(g):
    verts = range(g.n)
    cliques = []
    for k in range(1, g.n + 1):
        for sub in combinations(verts, k):
            if all(g.has_edge(a, b) for a, b in combinations(sub, 2)):
                cliques.append(set(sub))
    maximal = [c for c in cliques if not any(c < d for d in cliques)]
    return sorted(tuple(sorted(c)) for c in maximal)


def brute_is_chordal(g):
    """No induced cycle of length >= 4."""
    for k in range(4, g.n + 1):
        for sub in combinations(range(g.n), k):
            degs = [sum(1 for b in sub if b != a and g.has_edge(a, b)) for a in sub]
            if any(d != 2 for d in degs):
                continue
            # all degrees 2: a disjoint union of cycles; connected means one
            seen = {sub[0]}
            stack = [sub[0]]
            while stack:
                a = stack.pop()
                for b in sub:
                    if b not in seen and g.has_edge(a, b):
                        seen.add(b)
                        stack.append(b)
            if len(seen) == k:
                return False
    return True


# ---------------------------------------------------------------------------
# homology oracle (dense, Fraction arithmetic)

def _fraction_rank(matrix):
    if not matrix or not matrix[0]:
        return 0
    m = [[Fraction(x) for x in row] for row in matrix]
    rows, cols = len(m), len(m[0])
    rank = 0
    pivot_row = 0
    for c in range(cols):
        pr = next((r for r in range(pivot_row, rows) if m[r][c] != 0), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        pv = m[pivot_row][c]
        for r in range(rows):
            if r != pivot_row and m[r][c] != 0:
                f = m[r][c] / pv
                for cc in range(c, cols):
                    m[r][cc] -= f * m[pivot_row][cc]
        pivot_row += 1
        rank += 1
        if pivot_row == rows:
            break
    return rank


def naive_monomial_regularity(gen_supports, nverts):
    """Regularity of the quotient by a squarefree monomial ideal: full
    2^nverts sweep with dense rational homology."""
    gens = [frozenset(s) for s in gen_supports]
    if not gens:
        return 0
    best = 0
    for size in range(1, nverts + 1):
        for sigma in combinations(range(nverts), size):
            sset = set(sigma)
            faces_by_size = {0: [frozenset()]}
            for k in range(1, size + 1):
                faces_by_size[k] = [
                    frozenset(c) for c in combinations(sigma, k)
                    if not any(gen <= set(c) for gen in gens)]
            max_dim = max((k for k, fs in faces_by_size.items() if fs), default=0) - 1

            def boundary(k):
                """Matrix of the map from size-k faces to size-(k-1) faces."""
                rows = faces_by_size.get(k - 1, [])
                cols = faces_by_size.get(k, [])
                idx = {f: i for i, f in enumerate(rows)}
                mat = [[0] * len(cols) for _ in rows]
                for ci, f in enumerate(cols):
                    for pos, v in enumerate(sorted(f)):
                        sub = f - {v}
                        if sub in idx:
                            mat[idx[sub]][ci] = (-1) ** pos
                return mat

            ranks = {}
            for k in range(0, size + 2):
                ranks[k] = _fraction_rank(boundary(k)) if faces_by_size.get(k) else 0
            for h in range(0, max_dim + 1):
                betti = len(faces_by_size.get(h + 1, [])) - ranks[h + 1] - ranks[h + 2]
                assert betti >= 0
                if betti > 0:
                    best = max(best, h + 1)
    return best


# ---------------------------------------------------------------------------
# independent Groebner-ness check (dict polynomials over Fractions)

def _poly_sub(p, q):
    out = dict(p)
    for mono, c in q.items():
        out[mono] = out.get(mono, Fraction(0)) - c
        if out[mono] == 0:
            del out[mono]
    return out


def _poly_scale(p, mono, coeff):
    return {tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in p.items()}


def _lead(p):
    return max(p)


def _reduce_full(p, basis_polys):
    """Reduce the largest reducible monomial until none remains."""
    p = dict(p)
    while True:
        target = None
        for mono in sorted(p, reverse=True):
            for b in basis_polys:
                bl = _lead(b)
                if all(x <= y for x, y in zip(bl, mono)):
                    target = (mono, b, bl)
                    break
            if target:
                break
        if target is None:
            return p
        mono, b, bl = target
        quot = tuple(x - y for x, y in zip(mono, bl))
        p = _poly_sub(p, _poly_scale(b, quot, p[mono] / b[bl]))


def assert_is_groebner(basis):
    """Every S-polynomial of the basis must reduce to zero against it."""
    polys = [{b.lead: Fraction(1), b.trail: Fraction(b.sign)} for b in basis]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            f, g = polys[i], polys[j]
            lf, lg = _lead(f), _lead(g)
            lcm = tuple(max(a, b) for a, b in zip(lf, lg))
            s = _poly_sub(
                _poly_scale(f, tuple(a - b for a, b in zip(lcm, lf)), Fraction(1) / f[lf]),
                _poly_scale(g, tuple(a - b for a, b in zip(lcm, lg)), Fraction(1) / g[lg]))
            remainder = _reduce_full(s, polys)
            assert not remainder, f"S-polynomial of {i},{j} does not reduce to zero"
