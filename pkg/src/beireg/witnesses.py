"""Witness graphs realizing prescribed invariant triples, and the
exhaustive explorer for the open induced-path-length-2 range.

gen_lrc builds a connected graph with prescribed (induced path length,
regularity, maximal clique count) for 2 <= ell <= r <= c, an apex vertex
carrying triangles and pendant edges plus a pendant path; ell = 1 forces
r = 1 and yields the disconnected edge-plus-isolated-vertices family.

gen_lrw builds a connected graph with prescribed (induced path length,
regularity, n - omega + 1) for 3 <= ell <= r <= wbar out of a path, two
overlapping cliques and a pendant matching; the value is certified by the
cut-vertex gluing chain.

Every generated graph is checked against its own postconditions before it
is returned; a failure is a bug, not an input condition.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graphs as gr
from . import regularity as rg

SEARCH_MAX_N = 7


@dataclass(frozen=True)
class LrcRequest:
    ell: int
    r: int
    c: int

    def __post_init__(self):
        if not 1 <= self.ell <= self.r <= self.c:
            raise ValueError("need 1 <= ell <= r <= c")
        if self.ell == 1 and self.r >= 2:
            raise ValueError(
                "no graph has induced path length 1 and regularity above 1: "
                "such graphs are a complete graph plus isolated vertices, "
                "whose regularity is 1")


@dataclass(frozen=True)
class LrwRequest:
    ell: int
    r: int
    wbar: int

    def __post_init__(self):
        if self.ell == 2:
            raise ValueError(
                "ell = 2 is rejected: no connected graph attains "
                "(ell, reg, n - omega + 1) = (2, 3, 3), and which pairs are "
                "attainable at ell = 2 is an open question")
        if not 3 <= self.ell <= self.r <= self.wbar:
            raise ValueError("need 3 <= ell <= r <= wbar")


def _check(condition, message):
    if not condition:
        raise RuntimeError(f"witness postcondition failed: {message}")


def gen_lrc(ell, r, c):
    """Connected graph with prescribed induced path length, regularity and
    maximal clique count (ell = 1 gives the disconnected family)."""
    q = LrcRequest(ell, r, c)

    if q.ell == 1:
        # an edge plus c-1 isolated vertices
        labels = ["k1", "k2"] + [f"w{j}" for j in range(1, c)]
        g = gr.Graph.from_edges(1 + c, [(0, 1)], labels)
        _check(gr.ell(g) == 1, "ell")
        _check(len(gr.maximal_cliques(g)) == c, "clique count")
        report = rg.structural_reg(g)
        _check(report.exact and report.value == 1, "regularity")
        return g

    triangles = r if q.ell == 2 else r - q.ell + 2
    pendants = c - r
    tail = 0 if q.ell == 2 else q.ell - 2

    labels = ["v"]
    edges = []
    nxt = 1
    first_triangle_vertex = None
    for i in range(1, triangles + 1):
        a, b = nxt, nxt + 1
        nxt += 2
        labels += [f"v{i}", f"v{i}'"]
        edges += [(0, a), (0, b), (a, b)]
        if first_triangle_vertex is None:
            first_triangle_vertex = a
    for j in range(1, pendants + 1):
        labels.append(f"w{j}")
        edges.append((0, nxt))
        nxt += 1
    prev = first_triangle_vertex
    for k in range(1, tail + 1):
        labels.append(f"u{k}")
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1

    g = gr.Graph.from_edges(nxt, edges, labels)
    _check(gr.is_connected(g), "connected")
    _check(gr.ell(g) == q.ell, "ell")
    _check(len(gr.maximal_cliques(g)) == q.c, "clique count")
    report = rg.structural_reg(g)
    _check(report.exact and report.value == q.r, "regularity")
    return g


def gen_lrw(ell, r, wbar):
    """Connected graph with prescribed induced path length, regularity and
    n - omega + 1, certified by the cut-vertex gluing chain."""
    q = LrwRequest(ell, r, wbar)

    path_len = q.ell + 1
    u_size = v_size = q.wbar - q.r
    q_size = q.r - q.ell

    labels = [str(i) for i in range(1, path_len + 1)]
    edges = [(i, i + 1) for i in range(path_len - 1)]
    nxt = path_len
    u_ids = list(range(nxt, nxt + u_size))
    labels += [f"u{k}" for k in range(1, u_size + 1)]
    nxt += u_size
    v_ids = list(range(nxt, nxt + v_size))
    labels += [f"v{k}" for k in range(1, v_size + 1)]
    nxt += v_size
    q_ids = list(range(nxt, nxt + q_size))
    labels += [f"q{k}" for k in range(1, q_size + 1)]
    nxt += q_size
    qp_ids = list(range(nxt, nxt + q_size))
    labels += [f"q{k}'" for k in range(1, q_size + 1)]
    nxt += q_size

    # complete graphs on {1,2} u U and on {2,3} u V u Q (0-based: 0,1 and 1,2)
    k_set = [0, 1] + u_ids
    kp_set = [1, 2] + v_ids + q_ids
    seen = set(edges)
    for group in (k_set, kp_set):
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                e = (min(a, b), max(a, b))
                if e not in seen:
                    seen.add(e)
                    edges.append(e)
    edges += [(qk, qpk) for qk, qpk in zip(q_ids, qp_ids)]

    g = gr.Graph.from_edges(nxt, edges, labels)
    _check(gr.is_connected(g), "connected")
    _check(gr.ell(g) == q.ell, "ell")
    _check(g.n - gr.clique_number(g) + 1 == q.wbar, "n - omega + 1")
    report = rg.structural_reg(g)
    _check(report.exact and report.value == q.r, "regularity")
    return g


def search_l2(r, wbar, max_omega):
    """Exhaustively list connected graphs with induced path length 2 and
    n - omega + 1 = wbar whose oracle regularity equals r, for clique
    numbers up to max_omega.

    Hosts are a complete graph on omega vertices plus wbar - 1 extra
    vertices with every edge pattern among the extras and towards the
    clique; this reaches every graph with the prescribed clique number and
    vertex count.  The empty list is a valid (negative) answer.
    """
    if not 2 <= r <= wbar:
        raise ValueError("need 2 <= r <= wbar")
    if max_omega < 2:
        raise ValueError("max_omega must be at least 2")
    if max_omega + wbar - 1 > SEARCH_MAX_N:
        raise ValueError(
            f"size gate exceeded: omega={max_omega}, wbar={wbar} needs "
            f"n={max_omega + wbar - 1} > {SEARCH_MAX_N}")

    hits = []
    seen = set()
    for omega in range(2, max_omega + 1):
        n = omega + wbar - 1
        extras = list(range(omega, n))
        base = [(i, j) for i in range(omega) for j in range(i + 1, omega)]
        optional = [(a, b) for i, a in enumerate(extras) for b in extras[i + 1:]]
        optional += [(k, a) for a in extras for k in range(omega)]
        for mask in range(1 << len(optional)):
            edges = base + [e for i, e in enumerate(optional) if mask >> i & 1]
            g = gr.Graph.from_edges(n, edges)
            if not gr.is_connected(g):
                continue
            if gr.clique_number(g) != omega:
                continue
            if gr.ell(g) != 2:
                continue
            key = gr.canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
            if rg.oracle_reg(g) == r:
                hits.append(g)
    hits.sort(key=lambda g: (g.n, gr.canonical_form(g)))
    return hits
