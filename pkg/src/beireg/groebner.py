"""Binomial ideals of graphs and their lex Groebner bases.

The polynomial ring has 2n variables x_1..x_n, y_1..y_n ordered
lexicographically with x_1 > ... > x_n > y_1 > ... > y_n.  Monomials are
exponent tuples compared directly (position 0 most significant).

Everything stays inside the class of monic differences m - m': the
S-polynomial of two such binomials is again a difference of monomials, and
reduction replaces one monomial at a time, so Buchberger's algorithm never
leaves the class.  Leaving it would signal a bug and raises immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
import heapq


GROEBNER_MAX_VARIABLES = 20


class NonBinomialError(RuntimeError):
    """Internal: an S-polynomial or reduction left the binomial class."""


class NonSquarefreeLeadError(ValueError):
    """A Groebner basis element has a non-squarefree lead monomial."""


@dataclass(frozen=True)
class PolynomialContext:
    """Ring data: n graph vertices give 2n variables under a fixed lex order."""

    n: int

    @property
    def nvars(self):
        return 2 * self.n

    def variable_names(self):
        return [f"x{i}" for i in range(1, self.n + 1)] + [
            f"y{i}" for i in range(1, self.n + 1)]

    def monomial_string(self, mono):
        names = self.variable_names()
        parts = [f"{names[i]}^{e}" if e > 1 else names[i]
                 for i, e in enumerate(mono) if e]
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Binomial:
    """Monic difference lead - trail with lead > trail in the lex order."""

    lead: tuple[int, ...]
    trail: tuple[int, ...]
    sign: int = -1

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")
        if self.lead <= self.trail:
            raise ValueError("lead must exceed trail in the term order")

    def to_string(self, ctx):
        op = "-" if self.sign == -1 else "+"
        return f"{ctx.monomial_string(self.lead)} {op} {ctx.monomial_string(self.trail)}"


def _mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _quotient(a, b):
    return tuple(x - y for x, y in zip(a, b))


def binomial_edge_ideal(g, ctx=None):
    """Generators x_i y_j - x_j y_i of the binomial edge ideal, one per
    edge {i, j} with i < j (variables use the graph's 0-based ids shifted
    to 1-based positions)."""
    ctx = ctx or PolynomialContext(g.n)
    gens = []
    for u, v in g.edges():
        lead = [0] * ctx.nvars
        trail = [0] * ctx.nvars
        lead[u] = 1
        lead[ctx.n + v] = 1
        trail[v] = 1
        trail[ctx.n + u] = 1
        gens.append(Binomial(tuple(lead), tuple(trail)))
    return gens


def _spoly(f, g):
    """S-polynomial of two monic differences, as a monomial pair or None
    when the terms cancel."""
    big = _lcm(f.lead, g.lead)
    m1 = _mul(_quotient(big, g.lead), g.trail)
    m2 = _mul(_quotient(big, f.lead), f.trail)
    if m1 == m2:
        return None
    return (m1, m2) if m1 > m2 else (m2, m1)


def _normal_form(lead, trail, basis):
    """Fully reduce the difference lead - trail; returns a monomial pair or
    None when it reduces to zero."""
    while True:
        reducer = next((b for b in basis if _divides(b.lead, lead)), None)
        if reducer is None:
            break
        lead = _mul(_quotient(lead, reducer.lead), reducer.trail)
        if lead == trail:
            return None
        if lead < trail:
            lead, trail = trail, lead
    while True:
        reducer = next((b for b in basis if _divides(b.lead, trail)), None)
        if reducer is None:
            break
        trail = _mul(_quotient(trail, reducer.lead), reducer.trail)
        # substitution strictly decreases the trail, so it stays below lead
        if trail >= lead:
            raise NonBinomialError("trail reduction violated the term order")
    return lead, trail


def lex_groebner(gens, ctx, check=True):
    """Reduced Groebner basis of a list of monic binomial differences.

    Pairs are processed by increasing lcm (degree, then lex), with the
    coprime-lead criterion.  The output is interreduced, sorted by lead
    monomial, and (when check is set) certified by reducing every
    S-polynomial of the result to zero.
    """
    if ctx.nvars > GROEBNER_MAX_VARIABLES:
        raise ValueError(
            f"groebner computation is limited to {GROEBNER_MAX_VARIABLES} variables")
    basis = []
    for b in gens:
        if not isinstance(b, Binomial) or b.sign != -1:
            raise NonBinomialError("generators must be monic differences")
        if b not in basis:
            basis.append(b)

    heap = []
    counter = 0

    def push_pairs(k):
        nonlocal counter
        f = basis[k]
        for i in range(k):
            g = basis[i]
            big = _lcm(f.lead, g.lead)
            if big == _mul(f.lead, g.lead):
                continue  # coprime leads: S-polynomial reduces to zero
            heapq.heappush(heap, (sum(big), big, counter, i, k))
            counter += 1

    for k in range(len(basis)):
        push_pairs(k)

    while heap:
        _, _, _, i, k = heapq.heappop(heap)
        pair = _spoly(basis[i], basis[k])
        if pair is None:
            continue
        nf = _normal_form(pair[0], pair[1], basis)
        if nf is None:
            continue
        basis.append(Binomial(nf[0], nf[1]))
        push_pairs(len(basis) - 1)

    # interreduce: drop elements whose lead is divisible by another lead,
    # then tail-reduce each against the rest
    minimal = [b for b in basis
               if not any(o is not b and _divides(o.lead, b.lead) for o in basis)]
    reduced = []
    for b in minimal:
        others = [o for o in minimal if o is not b]
        nf = _normal_form(b.lead, b.trail, others)
        if nf is None or nf[0] != b.lead:
            raise NonBinomialError("interreduction removed a minimal lead")
        reduced.append(Binomial(nf[0], nf[1]))
    reduced.sort(key=lambda b: (b.lead, b.trail))

    if check:
        for i in range(len(reduced)):
            for k in range(i + 1, len(reduced)):
                pair = _spoly(reduced[i], reduced[k])
                if pair is not None and _normal_form(pair[0], pair[1], reduced) is not None:
                    raise NonBinomialError("zero-reduction certificate failed")
    return reduced


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal with inclusion-minimal generators stored
    as vertex bitmasks over nvars positions."""

    nvars: int
    gens: tuple[int, ...]

    @classmethod
    def from_supports(cls, nvars, masks):
        masks = sorted(set(int(m) for m in masks if m))
        minimal = [m for m in masks
                   if not any(o != m and o & m == o for o in masks)]
        return cls(nvars=nvars, gens=tuple(sorted(minimal)))

    @classmethod
    def from_exponents(cls, nvars, exponent_vectors):
        masks = []
        for vec in exponent_vectors:
            if any(e not in (0, 1) for e in vec):
                raise NonSquarefreeLeadError(f"non-squarefree generator {vec}")
            masks.append(sum(1 << i for i, e in enumerate(vec) if e))
        return cls.from_supports(nvars, masks)

    def supports(self):
        """Generators as sorted variable-index tuples."""
        out = []
        for m in self.gens:
            idx = []
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                idx.append(v)
            out.append(tuple(idx))
        return out


def initial_ideal(gb, ctx):
    """Minimal generators of the ideal of lead monomials of a reduced
    Groebner basis; raises when any lead is non-squarefree."""
    for b in gb:
        if any(e > 1 for e in b.lead):
            raise NonSquarefreeLeadError(
                f"non-squarefree lead {ctx.monomial_string(b.lead)}")
    return MonomialIdeal.from_exponents(ctx.nvars, [b.lead for b in gb])
