"""Hilbert series of monomial quotients and the invariant pipeline.

The Hilbert numerator N(t) with HS = N(t)/(1-t)^q is computed by the
pivot-variable recursion N(I) = N(I + <x>) + t*N(I : x), memoized on the
canonicalized generator set.  Krull dimension comes from the smallest
transversal of the generator supports.  For a connected bipartite graph the
edge ring is Cohen-Macaulay, which turns the h-polynomial degree and the
Krull dimension into the full invariant tuple (reg, deg h, pdim, depth, dim).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import DisconnectedError, Graph, is_connected
from .groebner import DEGREVLEX, MonomialIdeal, MonomialOrder, ReducedGB, buchberger, initial_ideal
from .toric import EmptyEdgeSetError, Monomial, toric_generators, validate_kernel_membership

IntPoly = tuple[int, ...]


class InexactDivisionError(ArithmeticError):
    """(1-t)^(q-dim) does not divide the numerator: the dimension is wrong."""


@dataclass(frozen=True)
class HilbertData:
    numerator: IntPoly
    krull_dim: int
    h_poly: IntPoly


@dataclass(frozen=True)
class InvariantTuple:
    reg: int
    deg_h: int
    pdim: int
    depth: int
    dim: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.reg, self.deg_h, self.pdim, self.depth, self.dim)


def poly_trim(p) -> IntPoly:
    p = tuple(p)
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def poly_degree(p: IntPoly) -> int:
    if not poly_trim(p):
        raise ValueError("degree of the zero polynomial is undefined")
    return len(poly_trim(p)) - 1


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    out = [0] * (len(a) + len(b) - 1 if a and b else 0)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def _poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a), len(b))
    return poly_trim(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                           for i in range(n)))


def _support_mask(m: Monomial) -> int:
    b = 0
    for i, e in enumerate(m):
        if e:
            b |= 1 << i
    return b


def _minimalize(gens) -> tuple[Monomial, ...]:
    kept: list[Monomial] = []
    for m in sorted(set(gens), key=lambda g: (sum(g), g)):
        if not any(all(x <= y for x, y in zip(k, m)) for k in kept):
            kept.append(m)
    return tuple(kept)


_numerator_memo: dict[tuple, IntPoly] = {}


def _numerator(gens: tuple[Monomial, ...]) -> IntPoly:
    if not gens:
        return (1,)
    # complete-intersection base case: pairwise disjoint supports
    seen = 0
    disjoint = True
    for m in gens:
        mask = _support_mask(m)
        if mask & seen:
            disjoint = False
            break
        seen |= mask
    if disjoint:
        out: IntPoly = (1,)
        for m in gens:
            deg = sum(m)
            if deg == 0:
                return ()  # unit ideal, zero quotient
            out = poly_mul(out, (1,) + (0,) * (deg - 1) + (-1,))
        return out
    cached = _numerator_memo.get(gens)
    if cached is not None:
        return cached
    q = len(gens[0])
    freq = [0] * q
    for m in gens:
        for i, e in enumerate(m):
            if e:
                freq[i] += 1
    pivot = max(range(q), key=lambda i: freq[i])
    assert freq[pivot] >= 2
    unit = tuple(1 if i == pivot else 0 for i in range(q))
    left = tuple(sorted([m for m in gens if m[pivot] == 0] + [unit]))
    colon = _minimalize(
        tuple(m[:pivot] + (m[pivot] - 1,) + m[pivot + 1:] if m[pivot] else m for m in gens)
    )
    right = _numerator(colon)
    result = _poly_add(_numerator(left), (0,) + right)
    _numerator_memo[gens] = result
    return result


def hilbert_numerator(ideal: MonomialIdeal, q: int) -> IntPoly:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^q of the quotient by a
    monomial ideal given by minimal generators."""
    if ideal.nvars != q:
        raise ValueError(f"ideal lives in {ideal.nvars} variables, not {q}")
    if any(sum(m) == 0 for m in ideal.gens):
        raise ValueError("unit generator: the quotient is the zero ring")
    return _numerator(tuple(sorted(ideal.gens)))


def _min_transversal(supports: list[frozenset[int]]) -> int:
    # drop dominated supports (supersets of another support)
    minimal: list[frozenset[int]] = []
    for s in sorted(supports, key=len):
        if not any(t <= s for t in minimal):
            minimal.append(s)

    def lower_bound(rest: list[frozenset[int]]) -> int:
        used: set[int] = set()
        count = 0
        for s in rest:
            if not (s & used):
                count += 1
                used |= s
        return count

    best = len({v for s in minimal for v in s})

    def solve(rest: list[frozenset[int]], depth: int) -> None:
        nonlocal best
        if not rest:
            best = min(best, depth)
            return
        if depth + lower_bound(rest) >= best:
            return
        s = min(rest, key=len)
        for v in sorted(s):
            solve([t for t in rest if v not in t], depth + 1)

    solve(minimal, 0)
    return best


def krull_dimension(ideal: MonomialIdeal, q: int) -> int:
    """dim of the quotient: q minus the smallest set of variables meeting the
    support of every generator."""
    if ideal.nvars != q:
        raise ValueError(f"ideal lives in {ideal.nvars} variables, not {q}")
    if not ideal.gens:
        return q
    if any(sum(m) == 0 for m in ideal.gens):
        raise ValueError("unit generator: the quotient is the zero ring")
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in ideal.gens]
    return q - _min_transversal(supports)


def _div_one_minus_t(p: IntPoly) -> IntPoly:
    if sum(p) != 0:
        raise InexactDivisionError("(1-t) does not divide the numerator; the Krull dimension is too small")
    acc = 0
    out = []
    for c in p[:-1]:
        acc += c
        out.append(acc)
    return poly_trim(out)


def h_polynomial(numerator: IntPoly, q: int, dim: int) -> IntPoly:
    """Divide out (1-t)^(q-dim) exactly, leaving the h-polynomial with h(1) != 0."""
    if not 0 <= dim <= q:
        raise ValueError(f"need 0 <= dim <= q, got dim={dim}, q={q}")
    h = poly_trim(numerator)
    if not h:
        raise ValueError("numerator must be nonzero")
    for _ in range(q - dim):
        h = _div_one_minus_t(h)
    if sum(h) == 0:
        raise InexactDivisionError("h(1) = 0; the Krull dimension is too large")
    return h


@lru_cache(maxsize=None)
def edge_ring_gb(g: Graph, order: MonomialOrder = DEGREVLEX) -> ReducedGB:
    """Reduced Groebner basis of the toric ideal of g; every element is
    checked to lie in the kernel of the edge-to-vertex map."""
    pres = toric_generators(g)
    gb = buchberger(order, pres.generators, nvars=g.q)
    for b in gb.elements:
        assert validate_kernel_membership(g, b), "basis element escaped the kernel"
    return gb


@lru_cache(maxsize=None)
def edge_ring_hilbert(g: Graph, order: MonomialOrder = DEGREVLEX) -> HilbertData:
    gb = edge_ring_gb(g, order)
    ideal = initial_ideal(gb)
    numerator = hilbert_numerator(ideal, g.q)
    dim = krull_dimension(ideal, g.q)
    return HilbertData(numerator, dim, h_polynomial(numerator, g.q, dim))


@lru_cache(maxsize=None)
def invariant_tuple(g: Graph) -> InvariantTuple:
    """(reg, deg h, pdim, depth, dim) of the edge ring of a connected
    bipartite graph, via the Groebner/Hilbert route."""
    if g.n < 2 or g.q == 0:
        raise EmptyEdgeSetError("need at least one edge (two vertices)")
    if not is_connected(g):
        raise DisconnectedError("invariants are computed for connected graphs only")
    data = edge_ring_hilbert(g, DEGREVLEX)
    dim = data.krull_dim
    assert dim == g.n - 1, f"dim {dim} != n-1 = {g.n - 1}"
    deg_h = len(data.h_poly) - 1
    pdim = g.q - dim
    assert pdim == g.q - g.n + 1
    assert 0 <= deg_h < g.n // 2, f"regularity bound violated: {deg_h} vs n={g.n}"
    return InvariantTuple(deg_h, deg_h, pdim, dim, dim)


def a_invariant(t: InvariantTuple) -> int:
    """Degree of the Hilbert series as a rational function: deg h - dim."""
    return t.deg_h - t.dim


def codegree(t: InvariantTuple, n: int) -> int:
    """Codegree of the edge polytope of a bipartite graph: n - deg h."""
    return n - t.deg_h


def tuple_as_json_dict(t: InvariantTuple, n: int) -> dict:
    return {
        "reg": t.reg,
        "deg_h": t.deg_h,
        "pdim": t.pdim,
        "depth": t.depth,
        "dim": t.dim,
        "a_invariant": a_invariant(t),
        "codegree": codegree(t, n),
    }
