"""Exhaustive atlas over connected bipartite graphs on n vertices.

Enumeration is per bipartition split (a, b): biadjacency row multisets are
generated in sorted order, candidates with unsorted columns are discarded
(every isomorphism class keeps a doubly sorted representative: iterating
row-sort and column-sort strictly increases sum M[i][j]*2^i*2^j, so it
terminates at a matrix sorted both ways), and survivors are deduplicated by
canonical form.  A connected bipartite graph has a unique bipartition up to
swapping the parts, so no class appears under two splits.

The sweep attaches the full invariant pipeline to every class and checks the
realized (regularity, pdim) pairs against the closed-form target set
{(0,0)} | {(r,p) : 0 < r < floor(n/2), 1 <= p <= r(n-2-r)}.
"""

from __future__ import annotations

import json
import os
import time
import warnings
from dataclasses import dataclass
from itertools import combinations_with_replacement
from multiprocessing import Pool

from .betti import betti_table, euler_numerator, invariants_from_betti
from .graphs import (
    Graph,
    SizeGuardExceededError,
    canonical_form,
    is_connected,
    matching_number,
    max_edges_for_reg,
)
from .groebner import DEGREVLEX, LEX
from .hilbert import (
    IntPoly,
    InvariantTuple,
    edge_ring_hilbert,
    invariant_tuple,
)

ENUMERATION_GUARD = 10
CACHE_ENV = "TORIC_ATLAS_CACHE"


@dataclass(frozen=True)
class AtlasRecord:
    """One row per isomorphism class: canonical code, sizes, invariants, and
    the h-polynomials from both monomial orders (their agreement is one of
    the swept properties)."""

    code: str
    n: int
    q: int
    invariants: InvariantTuple
    matching: int
    seconds: float
    h_poly: IntPoly
    h_poly_lex: IntPoly


@dataclass(frozen=True)
class VerificationReport:
    n: int
    computed: tuple[tuple[int, int], ...]
    theoretical: tuple[tuple[int, int], ...]
    equal: bool
    class_count: int
    property_passes: dict[str, int]
    counterexamples: tuple[str, ...]


def _check_guard(n: int, force: bool) -> None:
    if n < 2:
        raise SizeGuardExceededError(f"need n >= 2, got {n}")
    if n > ENUMERATION_GUARD and not force:
        raise SizeGuardExceededError(
            f"n = {n} exceeds the guard {ENUMERATION_GUARD}; pass force=True to override"
        )


def _enumerate_with_codes(n: int, force: bool = False):
    _check_guard(n, force)
    seen: set[bytes] = set()
    for a in range(1, n // 2 + 1):
        b = n - a
        full = (1 << b) - 1
        for rows in combinations_with_replacement(range(1, 1 << b), a):
            acc = 0
            for r in rows:
                acc |= r
            if acc != full:
                continue
            cols = [sum(((rows[i] >> j) & 1) << i for i in range(a)) for j in range(b)]
            if any(cols[j] > cols[j + 1] for j in range(b - 1)):
                continue
            edges = tuple(
                (i, a + j) for i in range(a) for j in range(b) if (rows[i] >> j) & 1
            )
            g = Graph(n, edges)
            if not is_connected(g):
                continue
            code = canonical_form(g)
            if code in seen:
                continue
            seen.add(code)
            yield code, g


def enumerate_connected_bipartite(n: int, force: bool = False):
    """One representative Graph per isomorphism class of connected bipartite
    graphs on n vertices, in a deterministic order."""
    for _, g in _enumerate_with_codes(n, force):
        yield g


def theoretical_pairs(n: int) -> set[tuple[int, int]]:
    """The closed-form target set of realizable (regularity, pdim) pairs."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    pairs = {(0, 0)}
    for r in range(1, n // 2):
        for p in range(1, r * (n - 2 - r) + 1):
            pairs.add((r, p))
    return pairs


def cardinality_formula(n: int) -> int:
    """Closed form for the number of realizable pairs."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    f = n // 2
    val = f * (f - 1) * (2 * f - 3 * n + 5)
    assert val % 6 == 0
    return 1 - val // 6


def analyze_graph(g: Graph) -> AtlasRecord:
    """Full pipeline for one graph: invariants, matching number, and the
    h-polynomial under both monomial orders."""
    start = time.perf_counter()
    inv = invariant_tuple(g)
    h = edge_ring_hilbert(g, DEGREVLEX).h_poly
    h_lex = edge_ring_hilbert(g, LEX).h_poly
    mat = matching_number(g)
    elapsed = time.perf_counter() - start
    return AtlasRecord(
        code=canonical_form(g).hex(),
        n=g.n,
        q=g.q,
        invariants=inv,
        matching=mat,
        seconds=round(elapsed, 6),
        h_poly=h,
        h_poly_lex=h_lex,
    )


def _analyze_edges(args: tuple[int, tuple]) -> AtlasRecord:
    n, edges = args
    return analyze_graph(Graph(n, edges))


# ---------------------------------------------------------------------------
# persistent cache: append-only JSONL, one record per line, last write wins


def cache_dir() -> str:
    return os.environ.get(CACHE_ENV, os.path.join(".", "atlas-cache"))


def _cache_path(n: int, directory: str | None = None) -> str:
    return os.path.join(directory or cache_dir(), f"atlas-n{n}.jsonl")


def record_to_json_dict(rec: AtlasRecord) -> dict:
    return {
        "code": rec.code,
        "n": rec.n,
        "q": rec.q,
        "reg": rec.invariants.reg,
        "deg_h": rec.invariants.deg_h,
        "pdim": rec.invariants.pdim,
        "depth": rec.invariants.depth,
        "dim": rec.invariants.dim,
        "mat": rec.matching,
        "seconds": rec.seconds,
        "h": list(rec.h_poly),
        "h_lex": list(rec.h_poly_lex),
    }


def _record_from_json_dict(d: dict) -> AtlasRecord:
    return AtlasRecord(
        code=d["code"],
        n=d["n"],
        q=d["q"],
        invariants=InvariantTuple(d["reg"], d["deg_h"], d["pdim"], d["depth"], d["dim"]),
        matching=d["mat"],
        seconds=d["seconds"],
        h_poly=tuple(d["h"]),
        h_poly_lex=tuple(d["h_lex"]),
    )


def cache_store(rec: AtlasRecord, directory: str | None = None) -> None:
    path = _cache_path(rec.n, directory)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(record_to_json_dict(rec)) + "\n")


def cache_load(n: int, directory: str | None = None) -> dict[str, AtlasRecord]:
    """Records keyed by canonical code; corrupted lines are reported and
    skipped, duplicate codes resolve to the last complete line."""
    path = _cache_path(n, directory)
    records: dict[str, AtlasRecord] = {}
    if not os.path.exists(path):
        return records
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = _record_from_json_dict(json.loads(line))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError):
                warnings.warn(f"{path}:{lineno}: skipping corrupted cache line")
                continue
            records[rec.code] = rec
    return records


# ---------------------------------------------------------------------------
# sweeping and verification

_sweep_memo: dict[int, list[tuple[Graph, AtlasRecord]]] = {}


def sweep(
    n: int,
    jobs: int = 1,
    use_cache: bool = True,
    directory: str | None = None,
    force: bool = False,
) -> list[tuple[Graph, AtlasRecord]]:
    """Enumerate all classes on n vertices and attach records, reusing the
    JSONL cache for graphs already analyzed."""
    if n in _sweep_memo:
        return _sweep_memo[n]
    cached = cache_load(n, directory) if use_cache else {}
    graphs = list(_enumerate_with_codes(n, force))
    out: list[tuple[Graph, AtlasRecord]] = []
    missing: list[tuple[bytes, Graph]] = []
    for code, g in graphs:
        rec = cached.get(code.hex())
        if rec is None:
            missing.append((code, g))
        else:
            out.append((g, rec))
    if missing:
        if jobs > 1:
            with Pool(jobs) as pool:
                recs = pool.map(_analyze_edges, [(g.n, g.edges) for _, g in missing])
        else:
            recs = [analyze_graph(g) for _, g in missing]
        for (_, g), rec in zip(missing, recs):
            out.append((g, rec))
            if use_cache:
                cache_store(rec, directory)
    out.sort(key=lambda pair: pair[1].code)
    _sweep_memo[n] = out
    return out


def computed_pairs(
    n: int,
    jobs: int = 1,
    use_cache: bool = True,
    directory: str | None = None,
    force: bool = False,
) -> set[tuple[int, int]]:
    """The set of (regularity, pdim) pairs realized on n vertices."""
    return {
        (rec.invariants.reg, rec.invariants.pdim)
        for _, rec in sweep(n, jobs, use_cache, directory, force)
    }


def property_sweep(g: Graph, t: InvariantTuple) -> list[tuple[str, bool]]:
    """Per-graph inequalities and equivalences; all must hold."""
    n, q = g.n, g.q
    mat = matching_number(g)
    forest = q == n - 1  # connected, so acyclic iff tree
    return [
        ("dim_depth_n_minus_1", t.dim == n - 1 and t.depth == n - 1),
        ("pdim_q_n_1", t.pdim == q - n + 1),
        ("reg_below_half_n", 0 <= t.reg < n // 2),
        ("reg_le_mat_minus_1", t.reg <= mat - 1),
        ("mat_le_half_n", mat <= n // 2),
        ("edges_le_reg_bound", q <= max_edges_for_reg(t.reg, n)),
        ("forest_iff_reg0_iff_pdim0", forest == (t.reg == 0) == (t.pdim == 0)),
    ]


def verify(
    n: int,
    jobs: int = 1,
    with_betti_oracle: bool = False,
    use_cache: bool = True,
    directory: str | None = None,
    force: bool = False,
) -> VerificationReport:
    """Run the full check for one n: pair-set equality, cardinality, tuple
    shape, the per-graph property sweep, and optionally the Betti oracle on
    every class with at most 8 edges.  Failures land in the report rather
    than raising."""
    records = sweep(n, jobs, use_cache, directory, force)
    computed = {(rec.invariants.reg, rec.invariants.pdim) for _, rec in records}
    theoretical = theoretical_pairs(n)
    passes: dict[str, int] = {}
    failures: list[str] = []

    def note(prop: str, ok: bool, g: Graph) -> None:
        passes[prop] = passes.get(prop, 0) + (1 if ok else 0)
        if not ok:
            failures.append(f"{prop}: n={g.n} edges={g.edges}")

    for g, rec in records:
        t = rec.invariants
        for prop, ok in property_sweep(g, t):
            note(prop, ok, g)
        note("tuple_shape_r_r_p_n1_n1", t.as_tuple() == (t.reg, t.reg, t.pdim, n - 1, n - 1), g)
        note("h_at_1_nonzero", sum(rec.h_poly) != 0, g)
        note("h_order_independent", rec.h_poly == rec.h_poly_lex, g)
        if with_betti_oracle and g.q <= 8:
            table = betti_table(g, t.reg, t.pdim)
            note("betti_oracle_agrees", invariants_from_betti(table) == (t.reg, t.pdim), g)
            note(
                "betti_euler_matches_numerator",
                euler_numerator(table) == edge_ring_hilbert(g).numerator,
                g,
            )
    if computed != theoretical:
        failures.append(
            f"pair sets differ: missing={sorted(theoretical - computed)} "
            f"extra={sorted(computed - theoretical)}"
        )
    if len(computed) != cardinality_formula(n):
        failures.append(
            f"pair count {len(computed)} != formula {cardinality_formula(n)}"
        )
    return VerificationReport(
        n=n,
        computed=tuple(sorted(computed)),
        theoretical=tuple(sorted(theoretical)),
        equal=computed == theoretical,
        class_count=len(records),
        property_passes=passes,
        counterexamples=tuple(failures),
    )


def report_to_json_dict(report: VerificationReport) -> dict:
    return {
        "n": report.n,
        "equal": report.equal,
        "computed": [list(p) for p in report.computed],
        "theoretical": [list(p) for p in report.theoretical],
        "class_count": report.class_count,
        "failures": list(report.counterexamples),
        "property_passes": dict(sorted(report.property_passes.items())),
    }
