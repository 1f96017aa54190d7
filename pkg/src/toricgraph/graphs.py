"""Bipartite graph core.

Plain immutable graphs with a fixed edge order (the edge order fixes the
polynomial variable order downstream, so every constructor here is
deterministic), plus cycle enumeration, matchings, the witness-graph
constructions used to realize prescribed invariants, and a canonical form
for isomorphism rejection.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property


class GraphFormatError(ValueError):
    """Malformed graph input: bad line, loop edge, or duplicate edge."""


class NotBipartiteError(ValueError):
    """An odd cycle was found where a bipartition is required."""


class DisconnectedError(ValueError):
    """The operation requires a connected graph."""


class SizeGuardExceededError(RuntimeError):
    """An exhaustive computation would exceed its documented desk-scale guard."""


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices 0..n-1 with an ordered edge list.

    Edge i (0-based) corresponds to the polynomial variable e_{i+1}.
    Instances are immutable and hashable; all operations on them are pure.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        norm = []
        seen = set()
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def q(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}


@dataclass(frozen=True)
class Bipartition:
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]


@dataclass(frozen=True)
class Cycle:
    """Simple cycle, canonically rooted: vertices[0] is the smallest vertex
    on the cycle and vertices[1] < vertices[-1] fixes the orientation."""

    vertices: tuple[int, ...]
    edge_indices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_indices)


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document: one "u v" pair per line, '#' comments.

    Labels are compacted to 0..n-1 in first-occurrence order; the line order
    fixes the edge (hence variable) order.
    """
    labels: dict[int, int] = {}
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer label in {raw!r}") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop edge at {u}")
        for t in (u, v):
            labels.setdefault(t, len(labels))
        a, b = labels[u], labels[v]
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    if not labels:
        raise GraphFormatError("no edges in input")
    return Graph(len(labels), tuple(edges))


def parse_graph_json(text: str) -> Graph:
    """Parse the JSON graph format {"n": int, "edges": [[u, v], ...]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise GraphFormatError('expected an object with "n" and "edges"')
    try:
        return Graph(int(data["n"]), tuple((int(u), int(v)) for u, v in data["edges"]))
    except (TypeError, ValueError) as exc:
        raise GraphFormatError(str(exc)) from None


def graph_to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]})


def bipartition(g: Graph) -> Bipartition:
    """2-color by BFS per component; part_a holds each component's smallest vertex."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            for w in g.neighbors[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    raise NotBipartiteError(
                        f"not bipartite: odd cycle through vertices {u} and {w}"
                    )
    part_a = tuple(v for v in range(g.n) if color[v] == 0)
    part_b = tuple(v for v in range(g.n) if color[v] == 1)
    return Bipartition(part_a, part_b)


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
        return True
    except NotBipartiteError:
        return False


def is_connected(g: Graph) -> bool:
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.neighbors[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.n


def enumerate_cycles(g: Graph) -> tuple[Cycle, ...]:
    """All simple cycles, each exactly once up to rotation and reflection.

    Canonical representative: start at the smallest vertex on the cycle and
    walk toward its smaller cycle-neighbor. Output sorted by (length, vertices).
    """
    adj = g.neighbors
    found: list[tuple[int, ...]] = []
    on_path = bytearray(g.n)
    path: list[int] = []

    def extend(u: int, s: int) -> None:
        for w in adj[u]:
            if w == s:
                if len(path) >= 3 and path[1] < path[-1]:
                    found.append(tuple(path))
            elif w > s and not on_path[w]:
                path.append(w)
                on_path[w] = 1
                extend(w, s)
                path.pop()
                on_path[w] = 0

    for s in range(g.n):
        path.clear()
        path.append(s)
        on_path[s] = 1
        extend(s, s)
        on_path[s] = 0

    found.sort(key=lambda vs: (len(vs), vs))
    return tuple(cycle_from_vertices(g, vs) for vs in found)


def cycle_from_vertices(g: Graph, vertices: tuple[int, ...]) -> Cycle:
    """Build a Cycle from a closed vertex walk (without repeating the start)."""
    m = len(vertices)
    if m < 3 or len(set(vertices)) != m:
        raise ValueError(f"not a simple cycle: {vertices}")
    idx = g.edge_index
    edge_indices = []
    for k in range(m):
        u, v = vertices[k], vertices[(k + 1) % m]
        key = (u, v) if u < v else (v, u)
        if key not in idx:
            raise ValueError(f"missing edge {key} in walk {vertices}")
        edge_indices.append(idx[key])
    return Cycle(tuple(vertices), tuple(edge_indices))


def matching_number(g: Graph) -> int:
    """Maximum matching size via augmenting paths on the bipartition."""
    parts = bipartition(g)
    match: dict[int, int | None] = {b: None for b in parts.part_b}

    def augment(a: int, visited: set[int]) -> bool:
        for b in g.neighbors[a]:
            if b in visited:
                continue
            visited.add(b)
            if match[b] is None or augment(match[b], visited):
                match[b] = a
                return True
        return False

    size = 0
    for a in parts.part_a:
        if augment(a, set()):
            size += 1
    return size


# ---------------------------------------------------------------------------
# standard families


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: parts 0..a-1 and a..a+b-1, edges in lexicographic (i, j) order."""
    if a < 1 or b < 1:
        raise ValueError(f"parts must be nonempty, got ({a}, {b})")
    edges = tuple((i, a + j) for i in range(a) for j in range(b))
    return Graph(a + b, edges)


def cycle_graph(m: int) -> Graph:
    """C_m with edges in walk order 0-1-2-...-(m-1)-0."""
    if m < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {m}")
    edges = tuple((k, (k + 1) % m) for k in range(m))
    return Graph(m, edges)


def star(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    if n < 2:
        raise ValueError(f"star needs at least 2 vertices, got {n}")
    return Graph(n, tuple((0, k) for k in range(1, n)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs at least 1 vertex, got {n}")
    return Graph(n, tuple((k, k + 1) for k in range(n - 1)))


# ---------------------------------------------------------------------------
# witness constructions realizing a prescribed (regularity, pdim) pair


def _witness_vertex_labels(n: int, r: int):
    # x_1..x_{r+1} -> 0..r, y_1..y_{r+1} -> r+1..2r+1, z_1..z_{n-2r-2} -> rest
    x = lambda i: i - 1
    y = lambda j: r + j
    z = lambda j: 2 * r + 1 + j
    return x, y, z


def _check_witness_range(n: int, r: int) -> None:
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    if not 0 < r < n // 2:
        raise ValueError(f"need 0 < r < floor(n/2), got r={r}, n={n}")
    assert n - 2 - 2 * r >= 0  # guaranteed by r <= floor(n/2) - 1


def cycle_core_graph(n: int, r: int, p: int) -> Graph:
    """Connected bipartite graph on n vertices with n+p-1 edges built from a
    (2r+2)-cycle core, pendant edges, and p-1 chords; realizes regularity r
    and projective dimension p for 1 <= p <= r*r.

    Chords are the lexicographically smallest (i, j) pairs not on the core
    cycle, so the construction is reproducible.
    """
    _check_witness_range(n, r)
    if not 1 <= p <= r * r:
        raise ValueError(f"need 1 <= p <= r^2 = {r * r}, got p={p}")
    x, y, z = _witness_vertex_labels(n, r)
    edges = []
    cycle_pairs = set()
    for i in range(1, r + 1):
        edges.append((x(i), y(i)))
        edges.append((y(i), x(i + 1)))
        cycle_pairs.add((i, i))
        cycle_pairs.add((i + 1, i))
    edges.append((x(r + 1), y(r + 1)))
    edges.append((y(r + 1), x(1)))
    cycle_pairs.add((r + 1, r + 1))
    cycle_pairs.add((1, r + 1))
    for j in range(1, n - 2 * r - 1):
        edges.append((x(r + 1), z(j)))
    chords = [(i, j) for i in range(1, r + 2) for j in range(1, r + 2)
              if (i, j) not in cycle_pairs]
    for i, j in chords[: p - 1]:
        edges.append((x(i), y(j)))
    return Graph(n, tuple(edges))


def complete_core_graph(n: int, r: int, p: int) -> Graph:
    """Connected bipartite graph on n vertices with n+p-1 edges built from a
    complete bipartite K_{r+1,r+1} core, pendant edges, and p-r^2 extra edges
    into the pendant vertices; realizes regularity r and projective dimension
    p for r^2 <= p <= r(n-2-r)."""
    _check_witness_range(n, r)
    if not r * r <= p <= r * (n - 2 - r):
        raise ValueError(
            f"need r^2 = {r * r} <= p <= r(n-2-r) = {r * (n - 2 - r)}, got p={p}"
        )
    x, y, z = _witness_vertex_labels(n, r)
    edges = []
    for i in range(1, r + 2):
        for j in range(1, r + 2):
            edges.append((x(i), y(j)))
    for j in range(1, n - 2 * r - 1):
        edges.append((x(r + 1), z(j)))
    extras = [(i, j) for i in range(1, r + 1) for j in range(1, n - 2 * r - 1)]
    for i, j in extras[: p - r * r]:
        edges.append((x(i), z(j)))
    return Graph(n, tuple(edges))


def realizing_graph(r: int, p: int) -> Graph:
    """Smallest-recipe witness for the pair (r, p): the single edge for (0, 0),
    otherwise a core construction on N = 2 + r + max(r, p) vertices."""
    if (r, p) == (0, 0):
        return Graph(2, ((0, 1),))
    if r < 1 or p < 1:
        raise ValueError(f"realizable pairs are (0,0) or r,p >= 1, got ({r}, {p})")
    n = 2 + r + max(r, p)
    if p <= r * r:
        return cycle_core_graph(n, r, p)
    return complete_core_graph(n, r, p)


# ---------------------------------------------------------------------------
# combinatorial bounds


def jackson_min_edges(m: int, a: int, b: int) -> int:
    """Edge threshold above which a bipartite graph with parts (a, b) must
    contain a cycle of length >= 2m.  At the overlap a = 2m-2 both branches
    apply; the minimum is returned."""
    if not 2 <= m <= a <= b:
        raise ValueError(f"need 2 <= m <= a <= b, got ({m}, {a}, {b})")
    vals = []
    if a <= 2 * m - 2:
        vals.append(a + (b - 1) * (m - 1))
    if a >= 2 * m - 2:
        vals.append((a + b - 2 * m + 3) * (m - 1))
    return min(vals)


def max_edges_for_reg(r: int, n: int) -> int:
    """Upper bound (r+1)(n-r-1) on the edge count of a connected bipartite
    graph on n vertices whose edge ring has regularity r."""
    if r < 0 or n < 2:
        raise ValueError(f"need r >= 0 and n >= 2, got ({r}, {n})")
    return (r + 1) * (n - r - 1)


# ---------------------------------------------------------------------------
# canonical form

_PERM_GUARD = 200_000


def _wl_colors(neighbors, colors: list[int]) -> list[int]:
    # iterated neighborhood refinement; ranks are isomorphism-invariant
    k = len(set(colors))
    while True:
        sig = [
            (colors[v], tuple(sorted(colors[w] for w in neighbors[v])))
            for v in range(len(colors))
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        colors = [rank[s] for s in sig]
        k2 = len(set(colors))
        if k2 == k:
            return colors
        k = k2


def _class_arrangements(members: list[int], adj_sets) -> list[tuple[int, ...]]:
    # vertices with identical neighborhoods are interchangeable (they are
    # never adjacent to each other), so only the arrangement of distinct
    # neighborhood groups matters: k!/(m_1!...m_g!) orders instead of k!
    groups: dict[frozenset, list[int]] = {}
    for v in members:
        groups.setdefault(adj_sets[v], []).append(v)
    queues = list(groups.values())
    k = len(members)
    out: list[tuple[int, ...]] = []
    taken = [0] * len(queues)
    prefix: list[int] = []

    def rec() -> None:
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        for qi, queue in enumerate(queues):
            if taken[qi] < len(queue):
                prefix.append(queue[taken[qi]])
                taken[qi] += 1
                rec()
                taken[qi] -= 1
                prefix.pop()

    rec()
    return out


def _class_orders(colors: list[int], adj_sets):
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    per_class = []
    total = 1
    for c in sorted(classes):
        members = classes[c]
        twins: dict[frozenset, int] = {}
        for v in members:
            twins[adj_sets[v]] = twins.get(adj_sets[v], 0) + 1
        count = 1
        for k in range(2, len(members) + 1):
            count *= k
        for m in twins.values():
            for k in range(2, m + 1):
                count //= k
        total *= count
        if total > _PERM_GUARD:
            raise SizeGuardExceededError(
                f"canonical form would scan more than {_PERM_GUARD} orderings"
            )
        per_class.append(_class_arrangements(members, adj_sets))
    for parts in itertools.product(*per_class):
        order = []
        for part in parts:
            order.extend(part)
        yield order


def _pack(kind: int, n: int, a: int, bits: list[int]) -> bytes:
    num = 0
    for bit in bits:
        num = (num << 1) | bit
    return bytes([kind, n, a]) + num.to_bytes((len(bits) + 7) // 8 or 1, "big")


def _bipartite_code(g: Graph, rows: tuple[int, ...], cols: tuple[int, ...]) -> bytes:
    adj = [frozenset(g.neighbors[v]) for v in range(g.n)]
    row_set = set(rows)
    colors = [0 if v in row_set else 1 for v in range(g.n)]
    colors = _wl_colors(g.neighbors, colors)
    best = None
    for order in _class_orders(colors, adj):
        row_order = [v for v in order if v in row_set]
        col_order = [v for v in order if v not in row_set]
        bits = [1 if w in adj[u] else 0 for u in row_order for w in col_order]
        code = _pack(1, g.n, len(rows), bits)
        if best is None or code < best:
            best = code
    return best


def _general_code(g: Graph) -> bytes:
    adj = [frozenset(g.neighbors[v]) for v in range(g.n)]
    colors = _wl_colors(g.neighbors, [0] * g.n)
    best = None
    for order in _class_orders(colors, adj):
        bits = [
            1 if order[j] in adj[order[i]] else 0
            for i in range(g.n)
            for j in range(i + 1, g.n)
        ]
        code = _pack(2, g.n, 0, bits)
        if best is None or code < best:
            best = code
    return best


def canonical_form(g: Graph) -> bytes:
    """Canonical code: equal codes iff isomorphic.

    Connected bipartite graphs are minimized over part-respecting orderings of
    the biadjacency matrix (both orientations when the parts have equal size);
    anything else falls back to minimizing the full adjacency matrix.  Both
    paths prune with iterated degree refinement, so the brute-force scan only
    ranges over refinement classes; the cost cliff is for highly symmetric
    graphs, fine at desk scale (n <= 10 or so).
    """
    if g.n == 1:
        return bytes([2, 1, 0])
    try:
        parts = bipartition(g)
    except NotBipartiteError:
        return _general_code(g)
    if not is_connected(g):
        return _general_code(g)
    a, b = parts.part_a, parts.part_b
    if len(a) < len(b):
        return _bipartite_code(g, a, b)
    if len(b) < len(a):
        return _bipartite_code(g, b, a)
    return min(_bipartite_code(g, a, b), _bipartite_code(g, b, a))
