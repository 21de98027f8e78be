"""Multigraph data model, generators, and serialization.

Vertices are dense integers 0..n-1 and edge ids are dense integers 0..m-1
assigned in construction order.  Parallel edges are allowed everywhere,
loops are rejected everywhere.  Graphs are immutable after construction and
all operations on them are pure, so instances can be shared freely.
"""

from __future__ import annotations

import random
from collections.abc import Iterable
from dataclasses import dataclass, field

from .errors import GraphError, GraphFormatError

_G6_RANGE = (63, 126)
_RANDOM_REGULAR_RESTARTS = 10_000


class MultiGraph:
    """Undirected multigraph with dense vertex and edge ids.

    ``edges[e]`` is the endpoint pair ``(u, v)`` of the edge with id ``e``,
    in the orientation it was supplied.  Loops (``u == v``) are rejected.
    """

    __slots__ = ("n", "edges", "_adj", "_degrees")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        edges = []
        for idx, (u, v) in enumerate(pairs):
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphError(f"edge {idx}: endpoint out of range for n={n}: ({u}, {v})")
            if u == v:
                raise GraphError(f"edge {idx}: loop at vertex {u} rejected")
            edges.append((u, v))
        self.n = n
        self.edges = tuple(edges)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(edges):
            adj[u].append((e, v))
            adj[v].append((e, u))
        # incidence lists sorted by edge id keep every traversal deterministic
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._degrees = tuple(len(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def degrees(self) -> tuple[int, ...]:
        """Per-vertex degree vector (parallel edges count once per endpoint)."""
        return self._degrees

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """Pairs ``(edge_id, other_endpoint)`` for vertex ``v``, ascending id."""
        return self._adj[v]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def other(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


def build(n: int, pairs: Iterable[tuple[int, int]]) -> MultiGraph:
    """Construct a multigraph from endpoint pairs; ids follow input order."""
    return MultiGraph(n, pairs)


@dataclass(frozen=True, eq=False)
class Factor:
    """Spanning subgraph of a host graph, given as an edge-id subset.

    Spanning by convention: the vertex set is the host's vertex set, so
    vertices may be isolated within the factor.
    """

    host: MultiGraph
    edge_ids: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        bad = [e for e in self.edge_ids if not (0 <= e < self.host.m)]
        if bad:
            raise GraphError(f"factor edge ids not in host: {sorted(bad)[:5]}")

    def degree(self, v: int) -> int:
        return sum(1 for e, _ in self.host.incident(v) if e in self.edge_ids)

    def degrees(self) -> tuple[int, ...]:
        """Per-vertex degree vector inside the factor."""
        deg = [0] * self.host.n
        for e in self.edge_ids:
            u, v = self.host.edges[e]
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)


def regular_degree(g: MultiGraph) -> int | None:
    """Return r if every vertex has degree exactly r, else None."""
    if g.n == 0:
        return None
    r = g.degree(0)
    for v in range(1, g.n):
        if g.degree(v) != r:
            return None
    return r


def components(g: MultiGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for _, w in g.incident(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        out.append(comp)
    return out


def double_edges(g: MultiGraph) -> MultiGraph:
    """Add a parallel copy of every edge.

    The copy of edge ``e`` gets id ``e + g.m``, so the pairing between an
    edge and its copy is ``doubled_partner``.  Every vertex degree doubles.
    """
    return MultiGraph(g.n, list(g.edges) + list(g.edges))


def doubled_partner(e: int, m: int) -> int:
    """Partner id of edge ``e`` in a graph produced by ``double_edges``.

    ``m`` is the edge count of the graph before doubling.  The pairing is an
    involution covering ids 0..2m-1.
    """
    if not (0 <= e < 2 * m):
        raise ValueError(f"edge id {e} out of range for doubled graph with 2m={2 * m}")
    return e + m if e < m else e - m


def subgraph_from_edges(
    g: MultiGraph, edge_ids: Iterable[int], vertices: Iterable[int] | None = None
) -> tuple[MultiGraph, list[int], list[int]]:
    """Relabelled subgraph on the given edges.

    Returns ``(sub, vmap, emap)`` where ``vmap[i]`` is the host vertex of sub
    vertex ``i`` and ``emap[j]`` the host edge id of sub edge ``j``.  The
    vertex set defaults to the endpoints of the edges; pass ``vertices`` to
    keep extra isolated vertices.  Sub ids preserve ascending host order.
    """
    emap = sorted(set(edge_ids))
    if vertices is None:
        vset = {v for e in emap for v in g.edges[e]}
    else:
        vset = set(vertices)
        for e in emap:
            vset.update(g.edges[e])
    vmap = sorted(vset)
    index = {v: i for i, v in enumerate(vmap)}
    sub = MultiGraph(len(vmap), [(index[g.edges[e][0]], index[g.edges[e][1]]) for e in emap])
    return sub, vmap, emap


# ---------------------------------------------------------------------------
# generators


def cycle(n: int) -> MultiGraph:
    """Cycle C_n; n=2 yields the parallel pair (a 2-cycle)."""
    if n < 2:
        raise GraphError(f"cycle needs at least 2 vertices, got {n}")
    if n == 2:
        return MultiGraph(2, [(0, 1), (0, 1)])
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> MultiGraph:
    """Complete graph K_n."""
    return MultiGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen() -> MultiGraph:
    """The Petersen graph: outer 5-cycle, spokes, inner pentagram."""
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(i, i + 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph(10, pairs)


def circulant(n: int, offsets: Iterable[int]) -> MultiGraph:
    """Circulant graph: vertex i adjacent to i +/- d for each offset d.

    Offsets are normalized mod n into 1..n//2 and must be distinct and
    nonzero.  An offset d < n/2 contributes degree 2, the offset n/2
    (even n) contributes degree 1.
    """
    norm = []
    for d in offsets:
        d = d % n
        if d == 0:
            raise GraphError(f"offset {d} is zero mod {n}")
        norm.append(min(d, n - d))
    if len(set(norm)) != len(norm):
        raise GraphError(f"offsets collide after normalization mod {n}: {sorted(norm)}")
    pairs = []
    for d in sorted(norm):
        if 2 * d == n:
            pairs += [(i, i + d) for i in range(d)]
        else:
            pairs += [(i, (i + d) % n) for i in range(n)]
    return MultiGraph(n, pairs)


def random_regular(n: int, r: int, seed: int) -> MultiGraph:
    """Random simple r-regular graph on n vertices, deterministic in the seed.

    Configuration-model pairing: shuffle the stub list, pair greedily while
    skipping loops and parallel collisions, reshuffle the leftover stubs, and
    restart from scratch when the leftovers admit no legal pair.  Bounded at
    10,000 restarts.
    """
    if r < 0 or n <= r:
        raise GraphError(f"need 0 <= r < n, got n={n}, r={r}")
    if (n * r) % 2:
        raise GraphError(f"n*r must be even, got n={n}, r={r}")
    rng = random.Random(seed)
    for _ in range(_RANDOM_REGULAR_RESTARTS):
        edges = _pair_stubs(n, r, rng)
        if edges is not None:
            return MultiGraph(n, sorted(edges))
    raise GraphError(f"random_regular(n={n}, r={r}) gave up after {_RANDOM_REGULAR_RESTARTS} restarts")


def _pair_stubs(n: int, r: int, rng: random.Random) -> set[tuple[int, int]] | None:
    edges: set[tuple[int, int]] = set()
    stubs = list(range(n)) * r
    while stubs:
        rng.shuffle(stubs)
        leftover: list[int] = []
        it = iter(stubs)
        for a, b in zip(it, it):
            if a > b:
                a, b = b, a
            if a == b or (a, b) in edges:
                leftover.extend((a, b))
            else:
                edges.add((a, b))
        if len(leftover) == len(stubs):
            # no pair was placeable; check whether any legal pair remains
            if not any(
                a != b and (min(a, b), max(a, b)) not in edges
                for i, a in enumerate(leftover)
                for b in leftover[i + 1 :]
            ):
                return None
        stubs = leftover
    return edges


def cubic_no_pm() -> MultiGraph:
    """A 16-vertex cubic graph with no perfect matching.

    Three gadgets, each a K4 with one edge subdivided (the subdivision
    vertex has degree 2), plus a central vertex joined to the three
    subdivision vertices.  Deleting the center leaves three 5-vertex
    components, so Tutte's condition fails and no perfect matching exists.
    """
    pairs: list[tuple[int, int]] = []
    for gdt in range(3):
        a, b, c, d, s = (5 * gdt + i for i in range(5))
        pairs += [(a, s), (s, b), (a, c), (a, d), (b, c), (b, d), (c, d)]
    center = 15
    pairs += [(center, 5 * gdt + 4) for gdt in range(3)]
    return MultiGraph(16, pairs)


# ---------------------------------------------------------------------------
# serialization


def parse_graph6(text: str) -> MultiGraph:
    """Decode a graph6 string (simple graphs, standard ASCII encoding)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphFormatError("empty graph6 string", line=1)
    data = [ord(c) - 63 for c in s]
    for i, c in enumerate(s):
        if not (_G6_RANGE[0] <= ord(c) <= _G6_RANGE[1]):
            raise GraphFormatError(f"invalid graph6 byte {c!r} at position {i}", line=1)
    if data[0] <= 62:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise GraphFormatError("graph6 sizes above 258047 vertices are not supported", line=1)
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"graph6 body length {len(body)} does not match n={n}", line=1
        )
    pairs = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if body[bit // 6] & (1 << (5 - bit % 6)):
                pairs.append((i, j))
            bit += 1
    return MultiGraph(n, pairs)


def parse_edge_list(text: str) -> MultiGraph:
    """Parse the plain edge-list format: header ``n m`` then m lines ``u v``."""
    lines = text.splitlines()
    if not lines:
        raise GraphFormatError("empty input", line=1)
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"expected header 'n m', got {lines[0]!r}", line=1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise GraphFormatError(f"non-integer header {lines[0]!r}", line=1) from None
    pairs = []
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {raw!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoints {raw!r}", line=lineno) from None
        if u == v:
            raise GraphFormatError(f"loop at vertex {u} rejected", line=lineno)
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphFormatError(f"endpoint out of range for n={n}: ({u}, {v})", line=lineno)
        pairs.append((u, v))
    if len(pairs) != m:
        raise GraphFormatError(f"header promised {m} edges, found {len(pairs)}", line=1)
    return MultiGraph(n, pairs)


def write_edge_list(g: MultiGraph) -> str:
    """Serialize to the edge-list format; parse(write(g)) preserves ids."""
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(out) + "\n"
