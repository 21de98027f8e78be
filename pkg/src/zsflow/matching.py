"""Maximum matching and degree-constrained factor extraction.

General graphs use the blossom (odd-cycle contraction) method; bipartite
perfect matchings use augmenting paths.  Exact-degree and width-1 degree
ranges reduce to perfect matching in an auxiliary gadget graph, so a single
matching engine backs every factor query.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

from .errors import NotRegularError
from .graphs import Factor, MultiGraph


def max_matching(g: MultiGraph) -> frozenset[int]:
    """Maximum-cardinality matching, returned as a set of edge ids.

    Parallel edges collapse to the lowest id between each vertex pair, so
    the result is deterministic on multigraphs.
    """
    rep: dict[tuple[int, int], int] = {}
    for e, (u, v) in enumerate(g.edges):
        key = (u, v) if u < v else (v, u)
        rep.setdefault(key, e)
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in rep:
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    match = _blossom_matching(adj)
    out = set()
    for u, v in rep:
        if match[u] == v:
            out.add(rep[(u, v)])
    return frozenset(out)


def has_perfect_matching(g: MultiGraph) -> bool:
    """True iff a matching covers every vertex (false for odd n)."""
    if g.n % 2:
        return False
    return 2 * len(max_matching(g)) == g.n


def _blossom_matching(adj: list[list[int]]) -> list[int]:
    """Maximum matching on an adjacency-list graph; returns the mate array."""
    n = len(adj)
    match = [-1] * n
    for u in range(n):
        if match[u] == -1:
            for v in adj[u]:
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break
    for root in range(n):
        if match[root] == -1:
            _blossom_augment(adj, match, root)
    return match


def _blossom_augment(adj: list[list[int]], match: list[int], root: int) -> bool:
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # even vertex reached: contract the blossom around the lca
                stem = _blossom_base(base, match, parent, v, to)
                mark = [False] * n
                _mark_blossom_path(base, match, parent, mark, v, stem, to)
                _mark_blossom_path(base, match, parent, mark, to, stem, v)
                for i in range(n):
                    if mark[base[i]]:
                        base[i] = stem
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    _flip_augmenting_path(match, parent, to)
                    return True
                in_tree[match[to]] = True
                queue.append(match[to])
    return False


def _blossom_base(base, match, parent, a, b):
    seen = set()
    while True:
        a = base[a]
        seen.add(a)
        if match[a] == -1:
            break
        a = parent[match[a]]
    while True:
        b = base[b]
        if b in seen:
            return b
        b = parent[match[b]]


def _mark_blossom_path(base, match, parent, mark, v, stem, child):
    while base[v] != stem:
        mark[base[v]] = True
        mark[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def _flip_augmenting_path(match, parent, to):
    while to != -1:
        v = parent[to]
        nxt = match[v]
        match[v] = to
        match[to] = v
        to = nxt


# ---------------------------------------------------------------------------
# bipartite matching


def bipartite_perfect_matching(
    g: MultiGraph, left: Iterable[int], active: Sequence[bool] | None = None
) -> frozenset[int] | None:
    """Perfect matching of a bipartite multigraph by augmenting paths.

    ``left`` is one side of the bipartition; ``active`` optionally restricts
    the usable edge ids.  Returns None when no perfect matching exists.
    """
    left_list = sorted(set(left))
    left_mask = [False] * g.n
    for u in left_list:
        left_mask[u] = True
    for e, (u, v) in enumerate(g.edges):
        if active is not None and not active[e]:
            continue
        if left_mask[u] == left_mask[v]:
            raise ValueError(f"edge {e} = ({u}, {v}) does not cross the given bipartition")
    if 2 * len(left_list) != g.n:
        return None
    right_match = [-1] * g.n  # right vertex -> matched edge id

    def augment(u: int, visited: list[bool]) -> bool:
        for e, w in g.incident(u):
            if (active is None or active[e]) and not visited[w]:
                visited[w] = True
                held = right_match[w]
                if held == -1 or augment(g.other(held, w), visited):
                    right_match[w] = e
                    return True
        return False

    for u in left_list:
        if not augment(u, [False] * g.n):
            return None
    return frozenset(e for e in right_match if e != -1)


def decompose_regular_bipartite(
    g: MultiGraph, left: Iterable[int], k: int | None = None
) -> list[frozenset[int]]:
    """Split a k-regular bipartite multigraph into k perfect matchings.

    Peels one perfect matching at a time; the remainder stays regular
    bipartite so each peel is guaranteed to succeed.  Rejects non-bipartite
    or irregular input with a witness.
    """
    left_set = set(left)
    left_mask = [v in left_set for v in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        if left_mask[u] == left_mask[v]:
            raise ValueError(
                f"not bipartite for the given sides: edge {e} = ({u}, {v}) does not cross"
            )
    degs = g.degrees()
    r = degs[0] if g.n else 0
    for v in range(g.n):
        if degs[v] != r:
            raise NotRegularError(f"vertex {v} has degree {degs[v]}, expected {r}")
    if k is not None and k != r:
        raise NotRegularError(f"graph is {r}-regular, not {k}-regular")
    k = r
    active = [True] * g.m
    out: list[frozenset[int]] = []
    for _ in range(k):
        pm = bipartite_perfect_matching(g, left_set, active)
        if pm is None:  # unreachable on valid input: regular bipartite satisfies Hall
            raise RuntimeError("internal: regular bipartite graph lost its perfect matching")
        for e in pm:
            active[e] = False
        out.append(pm)
    return out


# ---------------------------------------------------------------------------
# degree-constrained factors via gadget reduction


def find_exact_factor(g: MultiGraph, target: Sequence[int]) -> frozenset[int] | None:
    """Edge set in which vertex v has degree exactly ``target[v]``, or None.

    Classical gadget reduction: each incidence becomes a stub vertex, each
    vertex additionally gets degree(v) - target[v] core vertices joined to
    all of its stubs, and each host edge joins its two stubs.  Perfect
    matchings of the gadget select exactly the wanted edge sets (an edge is
    chosen iff its stub-stub edge is matched).
    """
    n, m = g.n, g.m
    if any(not (0 <= target[v] <= g.degree(v)) for v in range(n)):
        return None
    if sum(target) % 2:
        return None
    stub_of = [0] * (2 * m)  # gadget vertex per (edge, endpoint-slot)
    gadget_adj: list[list[int]] = []

    def new_vertex() -> int:
        gadget_adj.append([])
        return len(gadget_adj) - 1

    for v in range(n):
        stubs = []
        for e, _ in g.incident(v):
            s = new_vertex()
            u, w = g.edges[e]
            slot = 2 * e if v == u else 2 * e + 1
            stub_of[slot] = s
            stubs.append(s)
        for _ in range(g.degree(v) - target[v]):
            c = new_vertex()
            for s in stubs:
                gadget_adj[c].append(s)
                gadget_adj[s].append(c)
    for e in range(m):
        a, b = stub_of[2 * e], stub_of[2 * e + 1]
        gadget_adj[a].append(b)
        gadget_adj[b].append(a)

    match = _blossom_matching(gadget_adj)
    if any(mate == -1 for mate in match):
        return None
    chosen = frozenset(e for e in range(m) if match[stub_of[2 * e]] == stub_of[2 * e + 1])
    deg = Factor(g, chosen).degrees()
    if any(deg[v] != target[v] for v in range(n)):  # sanity: gadget bijection broke
        raise RuntimeError("internal: gadget matching decoded to a wrong-degree edge set")
    return chosen


def degree_range_factor(g: MultiGraph, lo: int, hi: int) -> Factor | None:
    """Spanning factor with every vertex degree in [lo, hi], or None.

    Only range widths 0 and 1 are supported (the widths the factor pipeline
    needs); wider requests are rejected.  Width 1 adds one private slack
    vertex per host vertex plus a clique on the slacks, so a vertex may shed
    exactly one unit of demand, and reduces to an exact-degree query.
    """
    if not (1 <= lo <= hi):
        raise ValueError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    if hi - lo > 1:
        raise ValueError(f"range width {hi - lo} unsupported, only [k, k] and [k-1, k]")
    if lo == hi:
        chosen = find_exact_factor(g, [lo] * g.n)
        return None if chosen is None else Factor(g, chosen)

    n = g.n
    # slack leftovers pair inside the clique; a dummy fixes the forced parity
    need_dummy = (n % 2 == 1) and (hi % 2 == 0)
    total = 2 * n + (1 if need_dummy else 0)
    pairs = list(g.edges)
    pairs += [(v, n + v) for v in range(n)]
    pairs += [(n + u, n + v) for u in range(n) for v in range(u + 1, n)]
    if need_dummy:
        pairs += [(2 * n, n + v) for v in range(n)]
    aux = MultiGraph(total, pairs)
    target = [hi] * n + [1] * (total - n)
    chosen = find_exact_factor(aux, target)
    if chosen is None:
        return None
    factor = Factor(g, frozenset(e for e in chosen if e < g.m))
    deg = factor.degrees()
    if any(not (lo <= deg[v] <= hi) for v in range(n)):
        raise RuntimeError("internal: slack reduction produced out-of-range degrees")
    return factor
