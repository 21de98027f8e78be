"""Exhaustive backtracking search for zero-sum k-flows.

The solver is the package's independent oracle: it decides existence by
exhausting the value alphabet {±1, ..., ±(k-1)} over the edges, so a
"nonexistent" answer is a certificate that the whole space was searched.

Edge order is most-constrained-vertex first: the next edge always touches a
vertex with the fewest unassigned incident edges, so the last edge at each
vertex is forced to the negated partial sum.  The first assigned edge only
tries positive values (negating a flow preserves every constraint), and a
partial sum that the remaining edges cannot cancel prunes the branch.
Everything is deterministic: equal inputs give equal outcomes and node
counts.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .flows import IntFlow, verify_flow
from .graphs import MultiGraph

DEFAULT_BUDGET = 100_000_000

_FOUND = 0
_EXHAUSTED = 1
_BUDGET = 2


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one exhaustive search: status, flow, and work counter.

    status is "found", "nonexistent" (space exhausted), or "undecided"
    (budget hit).  nodes counts attempted value assignments.
    """

    status: str
    flow: IntFlow | None
    nodes: int
    budget: int


@dataclass(frozen=True)
class FlowNumberResult:
    """Minimal k with a zero-sum k-flow, when decidable within k_max."""

    k: int | None
    status: str
    outcomes: dict[int, SearchOutcome]


@dataclass(frozen=True)
class CrossCheckReport:
    """Solver-vs-construction comparison for one constructed flow."""

    claimed_k: int
    status_at_claimed: str
    consistent: bool
    smaller_k: int | None


def solve(g: MultiGraph, k: int, budget: int = DEFAULT_BUDGET) -> SearchOutcome:
    """Decide whether a zero-sum k-flow exists, exhaustively up to budget."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    n, m = g.n, g.m
    if m == 0:
        return SearchOutcome("found", IntFlow(g, (), k), 0, budget)
    if m + 100 > sys.getrecursionlimit():
        sys.setrecursionlimit(m + 500)

    inc = [g.incident(v) for v in range(n)]
    edges = g.edges
    kmax = k - 1
    alphabet = tuple(s * a for a in range(1, k) for s in (1, -1))
    positives = tuple(range(1, k))
    val = [0] * m
    psum = [0] * n
    rem = list(g.degrees())
    found: list[int] | None = None
    nodes = 0

    def dfs(assigned: int) -> int:
        nonlocal nodes, found
        if assigned == m:
            found = val.copy()
            return _FOUND
        rmin = m + 1
        for v in range(n):
            rv = rem[v]
            if rv and rv < rmin:
                rmin = rv
        e = m
        for v in range(n):
            if rem[v] == rmin:
                for eid, _ in inc[v]:
                    if val[eid] == 0:
                        if eid < e:
                            e = eid
                        break
        u, w = edges[e]
        if rem[u] == 1:
            c = -psum[u]
            if rem[w] == 1 and c != -psum[w]:
                return _EXHAUSTED
            cands = (c,)
        elif rem[w] == 1:
            cands = (-psum[w],)
        elif assigned == 0:
            cands = positives
        else:
            cands = alphabet
        for c in cands:
            if c == 0 or abs(c) > kmax:
                continue
            nodes += 1
            if nodes > budget:
                return _BUDGET
            su = psum[u] + c
            ru = rem[u] - 1
            if abs(su) > kmax * ru:
                continue
            sw = psum[w] + c
            rw = rem[w] - 1
            if abs(sw) > kmax * rw:
                continue
            val[e] = c
            psum[u] = su
            psum[w] = sw
            rem[u] = ru
            rem[w] = rw
            res = dfs(assigned + 1)
            val[e] = 0
            psum[u] = su - c
            psum[w] = sw - c
            rem[u] = ru + 1
            rem[w] = rw + 1
            if res != _EXHAUSTED:
                return res
        return _EXHAUSTED

    res = dfs(0)
    if res == _FOUND:
        flow = IntFlow(g, tuple(found), k)
        report = verify_flow(g, flow)
        if not report.ok:  # cannot happen: the search enforces every constraint
            raise RuntimeError(f"internal: found flow fails verification: {report.violation}")
        return SearchOutcome("found", flow, nodes, budget)
    if res == _BUDGET:
        return SearchOutcome("undecided", None, nodes, budget)
    return SearchOutcome("nonexistent", None, nodes, budget)


def flow_number(g: MultiGraph, k_max: int, budget: int = DEFAULT_BUDGET) -> FlowNumberResult:
    """Smallest k <= k_max admitting a zero-sum k-flow.

    Scans k upward; a flow found at k is minimal because existence is
    monotone in k.  An undecided scan step propagates as undecided, since
    the true minimum might hide there.
    """
    if k_max < 2:
        raise ValueError(f"need k_max >= 2, got {k_max}")
    outcomes: dict[int, SearchOutcome] = {}
    for k in range(2, k_max + 1):
        outcome = solve(g, k, budget)
        outcomes[k] = outcome
        if outcome.status == "found":
            return FlowNumberResult(k, "found", outcomes)
        if outcome.status == "undecided":
            return FlowNumberResult(None, "undecided", outcomes)
    return FlowNumberResult(None, "nonexistent", outcomes)


def cross_check(g: MultiGraph, flow: IntFlow, budget: int = DEFAULT_BUDGET) -> CrossCheckReport:
    """Compare a constructed flow against the exact search.

    Consistency means the solver never proves nonexistence at the claimed
    bound.  A strictly smaller feasible k is flagged as useful data, not a
    failure; the scan below the claim stops at the first undecided step.
    """
    report = verify_flow(g, flow)
    if not report.ok:
        raise ValueError(f"constructed flow fails verification: {report.violation}")
    claimed = flow.k
    at_claimed = solve(g, claimed, budget)
    smaller = None
    for k in range(2, claimed):
        outcome = solve(g, k, budget)
        if outcome.status == "found":
            smaller = k
            break
        if outcome.status == "undecided":
            break
    return CrossCheckReport(claimed, at_claimed.status, at_claimed.status != "nonexistent", smaller)
