"""Degree-constrained orientations, box constructions, and AT certificates.

An orientation assigns each edge a direction; FORWARD means u -> v for the
canonical edge (u, v) with u < v.  The bridge to coefficients: summing the
signed endpoint choices of the graph polynomial over all orientations with
a fixed outdegree vector d gives [x^d]F_G, and an orientation without odd
directed cycles forces that coefficient to be nonzero.  That turns any
such orientation into a machine-checkable Alon-Tarsi bound.

Degree-window orientations (l_v <= outdeg(v) <= u_v) are found by a
reduction to maximum flow with lower bounds (a small deterministic Dinic
solver); the classical two counting conditions over all vertex subsets
are implemented as an independent exhaustive checker.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .certificates import encode_int, finalize_certificate
from .coefficients import ExponentVector, coefficient
from .errors import GraphPolyError, InvariantViolationError
from .graphio import graph_digest, to_json_obj
from .graphs import (
    SignedMultigraph,
    build_cycle,
    build_path,
    cartesian_product,
    degeneracy_order,
    is_bipartite,
)

FORWARD = True
BACKWARD = False

# Direct coefficient re-verification of an orientation witness is attempted
# only up to this many edges; larger graphs keep the orientation itself as
# the witness.
COEFF_VERIFY_EDGE_LIMIT = 26


@dataclass(frozen=True)
class Orientation:
    """A direction per canonical edge of a graph."""

    graph: SignedMultigraph
    directions: tuple[bool, ...]  # True = FORWARD (u -> v)

    def __post_init__(self):
        if len(self.directions) != self.graph.num_edges:
            raise ValueError("one direction per edge required")

    def arcs(self) -> list[tuple[int, int]]:
        """(tail, head) per edge, aligned with graph.edges."""
        out = []
        for (u, v, _), fwd in zip(self.graph.edges, self.directions):
            out.append((u, v) if fwd else (v, u))
        return out

    def outdegree_vector(self) -> ExponentVector:
        d = [0] * self.graph.n
        for tail, _ in self.arcs():
            d[tail - 1] += 1
        return tuple(d)

    def reversal_parity(self) -> int:
        """Parity of edges directed against the canonical u -> v direction."""
        return sum(1 for f in self.directions if not f) % 2

    def bitstring(self) -> str:
        return "".join("1" if f else "0" for f in self.directions)


def orientation_from_bitstring(g: SignedMultigraph, bits: str) -> Orientation:
    if len(bits) != g.num_edges or set(bits) - {"0", "1"}:
        raise ValueError("direction bitstring must be 0/1 of edge-count length")
    return Orientation(g, tuple(b == "1" for b in bits))


# ---------------------------------------------------------------------------
# max flow with lower bounds
# ---------------------------------------------------------------------------

class _Dinic:
    """Deterministic integer max-flow (adjacency in insertion order)."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, c: int) -> int:
        i = len(self.to)
        self.head[u].append(i)
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(i + 1)
        self.to.append(u)
        self.cap.append(0)
        return i

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            for v in queue:
                for i in self.head[v]:
                    if self.cap[i] > 0 and level[self.to[i]] < 0:
                        level[self.to[i]] = level[v] + 1
                        queue.append(self.to[i])
            if level[t] < 0:
                return flow
            it = [0] * self.n

            def dfs(v: int, f: int) -> int:
                if v == t:
                    return f
                while it[v] < len(self.head[v]):
                    i = self.head[v][it[v]]
                    w = self.to[i]
                    if self.cap[i] > 0 and level[w] == level[v] + 1:
                        d = dfs(w, min(f, self.cap[i]))
                        if d > 0:
                            self.cap[i] -= d
                            self.cap[i ^ 1] += d
                            return d
                    it[v] += 1
                return 0

            while True:
                f = dfs(s, 1 << 60)
                if f == 0:
                    break
                flow += f


def orient_with_bounds(
    g: SignedMultigraph, lower: Sequence[int], upper: Sequence[int]
) -> Optional[Orientation]:
    """Orientation with lower[v] <= outdeg(v) <= upper[v], or None if infeasible.

    Standard circulation reduction: a unit per edge must flow to one of its
    endpoints, and each vertex passes between lower[v] and upper[v] units to
    the sink.  Infeasibility is a value, not an error; run
    check_window_conditions for the violating subset.
    """
    lower = tuple(int(x) for x in lower)
    upper = tuple(int(x) for x in upper)
    if len(lower) != g.n or len(upper) != g.n:
        raise ValueError("bound vectors must have one entry per vertex")
    if any(l < 0 for l in lower) or any(l > u for l, u in zip(lower, upper)):
        raise ValueError("need 0 <= lower <= upper componentwise")

    m = g.num_edges
    # nodes: 0 super-source, 1 super-sink, 2 source, 3 sink,
    #        4..4+m-1 edges, 4+m..4+m+n-1 vertices
    SS, TT, S, T = 0, 1, 2, 3
    e_node = lambda i: 4 + i
    v_node = lambda v: 4 + m + v - 1
    net = _Dinic(4 + m + g.n)
    excess = [0] * (4 + m + g.n)

    for i in range(m):
        # source -> edge with bounds [1, 1]: becomes pure excess
        excess[e_node(i)] += 1
        excess[S] -= 1
    choice_arcs: list[tuple[int, int]] = []
    for i, (u, v, _) in enumerate(g.edges):
        # The unit leaving through an endpoint makes that endpoint the tail.
        a_u = net.add_edge(e_node(i), v_node(u), 1)
        a_v = net.add_edge(e_node(i), v_node(v), 1)
        choice_arcs.append((a_u, a_v))
    for v in range(1, g.n + 1):
        l, u = lower[v - 1], upper[v - 1]
        if u > l:
            net.add_edge(v_node(v), T, u - l)
        excess[T] += l
        excess[v_node(v)] -= l
    net.add_edge(T, S, m + 1)

    need = 0
    for node, ex in enumerate(excess):
        if ex > 0:
            net.add_edge(SS, node, ex)
            need += ex
        elif ex < 0:
            net.add_edge(node, TT, -ex)
    if net.max_flow(SS, TT) != need:
        return None

    directions = []
    for i, (a_u, a_v) in enumerate(choice_arcs):
        used_u = net.cap[a_u] == 0  # saturated: unit went to u, tail = u
        if used_u:
            directions.append(FORWARD)
        else:
            if net.cap[a_v] != 0:
                raise InvariantViolationError("edge unit unrouted in feasible flow")
            directions.append(BACKWARD)
    ori = Orientation(g, tuple(directions))
    d = ori.outdegree_vector()
    if any(not (l <= x <= u) for x, l, u in zip(d, lower, upper)):
        raise InvariantViolationError("flow produced out-of-window outdegrees")
    return ori


@dataclass(frozen=True)
class WindowConditionsReport:
    """Exhaustive verdict on the two subset counting conditions.

    For every W: |E(W)| <= sum of upper over W, and the number of edges
    touching W must be >= sum of lower over W.  These are necessary and
    sufficient for a degree-window orientation (Frank's orientation
    theorem), which the flow solver realizes constructively.
    """

    ok: bool
    failing_subset: Optional[tuple[int, ...]]
    condition: Optional[int]  # 1 or 2
    lhs: Optional[int]
    rhs: Optional[int]
    subsets_checked: int


def check_window_conditions(
    g: SignedMultigraph,
    lower: Sequence[int],
    upper: Sequence[int],
    *,
    vertex_cap: int = 20,
) -> WindowConditionsReport:
    """Check both counting conditions for all 2^n subsets (n <= vertex_cap)."""
    if g.n > vertex_cap:
        raise GraphPolyError(f"exhaustive subset check refused for n={g.n} > {vertex_cap}")
    lower = tuple(int(x) for x in lower)
    upper = tuple(int(x) for x in upper)
    masks = [(1 << (u - 1)) | (1 << (v - 1)) for u, v, _ in g.edges]
    checked = 0
    for w in range(1 << g.n):
        checked += 1
        inside = 0
        touching = 0
        for em in masks:
            if em & w == em:
                inside += 1
            if em & w:
                touching += 1
        su = sum(upper[i] for i in range(g.n) if w >> i & 1)
        sl = sum(lower[i] for i in range(g.n) if w >> i & 1)
        subset = tuple(i + 1 for i in range(g.n) if w >> i & 1)
        if inside > su:
            return WindowConditionsReport(False, subset, 1, inside, su, checked)
        if touching < sl:
            return WindowConditionsReport(False, subset, 2, touching, sl, checked)
    return WindowConditionsReport(True, None, None, None, None, checked)


# ---------------------------------------------------------------------------
# box products of paths and the chess construction for odd cycles
# ---------------------------------------------------------------------------

def _flat_index(coords: Sequence[int], dims: Sequence[int]) -> int:
    """Row-major 1-based index of 0-based coords, matching cartesian_product."""
    idx = 0
    for c, d in zip(coords, dims):
        idx = idx * d + c
    return idx + 1


def path_product(ks: Sequence[int]) -> SignedMultigraph:
    g = build_path(ks[0])
    for k in ks[1:]:
        g = cartesian_product(g, build_path(k))
    return g


def box_orientation(ks: Sequence[int], *, size_cap: int = 4096) -> Optional[Orientation]:
    """Orientation of the path product with all outdegrees in {n-1, n}.

    Feasible exactly when the reciprocals of the side lengths sum to at
    most 1; infeasibility is returned as None (decided by the flow solver,
    not by the reciprocal test).
    """
    ks = [int(k) for k in ks]
    if not ks or any(k < 1 for k in ks):
        raise ValueError("side lengths must be positive integers")
    total = 1
    for k in ks:
        total *= k
    if total > size_cap:
        raise GraphPolyError(f"box with {total} vertices exceeds cap {size_cap}")
    n = len(ks)
    g = path_product(ks)
    return orient_with_bounds(g, [n - 1] * g.n, [n] * g.n)


def reciprocal_sum_ok(ks: Sequence[int]) -> bool:
    return sum(Fraction(1, k) for k in ks) <= 1


def odd_cycle_product_orientation(ks: Sequence[int], *, size_cap: int = 20000) -> Orientation:
    """Orientation of the product of cycles C_(2k_i+1) with no odd directed cycle.

    Requires sum of 1/k_i <= 1.  The torus is split into 2^n boxes by
    cutting each cycle into a low arc (k+1 vertices) and a high arc (k
    vertices); boxes are chess-colored by the parity of their index
    bitmask.  Every box gets a degree-window orientation of its path
    product (reversed in black boxes) and all boundary edges leave black
    boxes, so outdegrees stay in {n-1, n, n+1} and every directed cycle is
    trapped inside one bipartite box.
    """
    ks = [int(k) for k in ks]
    if not ks or any(k < 1 for k in ks):
        raise ValueError("cycle parameters must be positive integers")
    if not reciprocal_sum_ok(ks):
        raise ValueError(
            f"reciprocal sum {sum(Fraction(1, k) for k in ks)} exceeds 1; "
            "the box orientation does not exist"
        )
    n = len(ks)
    lengths = [2 * k + 1 for k in ks]
    total = 1
    for L in lengths:
        total *= L
    if total > size_cap:
        raise GraphPolyError(f"product with {total} vertices exceeds cap {size_cap}")

    g = build_cycle(lengths[0]) if n else None
    for L in lengths[1:]:
        g = cartesian_product(g, build_cycle(L))
    assert g is not None

    def coords_of(vertex: int) -> tuple[int, ...]:
        x = vertex - 1
        out = []
        for L in reversed(lengths):
            out.append(x % L)
            x //= L
        return tuple(reversed(out))

    def box_bits(coords: Sequence[int]) -> int:
        bits = 0
        for j, (c, k) in enumerate(zip(coords, ks)):
            if c > k:
                bits |= 1 << j
        return bits

    # One window orientation per box shape; shapes repeat across boxes.
    shape_cache: dict[tuple[int, ...], dict[tuple[int, int], int]] = {}

    def shape_tails(dims: tuple[int, ...]) -> dict[tuple[int, int], int]:
        if dims not in shape_cache:
            ori = box_orientation(dims)
            if ori is None:
                raise InvariantViolationError(f"box shape {dims} unexpectedly infeasible")
            shape_cache[dims] = {
                (u, v): (u if fwd else v)
                for (u, v, _), fwd in zip(ori.graph.edges, ori.directions)
            }
        return shape_cache[dims]

    directions = []
    for u, v, _ in g.edges:
        cu, cv = coords_of(u), coords_of(v)
        bu, bv = box_bits(cu), box_bits(cv)
        if bu != bv:
            # boundary edge: tail is the endpoint in the black box
            black_u = bin(bu).count("1") % 2 == 1
            tail = u if black_u else v
        else:
            bits = bu
            dims = tuple(k + 1 if not (bits >> j & 1) else k for j, k in enumerate(ks))
            offs = tuple(0 if not (bits >> j & 1) else k + 1 for j, k in enumerate(ks))
            lu = _flat_index([c - o for c, o in zip(cu, offs)], dims)
            lv = _flat_index([c - o for c, o in zip(cv, offs)], dims)
            tails = shape_tails(dims)
            local_tail = tails[(min(lu, lv), max(lu, lv))]
            tail_is_u = (local_tail == lu)
            if bin(bits).count("1") % 2 == 1:  # black: reversed pattern
                tail_is_u = not tail_is_u
            tail = u if tail_is_u else v
        directions.append(tail == u)

    ori = Orientation(g, tuple(directions))
    d = ori.outdegree_vector()
    if any(not (n - 1 <= x <= n + 1) for x in d):
        raise InvariantViolationError(f"chess construction left outdegrees {sorted(set(d))}")
    return ori


# ---------------------------------------------------------------------------
# odd directed cycles
# ---------------------------------------------------------------------------

def _strongly_connected_components(n: int, arcs: Iterable[tuple[int, int]]) -> list[list[int]]:
    """Iterative Tarjan over vertices 1..n."""
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in arcs:
        adj[u].append(v)
    index = [0] * (n + 1)
    low = [0] * (n + 1)
    on_stack = [False] * (n + 1)
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = itertools.count(1)
    for root in range(1, n + 1):
        if index[root]:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = next(counter)
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while pi < len(adj[v]):
                w = adj[v][pi]
                pi += 1
                if not index[w]:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
            if work:
                p = work[-1][0]
                low[p] = min(low[p], low[v])
    return comps


def has_odd_directed_cycle(ori: Orientation) -> bool:
    """True iff some directed cycle of odd length exists.

    Criterion: a digraph has an odd directed closed walk (equivalently an
    odd directed cycle) iff the undirected graph of some strongly connected
    component's internal arcs is non-bipartite.
    """
    arcs = ori.arcs()
    comps = _strongly_connected_components(ori.graph.n, arcs)
    comp_id = [0] * (ori.graph.n + 1)
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_id[v] = ci
    internal: list[list[tuple[int, int]]] = [[] for _ in comps]
    for u, v in arcs:
        if comp_id[u] == comp_id[v]:
            internal[comp_id[u]].append((u, v))
    for comp, arcs_c in zip(comps, internal):
        if len(comp) < 2 or not arcs_c:
            continue
        color: dict[int, int] = {}
        adj: dict[int, list[int]] = {}
        for u, v in arcs_c:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        for s in comp:
            if s in color or s not in adj:
                continue
            color[s] = 1
            queue = [s]
            while queue:
                x = queue.pop()
                for y in adj[x]:
                    if y not in color:
                        color[y] = -color[x]
                        queue.append(y)
                    elif color[y] == color[x]:
                        return True
    return False


def acyclic_orientation(g: SignedMultigraph) -> Orientation:
    """Orient every edge toward the earlier vertex of the degeneracy order.

    Acyclic, with max outdegree = degeneracy, so its certificate recovers
    the greedy coloring bound.
    """
    _, order = degeneracy_order(g)
    pos = {v: i for i, v in enumerate(order)}
    directions = []
    for u, v, _ in g.edges:
        # tail = vertex removed earlier (its outdegree counts later vertices)
        directions.append(pos[u] < pos[v])
    return Orientation(g, tuple(directions))


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

def orientation_certificate(
    ori: Orientation, *, budget: Optional[int] = None
) -> dict:
    """Certificate that coefficient(G, outdegrees) != 0, so AT(G) <= max+1.

    Rejects orientations with odd directed cycles.  The coefficient is
    recomputed and embedded when the edge count is within the direct
    verification limit; otherwise the orientation itself stays the witness.
    """
    if has_odd_directed_cycle(ori):
        raise ValueError("orientation has an odd directed cycle; no certificate")
    g = ori.graph
    d = ori.outdegree_vector()
    cert = {
        "kind": "orientation",
        "graph": to_json_obj(g),
        "graph_digest": graph_digest(g),
        "directions": ori.bitstring(),
        "outdegrees": list(d),
        "at_bound": max(d, default=0) + 1,
        "witness_exponent": list(d),
    }
    if g.num_edges <= COEFF_VERIFY_EDGE_LIMIT:
        value = coefficient(g, d, budget=budget)
        if value == 0:
            raise InvariantViolationError(
                "odd-cycle-free orientation with zero coefficient; engine bug"
            )
        cert["witness_value"] = encode_int(value)
    else:
        cert["witness_value"] = None
    return finalize_certificate(cert)


def at_lower_bound(g: SignedMultigraph) -> tuple[int, str]:
    """Cheap certified lower bound for the Alon-Tarsi number."""
    if g.num_edges == 0:
        return 1, "edgeless"
    mean = -(-g.num_edges // g.n)  # ceil(|E|/n): some exponent reaches it
    bound = mean + 1
    reason = f"pigeonhole: some variable has exponent >= ceil(|E|/n) = {mean}"
    if not is_bipartite(g) and bound < 3:
        return 3, "contains an odd cycle, so ch >= chi >= 3"
    return bound, reason


def cycle_product_chain(
    odd_ks: Sequence[int],
    even_lengths: Sequence[int],
    *,
    budget: Optional[int] = None,
    trace_vertex_cap: int = 12,
) -> dict:
    """Certificate chain for a product of odd and even cycles.

    The odd part C_(2k_1+1) x ... x C_(2k_m+1) (requiring sum 1/k_i <= 1)
    is handled by the chess-construction orientation, whose outdegree
    vector is an almost-central witness; with no odd part, the first even
    cycle starts the chain with its rotational orientation (a central
    witness).  Each remaining even cycle factor is absorbed by a
    transfer-matrix step that keeps the central coefficient nonzero.

    With at least one even factor the final witness is the central
    exponent, whose maximum entry is the number of factors, so the bound
    is (factors) + 1 and matches the pigeonhole lower bound exactly.  A
    product of odd cycles only never passes through a trace step; its
    witness is the orientation outdegree vector, whose maximum can reach
    (factors) + 1, so the certified upper bound is one larger there.

    Trace steps are verified numerically while the intermediate product is
    small (at most trace_vertex_cap vertices) and recorded as structural
    beyond that.
    """
    from .transfer import build_phi, trace_power  # local: avoid import cycle

    odd_ks = [int(k) for k in odd_ks]
    evens = [int(x) for x in even_lengths]
    if any(k < 1 for k in odd_ks):
        raise ValueError("odd-cycle parameters must be >= 1")
    if any(x < 4 or x % 2 for x in evens):
        raise ValueError("even cycle lengths must be even and >= 4")
    if not odd_ks and not evens:
        raise ValueError("empty product")
    if odd_ks and not reciprocal_sum_ok(odd_ks):
        raise ValueError("reciprocal sum over odd-cycle parameters exceeds 1")

    steps: list[dict] = []
    if odd_ks:
        ori = odd_cycle_product_orientation(odd_ks)
        base_cert = orientation_certificate(ori, budget=budget)
        current = ori.graph
        remaining = list(evens)
    else:
        first = evens[0]
        cyc = build_cycle(first)
        rot = Orientation(
            cyc,
            tuple(
                u + 1 == v  # rim edges forward, the seam edge (1, L) backward
                for u, v, _ in cyc.edges
            ),
        )
        base_cert = orientation_certificate(rot, budget=budget)
        current = cyc
        remaining = list(evens[1:])

    for L in remaining:
        step: dict = {"even_length": L}
        if current.n <= trace_vertex_cap:
            phi = build_phi(current, budget=budget)
            tr = trace_power(phi, L)
            if tr == 0:
                raise InvariantViolationError(
                    "nonzero almost-central window but zero trace; engine bug"
                )
            step["verification"] = "trace"
            step["trace_value"] = encode_int(tr)
        else:
            step["verification"] = "structural"
            step["trace_value"] = None
        steps.append(step)
        current = cartesian_product(current, build_cycle(L))

    factors = len(odd_ks) + len(evens)
    if evens:
        at_upper = factors + 1
        upper_reason = "final central coefficient is nonzero; its exponent maxes at the factor count"
    else:
        at_upper = factors + 2
        upper_reason = (
            "orientation witness only; outdegrees reach factor count + 1 "
            "(the tighter bound needs an even cycle factor)"
        )
    lower, lower_reason = at_lower_bound(current)
    cert = {
        "kind": "chain",
        "odd_factors": [2 * k + 1 for k in odd_ks],
        "even_factors": evens,
        "base_certificate": base_cert,
        "steps": steps,
        "final_graph_digest": graph_digest(current),
        "at_upper": at_upper,
        "at_upper_reason": upper_reason,
        "at_lower": lower,
        "at_lower_reason": lower_reason,
        "ch_lower": 3 if odd_ks else 2,
    }
    return finalize_certificate(cert)
