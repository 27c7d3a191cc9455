"""Exact coefficient extraction for graph polynomials.

The polynomial of a SignedMultigraph is the product over edges of
(x_v - x_u) for DIFF tags and (x_v + x_u) for SUM tags, u < v.  Expanding
the product means choosing one endpoint per edge; a monomial's exponent
vector counts how often each vertex was chosen, and the coefficient is the
signed number of ways to realize it (a DIFF edge contributes -1 when its
lower endpoint is chosen).

Two independent engines are provided and must agree:

* a frontier DP over edges in canonical order, merging partial exponent
  states and freezing a vertex once its last incident edge is processed;
* a direct depth-first enumeration of per-edge choices with feasibility
  pruning but no state merging.

Everything is arbitrary-precision integer arithmetic; there is no floating
point in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BudgetExceededError, InvariantViolationError
from .graphs import DIFF, SignedMultigraph

# Default cap on DP state expansions; exceeding it raises, never truncates.
DEFAULT_BUDGET = 10**8

ExponentVector = tuple[int, ...]


def _check_exponent(g: SignedMultigraph, xi: Sequence[int]) -> ExponentVector:
    xi = tuple(int(x) for x in xi)
    if len(xi) != g.n:
        raise ValueError(f"exponent length {len(xi)} != vertex count {g.n}")
    if any(x < 0 for x in xi):
        raise ValueError("exponents must be non-negative")
    return xi


def _edge_choices(edge):
    """(vertex, sign) choices for one factor: pick x_v (+1) or x_u (+-1)."""
    u, v, tag = edge
    return ((v, 1), (u, -1 if tag == DIFF else 1))


def coefficient(
    g: SignedMultigraph,
    xi: Sequence[int],
    *,
    method: str = "dp",
    budget: Optional[int] = None,
) -> int:
    """Exact coefficient of x^xi in the graph polynomial of g.

    Returns 0 when |xi| != |E| (the polynomial is homogeneous of degree
    |E|, so this is the mathematically correct value; callers that care
    can pre-check).  method is "dp", "enumerate", or "both"; "both" runs
    the two independent engines and raises if they ever disagree.
    """
    xi = _check_exponent(g, xi)
    budget = DEFAULT_BUDGET if budget is None else budget
    if sum(xi) != g.num_edges:
        return 0
    deg = g.degree_vector()
    if any(x > d for x, d in zip(xi, deg)):
        return 0
    if method == "dp":
        return _coefficient_dp(g, xi, budget)
    if method == "enumerate":
        return _coefficient_enumeration(g, xi, budget)
    if method == "both":
        a = _coefficient_dp(g, xi, budget)
        b = _coefficient_enumeration(g, xi, budget)
        if a != b:
            raise InvariantViolationError(
                f"engines disagree on {xi}: dp={a}, enumeration={b}"
            )
        return a
    raise ValueError(f"unknown method {method!r}")


def _coefficient_dp(g: SignedMultigraph, xi: ExponentVector, budget: int) -> int:
    """Frontier DP: process edges in canonical order, freeze finished vertices.

    A state maps each "active" vertex (some but not all incident edges
    processed) to its partial exponent; once a vertex's last incident edge
    is consumed its count must equal the target and it leaves the state,
    which keeps the live frontier small.
    """
    edges = g.edges
    m = len(edges)
    last = [-1] * (g.n + 1)
    remaining = [0] * (g.n + 1)
    for i, (u, v, _) in enumerate(edges):
        last[u] = last[v] = i
        remaining[u] += 1
        remaining[v] += 1

    states: dict[tuple, int] = {(): 1}
    expansions = 0
    for i, edge in enumerate(edges):
        u, v, _ = edge
        remaining[u] -= 1
        remaining[v] -= 1
        choices = _edge_choices(edge)
        new_states: dict[tuple, int] = {}
        for state, coef in states.items():
            cnt = dict(state)
            for w, sign in choices:
                expansions += 1
                if expansions > budget:
                    raise BudgetExceededError(budget, expansions)
                c = cnt.get(w, 0) + 1
                if c > xi[w - 1]:
                    continue
                nxt = dict(cnt)
                nxt[w] = c
                ok = True
                for t in (u, v):
                    have = nxt.get(t, 0)
                    if have + remaining[t] < xi[t - 1]:
                        ok = False
                        break
                    if last[t] == i:
                        if have != xi[t - 1]:
                            ok = False
                            break
                        nxt.pop(t, None)
                if not ok:
                    continue
                key = tuple(sorted(nxt.items()))
                val = new_states.get(key, 0) + coef * sign
                if val:
                    new_states[key] = val
                elif key in new_states:
                    del new_states[key]
        states = new_states
        if not states:
            return 0
    return states.get((), 0)


def _coefficient_enumeration(g: SignedMultigraph, xi: ExponentVector, budget: int) -> int:
    """Depth-first sum over per-edge endpoint choices (no memoization)."""
    edges = g.edges
    m = len(edges)
    remaining = [0] * (g.n + 1)
    for u, v, _ in edges:
        remaining[u] += 1
        remaining[v] += 1
    counts = [0] * (g.n + 1)
    target = (0,) + xi  # 1-based
    choices = [_edge_choices(e) for e in edges]
    endpoints = [(u, v) for u, v, _ in edges]
    total = 0
    nodes = 0

    def dfs(i: int, sign: int):
        nonlocal total, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(budget, nodes, "enumeration nodes")
        if i == m:
            total += sign
            return
        u, v = endpoints[i]
        remaining[u] -= 1
        remaining[v] -= 1
        for w, s in choices[i]:
            counts[w] += 1
            if counts[w] <= target[w] and all(
                counts[t] + remaining[t] >= target[t] for t in (u, v)
            ):
                dfs(i + 1, sign * s)
            counts[w] -= 1
        remaining[u] += 1
        remaining[v] += 1

    dfs(0, 1)
    return total


def coefficient_crosscheck(g: SignedMultigraph, xi: Sequence[int], *, budget: Optional[int] = None) -> int:
    """Run both engines and return the agreed value (raises on mismatch)."""
    return coefficient(g, xi, method="both", budget=budget)


# ---------------------------------------------------------------------------
# support scans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SupportMap:
    """Nonzero coefficients inside a per-variable box, with its metadata.

    entries maps exponent vectors to coefficients (never zero); cap is the
    per-variable upper bound used by the scan, floor the lower bound (all
    zeros unless a window scan set one).
    """

    entries: dict[ExponentVector, int]
    cap: ExponentVector
    floor: ExponentVector

    def __len__(self) -> int:
        return len(self.entries)

    def witness(self) -> Optional[ExponentVector]:
        """Lexicographically smallest exponent, or None if empty."""
        return min(self.entries) if self.entries else None

    def sorted_items(self) -> list[tuple[ExponentVector, int]]:
        return sorted(self.entries.items())


def support(
    g: SignedMultigraph,
    cap: Sequence[int],
    *,
    floor: Optional[Sequence[int]] = None,
    budget: Optional[int] = None,
) -> SupportMap:
    """All nonzero coefficients with floor_i <= xi_i <= cap_i, one DP pass.

    Exponents only grow along the scan, so a branch dies as soon as a
    vertex exceeds its cap or can no longer reach its floor.
    """
    cap = _check_exponent(g, cap)
    if floor is None:
        floor_t: ExponentVector = (0,) * g.n
    else:
        floor_t = _check_exponent(g, floor)
    if any(f > c for f, c in zip(floor_t, cap)):
        raise ValueError("floor exceeds cap")
    budget = DEFAULT_BUDGET if budget is None else budget

    edges = g.edges
    remaining = [0] * (g.n + 1)
    for u, v, _ in edges:
        remaining[u] += 1
        remaining[v] += 1
    if any(remaining[i + 1] < floor_t[i] for i in range(g.n)):
        return SupportMap({}, cap, floor_t)

    states: dict[ExponentVector, int] = {(0,) * g.n: 1}
    expansions = 0
    for edge in edges:
        u, v, _ = edge
        remaining[u] -= 1
        remaining[v] -= 1
        choices = _edge_choices(edge)
        new_states: dict[ExponentVector, int] = {}
        for state, coef in states.items():
            for w, sign in choices:
                expansions += 1
                if expansions > budget:
                    raise BudgetExceededError(budget, expansions)
                c = state[w - 1] + 1
                if c > cap[w - 1]:
                    continue
                if any(
                    state[t - 1] + (1 if t == w else 0) + remaining[t] < floor_t[t - 1]
                    for t in (u, v)
                ):
                    continue
                key = state[: w - 1] + (c,) + state[w:]
                val = new_states.get(key, 0) + coef * sign
                if val:
                    new_states[key] = val
                elif key in new_states:
                    del new_states[key]
        states = new_states
        if not states:
            break
    entries = {
        k: c
        for k, c in states.items()
        if c and all(f <= x for f, x in zip(floor_t, k))
    }
    return SupportMap(entries, cap, floor_t)


def almost_central_scan(g: SignedMultigraph, *, budget: Optional[int] = None) -> SupportMap:
    """Nonzero coefficients with every exponent within 1 of deg(v)/2.

    Only defined when all degrees are even (the half-degree point must be
    integral); odd-degree input is rejected with the offending vertex.
    """
    deg = g.degree_vector()
    for i, d in enumerate(deg):
        if d % 2:
            raise ValueError(
                f"vertex {i + 1} has odd degree {d}; the half-degree window needs even degrees"
            )
    a = [d // 2 for d in deg]
    cap = tuple(x + 1 for x in a)
    floor = tuple(max(x - 1, 0) for x in a)
    return support(g, cap, floor=floor, budget=budget)


def central_exponent(g: SignedMultigraph) -> ExponentVector:
    deg = g.degree_vector()
    if any(d % 2 for d in deg):
        raise ValueError("central exponent needs all degrees even")
    return tuple(d // 2 for d in deg)


# ---------------------------------------------------------------------------
# Alon-Tarsi numbers and symmetry checks
# ---------------------------------------------------------------------------

def alon_tarsi_number_exact(
    g: SignedMultigraph, *, budget: Optional[int] = None
) -> tuple[int, Optional[ExponentVector]]:
    """Exact Alon-Tarsi number with a witness exponent (desk scale).

    Scans supports with growing per-variable caps until one is nonempty;
    the answer is (max exponent of the witness) + 1.  The witness is the
    lexicographically smallest qualifying exponent.  An edgeless graph has
    value 1 (the empty product is the constant 1).
    """
    m = g.num_edges
    if m == 0:
        return 1, (0,) * g.n
    deg = g.degree_vector()
    k_min = max(2, -(-m // g.n) + 1)  # need n*(k-1) >= |E|
    k_max = g.max_degree() + 1  # cap = degree always has the full support
    for k in range(k_min, k_max + 1):
        cap = tuple(min(k - 1, d) for d in deg)
        sup = support(g, cap, budget=budget)
        if sup.entries:
            return k, sup.witness()
    raise InvariantViolationError("support empty even at cap = degree vector")


def mirror_sign(g: SignedMultigraph) -> int:
    """Sign relating a coefficient to its degree-complement coefficient.

    Flipping the endpoint choice in every factor maps the monomial x^xi to
    x^(deg - xi) and multiplies the term by -1 per DIFF edge, so the two
    coefficients agree up to (-1)^(number of DIFF edges).
    """
    diff_edges = sum(1 for _, _, tag in g.edges if tag == DIFF)
    return -1 if diff_edges % 2 else 1


def mirror_coefficient_check(
    g: SignedMultigraph, xi: Sequence[int], *, budget: Optional[int] = None
) -> bool:
    """Verify [x^xi]F = (-1)^|E| [x^(deg - xi)]F for a DIFF-only graph."""
    if not g.is_diff_only():
        raise ValueError("mirror check as stated applies to DIFF-only graphs")
    xi = _check_exponent(g, xi)
    deg = g.degree_vector()
    if any(x > d for x, d in zip(xi, deg)):
        return coefficient(g, xi, budget=budget) == 0
    mirrored = tuple(d - x for d, x in zip(deg, xi))
    sign = -1 if g.num_edges % 2 else 1
    return coefficient(g, xi, budget=budget) == sign * coefficient(g, mirrored, budget=budget)
