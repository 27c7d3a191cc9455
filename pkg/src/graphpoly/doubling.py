"""Edge-doubling pipelines and the sign-search choosability plan.

Doubling every edge of G squares its polynomial, and the central
coefficient of the square is a same-sign sum of squared coefficients, so
it can never vanish.  Doubling only the edges missed by a cycle cover of
the maximum-degree vertices keeps the maximum degree at 2*Delta - 2 while
inheriting a nonzero almost-central coefficient, which feeds the
even-cycle transfer argument and yields AT(G x C_even) <= Delta(G) + 1.

For arbitrary graphs and an arbitrary nonzero coefficient tau, a plan
partitions the vertices by how far tau sits from the half-degree point,
pairs up the surplus and deficit into multisets A and B, and searches the
2^m sign choices of extra (x_a +- x_b) factors until the augmented
polynomial has a nonzero almost-central coefficient; the resulting
multigraph certifies f-choosability of G x C_even for the plan's f.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .certificates import encode_int, finalize_certificate
from .coefficients import (
    almost_central_scan,
    central_exponent,
    coefficient,
    mirror_sign,
    support,
)
from .errors import InvariantViolationError
from .graphio import graph_digest, to_json_obj
from .graphs import (
    DIFF,
    SUM,
    SignedMultigraph,
    cover_edge_indices,
    double_edges,
    find_cycle_cover,
    make_graph,
)


def squared_central_check(g: SignedMultigraph, *, budget: Optional[int] = None) -> int:
    """Central coefficient of the all-edges-doubled graph, computed two ways.

    Directly on the doubled multigraph, and independently as
    (+-1) * sum of squared coefficients over the full support of g (the
    sign is the mirror sign of g).  A mismatch is an engine bug and raises.
    """
    doubled = double_edges(g)
    direct = coefficient(doubled, central_exponent(doubled), budget=budget)
    deg = g.degree_vector()
    full = support(g, deg, budget=budget)
    via_squares = mirror_sign(g) * sum(c * c for c in full.entries.values())
    if direct != via_squares:
        raise InvariantViolationError(
            f"squared-central mismatch: direct {direct} vs sum-of-squares {via_squares}"
        )
    return direct


def cycle_cover_certificate(
    g: SignedMultigraph,
    *,
    k: int = 4,
    budget: Optional[int] = None,
    trace_vertex_cap: int = 12,
) -> Optional[dict]:
    """Cover-and-double certificate: AT(G x C_even) <= Delta(G) + 1, all even lengths.

    Finds vertex-disjoint cycles covering every maximum-degree vertex
    (None if no cover exists), doubles all other edges, and scans the
    doubled graph's almost-central window.  An empty window would
    contradict the sum-of-squares argument and raises.  When the doubled
    graph is small enough the transfer trace for cycle length k is
    embedded as a numeric sub-check.
    """
    if not g.is_simple():
        raise ValueError("cover pipeline expects a simple graph")
    if g.num_edges == 0:
        raise ValueError("edgeless graph has nothing to certify")
    from .transfer import build_phi, trace_power

    deg = g.degree_vector()
    delta = max(deg)
    targets = [v for v in range(1, g.n + 1) if deg[v - 1] == delta]
    cover = find_cycle_cover(g, targets)
    if cover is None:
        return None
    in_cover = cover_edge_indices(g, cover)
    doubled_idx = sorted(set(range(g.num_edges)) - in_cover)
    gprime = double_edges(g, doubled_idx)
    scan = almost_central_scan(gprime, budget=budget)
    if not scan.entries:
        raise InvariantViolationError(
            "cycle cover exists but the doubled graph has an empty almost-central window"
        )
    witness = scan.witness()
    cert = {
        "kind": "prop_cover",
        "graph": to_json_obj(g),
        "graph_digest": graph_digest(g),
        "cover_cycles": [list(c) for c in cover],
        "doubled_edge_indices": doubled_idx,
        "witness_exponent": list(witness),
        "witness_value": encode_int(scan.entries[witness]),
        "at_bound": delta + 1,
        "k": k,
    }
    if gprime.n <= trace_vertex_cap:
        tr = trace_power(build_phi(gprime, budget=budget), k)
        if tr == 0:
            raise InvariantViolationError("nonzero window but zero trace; engine bug")
        cert["trace_value"] = encode_int(tr)
    else:
        cert["trace_value"] = None
    return finalize_certificate(cert)


# ---------------------------------------------------------------------------
# f-choosability plans
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChoosabilityPlan:
    """Vertex partition and pairing data for the sign search.

    All distance bookkeeping is in doubled integers (dist2[i] is
    |2 tau_i - deg_i|) so half-integer distances stay exact.  The parts:
    exact half-degree (on_center), at least 1 below/above (below, above),
    exactly 1/2 below/above (half_below, half_above); spill (subset of the
    larger of below/above) rebalances the multiset sizes.  Multisets a_side
    and b_side always end up equal in size; pairing zips them sorted.
    """

    graph: SignedMultigraph
    tau: tuple[int, ...]
    tau_value: int
    on_center: tuple[int, ...]
    below: tuple[int, ...]
    half_below: tuple[int, ...]
    above: tuple[int, ...]
    half_above: tuple[int, ...]
    spill_below: tuple[int, ...]
    spill_above: tuple[int, ...]
    a_side: tuple[int, ...]
    b_side: tuple[int, ...]
    pairing: tuple[tuple[int, int], ...]
    f: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.a_side)

    def as_json(self) -> dict:
        return {
            "graph": to_json_obj(self.graph),
            "tau": list(self.tau),
            "tau_value": encode_int(self.tau_value),
            "on_center": list(self.on_center),
            "below": list(self.below),
            "half_below": list(self.half_below),
            "above": list(self.above),
            "half_above": list(self.half_above),
            "spill_below": list(self.spill_below),
            "spill_above": list(self.spill_above),
            "a_side": list(self.a_side),
            "b_side": list(self.b_side),
            "pairing": [list(p) for p in self.pairing],
            "f": list(self.f),
        }


def build_plan(
    g: SignedMultigraph, tau: Sequence[int], *, budget: Optional[int] = None
) -> ChoosabilityPlan:
    """Classify vertices by 2*tau - deg and assemble the pairing multisets.

    tau must be a nonzero coefficient of g's polynomial (verified).  The
    spill subsets are the lexicographically smallest choices, and the
    pairing zips the two sorted multisets, so plans are reproducible.
    """
    tau = tuple(int(x) for x in tau)
    value = coefficient(g, tau, budget=budget)
    if value == 0:
        raise ValueError(f"tau {tau} has zero coefficient; a plan needs a support element")
    deg = g.degree_vector()
    on_center, below, half_below, above, half_above = [], [], [], [], []
    for i in range(1, g.n + 1):
        d2 = 2 * tau[i - 1] - deg[i - 1]
        if d2 == 0:
            on_center.append(i)
        elif d2 <= -2:
            below.append(i)
        elif d2 == -1:
            half_below.append(i)
        elif d2 >= 2:
            above.append(i)
        else:
            half_above.append(i)

    dist2 = [abs(2 * tau[i] - deg[i]) for i in range(g.n)]  # 0-based
    n_spill_below = max(0, len(below) - len(above))
    n_spill_above = max(0, len(above) - len(below))
    spill_below = tuple(below[:n_spill_below])
    spill_above = tuple(above[:n_spill_above])

    def side(ones: list[int], halves: list[int], spill: tuple[int, ...]) -> list[int]:
        out: list[int] = []
        for i in ones:
            times = dist2[i - 1] if i in spill else dist2[i - 1] - 2
            out.extend([i] * times)
        for i in halves:
            out.extend([i] * dist2[i - 1])
        return sorted(out)

    a_side = side(below, half_below, spill_below)
    b_side = side(above, half_above, spill_above)
    if len(a_side) != len(b_side):
        raise InvariantViolationError(
            f"multiset sizes differ: {len(a_side)} vs {len(b_side)}"
        )

    f2 = []  # doubled list sizes, divided at the end
    for i in range(1, g.n + 1):
        d = deg[i - 1]
        if i in on_center:
            f2.append(d + 4)
        elif (i in below or i in above) and i not in spill_below and i not in spill_above:
            f2.append(d + dist2[i - 1] + 2)
        else:
            f2.append(d + dist2[i - 1] + 4)
    if any(x % 2 for x in f2):
        raise InvariantViolationError("list sizes came out non-integral")
    f = tuple(x // 2 for x in f2)

    return ChoosabilityPlan(
        graph=g,
        tau=tau,
        tau_value=value,
        on_center=tuple(on_center),
        below=tuple(below),
        half_below=tuple(half_below),
        above=tuple(above),
        half_above=tuple(half_above),
        spill_below=spill_below,
        spill_above=spill_above,
        a_side=tuple(a_side),
        b_side=tuple(b_side),
        pairing=tuple(zip(a_side, b_side)),
        f=f,
    )


def plan_polynomial(plan: ChoosabilityPlan, signs: Sequence[str]) -> SignedMultigraph:
    """The multigraph of F_G * prod (x_a +- x_b) for one sign choice.

    Each '+' pairing adds a SUM edge, each '-' a DIFF edge (the overall
    sign of a DIFF factor written canonically does not affect which
    coefficients vanish).
    """
    extra = []
    for (a, b), s in zip(plan.pairing, signs):
        extra.append((min(a, b), max(a, b), SUM if s == "+" else DIFF))
    return make_graph(plan.graph.n, list(plan.graph.edges) + extra)


def plan_target_exponent(plan: ChoosabilityPlan) -> tuple[int, ...]:
    """tau plus one for each occurrence in the a-side multiset."""
    t = list(plan.tau)
    for a in plan.a_side:
        t[a - 1] += 1
    return tuple(t)


def epsilon_search(plan: ChoosabilityPlan, *, budget: Optional[int] = None) -> dict:
    """Find signs making the plan's target coefficient nonzero; certify.

    Every sign vector is tried in lexicographic order ('+' before '-'),
    so the recorded choice is the smallest that works.  The target monomial
    is a linear combination of the augmented polynomials over all sign
    choices, so exhausting them without a hit contradicts tau being a
    support element and raises.
    """
    target = plan_target_exponent(plan)
    for signs in itertools.product("+-", repeat=plan.m):
        q = plan_polynomial(plan, signs)
        deg_q = q.degree_vector()
        if any(d % 2 for d in deg_q):
            raise InvariantViolationError("augmented multigraph has an odd degree")
        if any(d != 2 * fv - 4 for d, fv in zip(deg_q, plan.f)):
            raise InvariantViolationError("augmented degrees disagree with 2f - 4")
        value = coefficient(q, target, budget=budget)
        if value != 0:
            cert = {
                "kind": "fplan",
                "plan": plan.as_json(),
                "epsilon": "".join(signs),
                "witness_exponent": list(target),
                "witness_value": encode_int(value),
                "claim": "f-choosable-product-with-even-cycles",
                "f": list(plan.f),
            }
            return finalize_certificate(cert)
    raise InvariantViolationError(
        "no sign choice produced a nonzero coefficient; this contradicts tau being in the support"
    )
