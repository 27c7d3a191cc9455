"""Shared fixtures: the naive expansion oracle and the generator zoo.

The oracle below multiplies the linear factors term by term into a plain
dict, with no pruning, no state merging, and no shared code with the
production engines; it is the ground truth every frozen value in the
suite was computed from.
"""

from __future__ import annotations

import random

import pytest

from graphpoly.graphs import (
    DIFF,
    SignedMultigraph,
    build_complete,
    build_cycle,
    build_cycle_power,
    build_digon,
    build_path,
    double_edges,
    make_graph,
)


def expand_polynomial(g: SignedMultigraph) -> dict[tuple[int, ...], int]:
    """Full expansion of the graph polynomial (test oracle, <= ~16 edges)."""
    poly: dict[tuple[int, ...], int] = {(0,) * g.n: 1}
    for u, v, tag in g.edges:
        nxt: dict[tuple[int, ...], int] = {}
        for expo, c in poly.items():
            e_hi = list(expo)
            e_hi[v - 1] += 1
            k_hi = tuple(e_hi)
            nxt[k_hi] = nxt.get(k_hi, 0) + c
            e_lo = list(expo)
            e_lo[u - 1] += 1
            k_lo = tuple(e_lo)
            s = -c if tag == DIFF else c
            nxt[k_lo] = nxt.get(k_lo, 0) + s
        poly = {k: c for k, c in nxt.items() if c}
    return poly


def random_simple_graph(rng: random.Random, n: int, m: int) -> SignedMultigraph:
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    rng.shuffle(pairs)
    return make_graph(n, pairs[:m])


def even_degree_zoo(max_edges: int = 12) -> list[tuple[str, SignedMultigraph]]:
    """Generator-built graphs with all degrees even and <= max_edges edges."""
    zoo: list[tuple[str, SignedMultigraph]] = [("digon", build_digon())]
    for n in range(3, 13):
        g = build_cycle(n)
        if g.num_edges <= max_edges:
            zoo.append((f"C{n}", g))
    for n, p in [(5, 2), (6, 2), (7, 3)]:
        g = build_cycle_power(n, p)
        if g.num_edges <= max_edges:
            zoo.append((f"C{n}^{p}", g))
    for k in range(2, 7):
        g = double_edges(build_path(k))
        if g.num_edges <= max_edges:
            zoo.append((f"2*P{k}", g))
    for n in range(3, 7):
        g = double_edges(build_cycle(n))
        if g.num_edges <= max_edges:
            zoo.append((f"2*C{n}", g))
    k5 = build_complete(5)
    if k5.num_edges <= max_edges:
        zoo.append(("K5", k5))
    # triangle with one edge tripled: degrees (4, 4, 2)
    tri = build_cycle(3)
    zoo.append(("K3+e12x3", make_graph(3, list(tri.edges) + [(1, 2), (1, 2)])))
    zoo.append(("edgeless3", make_graph(3, [])))
    return zoo


@pytest.fixture(scope="session")
def zoo12():
    return even_degree_zoo(12)


@pytest.fixture(scope="session")
def zoo8():
    return [(name, g) for name, g in even_degree_zoo(8)]
