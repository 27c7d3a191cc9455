"""Graph serialization: edge-list text, JSON, DOT, digests, generator specs."""

from __future__ import annotations

import hashlib
import json
import os
from typing import Union

from .graphs import (
    DIFF,
    SUM,
    SignedMultigraph,
    build_complete,
    build_cycle,
    build_cycle_power,
    build_digon,
    build_path,
    build_petersen,
    cartesian_product,
    make_graph,
)


def to_edge_list(g: SignedMultigraph) -> str:
    """Text format: header `n <count>`, then `u v` or `u v sum` per edge."""
    lines = [f"n {g.n}"]
    for u, v, tag in g.edges:
        lines.append(f"{u} {v} sum" if tag == SUM else f"{u} {v}")
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> SignedMultigraph:
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise ValueError(f"expected header 'n <count>', got {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) == 2:
            edges.append((int(parts[0]), int(parts[1]), DIFF))
        elif len(parts) == 3 and parts[2] == "sum":
            edges.append((int(parts[0]), int(parts[1]), SUM))
        else:
            raise ValueError(f"bad edge line {raw!r}")
    if n is None:
        raise ValueError("missing header line")
    return make_graph(n, edges)


def to_json_obj(g: SignedMultigraph) -> dict:
    return {"n": g.n, "edges": [[u, v, tag] for u, v, tag in g.edges]}


def from_json_obj(obj: dict) -> SignedMultigraph:
    return make_graph(int(obj["n"]), [(e[0], e[1], e[2]) for e in obj["edges"]])


def to_dot(g: SignedMultigraph) -> str:
    """Undirected DOT for visual inspection; parallel edges are repeated."""
    lines = ["graph G {"]
    for v in range(1, g.n + 1):
        lines.append(f"  {v};")
    for u, v, tag in g.edges:
        suffix = ' [label="sum"]' if tag == SUM else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def canonical_json(obj) -> str:
    """Deterministic JSON used for digests and byte-identical output."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def graph_digest(g: SignedMultigraph) -> str:
    return hashlib.sha256(canonical_json(to_json_obj(g)).encode()).hexdigest()


# ---------------------------------------------------------------------------
# generator specs ("cycle:5", "product:cycle:3:cycle:4", ...)
# ---------------------------------------------------------------------------

def parse_graph_spec(spec: str) -> SignedMultigraph:
    """Build a graph from a compact generator spec.

    Supported: cycle:N, path:K, complete:N, cyclepower:N:P, digon,
    petersen, and product:<spec>:<spec>[:<spec>...] over the same atoms.
    """
    parts = spec.strip().lower().split(":")
    head, args = parts[0], parts[1:]
    if head == "cycle":
        return build_cycle(int(args[0]))
    if head == "path":
        return build_path(int(args[0]))
    if head == "complete":
        return build_complete(int(args[0]))
    if head == "cyclepower":
        return build_cycle_power(int(args[0]), int(args[1]))
    if head == "digon":
        return build_digon()
    if head == "petersen":
        return build_petersen()
    if head == "product":
        # args is a flat list like ["cycle", "3", "cycle", "4"]; regroup by
        # reading one atom (name + its numeric arguments) at a time.
        factors = []
        i = 0
        while i < len(args):
            name = args[i]
            if name in ("digon", "petersen"):
                factors.append(parse_graph_spec(name))
                i += 1
            elif name == "cyclepower":
                factors.append(parse_graph_spec(f"cyclepower:{args[i+1]}:{args[i+2]}"))
                i += 3
            elif name in ("cycle", "path", "complete"):
                factors.append(parse_graph_spec(f"{name}:{args[i+1]}"))
                i += 2
            else:
                raise ValueError(f"unknown product factor {name!r} in {spec!r}")
        if len(factors) < 2:
            raise ValueError("product needs at least two factors")
        g = factors[0]
        for h in factors[1:]:
            g = cartesian_product(g, h)
        return g
    raise ValueError(f"unknown graph spec {spec!r}")


def load_graph(source: Union[str, os.PathLike]) -> SignedMultigraph:
    """Load a graph from a file path (edge list or JSON) or a generator spec."""
    path = str(source)
    if os.path.exists(path):
        with open(path) as fh:
            text = fh.read()
        stripped = text.lstrip()
        if stripped.startswith("{"):
            return from_json_obj(json.loads(text))
        return from_edge_list(text)
    return parse_graph_spec(path)


def save_graph(g: SignedMultigraph, path: Union[str, os.PathLike], fmt: str = "edgelist") -> None:
    if fmt == "edgelist":
        text = to_edge_list(g)
    elif fmt == "json":
        text = canonical_json(to_json_obj(g)) + "\n"
    elif fmt == "dot":
        text = to_dot(g)
    else:
        raise ValueError(f"unknown graph format {fmt!r}")
    with open(path, "w") as fh:
        fh.write(text)
