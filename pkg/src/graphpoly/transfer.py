"""Subset-indexed transfer matrices for products with even cycles.

For a (generalized) graph polynomial Q with all degrees even, let
a_i = deg(v_i)/2.  The transfer matrix is indexed by vertex subsets S, T
and holds

    Phi(S, T) = (-1)^|S| * [x^(a + 1_T - 1_S)] Q,

so every entry is an almost-central coefficient of Q.  Phi is block
diagonal by subset size (Q is homogeneous) and symmetric or
skew-symmetric depending on the parity of the number of DIFF factors.
The trace of Phi^k (k even) equals, up to a factor-ordering sign, the
central coefficient of the polynomial of Q's graph producted with the
k-cycle; nonzero entries therefore certify nonzero central coefficients
for every even cycle length at once.

Matrix powers are exact: blocks are multiplied with numpy int64 when a
rigorous bound rules out overflow, and with arbitrary-precision Python
integers otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .coefficients import (
    ExponentVector,
    SupportMap,
    almost_central_scan,
    central_exponent,
    mirror_sign,
)
from .errors import GraphPolyError, InvariantViolationError
from .graphs import SignedMultigraph, build_cycle, build_digon, cartesian_product

# Full 4^n storage is never built; above this vertex count even the
# per-size blocks are refused.
DEFAULT_VERTEX_CAP = 20

SparseBlock = list[dict[int, int]]  # row index -> {col index: value}


@dataclass
class PhiMatrix:
    """Block-diagonal transfer matrix of a generalized graph polynomial.

    blocks[s] is the sparse matrix restricted to subsets of size s, with
    subsets enumerated in itertools.combinations order (subsets[s] lists
    the bitmasks; index[s] maps a bitmask back to its row).  sigma is +1
    when the matrix is symmetric and -1 when skew-symmetric.
    """

    graph: SignedMultigraph
    n: int
    a: ExponentVector
    sigma: int
    edge_parity: int
    blocks: dict[int, SparseBlock]
    subsets: dict[int, list[int]]
    index: dict[int, dict[int, int]]
    scan: SupportMap

    def entry(self, s_mask: int, t_mask: int) -> int:
        s_size = bin(s_mask).count("1")
        if s_size != bin(t_mask).count("1"):
            return 0
        idx = self.index[s_size]
        return self.blocks[s_size][idx[s_mask]].get(idx[t_mask], 0)

    def nnz(self) -> int:
        return sum(len(row) for rows in self.blocks.values() for row in rows)

    def is_zero(self) -> bool:
        return self.nnz() == 0

    def block_nnz(self) -> dict[int, int]:
        return {s: sum(len(r) for r in rows) for s, rows in self.blocks.items()}


def build_phi(
    q: SignedMultigraph,
    *,
    budget: Optional[int] = None,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> PhiMatrix:
    """Construct the transfer matrix of q (all degrees must be even).

    One windowed support scan supplies every entry: the exponent
    a + 1_T - 1_S determines S \\ T, T \\ S and leaves S intersect T free,
    so each scanned coefficient fans out over the subsets of its
    half-degree positions.
    """
    if q.n > vertex_cap:
        raise GraphPolyError(
            f"transfer matrix on {q.n} vertices refused (cap {vertex_cap}); "
            f"the subset index would have 2^{q.n} entries"
        )
    a = central_exponent(q)  # also validates even degrees
    n = q.n
    scan = almost_central_scan(q, budget=budget)

    subsets: dict[int, list[int]] = {}
    index: dict[int, dict[int, int]] = {}
    blocks: dict[int, SparseBlock] = {}
    for s in range(n + 1):
        masks = []
        for comb in itertools.combinations(range(n), s):
            m = 0
            for i in comb:
                m |= 1 << i
            masks.append(m)
        subsets[s] = masks
        index[s] = {m: i for i, m in enumerate(masks)}
        blocks[s] = [dict() for _ in masks]

    for xi, c in scan.entries.items():
        s0 = 0
        t0 = 0
        free = []
        for i in range(n):
            d = xi[i] - a[i]
            if d == -1:
                s0 |= 1 << i
            elif d == 1:
                t0 |= 1 << i
            else:
                free.append(i)
        base = bin(s0).count("1")
        for r in range(len(free) + 1):
            for comb in itertools.combinations(free, r):
                x = 0
                for i in comb:
                    x |= 1 << i
                s_mask = s0 | x
                t_mask = t0 | x
                size = base + r
                val = -c if size % 2 else c
                blocks[size][index[size][s_mask]][index[size][t_mask]] = val

    return PhiMatrix(
        graph=q,
        n=n,
        a=a,
        sigma=mirror_sign(q),
        edge_parity=q.num_edges % 2,
        blocks=blocks,
        subsets=subsets,
        index=index,
        scan=scan,
    )


# ---------------------------------------------------------------------------
# exact block powers
# ---------------------------------------------------------------------------

_INT64_SAFE = 2**62


def _max_abs(rows: SparseBlock) -> int:
    best = 0
    for row in rows:
        for v in row.values():
            if v > best:
                best = v
            elif -v > best:
                best = -v
    return best


def _to_dense(rows: SparseBlock, dim: int) -> np.ndarray:
    out = np.zeros((dim, dim), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, v in row.items():
            out[i, j] = v
    return out


def _matmul_py(a: SparseBlock, b: SparseBlock) -> SparseBlock:
    out: SparseBlock = []
    for row in a:
        acc: dict[int, int] = {}
        for k, v in row.items():
            for j, w in b[k].items():
                acc[j] = acc.get(j, 0) + v * w
        out.append({j: x for j, x in acc.items() if x})
    return out


def _block_power(rows: SparseBlock, e: int) -> SparseBlock:
    """rows^e for e >= 1, exactly.

    Uses numpy int64 square-and-multiply while dim * maxA * maxB stays
    provably below 2^62, then falls back to sparse big-int multiplication.
    """
    dim = len(rows)
    if e == 1 or dim == 0:
        return rows
    max_in = _max_abs(rows)
    if max_in and dim * max_in * max_in < _INT64_SAFE:
        base = _to_dense(rows, dim)
        result: Optional[np.ndarray] = None
        exp = e
        ok = True
        while exp and ok:
            if exp & 1:
                if result is None:
                    result = base.copy()
                else:
                    if dim * int(np.abs(result).max()) * int(np.abs(base).max()) >= _INT64_SAFE:
                        ok = False
                        break
                    result = result @ base
            exp >>= 1
            if exp:
                if dim * int(np.abs(base).max()) ** 2 >= _INT64_SAFE:
                    ok = False
                    break
                base = base @ base
        if ok and result is not None:
            return [
                {j: int(result[i, j]) for j in np.nonzero(result[i])[0]}
                for i in range(dim)
            ]
    # big-int fallback: plain square-and-multiply on sparse rows
    result_py: Optional[SparseBlock] = None
    base_py = rows
    exp = e
    while exp:
        if exp & 1:
            result_py = base_py if result_py is None else _matmul_py(result_py, base_py)
        exp >>= 1
        if exp:
            base_py = _matmul_py(base_py, base_py)
    assert result_py is not None
    return result_py


def _trace_of_square(rows: SparseBlock) -> int:
    total = 0
    for i, row in enumerate(rows):
        for j, v in row.items():
            w = rows[j].get(i)
            if w:
                total += v * w
    return total


def trace_power(phi: PhiMatrix, k: int) -> int:
    """Exact trace of Phi^k for even k >= 2.

    Computed per size-block as tr((Phi^(k/2))^2); blocks never mix because
    Phi is block diagonal.
    """
    if k < 2 or k % 2:
        raise ValueError(f"trace exponent must be an even integer >= 2, got {k}")
    half = k // 2
    total = 0
    for s, rows in phi.blocks.items():
        if not any(rows):
            continue
        m = rows if half == 1 else _block_power(rows, half)
        total += _trace_of_square(m)
    return total


def product_central_via_trace(
    q: SignedMultigraph, k: int, *, budget: Optional[int] = None
) -> int:
    """tr(Phi^k); its absolute value is the central coefficient magnitude
    of the polynomial of (q's graph) producted with the k-cycle.

    The sign may differ from the canonical convention of the product graph
    (factor ordering across the cycle seam), so equality claims across
    engines are on absolute values.
    """
    return trace_power(build_phi(q, budget=budget), k)


def cycle_product_graph(q: SignedMultigraph, k: int) -> SignedMultigraph:
    """The product of q's graph with the k-cycle used by direct oracles.

    k = 2 is the digon (two parallel rungs between the two copies); k >= 3
    is the simple cycle.  Defined for DIFF-only q.
    """
    if k == 2:
        return cartesian_product(q, build_digon())
    return cartesian_product(q, build_cycle(k))


def even_cycle_certificate(
    q: SignedMultigraph, k: int, *, budget: Optional[int] = None
) -> Optional[dict]:
    """Certificate that AT(G x C_k) <= max_degree(G)/2 + 2 for even k.

    Needs all degrees of q even and a nonzero almost-central coefficient;
    the (skew-)symmetry of the transfer matrix then makes tr(Phi^k)
    nonzero for every even k, and the central coefficient of the product
    inherits it.  Returns None when the almost-central window is empty
    (that is not a disproof of choosability, just no certificate by this
    route).
    """
    from .certificates import encode_int, finalize_certificate
    from .graphio import graph_digest, to_json_obj

    if k < 2 or k % 2:
        raise ValueError(f"cycle length must be an even integer >= 2, got {k}")
    phi = build_phi(q, budget=budget)
    witness = phi.scan.witness()
    if witness is None:
        return None
    tr = trace_power(phi, k)
    if tr == 0:
        raise InvariantViolationError(
            "nonzero almost-central window but zero trace; engine bug"
        )
    cert = {
        "kind": "trace",
        "graph": to_json_obj(q),
        "graph_digest": graph_digest(q),
        "k": k,
        "witness_exponent": list(witness),
        "witness_value": encode_int(phi.scan.entries[witness]),
        "trace_value": encode_int(tr),
        "at_bound": q.max_degree() // 2 + 2,
    }
    return finalize_certificate(cert)
