"""Canonical labelings via partition refinement and pruned backtracking.

The canonical form of a graph is the graph6 string of a relabeled copy,
chosen so that two graphs receive the same string exactly when they are
isomorphic.  The labeling is found the classical way:

1. Refine the ordered partition of the vertices until it is equitable
   (every vertex in a cell sees the same number of neighbors in every
   cell).  Refinement is deterministic, so it is isomorphism-equivariant.
2. While some cell has two or more vertices, individualize each candidate
   vertex of the first such cell in turn and recurse.  Every discrete
   partition reached encodes one adjacency bit string; the minimum over
   all of them is the canonical code.
3. When two leaves produce equal codes, the position-wise map between
   their labelings is an automorphism.  Recorded automorphisms that fix
   the current branch prefix pointwise let the search skip sibling
   branches that can only repeat known codes.

Exact and exponential in the worst case; the module refuses graphs above
CANONICAL_MAX_N vertices, which is all the exhaustive search scale needs.
"""

from __future__ import annotations

from .graph6 import graph6_encode
from .graphs import Graph, mask_of

CANONICAL_MAX_N = 16

_Cells = list[tuple[int, ...]]


def _refine(rows: tuple[int, ...], cells: _Cells) -> _Cells:
    """Equitable refinement of an ordered partition.

    Each cell is split by the tuple of neighbor counts into every current
    cell; sub-cells are ordered by their count signature.  Repeats until
    stable.  The input cell order is preserved for unsplit cells, which
    keeps the whole procedure deterministic.
    """
    while True:
        masks = [mask_of(c) for c in cells]
        out: _Cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(tuple(groups[sig]))
        cells = out
        if not changed:
            return cells


def _search(g: Graph) -> tuple[int, ...]:
    """Labeling (position -> original vertex) that minimizes the code."""
    n = g.n
    rows = g.rows
    best_code: int | None = None
    best_perm: tuple[int, ...] = tuple(range(n))
    autos: list[tuple[int, ...]] = []

    def encode(perm: tuple[int, ...]) -> int:
        code = 0
        for i in range(n):
            ri = rows[perm[i]]
            for j in range(i + 1, n):
                code = code << 1 | (ri >> perm[j] & 1)
        return code

    def skippable(v: int, branched: list[int], prefix: list[int]) -> bool:
        for sigma in autos:
            if any(sigma[p] != p for p in prefix):
                continue
            for w in branched:
                if sigma[w] == v:
                    return True
        return False

    def walk(cells: _Cells, prefix: list[int]) -> None:
        nonlocal best_code, best_perm
        cells = _refine(rows, cells)
        split_at = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if split_at is None:
            perm = tuple(c[0] for c in cells)
            code = encode(perm)
            if best_code is None or code < best_code:
                best_code = code
                best_perm = perm
            elif code == best_code:
                sigma = [0] * n
                inverse = [0] * n
                for a, b in zip(best_perm, perm):
                    sigma[a] = b
                    inverse[b] = a
                autos.append(tuple(sigma))
                autos.append(tuple(inverse))
            return
        cell = cells[split_at]
        branched: list[int] = []
        for v in cell:
            if skippable(v, branched, prefix):
                continue
            branched.append(v)
            rest = tuple(x for x in cell if x != v)
            child = cells[:split_at] + [(v,), rest] + cells[split_at + 1 :]
            prefix.append(v)
            walk(child, prefix)
            prefix.pop()

    if n:
        walk([tuple(range(n))], [])
    return best_perm


def canonical_permutation(g: Graph) -> tuple[int, ...]:
    """Relabeling map (new position -> old vertex) to canonical form."""
    if g.n > CANONICAL_MAX_N:
        raise ValueError(f"canonicalization caps at {CANONICAL_MAX_N} vertices, got {g.n}")
    return _search(g)


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_permutation(g))


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabeling; equal iff isomorphic."""
    return graph6_encode(canonical_graph(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if max(g.n, h.n) > CANONICAL_MAX_N:
        raise ValueError(f"isomorphism test caps at {CANONICAL_MAX_N} vertices")
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)
