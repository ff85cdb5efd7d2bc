"""Exact detectors for the forbidden patterns: cliques, matchings, star forests.

A forbidden family is a list of patterns; a graph is family-free when it
contains none of them as a subgraph.  Three pattern kinds appear:

* ``Clique(size)``: a complete graph on ``size`` vertices.
* ``Matching(edges)``: ``edges`` pairwise disjoint edges.
* ``StarForest(copies, leaves)``: ``copies`` vertex-disjoint stars, each a
  center joined to ``leaves`` distinct leaves.

All detectors are exact.  Their verdicts are cross-checked against plain
exhaustive subset search in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Union

from .graphs import Graph, bits


@dataclass(frozen=True)
class Clique:
    size: int


@dataclass(frozen=True)
class Matching:
    edges: int


@dataclass(frozen=True)
class StarForest:
    copies: int
    leaves: int


Pattern = Union[Clique, Matching, StarForest]

_KIND_RANK = {Clique: 0, Matching: 1, StarForest: 2}


def _pattern_key(pat: Pattern) -> tuple[int, ...]:
    if isinstance(pat, Clique):
        return (0, pat.size)
    if isinstance(pat, Matching):
        return (1, pat.edges)
    return (2, pat.copies, pat.leaves)


def _pattern_spec(pat: Pattern) -> str:
    if isinstance(pat, Clique):
        return f"clique:{pat.size}"
    if isinstance(pat, Matching):
        return f"matching:{pat.edges}"
    return f"starforest:{pat.copies}x{pat.leaves}"


@dataclass(frozen=True)
class ForbiddenFamily:
    """Non-empty tuple of patterns, kept in canonical sorted order."""

    patterns: tuple[Pattern, ...]

    def __post_init__(self) -> None:
        if not self.patterns:
            raise ValueError("forbidden family must list at least one pattern")
        for pat in self.patterns:
            if isinstance(pat, Clique):
                if pat.size < 2:
                    raise ValueError(f"clique pattern needs size >= 2, got {pat.size}")
            elif isinstance(pat, Matching):
                if pat.edges < 1:
                    raise ValueError(f"matching pattern needs edges >= 1, got {pat.edges}")
            elif isinstance(pat, StarForest):
                if pat.copies < 1 or pat.leaves < 1:
                    raise ValueError(f"star forest needs copies >= 1 and leaves >= 1, got {pat}")
            else:
                raise ValueError(f"unknown pattern {pat!r}")
        ordered = tuple(sorted(self.patterns, key=_pattern_key))
        object.__setattr__(self, "patterns", ordered)

    def spec(self) -> str:
        """Canonical text form, e.g. ``clique:3,starforest:2x2``."""
        return ",".join(_pattern_spec(p) for p in self.patterns)

    @staticmethod
    def parse(text: str) -> "ForbiddenFamily":
        """Parse ``clique:R | matching:S | starforest:CxL`` joined by commas."""
        pats: list[Pattern] = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            kind, sep, arg = chunk.partition(":")
            if not sep:
                raise ValueError(f"bad pattern {chunk!r}, expected kind:args")
            try:
                if kind == "clique":
                    pats.append(Clique(int(arg)))
                elif kind == "matching":
                    pats.append(Matching(int(arg)))
                elif kind == "starforest":
                    c, sep2, l = arg.partition("x")
                    if not sep2:
                        raise ValueError
                    pats.append(StarForest(int(c), int(l)))
                else:
                    raise ValueError(f"unknown pattern kind {kind!r}")
            except ValueError as exc:
                if exc.args and "pattern" in str(exc.args[0]):
                    raise
                raise ValueError(f"bad pattern {chunk!r}") from None
        return ForbiddenFamily(tuple(pats))


def contains_clique(g: Graph, size: int) -> bool:
    """True when g has a complete subgraph on ``size`` vertices."""
    if size < 1:
        raise ValueError(f"clique size must be positive, got {size}")
    if size == 1:
        return g.n >= 1
    if size == 2:
        return any(g.rows)
    if size == 3:
        for u, v in g.edges():
            if g.rows[u] & g.rows[v]:
                return True
        return False
    return max_clique_size(g, stop_at=size) >= size


def max_clique_size(g: Graph, *, stop_at: int | None = None) -> int:
    """Largest clique order, by branch and bound with a greedy coloring bound.

    With ``stop_at`` the search may quit as soon as a clique that large is
    found; the return value is then only guaranteed to be >= stop_at when
    one exists.
    """
    n = g.n
    if n == 0:
        return 0
    rows = g.rows
    order = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if stop_at is not None and best >= stop_at:
            return
        if not cand:
            return
        # Greedy coloring: each class is an independent set, so a clique
        # meets each class at most once and #classes bounds what remains.
        class_masks: list[int] = []
        seq: list[tuple[int, int]] = []
        for v in order:
            if not cand >> v & 1:
                continue
            for ci, cm in enumerate(class_masks):
                if not rows[v] & cm:
                    class_masks[ci] = cm | (1 << v)
                    seq.append((v, ci))
                    break
            else:
                class_masks.append(1 << v)
                seq.append((v, len(class_masks) - 1))
        seq.sort(key=lambda item: item[1])
        avail = cand
        for v, color in reversed(seq):
            if size + color + 1 <= best:
                return
            avail &= ~(1 << v)
            expand(avail & rows[v], size + 1)
            if stop_at is not None and best >= stop_at:
                return

    expand((1 << n) - 1, 0)
    return best


def independence_number(g: Graph) -> int:
    """Largest independent set, as the clique number of the complement."""
    return max_clique_size(g.complement())


_MATCHING_DP_MAX_N = 13


def max_matching_size(g: Graph) -> int:
    """Maximum matching size, exact for every input.

    Small graphs go through a bitmask dynamic program, larger ones through
    blossom contraction; the two are cross-checked in the tests.
    """
    if g.n <= _MATCHING_DP_MAX_N:
        return _matching_dp(g)
    return _matching_blossom(g)


def _matching_dp(g: Graph) -> int:
    rows = g.rows
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            if rows[v] & mask:
                break
            mask ^= low
        else:
            return 0
        cached = memo.get(mask)
        if cached is not None:
            return cached
        rest = mask ^ (1 << v)
        best = rec(rest)
        for u in bits(rows[v] & rest):
            got = 1 + rec(rest ^ (1 << u))
            if got > best:
                best = got
        memo[mask] = best
        return best

    return rec((1 << g.n) - 1)


def _matching_blossom(g: Graph) -> int:
    """Maximum matching by augmenting paths with blossom contraction."""
    n = g.n
    adj = [list(bits(r)) for r in g.rows]
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = p[match[b]]

    def find_path(root: int) -> int:
        for i in range(n):
            p[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    cur = lca(v, to)
                    in_blossom = [False] * n

                    def mark(x: int, child: int) -> None:
                        while base[x] != cur:
                            in_blossom[base[x]] = True
                            in_blossom[base[match[x]]] = True
                            p[x] = child
                            child = match[x]
                            x = p[match[x]]

                    mark(v, to)
                    mark(to, v)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for v in range(n):
        if match[v] == -1:
            leaf = find_path(v)
            while leaf != -1:
                prev = p[leaf]
                nxt = match[prev]
                match[leaf] = prev
                match[prev] = leaf
                leaf = nxt
    return sum(1 for v in match if v != -1) // 2


def contains_star_forest(g: Graph, copies: int, leaves: int) -> bool:
    """True when g has ``copies`` vertex-disjoint stars with ``leaves`` leaves.

    A greedy packing attempt (high-degree centers first, lowest-index
    leaves) settles most positive cases immediately, and a small blocking
    set that kills all high degrees settles most negative ones.  The exact
    fallback walks center subsets and decides leaf availability by Hall's
    condition: the chosen centers can be served by disjoint leaf sets
    exactly when every sub-collection of centers jointly sees at least
    ``leaves`` per center outside the full center set.
    """
    if copies < 1 or leaves < 1:
        raise ValueError(f"star forest needs copies >= 1 and leaves >= 1, got {copies}x{leaves}")
    n = g.n
    if copies * (leaves + 1) > n:
        return False
    rows = g.rows
    candidates = [v for v in range(n) if rows[v].bit_count() >= leaves]
    if len(candidates) < copies:
        return False
    candidates.sort(key=lambda v: (-rows[v].bit_count(), v))
    if _greedy_star_packing(rows, candidates, copies, leaves):
        return True
    if _star_hitting_certificate(rows, n, copies, leaves):
        return False
    for centers in combinations(candidates, copies):
        center_mask = 0
        for c in centers:
            center_mask |= 1 << c
        pools = []
        for c in centers:
            pool = rows[c] & ~center_mask
            if pool.bit_count() < leaves:
                pools = None
                break
            pools.append(pool)
        if pools is not None and _pools_admit_disjoint_leaves(pools, leaves):
            return True
    return False


def _greedy_star_packing(rows: tuple[int, ...], candidates: list[int], copies: int, leaves: int) -> bool:
    used = 0
    placed = 0
    for c in candidates:
        if used >> c & 1:
            continue
        avail = rows[c] & ~used
        if avail.bit_count() < leaves:
            continue
        taken = 0
        for _ in range(leaves):
            low = avail & -avail
            taken |= low
            avail ^= low
        used |= taken | (1 << c)
        placed += 1
        if placed == copies:
            return True
    return False


def _star_hitting_certificate(rows: tuple[int, ...], n: int, copies: int, leaves: int) -> bool:
    """Cheap proof of absence: fewer than ``copies`` vertices block every star.

    If removing some set X of at most copies-1 vertices leaves maximum
    degree below ``leaves``, then every star with that many leaves uses a
    vertex of X, so vertex-disjoint copies number at most |X|.  Candidate
    X sets are drawn from the highest-degree vertices; failure to certify
    proves nothing and the caller falls through to the exhaustive search.
    """
    blockers = copies - 1
    if blockers == 0:
        return False
    order = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    pool = order[: blockers + 4]
    for group in combinations(pool, min(blockers, len(pool))):
        x_mask = 0
        for v in group:
            x_mask |= 1 << v
        if all(
            (rows[v] & ~x_mask).bit_count() < leaves
            for v in range(n)
            if not x_mask >> v & 1
        ):
            return True
    return False


def _pools_admit_disjoint_leaves(pools: list[int], leaves: int) -> bool:
    k = len(pools)
    union = [0] * (1 << k)
    for sub in range(1, 1 << k):
        low = sub & -sub
        u = union[sub ^ low] | pools[low.bit_length() - 1]
        union[sub] = u
        if u.bit_count() < leaves * sub.bit_count():
            return False
    return True


def is_family_free(g: Graph, family: ForbiddenFamily) -> bool:
    """True when g contains no pattern of the family."""
    for pat in family.patterns:
        if isinstance(pat, Clique):
            if contains_clique(g, pat.size):
                return False
        elif isinstance(pat, Matching):
            if max_matching_size(g) >= pat.edges:
                return False
        else:
            if contains_star_forest(g, pat.copies, pat.leaves):
                return False
    return True
