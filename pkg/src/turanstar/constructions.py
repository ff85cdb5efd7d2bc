"""Builders for the extremal graphs of the clique + star-forest problem.

The interesting constructions hang off one engine, `_blocked_engine`, which
wires a balanced bipartition into complete bipartite blocks and then patches
the remainder vertices up to full degree by deterministic edge swaps:

* Split the first side (floor(n/2) vertices) into blocks of size d plus a
  remainder of r vertices a_1..a_r, and the second side likewise into
  blocks, b_1..b_r, and one spare vertex when n is odd.
* Join block i of the first side completely to block i of the second side,
  and every a_i to every b_j.  Every block vertex now has degree d and the
  remainder vertices have degree r.
* To raise a pair (a_i, b_i) to degree d, repeatedly pick the first present
  block edge xy (scanning blocks in ascending index, then x, then y) whose
  replacement edges x-b_i and y-a_i are both absent, delete xy, and add the
  two replacements.  The graph stays bipartite, so triangle-free.
* When n is odd and a regular graph is wanted, the spare vertex first takes
  over floor(d/2) block edges, one per block: delete xy inside block i and
  add x-spare and y-spare.  Distinct blocks keep the spare's neighborhood
  independent, so the graph stays triangle-free even though the spare sits
  on both sides of the bipartition.

Every edge mutation asserts simplicity and checks that no common neighbor
exists before an addition, so a violated bound fails loudly instead of
emitting a wrong graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, VertexSet, bits, disjoint_union, empty_graph, join, mask_of


@dataclass(frozen=True)
class PartitionCertificate:
    """Witness that a graph admits a balanced near-bipartition.

    ``side_a`` holds floor(n/2) vertices and ``side_b`` the rest; when n is
    odd, ``exceptional`` names one vertex of side_b whose removal leaves the
    graph bipartite with parts (side_a, side_b minus exceptional).
    """

    side_a: VertexSet
    side_b: VertexSet
    exceptional: int | None

    def holds_for(self, g: Graph) -> bool:
        full = (1 << g.n) - 1
        if self.side_a & self.side_b or (self.side_a | self.side_b) != full:
            return False
        if self.side_a.bit_count() != g.n // 2:
            return False
        if (g.n % 2 == 1) != (self.exceptional is not None):
            return False
        keep_b = self.side_b
        if self.exceptional is not None:
            if not self.side_b >> self.exceptional & 1:
                return False
            keep_b &= ~(1 << self.exceptional)
        for v in bits(self.side_a):
            if g.rows[v] & self.side_a:
                return False
        for v in bits(keep_b):
            if g.rows[v] & keep_b:
                return False
        return True


def turan_graph(n: int, k: int) -> Graph:
    """Complete k-partite graph on n vertices with near-equal parts.

    Vertex v belongs to part v mod k, so remainder vertices land in the
    lowest-indexed parts and part 0 is never the smaller one.
    """
    if k < 0 or (k == 0 and n > 0):
        raise ValueError(f"turan_graph needs k >= 1 when n > 0, got n={n}, k={k}")
    if n == 0:
        return empty_graph(0)
    part_masks = [0] * k
    for v in range(n):
        part_masks[v % k] |= 1 << v
    full = (1 << n) - 1
    rows = tuple(full & ~part_masks[v % k] for v in range(n))
    return Graph(n, rows)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with the a-side on vertices 0..a-1."""
    if a < 0 or b < 0:
        raise ValueError(f"part sizes must be non-negative, got {a}, {b}")
    n = a + b
    a_mask = (1 << a) - 1
    b_mask = ((1 << b) - 1) << a
    rows = tuple(b_mask if v < a else a_mask for v in range(n))
    return Graph(n, rows)


class SwapSupplyError(ValueError):
    """The block engine ran out of eligible edges to reroute.

    Cannot happen at or above the guaranteed thresholds; callers inside
    the guaranteed range convert it to an assertion failure.
    """


def _pick_swap_edge(
    rows: list[int],
    block_indices: range,
    degree: int,
    half: int,
    x_partner: int,
    y_partner: int,
) -> tuple[int, int]:
    """First present block edge whose two replacement edges are absent.

    Scans blocks in ascending index, x then y ascending within the block.
    """
    for i in block_indices:
        for x in range(i * degree, (i + 1) * degree):
            if rows[x] >> x_partner & 1:
                continue
            row_x = rows[x]
            for y in range(half + i * degree, half + (i + 1) * degree):
                if not row_x >> y & 1:
                    continue
                if rows[y] >> y_partner & 1:
                    continue
                return x, y
    raise SwapSupplyError("no eligible swap edge at these parameters")


def _blocked_engine(total: int, degree: int, reroute_spare: bool) -> list[int]:
    """Adjacency rows for the block construction described in the module doc.

    With ``reroute_spare`` (odd ``total`` only) the spare vertex absorbs
    floor(degree/2) block edges and reaches degree 2*floor(degree/2);
    otherwise it stays as built, including possibly isolated.
    """
    half = total // 2
    rows = [0] * total

    def put(u: int, v: int) -> None:
        assert not rows[u] >> v & 1, f"edge {u}-{v} already present"
        assert rows[u] & rows[v] == 0, f"adding {u}-{v} would close a triangle"
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    def cut(u: int, v: int) -> None:
        assert rows[u] >> v & 1, f"edge {u}-{v} not present"
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)

    if degree == 0:
        return rows
    if degree > total - half:
        raise SwapSupplyError("degree exceeds the larger side of the split")
    q, rem = divmod(half, degree)
    if q == 0:
        # Degree exceeds the first side; only reachable for odd totals with
        # degree == ceil(total/2), where complete bipartite wiring realizes
        # the degree on the first side only.  That cannot satisfy the
        # almost-regular contract once the spare needs rerouting.
        if reroute_spare and half > 0:
            raise SwapSupplyError("degree too close to half the vertex count")
        for x in range(half):
            for j in range(degree):
                put(x, half + j)
        return rows
    for i in range(q):
        for x in range(i * degree, (i + 1) * degree):
            for y in range(half + i * degree, half + (i + 1) * degree):
                put(x, y)
    a_side = [q * degree + i for i in range(rem)]
    b_side = [half + q * degree + i for i in range(rem)]
    for x in a_side:
        for y in b_side:
            put(x, y)
    if reroute_spare:
        assert total % 2 == 1, "spare rerouting needs an odd vertex count"
        spare = total - 1
        swaps = degree // 2
        if swaps > q:
            raise SwapSupplyError("not enough blocks to feed the spare vertex")
        for i in range(swaps):
            x, y = _pick_swap_edge(rows, range(i, i + 1), degree, half, spare, spare)
            cut(x, y)
            put(x, spare)
            put(y, spare)
    for i in range(rem):
        for _ in range(degree - rem):
            x, y = _pick_swap_edge(rows, range(q), degree, half, b_side[i], a_side[i])
            cut(x, y)
            put(x, b_side[i])
            put(y, a_side[i])
    return rows


def _attempt_regular(n: int, degree: int) -> tuple[Graph, PartitionCertificate]:
    """Run the block engine without the guaranteed-range check.

    Raises SwapSupplyError when the engine cannot place the required
    swaps at this size; succeeds for many n below degree**2 + 2.
    """
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    rows = _blocked_engine(n, degree, reroute_spare=(n % 2 == 1))
    g = Graph(n, tuple(rows))
    half = n // 2
    cert = PartitionCertificate(
        side_a=(1 << half) - 1,
        side_b=((1 << (n - half)) - 1) << half,
        exceptional=n - 1 if n % 2 else None,
    )
    expected_deficient = 1 if (degree * n) % 2 else 0
    degs = sorted(g.degree(v) for v in range(n))
    assert degs[expected_deficient:] == [degree] * (n - expected_deficient)
    if expected_deficient:
        assert degs[0] == degree - 1
    assert cert.holds_for(g)
    return g, cert


def regular_triangle_free(n: int, degree: int) -> tuple[Graph, PartitionCertificate]:
    """Triangle-free graph with all degrees ``degree``, or all but one.

    Exactly one vertex of degree ``degree - 1`` appears when degree * n is
    odd; that vertex is the certificate's exceptional vertex.  Requires
    n >= degree**2 + 2; in that range the block engine is guaranteed to
    find every swap it needs.
    """
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    if n < degree * degree + 2:
        raise ValueError(f"need n >= degree^2 + 2, got n={n}, degree={degree}")
    try:
        return _attempt_regular(n, degree)
    except SwapSupplyError as exc:  # pragma: no cover - in-range failure is a bug
        raise AssertionError(f"swap supply failed inside guaranteed range: {exc}")


def capped_bipartite(m: int, l: int) -> tuple[Graph, VertexSet, VertexSet]:
    """Bipartite graph whose smaller side is (l-1)-regular.

    Returns (graph, s_mask, t_mask) where the side S has ceil(m/2) vertices
    of degree at most l-1 and the side T has floor(m/2) vertices of degree
    exactly l-1.  Requires ceil(m/2) >= l - 1.  Edge count is
    (l-1) * floor(m/2).
    """
    if m < 1:
        raise ValueError(f"need at least one vertex, got m={m}")
    if l < 1:
        raise ValueError(f"leaf bound must be positive, got l={l}")
    degree = l - 1
    if (m + 1) // 2 < degree:
        raise ValueError(f"need ceil(m/2) >= l-1, got m={m}, l={l}")
    rows = _blocked_engine(m, degree, reroute_spare=False)
    g = Graph(m, tuple(rows))
    half = m // 2
    first = (1 << half) - 1
    second = ((1 << (m - half)) - 1) << half
    if m % 2 == 0:
        s_mask, t_mask = first, second
    else:
        s_mask, t_mask = second, first
    assert all(g.degree(v) == degree for v in bits(t_mask))
    assert all(g.degree(v) <= degree for v in bits(s_mask))
    assert g.edge_count == degree * (m // 2)
    return g, s_mask, t_mask


def _with_cross_edges(g: Graph, pairs: list[tuple[VertexSet, VertexSet]]) -> Graph:
    rows = list(g.rows)
    for a_mask, b_mask in pairs:
        assert a_mask & b_mask == 0
        for v in bits(a_mask):
            rows[v] |= b_mask
        for w in bits(b_mask):
            rows[w] |= a_mask
    return Graph(g.n, tuple(rows))


def _balanced_pair_parts(s: int) -> tuple[VertexSet, VertexSet]:
    """Part masks of the two-part Turan graph: evens first, odds second."""
    big = mask_of(range(0, s, 2))
    small = mask_of(range(1, s, 2))
    return big, small


def joined_regular_extremal(n: int, s: int, l: int) -> Graph:
    """Extremal candidate: balanced complete bipartite core over a regular rest.

    The two-part Turan graph on s vertices sits on labels 0..s-1; the rest
    carries the triangle-free (l-1)-regular graph.  The larger Turan part
    joins completely to the smaller side of the rest's bipartition, the
    other part to the larger side, minus the exceptional vertex when the
    rest has odd order.  The result is triangle-free with
    ceil(s/2)*floor(s/2) + s*floor((n-s)/2) + floor((l-1)(n-s)/2) edges.

    Guaranteed to build when n - s >= (l-1)**2 + 2; smaller sizes are
    attempted and raise SwapSupplyError if the engine cannot route the
    degree-fixing swaps there.
    """
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    if l < 1:
        raise ValueError(f"l must be positive, got {l}")
    m = n - s
    if m < 0:
        raise ValueError(f"need n >= s, got n={n}, s={s}")
    core, cert = _attempt_regular(m, l - 1)
    g = disjoint_union(turan_graph(s, 2), core)
    big, small = _balanced_pair_parts(s)
    side_a = cert.side_a << s
    side_b = cert.side_b << s
    if cert.exceptional is not None:
        side_b &= ~(1 << (cert.exceptional + s))
    return _with_cross_edges(g, [(big, side_a), (small, side_b)])


def joined_capped_extremal(n: int, s: int, l: int) -> Graph:
    """Extremal candidate: balanced complete bipartite core over a capped rest.

    Like :func:`joined_regular_extremal` but the rest carries the capped
    bipartite graph; the larger Turan part joins the larger side S, the
    other part the (l-1)-regular side T.  Fully bipartite plus the core
    edge set, hence triangle-free.
    """
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    m = n - s
    core, s_mask, t_mask = capped_bipartite(m, l)
    g = disjoint_union(turan_graph(s, 2), core)
    big, small = _balanced_pair_parts(s)
    return _with_cross_edges(g, [(big, s_mask << s), (small, t_mask << s)])


def clique_matching_extremal(n: int, k: int, s: int) -> Graph:
    """Extremal candidate for forbidding K_{k+1} and a matching of s+1 edges.

    The (k-1)-part Turan graph on s vertices joined to n-s isolated
    vertices; every edge meets the s-set, so no s+1 disjoint edges fit.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if s < 0 or n < s:
        raise ValueError(f"need 0 <= s <= n, got n={n}, s={s}")
    return join(turan_graph(s, k - 1), empty_graph(n - s))


def clique_star_forest_extremal(n: int, k: int, s: int, l: int) -> Graph:
    """Extremal candidate for forbidding K_{k+1} and s+1 disjoint l-leaf stars.

    The (k-2)-part Turan graph on s vertices joined to the triangle-free
    (l-1)-regular graph on the remaining n-s vertices.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if l < 2:
        raise ValueError(f"need l >= 2, got {l}")
    if s < 0:
        raise ValueError(f"s must be non-negative, got {s}")
    m = n - s
    if m < (l - 1) ** 2 + 2:
        raise ValueError(f"need n - s >= (l-1)^2 + 2, got n={n}, s={s}, l={l}")
    core, _ = regular_triangle_free(m, l - 1)
    return join(turan_graph(s, k - 2), core)
