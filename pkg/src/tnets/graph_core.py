"""T-nets, de Bruijn graphs, doubling, and the blue/black quadruple.

A T-net is a directed multigraph where every node has indegree 2 and
outdegree 2.  Nodes are ``0..m-1`` and the node order used by every
downstream construction is ascending node id.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

BLUE = "blue"
BLACK = "black"
IN = "in"
OUT = "out"


class TNetError(ValueError):
    """Raised for malformed T-nets and malformed quadruple graphs."""


class Edge(NamedTuple):
    id: int
    tail: int
    head: int


@dataclass(frozen=True)
class TNet:
    m: int
    edges: tuple[Edge, ...]

    def in_edges(self, node: int) -> tuple[int, int]:
        return tuple(sorted(e.id for e in self.edges if e.head == node))  # type: ignore[return-value]

    def out_edges(self, node: int) -> tuple[int, int]:
        return tuple(sorted(e.id for e in self.edges if e.tail == node))  # type: ignore[return-value]

    # graph protocol shared with WGraph (used by the euler module)
    def endpoints(self) -> dict[int, tuple[int, int]]:
        return {e.id: (e.tail, e.head) for e in self.edges}

    def multiplicities(self) -> dict[int, int]:
        return {e.id: 1 for e in self.edges}

    def node_ids(self) -> range:
        return range(self.m)


class GadgetNode(NamedTuple):
    origin: int
    side: str
    anchor: int


class WEdge(NamedTuple):
    id: int
    tail: int
    head: int
    color: str
    # ("gadget", a, in_edge, out_edge) or ("original", e)
    provenance: tuple


@dataclass(frozen=True)
class WGraph:
    """Colored multigraph: blue edges are traversed once, black edges twice.

    When no blue edge is left, every edge is traversed exactly once.
    Edge ids are not contiguous once a split has removed edges.
    """

    nodes: tuple[GadgetNode, ...]
    edges: tuple[WEdge, ...]
    _by_id: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_id", {e.id: e for e in self.edges})

    def edge(self, edge_id: int) -> WEdge:
        return self._by_id[edge_id]

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._by_id

    @property
    def monochrome(self) -> bool:
        return all(e.color == BLACK for e in self.edges)

    def endpoints(self) -> dict[int, tuple[int, int]]:
        return {e.id: (e.tail, e.head) for e in self.edges}

    def multiplicities(self) -> dict[int, int]:
        if self.monochrome:
            return {e.id: 1 for e in self.edges}
        return {e.id: (2 if e.color == BLACK else 1) for e in self.edges}

    def node_ids(self) -> range:
        return range(len(self.nodes))

    def is_balanced(self) -> bool:
        bal = [0] * len(self.nodes)
        for eid, k in self.multiplicities().items():
            e = self._by_id[eid]
            bal[e.tail] += k
            bal[e.head] -= k
        return not any(bal)


def validate_tnet(m: int, edges: Iterable[Sequence[int]]) -> TNet:
    """Build a TNet from a node count and ``(tail, head)`` pairs.

    Edge ids follow the order of *edges*.
    """
    pairs = [tuple(e) for e in edges]
    if m < 1:
        raise TNetError(f"node count must be positive, got {m}")
    if len(pairs) != 2 * m:
        raise TNetError(f"expected {2 * m} edges for m={m}, got {len(pairs)}")
    outdeg = [0] * m
    indeg = [0] * m
    for k, pair in enumerate(pairs):
        if len(pair) != 2:
            raise TNetError(f"edge {k} is not a (tail, head) pair")
        tail, head = pair
        for node in (tail, head):
            if not isinstance(node, int) or not 0 <= node < m:
                raise TNetError(f"edge {k}: node id {node!r} out of range 0..{m - 1}")
        outdeg[tail] += 1
        indeg[head] += 1
    for node in range(m):
        if outdeg[node] != 2:
            raise TNetError(f"node {node} outdegree {outdeg[node]}")
        if indeg[node] != 2:
            raise TNetError(f"node {node} indegree {indeg[node]}")
    return TNet(m, tuple(Edge(k, t, h) for k, (t, h) in enumerate(pairs)))


def debruijn_graph(n: int) -> TNet:
    """H_n: nodes are (n-1)-bit words, edge ids are the n-bit edge words."""
    if n < 2:
        raise TNetError(f"de Bruijn order must be >= 2, got {n}")
    m = 1 << (n - 1)
    edges = [(w >> 1, w & (m - 1)) for w in range(2 * m)]
    return validate_tnet(m, edges)


def double(net: TNet) -> TNet:
    """Line graph of *net*; result edge ids follow lexicographic (e, f)."""
    pairs = [
        (e.id, f.id)
        for e in net.edges
        for f in net.edges
        if e.head == f.tail
    ]
    pairs.sort()
    return validate_tnet(2 * net.m, pairs)


def gadget_edge_ids(m: int, a: int) -> tuple[int, int, int, int]:
    """Ids of the four gadget edges of node *a* in order t, u, v, z."""
    base = 2 * m + 4 * a
    return (base, base + 1, base + 2, base + 3)


def quadruple(net: TNet) -> WGraph:
    """Replace every node by a 4-node/4-blue-edge gadget; originals turn black.

    Layout for node ``a`` with incoming ``e1 < e2`` and outgoing ``f1 < f2``:
    node ids ``4a + (0, 1, 2, 3)`` are ``(in e1), (in e2), (out f1), (out f2)``.
    Black edge ``e`` keeps id ``e``.  Gadget edges get ids ``2m + 4a + k`` with
    ``k`` running over t=(e1,f1), u=(e2,f1), v=(e2,f2), z=(e1,f2).
    """
    m = net.m
    nodes: list[GadgetNode] = []
    in_node: dict[int, int] = {}
    out_node: dict[int, int] = {}
    blue: list[WEdge] = []
    for a in range(m):
        e1, e2 = net.in_edges(a)
        f1, f2 = net.out_edges(a)
        base = 4 * a
        nodes += [
            GadgetNode(a, IN, e1),
            GadgetNode(a, IN, e2),
            GadgetNode(a, OUT, f1),
            GadgetNode(a, OUT, f2),
        ]
        in_node[e1], in_node[e2] = base, base + 1
        out_node[f1], out_node[f2] = base + 2, base + 3
        ids = gadget_edge_ids(m, a)
        for eid, (e, f) in zip(ids, ((e1, f1), (e2, f1), (e2, f2), (e1, f2))):
            blue.append(WEdge(eid, in_node[e], out_node[f], BLUE, ("gadget", a, e, f)))
    black = [
        WEdge(e.id, out_node[e.id], in_node[e.id], BLACK, ("original", e.id))
        for e in net.edges
    ]
    return WGraph(tuple(nodes), tuple(black + blue))


def fuse(nh: WGraph) -> tuple[TNet, dict[int, int]]:
    """Contract the black edges of a quadruple.

    Returns the fused T-net together with the map from blue edge id of *nh*
    to edge id of the fused net.  The fused net equals ``double(N)``: node
    ``e`` is the contracted black edge ``e``.
    """
    black = [e for e in nh.edges if e.color == BLACK]
    blue = [e for e in nh.edges if e.color == BLUE]
    if len(nh.nodes) % 4 or len(black) * 2 != len(blue) or 2 * len(black) != len(nh.nodes):
        raise TNetError("graph is not a quadruple (expected 4m nodes, 2m black, 4m blue edges)")
    merged: dict[int, int] = {}
    for e in black:
        if e.provenance[0] != "original" or e.tail in merged or e.head in merged:
            raise TNetError(f"black edge {e.id} does not join two distinct gadget nodes")
        merged[e.tail] = merged[e.head] = e.provenance[1]
    pairs = sorted((merged[e.tail], merged[e.head], e.id) for e in blue)
    fused = validate_tnet(len(black), [(t, h) for t, h, _ in pairs])
    return fused, {eid: k for k, (_, _, eid) in enumerate(pairs)}


def read_tnet(text: str) -> TNet:
    """Parse the T-net text format: ``m`` then one ``tail head`` line per edge."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            rows.append(line.split())
    if not rows:
        raise TNetError("empty T-net file")
    try:
        (m,) = (int(x) for x in rows[0])
        edges = [(int(t), int(h)) for t, h in rows[1:]]
    except ValueError as exc:
        raise TNetError(f"malformed T-net file: {exc}") from None
    return validate_tnet(m, edges)


def write_tnet(net: TNet) -> str:
    lines = [str(net.m)] + [f"{e.tail} {e.head}" for e in net.edges]
    return "\n".join(lines) + "\n"


def is_connected(g: TNet | WGraph) -> bool:
    """Weak connectivity over nodes that carry at least one edge."""
    ends = g.endpoints()
    touched = {n for pair in ends.values() for n in pair}
    if not touched:
        return True
    adj: dict[int, list[int]] = {n: [] for n in touched}
    for t, h in ends.values():
        adj[t].append(h)
        adj[h].append(t)
    start = next(iter(touched))
    seen = {start}
    stack = [start]
    while stack:
        for nb in adj[stack.pop()]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen == touched
