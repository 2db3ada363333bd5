"""The bijection Theta(N) x S(m-1) -> Theta(N*) and its inverse.

A cycle of ``N`` is lifted to the unique cycle of a connected level-m graph,
then un-split one gadget at a time (``m``, then ``m-1`` down to ``1``), each
non-final step consuming one bit.  The resulting cycle of the quadruple maps
to the doubled net by dropping black traversals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .euler import CycleError, EulerCycle, canonical, check_cycle
from .graph_core import TNet, double, fuse, gadget_edge_ids, quadruple
from .splitting import (
    ROWS,
    LevelGraph,
    SplitError,
    build,
    cut,
    descend,
    gadget_quad,
    label,
    same_cycle,
    sigma,
    spell,
)


class BijectionError(ValueError):
    pass


@dataclass(frozen=True)
class NuInput:
    base_cycle: EulerCycle
    bits: str

    def __post_init__(self):
        if set(self.bits) - {"0", "1"}:
            raise BijectionError(f"not a bit string: {self.bits!r}")


def _unsplit(w: LevelGraph, i: int, p: EulerCycle, bit: int | None, final: bool) -> EulerCycle:
    q = gadget_quad(w.graph, i)
    letter = q.letter_of()
    anchors = {k: letter[k] for k in p.traversals if k in letter}
    branch = 0 if set(anchors.values()) == {"u", "z"} else 1
    if set(anchors.values()) not in ({"u", "z"}, {"t", "v"}):
        raise BijectionError(f"cycle is not a cycle of a child of gadget {i}")
    pieces = cut(p.traversals, anchors)
    case, letters, same_ab, same_cd = label(pieces)
    word = spell(pieces, letters)
    for row in ROWS:
        if (
            (row.bit is None) == final
            and (row.case, row.branch, row.same_ab, row.same_cd) == (case, branch, same_ab, same_cd)
            and row.bit == bit
            and same_cycle(word, row.child)
        ):
            paths = {name: path for path, name in letters.items()}
            return canonical(build(row.parent, paths, q))
    raise BijectionError(f"no un-split rule for pattern {word} (bit {bit})")


def omega(w: LevelGraph, i: int, p: EulerCycle, bit: int, check: bool = False) -> EulerCycle:
    """Un-split gadget ``i``: a cycle of a child of ``w`` plus one bit -> cycle of ``w``."""
    if bit not in (0, 1):
        raise BijectionError(f"bit must be 0 or 1, got {bit!r}")
    if not 1 <= i <= w.m - 1 or w.level != i - 1:
        raise BijectionError(f"omega needs 1 <= i <= m-1 and a level-{i - 1} graph")
    out = _unsplit(w, i, p, bit, final=False)
    if check:
        check_cycle(w.graph, out.traversals)
    return out


def unsplit_final(p: EulerCycle, w: LevelGraph, check: bool = False) -> EulerCycle:
    """Lift the unique cycle of a connected level-m graph to its parent in W_{m-1}."""
    m = w.m
    if w.level != m - 1:
        raise BijectionError(f"parent must be at level {m - 1}, got {w.level}")
    try:
        out = _unsplit(w, m, p, None, final=True)
    except SplitError as exc:
        raise BijectionError(str(exc)) from None
    if check:
        check_cycle(w.graph, out.traversals)
    return out


def _connector(net: TNet, e: int, f: int) -> tuple[int, int]:
    """Gadget edge id joining N-edge e to N-edge f, and its branch bit."""
    a = net.edges[e].head
    e1, e2 = net.in_edges(a)
    f1, f2 = net.out_edges(a)
    t, u, v, z = gadget_edge_ids(net.m, a)
    table = {(e1, f1): (t, 1), (e2, f1): (u, 0), (e2, f2): (v, 1), (e1, f2): (z, 0)}
    return table[e, f]


def lift(p: EulerCycle, net: TNet) -> tuple[LevelGraph, EulerCycle]:
    """Map a cycle of N to the Delta graph it selects and that graph's cycle."""
    trav = p.traversals
    try:
        check_cycle(net, trav)
    except CycleError as exc:
        raise BijectionError(f"not an Eulerian cycle of N: {exc}") from None
    lineage = [None] * net.m
    out: list[int] = []
    for k, e in enumerate(trav):
        f = trav[(k + 1) % len(trav)]
        gid, branch = _connector(net, e, f)
        lineage[net.edges[e].head] = branch
        out += [e, gid]
    w = _levels(net, tuple(lineage))[-1]
    return w, canonical(out)


def project(q: EulerCycle, w: LevelGraph | None = None) -> EulerCycle:
    """Keep the traversals of original N-edges of a Delta cycle."""
    if w is not None:
        check_cycle(w.graph, q.traversals)
    n_original = len(q) // 2
    return canonical([x for x in q.traversals if x < n_original])


@lru_cache(maxsize=4096)
def _levels(net: TNet, lineage: tuple[int, ...]) -> tuple[LevelGraph, ...]:
    """Ancestors along *lineage*: level 0 up to level len(lineage)."""
    if not lineage:
        return (LevelGraph(quadruple(net), 0, ()),)
    head = _levels(net, lineage[:-1])
    return head + (descend(head[-1], lineage[-1]),)


@lru_cache(maxsize=64)
def _star_maps(net: TNet) -> tuple[dict[int, int], dict[int, tuple[int, int]]]:
    nh = quadruple(net)
    _, to_star = fuse(nh)
    to_hat = {}
    for gid, sid in to_star.items():
        _, a, e, f = nh.edge(gid).provenance
        to_hat[sid] = (gid, f)
    return to_star, to_hat


def hat_to_star(q: EulerCycle, net: TNet) -> EulerCycle:
    to_star, _ = _star_maps(net)
    return canonical([to_star[x] for x in q.traversals if x in to_star])


def star_to_hat(c: EulerCycle, net: TNet) -> EulerCycle:
    _, to_hat = _star_maps(net)
    out: list[int] = []
    for x in c.traversals:
        out.extend(to_hat[x])
    return canonical(out)


def nu(net: TNet, inp: NuInput, check: bool = False) -> EulerCycle:
    """Cycle of N plus m-1 bits -> cycle of double(N).

    ``bits[i-1]`` is consumed when un-splitting gadget ``i``.
    """
    m = net.m
    if len(inp.bits) != m - 1:
        raise BijectionError(f"expected {m - 1} bits, got {len(inp.bits)}")
    delta, q = lift(inp.base_cycle, net)
    chain = _levels(net, delta.lineage)
    cur = unsplit_final(q, chain[m - 1], check=check)
    for i in range(m - 1, 0, -1):
        cur = omega(chain[i - 1], i, cur, int(inp.bits[i - 1]), check=check)
    return hat_to_star(cur, net)


def nu_inverse(net: TNet, c: EulerCycle) -> NuInput:
    """Recover ``(p, bits)`` with ``nu(net, NuInput(p, bits)) == c``."""
    try:
        check_cycle(double(net), c.traversals)
    except CycleError as exc:
        raise BijectionError(f"not an Eulerian cycle of double(N): {exc}") from None
    q = star_to_hat(c, net)
    w = LevelGraph(quadruple(net), 0, ())
    bits = []
    for i in range(1, net.m + 1):
        branch, q, bit = sigma(q, w, i)
        if i < net.m:
            bits.append(str(bit))
        w = descend(w, branch)
    return NuInput(project(q), "".join(bits))
