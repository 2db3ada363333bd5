"""The split cascade W_0..W_m and the cycle reduction step.

Gadget letters follow the quadruple layout: with in-nodes ``P`` (e1) and
``Q`` (e2) and out-nodes ``R`` (f1) and ``S`` (f2),

    t: P->R    u: Q->R    v: Q->S    z: P->S

so ``t``/``v`` and ``u``/``z`` are the non-incident pairs.  Splitting gadget
``i`` gives two children: branch 0 drops ``t, v`` and makes ``u, z`` black,
branch 1 drops ``u, z`` and makes ``t, v`` black.

A cycle through gadget ``i`` is cut at the gadget edges into four paths.
Every path runs from an out-node (``R`` or ``S``) to an in-node (``P`` or
``Q``); the multiset of path types decides the case and the letters
``A, B, C, D``.  Two paths of the same type are told apart by comparing edge
ids from their common start: the first divergence picks the smaller edge id
as ``A`` (or ``C``), which is plain lexicographic order on the paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .euler import EulerCycle, canonical
from .graph_core import BLACK, TNet, WGraph, gadget_edge_ids, is_connected, quadruple

MAX_LEVEL_ORDER = 20

LETTERS = "tuvz"
_HEAD = {"t": "R", "u": "R", "v": "S", "z": "S"}
_TAIL = {"t": "P", "z": "P", "u": "Q", "v": "Q"}
_SWAP = str.maketrans("tuvz", "utzv")


class SplitError(ValueError):
    pass


class GadgetQuad(NamedTuple):
    i: int
    t: int
    u: int
    v: int
    z: int

    def letter_of(self) -> dict[int, str]:
        return {self.t: "t", self.u: "u", self.v: "v", self.z: "z"}

    def id_of(self) -> dict[str, int]:
        return {"t": self.t, "u": self.u, "v": self.v, "z": self.z}


@dataclass(frozen=True)
class LevelGraph:
    graph: WGraph
    level: int
    lineage: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.graph.nodes) // 4


class Row(NamedTuple):
    case: str
    same_ab: bool
    same_cd: bool
    branch: int
    child: str
    bit: int | None
    parent: str


def _rows() -> tuple[Row, ...]:
    tv = [
        Row("I", False, False, 0, "AzDuCuBz", 0, "AtBzDuCv"),
        Row("I", False, False, 0, "AzDuCuBz", 1, "AtCuBzDv"),
        Row("I", False, False, 1, "AtBtCvDv", 0, "AtCvDuBz"),
        Row("I", False, False, 1, "AtBtCvDv", 1, "AzDuBtCv"),
        Row("tv", False, False, 1, "AtCvBtDv", 0, "AtCuDvBz"),
        Row("tv", False, False, 1, "AtCvBtDv", 1, "AzBtCuDv"),
        Row("tv", False, False, 1, "AtDvBtCv", 0, "AtDuCvBz"),
        Row("tv", False, False, 1, "AtDvBtCv", 1, "AzBtDuCv"),
        Row("tv", True, False, 1, "AtCvAtDv", 0, "AtCuDvAz"),
        Row("tv", True, False, 1, "AtCvAtDv", 1, "AtDuCvAz"),
        Row("tv", False, True, 1, "AtCvBtCv", 0, "AtCuCvBz"),
        Row("tv", False, True, 1, "AtCvBtCv", 1, "AzBtCuCv"),
        # last gadget: the child is monochrome and the step carries no bit
        Row("tv", True, True, 1, "AtCv", None, "AtCuCvAz"),
    ]
    uz = [
        Row("uz", r.same_ab, r.same_cd, 0, r.child.translate(_SWAP), r.bit, r.parent.translate(_SWAP))
        for r in tv
        if r.case == "tv"
    ]
    return tuple(tv + uz)


ROWS = _rows()


def gadget_quad(w: WGraph | LevelGraph, i: int) -> GadgetQuad:
    """Gadget edges of the i-th node (1-based) of the quadruple, t < u < v < z."""
    g = w.graph if isinstance(w, LevelGraph) else w
    m = len(g.nodes) // 4
    if not 1 <= i <= m:
        raise SplitError(f"split index {i} out of range 1..{m}")
    ids = gadget_edge_ids(m, i - 1)
    if not all(g.has_edge(k) and g.edge(k).color != BLACK for k in ids):
        raise SplitError(f"gadget {i} is already split")
    return GadgetQuad(i, *ids)


def _quad_ids(m: int, i: int) -> GadgetQuad:
    return GadgetQuad(i, *gadget_edge_ids(m, i - 1))


def split(w: LevelGraph) -> tuple[LevelGraph, LevelGraph]:
    if w.level >= w.m:
        raise SplitError(f"level {w.level} graph has no gadget left to split")
    i = w.level + 1
    q = gadget_quad(w.graph, i)
    return _child(w, q, 0), _child(w, q, 1)


def _child(w: LevelGraph, q: GadgetQuad, branch: int) -> LevelGraph:
    drop, keep = ({q.t, q.v}, {q.u, q.z}) if branch == 0 else ({q.u, q.z}, {q.t, q.v})
    edges = tuple(
        e._replace(color=BLACK) if e.id in keep else e
        for e in w.graph.edges
        if e.id not in drop
    )
    return LevelGraph(WGraph(w.graph.nodes, edges), w.level + 1, w.lineage + (branch,))


def descend(w: LevelGraph, branch: int) -> LevelGraph:
    return _child(w, gadget_quad(w.graph, w.level + 1), branch)


def level_graph(nh: WGraph, lineage) -> LevelGraph:
    w = LevelGraph(nh, 0, ())
    for b in lineage:
        w = descend(w, b)
    return w


def _check_order(net: TNet) -> None:
    if net.m > MAX_LEVEL_ORDER:
        raise SplitError(f"m={net.m} too large to materialize 2^m level graphs")


def build_levels(net: TNet) -> list[list[LevelGraph]]:
    """Populations W_0..W_m; W_i holds all 2^i graphs, disconnected ones included."""
    _check_order(net)
    levels = [[LevelGraph(quadruple(net), 0, ())]]
    for _ in range(net.m):
        levels.append([c for w in levels[-1] for c in split(w)])
    return levels


def build_delta(net: TNet) -> list[LevelGraph]:
    _check_order(net)
    return [w for w in build_levels(net)[-1] if is_connected(w.graph)]


# -- recognition ------------------------------------------------------------


def cut(traversals, anchors: dict[int, str]) -> list[tuple[tuple[int, ...], str]]:
    """Cut a cyclic walk at anchor edges into ``(path, following anchor)`` pairs."""
    seq = tuple(traversals)
    last = max(k for k, x in enumerate(seq) if x in anchors)
    seq = seq[last + 1:] + seq[: last + 1]
    pieces = []
    path: list[int] = []
    for x in seq:
        if x in anchors:
            pieces.append((tuple(path), anchors[x]))
            path = []
        else:
            path.append(x)
    return pieces


def label(pieces) -> tuple[str, dict[tuple[int, ...], str], bool, bool]:
    """Classify cut pieces and name the paths.

    Returns ``(case, letter_of_path, same_ab, same_cd)``.
    """
    n = len(pieces)
    groups: dict[str, list[tuple[int, ...]]] = {}
    for k, (path, anchor) in enumerate(pieces):
        kind = _HEAD[pieces[k - 1][1]] + _TAIL[anchor]
        groups.setdefault(kind, []).append(path)
    kinds = set(groups)
    if n == 4 and len(kinds) == 4:
        names = {"SP": "A", "RP": "B", "RQ": "C", "SQ": "D"}
        return "I", {groups[k][0]: names[k] for k in kinds}, False, False
    if kinds == {"SP", "RQ"}:
        case, first, second = "tv", "SP", "RQ"
    elif kinds == {"SQ", "RP"}:
        case, first, second = "uz", "SQ", "RP"
    else:
        raise SplitError(f"cycle does not pass the gadget in a recognizable way: {sorted(kinds)}")
    letters: dict[tuple[int, ...], str] = {}
    for kind, names in ((first, "AB"), (second, "CD")):
        ranked = sorted(groups[kind])
        letters[ranked[-1]] = names[1]
        letters[ranked[0]] = names[0]  # overrides when both paths coincide
    same_ab = len(set(groups[first])) == 1
    same_cd = len(set(groups[second])) == 1
    return case, letters, same_ab, same_cd


def spell(pieces, letters) -> str:
    return "".join(letters[path] + anchor for path, anchor in pieces)


def same_cycle(word: str, pattern: str) -> bool:
    """True when *word* is a rotation of *pattern* by whole (path, edge) pairs."""
    return len(word) == len(pattern) and any(
        word == pattern[k:] + pattern[:k] for k in range(0, len(pattern), 2)
    )


def build(pattern: str, paths: dict[str, tuple[int, ...]], quad: GadgetQuad) -> tuple[int, ...]:
    ids = quad.id_of()
    out: list[int] = []
    for k in range(0, len(pattern), 2):
        out.extend(paths[pattern[k]])
        out.append(ids[pattern[k + 1]])
    return tuple(out)


@dataclass(frozen=True)
class Segments:
    case_tag: str
    pattern: str
    paths: dict
    anchors: tuple[int, int]
    positions: tuple[int, ...]
    quad: GadgetQuad

    @property
    def path_a(self):
        return self.paths["A"]

    @property
    def path_b(self):
        return self.paths.get("B", self.paths["A"])

    @property
    def path_c(self):
        return self.paths["C"]

    @property
    def path_d(self):
        return self.paths.get("D", self.paths["C"])


def _case_tag(case: str, branch: int) -> str:
    if case == "I":
        return "I-nested" if branch == 0 else "I-sequential"
    return "II-alternating-" + case


def recognize(p: EulerCycle, w: LevelGraph, i: int) -> Segments:
    """Cut a cycle of a level-i graph at the two kept edges of gadget i."""
    if w.level < i:
        raise SplitError(f"gadget {i} is not split in a level-{w.level} graph")
    q = _quad_ids(w.m, i)
    kept = [k for k in q[1:] if w.graph.has_edge(k)]
    if len(kept) != 2:
        raise SplitError(f"gadget {i} anchors missing")
    letter = q.letter_of()
    anchors = {k: letter[k] for k in kept}
    trav = p.traversals
    if not any(x in anchors for x in trav):
        raise SplitError("cycle does not use the gadget anchors")
    pieces = cut(trav, anchors)
    case, letters, same_ab, same_cd = label(pieces)
    word = spell(pieces, letters)
    branch = 0 if set(anchors.values()) == {"u", "z"} else 1
    for row in ROWS:
        if (row.case, row.branch, row.same_ab, row.same_cd) == (case, branch, same_ab, same_cd) and same_cycle(word, row.child):
            paths = {name: path for path, name in letters.items()}
            return Segments(
                _case_tag(case, branch),
                row.child,
                paths,
                tuple(sorted(kept)),
                tuple(k for k, x in enumerate(trav) if x in anchors),
                q,
            )
    raise SplitError(f"cycle pattern {word} is not a cycle of this level graph")


def reassemble(seg: Segments) -> EulerCycle:
    return canonical(build(seg.pattern, seg.paths, seg.quad))


def sigma(g: EulerCycle, w: LevelGraph, i: int) -> tuple[int, EulerCycle, int]:
    """Reduce a cycle of ``w`` (gadget i unsplit) to ``(branch, child cycle, bit)``.

    Inverse of ``omega``; at the last gadget the bit is always 0.
    """
    q = gadget_quad(w.graph, i)
    anchors = q.letter_of()
    if sum(1 for x in g.traversals if x in anchors) != 4:
        raise SplitError("cycle does not traverse each gadget edge once")
    pieces = cut(g.traversals, anchors)
    case, letters, same_ab, same_cd = label(pieces)
    word = spell(pieces, letters)
    for row in ROWS:
        if (row.case, row.same_ab, row.same_cd) == (case, same_ab, same_cd) and same_cycle(word, row.parent):
            paths = {name: path for path, name in letters.items()}
            child = canonical(build(row.child, paths, q))
            return row.branch, child, row.bit or 0
    raise SplitError(f"cycle pattern {word} is not a cycle of this level graph")
