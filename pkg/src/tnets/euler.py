"""Eulerian cycles: canonical form, exhaustive enumeration, BEST counting."""

from __future__ import annotations

import math
import sys
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph_core import TNet, WGraph, is_connected


class CycleError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class EulerCycle:
    """Cyclic edge-id sequence stored in its lexicographically least rotation."""

    traversals: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.traversals)

    def __iter__(self):
        return iter(self.traversals)

    def __str__(self) -> str:
        return " ".join(map(str, self.traversals))


def least_rotation(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    if not seq:
        return seq
    low = min(seq)
    return min(seq[k:] + seq[:k] for k, x in enumerate(seq) if x == low)


def check_cycle(g: TNet | WGraph, traversals: Sequence[int]) -> None:
    """Raise CycleError unless *traversals* is an Eulerian cycle of *g*."""
    ends = g.endpoints()
    want = g.multiplicities()
    for eid in traversals:
        if eid not in ends:
            raise CycleError(f"edge {eid} is not in the graph")
    got = Counter(traversals)
    for eid, k in want.items():
        if got[eid] != k:
            raise CycleError(f"edge {eid} traversed {got[eid]} times, expected {k}")
    n = len(traversals)
    for k in range(n):
        a, b = traversals[k], traversals[(k + 1) % n]
        if ends[a][1] != ends[b][0]:
            raise CycleError(f"edges {a} and {b} are not linked")


def canonical(traversals: Sequence[int], graph: TNet | WGraph | None = None) -> EulerCycle:
    if graph is not None:
        check_cycle(graph, traversals)
    return EulerCycle(least_rotation(traversals))


def enumerate_cycles(g: TNet | WGraph, reverse: bool = False) -> frozenset[EulerCycle]:
    """All Eulerian cycles of *g* up to rotation.

    Backtracks over remaining multiplicities from the smallest edge id.  Two
    uses of a black edge are indistinguishable.  *reverse* flips the branch
    order and exists for testing order independence.
    """
    ends = g.endpoints()
    remaining = g.multiplicities()
    if not remaining:
        return frozenset()
    total = sum(remaining.values())
    outgoing: dict[int, list[int]] = {}
    for eid in sorted(ends, reverse=reverse):
        outgoing.setdefault(ends[eid][0], []).append(eid)

    # cheap rejections: unbalanced or disconnected graphs have no cycle
    bal: Counter = Counter()
    for eid, k in remaining.items():
        bal[ends[eid][0]] += k
        bal[ends[eid][1]] -= k
    if any(bal.values()):
        return frozenset()
    if not is_connected(g):
        return frozenset()

    start = min(remaining)
    origin = ends[start][0]
    found: set[EulerCycle] = set()
    walk = [start]
    remaining[start] -= 1

    limit = sys.getrecursionlimit()
    if total + 100 > limit:
        sys.setrecursionlimit(total + 100)

    def extend(node: int) -> None:
        if len(walk) == total:
            if node == origin:
                found.add(EulerCycle(least_rotation(walk)))
            return
        for eid in outgoing.get(node, ()):
            if remaining[eid]:
                remaining[eid] -= 1
                walk.append(eid)
                extend(ends[eid][1])
                walk.pop()
                remaining[eid] += 1

    extend(ends[start][1])
    return frozenset(found)


def bareiss_det(matrix: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def out_laplacian(net: TNet) -> list[list[int]]:
    lap = [[0] * net.m for _ in range(net.m)]
    for e in net.edges:
        lap[e.tail][e.tail] += 1
        lap[e.tail][e.head] -= 1
    return lap


def arborescence_count(net: TNet, root: int) -> int:
    """Spanning arborescences oriented toward *root* (matrix-tree theorem)."""
    lap = out_laplacian(net)
    keep = [v for v in range(net.m) if v != root]
    return bareiss_det([[lap[i][j] for j in keep] for i in keep])


def count_cycles_best(net: TNet) -> int:
    """Eulerian cycles up to rotation via the BEST theorem."""
    trees = arborescence_count(net, 0)
    outdeg = Counter(e.tail for e in net.edges)
    return trees * math.prod(math.factorial(outdeg[v] - 1) for v in range(net.m))


def read_cycles(text: str) -> list[tuple[int, ...]]:
    return [tuple(int(x) for x in line.split()) for line in text.splitlines() if line.strip()]


def write_cycles(cycles: Iterable[EulerCycle]) -> str:
    return "".join(f"{c}\n" for c in sorted(cycles))
