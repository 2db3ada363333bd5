"""Exact verification suites and a seeded random T-net generator."""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .euler import count_cycles_best, enumerate_cycles
from .graph_core import TNet, double, is_connected, quadruple, validate_tnet
from .splitting import build_levels

# enumeration-based checks run only below these caps; BEST checks always run
ENUM_MAX_ORDER = 6
ENUM_MAX_CYCLES = 10**5


def random_tnet(m: int, seed: int) -> TNet:
    """Configuration model: node ``k // 2`` owns out-stub ``k``; in-stubs are shuffled.

    The in-stub list ``[0, 0, 1, 1, ..., m-1, m-1]`` is permuted with
    ``random.Random(seed).shuffle`` and edge ``k`` runs ``k // 2 -> stubs[k]``.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    stubs = [v for v in range(m) for _ in range(2)]
    random.Random(seed).shuffle(stubs)
    return validate_tnet(m, [(k // 2, stubs[k]) for k in range(2 * m)])


@dataclass
class Check:
    name: str
    expected: int
    actual: int
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        return f"CHECK {self.name} {self.expected} {self.actual} {'PASS' if self.passed else 'FAIL'}"


@dataclass
class VerifyReport:
    m: int
    edge_hash: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def run(self, name: str, expected: Callable[[], int], actual: Callable[[], int]) -> Check:
        t0 = time.perf_counter()
        check = Check(name, expected(), actual())
        check.elapsed = time.perf_counter() - t0
        self.checks.append(check)
        return check

    def extend(self, other: "VerifyReport") -> "VerifyReport":
        self.checks.extend(other.checks)
        return self

    def lines(self) -> str:
        return "".join(c.line() + "\n" for c in self.checks)

    def table(self) -> str:
        width = max([len(c.name) for c in self.checks] + [5])
        out = [f"net m={self.m} edges={self.edge_hash}"]
        out.append(f"{'check':<{width}}  {'expected':>12}  {'actual':>12}  result  seconds")
        for c in self.checks:
            verdict = "PASS" if c.passed else "FAIL"
            out.append(f"{c.name:<{width}}  {c.expected:>12}  {c.actual:>12}  {verdict:<6}  {c.elapsed:.3f}")
        return "\n".join(out) + "\n"


def edge_hash(net: TNet) -> str:
    text = ";".join(f"{t}>{h}" for t, h in sorted((e.tail, e.head) for e in net.edges))
    return hashlib.sha256(f"{net.m}|{text}".encode()).hexdigest()[:12]


def new_report(net: TNet) -> VerifyReport:
    return VerifyReport(net.m, edge_hash(net))


def enumerable(net: TNet) -> bool:
    return net.m <= ENUM_MAX_ORDER and count_cycles_best(net) <= ENUM_MAX_CYCLES


def _count(g) -> int:
    return len(enumerate_cycles(g))


def verify_doubling(net: TNet) -> VerifyReport:
    rep = new_report(net)
    star = double(net)
    factor = 2 ** (net.m - 1)
    rep.run("doubling_best", lambda: factor * count_cycles_best(net), lambda: count_cycles_best(star))
    if net.m <= ENUM_MAX_ORDER and count_cycles_best(star) <= ENUM_MAX_CYCLES:
        base = _count(net)
        rep.run("doubling_enum", lambda: factor * base, lambda: _count(star))
        rep.run("oracle_net", lambda: count_cycles_best(net), lambda: base)
        rep.run("oracle_double", lambda: count_cycles_best(star), lambda: _count(star))
    return rep


def verify_bound(net: TNet) -> VerifyReport:
    """|Theta(N)| <= 2^(m-1), recorded as expected=count, actual=min(count, bound)."""
    rep = new_report(net)
    bound = 2 ** (net.m - 1)
    best = count_cycles_best(net)
    rep.run("bound_best", lambda: best, lambda: min(best, bound))
    if enumerable(net):
        found = _count(net)
        rep.run("bound_enum", lambda: found, lambda: min(found, bound))
    return rep


def verify_cascade(net: TNet) -> VerifyReport:
    rep = new_report(net)
    m = net.m
    base = count_cycles_best(net)
    star = count_cycles_best(double(net))
    if not enumerable(net) or 2 ** (m - 1) * base > ENUM_MAX_CYCLES:
        rep.run("prop3_best", lambda: 2 ** (m - 1) * base, lambda: star)
        return rep
    levels = build_levels(net)
    counts = [[_count(w.graph) for w in level] for level in levels]
    for i in range(m - 1):
        for k in range(len(levels[i])):
            rep.run(
                f"prop1_w{i}_{k}",
                lambda i=i, k=k: 2 * counts[i + 1][2 * k] + 2 * counts[i + 1][2 * k + 1],
                lambda i=i, k=k: counts[i][k],
            )
    sums = [sum(c) for c in counts]
    # level sums halve: |W_{i-1}| = 2 |W_i| for i < m
    for i in range(1, m):
        rep.run(f"cor1_level{i}", lambda i=i: sums[i - 1], lambda i=i: 2 * sums[i])
    rep.run("cor1_last", lambda: sums[m - 1], lambda: sums[m])
    delta = [w for w in levels[m] if is_connected(w.graph)]
    rep.run("prop4_delta", lambda: base, lambda: len(delta))
    rep.run("delta_unique", lambda: len(delta), lambda: sum(_count(w.graph) for w in delta))
    rep.run("prop3_hat", lambda: 2 ** (m - 1) * len(delta), lambda: _count(quadruple(net)))
    rep.run("prop3_star", lambda: 2 ** (m - 1) * len(delta), lambda: star)
    return rep


def verify_all(net: TNet) -> VerifyReport:
    rep = new_report(net)
    for suite in (verify_doubling, verify_bound, verify_cascade):
        rep.extend(suite(net))
    return rep


def debruijn_formula(n: int) -> int:
    return 2 ** (2 ** (n - 1) - n)
